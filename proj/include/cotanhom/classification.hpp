#pragma once

#include "cotanhom/quiver.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cotanhom {

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::size_t max_total_dim = 3;
    int degree_lo = -3;
    int degree_hi = 3;
    std::vector<Rational> scalar_pool = {-2, -1, 0, 1, 2};

    /// Throws InputError on count 0, max_total_dim 0, an empty degree band,
    /// or a pool without a nonzero scalar.
    void check() const;
};

/// Parameters of an exhaustive sweep: every graded space of total dimension
/// at most `max_total_dim` inside the band, every map entry drawn from the pool.
struct EnumerationConfig {
    std::size_t max_total_dim = 2;
    int degree_lo = -2;
    int degree_hi = 2;
    std::vector<Rational> scalar_pool = {-1, 0, 1};
};

struct Violation {
    std::size_t index = 0;
    std::string detail;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct TheoremReport {
    std::string theorem;
    std::size_t samples_checked = 0;
    std::size_t samples_skipped = 0;
    std::vector<Violation> violations;
    /// Informational counters, e.g. how many samples looked like surfaces.
    std::map<std::string, std::size_t> tallies;

    [[nodiscard]] bool passed() const { return violations.empty(); }
    [[nodiscard]] std::string to_text() const;
    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Sample `index` of the stream determined by cfg.seed. Only the sphere and
/// torus quivers are supported (InputError otherwise). Sphere: loop blocks
/// drawn freely from the pool. Torus: m invertible, n a polynomial in m with
/// invertible value (every fourth sample a diagonal pair instead), h free.
Representation sample_representation(const QuiverPresentation& quiver, const SampleConfig& cfg, std::size_t index);
std::vector<Representation> sample_representations(const QuiverPresentation& quiver, const SampleConfig& cfg);

/// Every valid representation in the sweep, in a fixed order.
std::vector<Representation> enumerate_representations(const QuiverPresentation& quiver,
                                                      const EnumerationConfig& cfg);

/// Outcome of checking one representation.
struct SampleOutcome {
    bool skipped = false;
    std::optional<std::string> violation;
    std::vector<std::string> tallies;
};

/// A non-concentrated sphere representation with spread k has nonzero
/// Hom^{-k} and Hom^{k+2}; concentrated ones are skipped.
SampleOutcome check_concentrated_lemma(const Representation& r);
/// Floer cohomology supported in [0, 2] forces a concentrated space R^m with
/// HF = (m^2, 0, m^2); with HF^0 one-dimensional that is the sphere.
SampleOutcome check_sphere_theorem(const Representation& r);
/// The hom complex of r with itself has Euler characteristic 0, and a
/// surface with that Euler characteristic classifies as genus 1.
SampleOutcome check_torus_theorem(const Representation& r);

/// Runs a per-sample check over an explicit list. `threads` > 1 spreads the
/// work; the report is identical for any thread count.
TheoremReport run_check(const std::string& theorem, std::span<const Representation> reps,
                        SampleOutcome (*check)(const Representation&), unsigned threads = 1);

/// Sampled sweeps. The lemma sweep keeps drawing until cfg.count
/// non-concentrated samples are checked, giving up after 50 * count draws.
TheoremReport check_concentrated_lemma(const SampleConfig& cfg, unsigned threads = 1);
TheoremReport check_sphere_theorem(const SampleConfig& cfg, unsigned threads = 1);
TheoremReport check_torus_theorem(const SampleConfig& cfg, unsigned threads = 1);

}  // namespace cotanhom
