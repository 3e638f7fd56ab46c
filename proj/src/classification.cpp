#include "cotanhom/classification.hpp"

#include "cotanhom/cellular.hpp"
#include "cotanhom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace cotanhom {

void SampleConfig::check() const {
    if (count == 0) throw InputError("sample count must be positive");
    if (max_total_dim == 0) throw InputError("max total dimension must be positive");
    if (degree_lo > degree_hi) throw InputError("empty degree band");
    if (std::none_of(scalar_pool.begin(), scalar_pool.end(), [](const Rational& r) { return !r.is_zero(); }))
        throw InputError("scalar pool needs a nonzero entry");
}

std::string TheoremReport::to_text() const {
    std::ostringstream os;
    os << "theorem " << theorem << ": checked " << samples_checked << ", skipped " << samples_skipped
       << ", violations " << violations.size() << " -> " << (passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& [name, n] : tallies) os << "  " << name << ": " << n << '\n';
    for (const auto& v : violations) os << "  violation #" << v.index << ": " << v.detail << '\n';
    return os.str();
}

namespace {

/// Per-sample generator: the stream for (seed, index) does not depend on
/// any other index.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::size_t index) : engine_(mix(seed, index)) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    template <typename T>
    const T& pick(const std::vector<T>& pool) { return pool[below(pool.size())]; }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::mt19937_64 engine_;
};

constexpr int kMaxResample = 10000;

GradedVectorSpace sample_space(SampleRng& rng, const SampleConfig& cfg) {
    const std::size_t total = 1 + rng.below(cfg.max_total_dim);
    const auto band = static_cast<std::size_t>(cfg.degree_hi - cfg.degree_lo + 1);
    std::map<int, std::size_t> dims;
    for (std::size_t k = 0; k < total; ++k) ++dims[cfg.degree_lo + static_cast<int>(rng.below(band))];
    return GradedVectorSpace(dims);
}

RationalMatrix sample_matrix(SampleRng& rng, const std::vector<Rational>& pool, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.pick(pool);
    return m;
}

GradedMap sample_map(SampleRng& rng, const std::vector<Rational>& pool, const GradedVectorSpace& v, int degree) {
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, d] : v.dims())
        if (const auto rows = v.dim(i + degree); rows > 0) blocks.emplace(i, sample_matrix(rng, pool, rows, d));
    return {v, v, degree, std::move(blocks)};
}

RationalMatrix sample_invertible(SampleRng& rng, const std::vector<Rational>& pool, std::size_t n) {
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        auto m = sample_matrix(rng, pool, n, n);
        if (is_invertible(m)) return m;
    }
    throw InputError("scalar pool does not produce invertible matrices");
}

std::vector<Rational> nonzero(const std::vector<Rational>& pool) {
    std::vector<Rational> out;
    for (const auto& r : pool)
        if (!r.is_zero()) out.push_back(r);
    return out;
}

Representation sample_torus(SampleRng& rng, const SampleConfig& cfg, std::size_t index) {
    const auto q = QuiverPresentation::torus();
    const auto v = sample_space(rng, cfg);
    std::map<int, RationalMatrix> alpha;
    std::map<int, RationalMatrix> beta;

    if (index % 4 == 3) {
        const auto units = nonzero(cfg.scalar_pool);
        for (const auto& [i, d] : v.dims()) {
            RationalMatrix a(d, d);
            RationalMatrix b(d, d);
            for (std::size_t k = 0; k < d; ++k) {
                a(k, k) = rng.pick(units);
                b(k, k) = rng.pick(units);
            }
            alpha.emplace(i, std::move(a));
            beta.emplace(i, std::move(b));
        }
    } else {
        for (const auto& [i, d] : v.dims()) alpha.emplace(i, sample_invertible(rng, cfg.scalar_pool, d));
        for (int attempt = 0;; ++attempt) {
            if (attempt == kMaxResample) throw InputError("could not sample an invertible polynomial in m");
            const Rational c0 = rng.pick(cfg.scalar_pool);
            const Rational c1 = rng.pick(cfg.scalar_pool);
            const Rational c2 = rng.pick(cfg.scalar_pool);
            beta.clear();
            bool ok = true;
            for (const auto& [i, a] : alpha) {
                const auto a2 = multiply(a, a);
                auto b = add(linear_combination(c0, RationalMatrix::identity(a.rows()), c1, a), scale(c2, a2));
                ok = ok && is_invertible(b);
                beta.emplace(i, std::move(b));
            }
            if (ok) break;
        }
    }
    GradedMap m(v, v, 0, std::move(alpha));
    GradedMap n(v, v, 0, std::move(beta));
    GradedMap h = sample_map(rng, cfg.scalar_pool, v, -1);
    return {q, v, {{"m", std::move(m)}, {"n", std::move(n)}, {"h", std::move(h)}}};
}

std::string describe(const Representation& r) {
    std::ostringstream os;
    os << r.quiver.name() << " rep on " << r.space;
    return os.str();
}

std::string describe(const CohomologyResult& h) {
    std::ostringstream os;
    os << h;
    return os.str();
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) fn(i);
        });
}

}  // namespace

Representation sample_representation(const QuiverPresentation& quiver, const SampleConfig& cfg, std::size_t index) {
    cfg.check();
    SampleRng rng(cfg.seed, index);
    if (quiver == QuiverPresentation::sphere()) {
        const auto v = sample_space(rng, cfg);
        return {quiver, v, {{"z", sample_map(rng, cfg.scalar_pool, v, -1)}}};
    }
    if (quiver == QuiverPresentation::torus()) return sample_torus(rng, cfg, index);
    throw InputError("sampling supports only the sphere and torus quivers");
}

std::vector<Representation> sample_representations(const QuiverPresentation& quiver, const SampleConfig& cfg) {
    std::vector<Representation> out;
    out.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(sample_representation(quiver, cfg, i));
    return out;
}

namespace {

void enumerate_spaces(const EnumerationConfig& cfg, int degree, std::size_t remaining,
                      std::map<int, std::size_t>& dims, std::vector<GradedVectorSpace>& out) {
    if (degree > cfg.degree_hi) {
        out.emplace_back(dims);
        return;
    }
    for (std::size_t d = 0; d <= remaining; ++d) {
        dims[degree] = d;
        enumerate_spaces(cfg, degree + 1, remaining - d, dims, out);
    }
    dims.erase(degree);
}

struct Slot {
    std::string generator;
    int source_degree;
    std::size_t rows;
    std::size_t cols;
};

}  // namespace

std::vector<Representation> enumerate_representations(const QuiverPresentation& quiver,
                                                      const EnumerationConfig& cfg) {
    if (cfg.scalar_pool.empty()) throw InputError("empty scalar pool");
    std::vector<GradedVectorSpace> spaces;
    std::map<int, std::size_t> scratch;
    enumerate_spaces(cfg, cfg.degree_lo, cfg.max_total_dim, scratch, spaces);

    constexpr double kMaxAssignments = 2e7;
    std::vector<Representation> out;
    for (const auto& v : spaces) {
        std::vector<Slot> slots;
        std::size_t entries = 0;
        for (const auto& g : quiver.generators())
            for (const auto& [i, d] : v.dims())
                if (const auto rows = v.dim(i + g.degree); rows > 0) {
                    slots.push_back({g.name, i, rows, d});
                    entries += rows * d;
                }
        if (std::pow(static_cast<double>(cfg.scalar_pool.size()), static_cast<double>(entries)) > kMaxAssignments)
            throw InputError("exhaustive sweep too large; shrink the pool or the dimension bound");

        std::vector<std::size_t> digits(entries, 0);
        while (true) {
            std::map<std::string, std::map<int, RationalMatrix>> blocks;
            std::size_t at = 0;
            for (const auto& s : slots) {
                RationalMatrix m(s.rows, s.cols);
                for (std::size_t r = 0; r < s.rows; ++r)
                    for (std::size_t c = 0; c < s.cols; ++c) m(r, c) = cfg.scalar_pool[digits[at++]];
                blocks[s.generator].emplace(s.source_degree, std::move(m));
            }
            std::map<std::string, GradedMap> maps;
            for (const auto& g : quiver.generators())
                maps.emplace(g.name, GradedMap(v, v, g.degree, std::move(blocks[g.name])));
            Representation r(quiver, v, std::move(maps));
            if (validate_representation(r)) out.push_back(std::move(r));

            std::size_t k = 0;
            while (k < entries && ++digits[k] == cfg.scalar_pool.size()) digits[k++] = 0;
            if (k == entries) break;
        }
    }
    return out;
}

SampleOutcome check_concentrated_lemma(const Representation& r) {
    SampleOutcome out;
    const auto support = r.space.support();
    if (!support || support->first == support->second) {
        out.skipped = true;
        return out;
    }
    if (const auto bad = first_violation(r)) {
        out.violation = describe(r) + ": invalid sample (" + *bad + ")";
        return out;
    }
    const int k = support->second - support->first;
    const auto hf = floer_cohomology(r, r);
    if (hf.dim(-k) == 0 || hf.dim(k + 2) == 0) {
        out.violation = describe(r) + ": spread " + std::to_string(k) + " but HF = " + describe(hf);
        return out;
    }
    const int gap = hf.dims.rbegin()->first - hf.dims.begin()->first;
    if (gap < 2 * k + 2 || gap < 4)
        out.violation = describe(r) + ": cohomology support width " + std::to_string(gap) + " below " +
                        std::to_string(2 * k + 2);
    out.tallies.push_back("spread_" + std::to_string(k));
    return out;
}

SampleOutcome check_sphere_theorem(const Representation& r) {
    SampleOutcome out;
    if (const auto bad = first_violation(r)) {
        out.violation = describe(r) + ": invalid sample (" + *bad + ")";
        return out;
    }
    const auto hf = floer_cohomology(r, r);
    const bool surface_like = std::all_of(hf.dims.begin(), hf.dims.end(),
                                          [](const auto& kv) { return kv.first >= 0 && kv.first <= 2; });
    if (!surface_like) {
        if (r.space.is_concentrated())
            out.violation = describe(r) + ": concentrated space with HF outside [0,2]: " + describe(hf);
        else
            out.tallies.push_back("non_surface");
        return out;
    }
    out.tallies.push_back("surface_like");
    if (!r.space.is_concentrated()) {
        out.violation = describe(r) + ": HF supported in [0,2] on a non-concentrated space: " + describe(hf);
        return out;
    }
    const std::size_t m = r.space.total_dim();
    CohomologyResult expected;
    if (m > 0) expected.dims = {{0, m * m}, {2, m * m}};
    if (!(hf == expected)) {
        out.violation = describe(r) + ": expected HF = " + describe(expected) + ", got " + describe(hf);
        return out;
    }
    if (hf.dim(0) == 1) {
        out.tallies.push_back("sphere");
        const CohomologyResult sphere{{{0, 1}, {2, 1}}};
        if (!(hf == sphere)) out.violation = describe(r) + ": HF^0 = R but HF = " + describe(hf);
    }
    return out;
}

SampleOutcome check_torus_theorem(const Representation& r) {
    SampleOutcome out;
    if (const auto bad = first_violation(r)) {
        out.violation = describe(r) + ": invalid sample (" + *bad + ")";
        return out;
    }
    const auto chi = euler_of_hom(r, r);
    if (chi != 0) {
        out.violation = describe(r) + ": chi(hom) = " + std::to_string(chi);
        return out;
    }
    CellComplex surface;
    surface.cells.push_back({"p", 0});
    for (std::int64_t i = 0; i < 2 - chi; ++i) surface.cells.push_back({"e" + std::to_string(i), 1});
    surface.cells.push_back({"f", 2});
    try {
        const auto verdict = classify_surface(surface);
        if (verdict.genus != 1) out.violation = describe(r) + ": surface classified as genus " +
                                                std::to_string(verdict.genus);
    } catch (const ClassificationError& e) {
        out.violation = describe(r) + ": " + e.what();
    }
    return out;
}

TheoremReport run_check(const std::string& theorem, std::span<const Representation> reps,
                        SampleOutcome (*check)(const Representation&), unsigned threads) {
    std::vector<SampleOutcome> outcomes(reps.size());
    parallel_for(reps.size(), threads, [&](std::size_t i) { outcomes[i] = check(reps[i]); });

    TheoremReport report;
    report.theorem = theorem;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto& o = outcomes[i];
        if (o.skipped) {
            ++report.samples_skipped;
            continue;
        }
        ++report.samples_checked;
        for (const auto& t : o.tallies) ++report.tallies[t];
        if (o.violation) report.violations.push_back({i, std::move(*o.violation)});
    }
    return report;
}

TheoremReport check_concentrated_lemma(const SampleConfig& cfg, unsigned threads) {
    cfg.check();
    const auto q = QuiverPresentation::sphere();
    std::vector<Representation> reps;
    std::size_t spread = 0;
    for (std::size_t i = 0; spread < cfg.count && i < 50 * cfg.count; ++i) {
        auto r = sample_representation(q, cfg, i);
        spread += !r.space.is_concentrated();
        reps.push_back(std::move(r));
    }
    return run_check("concentrated", reps, &check_concentrated_lemma, threads);
}

TheoremReport check_sphere_theorem(const SampleConfig& cfg, unsigned threads) {
    const auto reps = sample_representations(QuiverPresentation::sphere(), cfg);
    return run_check("sphere", reps, &check_sphere_theorem, threads);
}

TheoremReport check_torus_theorem(const SampleConfig& cfg, unsigned threads) {
    const auto reps = sample_representations(QuiverPresentation::torus(), cfg);
    return run_check("torus", reps, &check_torus_theorem, threads);
}

}  // namespace cotanhom
