#pragma once

#include "cotanhom/graded.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>

namespace cotanhom {

/// True iff the degree +1 self-map squares to zero block by block.
bool is_cochain_differential(const GradedMap& differential);

/// Bounded cochain complex. The differential is a degree +1 self-map of
/// `space`; d o d = 0 is checked on construction.
class CochainComplex {
public:
    CochainComplex() = default;
    /// Throws ShapeError if the differential is not a degree +1 self-map of
    /// `space`, ValidationError if it does not square to zero.
    CochainComplex(GradedVectorSpace space, GradedMap differential);
    /// Complex with zero differential.
    explicit CochainComplex(GradedVectorSpace space);

    [[nodiscard]] const GradedVectorSpace& space() const { return space_; }
    [[nodiscard]] const GradedMap& differential() const { return differential_; }
    /// d^n : C^n -> C^{n+1}.
    [[nodiscard]] RationalMatrix d(int n) const { return differential_.block(n); }

    friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

private:
    GradedVectorSpace space_;
    GradedMap differential_;
};

/// Cohomology dimensions by degree. Only nonzero degrees are stored.
struct CohomologyResult {
    std::map<int, std::size_t> dims;

    [[nodiscard]] std::size_t dim(int degree) const {
        const auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    friend bool operator==(const CohomologyResult&, const CohomologyResult&) = default;
};

std::ostream& operator<<(std::ostream& os, const CohomologyResult& h);

/// Re-checks d o d = 0 on an existing complex.
bool validate(const CochainComplex& c);

/// dim H^n = dim C^n - rank d^n - rank d^{n-1}.
CohomologyResult cohomology(const CochainComplex& c);

/// Sum of (-1)^i dim C^i.
std::int64_t euler_from_dims(const CochainComplex& c);
std::int64_t euler_from_dims(const GradedVectorSpace& v);
/// Sum of (-1)^i dim H^i.
std::int64_t euler_from_cohomology(const CochainComplex& c);
std::int64_t euler_characteristic(const CohomologyResult& h);

/// C[s]: space shifted by s, every differential block multiplied by (-1)^s.
CochainComplex shift_complex(const CochainComplex& c, int s);
/// Degreewise direct sum with block-diagonal differential.
CochainComplex direct_sum_complex(const CochainComplex& a, const CochainComplex& b);

/// Regrades chain data (lower index i) as cochain data in degree -i. A chain
/// boundary d_i : C_i -> C_{i-1} becomes the block of the cochain
/// differential at source degree -i, unchanged.
CochainComplex from_chain_complex(const std::map<int, std::size_t>& chain_dims,
                                  const std::map<int, RationalMatrix>& boundaries);

/// Lower-index view of a cohomology computed on regraded chain data.
CohomologyResult to_lower_index(const CohomologyResult& h);

struct RandomComplexConfig {
    int degree_lo = -3;
    int degree_hi = 3;
    std::size_t max_dim = 3;
    int entry_lo = -2;
    int entry_hi = 2;
};

/// Seeded random complex. Dimensions are drawn per degree; d^lo is free and
/// each later d^{i+1} is a free matrix precomposed with a projection onto
/// the cokernel of d^i, so d o d = 0 by construction.
CochainComplex random_complex(std::uint64_t seed, const RandomComplexConfig& cfg = {});

}  // namespace cotanhom
