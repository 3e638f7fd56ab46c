#include "cotanhom/complex.hpp"

#include "cotanhom/errors.hpp"

#include <string>

namespace cotanhom {

namespace {

std::int64_t parity_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

}  // namespace

bool is_cochain_differential(const GradedMap& differential) {
    if (differential.degree() != 1 || !(differential.source() == differential.target())) return false;
    for (const auto& [i, m] : differential.blocks()) {
        const auto next = differential.blocks().find(i + 1);
        if (next == differential.blocks().end()) continue;
        if (!multiply(next->second, m).is_zero()) return false;
    }
    return true;
}

CochainComplex::CochainComplex(GradedVectorSpace space, GradedMap differential)
    : space_(std::move(space)), differential_(std::move(differential)) {
    if (differential_.degree() != 1)
        throw ShapeError("differential must have degree +1, got " + std::to_string(differential_.degree()));
    if (!(differential_.source() == space_) || !(differential_.target() == space_))
        throw ShapeError("differential must be a self-map of the complex's graded space");
    if (!is_cochain_differential(differential_)) throw ValidationError("differential does not square to zero");
}

CochainComplex::CochainComplex(GradedVectorSpace space)
    : space_(space), differential_(GradedMap::zero(space, space, 1)) {}

std::ostream& operator<<(std::ostream& os, const CohomologyResult& h) {
    os << '{';
    bool first = true;
    for (const auto& [deg, d] : h.dims) {
        os << (first ? "" : ", ") << deg << ": " << d;
        first = false;
    }
    return os << '}';
}

bool validate(const CochainComplex& c) { return is_cochain_differential(c.differential()); }

CohomologyResult cohomology(const CochainComplex& c) {
    if (!validate(c)) throw ValidationError("cohomology of an invalid complex");
    CohomologyResult out;
    for (const auto& [n, dim] : c.space().dims()) {
        const std::size_t outgoing = rank(c.d(n));
        const std::size_t incoming = rank(c.d(n - 1));
        const std::size_t h = dim - outgoing - incoming;
        if (h > 0) out.dims.emplace(n, h);
    }
    return out;
}

std::int64_t euler_from_dims(const GradedVectorSpace& v) {
    std::int64_t chi = 0;
    for (const auto& [deg, d] : v.dims()) chi += parity_sign(deg) * static_cast<std::int64_t>(d);
    return chi;
}

std::int64_t euler_from_dims(const CochainComplex& c) { return euler_from_dims(c.space()); }

std::int64_t euler_characteristic(const CohomologyResult& h) {
    std::int64_t chi = 0;
    for (const auto& [deg, d] : h.dims) chi += parity_sign(deg) * static_cast<std::int64_t>(d);
    return chi;
}

std::int64_t euler_from_cohomology(const CochainComplex& c) { return euler_characteristic(cohomology(c)); }

CochainComplex shift_complex(const CochainComplex& c, int s) {
    const Rational sign = parity_sign(s);
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, m] : c.differential().blocks()) blocks.emplace(i - s, scale(sign, m));
    auto space = shift_space(c.space(), s);
    return {space, GradedMap(space, space, 1, std::move(blocks))};
}

CochainComplex direct_sum_complex(const CochainComplex& a, const CochainComplex& b) {
    auto space = direct_sum_space(a.space(), b.space());
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, dim] : space.dims()) {
        if (space.dim(i + 1) == 0) continue;
        blocks.emplace(i, block_diagonal(a.d(i), b.d(i)));
    }
    return {space, GradedMap(space, space, 1, std::move(blocks))};
}

CochainComplex from_chain_complex(const std::map<int, std::size_t>& chain_dims,
                                  const std::map<int, RationalMatrix>& boundaries) {
    std::map<int, std::size_t> dims;
    for (const auto& [i, d] : chain_dims) dims[-i] = d;
    GradedVectorSpace space(dims);
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, m] : boundaries) blocks.emplace(-i, m);
    return {space, GradedMap(space, space, 1, std::move(blocks))};
}

CohomologyResult to_lower_index(const CohomologyResult& h) {
    CohomologyResult out;
    for (const auto& [deg, d] : h.dims) out.dims.emplace(-deg, d);
    return out;
}

}  // namespace cotanhom
