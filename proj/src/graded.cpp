#include "cotanhom/graded.hpp"

#include "cotanhom/errors.hpp"

#include <numeric>
#include <string>

namespace cotanhom {

GradedVectorSpace::GradedVectorSpace(const std::map<int, std::size_t>& dims) {
    for (const auto& [deg, d] : dims)
        if (d > 0) dims_.emplace(deg, d);
}

GradedVectorSpace GradedVectorSpace::concentrated(int degree, std::size_t dim) {
    return GradedVectorSpace({{degree, dim}});
}

std::size_t GradedVectorSpace::dim(int degree) const {
    const auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedVectorSpace::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0},
                           [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

std::optional<std::pair<int, int>> GradedVectorSpace::support() const {
    if (dims_.empty()) return std::nullopt;
    return std::pair{dims_.begin()->first, dims_.rbegin()->first};
}

std::ostream& operator<<(std::ostream& os, const GradedVectorSpace& v) {
    os << '{';
    bool first = true;
    for (const auto& [deg, d] : v.dims()) {
        os << (first ? "" : ", ") << deg << ": " << d;
        first = false;
    }
    return os << '}';
}

GradedVectorSpace shift_space(const GradedVectorSpace& v, int s) {
    std::map<int, std::size_t> out;
    for (const auto& [deg, d] : v.dims()) out[deg - s] = d;
    return GradedVectorSpace(out);
}

GradedVectorSpace direct_sum_space(const GradedVectorSpace& v, const GradedVectorSpace& w) {
    std::map<int, std::size_t> out = v.dims();
    for (const auto& [deg, d] : w.dims()) out[deg] += d;
    return GradedVectorSpace(out);
}

GradedVectorSpace hom_space(const GradedVectorSpace& v, const GradedVectorSpace& w) {
    std::map<int, std::size_t> out;
    for (const auto& [i, dv] : v.dims())
        for (const auto& [j, dw] : w.dims()) out[j - i] += dv * dw;
    return GradedVectorSpace(out);
}

GradedVectorSpace dual_space(const GradedVectorSpace& v) {
    std::map<int, std::size_t> out;
    for (const auto& [deg, d] : v.dims()) out[-deg] = d;
    return GradedVectorSpace(out);
}

GradedMap::GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degree,
                     std::map<int, RationalMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    for (auto& [i, m] : blocks) {
        const std::size_t rows = target_.dim(i + degree_);
        const std::size_t cols = source_.dim(i);
        if (m.rows() != rows || m.cols() != cols)
            throw ShapeError("block at source degree " + std::to_string(i) + " of a degree " +
                             std::to_string(degree_) + " map must be " + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    for (const auto& [i, dv] : source_.dims()) {
        const std::size_t dw = target_.dim(i + degree_);
        if (dw == 0) continue;
        auto it = blocks.find(i);
        blocks_.emplace(i, it == blocks.end() ? RationalMatrix(dw, dv) : std::move(it->second));
    }
}

GradedMap GradedMap::identity(const GradedVectorSpace& space) {
    std::map<int, RationalMatrix> blocks;
    for (const auto& [deg, d] : space.dims()) blocks.emplace(deg, RationalMatrix::identity(d));
    return {space, space, 0, std::move(blocks)};
}

RationalMatrix GradedMap::block(int source_degree) const {
    const auto it = blocks_.find(source_degree);
    if (it != blocks_.end()) return it->second;
    return {target_.dim(source_degree + degree_), source_.dim(source_degree)};
}

bool GradedMap::is_zero() const {
    for (const auto& [i, m] : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(f.target() == g.source()))
        throw ShapeError("cannot compose: target of the inner map differs from source of the outer map");
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, fm] : f.blocks()) {
        const int mid = i + f.degree();
        const auto it = g.blocks().find(mid);
        if (it == g.blocks().end()) continue;
        blocks.emplace(i, multiply(it->second, fm));
    }
    return {f.source(), g.target(), f.degree() + g.degree(), std::move(blocks)};
}

GradedMap scale_and_add(const Rational& a, const GradedMap& f, const Rational& b, const GradedMap& g) {
    if (f.degree() != g.degree())
        throw ShapeError("cannot add maps of degree " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw ShapeError("cannot add maps between different graded spaces");
    std::map<int, RationalMatrix> blocks;
    for (const auto& [i, fm] : f.blocks()) blocks.emplace(i, linear_combination(a, fm, b, g.blocks().at(i)));
    return {f.source(), f.target(), f.degree(), std::move(blocks)};
}

bool is_invertible(const GradedMap& f) {
    if (!(shift_space(f.source(), -f.degree()) == f.target())) return false;
    for (const auto& [i, m] : f.blocks())
        if (!is_invertible(m)) return false;
    return true;
}

}  // namespace cotanhom
