#pragma once

#include "cotanhom/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

namespace cotanhom {

/// Bounded graded vector space, stored as degree -> dimension with zero
/// dimensions omitted. Degrees are cochain (upper) indices throughout.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    /// Zero entries are dropped.
    explicit GradedVectorSpace(const std::map<int, std::size_t>& dims);

    /// k copies of the ground field in one degree.
    static GradedVectorSpace concentrated(int degree, std::size_t dim);

    [[nodiscard]] std::size_t dim(int degree) const;
    [[nodiscard]] std::size_t total_dim() const;
    [[nodiscard]] bool is_zero() const { return dims_.empty(); }
    [[nodiscard]] const std::map<int, std::size_t>& dims() const { return dims_; }

    /// Lowest and highest nonzero degree, or nullopt for the zero space.
    [[nodiscard]] std::optional<std::pair<int, int>> support() const;
    /// Nonzero in at most one degree.
    [[nodiscard]] bool is_concentrated() const { return dims_.size() <= 1; }

    friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;
    friend std::ostream& operator<<(std::ostream& os, const GradedVectorSpace& v);

private:
    std::map<int, std::size_t> dims_;
};

/// V[s]^i = V^{i+s}.
GradedVectorSpace shift_space(const GradedVectorSpace& v, int s);
GradedVectorSpace direct_sum_space(const GradedVectorSpace& v, const GradedVectorSpace& w);
/// Degree-d part is the sum over i of Hom(V^i, W^{i+d}).
GradedVectorSpace hom_space(const GradedVectorSpace& v, const GradedVectorSpace& w);
/// Degreewise linear dual, regraded so that (V^*)^d has dimension dim V^{-d}.
GradedVectorSpace dual_space(const GradedVectorSpace& v);

/// Graded linear map of fixed degree d: one matrix per source degree i,
/// sending V^i to W^{i+d}. Blocks are stored for every pair of nonzero
/// source and target degrees, so equal maps compare equal.
class GradedMap {
public:
    GradedMap() = default;
    /// Missing blocks are zero. Throws ShapeError if a supplied block has the
    /// wrong shape, or is nonzero where the source or target vanishes.
    GradedMap(GradedVectorSpace source, GradedVectorSpace target, int degree,
              std::map<int, RationalMatrix> blocks = {});

    static GradedMap zero(GradedVectorSpace source, GradedVectorSpace target, int degree) {
        return {std::move(source), std::move(target), degree};
    }
    static GradedMap identity(const GradedVectorSpace& space);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const GradedVectorSpace& source() const { return source_; }
    [[nodiscard]] const GradedVectorSpace& target() const { return target_; }
    /// Matrix V^i -> W^{i+d}; zero matrix of the right shape when not stored.
    [[nodiscard]] RationalMatrix block(int source_degree) const;
    [[nodiscard]] const std::map<int, RationalMatrix>& blocks() const { return blocks_; }
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

private:
    GradedVectorSpace source_;
    GradedVectorSpace target_;
    int degree_ = 0;
    std::map<int, RationalMatrix> blocks_;
};

/// g o f. Degree is |f| + |g|. Throws ShapeError unless f.target() == g.source().
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// a f + b g; both maps must share degree, source and target.
GradedMap scale_and_add(const Rational& a, const GradedMap& f, const Rational& b, const GradedMap& g);

/// Every block is square and invertible and the map is a bijection of graded spaces.
bool is_invertible(const GradedMap& f);

}  // namespace cotanhom
