#pragma once

#include "cotanhom/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotanhom {

struct Generator {
    std::string name;
    int degree = 0;
    bool invertible = false;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Coefficient times a word of at most two generators. The word [a, b] is
/// the composite a o b; the empty word is the identity.
struct Term {
    std::int64_t coeff = 0;
    std::vector<std::string> word;
    friend bool operator==(const Term&, const Term&) = default;
};

/// dx = sum of terms.
struct Relation {
    std::string generator;
    std::vector<Term> terms;
    friend bool operator==(const Relation&, const Relation&) = default;
};

/// One-object dg category presented by loop generators and the
/// differentials of those generators. Generators without a relation are
/// closed (dx = 0).
class QuiverPresentation {
public:
    QuiverPresentation() = default;
    /// Throws InputError on duplicate or unknown names, words longer than two
    /// letters, or a relation whose terms do not have degree |x| + 1.
    QuiverPresentation(std::string name, std::vector<Generator> generators, std::vector<Relation> relations);

    /// z with |z| = -1, dz = 0.
    static QuiverPresentation sphere();
    /// m, n invertible of degree 0 and h of degree -1 with dh = mn - nm.
    static QuiverPresentation torus();
    /// "sphere" or "torus"; throws InputError otherwise.
    static QuiverPresentation builtin(std::string_view name);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<Relation>& relations() const { return relations_; }
    [[nodiscard]] const Generator* find(std::string_view generator) const;
    /// Terms of dx merged by word, zero coefficients dropped; empty when dx = 0.
    [[nodiscard]] std::vector<Term> differential_of(std::string_view generator) const;
    /// Every generator has dx = 0.
    [[nodiscard]] bool all_closed() const;

    friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;

private:
    std::string name_;
    std::vector<Generator> generators_;
    std::vector<Relation> relations_;
};

/// A module over the quiver's dg category: a bounded graded vector space
/// with one graded self-map per generator.
struct Representation {
    QuiverPresentation quiver;
    GradedVectorSpace space;
    std::map<std::string, GradedMap> maps;

    /// Fills absent generators with the zero map of the right degree. Throws
    /// InputError if `maps` names a generator the quiver does not have.
    Representation(QuiverPresentation quiver, GradedVectorSpace space, std::map<std::string, GradedMap> maps = {});

    [[nodiscard]] const GradedMap& map(std::string_view generator) const;
};

/// Evaluates a formal combination of words on the representation. Result
/// has the common degree of the words.
GradedMap evaluate(const Representation& r, const std::vector<Term>& terms, int degree);

/// Name of the first broken constraint (map degree, relation, invertibility)
/// or nullopt when the representation is valid.
std::optional<std::string> first_violation(const Representation& r);
bool validate_representation(const Representation& r);

struct HomSummand {
    std::string label;  // "base" or the generator name
    int shift = 0;      // |x| - 1 for generator summands
    friend bool operator==(const HomSummand&, const HomSummand&) = default;
};

/// hom(V, W) plus one copy shifted by |x| - 1 per generator. The cochain
/// complex is present only when every generator is closed.
struct HomComplexResult {
    GradedVectorSpace space;
    std::vector<HomSummand> layout;
    std::optional<CochainComplex> complex;

    [[nodiscard]] bool differential_defined() const { return complex.has_value(); }
};

/// Coordinates on hom^p(V, W) = sum_j Hom(V^j, W^{j+p}): blocks in ascending
/// source degree, each flattened row-major.
class HomCoordinates {
public:
    HomCoordinates(const GradedVectorSpace& v, const GradedVectorSpace& w, int degree);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    /// Coordinate vector of a degree-p map V -> W.
    [[nodiscard]] std::vector<Rational> flatten(const GradedMap& t) const;
    /// The map whose only nonzero coordinate is `index`, equal to 1.
    [[nodiscard]] GradedMap unit(std::size_t index) const;

private:
    struct Block {
        int source_degree;
        std::size_t rows;
        std::size_t cols;
        std::size_t offset;
    };
    GradedVectorSpace v_;
    GradedVectorSpace w_;
    int degree_;
    std::vector<Block> blocks_;
    std::size_t dim_ = 0;
};

/// Throws InputError when the two representations use different quivers.
/// With all dx = 0 the differential sends (t0, t1, ..., tn) to
/// (0, s1, ..., sn), s_i = g_i t0 - (-1)^{|t0| |x_i|} t0 f_i.
HomComplexResult hom_complex(const Representation& v, const Representation& w);

/// Cohomology of the hom complex. Throws UnsupportedDifferentialError when
/// some generator has nonzero differential.
CohomologyResult floer_cohomology(const Representation& v, const Representation& w);

/// Alternating sum of the graded dimensions of the hom complex.
std::int64_t euler_of_hom(const Representation& v, const Representation& w);

namespace builtin {
/// R in degree 0 with the zero loop, over the sphere quiver.
Representation zero_section();
/// R^m in one degree with the zero loop, over the sphere quiver.
Representation concentrated_sphere_rep(int degree, std::size_t m);
/// R in degree 0 with m = n = 1 and h = 0, over the torus quiver.
Representation torus_zero_section();
}  // namespace builtin

/// Resolves "zero_section" or "torus_zero_section". Throws InputError otherwise.
Representation builtin_representation(std::string_view name);

}  // namespace cotanhom
