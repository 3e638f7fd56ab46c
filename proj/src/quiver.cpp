#include "cotanhom/quiver.hpp"

#include "cotanhom/errors.hpp"

#include <set>

namespace cotanhom {

QuiverPresentation::QuiverPresentation(std::string name, std::vector<Generator> generators,
                                       std::vector<Relation> relations)
    : name_(std::move(name)), generators_(std::move(generators)), relations_(std::move(relations)) {
    std::set<std::string> names;
    for (const auto& g : generators_) {
        if (g.name.empty()) throw InputError("generator with empty name");
        if (!names.insert(g.name).second) throw InputError("duplicate generator '" + g.name + "'");
    }
    std::set<std::string> related;
    for (const auto& rel : relations_) {
        const Generator* x = find(rel.generator);
        if (!x) throw InputError("relation for unknown generator '" + rel.generator + "'");
        if (!related.insert(rel.generator).second)
            throw InputError("more than one relation for '" + rel.generator + "'");
        for (const auto& term : rel.terms) {
            if (term.word.size() > 2) throw InputError("relation words are limited to two letters");
            int degree = 0;
            for (const auto& letter : term.word) {
                const Generator* y = find(letter);
                if (!y) throw InputError("relation d" + rel.generator + " uses unknown generator '" + letter + "'");
                degree += y->degree;
            }
            if (degree != x->degree + 1)
                throw InputError("term of d" + rel.generator + " has degree " + std::to_string(degree) +
                                 ", expected " + std::to_string(x->degree + 1));
        }
    }
}

QuiverPresentation QuiverPresentation::sphere() { return {"sphere", {{"z", -1, false}}, {}}; }

QuiverPresentation QuiverPresentation::torus() {
    return {"torus",
            {{"m", 0, true}, {"n", 0, true}, {"h", -1, false}},
            {{"h", {{1, {"m", "n"}}, {-1, {"n", "m"}}}}}};
}

QuiverPresentation QuiverPresentation::builtin(std::string_view name) {
    if (name == "sphere") return sphere();
    if (name == "torus") return torus();
    throw InputError("unknown builtin quiver '" + std::string(name) + "'");
}

const Generator* QuiverPresentation::find(std::string_view generator) const {
    for (const auto& g : generators_)
        if (g.name == generator) return &g;
    return nullptr;
}

std::vector<Term> QuiverPresentation::differential_of(std::string_view generator) const {
    std::map<std::vector<std::string>, std::int64_t> merged;
    for (const auto& rel : relations_)
        if (rel.generator == generator)
            for (const auto& term : rel.terms) merged[term.word] += term.coeff;
    std::vector<Term> out;
    for (auto& [word, coeff] : merged)
        if (coeff != 0) out.push_back({coeff, word});
    return out;
}

bool QuiverPresentation::all_closed() const {
    for (const auto& g : generators_)
        if (!differential_of(g.name).empty()) return false;
    return true;
}

Representation::Representation(QuiverPresentation q, GradedVectorSpace s, std::map<std::string, GradedMap> m)
    : quiver(std::move(q)), space(std::move(s)), maps(std::move(m)) {
    for (const auto& [name, f] : maps)
        if (!quiver.find(name)) throw InputError("map for unknown generator '" + name + "'");
    for (const auto& g : quiver.generators())
        if (!maps.contains(g.name)) maps.emplace(g.name, GradedMap::zero(space, space, g.degree));
}

const GradedMap& Representation::map(std::string_view generator) const {
    const auto it = maps.find(std::string(generator));
    if (it == maps.end()) throw InputError("no map for generator '" + std::string(generator) + "'");
    return it->second;
}

GradedMap evaluate(const Representation& r, const std::vector<Term>& terms, int degree) {
    GradedMap total = GradedMap::zero(r.space, r.space, degree);
    for (const auto& term : terms) {
        GradedMap value = GradedMap::identity(r.space);
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) value = compose(r.map(*it), value);
        total = scale_and_add(1, total, Rational(term.coeff), value);
    }
    return total;
}

std::optional<std::string> first_violation(const Representation& r) {
    for (const auto& g : r.quiver.generators()) {
        const auto& f = r.map(g.name);
        if (!(f.source() == r.space) || !(f.target() == r.space))
            return "map " + g.name + " is not a self-map of the representation space";
        if (f.degree() != g.degree)
            return "map " + g.name + " has degree " + std::to_string(f.degree()) + ", generator has degree " +
                   std::to_string(g.degree);
    }
    for (const auto& g : r.quiver.generators()) {
        const auto dx = r.quiver.differential_of(g.name);
        if (dx.empty()) continue;
        if (!evaluate(r, dx, g.degree + 1).is_zero()) return "relation d" + g.name + " does not vanish";
    }
    for (const auto& g : r.quiver.generators())
        if (g.invertible && !is_invertible(r.map(g.name))) return "map " + g.name + " is not invertible";
    return std::nullopt;
}

bool validate_representation(const Representation& r) { return !first_violation(r).has_value(); }

HomCoordinates::HomCoordinates(const GradedVectorSpace& v, const GradedVectorSpace& w, int degree)
    : v_(v), w_(w), degree_(degree) {
    for (const auto& [j, cols] : v_.dims()) {
        const std::size_t rows = w_.dim(j + degree_);
        if (rows == 0) continue;
        blocks_.push_back({j, rows, cols, dim_});
        dim_ += rows * cols;
    }
}

std::vector<Rational> HomCoordinates::flatten(const GradedMap& t) const {
    std::vector<Rational> out(dim_);
    for (const auto& b : blocks_) {
        const auto m = t.block(b.source_degree);
        for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c) out[b.offset + r * b.cols + c] = m(r, c);
    }
    return out;
}

GradedMap HomCoordinates::unit(std::size_t index) const {
    std::map<int, RationalMatrix> blocks;
    for (const auto& b : blocks_) {
        if (index < b.offset || index >= b.offset + b.rows * b.cols) continue;
        RationalMatrix m(b.rows, b.cols);
        const std::size_t local = index - b.offset;
        m(local / b.cols, local % b.cols) = 1;
        blocks.emplace(b.source_degree, std::move(m));
    }
    return {v_, w_, degree_, std::move(blocks)};
}

namespace {

bool odd(long long x) { return x % 2 != 0; }

}  // namespace

HomComplexResult hom_complex(const Representation& v, const Representation& w) {
    if (!(v.quiver == w.quiver))
        throw InputError("representations are over different quivers ('" + v.quiver.name() + "' and '" +
                         w.quiver.name() + "')");
    const auto& gens = v.quiver.generators();
    const GradedVectorSpace base = hom_space(v.space, w.space);

    HomComplexResult result;
    result.layout.push_back({"base", 0});
    for (const auto& g : gens) result.layout.push_back({g.name, g.degree - 1});

    GradedVectorSpace total;
    for (const auto& s : result.layout) total = direct_sum_space(total, shift_space(base, s.shift));
    result.space = total;

    if (!v.quiver.all_closed()) return result;

    // Offset of each summand inside the total space at degree q.
    auto offsets = [&](int q) {
        std::vector<std::size_t> out;
        std::size_t acc = 0;
        for (const auto& s : result.layout) {
            out.push_back(acc);
            acc += base.dim(q + s.shift);
        }
        return out;
    };

    std::map<int, RationalMatrix> blocks;
    for (const auto& [p, dim_p] : base.dims()) {
        const std::size_t rows = total.dim(p + 1);
        if (rows == 0) continue;
        RationalMatrix block(rows, total.dim(p));
        const HomCoordinates source(v.space, w.space, p);
        const auto row_offsets = offsets(p + 1);
        for (std::size_t k = 0; k < source.dim(); ++k) {
            const GradedMap t0 = source.unit(k);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const auto& f = v.map(gens[i].name);
                const auto& g = w.map(gens[i].name);
                const Rational sign = odd(static_cast<long long>(p) * gens[i].degree) ? -1 : 1;
                const GradedMap s = scale_and_add(1, compose(g, t0), -sign, compose(t0, f));
                const HomCoordinates target(v.space, w.space, p + gens[i].degree);
                const auto coords = target.flatten(s);
                for (std::size_t r = 0; r < coords.size(); ++r) block(row_offsets[i + 1] + r, k) = coords[r];
            }
        }
        blocks.emplace(p, std::move(block));
    }
    result.complex.emplace(total, GradedMap(total, total, 1, std::move(blocks)));
    return result;
}

CohomologyResult floer_cohomology(const Representation& v, const Representation& w) {
    const auto hom = hom_complex(v, w);
    if (!hom.differential_defined())
        throw UnsupportedDifferentialError("hom-complex differential is only defined when every generator is closed");
    return cohomology(*hom.complex);
}

std::int64_t euler_of_hom(const Representation& v, const Representation& w) {
    return euler_from_dims(hom_complex(v, w).space);
}

namespace builtin {

Representation concentrated_sphere_rep(int degree, std::size_t m) {
    return {QuiverPresentation::sphere(), GradedVectorSpace::concentrated(degree, m)};
}

Representation zero_section() { return concentrated_sphere_rep(0, 1); }

Representation torus_zero_section() {
    const auto line = GradedVectorSpace::concentrated(0, 1);
    return {QuiverPresentation::torus(), line,
            {{"m", GradedMap::identity(line)}, {"n", GradedMap::identity(line)}}};
}

}  // namespace builtin

Representation builtin_representation(std::string_view name) {
    if (name == "zero_section") return builtin::zero_section();
    if (name == "torus_zero_section") return builtin::torus_zero_section();
    throw InputError("unknown builtin representation '" + std::string(name) + "'");
}

}  // namespace cotanhom
