#include "cotanhom/cellular.hpp"

#include "cotanhom/errors.hpp"

#include <charconv>
#include <map>
#include <unordered_map>

namespace cotanhom {

namespace {

struct CellIndex {
    std::size_t dim;
    std::size_t position;  // among cells of the same dimension
};

std::unordered_map<std::string, CellIndex> index_cells(const CellComplex& cc) {
    std::unordered_map<std::string, CellIndex> index;
    std::map<std::size_t, std::size_t> next;
    for (const auto& cell : cc.cells) {
        if (cell.id.empty()) throw InputError("cell with empty id");
        if (!index.emplace(cell.id, CellIndex{cell.dim, next[cell.dim]}).second)
            throw InputError("duplicate cell id '" + cell.id + "'");
        ++next[cell.dim];
    }
    return index;
}

}  // namespace

void CellComplex::check_well_formed() const {
    const auto index = index_cells(*this);
    for (const auto& inc : incidence) {
        const auto from = index.find(inc.from);
        if (from == index.end()) throw ReferenceError("incidence refers to unknown cell '" + inc.from + "'");
        const auto to = index.find(inc.to);
        if (to == index.end()) throw ReferenceError("incidence refers to unknown cell '" + inc.to + "'");
        if (from->second.dim != to->second.dim + 1)
            throw InputError("incidence " + inc.from + " -> " + inc.to + " must drop dimension by exactly one");
    }
}

std::size_t CellComplex::count(std::size_t dim) const {
    std::size_t n = 0;
    for (const auto& c : cells) n += (c.dim == dim);
    return n;
}

CochainComplex chain_complex_of(const CellComplex& cc) {
    cc.check_well_formed();
    const auto index = index_cells(cc);

    std::map<int, std::size_t> chain_dims;
    for (const auto& c : cc.cells) ++chain_dims[static_cast<int>(c.dim)];

    std::map<int, RationalMatrix> boundaries;
    for (const auto& [i, n] : chain_dims) {
        if (i == 0) continue;
        const auto below = chain_dims.find(i - 1);
        if (below == chain_dims.end()) continue;
        boundaries.emplace(i, RationalMatrix(below->second, n));
    }
    for (const auto& inc : cc.incidence) {
        const auto& a = index.at(inc.from);
        const auto& b = index.at(inc.to);
        boundaries.at(static_cast<int>(a.dim))(b.position, a.position) += Rational(inc.coeff);
    }

    try {
        return from_chain_complex(chain_dims, boundaries);
    } catch (const ValidationError&) {
        throw ValidationError("inconsistent incidence: boundary of a boundary is nonzero");
    }
}

CohomologyResult homology_of(const CellComplex& cc) { return to_lower_index(cohomology(chain_complex_of(cc))); }

SurfaceVerdict classify_euler(std::int64_t euler) {
    if (euler > 2) throw ClassificationError("Euler characteristic " + std::to_string(euler) + " exceeds 2");
    if (euler % 2 != 0)
        throw ClassificationError("odd Euler characteristic " + std::to_string(euler) +
                                  ": not a closed orientable surface");
    return SurfaceVerdict{static_cast<std::size_t>((2 - euler) / 2), euler, true, true};
}

SurfaceVerdict classify_surface(const CellComplex& cc) {
    const auto h = homology_of(cc);
    if (h.dim(0) != 1)
        throw ClassificationError("not connected: dim H_0 = " + std::to_string(h.dim(0)));
    for (const auto& [deg, d] : h.dims)
        if (deg < 0 || deg > 2)
            throw ClassificationError("homology in degree " + std::to_string(deg) + ": not a surface");
    if (h.dim(2) != 1)
        throw ClassificationError("dim H_2 = " + std::to_string(h.dim(2)) + ": not a closed orientable surface");
    return classify_euler(euler_characteristic(h));
}

namespace builtin {

CellComplex genus_g(std::size_t g) {
    CellComplex cc;
    cc.cells.push_back({"p", 0});
    for (std::size_t i = 1; i <= 2 * g; ++i) cc.cells.push_back({"b" + std::to_string(i), 1});
    cc.cells.push_back({"c", 2});
    for (std::size_t i = 1; i <= 2 * g; ++i) {
        const auto b = "b" + std::to_string(i);
        cc.incidence.push_back({b, "p", 0});
        cc.incidence.push_back({"c", b, 0});
    }
    return cc;
}

CellComplex circle() { return CellComplex{{{"p", 0}, {"a", 1}}, {{"a", "p", 0}}}; }
CellComplex sphere() { return genus_g(0); }
CellComplex torus() { return genus_g(1); }

}  // namespace builtin

CellComplex builtin_cell_complex(std::string_view name) {
    if (name == "circle") return builtin::circle();
    if (name == "sphere") return builtin::sphere();
    if (name == "torus") return builtin::torus();
    constexpr std::string_view prefix = "genus_g:";
    if (name.substr(0, prefix.size()) == prefix) {
        const auto digits = name.substr(prefix.size());
        std::size_t g = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), g);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return builtin::genus_g(g);
    }
    throw InputError("unknown builtin cell complex '" + std::string(name) + "'");
}

}  // namespace cotanhom
