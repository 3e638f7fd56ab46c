#pragma once

#include "cotanhom/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cotanhom {

struct Cell {
    std::string id;
    std::size_t dim = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Coefficient of `to` in the boundary of `from`. dim(from) = dim(to) + 1.
struct Incidence {
    std::string from;
    std::string to;
    std::int64_t coeff = 0;
    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Cell decomposition with user-supplied incidence coefficients. Pairs that
/// are not listed have coefficient 0. Within a dimension, cells are ordered
/// as they appear in `cells`.
struct CellComplex {
    std::vector<Cell> cells;
    std::vector<Incidence> incidence;

    /// Throws InputError on duplicate ids or dimension mismatches,
    /// ReferenceError on undeclared ids.
    void check_well_formed() const;
    [[nodiscard]] std::size_t count(std::size_t dim) const;

    friend bool operator==(const CellComplex&, const CellComplex&) = default;
};

struct SurfaceVerdict {
    std::size_t genus = 0;
    std::int64_t euler = 0;
    bool connected = false;
    bool orientable_assumed = true;
    friend bool operator==(const SurfaceVerdict&, const SurfaceVerdict&) = default;
};

/// Cellular cochain complex: i-cells sit in cochain degree -i, and the
/// boundary from dimension i to i-1 has entry (b, a) = coeff(a -> b).
/// Throws ValidationError when the incidences do not square to zero.
CochainComplex chain_complex_of(const CellComplex& cc);

/// Homology in geometric (lower) indices.
CohomologyResult homology_of(const CellComplex& cc);

/// Classifies a closed orientable surface by Euler characteristic. Throws
/// ClassificationError when H_0 is not one-dimensional, homology lives
/// outside [0, 2], or chi is odd or exceeds 2.
SurfaceVerdict classify_surface(const CellComplex& cc);

/// chi -> genus for a connected closed orientable surface.
SurfaceVerdict classify_euler(std::int64_t euler);

/// Standard decompositions: 1 zero-cell, 2g one-cells, 1 two-cell with
/// every incidence 0; genus_g(0) is the sphere.
namespace builtin {
CellComplex circle();
CellComplex sphere();
CellComplex torus();
CellComplex genus_g(std::size_t g);
}  // namespace builtin

/// Resolves "circle", "sphere", "torus" or "genus_g:<g>". Throws InputError
/// for anything else.
CellComplex builtin_cell_complex(std::string_view name);

}  // namespace cotanhom
