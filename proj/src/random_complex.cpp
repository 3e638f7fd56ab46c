#include "cotanhom/complex.hpp"

#include "cotanhom/errors.hpp"

#include <random>

namespace cotanhom {

CochainComplex random_complex(std::uint64_t seed, const RandomComplexConfig& cfg) {
    if (cfg.degree_lo > cfg.degree_hi || cfg.entry_lo > cfg.entry_hi)
        throw InputError("empty range in random complex configuration");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto free_matrix = [&](std::size_t rows, std::size_t cols) {
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(cfg.entry_lo, cfg.entry_hi);
        return m;
    };

    std::map<int, std::size_t> dims;
    for (int i = cfg.degree_lo; i <= cfg.degree_hi; ++i)
        dims[i] = static_cast<std::size_t>(draw(0, static_cast<std::int64_t>(cfg.max_dim)));
    const GradedVectorSpace space(dims);

    std::map<int, RationalMatrix> blocks;
    RationalMatrix previous(dims[cfg.degree_lo], 0);  // d^{lo-1}: nothing comes in
    for (int i = cfg.degree_lo; i < cfg.degree_hi; ++i) {
        // Rows of `cokernel` span the functionals vanishing on im d^{i-1}.
        const RationalMatrix cokernel = transpose(kernel_basis(transpose(previous)));
        RationalMatrix d = multiply(free_matrix(dims[i + 1], cokernel.rows()), cokernel);
        blocks.emplace(i, d);
        previous = std::move(d);
    }
    return {space, GradedMap(space, space, 1, std::move(blocks))};
}

}  // namespace cotanhom
