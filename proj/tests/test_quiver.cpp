#include "cotanhom/errors.hpp"
#include "cotanhom/quiver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cotanhom;

using Dims = std::map<int, std::size_t>;

namespace {

Representation sphere_rep(const GradedVectorSpace& v, std::map<int, RationalMatrix> f) {
    return {QuiverPresentation::sphere(), v, {{"z", GradedMap(v, v, -1, std::move(f))}}};
}

Representation torus_rep(const GradedVectorSpace& v, std::map<int, RationalMatrix> m, std::map<int, RationalMatrix> n,
                         std::map<int, RationalMatrix> h = {}) {
    return {QuiverPresentation::torus(), v,
            {{"m", GradedMap(v, v, 0, std::move(m))},
             {"n", GradedMap(v, v, 0, std::move(n))},
             {"h", GradedMap(v, v, -1, std::move(h))}}};
}

/// V = R at 0 + R at 1, z acting as the identity V^1 -> V^0.
Representation adjacent_lines() {
    return sphere_rep(GradedVectorSpace({{0, 1}, {1, 1}}), {{1, RationalMatrix::identity(1)}});
}

}  // namespace

TEST_SUITE("quiver_reps") {
    TEST_CASE("builtin presentations") {
        const auto s = QuiverPresentation::sphere();
        REQUIRE(s.generators().size() == 1);
        CHECK(s.generators()[0] == Generator{"z", -1, false});
        CHECK(s.all_closed());

        const auto t = QuiverPresentation::torus();
        CHECK(t.find("m")->invertible);
        CHECK(t.find("h")->degree == -1);
        CHECK_FALSE(t.all_closed());
        CHECK(t.differential_of("h").size() == 2);
        CHECK(t.differential_of("m").empty());
        CHECK_THROWS_AS(QuiverPresentation::builtin("klein"), InputError);
    }

    TEST_CASE("presentation validation") {
        CHECK_THROWS_AS(QuiverPresentation("q", {{"x", 0, false}, {"x", 1, false}}, {}), InputError);
        CHECK_THROWS_AS(QuiverPresentation("q", {{"x", 0, false}}, {{"y", {}}}), InputError);
        // dx must have degree |x| + 1.
        CHECK_THROWS_AS(QuiverPresentation("q", {{"x", 0, false}}, {{"x", {{1, {"x"}}}}}), InputError);
        CHECK_THROWS_AS(QuiverPresentation("q", {{"x", -2, false}, {"y", 1, false}}, {{"x", {{1, {"y", "y", "x"}}}}}),
                        InputError);
        CHECK_NOTHROW(QuiverPresentation("q", {{"x", -1, false}}, {{"x", {{1, {}}}}}));
    }

    TEST_CASE("validate_representation") {
        CHECK(validate_representation(builtin::zero_section()));
        CHECK(validate_representation(builtin::torus_zero_section()));

        const auto plane = GradedVectorSpace::concentrated(0, 2);
        const auto alpha = RationalMatrix{{1, 1}, {0, 1}};
        const auto beta = RationalMatrix{{1, 0}, {1, 1}};
        // Oracle: the commutator computed directly is nonzero.
        CHECK_FALSE(add(multiply(alpha, beta), scale(-1, multiply(beta, alpha))).is_zero());
        const auto noncommuting = torus_rep(plane, {{0, alpha}}, {{0, beta}});
        CHECK_FALSE(validate_representation(noncommuting));
        CHECK(first_violation(noncommuting) == "relation dh does not vanish");

        const auto singular = torus_rep(plane, {{0, RationalMatrix{{1, 2}, {2, 4}}}}, {{0, RationalMatrix::identity(2)}});
        CHECK(first_violation(singular) == "map m is not invertible");

        Representation wrong_degree = builtin::zero_section();
        wrong_degree.maps.at("z") = GradedMap::identity(wrong_degree.space);
        CHECK(first_violation(wrong_degree)->find("degree") != std::string::npos);

        CHECK_THROWS_AS(Representation(QuiverPresentation::sphere(), plane, {{"w", GradedMap::identity(plane)}}),
                        InputError);
    }

    TEST_CASE("hom_complex of the zero section") {
        const auto r = builtin::zero_section();
        const auto hom = hom_complex(r, r);
        CHECK(hom.space == GradedVectorSpace({{0, 1}, {2, 1}}));
        REQUIRE(hom.differential_defined());
        CHECK(hom.complex->differential().is_zero());
        CHECK(hom.layout == std::vector<HomSummand>{{"base", 0}, {"z", -2}});
    }

    TEST_CASE("hom_complex over the torus quiver has dims only") {
        const auto r = builtin::torus_zero_section();
        const auto hom = hom_complex(r, r);
        CHECK_FALSE(hom.differential_defined());
        CHECK(hom.space == GradedVectorSpace({{0, 1}, {1, 2}, {2, 1}}));
        CHECK_THROWS_AS(floer_cohomology(r, r), UnsupportedDifferentialError);
        CHECK_THROWS_AS(hom_complex(r, builtin::zero_section()), InputError);
    }

    TEST_CASE("hom_complex with a nonzero loop, against the Kronecker oracle") {
        const auto r = adjacent_lines();
        REQUIRE(validate_representation(r));
        const auto hom = hom_complex(r, r);
        REQUIRE(hom.differential_defined());
        CHECK(validate(*hom.complex));
        CHECK(hom.space == GradedVectorSpace({{-1, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 1}}));

        GradedVectorSpace total;
        const auto d = oracle::hom_differential(r, r, total);
        CHECK(total == hom.space);
        for (const auto& [q, m] : d) CHECK(hom.complex->d(q) == m);

        // Frozen from the oracle: d^0 and d^1 have rank one, the rest vanish.
        const Dims expected{{-1, 1}, {0, 1}, {2, 1}, {3, 1}};
        CHECK(oracle::hom_cohomology(r, r) == expected);
        CHECK(floer_cohomology(r, r).dims == expected);
    }

    TEST_CASE("floer_cohomology") {
        const auto x0 = builtin::zero_section();
        CHECK(floer_cohomology(x0, x0).dims == Dims{{0, 1}, {2, 1}});

        for (int s : {-2, 0, 3})
            for (std::size_t m = 1; m <= 3; ++m) {
                const auto r = builtin::concentrated_sphere_rep(s, m);
                CHECK(floer_cohomology(r, r).dims == Dims{{0, m * m}, {2, m * m}});
            }
    }

    TEST_CASE("euler_of_hom") {
        const auto t = builtin::torus_zero_section();
        CHECK(euler_of_hom(t, t) == 0);
        const auto x0 = builtin::zero_section();
        CHECK(euler_of_hom(x0, x0) == 2);
        const Representation zero(QuiverPresentation::sphere(), GradedVectorSpace());
        CHECK(euler_of_hom(zero, x0) == 0);
        CHECK(euler_of_hom(x0, zero) == 0);
    }

    TEST_CASE("HomCoordinates round trip") {
        const GradedVectorSpace v({{0, 2}, {1, 1}});
        const HomCoordinates coords(v, v, 0);
        CHECK(coords.dim() == 5);
        for (std::size_t k = 0; k < coords.dim(); ++k) {
            const auto e = coords.flatten(coords.unit(k));
            for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] == Rational(i == k ? 1 : 0));
        }
    }

    TEST_CASE("random sphere reps: hom complex agrees with the oracle") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 150; ++trial) {
            std::map<int, std::size_t> dims;
            for (int i = -1; i <= 2; ++i) dims[i] = rng() % 3;
            const GradedVectorSpace v(dims);
            std::map<int, RationalMatrix> f;
            for (const auto& [i, d] : v.dims()) {
                RationalMatrix m(v.dim(i - 1), d);
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = static_cast<std::int64_t>(rng() % 5) - 2;
                f.emplace(i, m);
            }
            const auto r = sphere_rep(v, f);
            const auto hom = hom_complex(r, r);
            REQUIRE(hom.differential_defined());
            CHECK(validate(*hom.complex));
            CHECK(floer_cohomology(r, r).dims == oracle::hom_cohomology(r, r));

            // hom dims: the base copy plus one copy shifted by -2.
            const auto base = hom_space(v, v);
            CHECK(hom.space == direct_sum_space(base, shift_space(base, -2)));
            CHECK(euler_of_hom(r, r) == 2 * euler_from_dims(base));
        }
    }

    TEST_CASE("sign convention is applied per degree") {
        // Against a different representation W the sign still enters through |t0|.
        const GradedVectorSpace v({{0, 1}, {1, 1}});
        const auto a = sphere_rep(v, {{1, RationalMatrix{{2}}}});
        const auto b = sphere_rep(v, {{1, RationalMatrix{{-1}}}});
        GradedVectorSpace total;
        const auto d = oracle::hom_differential(a, b, total);
        const auto hom = hom_complex(a, b);
        for (const auto& [q, m] : d) CHECK(hom.complex->d(q) == m);
        CHECK(floer_cohomology(a, b).dims == oracle::hom_cohomology(a, b));
    }
}
