#include "cotanhom/cellular.hpp"
#include "cotanhom/complex.hpp"
#include "cotanhom/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cotanhom;

namespace {

// Cochain model of the cellular complexes with every incidence zero.
CochainComplex zero_differential(std::map<int, std::size_t> dims) { return CochainComplex(GradedVectorSpace(dims)); }

}  // namespace

TEST_SUITE("complexes") {
    TEST_CASE("validate") {
        CHECK(validate(zero_differential({{0, 1}, {1, 2}, {2, 1}})));

        const GradedVectorSpace line3({{0, 1}, {1, 1}, {2, 1}});
        const GradedMap ids(line3, line3, 1, {{0, RationalMatrix::identity(1)}, {1, RationalMatrix::identity(1)}});
        CHECK_FALSE(is_cochain_differential(ids));
        CHECK_THROWS_AS(CochainComplex(line3, ids), ValidationError);
        CHECK_THROWS_AS(CochainComplex(line3, GradedMap::identity(line3)), ShapeError);

        // R -> R^2 -> R with zero maps.
        CHECK(validate(zero_differential({{0, 1}, {1, 2}, {2, 1}})));
    }

    TEST_CASE("cohomology of the standard surfaces") {
        CHECK(cohomology(zero_differential({{0, 1}, {1, 1}})).dims == std::map<int, std::size_t>{{0, 1}, {1, 1}});
        CHECK(cohomology(zero_differential({{0, 1}, {2, 1}})).dims == std::map<int, std::size_t>{{0, 1}, {2, 1}});
        CHECK(cohomology(zero_differential({{0, 1}, {1, 2}, {2, 1}})).dims ==
              std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}});
    }

    TEST_CASE("cohomology with a nonzero differential") {
        const GradedVectorSpace v({{0, 1}, {1, 1}});
        const CochainComplex c(v, GradedMap(v, v, 1, {{0, RationalMatrix::identity(1)}}));
        CHECK(cohomology(c).dims.empty());
        CHECK(euler_from_dims(c) == 0);
    }

    TEST_CASE("euler_from_dims") {
        for (int g = 0; g <= 5; ++g)
            CHECK(euler_from_dims(chain_complex_of(builtin::genus_g(g))) == 2 - 2 * g);
        CHECK(euler_from_dims(CochainComplex()) == 0);
        CHECK(euler_from_dims(zero_differential({{0, 1}, {2, 1}})) == 2);
    }

    TEST_CASE("euler_from_cohomology") {
        const auto torus = zero_differential({{0, 1}, {1, 2}, {2, 1}});
        CHECK(euler_from_cohomology(torus) == 0);
        CHECK(euler_from_dims(torus) == 0);
    }

    TEST_CASE("shift_complex") {
        const auto c = random_complex(99);
        CHECK(shift_complex(c, 0) == c);
        CHECK(euler_from_dims(shift_complex(c, 1)) == -euler_from_dims(c));
        CHECK(shift_complex(shift_complex(c, 1), 1) == shift_complex(c, 2));

        const GradedVectorSpace v({{0, 1}, {1, 1}});
        const CochainComplex e(v, GradedMap(v, v, 1, {{0, RationalMatrix{{3}}}}));
        CHECK(shift_complex(e, 1).d(-1) == RationalMatrix{{-3}});
        CHECK(shift_complex(e, 2).d(-2) == RationalMatrix{{3}});
    }

    TEST_CASE("direct_sum_complex") {
        const auto a = random_complex(5);
        const auto b = random_complex(6);
        CHECK(direct_sum_complex(a, CochainComplex()) == a);
        const auto s = direct_sum_complex(a, b);
        CHECK(validate(s));
        CHECK(euler_from_dims(s) == euler_from_dims(a) + euler_from_dims(b));
    }

    TEST_CASE("chain data regrades i -> -i") {
        const auto c = from_chain_complex({{0, 1}, {1, 1}}, {{1, RationalMatrix{{0}}}});
        CHECK(c.space() == GradedVectorSpace({{0, 1}, {-1, 1}}));
        CHECK(to_lower_index(cohomology(c)).dims == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    }

    TEST_CASE("random complexes: properties") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            const auto c = random_complex(seed);
            REQUIRE(validate(c));
            const auto h = cohomology(c);
            CHECK(h == oracle::cohomology_via_kernels(c));
            CHECK(euler_from_dims(c) == euler_from_cohomology(c));

            // Cohomology vanishes where the complex does.
            for (const auto& [deg, d] : h.dims) CHECK(d <= c.space().dim(deg));

            for (int s = -3; s <= 3; ++s) {
                const auto shifted = shift_complex(c, s);
                CHECK(validate(shifted));
                const auto hs = cohomology(shifted);
                for (int i = -8; i <= 8; ++i) CHECK(hs.dim(i) == h.dim(i + s));
                CHECK(euler_from_dims(shifted) == (s % 2 == 0 ? 1 : -1) * euler_from_dims(c));
            }

            // Sign flips leave cohomology unchanged.
            std::map<int, RationalMatrix> negated;
            for (const auto& [i, m] : c.differential().blocks()) negated.emplace(i, scale(-1, m));
            const CochainComplex minus(c.space(), GradedMap(c.space(), c.space(), 1, negated));
            CHECK(cohomology(minus) == h);

            const auto other = random_complex(seed + 1000);
            const auto sum = direct_sum_complex(c, other);
            const auto hsum = cohomology(sum);
            const auto hother = cohomology(other);
            for (int i = -4; i <= 4; ++i) CHECK(hsum.dim(i) == h.dim(i) + hother.dim(i));
        }
    }
}
