#include "cotanhom/classification.hpp"
#include "cotanhom/errors.hpp"
#include "cotanhom/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace cotanhom;

namespace {

Representation sphere_rep(const GradedVectorSpace& v, std::map<int, RationalMatrix> f = {}) {
    return {QuiverPresentation::sphere(), v, {{"z", GradedMap(v, v, -1, std::move(f))}}};
}

Representation torus_rep(const GradedVectorSpace& v, std::map<int, RationalMatrix> m, std::map<int, RationalMatrix> n) {
    return {QuiverPresentation::torus(), v,
            {{"m", GradedMap(v, v, 0, std::move(m))}, {"n", GradedMap(v, v, 0, std::move(n))}}};
}

std::int64_t four_summand_euler(const Representation& r) {
    // chi(U) + chi(U[-1]) + chi(U[-1]) + chi(U[-2]) summed straight from the pair counts.
    std::int64_t chi = 0;
    for (int shift : {0, -1, -1, -2})
        for (const auto& [deg, d] : oracle::hom_dims_by_pairs(r.space, r.space))
            chi += (((deg - shift) % 2 == 0) ? 1 : -1) * static_cast<std::int64_t>(d);
    return chi;
}

}  // namespace

TEST_SUITE("classification") {
    TEST_CASE("sample config validation") {
        SampleConfig cfg;
        CHECK_NOTHROW(cfg.check());
        cfg.count = 0;
        CHECK_THROWS_AS(cfg.check(), InputError);
        cfg = {};
        cfg.degree_lo = 2;
        cfg.degree_hi = 1;
        CHECK_THROWS_AS(cfg.check(), InputError);
        cfg = {};
        cfg.scalar_pool = {0};
        CHECK_THROWS_AS(cfg.check(), InputError);
    }

    TEST_CASE("sampling is deterministic and valid") {
        SampleConfig cfg;
        cfg.seed = 9;
        cfg.count = 10;
        for (const auto& q : {QuiverPresentation::sphere(), QuiverPresentation::torus()}) {
            const auto first = sample_representations(q, cfg);
            const auto second = sample_representations(q, cfg);
            REQUIRE(first.size() == 10);
            for (std::size_t i = 0; i < first.size(); ++i) {
                CHECK(io::to_json(first[i]) == io::to_json(second[i]));
                CHECK(validate_representation(first[i]));
            }
        }
        const QuiverPresentation other("loop", {{"x", 0, false}}, {});
        CHECK_THROWS_AS(sample_representation(other, cfg, 0), InputError);
    }

    TEST_CASE("torus samples commute") {
        SampleConfig cfg;
        cfg.seed = 3;
        cfg.count = 200;
        for (const auto& r : sample_representations(QuiverPresentation::torus(), cfg)) {
            const auto& m = r.map("m");
            const auto& n = r.map("n");
            CHECK(compose(m, n) == compose(n, m));
            CHECK(is_invertible(m));
            CHECK(is_invertible(n));
        }
    }

    TEST_CASE("concentrated lemma") {
        SUBCASE("adjacent lines, any loop: gap four") {
            for (int a = -2; a <= 2; ++a) {
                const auto r = sphere_rep(GradedVectorSpace({{0, 1}, {1, 1}}), {{1, RationalMatrix{{a}}}});
                const auto hf = floer_cohomology(r, r);
                CHECK(hf.dim(-1) != 0);
                CHECK(hf.dim(3) != 0);
                const auto outcome = check_concentrated_lemma(r);
                CHECK_FALSE(outcome.skipped);
                CHECK_FALSE(outcome.violation.has_value());
            }
        }
        SUBCASE("concentrated spaces are skipped") {
            CHECK(check_concentrated_lemma(builtin::concentrated_sphere_rep(1, 2)).skipped);
            CHECK(check_concentrated_lemma(sphere_rep(GradedVectorSpace())).skipped);
        }
        SUBCASE("R^2 at 0 and R at 2, against the oracle") {
            const auto r = sphere_rep(GradedVectorSpace({{0, 2}, {2, 1}}));
            const std::map<int, std::size_t> expected{{-2, 2}, {0, 7}, {2, 7}, {4, 2}};
            CHECK(oracle::hom_cohomology(r, r) == expected);
            CHECK(floer_cohomology(r, r).dims == expected);
            CHECK_FALSE(check_concentrated_lemma(r).violation.has_value());
        }
        SUBCASE("sampled sweep") {
            SampleConfig cfg;
            cfg.seed = 7;
            cfg.count = 200;
            const auto report = check_concentrated_lemma(cfg);
            CHECK(report.passed());
            CHECK(report.samples_checked == 200);
            CHECK(report.samples_skipped > 0);
        }
    }

    TEST_CASE("sphere theorem") {
        SUBCASE("R in any single degree gives sphere cohomology") {
            for (int s : {-2, 0, 3}) {
                const auto r = builtin::concentrated_sphere_rep(s, 1);
                CHECK(floer_cohomology(r, r).dims == std::map<int, std::size_t>{{0, 1}, {2, 1}});
                const auto outcome = check_sphere_theorem(r);
                CHECK_FALSE(outcome.violation.has_value());
                CHECK(std::count(outcome.tallies.begin(), outcome.tallies.end(), "sphere") == 1);
            }
        }
        SUBCASE("R^2 at 0 has HF^0 = R^4 and is not a sphere") {
            const auto r = builtin::concentrated_sphere_rep(0, 2);
            CHECK(floer_cohomology(r, r).dim(0) == 4);
            const auto outcome = check_sphere_theorem(r);
            CHECK_FALSE(outcome.violation.has_value());
            CHECK(std::count(outcome.tallies.begin(), outcome.tallies.end(), "sphere") == 0);
        }
        SUBCASE("non-concentrated samples leave [0, 2]") {
            const auto r = sphere_rep(GradedVectorSpace({{0, 1}, {1, 1}}), {{1, RationalMatrix{{1}}}});
            const auto outcome = check_sphere_theorem(r);
            CHECK_FALSE(outcome.violation.has_value());
            CHECK(outcome.tallies == std::vector<std::string>{"non_surface"});
        }
        SUBCASE("sampled sweep") {
            SampleConfig cfg;
            cfg.seed = 5;
            cfg.count = 300;
            const auto report = check_sphere_theorem(cfg);
            CHECK(report.passed());
            CHECK(report.tallies.at("sphere") > 0);
            CHECK(report.tallies.at("non_surface") > 0);
        }
    }

    TEST_CASE("torus theorem") {
        const auto line = GradedVectorSpace::concentrated(0, 1);
        const auto identity = torus_rep(line, {{0, RationalMatrix::identity(1)}}, {{0, RationalMatrix::identity(1)}});
        CHECK(euler_of_hom(identity, identity) == 0);
        CHECK_FALSE(check_torus_theorem(identity).violation.has_value());

        const auto plane = GradedVectorSpace::concentrated(0, 2);
        const auto diagonal = torus_rep(plane, {{0, RationalMatrix{{1, 0}, {0, 2}}}}, {{0, RationalMatrix{{3, 0}, {0, 1}}}});
        REQUIRE(validate_representation(diagonal));
        CHECK(euler_of_hom(diagonal, diagonal) == 0);

        SampleConfig cfg;
        cfg.seed = 11;
        cfg.count = 100;
        for (const auto& r : sample_representations(QuiverPresentation::torus(), cfg)) {
            CHECK(four_summand_euler(r) == 0);
            CHECK(euler_of_hom(r, r) == four_summand_euler(r));
        }
        CHECK(check_torus_theorem(cfg).passed());
    }

    TEST_CASE("exhaustive enumeration") {
        EnumerationConfig cfg;
        cfg.max_total_dim = 1;
        cfg.degree_lo = 0;
        cfg.degree_hi = 1;
        cfg.scalar_pool = {-1, 0, 1};
        // The zero space plus R at 0 and R at 1; z has no room to be nonzero.
        CHECK(enumerate_representations(QuiverPresentation::sphere(), cfg).size() == 3);

        cfg.max_total_dim = 2;
        // Adds R^2 at 0, R^2 at 1, and R at 0 + R at 1 with z in {-1, 0, 1}.
        CHECK(enumerate_representations(QuiverPresentation::sphere(), cfg).size() == 3 + 2 + 3);

        cfg.max_total_dim = 1;
        cfg.scalar_pool = {-1, 1, 2};
        // m, n scalars on one line: 3 * 3 choices per degree.
        CHECK(enumerate_representations(QuiverPresentation::torus(), cfg).size() == 1 + 2 * 9);
    }

    TEST_CASE("reports are identical across thread counts") {
        SampleConfig cfg;
        cfg.seed = 42;
        cfg.count = 60;
        const auto serial = check_torus_theorem(cfg, 1);
        const auto parallel = check_torus_theorem(cfg, 4);
        CHECK(serial == parallel);
        CHECK(io::to_json(serial).dump() == io::to_json(parallel).dump());
        CHECK(check_sphere_theorem(cfg, 1) == check_sphere_theorem(cfg, 3));
        CHECK(check_concentrated_lemma(cfg, 1) == check_concentrated_lemma(cfg, 3));
    }

    TEST_CASE("violations are collected, not thrown") {
        // Over a non-commuting pair the check reports instead of throwing.
        const auto plane = GradedVectorSpace::concentrated(0, 2);
        const auto bad = torus_rep(plane, {{0, RationalMatrix{{1, 1}, {0, 1}}}}, {{0, RationalMatrix{{1, 0}, {1, 1}}}});
        const std::vector<Representation> reps{builtin::torus_zero_section(), bad};
        const auto report = run_check("torus", reps, &check_torus_theorem);
        CHECK(report.samples_checked == 2);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].index == 1);
        CHECK_FALSE(report.passed());
        CHECK(report.to_text().find("FAIL") != std::string::npos);
    }
}
