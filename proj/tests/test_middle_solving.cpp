#include <catch2/catch_amalgamated.hpp>

#include "gf2gb/f4.hpp"
#include "gf2gb/middle_solving.hpp"
#include "helpers.hpp"

using namespace gf2gb;
using testutil::poly;
using testutil::polys;

namespace {
const Ring xyz(std::vector<std::string>{"x", "y", "z"}, MonomialOrder::grevlex);
}

TEST_CASE("candidate extraction keeps univariate rows in order") {
    auto cands = extract_candidates(polys(xyz, {"x + 1", "x*y + z"}));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].first == poly(xyz, "x + 1"));
    CHECK(cands[0].second == 0);

    CHECK(extract_candidates({}).empty());

    auto both = extract_candidates(polys(xyz, {"y", "z + 1"}));
    REQUIRE(both.size() == 2);
    CHECK(both[0].second == 1);
    CHECK(both[1].second == 2);
}

TEST_CASE("unique-root solving") {
    auto one = solve_unique({{poly(xyz, "x + 1"), 0}});
    CHECK_FALSE(one.inconsistent);
    CHECK(one.assignments == std::map<std::size_t, int>{{0, 1}});

    auto both_roots = solve_unique({{poly(xyz, "x^2 + x"), 0}});
    CHECK_FALSE(both_roots.inconsistent);
    CHECK(both_roots.assignments.empty());

    auto conflict = solve_unique({{poly(xyz, "x"), 0}, {poly(xyz, "x + 1"), 0}});
    CHECK(conflict.inconsistent);

    auto rootless = solve_unique({{poly(xyz, "x^2 + x + 1"), 0}});
    CHECK(rootless.inconsistent);
}

TEST_CASE("renew substitutes, purges and cascades") {
    Basis basis;
    PairQueue queue;
    update(basis, queue, poly(xyz, "x*y + x"), xyz);
    update(basis, queue, poly(xyz, "x + 1"), xyz);
    RoundHistory history;
    Assignment assignment;

    auto out = renew(basis, queue, history, assignment, {{0, 1}}, xyz, RenewMode::recompute,
                     /*cascade=*/true, 1);
    CHECK_FALSE(out.inconsistent);
    // x = 1 turns xy + x into y + 1, whose unique root then clears the basis
    CHECK(out.newly_solved == 2);
    CHECK(assignment.solved == std::map<std::size_t, int>{{0, 1}, {1, 1}});
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK_FALSE(basis.entry(i).alive);
    CHECK(queue.empty());
}

TEST_CASE("renew without cascading stops after the substitution") {
    Basis basis;
    PairQueue queue;
    update(basis, queue, poly(xyz, "x*y + x"), xyz);
    update(basis, queue, poly(xyz, "x + 1"), xyz);
    RoundHistory history;
    Assignment assignment;

    auto out = renew(basis, queue, history, assignment, {{0, 1}}, xyz, RenewMode::recompute,
                     /*cascade=*/false, 1);
    CHECK_FALSE(out.inconsistent);
    CHECK(out.newly_solved == 1);
    CHECK(basis.entry(0).alive);
    CHECK(basis.poly(0) == poly(xyz, "y + 1"));
    CHECK_FALSE(basis.entry(1).alive);
}

TEST_CASE("renew detects a contradiction through the cascade") {
    Basis basis;
    PairQueue queue;
    update(basis, queue, poly(xyz, "x + y"), xyz);
    update(basis, queue, poly(xyz, "x + y + 1"), xyz);
    RoundHistory history;
    Assignment assignment;

    auto out = renew(basis, queue, history, assignment, {{0, 0}}, xyz, RenewMode::recompute,
                     /*cascade=*/true, 1);
    CHECK(out.inconsistent);
}

TEST_CASE("renew with an assignment touching nothing only records it") {
    Basis basis;
    PairQueue queue;
    update(basis, queue, poly(xyz, "x*y + 1"), xyz);
    RoundHistory history;
    Assignment assignment;

    auto out = renew(basis, queue, history, assignment, {{2, 1}}, xyz, RenewMode::recompute,
                     /*cascade=*/true, 1);
    CHECK_FALSE(out.inconsistent);
    CHECK(out.newly_solved == 1);
    CHECK(basis.poly(0) == poly(xyz, "x*y + 1"));
    CHECK(basis.entry(0).alive);
}

TEST_CASE("both renew modes preserve the variety") {
    testutil::Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.below(5);
        Ring ring(n, MonomialOrder::grevlex);
        auto sys = testutil::random_quadratic_system(rng.bits(), ring, n);
        auto truth = brute_force_variety(adjoin_field_equations(sys, ring), ring);
        for (RenewMode mode : {RenewMode::recompute, RenewMode::rebuild}) {
            SolverConfig cfg;
            cfg.algorithm = Algorithm::ms_f4;
            cfg.renew_mode = mode;
            auto res = f4_solve(sys, ring, cfg);
            auto got = testutil::reconstruct_solutions(res.basis, res.assignment, ring);
            CHECK(truth == got);
        }
    }
}

TEST_CASE("no live polynomial mentions a solved variable after a full run") {
    testutil::Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        Ring ring(4, MonomialOrder::grevlex);
        auto sys = testutil::random_quadratic_system(rng.bits(), ring, 4);
        SolverConfig cfg;
        cfg.algorithm = Algorithm::ms_f4;
        auto res = f4_solve(sys, ring, cfg);
        for (const Polynomial& p : res.basis)
            for (const Monomial& t : p.terms())
                for (const auto& [var, val] : res.assignment.solved)
                    CHECK(t.exponent(var) == 0);
    }
}

TEST_CASE("degeneration: no univariate information leaves ms identical to s") {
    // two free solutions, no forced variable anywhere
    for (auto texts : {std::vector<std::string>{"x + y"},
                       std::vector<std::string>{"x + y", "y + z", "x + z"}}) {
        auto sys = polys(xyz, texts);
        SolverConfig s_cfg;
        s_cfg.algorithm = Algorithm::s_f4;
        SolverConfig ms_cfg;
        ms_cfg.algorithm = Algorithm::ms_f4;
        auto s_res = f4_solve(sys, xyz, s_cfg);
        auto ms_res = f4_solve(sys, xyz, ms_cfg);
        CHECK(ms_res.stats.solved == 0);
        CHECK(ms_res.basis == s_res.basis);
        CHECK(ms_res.stats.c_pair == s_res.stats.c_pair);
        CHECK(ms_res.stats.l_matrix == s_res.stats.l_matrix);
        CHECK(ms_res.stats.reductor == s_res.stats.reductor);
        CHECK(ms_res.stats.round == s_res.stats.round);
        CHECK(ms_res.stats.gb_size == s_res.stats.gb_size);
    }
}

TEST_CASE("monotone growth of the assignment across a run") {
    // solved values, substituted into the original inputs together with any
    // completion from the output variety, must vanish
    testutil::Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        Ring ring(5, MonomialOrder::grevlex);
        auto sys = testutil::random_quadratic_system(rng.bits(), ring, 5);
        SolverConfig cfg;
        cfg.algorithm = Algorithm::ms_f4;
        auto res = f4_solve(sys, ring, cfg);
        if (res.inconsistent)
            continue;
        auto points = testutil::reconstruct_solutions(res.basis, res.assignment, ring);
        for (std::uint32_t point : points)
            for (const Polynomial& f : sys)
                CHECK(evaluate(f, point) == 0);
    }
}
