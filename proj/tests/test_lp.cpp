#include <doctest.h>

#include "posy/errors.hpp"
#include "posy/lp.hpp"
#include "support/support.hpp"

using namespace posy;
using lp::Status;

namespace {

void check_certificates(const lp::QProblem& p, const lp::QSolution& s) {
    const std::size_t n = p.dimension();
    const std::size_t m = p.rows.size();
    switch (s.status) {
        case Status::Optimal: {
            REQUIRE(s.x.size() == n);
            REQUIRE(s.dual.size() == m);
            Rational dual_value = 0;
            for (std::size_t k = 0; k < m; ++k) {
                CHECK(dot(p.rows[k], s.x) <= p.rhs[k]);
                CHECK(s.dual[k] >= 0);
                CHECK(s.dual[k] * (p.rhs[k] - dot(p.rows[k], s.x)) == 0);
                dual_value += s.dual[k] * p.rhs[k];
            }
            for (std::size_t j = 0; j < n; ++j) {
                Rational combo = 0;
                for (std::size_t k = 0; k < m; ++k) combo += s.dual[k] * p.rows[k][j];
                CHECK(combo == p.objective[j]);
            }
            CHECK(dot(p.objective, s.x) == s.value);
            CHECK(dual_value == s.value);
            break;
        }
        case Status::Infeasible: {
            REQUIRE(s.farkas.size() == m);
            Rational rhs = 0;
            for (std::size_t k = 0; k < m; ++k) {
                CHECK(s.farkas[k] >= 0);
                rhs += s.farkas[k] * p.rhs[k];
            }
            for (std::size_t j = 0; j < n; ++j) {
                Rational combo = 0;
                for (std::size_t k = 0; k < m; ++k) combo += s.farkas[k] * p.rows[k][j];
                CHECK(combo == 0);
            }
            CHECK(rhs == -1);
            break;
        }
        case Status::Unbounded: {
            REQUIRE(s.ray.size() == n);
            for (std::size_t k = 0; k < m; ++k) {
                CHECK(dot(p.rows[k], s.x) <= p.rhs[k]);
                CHECK(dot(p.rows[k], s.ray) <= 0);
            }
            CHECK(dot(p.objective, s.ray) == 1);
            break;
        }
    }
}

}  // namespace

TEST_CASE("one-constraint duality") {
    lp::QProblem p(1);
    p.objective = {-1};
    p.add_row({-1}, -3);
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.x == QVector{3});
    CHECK(s.dual == QVector{1});
    CHECK(s.value == -3);
}

TEST_CASE("free variable without rows is unbounded") {
    lp::QProblem p(1);
    p.objective = {1};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Unbounded);
    CHECK(s.ray == QVector{1});
}

TEST_CASE("0 <= -1 is infeasible with certificate (1,1)") {
    lp::QProblem p(1);
    p.add_row({1}, 0);
    p.add_row({-1}, -1);
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Infeasible);
    CHECK(s.farkas == QVector{1, 1});
}

TEST_CASE("feasible_point examples") {
    auto a = lp::feasible_point<Rational>({{1}, {-1}}, {1, 0});
    REQUIRE(a.point);
    CHECK((*a.point)[0] >= 0);
    CHECK((*a.point)[0] <= 1);
    auto b = lp::feasible_point<Rational>({{1}, {-1}}, {-1, 0});
    CHECK_FALSE(b.point);
    CHECK(b.farkas.size() == 2);
    // rows of LP(y) for S_1 = {(-1,0) c=1, (-1,1) c=0}, S_2 = {(0,-1) c=0}
    QMatrix rows{{-1, 0}, {-1, 1}, {0, -1}};
    QVector rhs{-1, 0, 0};
    auto c = lp::feasible_point(rows, rhs);
    REQUIRE(c.point);
    for (std::size_t k = 0; k < 3; ++k) CHECK(dot(rows[k], *c.point) <= rhs[k]);
    for (std::size_t k = 0; k < 3; ++k) CHECK(dot(rows[k], QVector{1, 0}) <= rhs[k]);
}

TEST_CASE("random rational LPs: certificates, duality, vertex oracle") {
    testing::Rng rng(2024);
    int statuses[3] = {0, 0, 0};
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        auto p = testing::random_lp(rng, n, m);
        auto s = lp::solve(p);
        ++statuses[static_cast<int>(s.status)];
        check_certificates(p, s);
        if (n <= 3 && s.status == Status::Optimal) {
            auto best = testing::vertex_enumeration_max(p);
            if (best) CHECK(*best == s.value);
        }
        if (s.status != Status::Optimal && n <= 3 && m >= n) {
            // no feasible vertex can beat an unbounded LP; an infeasible one has none
            if (s.status == Status::Infeasible) CHECK_FALSE(testing::vertex_enumeration_max(p));
        }
    }
    CHECK(statuses[0] > 50);
    CHECK(statuses[1] > 10);
    CHECK(statuses[2] > 10);
}

TEST_CASE("float mode agrees with rational mode") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        auto p = testing::random_lp(rng, n, 2 * n + 2);
        auto exact = lp::solve(p);
        lp::DProblem d(n);
        d.objective = to_double(p.objective);
        for (std::size_t k = 0; k < p.rows.size(); ++k) d.add_row(to_double(p.rows[k]), to_double(p.rhs[k]));
        auto approx = lp::solve(d);
        REQUIRE(approx.status == exact.status);
        if (exact.status == Status::Optimal) CHECK(std::abs(approx.value - to_double(exact.value)) <= 1e-9 * (1 + std::abs(approx.value)));
    }
}

TEST_CASE("Beale's cycling example terminates under both rules") {
    // min -3/4 w4 + 20 w5 - 1/2 w6 + 6 w7, slacks w1..w3
    lp::StandardProblem<Rational> p;
    p.a = {{1, 0, 0, Rational(1, 4), -8, -1, 9}, {0, 1, 0, Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0, 0, 1, 0}};
    p.b = {0, 0, 1};
    p.c = {0, 0, 0, Rational(-3, 4), 20, Rational(-1, 2), 6};
    for (auto rule : {lp::PivotRule::Bland, lp::PivotRule::LargestCoefficient}) {
        auto s = lp::solve_standard(p, {rule, 0});
        REQUIRE(s.status == Status::Optimal);
        CHECK(s.value == Rational(-5, 4));
    }
    lp::StandardProblem<double> d;
    for (const auto& row : p.a) d.a.push_back(to_double(row));
    d.b = to_double(p.b);
    d.c = to_double(p.c);
    auto s = lp::solve_standard(d);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.value == doctest::Approx(-1.25));
}

TEST_CASE("Chvatal's cycling example terminates") {
    // max 10x1 - 57x2 - 9x3 - 24x4, x >= 0 written as rows
    lp::QProblem p(4);
    p.objective = {10, -57, -9, -24};
    p.add_row({Rational(1, 2), Rational(-11, 2), Rational(-5, 2), 9}, 0);
    p.add_row({Rational(1, 2), Rational(-3, 2), Rational(-1, 2), 1}, 0);
    p.add_row({1, 0, 0, 0}, 1);
    for (std::size_t j = 0; j < 4; ++j) {
        QVector r(4, Rational(0));
        r[j] = -1;
        p.add_row(r, 0);
    }
    for (auto rule : {lp::PivotRule::Bland, lp::PivotRule::LargestCoefficient}) {
        auto s = lp::solve(p, {rule, 0});
        REQUIRE(s.status == Status::Optimal);
        CHECK(s.value == 1);
        check_certificates(p, s);
    }
}

TEST_CASE("row length mismatch is rejected") {
    lp::QProblem p(2);
    p.add_row({1}, 0);
    CHECK_THROWS_AS(lp::solve(p), DimensionMismatch);
}
