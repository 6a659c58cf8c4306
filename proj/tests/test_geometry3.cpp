#include <doctest.h>

#include "posy/colorful.hpp"
#include "posy/errors.hpp"
#include "posy/geometry3.hpp"
#include "posy/lp.hpp"
#include "support/support.hpp"

using namespace posy;
using namespace posy::geometry3;

namespace {

Polygon dot_at(Rational x, Rational y) { return Polygon({Point2{x, y}}); }

Point2 dec(const char* x, const char* y) { return {parse_rational(x, true), parse_rational(y, true)}; }

// Three pairwise disjoint polygons whose leave-one-out hulls still share a point.
std::array<Polygon, 3> interlocking() {
    return {Polygon::hull({dec("4.03", "-3.53"), dec("7.96", "-0.95"), dec("4.93", "1.10"), dec("2.75", "0.26")}),
            Polygon::hull({dec("15.47", "-5.26"), dec("13.85", "-0.45"), dec("11.15", "-1.96"), dec("11.36", "-4.05")}),
            Polygon::hull({dec("5.72", "-9.60"), dec("4.73", "-7.49"), dec("2.93", "-5.29"), dec("1.76", "-7.44"),
                           dec("3.13", "-9.26")})};
}

// conv(a) and conv(b) share a point.
bool hulls_meet(const std::vector<QVector>& a, const std::vector<QVector>& b) {
    lp::StandardProblem<Rational> p;
    const std::size_t cols = a.size() + b.size();
    p.c.assign(cols, Rational(0));
    for (int d = 0; d < 2; ++d) {
        QVector row;
        for (const auto& v : a) row.push_back(v[d]);
        for (const auto& v : b) row.push_back(-v[d]);
        p.a.push_back(row);
        p.b.push_back(0);
    }
    QVector ra(cols, Rational(0)), rb(cols, Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) ra[k] = 1;
    for (std::size_t k = 0; k < b.size(); ++k) rb[a.size() + k] = 1;
    p.a.push_back(ra);
    p.a.push_back(rb);
    p.b.push_back(1);
    p.b.push_back(1);
    return lp::solve_standard(p).status == lp::Status::Optimal;
}

void check_tangent(const TangentLine& t, const std::array<Polygon, 3>& polys) {
    for (std::size_t j = 0; j < 3; ++j) {
        Rational top;
        bool first = true;
        for (const auto& v : polys[j].vertices()) {
            const Rational val = t.line.value(v);
            if (j == t.separated) CHECK(val > 0);
            else CHECK(val <= 0);
            if (first || val > top) top = val;
            first = false;
        }
        if (j != t.separated) {
            CHECK(top == 0);
            REQUIRE(t.touching[j]);
            CHECK(t.line.value(*t.touching[j]) == 0);
        }
    }
}

Line image(const Line& l, const Rational& k, const Point2& t) {
    // x' = M x + t, M = [[1,k],[0,1]]; n.x + o = n.M^{-1}(x' - t) + o
    Line out;
    out.normal = {l.normal[0], l.normal[1] - k * l.normal[0]};
    out.offset = l.offset - (out.normal[0] * t[0] + out.normal[1] * t[1]);
    out.canonicalize();
    return out;
}

}  // namespace

TEST_CASE("wedge examples") {
    CHECK(wedge({1, 0}, {0, 1}) == Point2{-1, -1});
    CHECK(wedge({2, 0}, {0, 2}) == Point2{Rational(-1, 2), Rational(-1, 2)});
    CHECK_THROWS_AS(wedge({1, 0}, {2, 0}), DegenerateWedge);
    testing::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        Point2 x{testing::random_rational(rng, -5, 5, 6), testing::random_rational(rng, -5, 5, 6)};
        Point2 y{testing::random_rational(rng, -5, 5, 6), testing::random_rational(rng, -5, 5, 6)};
        if (x[0] * y[1] - y[0] * x[1] == 0) continue;
        Point2 h = wedge(x, y);
        CHECK(h[0] * x[0] + h[1] * x[1] + 1 == 0);
        CHECK(h[0] * y[0] + h[1] * y[1] + 1 == 0);
    }
}

TEST_CASE("polygon validation and hull") {
    CHECK_THROWS_AS(Polygon({Point2{0, 0}, Point2{0, 1}, Point2{1, 0}}), InvalidInput);  // clockwise
    CHECK_THROWS_AS(Polygon({Point2{0, 0}, Point2{1, 0}, Point2{2, 0}}), InvalidInput);  // collinear
    auto h = Polygon::hull({Point2{0, 0}, Point2{2, 0}, Point2{1, 0}, Point2{0, 2}, Point2{1, 1}, Point2{0, 0}});
    CHECK(h.vertices().size() == 3);
    CHECK(Polygon::hull({Point2{1, 1}, Point2{1, 1}}).vertices().size() == 1);
}

TEST_CASE("Line::through handles lines through the origin") {
    auto l = Line::through({1, 1}, {2, 2});
    CHECK(l.value({3, 3}) == 0);
    CHECK(l.value({1, 0}) != 0);
    CHECK_FALSE(l.affine_normal());
    auto m = Line::through({1, 0}, {0, 1});
    REQUIRE(m.affine_normal());
    CHECK(*m.affine_normal() == Point2{-1, -1});
}

TEST_CASE("tangent lines of three points") {
    std::array<Polygon, 3> polys{dot_at(1, 1), dot_at(2, 1), dot_at(1, 2)};
    auto t0 = tangent_line(0, polys);
    REQUIRE(t0.h());
    CHECK(*t0.h() == Point2{Rational(-1, 3), Rational(-1, 3)});
    check_tangent(t0, polys);
    auto t1 = tangent_line(1, polys);
    REQUIRE(t1.h());
    CHECK(*t1.h() == Point2{-1, 0});  // x = 1
    check_tangent(t1, polys);
    check_tangent(tangent_line(2, polys), polys);
}

TEST_CASE("colorful simplex of three points is the triangle itself") {
    std::array<Polygon, 3> polys{dot_at(1, 1), dot_at(2, 1), dot_at(1, 2)};
    auto r = colorful_simplex(polys);
    REQUIRE(r.simplex);
    CHECK(r.simplex->vertices[0] == Point2{1, 1});
    CHECK(r.simplex->vertices[1] == Point2{2, 1});
    CHECK(r.simplex->vertices[2] == Point2{1, 2});
    CHECK(r.failure == SimplexFailure::None);
}

TEST_CASE("repeated point has no tangent") {
    std::array<Polygon, 3> polys{dot_at(1, 1), dot_at(1, 1), dot_at(1, 1)};
    auto r = colorful_simplex(polys);
    CHECK_FALSE(r.simplex);
    CHECK(r.failure == SimplexFailure::NoTangent);
    CHECK_THROWS_AS(tangent_line(0, polys), NoTangent);
}

TEST_CASE("far triangles: tangent invariants and the triple product formula") {
    std::array<Polygon, 3> polys{Polygon({Point2{0, 0}, Point2{2, 0}, Point2{1, 1}}),
                                 Polygon({Point2{10, 0}, Point2{12, 0}, Point2{11, 2}}),
                                 Polygon({Point2{5, 9}, Point2{7, 9}, Point2{6, 11}})};
    auto r = colorful_simplex(polys);
    REQUIRE(r.simplex);
    for (const auto& t : r.simplex->tangents) check_tangent(t, polys);
    const auto& s = *r.simplex;
    // s_3 = h_1 ^ (x_2^3 ^ x_2^1), expanded
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;  // s_k lies on H_i and H_j
        auto hi = s.tangents[i].h();
        if (!hi) continue;
        const Point2 a = *s.tangents[j].touching[k];
        const Point2 b = *s.tangents[j].touching[i];
        const Rational va = (*hi)[0] * b[0] + (*hi)[1] * b[1] + 1;
        const Rational vb = (*hi)[0] * a[0] + (*hi)[1] * a[1] + 1;
        CHECK(va * vb <= 0);
        const Point2 formula{(va * a[0] - vb * b[0]) / (va - vb), (va * a[1] - vb * b[1]) / (va - vb)};
        CHECK(formula == s.vertices[k]);
    }
    auto sets = vertex_sets(polys);
    CHECK(colorful::affine_colorful_membership(to_vector(s.barycenter()), sets).inside());
    CHECK(hat_intersection_empty(sets));
}

TEST_CASE("interlocking layout: separated sets with empty colorful interior") {
    auto polys = interlocking();
    auto sets = vertex_sets(polys);
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i) others.insert(others.end(), sets[j].begin(), sets[j].end());
        CHECK_FALSE(hulls_meet(sets[i], others));
    }
    auto r = colorful_simplex(polys);
    CHECK_FALSE(r.simplex);
    CHECK(r.failure != SimplexFailure::None);
    CHECK_FALSE(hat_intersection_empty(sets));
    // no grid point of the bounding box is colorful
    for (int gx = 0; gx <= 32; ++gx)
        for (int gy = 0; gy <= 32; ++gy) {
            QVector x{Rational(1) + Rational(15 * gx, 32), Rational(-10) + Rational(12 * gy, 32)};
            CHECK_FALSE(colorful::affine_colorful_membership(x, sets).inside());
        }
}

TEST_CASE("hat_intersection_empty examples") {
    CHECK(hat_intersection_empty({{{0, 0}}, {{1, 0}}, {{0, 1}}}));
    CHECK_FALSE(hat_intersection_empty({{{0, 0}}, {{0, 0}}, {{1, 0}}}));
    CHECK(hat_intersection_empty({{{0}}, {{1}}}));
}

TEST_CASE("bar_sets examples") {
    auto bars = bar_sets({{{0, 0}}, {{1, 0}}, {{0, 1}}});
    REQUIRE(bars.size() == 3);
    CHECK(bars[0].contains({0, 0}));
    CHECK_FALSE(bars[0].contains({1, 0}));
    CHECK_FALSE(bars[0].contains({10, 10}));
    CHECK(bars[1].contains({1, 0}));
}

TEST_CASE("random instances: simplex exactly when the leave-one-out hulls are disjoint") {
    testing::Rng rng(99);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto polys = testing::random_polygon_triple(rng);
        auto sets = vertex_sets(polys);
        auto r = colorful_simplex(polys);
        CHECK(r.simplex.has_value() == hat_intersection_empty(sets));
        if (!r.simplex) continue;
        ++found;
        for (const auto& t : r.simplex->tangents) check_tangent(t, polys);
        for (int k = 0; k < 25; ++k) {
            auto x = testing::interior_point(rng, r.simplex->vertices);
            CHECK(colorful::affine_colorful_membership(to_vector(x), sets).inside());
            auto y = testing::exterior_point(rng, *r.simplex);
            CHECK_FALSE(colorful::affine_colorful_membership(to_vector(y), sets).inside());
        }
    }
    CHECK(found > 5);
    CHECK(found < 40);
}

TEST_CASE("tangent lines are unique under shear and translation") {
    testing::Rng rng(17);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto polys = testing::random_polygon_triple(rng);
        auto r = colorful_simplex(polys);
        if (!r.simplex) continue;
        const Rational k = testing::random_rational(rng, -2, 2, 5);
        const Point2 t{testing::random_rational(rng, -9, 9, 7), testing::random_rational(rng, -9, 9, 7)};
        std::array<std::vector<Point2>, 3> moved;
        for (std::size_t i = 0; i < 3; ++i)
            for (const auto& v : polys[i].vertices()) moved[i].push_back(testing::shear_translate(v, k, t));
        std::array<Polygon, 3> image_polys{Polygon::hull(moved[0]), Polygon::hull(moved[1]), Polygon::hull(moved[2])};
        for (std::size_t i = 0; i < 3; ++i) {
            auto original = tangent_line(i, polys);
            auto transformed = tangent_line(i, image_polys);
            CHECK(transformed.line == image(original.line, k, t));
        }
        ++checked;
    }
    CHECK(checked > 3);
}
