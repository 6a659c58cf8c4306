#include "posy/geometry3.hpp"

#include <algorithm>

#include "posy/colorful.hpp"
#include "posy/errors.hpp"
#include "posy/lp.hpp"

namespace posy::geometry3 {

QVector to_vector(const Point2& p) { return {p[0], p[1]}; }

Point2 to_point(const QVector& v) {
    if (v.size() != 2) throw DimensionMismatch("expected a point in the plane");
    return {v[0], v[1]};
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point2 add(const Point2& a, const Point2& b) { return {a[0] + b[0], a[1] + b[1]}; }
Point2 sub(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }

// Offsets tried, in order, to move a line off the origin. Two translations along (1,1)
// leave only the diagonal x = y degenerate; (1,2) handles it.
const std::array<Point2, 4>& shifts() {
    static const std::array<Point2, 4> s{{{0, 0}, {1, 1}, {2, 2}, {1, 2}}};
    return s;
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw InvalidInput("polygon needs at least one vertex");
    if (n == 2 && vertices_[0] == vertices_[1]) throw InvalidInput("segment endpoints coincide");
    if (n < 3) return;
    for (std::size_t e = 0; e < n; ++e) {
        const Point2& a = vertices_[e];
        const Point2& b = vertices_[(e + 1) % n];
        for (std::size_t k = 0; k < n; ++k) {
            if (k == e || k == (e + 1) % n) continue;
            if (cross(a, b, vertices_[k]) <= 0)
                throw InvalidInput("polygon vertices are not in strictly convex counterclockwise position");
        }
    }
}

Polygon Polygon::hull(std::vector<Point2> points) {
    if (points.empty()) throw InvalidInput("hull of an empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return Polygon(std::move(points));
    std::vector<Point2> h(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    return Polygon(std::move(h));
}

std::vector<QVector> Polygon::as_vectors() const {
    std::vector<QVector> out;
    for (const auto& v : vertices_) out.push_back(to_vector(v));
    return out;
}

Point2 wedge(const Point2& x, const Point2& y) {
    const Rational det = x[0] * y[1] - y[0] * x[1];
    if (det == 0) throw DegenerateWedge("wedge: the two points are collinear with the origin");
    return {(x[1] - y[1]) / det, (y[0] - x[0]) / det};
}

void Line::canonicalize() {
    Rational scale = boost::multiprecision::abs(offset);
    if (scale == 0) scale = boost::multiprecision::abs(normal[0] != 0 ? normal[0] : normal[1]);
    if (scale == 0) throw InvalidInput("line with zero normal");
    normal[0] /= scale;
    normal[1] /= scale;
    offset /= scale;
}

Line Line::through(const Point2& u, const Point2& v) {
    if (u == v) throw InvalidInput("line through two equal points");
    for (const auto& t : shifts()) {
        try {
            Point2 h = wedge(add(u, t), add(v, t));
            // <h, x + t> + 1 = 0  <=>  <h,x> + (<h,t> + 1) = 0
            Line l{h, h[0] * t[0] + h[1] * t[1] + 1};
            l.canonicalize();
            return l;
        } catch (const DegenerateWedge&) {
        }
    }
    throw InternalInvariant("Line::through: no translation made the wedge defined");
}

Line Line::flipped() const { return Line{{-normal[0], -normal[1]}, -offset}; }

Line Line::translated(const Point2& t) const {
    Line l{normal, offset - normal[0] * t[0] - normal[1] * t[1]};
    l.canonicalize();
    return l;
}

std::optional<Point2> Line::affine_normal() const {
    if (offset == 0) return std::nullopt;
    return Point2{normal[0] / offset, normal[1] / offset};
}

TangentLine tangent_line(std::size_t i, const std::array<Polygon, 3>& polys) {
    if (i > 2) throw InvalidInput("tangent_line: color index out of range");
    const std::size_t j = i == 0 ? 1 : 0;
    const std::size_t k = i == 2 ? 1 : 2;
    const auto& own = polys[i].vertices();

    for (const auto& u : polys[j].vertices()) {
        for (const auto& v : polys[k].vertices()) {
            if (u == v) continue;
            Line line = Line::through(u, v);
            const Rational first = line.value(own.front());
            if (first == 0) continue;
            if (first < 0) line = line.flipped();
            bool ok = std::all_of(own.begin(), own.end(), [&](const Point2& p) { return line.value(p) > 0; });
            for (std::size_t other : {j, k})
                for (const auto& p : polys[other].vertices()) ok = ok && line.value(p) <= 0;
            if (!ok) continue;

            TangentLine t{line, i, {}};
            for (std::size_t other : {j, k})
                for (const auto& p : polys[other].vertices())  // vertices are not sorted; keep the minimum
                    if (line.value(p) == 0 && (!t.touching[other] || p < *t.touching[other])) t.touching[other] = p;
            return t;
        }
    }
    throw NoTangent(i, "no line touches both other polygons while strictly separating polygon " +
                           std::to_string(i + 1));
}

Point2 ColorfulSimplex::barycenter() const {
    return {(vertices[0][0] + vertices[1][0] + vertices[2][0]) / 3,
            (vertices[0][1] + vertices[1][1] + vertices[2][1]) / 3};
}

bool ColorfulSimplex::contains(const Point2& x) const {
    return std::all_of(tangents.begin(), tangents.end(), [&](const TangentLine& t) { return t.line.value(x) > 0; });
}

const char* to_string(SimplexFailure failure) {
    switch (failure) {
        case SimplexFailure::None: return "none";
        case SimplexFailure::NoTangent: return "no-tangent";
        case SimplexFailure::Degenerate: return "degenerate";
        case SimplexFailure::EmptyInterior: return "empty-interior";
    }
    return "unknown";
}

std::vector<std::vector<QVector>> vertex_sets(const std::array<Polygon, 3>& polys) {
    return {polys[0].as_vectors(), polys[1].as_vectors(), polys[2].as_vectors()};
}

SimplexResult colorful_simplex(const std::array<Polygon, 3>& polys) {
    SimplexResult result;
    std::array<TangentLine, 3> tangents;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            tangents[i] = tangent_line(i, polys);
        } catch (const NoTangent& e) {
            result.failure = SimplexFailure::NoTangent;
            result.color = e.color();
            return result;
        }
    }

    // Work in a frame where no tangent line passes through the origin, so every line has
    // an affine normal h_i and H_i n H_j = h_i ^ h_j.
    std::optional<Point2> shift;
    for (Rational k = 0; k <= 4 && !shift; ++k) {
        for (const Point2& t : {Point2{k, k}, Point2{k, 2 * k}}) {
            bool clear = std::all_of(tangents.begin(), tangents.end(),
                                     [&](const TangentLine& tl) { return tl.line.translated(t).offset != 0; });
            if (clear) {
                shift = t;
                break;
            }
        }
    }
    if (!shift) throw InternalInvariant("colorful_simplex: no frame avoids all three lines");

    std::array<Point2, 3> h;
    for (std::size_t i = 0; i < 3; ++i) h[i] = *tangents[i].line.translated(*shift).affine_normal();

    ColorfulSimplex simplex;
    simplex.tangents = tangents;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t a = (k + 1) % 3;
        const std::size_t b = (k + 2) % 3;
        try {
            simplex.vertices[k] = sub(wedge(h[a], h[b]), *shift);
        } catch (const DegenerateWedge&) {
            result.failure = SimplexFailure::Degenerate;  // parallel tangent lines
            return result;
        }
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const Rational side = tangents[k].line.value(simplex.vertices[k]);
        if (side == 0) {
            result.failure = SimplexFailure::Degenerate;
            return result;
        }
        if (side < 0) {
            result.failure = SimplexFailure::EmptyInterior;
            return result;
        }
    }
    if (!colorful::affine_colorful_membership(to_vector(simplex.barycenter()), vertex_sets(polys)).inside()) {
        result.failure = SimplexFailure::EmptyInterior;
        return result;
    }
    result.simplex = std::move(simplex);
    return result;
}

bool hat_intersection_empty(const std::vector<std::vector<QVector>>& sets) {
    const std::size_t n = sets.size();
    if (n < 2) throw InvalidInput("hat_intersection_empty: need at least two sets");
    const std::size_t d = n - 1;
    for (const auto& s : sets) {
        if (s.empty()) throw InvalidInput("hat_intersection_empty: empty set");
        for (const auto& v : s)
            if (v.size() != d) throw DimensionMismatch("hat_intersection_empty: sets must live in Q^{n-1}");
    }

    // Block i holds convex weights over the vertices of every set but i.
    std::vector<std::vector<const QVector*>> blocks(n);
    std::vector<std::size_t> start(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                for (const auto& v : sets[j]) blocks[i].push_back(&v);
        start[i + 1] = start[i] + blocks[i].size();
    }
    const std::size_t cols = start[n];

    lp::StandardProblem<Rational> p;
    p.c.assign(cols, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        QVector row(cols, Rational(0));
        for (std::size_t k = 0; k < blocks[i].size(); ++k) row[start[i] + k] = 1;
        p.a.push_back(std::move(row));
        p.b.push_back(1);
    }
    // Point of block i minus point of block 0 vanishes, coordinate by coordinate.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            QVector row(cols, Rational(0));
            for (std::size_t k = 0; k < blocks[i].size(); ++k) row[start[i] + k] += (*blocks[i][k])[r];
            for (std::size_t k = 0; k < blocks[0].size(); ++k) row[start[0] + k] -= (*blocks[0][k])[r];
            p.a.push_back(std::move(row));
            p.b.push_back(0);
        }
    }
    return lp::solve_standard(p).status == lp::Status::Infeasible;
}

bool BarSet::contains(const QVector& x) const {
    return std::all_of(hulls_.begin(), hulls_.end(),
                       [&](const std::vector<QVector>& h) { return colorful::convex_membership(x, h).member(); });
}

std::vector<BarSet> bar_sets(const std::vector<std::vector<QVector>>& sets) {
    const std::size_t n = sets.size();
    std::vector<BarSet> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<QVector>> hulls;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<QVector> hat;  // conv(union_{k != j} S_k)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) hat.insert(hat.end(), sets[k].begin(), sets[k].end());
            hulls.push_back(std::move(hat));
        }
        out.emplace_back(i, std::move(hulls));
    }
    return out;
}

}  // namespace posy::geometry3
