#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "posy/rational.hpp"

// Colorful interior of three compact convex polygons in the plane, computed exactly
// from the three tangent lines: H_i touches the two other polygons and strictly
// separates them from polygon i; the colorful interior is the open triangle bounded
// by H_1, H_2, H_3.
namespace posy::geometry3 {

using Point2 = std::array<Rational, 2>;

QVector to_vector(const Point2& p);
Point2 to_point(const QVector& v);

/// Vertices of a compact convex polygon in strictly convex position, counterclockwise.
/// One vertex (a point) and two distinct vertices (a segment) are accepted.
class Polygon {
public:
    /// Throws InvalidInput unless the vertices are in convex position and counterclockwise.
    explicit Polygon(std::vector<Point2> vertices);
    /// Convex hull of arbitrary points (collinear and repeated points removed).
    static Polygon hull(std::vector<Point2> points);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::vector<QVector> as_vectors() const;

private:
    std::vector<Point2> vertices_;
};

/// Line {x : <h,x> + 1 = 0} through x and y: with x = (a,b), y = (a',b'),
/// x ^ y = (ab' - a'b)^{-1} (b - b', a' - a). Throws DegenerateWedge when ab' - a'b = 0.
Point2 wedge(const Point2& x, const Point2& y);

/// Oriented line {x : <normal,x> + offset = 0}; H^> is the side where the value is positive.
/// Kept canonical: |offset| = 1 when offset != 0, otherwise the first nonzero normal entry is +-1.
struct Line {
    Point2 normal;
    Rational offset;

    /// Line through two distinct points, built from wedge. When the line passes through
    /// the origin the configuration is translated until wedge is defined, then mapped back.
    static Line through(const Point2& u, const Point2& v);

    Rational value(const Point2& x) const { return normal[0] * x[0] + normal[1] * x[1] + offset; }
    Line flipped() const;
    /// Same line expressed in coordinates shifted by t (x' = x + t).
    Line translated(const Point2& t) const;
    /// h with <h,x> + 1 = 0 on the line; empty for lines through the origin.
    std::optional<Point2> affine_normal() const;
    bool operator==(const Line&) const = default;

    void canonicalize();
};

struct TangentLine {
    Line line;                 ///< polygon `separated` lies in the open positive side
    std::size_t separated = 0;
    /// For j != separated: lexicographically smallest vertex of polygon j on the line.
    std::array<std::optional<Point2>, 3> touching;

    std::optional<Point2> h() const { return line.affine_normal(); }
};

/// H_i for color i (0-based). Enumerates vertex pairs of the two other polygons.
/// Throws NoTangent when no pair gives a qualifying line.
TangentLine tangent_line(std::size_t i, const std::array<Polygon, 3>& polys);

struct ColorfulSimplex {
    std::array<Point2, 3> vertices;  ///< vertices[k] = H_i n H_j, {i,j,k} = {0,1,2}
    std::array<TangentLine, 3> tangents;

    Point2 barycenter() const;
    /// Strictly inside the open triangle, i.e. on the positive side of all three lines.
    bool contains(const Point2& x) const;
};

enum class SimplexFailure { None, NoTangent, Degenerate, EmptyInterior };

const char* to_string(SimplexFailure failure);

struct SimplexResult {
    std::optional<ColorfulSimplex> simplex;
    SimplexFailure failure = SimplexFailure::None;
    std::optional<std::size_t> color;  ///< NoTangent: the color whose tangent is missing
};

SimplexResult colorful_simplex(const std::array<Polygon, 3>& polys);

/// Vertex lists of the polygons, in color order.
std::vector<std::vector<QVector>> vertex_sets(const std::array<Polygon, 3>& polys);

/// True iff the leave-one-out hulls conv(union_{j != i} S_j) have no common point; one LP
/// with a convex-combination block per i, all tied to a shared point. n >= 2 sets in Q^{n-1}.
bool hat_intersection_empty(const std::vector<std::vector<QVector>>& sets);

/// Membership oracle for intersection_{j != i} conv(union_{k != j} S_k).
class BarSet {
public:
    BarSet(std::size_t color, std::vector<std::vector<QVector>> hulls)
        : color_(color), hulls_(std::move(hulls)) {}
    bool contains(const QVector& x) const;
    std::size_t color() const { return color_; }

private:
    std::size_t color_;
    std::vector<std::vector<QVector>> hulls_;
};

std::vector<BarSet> bar_sets(const std::vector<std::vector<QVector>>& sets);

}  // namespace posy::geometry3
