#pragma once

// Generators and brute-force oracles shared by the unit tests and the acceptance run.
// The oracles deliberately avoid the library's LP code paths.

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "posy/core.hpp"
#include "posy/geometry3.hpp"
#include "posy/gp.hpp"
#include "posy/lp.hpp"
#include "posy/satgen.hpp"

namespace posy::testing {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int lo, int hi, int max_den);
QVector random_int_vector(Rng& rng, std::size_t n, int lo, int hi);

/// Up to max_per_color integer vectors per color, entries in [lo, hi].
ColoredSupport random_support(Rng& rng, std::size_t n, std::size_t max_per_color, int lo, int hi);

/// Exponents with <a,z> < 0 for a hidden integer z; coefficients in [-5, 5] with
/// denominators up to 4.
TropicalSystem random_pointed_tropical(Rng& rng, std::size_t n, std::size_t max_terms);

/// maximize over up to m rows in dimension n, small integer data.
lp::QProblem random_lp(Rng& rng, std::size_t n, std::size_t m);

/// y in cone(gens) by Caratheodory: some linearly independent subset solves y = B mu
/// with mu >= 0.
bool brute_cone_member(const QVector& y, const std::vector<QVector>& gens);

/// y in cone(S) and, for every color i, y not in cone(S \ S_i).
bool brute_colorful(const QVector& y, const ColoredSupport& sup);

/// Maximum of the objective over all vertices (n linearly independent tight rows);
/// nullopt when no vertex is feasible or the rows have rank < n.
std::optional<Rational> vertex_enumeration_max(const lp::QProblem& p);

/// Three random polygons around the corners of a random triangle.
std::array<geometry3::Polygon, 3> random_polygon_triple(Rng& rng);

/// Random point of the open triangle (strictly positive barycentric weights).
geometry3::Point2 interior_point(Rng& rng, const std::array<geometry3::Point2, 3>& t);

/// Random point not in the open triangle; a third of them on its boundary.
geometry3::Point2 exterior_point(Rng& rng, const geometry3::ColorfulSimplex& s);

/// A polygon image under x -> M x + t with M = [[1, k], [0, 1]] (shear) then translation.
geometry3::Point2 shear_translate(const geometry3::Point2& p, const Rational& k, const geometry3::Point2& t);

/// Every clause set of size <= 3 over the 8 sign patterns on three variables, up to
/// permutation of the clause list (1 + 8 + 28 + 56 = 93 formulas).
std::vector<satgen::Cnf> exhaustive_cnf_corpus();

/// Planted classical systems whose support admits a colorful sum of one exponent per color.
struct PlantedCase {
    gp::Planted planted;
    QVector y;
};
std::vector<PlantedCase> planted_corpus(Rng& rng, std::size_t count, std::size_t max_dimension = 4);

}  // namespace posy::testing
