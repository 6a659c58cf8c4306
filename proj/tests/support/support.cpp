#include "support.hpp"

#include <algorithm>
#include <functional>

#include "posy/colorful.hpp"
#include "posy/linalg.hpp"

namespace posy::testing {

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
    const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
    const int num = std::uniform_int_distribution<int>(lo * den, hi * den)(rng);
    return Rational(num, den);
}

QVector random_int_vector(Rng& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    QVector v(n);
    for (auto& e : v) e = d(rng);
    return v;
}

ColoredSupport random_support(Rng& rng, std::size_t n, std::size_t max_per_color, int lo, int hi) {
    std::uniform_int_distribution<std::size_t> count(1, max_per_color);
    std::vector<std::vector<QVector>> colors(n);
    for (auto& c : colors) {
        const std::size_t k = count(rng);
        for (std::size_t j = 0; j < k; ++j) c.push_back(random_int_vector(rng, n, lo, hi));
    }
    return ColoredSupport(n, std::move(colors));
}

TropicalSystem random_pointed_tropical(Rng& rng, std::size_t n, std::size_t max_terms) {
    QVector z;
    do {
        z = random_int_vector(rng, n, -2, 2);
    } while (std::all_of(z.begin(), z.end(), [](const Rational& v) { return v == 0; }));
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    std::vector<std::vector<Term>> colors(n);
    for (auto& c : colors) {
        const std::size_t k = count(rng);
        while (c.size() < k) {
            QVector a = random_int_vector(rng, n, -3, 3);
            const Rational s = dot(a, z);
            if (s == 0) continue;
            if (s > 0)
                for (auto& e : a) e = -e;
            c.push_back({std::move(a), random_rational(rng, -5, 5, 4)});
        }
    }
    return TropicalSystem::from_terms(n, colors);
}

lp::QProblem random_lp(Rng& rng, std::size_t n, std::size_t m) {
    lp::QProblem p(n);
    p.objective = random_int_vector(rng, n, -4, 4);
    std::uniform_int_distribution<int> rhs(-3, 10);
    for (std::size_t k = 0; k < m; ++k) p.add_row(random_int_vector(rng, n, -5, 5), Rational(rhs(rng)));
    return p;
}

namespace {

// Calls f on every k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        if (f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool brute_cone_member(const QVector& y, const std::vector<QVector>& gens) {
    const std::size_t n = y.size();
    if (std::all_of(y.begin(), y.end(), [](const Rational& v) { return v == 0; })) return true;
    bool found = false;
    for (std::size_t k = 1; k <= std::min(n, gens.size()) && !found; ++k) {
        for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& cols) {
            std::vector<QVector> basis;
            for (auto c : cols) basis.push_back(gens[c]);
            if (!linalg::independent(basis)) return false;
            // Pick k coordinates where the n x k system is nonsingular.
            bool done = false;
            for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
                QMatrix a(k, QVector(k));
                QVector b(k);
                for (std::size_t r = 0; r < k; ++r) {
                    for (std::size_t c = 0; c < k; ++c) a[r][c] = basis[c][rows[r]];
                    b[r] = y[rows[r]];
                }
                auto mu = linalg::solve(a, b);
                if (!mu) return false;
                done = true;
                for (const auto& m : *mu)
                    if (m < 0) return true;
                for (std::size_t j = 0; j < n; ++j) {
                    Rational s = 0;
                    for (std::size_t c = 0; c < k; ++c) s += (*mu)[c] * basis[c][j];
                    if (s != y[j]) return true;
                }
                found = true;
                return true;
            });
            (void)done;
            return found;
        });
    }
    return found;
}

bool brute_colorful(const QVector& y, const ColoredSupport& sup) {
    if (!brute_cone_member(y, sup.elements())) return false;
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        std::vector<QVector> rest;
        for (std::size_t k = 0; k < sup.size(); ++k)
            if (sup.tag(k).color != i) rest.push_back(sup.element(k));
        if (brute_cone_member(y, rest)) return false;
    }
    return true;
}

std::optional<Rational> vertex_enumeration_max(const lp::QProblem& p) {
    const std::size_t n = p.dimension();
    if (linalg::rank(p.rows) < n) return std::nullopt;
    std::optional<Rational> best;
    for_each_subset(p.rows.size(), n, [&](const std::vector<std::size_t>& tight) {
        QMatrix a;
        QVector b;
        for (auto r : tight) {
            a.push_back(p.rows[r]);
            b.push_back(p.rhs[r]);
        }
        auto x = linalg::solve(a, b);
        if (!x) return false;
        for (std::size_t r = 0; r < p.rows.size(); ++r)
            if (dot(p.rows[r], *x) > p.rhs[r]) return false;
        Rational v = dot(p.objective, *x);
        if (!best || v > *best) best = v;
        return false;
    });
    return best;
}

std::array<geometry3::Polygon, 3> random_polygon_triple(Rng& rng) {
    using geometry3::Point2;
    auto coord = [&](int lo, int hi) { return random_rational(rng, lo, hi, 8); };
    std::array<Point2, 3> corners;
    while (true) {
        for (auto& c : corners) c = {coord(-10, 10), coord(-10, 10)};
        const Rational area = (corners[1][0] - corners[0][0]) * (corners[2][1] - corners[0][1]) -
                              (corners[2][0] - corners[0][0]) * (corners[1][1] - corners[0][1]);
        if (abs(area) >= 20) break;
    }
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> radius(1, 7);
    auto make = [&](const Point2& c) {
        const int r = radius(rng);
        std::vector<Point2> pts;
        const int k = count(rng);
        for (int j = 0; j < k; ++j) pts.push_back({c[0] + random_rational(rng, -r, r, 8), c[1] + random_rational(rng, -r, r, 8)});
        return geometry3::Polygon::hull(std::move(pts));
    };
    return {make(corners[0]), make(corners[1]), make(corners[2])};
}

geometry3::Point2 interior_point(Rng& rng, const std::array<geometry3::Point2, 3>& t) {
    std::uniform_int_distribution<int> w(1, 1000);
    const Rational a = w(rng), b = w(rng), c = w(rng);
    const Rational s = a + b + c;
    return {(a * t[0][0] + b * t[1][0] + c * t[2][0]) / s, (a * t[0][1] + b * t[1][1] + c * t[2][1]) / s};
}

geometry3::Point2 exterior_point(Rng& rng, const geometry3::ColorfulSimplex& s) {
    const auto& v = s.vertices;
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        // on an edge: convex combination of two vertices
        const std::size_t e = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        const Rational w(std::uniform_int_distribution<int>(0, 64)(rng), 64);
        const auto& p = v[e];
        const auto& q = v[(e + 1) % 3];
        return {w * p[0] + (1 - w) * q[0], w * p[1] + (1 - w) * q[1]};
    }
    Rational lo[2], hi[2];
    for (int k = 0; k < 2; ++k) {
        lo[k] = std::min({v[0][k], v[1][k], v[2][k]}) - 2;
        hi[k] = std::max({v[0][k], v[1][k], v[2][k]}) + 2;
    }
    std::uniform_int_distribution<int> u(0, 4096);
    while (true) {
        geometry3::Point2 x;
        for (int k = 0; k < 2; ++k) x[k] = lo[k] + (hi[k] - lo[k]) * Rational(u(rng), 4096);
        if (!s.contains(x)) return x;
    }
}

geometry3::Point2 shear_translate(const geometry3::Point2& p, const Rational& k, const geometry3::Point2& t) {
    return {p[0] + k * p[1] + t[0], p[1] + t[1]};
}

std::vector<satgen::Cnf> exhaustive_cnf_corpus() {
    using satgen::Clause;
    std::vector<Clause> all;
    for (std::size_t mask = 0; mask < 8; ++mask) {
        Clause c;
        for (std::size_t v = 0; v < 3; ++v) c[v] = satgen::Literal{v, bool((mask >> v) & 1)};
        all.push_back(c);
    }
    std::vector<satgen::Cnf> out;
    out.emplace_back(3, std::vector<Clause>{});
    for (std::size_t a = 0; a < 8; ++a) {
        out.emplace_back(3, std::vector<Clause>{all[a]});
        for (std::size_t b = a + 1; b < 8; ++b) {
            out.emplace_back(3, std::vector<Clause>{all[a], all[b]});
            for (std::size_t c = b + 1; c < 8; ++c) out.emplace_back(3, std::vector<Clause>{all[a], all[b], all[c]});
        }
    }
    return out;
}

std::vector<PlantedCase> planted_corpus(Rng& rng, std::size_t count, std::size_t max_dimension) {
    std::vector<PlantedCase> out;
    while (out.size() < count) {
        const std::size_t n = 1 + out.size() % max_dimension;
        auto p = gp::planted_system(rng, n, 3);
        auto found = colorful::find_colorful(p.system.support());
        if (found.status == colorful::SearchStatus::Found) out.push_back({std::move(p), found.vector});
    }
    return out;
}

}  // namespace posy::testing
