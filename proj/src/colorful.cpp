#include "posy/colorful.hpp"

#include <string>

#include "posy/errors.hpp"
#include "posy/linalg.hpp"
#include "posy/lp.hpp"

namespace posy::colorful {

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Colorful: return "colorful";
        case Verdict::NotColorful: return "not-colorful";
        case Verdict::NotInCone: return "not-in-cone";
    }
    return "unknown";
}

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneFound: return "none-found";
        case SearchStatus::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// Phase-one feasibility of G mu = y, mu >= 0, with the generators as columns.
ConeMembership membership_lp(const QVector& y, const std::vector<QVector>& gens) {
    const std::size_t d = y.size();
    lp::StandardProblem<Rational> p;
    p.a.assign(d, QVector(gens.size(), Rational(0)));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].size() != d) throw DimensionMismatch("cone_membership: generator has wrong dimension");
        for (std::size_t r = 0; r < d; ++r) p.a[r][g] = gens[g][r];
    }
    p.b = y;
    p.c.assign(gens.size(), Rational(0));
    auto s = lp::solve_standard(p);

    ConeMembership out;
    if (s.status == lp::Status::Optimal) {
        QVector check(d, Rational(0));
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t r = 0; r < d; ++r) check[r] += s.w[g] * gens[g][r];
        if (check != y) throw InternalInvariant("cone_membership: decomposition does not reproduce y");
        out.mu = std::move(s.w);
        return out;
    }
    // Farkas: A^T pi <= 0 and <y,pi> > 0; the separator is -pi.
    out.separator.resize(d);
    for (std::size_t r = 0; r < d; ++r) out.separator[r] = -s.duals[r];
    return out;
}

}  // namespace

ConeMembership cone_membership(const QVector& y, const std::vector<QVector>& gens) {
    return membership_lp(y, gens);
}

ConeMembership convex_membership(const QVector& x, const std::vector<QVector>& points) {
    QVector lifted = x;
    lifted.push_back(1);
    std::vector<QVector> gens;
    gens.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != x.size()) throw DimensionMismatch("convex_membership: point has wrong dimension");
        gens.push_back(p);
        gens.back().push_back(1);
    }
    return membership_lp(lifted, gens);
}

ColorfulCertificate is_colorful(const QVector& y, const ColoredSupport& sup) {
    if (y.size() != sup.dimension()) throw DimensionMismatch("is_colorful: vector has wrong dimension");
    ColorfulCertificate cert;

    ConeMembership all = cone_membership(y, sup.elements());
    if (!all.member()) {
        cert.verdict = Verdict::NotInCone;
        cert.separators.push_back(std::move(all.separator));
        return cert;
    }

    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        std::vector<QVector> others;
        std::vector<std::size_t> flat;
        for (std::size_t k = 0; k < sup.size(); ++k) {
            if (sup.tag(k).color == i) continue;
            others.push_back(sup.element(k));
            flat.push_back(k);
        }
        ConeMembership m = cone_membership(y, others);
        if (m.member()) {
            cert.verdict = Verdict::NotColorful;
            cert.avoided_color = i;
            cert.decomposition.assign(sup.size(), Rational(0));
            for (std::size_t k = 0; k < flat.size(); ++k) cert.decomposition[flat[k]] = (*m.mu)[k];
            return cert;
        }
        cert.separators.push_back(std::move(m.separator));
    }

    cert.verdict = Verdict::Colorful;
    cert.decomposition = std::move(*all.mu);
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        auto [begin, end] = sup.color_range(i);
        bool touched = false;
        for (std::size_t k = begin; k < end; ++k) touched = touched || cert.decomposition[k] > 0;
        if (!touched) throw InternalInvariant("is_colorful: decomposition of a colorful vector misses a color");
    }
    return cert;
}

SearchResult find_colorful(const ColoredSupport& sup, std::size_t budget) {
    const std::size_t n = sup.num_colors();
    SearchResult result;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        if (result.tuples_examined >= budget) {
            result.status = SearchStatus::Unknown;
            return result;
        }
        ++result.tuples_examined;

        std::vector<QVector> tuple;
        tuple.reserve(n);
        for (std::size_t i = 0; i < n; ++i) tuple.push_back(sup.element(i, idx[i]));
        if (linalg::independent(tuple)) {
            QVector y(sup.dimension(), Rational(0));
            for (const auto& a : tuple)
                for (std::size_t r = 0; r < y.size(); ++r) y[r] += a[r];
            ColorfulCertificate cert = is_colorful(y, sup);
            if (cert.colorful()) {
                result.status = SearchStatus::Found;
                result.vector = std::move(y);
                result.tuple = idx;
                result.certificate = std::move(cert);
                return result;
            }
        }

        // Next tuple, last color varying fastest.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < sup.color_size(pos)) break;
            idx[pos] = 0;
            if (pos == 0) {
                result.status = SearchStatus::NoneFound;
                return result;
            }
        }
    }
}

AffineMembership affine_colorful_membership(const QVector& x, const std::vector<std::vector<QVector>>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].empty()) throw InvalidInput("affine_colorful_membership: set " + std::to_string(i) + " is empty");

    std::vector<QVector> all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());

    AffineMembership out;
    if (!convex_membership(x, all).member()) {
        out.verdict = AffineVerdict::OutsideHull;
        return out;
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (j != i) others.insert(others.end(), sets[j].begin(), sets[j].end());
        ConeMembership m = convex_membership(x, others);
        if (!m.member()) continue;
        out.verdict = AffineVerdict::InLeaveOneOutHull;
        out.color = i;
        std::size_t k = 0;
        for (std::size_t j = 0; j < sets.size(); ++j)
            for (std::size_t v = 0; v < sets[j].size(); ++v)
                out.weights.push_back(j == i ? Rational(0) : (*m.mu)[k++]);
        return out;
    }
    out.verdict = AffineVerdict::Inside;
    return out;
}

}  // namespace posy::colorful
