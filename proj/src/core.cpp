#include "posy/core.hpp"

#include <cmath>
#include <string>

#include "posy/errors.hpp"
#include "posy/lp.hpp"

namespace posy {

ColoredSupport::ColoredSupport(std::size_t dimension, std::vector<std::vector<QVector>> colors)
    : dimension_(dimension) {
    if (dimension == 0) throw InvalidInput("support dimension must be positive");
    if (colors.size() != dimension)
        throw DimensionMismatch("a square system needs " + std::to_string(dimension) + " colors, got " +
                                std::to_string(colors.size()));
    offsets_.push_back(0);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i].empty()) throw InvalidInput("color " + std::to_string(i) + " is empty");
        for (std::size_t k = 0; k < colors[i].size(); ++k) {
            if (colors[i][k].size() != dimension)
                throw DimensionMismatch("exponent " + std::to_string(k) + " of color " + std::to_string(i) +
                                        " has length " + std::to_string(colors[i][k].size()) + ", expected " +
                                        std::to_string(dimension));
            elements_.push_back(std::move(colors[i][k]));
            tags_.push_back({i, k});
        }
        offsets_.push_back(elements_.size());
    }
}

std::vector<QVector> ColoredSupport::color(std::size_t color) const {
    auto [begin, end] = color_range(color);
    return {elements_.begin() + static_cast<std::ptrdiff_t>(begin),
            elements_.begin() + static_cast<std::ptrdiff_t>(end)};
}

namespace {

ColoredSupport support_of(std::size_t dimension, const std::vector<std::vector<Term>>& colors, QVector& coeffs) {
    std::vector<std::vector<QVector>> exps(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        for (const auto& t : colors[i]) {
            exps[i].push_back(t.exponent);
            coeffs.push_back(t.coeff);
        }
    return ColoredSupport(dimension, std::move(exps));
}

}  // namespace

TropicalSystem::TropicalSystem(ColoredSupport support, QVector coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != support_.size())
        throw InvalidInput("coefficient count " + std::to_string(coeffs_.size()) + " differs from support size " +
                           std::to_string(support_.size()));
}

TropicalSystem TropicalSystem::from_terms(std::size_t dimension, const std::vector<std::vector<Term>>& colors) {
    QVector coeffs;
    ColoredSupport sup = support_of(dimension, colors, coeffs);
    return TropicalSystem(std::move(sup), std::move(coeffs));
}

ClassicalSystem::ClassicalSystem(ColoredSupport support, QVector coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != support_.size())
        throw InvalidInput("coefficient count " + std::to_string(coeffs_.size()) + " differs from support size " +
                           std::to_string(support_.size()));
    for (const auto& c : coeffs_)
        if (c <= 0) throw InvalidInput("classical coefficients must be positive, got " + to_string(c));
}

ClassicalSystem ClassicalSystem::from_terms(std::size_t dimension, const std::vector<std::vector<Term>>& colors) {
    QVector coeffs;
    ColoredSupport sup = support_of(dimension, colors, coeffs);
    return ClassicalSystem(std::move(sup), std::move(coeffs));
}

QVector eval_tropical(const TropicalSystem& sys, const QVector& x) {
    const auto& sup = sys.support();
    if (x.size() != sup.dimension()) throw DimensionMismatch("eval_tropical: point has wrong dimension");
    QVector out(sup.num_colors());
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        auto [begin, end] = sup.color_range(i);
        for (std::size_t k = begin; k < end; ++k) {
            Rational v = sys.coeff(k) + dot(sup.element(k), x);
            if (k == begin || v > out[i]) out[i] = v;
        }
    }
    return out;
}

std::vector<double> eval_classical(const ClassicalSystem& sys, const std::vector<double>& x) {
    const auto& sup = sys.support();
    if (x.size() != sup.dimension()) throw DimensionMismatch("eval_classical: point has wrong dimension");
    std::vector<double> logx(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0)) throw InvalidInput("eval_classical: coordinates must be positive");
        logx[k] = std::log(x[k]);
    }
    std::vector<double> out(sup.num_colors(), 0.0);
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        auto [begin, end] = sup.color_range(i);
        for (std::size_t k = begin; k < end; ++k) {
            const auto& a = sup.element(k);
            double monomial = to_double(sys.coeff(k));
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[j] == 0) continue;
                if (is_integer(a[j]) && boost::multiprecision::abs(a[j]) <= 64)
                    monomial *= std::pow(x[j], a[j].convert_to<int>());
                else
                    monomial *= std::exp(to_double(a[j]) * logx[j]);
            }
            out[i] += monomial;
        }
    }
    return out;
}

QVector eval_classical_exact(const ClassicalSystem& sys, const QVector& x) {
    const auto& sup = sys.support();
    if (x.size() != sup.dimension()) throw DimensionMismatch("eval_classical_exact: point has wrong dimension");
    for (const auto& v : x)
        if (v <= 0) throw InvalidInput("eval_classical_exact: coordinates must be positive");
    QVector out(sup.num_colors(), Rational(0));
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        auto [begin, end] = sup.color_range(i);
        for (std::size_t k = begin; k < end; ++k) {
            const auto& a = sup.element(k);
            Rational monomial = sys.coeff(k);
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (!is_integer(a[j])) throw InvalidInput("eval_classical_exact: exponents must be integers");
                long e = a[j].convert_to<long>();
                Rational base = e < 0 ? Rational(1 / x[j]) : x[j];
                for (long r = 0; r < std::labs(e); ++r) monomial *= base;
            }
            out[i] += monomial;
        }
    }
    return out;
}

PointednessCertificate check_pointed(const ColoredSupport& sup) {
    const std::size_t n = sup.dimension();
    // Variables (z, t): maximize t s.t. <a,z> + t <= 0 for every a, t <= 1.
    lp::QProblem p(n + 1);
    p.objective[n] = 1;
    for (const auto& a : sup.elements()) {
        QVector row = a;
        row.push_back(1);
        p.add_row(std::move(row), 0);
    }
    QVector cap(n + 1, Rational(0));
    cap[n] = 1;
    p.add_row(std::move(cap), 1);

    lp::QSolution s = lp::solve(p);
    if (s.status != lp::Status::Optimal) throw InternalInvariant("check_pointed: LP must have an optimum");
    PointednessCertificate cert;
    cert.optimum = s.value;
    if (s.value > 0) {
        cert.pointed = true;
        cert.witness.assign(s.x.begin(), s.x.begin() + static_cast<std::ptrdiff_t>(n));
        for (const auto& a : sup.elements())
            if (dot(a, cert.witness) >= 0) throw InternalInvariant("check_pointed: witness is not strict");
    }
    return cert;
}

}  // namespace posy
