#include "posy/gp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "posy/colorful.hpp"
#include "posy/lp.hpp"

namespace posy::gp {

namespace {

// Float copy of the system: per color an exponent matrix (one row per term) and log c.
// The barrier runs in long double; near the optimum g_i is of order 1/t and double
// rounding of X alone would perturb 1/g_i by about 1e-5.
template <class S>
struct BasicLogSumExp {
    using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

    std::vector<Matrix> exponents;
    std::vector<Vector> log_coeffs;
    std::size_t n = 0;

    explicit BasicLogSumExp(const ClassicalSystem& sys) : n(sys.dimension()) {
        const auto& sup = sys.support();
        for (std::size_t i = 0; i < sup.num_colors(); ++i) {
            auto [begin, end] = sup.color_range(i);
            Matrix a(end - begin, n);
            Vector lc(end - begin);
            for (std::size_t k = begin; k < end; ++k) {
                for (std::size_t j = 0; j < n; ++j) a(k - begin, j) = sup.element(k)[j].template convert_to<S>();
                lc(k - begin) = std::log(sys.coeff(k).template convert_to<S>());
            }
            exponents.push_back(std::move(a));
            log_coeffs.push_back(std::move(lc));
        }
    }

    std::size_t colors() const { return exponents.size(); }

    // Shifted terms log c_a + <a,X> of color i.
    Vector terms(std::size_t i, const Vector& X) const { return log_coeffs[i] + exponents[i] * X; }

    S value(std::size_t i, const Vector& X) const {
        Vector t = terms(i, X);
        const S m = t.maxCoeff();
        return m + std::log((t.array() - m).exp().sum());
    }

    Vector values(const Vector& X) const {
        Vector g(colors());
        for (std::size_t i = 0; i < colors(); ++i) g(i) = value(i, X);
        return g;
    }

    // Value, gradient, Hessian of g_i.
    void derivatives(std::size_t i, const Vector& X, S& g, Vector& grad, Matrix& hess) const {
        Vector t = terms(i, X);
        const S m = t.maxCoeff();
        Vector w = (t.array() - m).exp();
        const S s = w.sum();
        g = m + std::log(s);
        w /= s;
        grad = exponents[i].transpose() * w;
        hess = exponents[i].transpose() * w.asDiagonal() * exponents[i] - grad * grad.transpose();
    }
};

using LogSumExp = BasicLogSumExp<double>;
using WideLogSumExp = BasicLogSumExp<long double>;
using WideVector = WideLogSumExp::Vector;
using WideMatrix = WideLogSumExp::Matrix;

void require_finite(const Eigen::VectorXd& X) {
    if (!X.allFinite()) throw InvalidInput("g_eval: X must be finite");
}

}  // namespace

GpProblem::GpProblem(ClassicalSystem sys, QVector y, Tolerances tol)
    : sys_(std::move(sys)), y_(std::move(y)), tol_(tol) {
    if (y_.size() != sys_.dimension()) throw DimensionMismatch("GpProblem: vector has wrong dimension");
    if (!check_pointed(sys_.support()).pointed) throw NotPointed("GpProblem: exponents are not pointed");
    auto cert = colorful::is_colorful(y_, sys_.support());
    if (!cert.colorful()) throw NotColorful(std::string("GpProblem: y is ") + colorful::to_string(cert.verdict));
}

GEval g_eval(const ClassicalSystem& sys, const Eigen::VectorXd& X) {
    if (static_cast<std::size_t>(X.size()) != sys.dimension()) throw DimensionMismatch("g_eval: wrong dimension");
    require_finite(X);
    LogSumExp lse(sys);
    GEval out;
    out.values.resize(lse.colors());
    for (std::size_t i = 0; i < lse.colors(); ++i) {
        Eigen::VectorXd grad;
        Eigen::MatrixXd hess;
        lse.derivatives(i, X, out.values(i), grad, hess);
        out.gradients.push_back(std::move(grad));
        out.hessians.push_back(std::move(hess));
    }
    return out;
}

Eigen::VectorXd tropical_bound(const ClassicalSystem& sys, const Eigen::VectorXd& X) {
    require_finite(X);
    LogSumExp lse(sys);
    Eigen::VectorXd h(lse.colors());
    for (std::size_t i = 0; i < lse.colors(); ++i) h(i) = lse.terms(i, X).maxCoeff();
    return h;
}

Eigen::VectorXd feasible_start(const ClassicalSystem& sys) {
    const auto& sup = sys.support();
    PointednessCertificate cert = check_pointed(sup);
    if (!cert.pointed) throw NotPointed("feasible_start: exponents are not pointed");
    const std::size_t n = sys.dimension();
    Eigen::VectorXd z(n);
    for (std::size_t j = 0; j < n; ++j) z(j) = to_double(cert.witness[j]);

    double lambda = 0;
    for (std::size_t k = 0; k < sup.size(); ++k) {
        const double size = static_cast<double>(sup.color_size(sup.tag(k).color));
        const double az = to_double(dot(sup.element(k), cert.witness));  // exactly <= -1 before rounding
        const double need = (std::log(to_double(sys.coeff(k))) + std::log(size) + 1.0) / (-az);
        lambda = std::max(lambda, need);
    }
    Eigen::VectorXd X0 = lambda * z;
    Eigen::VectorXd g = LogSumExp(sys).values(X0);
    if (!(g.array() < 0).all()) throw InternalInvariant("feasible_start: start point is not strictly feasible");
    return X0;
}

KktReport solve_gp(const GpProblem& problem) {
    const ClassicalSystem& sys = problem.system();
    const WideLogSumExp lse(sys);
    const std::size_t n = sys.dimension();
    const std::size_t m = lse.colors();
    WideVector y(n);
    for (std::size_t j = 0; j < n; ++j) y(j) = problem.y()[j].convert_to<long double>();

    constexpr long double armijo = 1e-4L;
    constexpr long double regularization = 1e-12L;
    constexpr long double gap_target = 1e-10L;
    constexpr long double quadratic_region = 1e-6L;
    constexpr std::size_t max_newton_per_center = 200;
    constexpr std::size_t max_newton_total = 5000;

    WideVector X = feasible_start(sys).cast<long double>();
    long double t = 1.0L;
    std::size_t steps = 0;
    std::vector<WideVector> grads(m);
    std::vector<WideMatrix> hessians(m);
    WideVector g(m);

    auto make_report = [&]() {
        const WideVector gx = lse.values(X);
        const WideVector lambda = (-(t * gx.array())).inverse();
        WideVector combo = WideVector::Zero(n);
        for (std::size_t i = 0; i < m; ++i) {
            long double gi;
            WideMatrix unused;
            lse.derivatives(i, X, gi, grads[i], unused);
            combo += lambda(i) * grads[i];
        }
        KktReport r;
        r.X = X.cast<double>();
        r.x = X.array().exp().cast<double>();
        r.g = gx.cast<double>();
        r.lambda = lambda.cast<double>();
        r.Z = gx.array().exp().cast<double>();
        r.stationarity = static_cast<double>((y - combo).lpNorm<Eigen::Infinity>());
        r.barrier_t = static_cast<double>(t);
        r.newton_steps = steps;
        return r;
    };

    while (true) {
        for (std::size_t inner = 0; inner < max_newton_per_center; ++inner) {
            if (++steps > max_newton_total) throw NotConverged("solve_gp: Newton step budget exhausted", make_report());
            WideVector grad = -t * y;
            WideMatrix hess = WideMatrix::Zero(n, n);
            for (std::size_t i = 0; i < m; ++i) {
                lse.derivatives(i, X, g(i), grads[i], hessians[i]);
                const long double slack = -g(i);
                grad += grads[i] / slack;
                hess += hessians[i] / slack + grads[i] * grads[i].transpose() / (slack * slack);
            }
            hess.diagonal().array() += regularization;
            WideVector dx = hess.ldlt().solve(-grad);
            const long double decrement = -grad.dot(dx);
            if (!std::isfinite(decrement) || decrement <= 1e-14L) break;

            // Backtrack into the domain, then to sufficient decrease. The barrier change is
            // accumulated term by term to avoid cancellation against the large t<y,X>.
            // Inside the quadratic region the predicted decrease drops below the rounding
            // of that change, so the full step is taken once it stays feasible.
            const bool quadratic = decrement <= quadratic_region;
            long double s = 1.0L;
            bool moved = false;
            for (int halvings = 0; halvings < 64; ++halvings, s *= 0.5L) {
                WideVector trial = X + s * dx;
                WideVector gt = lse.values(trial);
                if (!(gt.array() < 0).all()) continue;
                if (quadratic) {
                    X = trial;
                    moved = true;
                    break;
                }
                long double change = -t * s * y.dot(dx);
                for (std::size_t i = 0; i < m; ++i) change -= std::log(gt(i) / g(i));
                if (change <= armijo * s * grad.dot(dx)) {
                    X = trial;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;  // no representable progress left at this t
        }
        if (static_cast<long double>(m) / t < gap_target) break;
        t *= 10.0L;
    }

    KktReport report = make_report();
    const auto& tol = problem.tolerances();
    const bool ok = (report.lambda.array() > 0).all() &&
                    report.g.cwiseAbs().maxCoeff() <= tol.feasibility && report.stationarity <= tol.kkt;
    if (!ok) throw NotConverged("solve_gp: KKT tolerances not met", report);
    return report;
}

bool superlevel_bounded(const ClassicalSystem& sys, const QVector& y, const Rational& mu,
                        std::int64_t max_denominator) {
    const auto& sup = sys.support();
    const std::size_t n = sys.dimension();
    if (y.size() != n) throw DimensionMismatch("superlevel_bounded: vector has wrong dimension");
    lp::QProblem base(n);
    for (std::size_t k = 0; k < sup.size(); ++k)
        base.add_row(sup.element(k), -rationalize(std::log(to_double(sys.coeff(k))), max_denominator));
    QVector neg_y(n);
    for (std::size_t j = 0; j < n; ++j) neg_y[j] = -y[j];
    base.add_row(neg_y, -mu);

    for (std::size_t j = 0; j < n; ++j) {
        for (int sign : {1, -1}) {
            lp::QProblem p = base;
            p.objective.assign(n, Rational(0));
            p.objective[j] = sign;
            if (lp::solve(p).status == lp::Status::Unbounded) return false;
        }
    }
    return true;
}

Planted planted_system(std::mt19937_64& rng, std::size_t n, std::size_t max_terms) {
    static const std::array<Rational, 7> values{Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2),
                                                Rational(2),    Rational(5, 2), Rational(3)};
    std::uniform_int_distribution<std::size_t> pick_value(0, values.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_terms(1, std::max<std::size_t>(1, max_terms));
    std::uniform_int_distribution<int> diagonal(-3, -1);
    std::uniform_int_distribution<int> off_diagonal(-1, 0);
    std::uniform_int_distribution<int> weight(1, 5);

    QVector solution(n);
    for (auto& v : solution) v = values[pick_value(rng)];

    std::vector<std::vector<Term>> colors(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t terms = pick_terms(rng);
        Rational total = 0;
        for (std::size_t k = 0; k < terms; ++k) {
            QVector a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = j == i ? diagonal(rng) : off_diagonal(rng);
            Term term{a, Rational(weight(rng))};
            // x^a at the planted point
            Rational monomial = 1;
            for (std::size_t j = 0; j < n; ++j)
                for (int r = 0; r < -a[j].convert_to<int>(); ++r) monomial /= solution[j];
            total += term.coeff * monomial;
            colors[i].push_back(std::move(term));
        }
        for (auto& term : colors[i]) term.coeff /= total;
    }
    return {ClassicalSystem::from_terms(n, colors), solution};
}

}  // namespace posy::gp
