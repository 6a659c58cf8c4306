#include "posy/lp.hpp"

#include <cmath>

#include "posy/errors.hpp"

namespace posy::lp {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

template <class T>
struct Field;

template <>
struct Field<Rational> {
    static constexpr bool exact = true;
    static bool positive(const Rational& v) { return v > 0; }
    static bool negative(const Rational& v) { return v < 0; }
    static bool zero(const Rational& v) { return v == 0; }
    static bool less(const Rational& a, const Rational& b) { return a < b; }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct Field<double> {
    static constexpr bool exact = false;
    static constexpr double eps = 1e-9;
    static bool positive(double v) { return v > eps; }
    static bool negative(double v) { return v < -eps; }
    static bool zero(double v) { return std::abs(v) <= eps; }
    static bool less(double a, double b) { return a < b - eps; }
    static bool equal(double a, double b) { return std::abs(a - b) <= eps; }
};

template <class T>
class Simplex {
public:
    Simplex(const StandardProblem<T>& p, const Options& options)
        : m_(p.a.size()), n_(p.c.size()), c_(p.c), options_(options) {
        if (p.b.size() != m_) throw DimensionMismatch("lp: rhs length differs from row count");
        a_.reserve(m_);
        sign_.assign(m_, 1);
        b_.reserve(m_);
        for (std::size_t r = 0; r < m_; ++r) {
            if (p.a[r].size() != n_) throw DimensionMismatch("lp: row length differs from cost length");
            a_.push_back(p.a[r]);
            b_.push_back(p.b[r]);
            if (b_[r] < T(0)) {
                sign_[r] = -1;
                b_[r] = -b_[r];
                for (auto& v : a_[r]) v = -v;
            }
        }
        basis_.resize(m_);
        is_basic_.assign(n_ + m_, 0);
        binv_.assign(m_, Vec<T>(m_, T(0)));
        for (std::size_t r = 0; r < m_; ++r) {
            basis_[r] = n_ + r;
            is_basic_[n_ + r] = 1;
            binv_[r][r] = T(1);
        }
        xb_ = b_;
        cap_ = options.max_iterations ? options.max_iterations : 50 * (m_ + n_) + 1000;
        bland_ = options.rule == PivotRule::Bland ||
                 (options.rule == PivotRule::Default && Field<T>::exact);
    }

    StandardSolution<T> run() {
        StandardSolution<T> out;

        Vec<T> phase_one_cost(n_ + m_, T(0));
        for (std::size_t r = 0; r < m_; ++r) phase_one_cost[n_ + r] = T(1);
        iterate(phase_one_cost, out.iterations);
        T infeasibility(0);
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] >= n_) infeasibility += xb_[r];
        if (Field<T>::positive(infeasibility)) {
            out.status = Status::Infeasible;
            out.duals = row_duals(phase_one_cost);
            out.basis = basis_;
            return out;
        }

        drive_out_artificials();

        Vec<T> cost(n_ + m_, T(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c_[j];
        auto unbounded = iterate(cost, out.iterations);
        out.w = primal();
        out.basis = basis_;
        if (unbounded) {
            out.status = Status::Unbounded;
            out.direction.assign(n_, T(0));
            out.direction[unbounded->entering] = T(1);
            for (std::size_t r = 0; r < m_; ++r)
                if (basis_[r] < n_) out.direction[basis_[r]] = -unbounded->column[r];
            return out;
        }
        out.status = Status::Optimal;
        out.duals = row_duals(cost);
        out.value = T(0);
        for (std::size_t j = 0; j < n_; ++j) out.value += c_[j] * out.w[j];
        return out;
    }

private:
    struct Ray {
        std::size_t entering;
        Vec<T> column;
    };

    // B^{-1} times column j of [A | I].
    Vec<T> transformed_column(std::size_t j) const {
        Vec<T> d(m_, T(0));
        if (j >= n_) {
            for (std::size_t r = 0; r < m_; ++r) d[r] = binv_[r][j - n_];
            return d;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            T s(0);
            for (std::size_t k = 0; k < m_; ++k)
                if (!Field<T>::zero(binv_[r][k]) && !Field<T>::zero(a_[k][j])) s += binv_[r][k] * a_[k][j];
            d[r] = s;
        }
        return d;
    }

    // Simplex multipliers for the sign-normalized rows.
    Vec<T> multipliers(const Vec<T>& cost) const {
        Vec<T> pi(m_, T(0));
        for (std::size_t r = 0; r < m_; ++r) {
            const T& cb = cost[basis_[r]];
            if (Field<T>::zero(cb)) continue;
            for (std::size_t k = 0; k < m_; ++k) pi[k] += cb * binv_[r][k];
        }
        return pi;
    }

    // Multipliers expressed for the caller's (unnormalized) rows.
    Vec<T> row_duals(const Vec<T>& cost) const {
        Vec<T> pi = multipliers(cost);
        for (std::size_t r = 0; r < m_; ++r)
            if (sign_[r] < 0) pi[r] = -pi[r];
        return pi;
    }

    T reduced_cost(const Vec<T>& cost, const Vec<T>& pi, std::size_t j) const {
        T d = cost[j];
        for (std::size_t k = 0; k < m_; ++k)
            if (!Field<T>::zero(pi[k]) && !Field<T>::zero(a_[k][j])) d -= pi[k] * a_[k][j];
        return d;
    }

    void pivot(std::size_t leave, std::size_t enter, const Vec<T>& column) {
        const T p = column[leave];
        for (auto& v : binv_[leave]) v /= p;
        xb_[leave] /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == leave || Field<T>::zero(column[r])) continue;
            const T f = column[r];
            for (std::size_t k = 0; k < m_; ++k) binv_[r][k] -= f * binv_[leave][k];
            xb_[r] -= f * xb_[leave];
            if constexpr (!Field<T>::exact) {
                if (std::abs(xb_[r]) < 1e-13) xb_[r] = 0;
            }
        }
        is_basic_[basis_[leave]] = 0;
        is_basic_[enter] = 1;
        basis_[leave] = enter;
    }

    // Runs simplex pivots on the given cost until optimal or unbounded. Artificial
    // columns never re-enter the basis.
    std::optional<Ray> iterate(const Vec<T>& cost, std::size_t& iterations) {
        std::size_t degenerate_run = 0;
        bool bland = bland_;
        while (true) {
            if (++iterations > cap_) throw InternalInvariant("lp: iteration cap exceeded");
            const Vec<T> pi = multipliers(cost);
            std::optional<std::size_t> enter;
            T best(0);
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) continue;
                T d = reduced_cost(cost, pi, j);
                if (!Field<T>::negative(d)) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (!enter || d < best) {
                    enter = j;
                    best = d;
                }
            }
            if (!enter) return std::nullopt;

            Vec<T> column = transformed_column(*enter);
            std::optional<std::size_t> leave;
            T best_ratio(0);
            for (std::size_t r = 0; r < m_; ++r) {
                if (!Field<T>::positive(column[r])) continue;
                T ratio = xb_[r] / column[r];
                if (!leave || Field<T>::less(ratio, best_ratio) ||
                    (Field<T>::equal(ratio, best_ratio) && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (!leave) return Ray{*enter, std::move(column)};

            if (Field<T>::zero(best_ratio)) {
                if (++degenerate_run > 50) bland = true;
            } else {
                degenerate_run = 0;
            }
            pivot(*leave, *enter, column);
        }
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) continue;
                T entry(0);
                for (std::size_t k = 0; k < m_; ++k) entry += binv_[r][k] * a_[k][j];
                if (Field<T>::zero(entry)) continue;
                pivot(r, j, transformed_column(j));
                break;
            }
            // If no column qualifies the row is redundant; its artificial stays basic at zero.
        }
    }

    Vec<T> primal() const {
        Vec<T> w(n_, T(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) w[basis_[r]] = xb_[r];
        return w;
    }

    std::size_t m_;
    std::size_t n_;
    Mat<T> a_;
    Vec<T> b_;
    Vec<T> c_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    std::vector<char> is_basic_;
    Mat<T> binv_;
    Vec<T> xb_;
    Options options_;
    std::size_t cap_ = 0;
    bool bland_ = true;
};

template <class T>
T inner(const Vec<T>& a, const Vec<T>& b) {
    T s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

template <class T>
StandardSolution<T> solve_standard(const StandardProblem<T>& problem, const Options& options) {
    return Simplex<T>(problem, options).run();
}

template <class T>
Solution<T> solve(const Problem<T>& problem, const Options& options) {
    const std::size_t n = problem.dimension();
    const std::size_t m = problem.rows.size();
    if (problem.rhs.size() != m) throw DimensionMismatch("lp: rhs length differs from row count");

    StandardProblem<T> sp;
    sp.a.assign(m, Vec<T>(2 * n + m, T(0)));
    sp.b = problem.rhs;
    sp.c.assign(2 * n + m, T(0));
    for (std::size_t k = 0; k < m; ++k) {
        if (problem.rows[k].size() != n) throw DimensionMismatch("lp: constraint row has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            sp.a[k][j] = problem.rows[k][j];
            sp.a[k][n + j] = -problem.rows[k][j];
        }
        sp.a[k][2 * n + k] = T(1);
    }
    for (std::size_t j = 0; j < n; ++j) {
        sp.c[j] = -problem.objective[j];
        sp.c[n + j] = problem.objective[j];
    }

    StandardSolution<T> s = solve_standard(sp, options);
    Solution<T> out;
    out.status = s.status;
    out.basis = s.basis;

    auto recombine = [n](const Vec<T>& w) {
        Vec<T> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = w[j] - w[n + j];
        return x;
    };

    switch (s.status) {
        case Status::Optimal: {
            out.x = recombine(s.w);
            out.dual.resize(m);
            for (std::size_t k = 0; k < m; ++k) out.dual[k] = -s.duals[k];
            out.value = inner(problem.objective, out.x);
            break;
        }
        case Status::Infeasible: {
            Vec<T> mu(m);
            for (std::size_t k = 0; k < m; ++k) mu[k] = -s.duals[k];
            const T scale = -inner(problem.rhs, mu);
            for (auto& v : mu) v /= scale;
            out.farkas = std::move(mu);
            break;
        }
        case Status::Unbounded: {
            out.x = recombine(s.w);
            Vec<T> r = recombine(s.direction);
            const T gain = inner(problem.objective, r);
            for (auto& v : r) v /= gain;
            out.ray = std::move(r);
            break;
        }
    }
    return out;
}

template <class T>
Feasibility<T> feasible_point(const Mat<T>& rows, const Vec<T>& rhs, const Options& options) {
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    Problem<T> p(n);
    p.rows = rows;
    p.rhs = rhs;
    Solution<T> s = solve(p, options);
    Feasibility<T> out;
    if (s.status == Status::Infeasible)
        out.farkas = std::move(s.farkas);
    else
        out.point = std::move(s.x);
    return out;
}

template StandardSolution<Rational> solve_standard(const StandardProblem<Rational>&, const Options&);
template StandardSolution<double> solve_standard(const StandardProblem<double>&, const Options&);
template Solution<Rational> solve(const Problem<Rational>&, const Options&);
template Solution<double> solve(const Problem<double>&, const Options&);
template Feasibility<Rational> feasible_point(const Mat<Rational>&, const Vec<Rational>&, const Options&);
template Feasibility<double> feasible_point(const Mat<double>&, const Vec<double>&, const Options&);

}  // namespace posy::lp
