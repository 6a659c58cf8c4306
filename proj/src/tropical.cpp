#include "posy/tropical.hpp"

#include <algorithm>

#include "posy/colorful.hpp"
#include "posy/errors.hpp"

namespace posy::tropical {

bool SolveReport::solved() const {
    return std::all_of(residual.begin(), residual.end(), [](const Rational& r) { return r == 0; });
}

lp::QProblem build_lp(const TropicalSystem& sys, const QVector& y) {
    const auto& sup = sys.support();
    if (y.size() != sup.dimension()) throw DimensionMismatch("build_lp: objective has wrong dimension");
    lp::QProblem p(sup.dimension());
    p.objective = y;
    for (std::size_t k = 0; k < sup.size(); ++k) p.add_row(sup.element(k), -sys.coeff(k));
    return p;
}

SolveReport solve_tropical(const TropicalSystem& sys, const QVector& y, bool check_colorful) {
    const auto& sup = sys.support();
    if (y.size() != sup.dimension()) throw DimensionMismatch("solve_tropical: vector has wrong dimension");
    if (check_colorful) {
        auto cert = colorful::is_colorful(y, sup);
        if (!cert.colorful())
            throw NotColorful(std::string("solve_tropical: y is ") + colorful::to_string(cert.verdict));
    }

    lp::QSolution s = lp::solve(build_lp(sys, y));
    if (s.status == lp::Status::Infeasible)
        throw InfeasibleRelaxation("solve_tropical: P(x) <= 0 has no solution");
    if (s.status == lp::Status::Unbounded) {
        if (check_colorful) throw InternalInvariant("solve_tropical: LP(y) unbounded for a colorful y");
        throw UnboundedRelaxation("solve_tropical: LP(y) is unbounded, y is not colorful");
    }

    SolveReport report;
    report.x = s.x;
    report.objective = s.value;
    report.dual = s.dual;
    report.residual = eval_tropical(sys, report.x);
    report.colorful_checked = check_colorful;
    report.active.resize(sup.num_colors());
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        auto [begin, end] = sup.color_range(i);
        for (std::size_t k = begin; k < end; ++k) {
            if (report.dual[k] > 0 && sys.coeff(k) + dot(sup.element(k), report.x) == 0) {
                report.active[i] = k;
                break;
            }
        }
    }
    if (check_colorful) {
        if (!report.solved()) throw InternalInvariant("solve_tropical: nonzero residual for a colorful y");
        for (const auto& a : report.active)
            if (!a) throw InternalInvariant("solve_tropical: a color has no active dual multiplier");
    }
    return report;
}

}  // namespace posy::tropical
