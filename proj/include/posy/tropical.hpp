#pragma once

#include <optional>
#include <vector>

#include "posy/core.hpp"
#include "posy/lp.hpp"

namespace posy::tropical {

/// maximize <y,x> s.t. <a,x> <= -c_a for every support element a (one row per element,
/// in flat support order).
lp::QProblem build_lp(const TropicalSystem& sys, const QVector& y);

struct SolveReport {
    QVector x;
    Rational objective;
    QVector dual;  ///< flat-indexed mu >= 0 with y = sum mu_a a
    /// Per color: flat index of an element with mu > 0 and c_a + <a,x> = 0
    /// (empty for a color the dual does not use, possible only for non-colorful y).
    std::vector<std::optional<std::size_t>> active;
    QVector residual;  ///< eval_tropical(sys, x)
    bool colorful_checked = false;

    bool solved() const;
};

/// Solves LP(y) in exact arithmetic. With check_colorful, y must pass is_colorful
/// (NotColorful otherwise) and the residual is verified to be exactly zero.
/// Throws InfeasibleRelaxation when no x satisfies P(x) <= 0, UnboundedRelaxation when
/// the LP has no maximum (only possible for a non-colorful y).
SolveReport solve_tropical(const TropicalSystem& sys, const QVector& y, bool check_colorful = true);

}  // namespace posy::tropical
