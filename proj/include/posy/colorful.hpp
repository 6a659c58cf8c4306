#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "posy/core.hpp"

namespace posy::colorful {

/// Result of deciding y in cone(gens).
struct ConeMembership {
    std::optional<QVector> mu;  ///< y = sum mu_g g, mu >= 0
    QVector separator;          ///< when mu is empty: <s,g> >= 0 for all g and <s,y> < 0

    bool member() const { return mu.has_value(); }
};

ConeMembership cone_membership(const QVector& y, const std::vector<QVector>& gens);

/// Same as cone_membership with the extra constraint sum mu = 1 (x in conv(points)).
/// The separator then lives in the homogenized space (dimension + 1).
ConeMembership convex_membership(const QVector& x, const std::vector<QVector>& points);

enum class Verdict { Colorful, NotColorful, NotInCone };

const char* to_string(Verdict verdict);

struct ColorfulCertificate {
    Verdict verdict = Verdict::NotInCone;
    /// Flat-indexed multipliers reproducing y. NotColorful: zero on avoided_color.
    /// Colorful: a decomposition over the whole support (it touches every color).
    QVector decomposition;
    std::optional<std::size_t> avoided_color;
    /// Colorful: one Farkas separator per color i, proving y is not in cone(S \ S_i).
    /// NotInCone: a single separator for cone(S).
    std::vector<QVector> separators;

    bool colorful() const { return verdict == Verdict::Colorful; }
};

/// Decides colorfulness with at most n + 1 exact LP feasibility problems; stops at the
/// first color that can be avoided.
ColorfulCertificate is_colorful(const QVector& y, const ColoredSupport& sup);

enum class SearchStatus { Found, NoneFound, Unknown };

const char* to_string(SearchStatus status);

struct SearchResult {
    SearchStatus status = SearchStatus::NoneFound;
    QVector vector;                  ///< Found: y = sum of the tuple
    std::vector<std::size_t> tuple;  ///< Found: local index per color
    ColorfulCertificate certificate;
    std::size_t tuples_examined = 0;
};

/// Tries y = a_1 + ... + a_n for every linearly independent tuple in S_1 x ... x S_n,
/// in lexicographic order of local indices. NoneFound only says no such sum is
/// colorful; Unknown means the budget ran out first.
SearchResult find_colorful(const ColoredSupport& sup, std::size_t budget = 100000);

enum class AffineVerdict { Inside, OutsideHull, InLeaveOneOutHull };

struct AffineMembership {
    AffineVerdict verdict = AffineVerdict::OutsideHull;
    std::optional<std::size_t> color;  ///< InLeaveOneOutHull: x in conv(union of S_j, j != color)
    QVector weights;  ///< InLeaveOneOutHull: convex weights over the concatenated sets, zero on `color`

    bool inside() const { return verdict == AffineVerdict::Inside; }
};

/// x is in conv(S_1 u ... u S_n) minus the union over i of conv(union_{j != i} S_j).
/// sets are vertex lists in Q^{n-1}.
AffineMembership affine_colorful_membership(const QVector& x, const std::vector<std::vector<QVector>>& sets);

}  // namespace posy::colorful
