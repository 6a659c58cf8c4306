#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "posy/rational.hpp"

namespace posy {

/// Identity of a support element: which color (equation) it belongs to and its
/// position inside that color.
struct Tag {
    std::size_t color;
    std::size_t local;
    bool operator==(const Tag&) const = default;
};

/// n colored, nonempty, finite sets of exponent vectors in Q^n, kept as a disjoint
/// union: equal vectors in different colors are different elements. Elements are also
/// addressed by a flat index running color by color.
class ColoredSupport {
public:
    ColoredSupport() = default;
    /// Throws InvalidInput if a color is empty or a vector has the wrong length.
    ColoredSupport(std::size_t dimension, std::vector<std::vector<QVector>> colors);

    std::size_t dimension() const { return dimension_; }
    std::size_t num_colors() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const { return elements_.size(); }

    std::size_t color_size(std::size_t color) const { return offsets_[color + 1] - offsets_[color]; }
    std::size_t flat_index(std::size_t color, std::size_t local) const { return offsets_[color] + local; }
    /// Flat indices [begin, end) of one color.
    std::pair<std::size_t, std::size_t> color_range(std::size_t color) const {
        return {offsets_[color], offsets_[color + 1]};
    }
    Tag tag(std::size_t flat) const { return tags_[flat]; }
    const QVector& element(std::size_t flat) const { return elements_[flat]; }
    const QVector& element(std::size_t color, std::size_t local) const {
        return elements_[flat_index(color, local)];
    }
    const std::vector<QVector>& elements() const { return elements_; }
    std::vector<QVector> color(std::size_t color) const;

    bool operator==(const ColoredSupport&) const = default;

private:
    std::size_t dimension_ = 0;
    std::vector<QVector> elements_;
    std::vector<Tag> tags_;
    std::vector<std::size_t> offsets_;
};

/// One colored term: exponent vector and coefficient.
struct Term {
    QVector exponent;
    Rational coeff;
};

/// P_i(x) = max_{a in S_i} (c_a + <a,x>), i = 1..n, with exact rational data.
class TropicalSystem {
public:
    TropicalSystem() = default;
    TropicalSystem(ColoredSupport support, QVector coeffs);
    /// Convenience: terms grouped per color.
    static TropicalSystem from_terms(std::size_t dimension, const std::vector<std::vector<Term>>& colors);

    const ColoredSupport& support() const { return support_; }
    const QVector& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t flat) const { return coeffs_[flat]; }
    std::size_t dimension() const { return support_.dimension(); }

    bool operator==(const TropicalSystem&) const = default;

private:
    ColoredSupport support_;
    QVector coeffs_;
};

/// P_i(x) = sum_{a in S_i} c_a x^a, i = 1..n, with c_a > 0.
class ClassicalSystem {
public:
    ClassicalSystem() = default;
    /// Throws InvalidInput on a nonpositive coefficient.
    ClassicalSystem(ColoredSupport support, QVector coeffs);
    static ClassicalSystem from_terms(std::size_t dimension, const std::vector<std::vector<Term>>& colors);

    const ColoredSupport& support() const { return support_; }
    const QVector& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t flat) const { return coeffs_[flat]; }
    std::size_t dimension() const { return support_.dimension(); }

    bool operator==(const ClassicalSystem&) const = default;

private:
    ColoredSupport support_;
    QVector coeffs_;
};

/// Component i is max_{a in S_i} (c_a + <a,x>), exact.
QVector eval_tropical(const TropicalSystem& sys, const QVector& x);

/// Component i is sum_{a in S_i} c_a prod_k x_k^{a_k}, in double precision.
std::vector<double> eval_classical(const ClassicalSystem& sys, const std::vector<double>& x);

/// Exact evaluation at a rational point; requires integer exponents.
QVector eval_classical_exact(const ClassicalSystem& sys, const QVector& x);

/// Witness z with <a,z> < 0 for all support elements, or a non-pointedness verdict.
struct PointednessCertificate {
    bool pointed = false;
    QVector witness;  ///< empty when not pointed
    Rational optimum;  ///< value of max t s.t. <a,z> + t <= 0, t <= 1 (1 or 0)
};

PointednessCertificate check_pointed(const ColoredSupport& sup);

}  // namespace posy
