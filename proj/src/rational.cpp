#include "posy/rational.hpp"

#include <cmath>
#include <regex>

#include "posy/errors.hpp"

namespace posy {

namespace {

const std::regex& fraction_pattern() {
    static const std::regex re(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
    return re;
}

const std::regex& decimal_pattern() {
    static const std::regex re(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
    return re;
}

// Integer(std::string) treats a leading 0 as an octal prefix.
Integer decimal_integer(std::string digits) {
    bool negative = !digits.empty() && digits[0] == '-';
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    const auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? std::string("0") : digits.substr(first);
    Integer value(digits);
    return negative ? Integer(-value) : value;
}

Integer pow10(long exponent) {
    Integer result = 1;
    for (long k = 0; k < exponent; ++k) result *= 10;
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_decimal) {
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, fraction_pattern())) {
        Integer num = decimal_integer(m[1].str());
        Integer den = m[2].matched ? decimal_integer(m[2].str()) : Integer(1);
        if (den == 0) throw InvalidInput("zero denominator in rational '" + s + "'");
        return Rational(num, den);
    }
    if (allow_decimal && std::regex_match(s, m, decimal_pattern())) {
        const std::string whole = m[2].str();
        const std::string frac = m[3].matched ? m[3].str() : std::string();
        if (whole.empty() && frac.empty()) throw InvalidInput("malformed number '" + s + "'");
        long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
        if (std::labs(exponent) > 4000) throw InvalidInput("exponent out of range in '" + s + "'");
        Integer digits = decimal_integer(whole + frac);
        exponent -= static_cast<long>(frac.size());
        Rational value = exponent >= 0 ? Rational(digits * pow10(exponent))
                                       : Rational(digits, pow10(-exponent));
        return m[1].str() == "-" ? Rational(-value) : value;
    }
    throw InvalidInput("not an exact rational: '" + s + "'");
}

std::string to_string(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::vector<double> to_double(const QVector& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_double(v));
    return out;
}

Rational rationalize(double value, std::int64_t max_denominator) {
    if (!std::isfinite(value)) throw InvalidInput("cannot rationalize a non-finite value");
    if (max_denominator < 1) throw InvalidInput("max_denominator must be positive");
    // Convergents p_k/q_k of the continued fraction of value, computed on the exact binary value.
    Rational x(value);
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    const Integer limit = max_denominator;
    while (true) {
        Integer num = boost::multiprecision::numerator(x);
        Integer den = boost::multiprecision::denominator(x);
        Integer a = num / den;
        if (num < 0 && a * den != num) a -= 1;  // floor
        Integer p2 = a * p1 + p0;
        Integer q2 = a * q1 + q0;
        if (q2 > limit) {
            // Best semiconvergent still within the bound.
            Integer t = (limit - q0) / q1;
            Rational semi(t * p1 + p0, t * q1 + q0);
            Rational conv(p1, q1);
            Rational exact(value);
            return boost::multiprecision::abs(semi - exact) < boost::multiprecision::abs(conv - exact) ? semi
                                                                                                          : conv;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational rest = x - Rational(a);
        if (rest == 0) return Rational(p1, q1);
        x = 1 / rest;
    }
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace posy
