#include "posy/satgen.hpp"

#include <sstream>
#include <string>

#include "posy/errors.hpp"

namespace posy::satgen {

Cnf::Cnf(std::size_t vars, std::vector<Clause> clauses) : vars_(vars), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (c[k].var >= vars_) throw InvalidInput("Cnf: literal variable out of range");
            for (std::size_t l = 0; l < k; ++l)
                if (c[k].var == c[l].var) throw InvalidInput("Cnf: clause repeats a variable");
        }
    }
}

bool Cnf::satisfied_by(const std::vector<bool>& assignment) const {
    if (assignment.size() != vars_) throw DimensionMismatch("Cnf: assignment has wrong length");
    for (const auto& c : clauses_) {
        bool sat = false;
        for (const auto& l : c) sat = sat || (assignment[l.var] != l.negated);
        if (!sat) return false;
    }
    return true;
}

Cnf parse_dimacs(std::istream& in) {
    std::string line;
    long vars = -1;
    long expected = -1;
    std::vector<std::vector<long>> raw;
    std::vector<long> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == 'c') continue;
        if (first[0] == '%') break;
        if (first == "p") {
            std::string format;
            if (vars >= 0 || !(ls >> format >> vars >> expected) || format != "cnf" || vars < 0 || expected < 0)
                throw InvalidInput("dimacs: malformed problem line");
            continue;
        }
        if (vars < 0) throw InvalidInput("dimacs: clause before the problem line");
        ls.clear();
        ls.str(line);
        std::string token;
        while (ls >> token) {
            long lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stol(token, &used);
                if (used != token.size()) throw InvalidInput("dimacs: bad literal '" + token + "'");
            } catch (const std::logic_error&) {
                throw InvalidInput("dimacs: bad literal '" + token + "'");
            }
            if (lit == 0) {
                raw.push_back(std::move(current));
                current.clear();
            } else {
                if (std::labs(lit) > vars) throw InvalidInput("dimacs: literal out of range");
                current.push_back(lit);
            }
        }
    }
    if (vars < 0) throw InvalidInput("dimacs: missing problem line");
    if (!current.empty()) raw.push_back(std::move(current));
    if (static_cast<long>(raw.size()) != expected)
        throw InvalidInput("dimacs: header announces " + std::to_string(expected) + " clauses, found " +
                           std::to_string(raw.size()));

    std::vector<Clause> clauses;
    for (const auto& r : raw) {
        if (r.size() != 3) throw InvalidInput("dimacs: clause without exactly three literals");
        Clause c;
        for (std::size_t k = 0; k < 3; ++k)
            c[k] = Literal{static_cast<std::size_t>(std::labs(r[k]) - 1), r[k] < 0};
        clauses.push_back(c);
    }
    return Cnf(static_cast<std::size_t>(vars), std::move(clauses));
}

Cnf parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

namespace {

QVector unit(std::size_t size, std::initializer_list<std::pair<std::size_t, int>> entries) {
    QVector v(size, Rational(0));
    for (auto [k, value] : entries) v[k] += value;
    return v;
}

}  // namespace

TropicalSystem cnf_to_tropical(const Cnf& f) {
    const Layout at(f);
    const std::size_t d = at.size();
    std::vector<std::vector<Term>> rows;
    for (std::size_t i = 0; i < at.n; ++i)
        rows.push_back({{unit(d, {{at.x(i), 1}}), Rational(-1)}, {unit(d, {{at.y(i), 1}}), Rational(-1)}});
    for (std::size_t i = 0; i < at.n; ++i) rows.push_back({{unit(d, {{at.x(i), 1}, {at.y(i), 1}}), Rational(-1)}});
    for (std::size_t j = 0; j < at.p; ++j) {
        std::vector<Term> row;
        for (const auto& l : f.clauses()[j]) row.push_back({unit(d, {{at.literal(l), 1}, {at.z(j), -1}}), Rational(0)});
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < at.p; ++j)
        rows.push_back({{unit(d, {{at.z(j), -1}}), Rational(1, 2)}, {unit(d, {{at.s(j), 1}, {at.z(j), -1}}), Rational(0)}});
    return TropicalSystem::from_terms(d, rows);
}

ClassicalSystem cnf_to_classical(const Cnf& f) {
    const Layout at(f);
    const std::size_t d = at.size();
    std::vector<std::vector<Term>> rows;
    for (std::size_t i = 0; i < at.n; ++i)
        rows.push_back({{unit(d, {{at.x(i), 1}}), Rational(2, 5)}, {unit(d, {{at.y(i), 1}}), Rational(2, 5)}});
    for (std::size_t i = 0; i < at.n; ++i) rows.push_back({{unit(d, {{at.x(i), 1}, {at.y(i), 1}}), Rational(1)}});
    for (std::size_t j = 0; j < at.p; ++j) {
        std::vector<Term> row;
        for (const auto& l : f.clauses()[j])
            row.push_back({unit(d, {{at.literal(l), 1}, {at.z(j), -1}}), Rational(1, 6)});
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < at.p; ++j)
        rows.push_back({{unit(d, {{at.z(j), -1}}), Rational(1, 3)}, {unit(d, {{at.s(j), 1}, {at.z(j), -1}}), Rational(1)}});
    return ClassicalSystem::from_terms(d, rows);
}

QVector encode_assignment(const Cnf& f, const std::vector<bool>& assignment, Kind kind) {
    if (!f.satisfied_by(assignment)) throw UnsatisfiedAssignment("encode_assignment: assignment falsifies a clause");
    const Layout at(f);
    QVector v(at.size());
    const Rational high = kind == Kind::Tropical ? Rational(1) : Rational(2);
    const Rational low = kind == Kind::Tropical ? Rational(0) : Rational(1, 2);
    for (std::size_t i = 0; i < at.n; ++i) {
        v[at.x(i)] = assignment[i] ? high : low;
        v[at.y(i)] = assignment[i] ? low : high;
    }
    for (std::size_t j = 0; j < at.p; ++j) {
        if (kind == Kind::Tropical) {
            v[at.z(j)] = 1;
            v[at.s(j)] = 1;
        } else {
            Rational sum = 0;
            for (const auto& l : f.clauses()[j]) sum += v[at.literal(l)];
            v[at.z(j)] = sum / 6;
            v[at.s(j)] = v[at.z(j)] - Rational(1, 3);
        }
    }
    return v;
}

std::optional<std::vector<bool>> sat_oracle(const Cnf& f) {
    const std::size_t n = f.vars();
    if (n > 20) throw TooLarge("sat_oracle: more than 20 variables");
    std::vector<bool> assignment(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) assignment[i] = (mask >> (n - 1 - i)) & 1u;
        if (f.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

}  // namespace posy::satgen
