#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posy/colorful.hpp"
#include "posy/core.hpp"
#include "posy/geometry3.hpp"
#include "posy/gp.hpp"
#include "posy/mdp.hpp"
#include "posy/satgen.hpp"
#include "posy/tropical.hpp"

// JSON instance files and certificate output. Rationals are written as "p/q" strings.
//
//   tropical / classical: {"kind", "n", "support": [[exponent, ...] per color],
//                          "coeffs": [[coefficient, ...] per color], "vector"?, "witness"?}
//   mdp:                  {"kind", "actions": [[{"p": [...], "reward": r}, ...] per state]}
//   pointset:             {"kind", "sets": [[point, ...] per color]}
//   cnf-ref:              {"kind", "path": "f.cnf"} or {"kind", "vars": n, "clauses": [[1,-2,3], ...]}
//
// Tropical payloads accept only "p/q" or integer strings and JSON integers. Classical
// payloads additionally accept decimal strings and JSON floats, converted exactly from
// their shortest decimal form.
namespace posy::io {

using Json = nlohmann::json;

enum class Kind { Tropical, Classical, Mdp, Pointset, CnfRef };

const char* to_string(Kind kind);

struct Instance {
    Kind kind = Kind::Tropical;
    std::optional<TropicalSystem> tropical;
    std::optional<ClassicalSystem> classical;
    std::optional<mdp::MdpModel> mdp;
    std::vector<std::vector<QVector>> sets;  ///< pointset
    std::optional<satgen::Cnf> cnf;
    std::optional<QVector> vector;
    std::optional<QVector> witness;

    /// The colored support of a tropical, classical or mdp instance.
    const ColoredSupport& support() const;
};

/// Throws InvalidInput on any schema violation. Relative cnf-ref paths resolve against base.
Instance parse_instance(const Json& doc, const std::filesystem::path& base = {});
Instance load_instance(const std::filesystem::path& path);
satgen::Cnf load_cnf(const std::filesystem::path& path);

Json to_json(const Rational& value);
Json to_json(const QVector& values);
Json to_json(const std::vector<double>& values);
Json to_json(const Eigen::VectorXd& values);

Json instance_json(const TropicalSystem& sys);
Json instance_json(const ClassicalSystem& sys);
Json instance_json(const mdp::MdpModel& model);

Json report_json(const tropical::SolveReport& report);
Json report_json(const gp::KktReport& report);
Json certificate_json(const colorful::ColorfulCertificate& cert);
Json search_json(const colorful::SearchResult& result);
Json simplex_json(const geometry3::SimplexResult& result);
Json pointed_json(const PointednessCertificate& cert);

/// Parses "a,b,c" of rational strings (decimals allowed when allow_decimal).
QVector parse_vector(const std::string& text, bool allow_decimal = false);

}  // namespace posy::io
