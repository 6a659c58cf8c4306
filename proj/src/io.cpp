#include "posy/io.hpp"

#include <fstream>
#include <sstream>

#include "posy/errors.hpp"

namespace posy::io {

namespace {

Rational parse_number(const Json& j, bool allow_decimal) {
    if (j.is_string()) return parse_rational(j.get<std::string>(), allow_decimal);
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_number_float()) {
        if (!allow_decimal) throw InvalidInput("floating-point number " + j.dump() + " in an exact payload");
        return parse_rational(j.dump(), true);
    }
    throw InvalidInput("expected a number, got " + j.dump());
}

QVector parse_vec(const Json& j, bool allow_decimal) {
    if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
    QVector v;
    for (const auto& e : j) v.push_back(parse_number(e, allow_decimal));
    return v;
}

const Json& field(const Json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t parse_size(const Json& j, const char* what) {
    if (!j.is_number_unsigned()) throw InvalidInput(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

// support + coeffs, shared by the tropical and classical kinds
std::pair<ColoredSupport, QVector> parse_system(const Json& doc, bool allow_decimal) {
    const std::size_t n = parse_size(field(doc, "n"), "n");
    const Json& support = field(doc, "support");
    const Json& coeffs = field(doc, "coeffs");
    if (!support.is_array() || !coeffs.is_array() || support.size() != coeffs.size())
        throw InvalidInput("support and coeffs must be arrays with one entry per color");
    std::vector<std::vector<QVector>> colors;
    QVector flat;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (!support[i].is_array() || !coeffs[i].is_array() || support[i].size() != coeffs[i].size())
            throw InvalidInput("color " + std::to_string(i) + ": support and coeffs differ in length");
        std::vector<QVector> color;
        for (const auto& a : support[i]) color.push_back(parse_vec(a, allow_decimal));
        for (const auto& c : coeffs[i]) flat.push_back(parse_number(c, allow_decimal));
        colors.push_back(std::move(color));
    }
    return {ColoredSupport(n, std::move(colors)), std::move(flat)};
}

satgen::Cnf parse_inline_cnf(const Json& doc) {
    const std::size_t vars = parse_size(field(doc, "vars"), "vars");
    std::vector<satgen::Clause> clauses;
    for (const auto& c : field(doc, "clauses")) {
        if (!c.is_array() || c.size() != 3) throw InvalidInput("clause without exactly three literals");
        satgen::Clause clause;
        for (std::size_t k = 0; k < 3; ++k) {
            if (!c[k].is_number_integer()) throw InvalidInput("literal must be an integer");
            const auto lit = c[k].get<std::int64_t>();
            if (lit == 0) throw InvalidInput("literal 0");
            clause[k] = {static_cast<std::size_t>(std::llabs(lit) - 1), lit < 0};
        }
        clauses.push_back(clause);
    }
    return satgen::Cnf(vars, std::move(clauses));
}

Json vectors_json(const std::vector<QVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(v));
    return out;
}

Json system_json(const char* kind, const ColoredSupport& sup, const QVector& coeffs) {
    Json support = Json::array();
    Json cs = Json::array();
    for (std::size_t i = 0; i < sup.num_colors(); ++i) {
        Json color = Json::array();
        Json coeff = Json::array();
        auto [begin, end] = sup.color_range(i);
        for (std::size_t k = begin; k < end; ++k) {
            color.push_back(to_json(sup.element(k)));
            coeff.push_back(to_json(coeffs[k]));
        }
        support.push_back(std::move(color));
        cs.push_back(std::move(coeff));
    }
    return {{"kind", kind}, {"n", sup.dimension()}, {"support", support}, {"coeffs", cs}};
}

Json point_json(const geometry3::Point2& p) { return to_json(geometry3::to_vector(p)); }

}  // namespace

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::Tropical: return "tropical";
        case Kind::Classical: return "classical";
        case Kind::Mdp: return "mdp";
        case Kind::Pointset: return "pointset";
        case Kind::CnfRef: return "cnf-ref";
    }
    return "?";
}

const ColoredSupport& Instance::support() const {
    if (tropical) return tropical->support();
    if (classical) return classical->support();
    throw InvalidInput(std::string("a ") + to_string(kind) + " instance has no colored support here");
}

Instance parse_instance(const Json& doc, const std::filesystem::path& base) {
    if (!doc.is_object()) throw InvalidInput("instance must be a JSON object");
    const Json& kind = field(doc, "kind");
    if (!kind.is_string()) throw InvalidInput("kind must be a string");
    const std::string k = kind.get<std::string>();
    Instance inst;
    bool exact = true;
    if (k == "tropical") {
        inst.kind = Kind::Tropical;
        auto [sup, coeffs] = parse_system(doc, false);
        inst.tropical = TropicalSystem(std::move(sup), std::move(coeffs));
    } else if (k == "classical") {
        inst.kind = Kind::Classical;
        exact = false;
        auto [sup, coeffs] = parse_system(doc, true);
        inst.classical = ClassicalSystem(std::move(sup), std::move(coeffs));
    } else if (k == "mdp") {
        inst.kind = Kind::Mdp;
        std::vector<std::vector<mdp::Action>> actions;
        for (const auto& state : field(doc, "actions")) {
            std::vector<mdp::Action> list;
            for (const auto& a : state) list.push_back({parse_vec(field(a, "p"), false), parse_number(field(a, "reward"), false)});
            actions.push_back(std::move(list));
        }
        inst.mdp = mdp::MdpModel(std::move(actions));
        inst.tropical = mdp::to_tropical(*inst.mdp);
    } else if (k == "pointset") {
        inst.kind = Kind::Pointset;
        for (const auto& set : field(doc, "sets")) {
            std::vector<QVector> pts;
            for (const auto& p : set) pts.push_back(parse_vec(p, false));
            if (pts.empty()) throw InvalidInput("empty point set");
            inst.sets.push_back(std::move(pts));
        }
        if (inst.sets.size() < 2) throw InvalidInput("pointset needs at least two sets");
        for (const auto& set : inst.sets)
            for (const auto& p : set)
                if (p.size() + 1 != inst.sets.size()) throw DimensionMismatch("pointset: n sets must live in dimension n-1");
    } else if (k == "cnf-ref") {
        inst.kind = Kind::CnfRef;
        if (doc.contains("path")) {
            std::filesystem::path p = field(doc, "path").get<std::string>();
            inst.cnf = load_cnf(p.is_relative() ? base / p : p);
        } else {
            inst.cnf = parse_inline_cnf(doc);
        }
    } else {
        throw InvalidInput("unknown instance kind \"" + k + "\"");
    }
    if (doc.contains("vector")) inst.vector = parse_vec(doc["vector"], !exact);
    if (doc.contains("witness")) inst.witness = parse_vec(doc["witness"], !exact);
    return inst;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
    try {
        return parse_instance(doc, path.parent_path());
    } catch (const Json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

satgen::Cnf load_cnf(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    return satgen::parse_dimacs(in);
}

Json to_json(const Rational& value) { return posy::to_string(value); }

Json to_json(const QVector& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(posy::to_string(v));
    return out;
}

Json to_json(const std::vector<double>& values) { return Json(values); }

Json to_json(const Eigen::VectorXd& values) {
    return Json(std::vector<double>(values.data(), values.data() + values.size()));
}

Json instance_json(const TropicalSystem& sys) { return system_json("tropical", sys.support(), sys.coeffs()); }

Json instance_json(const ClassicalSystem& sys) { return system_json("classical", sys.support(), sys.coeffs()); }

Json instance_json(const mdp::MdpModel& model) {
    Json states = Json::array();
    for (const auto& list : model.actions()) {
        Json actions = Json::array();
        for (const auto& a : list) actions.push_back({{"p", to_json(a.p)}, {"reward", to_json(a.reward)}});
        states.push_back(std::move(actions));
    }
    return {{"kind", "mdp"}, {"actions", states}};
}

Json report_json(const tropical::SolveReport& report) {
    Json active = Json::array();
    for (const auto& a : report.active) active.push_back(a ? Json(*a) : Json(nullptr));
    return {{"x", to_json(report.x)},
            {"objective", to_json(report.objective)},
            {"dual", to_json(report.dual)},
            {"active", active},
            {"residual", to_json(report.residual)},
            {"colorful_checked", report.colorful_checked}};
}

Json report_json(const gp::KktReport& report) {
    return {{"X", to_json(report.X)},
            {"x", to_json(report.x)},
            {"lambda", to_json(report.lambda)},
            {"Z", to_json(report.Z)},
            {"g", to_json(report.g)},
            {"stationarity", report.stationarity},
            {"barrier_t", report.barrier_t},
            {"newton_steps", report.newton_steps}};
}

Json certificate_json(const colorful::ColorfulCertificate& cert) {
    Json out = {{"verdict", colorful::to_string(cert.verdict)}, {"separators", vectors_json(cert.separators)}};
    if (!cert.decomposition.empty()) out["decomposition"] = to_json(cert.decomposition);
    if (cert.avoided_color) out["avoided_color"] = *cert.avoided_color;
    return out;
}

Json search_json(const colorful::SearchResult& result) {
    Json out = {{"status", colorful::to_string(result.status)}, {"tuples_examined", result.tuples_examined}};
    if (result.status == colorful::SearchStatus::Found) {
        out["vector"] = to_json(result.vector);
        out["tuple"] = result.tuple;
        out["certificate"] = certificate_json(result.certificate);
    }
    return out;
}

Json simplex_json(const geometry3::SimplexResult& result) {
    Json out = {{"failure", geometry3::to_string(result.failure)}};
    if (result.color) out["color"] = *result.color;
    if (!result.simplex) return out;
    const auto& s = *result.simplex;
    Json vertices = Json::array();
    for (const auto& v : s.vertices) vertices.push_back(point_json(v));
    Json tangents = Json::array();
    for (const auto& t : s.tangents) {
        Json touching = Json::array();
        for (const auto& p : t.touching) touching.push_back(p ? point_json(*p) : Json(nullptr));
        Json line = {{"normal", point_json(t.line.normal)},
                     {"offset", to_json(t.line.offset)},
                     {"separated", t.separated},
                     {"touching", touching}};
        if (auto h = t.h()) line["h"] = point_json(*h);
        tangents.push_back(std::move(line));
    }
    out["vertices"] = vertices;
    out["tangents"] = tangents;
    out["barycenter"] = point_json(s.barycenter());
    return out;
}

Json pointed_json(const PointednessCertificate& cert) {
    Json out = {{"pointed", cert.pointed}, {"optimum", to_json(cert.optimum)}};
    if (cert.pointed) out["witness"] = to_json(cert.witness);
    return out;
}

QVector parse_vector(const std::string& text, bool allow_decimal) {
    QVector v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) v.push_back(parse_rational(item, allow_decimal));
    if (v.empty()) throw InvalidInput("empty vector");
    return v;
}

}  // namespace posy::io
