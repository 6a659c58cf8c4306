// posy: command-line front-end. Instances are JSON files (see posy/io.hpp), output is
// one JSON document on stdout, diagnostics go to stderr.
//
// Exit codes: 0 success, 2 invalid input, 3 negative verdict, 4 non-convergence.

#include <cmath>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "posy/errors.hpp"
#include "posy/io.hpp"

namespace {

using posy::io::Json;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInvalid = 2;
constexpr int kNegative = 3;
constexpr int kNoConvergence = 4;

struct Options {
    std::string file;
    std::string vector;
    std::string kind = "tropical";
    double gp_tol = 1e-6;
    double vi_tol = 0;
    bool no_colorful_check = false;
    bool witness_only = false;
    std::size_t budget = 100000;
    std::size_t verify = 0;
    std::uint64_t seed = 1;
};

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// y from --vector, then the instance file, then a colorful search over the support.
posy::QVector objective(const Options& opt, const posy::io::Instance& inst, bool allow_decimal) {
    if (!opt.vector.empty()) return posy::io::parse_vector(opt.vector, allow_decimal);
    if (inst.vector) return *inst.vector;
    auto found = posy::colorful::find_colorful(inst.support(), opt.budget);
    if (found.status == posy::colorful::SearchStatus::Found) return found.vector;
    if (found.status == posy::colorful::SearchStatus::Unknown)
        throw posy::MaxIterations("no colorful vector found within the search budget; pass --vector");
    throw posy::NotColorful("no sum of one exponent per color is colorful; pass --vector");
}

int solve_tropical(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    if (!inst.tropical) throw posy::InvalidInput("solve-tropical needs a tropical or mdp instance");
    Json out;
    if (inst.witness) out["witness_residual"] = posy::io::to_json(posy::eval_tropical(*inst.tropical, *inst.witness));
    if (opt.witness_only) {
        if (!inst.witness) throw posy::InvalidInput("--witness-only needs a \"witness\" field");
        emit(out);
        return kOk;
    }
    const posy::QVector y = objective(opt, inst, false);
    out.update(posy::io::report_json(posy::tropical::solve_tropical(*inst.tropical, y, !opt.no_colorful_check)));
    out["vector"] = posy::io::to_json(y);
    emit(out);
    return kOk;
}

int solve_classical(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    if (!inst.classical) throw posy::InvalidInput("solve-classical needs a classical instance");
    const auto& sys = *inst.classical;
    Json out;
    if (inst.witness) {
        bool integral = true;
        for (const auto& a : sys.support().elements())
            for (const auto& e : a) integral = integral && posy::is_integer(e);
        if (integral) {
            auto values = posy::eval_classical_exact(sys, *inst.witness);
            for (auto& v : values) v -= 1;
            out["witness_residual"] = posy::io::to_json(values);
        } else {
            auto values = posy::eval_classical(sys, posy::to_double(*inst.witness));
            for (auto& v : values) v -= 1.0;
            out["witness_residual"] = posy::io::to_json(values);
        }
    }
    if (opt.witness_only) {
        if (!inst.witness) throw posy::InvalidInput("--witness-only needs a \"witness\" field");
        emit(out);
        return kOk;
    }
    const posy::QVector y = objective(opt, inst, true);
    posy::gp::Tolerances tol;
    if (opt.gp_tol > 0) tol.feasibility = tol.kkt = std::max(opt.gp_tol, 1e-9);
    try {
        posy::gp::GpProblem problem(sys, y, tol);
        auto report = posy::gp::solve_gp(problem);
        out.update(posy::io::report_json(report));
        auto values = posy::eval_classical(sys, std::vector<double>(report.x.data(), report.x.data() + report.x.size()));
        for (auto& v : values) v -= 1.0;
        out["residual"] = values;
    } catch (const posy::gp::NotConverged& e) {
        std::cerr << "posy: " << e.what() << '\n' << posy::io::report_json(e.best()).dump() << '\n';
        return kNoConvergence;
    }
    out["vector"] = posy::io::to_json(y);
    emit(out);
    return kOk;
}

int check_colorful(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    posy::QVector y;
    if (!opt.vector.empty()) y = posy::io::parse_vector(opt.vector, inst.kind == posy::io::Kind::Classical);
    else if (inst.vector) y = *inst.vector;
    else throw posy::InvalidInput("check-colorful needs --vector or a \"vector\" field");
    if (y.size() != inst.support().dimension()) throw posy::DimensionMismatch("vector has wrong dimension");
    auto cert = posy::colorful::is_colorful(y, inst.support());
    emit(posy::io::certificate_json(cert));
    return cert.colorful() ? kOk : kNegative;
}

int find_colorful(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    auto result = posy::colorful::find_colorful(inst.support(), opt.budget);
    emit(posy::io::search_json(result));
    switch (result.status) {
        case posy::colorful::SearchStatus::Found: return kOk;
        case posy::colorful::SearchStatus::NoneFound: return kNegative;
        case posy::colorful::SearchStatus::Unknown: return kNoConvergence;
    }
    return kInternal;
}

int colorful_simplex(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    if (inst.kind != posy::io::Kind::Pointset || inst.sets.size() != 3)
        throw posy::InvalidInput("colorful-simplex needs a pointset instance with three planar sets");
    auto polygon = [&](std::size_t i) {
        std::vector<posy::geometry3::Point2> pts;
        for (const auto& p : inst.sets[i]) pts.push_back(posy::geometry3::to_point(p));
        return posy::geometry3::Polygon::hull(std::move(pts));
    };
    const std::array<posy::geometry3::Polygon, 3> polys{polygon(0), polygon(1), polygon(2)};
    auto result = posy::geometry3::colorful_simplex(polys);
    Json out = posy::io::simplex_json(result);
    if (result.simplex && opt.verify > 0) {
        // Compare the triangle with the affine membership oracle on random points of a
        // box around the input.
        const auto sets = posy::geometry3::vertex_sets(polys);
        double lo[2] = {HUGE_VAL, HUGE_VAL}, hi[2] = {-HUGE_VAL, -HUGE_VAL};
        for (const auto& set : sets)
            for (const auto& p : set)
                for (int k = 0; k < 2; ++k) {
                    lo[k] = std::min(lo[k], posy::to_double(p[k]));
                    hi[k] = std::max(hi[k], posy::to_double(p[k]));
                }
        std::mt19937_64 rng(opt.seed);
        std::size_t disagreements = 0;
        for (std::size_t s = 0; s < opt.verify; ++s) {
            posy::geometry3::Point2 x;
            for (int k = 0; k < 2; ++k) {
                std::uniform_real_distribution<double> coord(lo[k] - 1, hi[k] + 1);
                x[k] = posy::rationalize(coord(rng), 1000);
            }
            const bool in_simplex = result.simplex->contains(x);
            const bool in_interior = posy::colorful::affine_colorful_membership(posy::geometry3::to_vector(x), sets).inside();
            if (in_simplex != in_interior) ++disagreements;
        }
        out["verification"] = {{"samples", opt.verify}, {"seed", opt.seed}, {"disagreements", disagreements}};
        emit(out);
        return disagreements == 0 ? kOk : kInternal;
    }
    emit(out);
    return result.simplex ? kOk : kNegative;
}

int mdp_solve(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    if (!inst.mdp) throw posy::InvalidInput("mdp-solve needs an mdp instance");
    const auto v = posy::mdp::solve_mdp(*inst.mdp);
    posy::QVector residual = posy::mdp::bellman(*inst.mdp, v);
    for (std::size_t i = 0; i < v.size(); ++i) residual[i] -= v[i];
    Json out = {{"v", posy::io::to_json(v)}, {"bellman_residual", posy::io::to_json(residual)}};
    if (opt.vi_tol > 0) {
        auto approx = posy::mdp::value_iteration(*inst.mdp, opt.vi_tol);
        double gap = 0;
        for (std::size_t i = 0; i < v.size(); ++i) gap = std::max(gap, std::abs(approx[i] - posy::to_double(v[i])));
        out["value_iteration"] = {{"v", approx}, {"tol", opt.vi_tol}, {"max_deviation", gap}};
    }
    emit(out);
    return kOk;
}

int reduce_sat(const Options& opt) {
    posy::satgen::Cnf f;
    if (opt.file.size() > 5 && opt.file.substr(opt.file.size() - 5) == ".json") {
        auto inst = posy::io::load_instance(opt.file);
        if (!inst.cnf) throw posy::InvalidInput("reduce-sat needs a DIMACS file or a cnf-ref instance");
        f = *inst.cnf;
    } else {
        f = posy::io::load_cnf(opt.file);
    }
    Json out;
    posy::satgen::Kind kind;
    if (opt.kind == "tropical") {
        kind = posy::satgen::Kind::Tropical;
        out = posy::io::instance_json(posy::satgen::cnf_to_tropical(f));
    } else if (opt.kind == "classical") {
        kind = posy::satgen::Kind::Classical;
        out = posy::io::instance_json(posy::satgen::cnf_to_classical(f));
    } else {
        throw posy::InvalidInput("--kind must be tropical or classical");
    }
    auto assignment = f.vars() <= 20 ? posy::satgen::sat_oracle(f) : std::nullopt;
    if (f.vars() <= 20) out["satisfiable"] = assignment.has_value();
    if (assignment) out["witness"] = posy::io::to_json(posy::satgen::encode_assignment(f, *assignment, kind));
    emit(out);
    return kOk;
}

int check_pointed(const Options& opt) {
    auto inst = posy::io::load_instance(opt.file);
    auto cert = posy::check_pointed(inst.support());
    emit(posy::io::pointed_json(cert));
    return cert.pointed ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"posy: tropical and classical posynomial systems"};
    app.require_subcommand(1);
    Options opt;

    auto with_file = [&](CLI::App* cmd) { cmd->add_option("file", opt.file, "instance file")->required(); };
    auto with_vector = [&](CLI::App* cmd) {
        cmd->add_option("--vector", opt.vector, "objective / test vector, comma-separated rationals");
    };

    auto* st = app.add_subcommand("solve-tropical", "solve P(x) = 0 by linear programming");
    with_file(st);
    with_vector(st);
    st->add_flag("--no-colorful-check", opt.no_colorful_check, "skip the colorfulness check of the vector");
    st->add_flag("--witness-only", opt.witness_only, "only evaluate the instance's witness");
    st->add_option("--budget", opt.budget, "tuple budget of the colorful search");

    auto* sc = app.add_subcommand("solve-classical", "solve P(x) = 1 by geometric programming");
    with_file(sc);
    with_vector(sc);
    sc->add_option("--tol", opt.gp_tol, "feasibility and KKT tolerance (floor 1e-9)");
    sc->add_flag("--witness-only", opt.witness_only, "only evaluate the instance's witness");
    sc->add_option("--budget", opt.budget, "tuple budget of the colorful search");

    auto* cc = app.add_subcommand("check-colorful", "decide whether a vector is colorful");
    with_file(cc);
    with_vector(cc);

    auto* fc = app.add_subcommand("find-colorful", "search a colorful sum of one exponent per color");
    with_file(fc);
    fc->add_option("--budget", opt.budget, "maximum number of tuples examined");

    auto* cs = app.add_subcommand("colorful-simplex", "colorful interior of three planar point sets");
    with_file(cs);
    cs->add_option("--verify", opt.verify, "compare against the membership oracle on N random points");
    cs->add_option("--seed", opt.seed, "seed of the verification sample");

    auto* ms = app.add_subcommand("mdp-solve", "exact values of a discounted MDP");
    with_file(ms);
    ms->add_option("--tol", opt.vi_tol, "also run value iteration to this tolerance");

    auto* rs = app.add_subcommand("reduce-sat", "3-SAT instance to a posynomial system");
    with_file(rs);
    rs->add_option("--kind", opt.kind, "tropical or classical")->check(CLI::IsMember({"tropical", "classical"}));

    auto* cp = app.add_subcommand("check-pointed", "decide whether the exponents are pointed");
    with_file(cp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*st) return solve_tropical(opt);
        if (*sc) return solve_classical(opt);
        if (*cc) return check_colorful(opt);
        if (*fc) return find_colorful(opt);
        if (*cs) return colorful_simplex(opt);
        if (*ms) return mdp_solve(opt);
        if (*rs) return reduce_sat(opt);
        if (*cp) return check_pointed(opt);
    } catch (const posy::InvalidInput& e) {
        std::cerr << "posy: invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const posy::TooLarge& e) {
        std::cerr << "posy: " << e.what() << '\n';
        return kInvalid;
    } catch (const posy::NegativeVerdict& e) {
        std::cerr << "posy: " << e.what() << '\n';
        return kNegative;
    } catch (const posy::MaxIterations& e) {
        std::cerr << "posy: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "posy: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
