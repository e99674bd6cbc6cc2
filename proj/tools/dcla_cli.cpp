#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "dcla/classify.hpp"
#include "dcla/errors.hpp"
#include "dcla/liealg.hpp"
#include "dcla/pbw.hpp"
#include "dcla/pbw_identities.hpp"
#include "dcla/pbw_text.hpp"
#include "dcla/qpolynomial.hpp"
#include "dcla/repmod.hpp"

using namespace dcla;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kMathFailure = 1, kUsage = 2, kResource = 3 };

struct AlgebraArgs {
    unsigned m = 2;
    std::string Q;
    std::string variant = "sl";
    unsigned degree_bound = 2;

    void attach(CLI::App* app) {
        app->add_option("--m", m, "rank + 1")->check(CLI::Range(2u, 8u));
        app->add_option("--Q", Q, "comma-separated Q_1..Q_{m-1}, e.g. 1/2,0 (default all 0)");
        app->add_option("--variant", variant, "sl or gl")->check(CLI::IsMember({"sl", "gl"}));
        app->add_option("--degree-bound", degree_bound, "degree bound N")->check(CLI::Range(0u, 12u));
    }

    liealg::AlgebraSpec spec() const {
        liealg::AlgebraSpec s;
        s.m = m;
        s.variant = liealg::parse_variant(variant);
        s.N = degree_bound;
        if (Q.empty()) {
            s.Q.assign(m - 1, Rational(0));
        } else {
            std::stringstream ss(Q);
            std::string item;
            while (std::getline(ss, item, ',')) s.Q.push_back(Rational::parse(item));
        }
        s.validate();
        return s;
    }
};

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

json read_json(const std::string& path, const std::string& inline_text) {
    try {
        if (!inline_text.empty()) return json::parse(inline_text);
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& j, const std::string& out, const std::string& summary) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw ValidationError("cannot write " + out);
    f << j.dump(2) << "\n";
    if (!summary.empty()) std::cout << summary << "\n";
}

json report_json(const liealg::CheckReport& r) { return json(r); }

liealg::CheckReport merge(std::vector<liealg::CheckReport> parts) {
    liealg::CheckReport out;
    for (auto& p : parts)
        for (auto& f : p.families) out.families.push_back(std::move(f));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with deformed current algebras and their modules"};
    app.require_subcommand(1);
    std::string out;
    std::uint64_t seed = selftest::AcceptanceOptions{}.seed;
    int code = kPass;

    // normalize
    auto* normalize = app.add_subcommand("normalize", "PBW normal form of a rank-1 expression");
    std::string expr, strategy = "leftmost";
    std::size_t ceiling = pbw::NormalizeOptions{}.term_ceiling;
    normalize->add_option("expression", expr, "e.g. 'X+(1)*X-(2)'")->required();
    normalize->add_option("--ceiling", ceiling, "term-count ceiling");
    normalize->add_option("--strategy", strategy, "rewrite order")
        ->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
    normalize->add_option("--seed", seed, "seed for the random strategy");
    normalize->add_option("--out", out, "write JSON here");
    normalize->callback([&] {
        pbw::NormalizeOptions o;
        o.term_ceiling = ceiling;
        o.seed = seed;
        o.strategy = strategy == "random"      ? pbw::Strategy::Random
                     : strategy == "rightmost" ? pbw::Strategy::Rightmost
                                               : pbw::Strategy::Leftmost;
        pbw::UEAElement e = pbw::normalize(pbw::parse_expression(expr), o);
        std::cout << e.str() << "\n";
        if (!out.empty()) emit(json{{"input", expr}, {"normal_form", e.str()}, {"terms", e}}, out, "");
    });

    // identities
    auto* identities = app.add_subcommand("identities", "verify the enveloping-algebra identities over a grid");
    std::vector<std::string> names;
    pbw::GridConfig grid;
    grid.bc_max = 3;
    identities->add_option("--name", names, "restrict to these identities (repeatable)");
    identities->add_option("--st-max", grid.st_max, "s, t, h range over 0..st-max");
    identities->add_option("--bc-max", grid.bc_max, "b, c range over 1..bc-max");
    identities->add_option("--partition-max", grid.partition_max, "largest partition size");
    identities->add_option("--binomial-max", grid.binomial_max, "range of the binomial convolution");
    identities->add_option("--out", out, "write JSON here");
    identities->callback([&] {
        json rows = json::array();
        std::size_t total = 0, failed = 0;
        for (const auto& info : pbw::identity_catalog()) {
            if (!names.empty() && std::find(names.begin(), names.end(), info.name) == names.end()) continue;
            std::size_t n = 0, bad = 0;
            json failing = json::array();
            for (const auto& p : pbw::identity_grid(info.name, grid)) {
                ++n;
                auto r = pbw::verify_identity(info.name, p);
                if (!r.holds) {
                    ++bad;
                    if (failing.size() < 5) failing.push_back({{"params", p}, {"difference", r.difference.str()}});
                }
            }
            total += n;
            failed += bad;
            rows.push_back({{"identity", info.name},
                            {"statement", info.statement},
                            {"instances", n},
                            {"failures", bad},
                            {"passed", bad == 0},
                            {"failing_examples", failing}});
        }
        for (const auto& name : names)
            if (std::none_of(pbw::identity_catalog().begin(), pbw::identity_catalog().end(),
                             [&](const pbw::IdentityInfo& i) { return i.name == name; }))
                throw ValidationError("unknown identity '" + name + "'");
        json j{{"grid",
                {{"st_max", grid.st_max},
                 {"bc_max", grid.bc_max},
                 {"partition_max", grid.partition_max},
                 {"binomial_max", grid.binomial_max}}},
               {"identities", rows},
               {"passed", failed == 0}};
        emit(j, out, std::to_string(total) + " instances, " + std::to_string(failed) + " failed");
        if (failed) code = kMathFailure;
    });

    // relations
    auto* relations = app.add_subcommand("relations", "check the defining relations, antisymmetry and Jacobi");
    AlgebraArgs rel_args;
    bool skip_jacobi = false;
    rel_args.attach(relations);
    relations->add_flag("--no-jacobi", skip_jacobi, "skip the Jacobi identity");
    relations->add_option("--out", out, "write JSON here");
    relations->callback([&] {
        auto spec = rel_args.spec();
        liealg::StructureEngine engine(spec);
        auto table = engine.table(spec.N);
        std::vector<liealg::CheckReport> parts{liealg::check_relations(engine, spec.N),
                                               liealg::check_antisymmetry(table)};
        if (!skip_jacobi) parts.push_back(liealg::check_jacobi(engine, spec.N));
        auto report = merge(std::move(parts));
        emit(json{{"algebra", spec}, {"report", report_json(report)}}, out,
             std::to_string(report.instances()) + " instances, " + std::to_string(report.failures()) + " failed");
        if (!report.passed()) code = kMathFailure;
    });

    // structconsts
    auto* structconsts = app.add_subcommand("structconsts", "structure constants up to the degree bound");
    AlgebraArgs sc_args;
    sc_args.attach(structconsts);
    structconsts->add_option("--out", out, "write JSON here");
    structconsts->callback([&] {
        auto spec = sc_args.spec();
        liealg::StructureEngine engine(spec);
        auto table = engine.table(spec.N);
        auto report = merge({liealg::check_relations(engine, spec.N), liealg::check_antisymmetry(table)});
        emit(json{{"table", table}, {"max_degree_growth", engine.max_degree_growth()},
                  {"verification", report_json(report)}},
             out, std::to_string(table.entries.size()) + " brackets");
        if (!report.passed()) code = kMathFailure;
    });

    // phi
    auto* phi = app.add_subcommand("phi", "the block isomorphism for a composition of m");
    std::string composition, qhat;
    unsigned phi_bound = 1;
    phi->add_option("--composition", composition, "e.g. 2,1")->required();
    phi->add_option("--Qhat", qhat, "nonzero Qhat_1..Qhat_{r-1}")->required();
    phi->add_option("--degree-bound", phi_bound, "degree bound for the relation check")->check(CLI::Range(0u, 6u));
    phi->add_option("--out", out, "write JSON here");
    phi->callback([&] {
        std::vector<unsigned> parts;
        for (const auto& r : parse_list(composition)) {
            if (!r.is_integer() || r.sign() <= 0) throw ValidationError("composition parts must be positive integers");
            parts.push_back(static_cast<unsigned>(std::stoul(r.str())));
        }
        auto report = liealg::phi_isomorphism(parts, parse_list(qhat), phi_bound);
        emit(json(report), out, report.passed() ? "isomorphism verified" : "isomorphism check failed");
        if (!report.passed()) code = kMathFailure;
    });

    // module build / classify
    auto* module = app.add_subcommand("module", "build or classify finite-dimensional modules");
    module->require_subcommand(1);
    auto* build = module->add_subcommand("build", "simple module from a classification datum or a recipe");
    AlgebraArgs mod_args;
    std::string datum_path, datum_text, recipe_path, recipe_text;
    unsigned T = 0;
    mod_args.attach(build);
    build->add_option("--datum", datum_path, "classification datum JSON file");
    build->add_option("--datum-json", datum_text, "classification datum as inline JSON");
    build->add_option("--recipe", recipe_path, "JSON array of tensor factors");
    build->add_option("--recipe-json", recipe_text, "recipe as inline JSON");
    build->add_option("--T", T, "largest stored generator degree (raised to the default)");
    build->add_option("--out", out, "write JSON here");
    build->callback([&] {
        auto spec = mod_args.spec();
        repmod::ModuleRecipe recipe{spec, {}};
        json j{{"algebra", spec}};
        int sources = !datum_path.empty() + !datum_text.empty() + !recipe_path.empty() + !recipe_text.empty();
        if (sources != 1) throw ValidationError("give exactly one of --datum, --datum-json, --recipe, --recipe-json");
        if (!datum_path.empty() || !datum_text.empty()) {
            auto d = read_json(datum_path, datum_text).get<classify::ClassificationDatum>();
            auto problems = classify::validate(classify::canonicalize(d, spec.Q), spec.Q);
            if (!problems.empty()) throw ValidationError(problems.front());
            recipe = classify::recipe_from_datum(d, spec);
            j["datum"] = d;
            j["canonical_datum"] = classify::canonicalize(d, spec.Q);
        } else {
            recipe.factors = read_json(recipe_path, recipe_text).get<std::vector<repmod::RecipeFactor>>();
        }
        j["recipe"] = recipe.factors;
        auto b = repmod::build_from_recipe(recipe, T);
        j["product_dimension"] = b.product.dim;
        j["cyclic_dimension"] = b.cyclic.dim;
        j["radical_dimension"] = b.radical_dim;
        j["dimension"] = b.simple.dim;
        j["module"] = b.simple;
        j["highest_weight"] = repmod::highest_weight_of(b.simple).weight;
        if (b.radical_dim > 0) {
            auto rad = repmod::submodule(b.cyclic, repmod::maximal_submodule(b.cyclic));
            j["radical"] = rad;
        }
        try {
            j["extracted_datum"] = classify::extract_datum_rankm(b.simple);
        } catch (const NotFullyFactorable& e) {
            j["extracted_datum"] = nullptr;
        }
        emit(j, out,
             "dimension " + std::to_string(b.simple.dim) + " (cyclic " + std::to_string(b.cyclic.dim) + ", radical " +
                 std::to_string(b.radical_dim) + ")");
    });

    auto* classify_cmd = module->add_subcommand("classify", "classification datum of a simple module");
    std::string module_path, module_text;
    classify_cmd->add_option("--module", module_path, "module JSON, or the output of 'module build'");
    classify_cmd->add_option("--module-json", module_text, "the same inline");
    classify_cmd->add_option("--out", out, "write JSON here");
    classify_cmd->callback([&] {
        if (module_path.empty() == module_text.empty()) throw ValidationError("give exactly one of --module, --module-json");
        json mj = read_json(module_path, module_text);
        if (mj.contains("module")) mj = mj.at("module");
        auto M = mj.get<repmod::WeightModule>();
        if (!M.highest) M.highest = repmod::highest_weight_of(M).vector;
        bool simple = repmod::is_simple(M);
        json j{{"algebra", M.spec}, {"simple", simple}};
        if (simple) {
            j["datum"] = classify::extract_datum_rankm(M);
            j["highest_weight"] = repmod::highest_weight_of(M).weight;
        }
        emit(j, out, simple ? "classified" : "module is not simple");
        if (!simple) code = kMathFailure;
    });

    // selftest
    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    std::vector<unsigned> criteria;
    st->add_option("--criteria", criteria, "subset of 1..7 (default all)")->delimiter(',')->check(CLI::Range(1u, 7u));
    st->add_option("--seed", seed, "seed for the sampled grids");
    st->add_option("--out", out, "write the JSON report here");
    st->callback([&] {
        selftest::AcceptanceOptions o;
        o.seed = seed;
        auto results = selftest::run_acceptance(o, criteria);
        bool all = true;
        for (const auto& r : results) {
            std::cout << selftest::summary_line(r) << "\n";
            all = all && r.passed;
        }
        if (!out.empty()) emit(json{{"seed", seed}, {"criteria", results}, {"passed", all}}, out, "");
        if (!all) code = kMathFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "resource ceiling: " << e.what() << "\n";
        return kResource;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kUsage;
    } catch (const DivisionByZero& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    } catch (const json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
