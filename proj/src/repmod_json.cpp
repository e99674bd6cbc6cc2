#include "dcla/qpolynomial.hpp"
#include "dcla/repmod.hpp"

namespace dcla::repmod {

using nlohmann::json;

void to_json(json& j, const WeightModule& M) {
    json gens = json::array();
    for (const auto& [key, g] : M.gens) gens.push_back({{"generator", key.str(M.spec.variant)}, {"matrix", g}});
    json weights = json::array();
    for (const auto& [w, idx] : M.weight_table()) weights.push_back({{"weight", w}, {"basis", idx}});
    j = json{{"algebra", M.spec},
             {"T", M.T},
             {"evaluation_factors", M.evaluation_factors},
             {"dimension", M.dim},
             {"weights", std::move(weights)},
             {"generators", std::move(gens)},
             {"highest_vector", M.highest ? json(*M.highest) : json(nullptr)}};
}

void from_json(const json& j, WeightModule& M) {
    M = WeightModule();
    M.spec = j.at("algebra").get<AlgebraSpec>();
    M.T = j.at("T").get<unsigned>();
    M.evaluation_factors = j.value("evaluation_factors", 0u);
    M.dim = j.at("dimension").get<std::size_t>();
    M.weights.assign(M.dim, Vector());
    std::vector<bool> seen(M.dim, false);
    for (const auto& w : j.at("weights")) {
        Vector wt = w.at("weight").get<Vector>();
        for (auto k : w.at("basis").get<std::vector<std::size_t>>()) {
            if (k >= M.dim || seen[k]) throw ValidationError("weight table does not partition the basis");
            seen[k] = true;
            M.weights[k] = wt;
        }
    }
    for (bool s : seen)
        if (!s) throw ValidationError("weight table does not cover the basis");
    for (const auto& g : j.at("generators")) {
        Matrix A = g.at("matrix").get<Matrix>();
        if (A.rows() != M.dim || A.cols() != M.dim) throw ValidationError("generator matrix of the wrong size");
        M.gens[GenKey::parse(g.at("generator").get<std::string>())] = std::move(A);
    }
    if (j.contains("highest_vector") && !j.at("highest_vector").is_null())
        M.highest = j.at("highest_vector").get<Vector>();
}

void to_json(json& j, const HighestWeight& h) {
    j = json{{"variant", liealg::to_string(h.variant)}, {"u", h.u}};
}

void to_json(json& j, const RecipeFactor& f) {
    switch (f.kind) {
        case RecipeFactor::Kind::Fundamental:
            j = json{{"kind", "fundamental"}, {"l", f.l}, {"gamma", f.gamma}};
            return;
        case RecipeFactor::Kind::OneDimSl: j = json{{"kind", "one_dim_sl"}, {"beta", f.values}}; return;
        case RecipeFactor::Kind::OneDimGlB: j = json{{"kind", "one_dim_gl_b"}, {"beta", f.values}}; return;
        case RecipeFactor::Kind::OneDimGlH: j = json{{"kind", "one_dim_gl_h"}, {"h", f.values}}; return;
    }
}

void from_json(const json& j, RecipeFactor& f) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "fundamental")
        f = RecipeFactor::fundamental(j.at("l").get<unsigned>(), j.at("gamma").get<Rational>());
    else if (kind == "one_dim_sl")
        f = RecipeFactor::sl_beta(j.at("beta").get<std::vector<Rational>>());
    else if (kind == "one_dim_gl_b")
        f = RecipeFactor::gl_beta(j.at("beta").get<std::vector<Rational>>());
    else if (kind == "one_dim_gl_h")
        f = RecipeFactor::gl_h(j.at("h").get<std::vector<Rational>>());
    else
        throw ValidationError("unknown recipe factor kind '" + kind + "'");
}

}  // namespace dcla::repmod
