#include "dcla/liealg.hpp"
#include "dcla/qpolynomial.hpp"

namespace dcla::liealg {

using nlohmann::json;

void to_json(json& j, const AlgebraSpec& s) {
    j = json{{"m", s.m}, {"variant", to_string(s.variant)}, {"Q", s.Q}, {"degree_bound", s.N}};
}

void from_json(const json& j, AlgebraSpec& s) {
    try {
        s.m = j.at("m").get<unsigned>();
        s.variant = parse_variant(j.at("variant").get<std::string>());
        s.Q = j.at("Q").get<std::vector<Rational>>();
        s.N = j.value("degree_bound", 0u);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad algebra spec: ") + e.what());
    }
    s.validate();
}

void to_json(json& j, const LieElement& e) {
    j = json::array();
    for (const auto& [b, c] : e.terms()) j.push_back({{"element", b.str()}, {"coefficient", c}});
}

void from_json(const json& j, LieElement& e) {
    e = LieElement();
    for (const auto& t : j)
        e.add_term(BasisElement::parse(t.at("element").get<std::string>()), t.at("coefficient").get<Rational>());
}

void to_json(json& j, const StructureTable& t) {
    json entries = json::array();
    for (const auto& [key, value] : t.entries)
        entries.push_back({{"a", key.first.str()}, {"b", key.second.str()}, {"bracket", value}});
    j = json{{"algebra", t.spec}, {"entries", std::move(entries)}};
}

void from_json(const json& j, StructureTable& t) {
    t.spec = j.at("algebra").get<AlgebraSpec>();
    t.entries.clear();
    for (const auto& e : j.at("entries")) {
        auto a = BasisElement::parse(e.at("a").get<std::string>());
        auto b = BasisElement::parse(e.at("b").get<std::string>());
        if (!belongs(a, t.spec) || !belongs(b, t.spec))
            throw ValidationError("table entry outside the algebra: " + a.str() + ", " + b.str());
        t.entries[{a, b}] = e.at("bracket").get<LieElement>();
    }
}

void to_json(json& j, const CheckReport& r) {
    json fams = json::array();
    for (const auto& f : r.families)
        fams.push_back({{"family", f.family},
                        {"instances", f.instances},
                        {"failures", f.failures},
                        {"passed", f.passed()},
                        {"failing_examples", f.examples}});
    j = json{{"passed", r.passed()}, {"families", std::move(fams)}};
}

void to_json(json& j, const PhiReport& r) {
    auto images = [](const std::vector<GeneratorImage>& list) {
        json a = json::array();
        for (const auto& g : list) a.push_back({{"source", g.source}, {"target", g.target}, {"scalar", g.scalar}});
        return a;
    };
    json zi = json::array();
    for (const auto& g : r.zeta_inverse) zi.push_back(g.str());
    j = json{{"composition", r.composition},
             {"Qhat", r.Qhat},
             {"Q", r.Q},
             {"zeta_inverse", zi},
             {"phi", images(r.phi)},
             {"phi_inverse", images(r.phi_inverse)},
             {"inverse_ok", r.inverse_ok},
             {"relations", r.relations},
             {"passed", r.passed()}};
}

}  // namespace dcla::liealg
