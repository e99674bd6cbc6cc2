#include "doctest.h"
#include "dcla/classify.hpp"
#include "dcla/qpolynomial.hpp"

using namespace dcla;
using namespace dcla::classify;
using liealg::AlgebraSpec;

namespace {

MonicPolynomial roots(std::initializer_list<Rational> r) { return monic_from_roots(std::vector<Rational>(r)); }

}  // namespace

TEST_CASE("highest weight from a datum") {
    ClassificationDatum d{{roots({1, 2})}, {0}, std::nullopt};
    auto hw = hw_from_datum_sl(d, {Rational(0)}, 3);
    CHECK(hw.u[0] == std::vector<Rational>{2, 3, 5, 9});
    ClassificationDatum e{{roots({1})}, {Rational(-1, 2)}, std::nullopt};
    auto he = hw_from_datum_sl(e, {Rational(1, 3)}, 2);
    CHECK(he.u[0] == std::vector<Rational>{Rational(1, 2), Rational(1) - Rational(3, 2), Rational(1) - Rational(9, 2)});
}

TEST_CASE("validation") {
    CHECK(validate({{roots({3})}, {0}, std::nullopt}, {Rational(1, 3)}).size() == 1);
    CHECK(validate({{roots({})}, {1}, std::nullopt}, {Rational(0)}).size() == 1);
    CHECK(validate({{roots({})}, {1}, std::nullopt}, {Rational(0), Rational(0)}).size() == 3);
    CHECK(validate({{roots({2})}, {1}, std::nullopt}, {Rational(1, 3)}).empty());
    CHECK_THROWS_AS(hw_from_datum_sl({{roots({3})}, {0}, std::nullopt}, {Rational(1, 3)}, 1), ValidationError);
    ClassificationDatum g{{roots({}), roots({})}, {0, 0}, std::vector<Rational>{1, 2}};
    CHECK_THROWS_AS(hw_from_datum_gl(g, {Rational(0), Rational(0)}, 2), ValidationError);
}

TEST_CASE("canonicalization absorbs Q^{-1} roots into beta") {
    auto c = canonicalize({{roots({3, 1})}, {0}, std::nullopt}, {Rational(1, 3)});
    CHECK(c.phi[0] == roots({1}));
    CHECK(c.beta[0] == Rational(1));
    auto twice = canonicalize({{roots({3, 3, 2})}, {Rational(-1, 2)}, std::nullopt}, {Rational(1, 3)});
    CHECK(twice.phi[0] == roots({2}));
    CHECK(twice.beta[0] == Rational(3, 2));
    // Q = 0 has no such roots
    auto same = canonicalize({{roots({0})}, {0}, std::nullopt}, {Rational(0)});
    CHECK(same.phi[0] == roots({0}));
    // the non-canonical datum has the same highest weight formula
    auto a = hw_from_datum_sl(c, {Rational(1, 3)}, 4);
    std::vector<Rational> raw(5);
    for (unsigned t = 0; t <= 4; ++t) raw[t] = t == 0 ? Rational(2) : Rational(1) + Rational(3).pow(t);
    CHECK(a.u[0] == raw);
}

TEST_CASE("round trips through the module") {
    for (Rational Q : {Rational(0), Rational(1), Rational(1, 3)}) {
        AlgebraSpec s{2, Variant::sl, {Q}, 0};
        ClassificationDatum d{{roots({-1, 1, 1})}, {Q.is_zero() ? Rational(0) : Rational(-1, 2)}, std::nullopt};
        auto M = repmod::simple_from_recipe(recipe_from_datum(d, s));
        CHECK(extract_datum_rank1(M) == canonicalize(d, s.Q));
    }
    AlgebraSpec g{3, Variant::gl, {Rational(1, 2), Rational(0)}, 0};
    ClassificationDatum d{{roots({1}), roots({-1})}, {1, 0}, std::vector<Rational>{1, 2, 3, 4}};
    auto M = repmod::simple_from_recipe(recipe_from_datum(d, g), 3);
    CHECK(extract_datum_rankm(M) == d);
    CHECK(repmod::highest_weight_of(M).weight == hw_from_datum_gl(d, g.Q, 3));
    CHECK(sl_differences(hw_from_datum_gl(d, g.Q, 3)) == hw_from_datum_sl(d, g.Q, 3));
    CHECK_THROWS_AS(extract_datum_rank1(M), ValidationError);
}

TEST_CASE("an irrational highest weight is not classified by rational roots") {
    // points 1 and -1 give p_1 = 0, p_2 = 2; doubling the degree-2 generators fakes p_2 = 4,
    // the power sums of +-sqrt(2)
    AlgebraSpec s{2, Variant::sl, {Rational(0)}, 0};
    auto a = repmod::evaluation_twist(repmod::fundamental_module(2, 1), Rational(1), s, 2);
    auto b = repmod::evaluation_twist(repmod::fundamental_module(2, 1), Rational(-1), s, 2);
    auto P = repmod::tensor(a, b);
    for (auto& [key, m] : P.gens)
        if (key.t == 2) m *= Rational(2);
    P.highest = repmod::highest_weight_of(P).vector;
    CHECK_THROWS_AS(extract_datum_rankm(P), NotFullyFactorable);
}

TEST_CASE("datum JSON") {
    ClassificationDatum d{{roots({1, Rational(1, 2)})}, {Rational(-1, 2)}, std::vector<Rational>{0, 1}};
    nlohmann::json j = d;
    CHECK(j.get<ClassificationDatum>() == d);
    auto parsed = nlohmann::json::parse(R"({"phi": [{"roots": [2]}], "beta": [0]})").get<ClassificationDatum>();
    CHECK(parsed.phi[0] == roots({2}));
    CHECK_FALSE(parsed.h.has_value());
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"phi": 3})").get<ClassificationDatum>(), ValidationError);
}
