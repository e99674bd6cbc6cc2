#include "doctest.h"
#include "dcla/pbw_derived.hpp"
#include "dcla/pbw_identities.hpp"

using namespace dcla;
using namespace dcla::pbw;

TEST_CASE("every catalogued identity holds on a small grid") {
    GridConfig small{1, 2, 3, 4};
    for (const auto& info : identity_catalog()) {
        auto grid = identity_grid(info.name, small);
        CHECK_MESSAGE(!grid.empty(), info.name);
        for (const auto& p : grid) {
            auto r = verify_identity(info.name, p);
            CHECK_MESSAGE(r.holds, info.name, " leaves ", r.difference.str());
        }
    }
}

TEST_CASE("sample instances") {
    CHECK(verify_identity("xplus_shifted_xminus", {{"s", 1}, {"t", 2}, {"h", 1}, {"p", 2}}).holds);
    CHECK(verify_identity("commutation_divided_powers", {{"s", 0}, {"t", 1}, {"b", 2}, {"c", 3}}).holds);
    CHECK(verify_identity("jay_power_xplus", {{"s", 2}, {"t", 0}, {"p", 3}}).holds);
}

TEST_CASE("unknown identities and bad parameters are rejected") {
    CHECK_THROWS_AS(verify_identity("no_such_identity", {}), ValidationError);
    CHECK_THROWS_AS(verify_identity("jay_power_xplus", {{"s", 0}, {"t", 0}}), ValidationError);
    CHECK_THROWS_AS(verify_identity("jay_power_xplus", {{"s", -1}, {"t", 0}, {"p", 1}}), ValidationError);
    CHECK_THROWS_AS(identity_grid("no_such_identity", GridConfig{}), ValidationError);
}

TEST_CASE("a perturbed right-hand side does not normalize to zero") {
    // [J_s^<1>, X+_t] is 2 X+_{s+t} - 2Q X+_{s+t+1}; dropping the Q term must be detected
    Expression lhs = Expression(jay_power(1, 1)) * Expression(Xp(0)) - Expression(Xp(0)) * Expression(jay_power(1, 1));
    UEAElement right = UEAElement(Xp(1)) * Rational(2) - UEAElement(Xp(2)) * Rational(2);
    CHECK_FALSE((normalize(lhs) - right).is_zero());
    UEAElement correct = UEAElement(Xp(1)) * Rational(2) - UEAElement(Xp(2)) * QPolynomial(Rational(2)) * Q();
    CHECK((normalize(lhs) - correct).is_zero());
}
