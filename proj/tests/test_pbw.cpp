#include <random>

#include "doctest.h"
#include "dcla/pbw.hpp"
#include "dcla/pbw_derived.hpp"
#include "dcla/pbw_text.hpp"

using namespace dcla;
using namespace dcla::pbw;

namespace {

UEAElement nf(const std::string& s, const NormalizeOptions& o = {}) { return normalize(parse_expression(s), o); }

std::string random_word(std::mt19937_64& g, int len) {
    static const char* gens[] = {"X+(0)", "X+(1)", "X-(0)", "X-(2)", "J(0)", "J(1)", "Q", "2/3"};
    std::uniform_int_distribution<int> pick(0, 7);
    std::string s;
    for (int k = 0; k < len; ++k) s += (k ? "*" : "") + std::string(gens[pick(g)]);
    return s;
}

}  // namespace

TEST_CASE("generator brackets") {
    CHECK(nf("X+(1)*X-(2)").str() == "X-(2)*X+(1) + J(3) - Q*J(4)");
    CHECK(nf("J(0)*J(1)").str() == "J(0)*J(1)");
    CHECK(nf("J(1)*J(0)").str() == "J(0)*J(1)");
    // [J_s, X+_t] = 2 X+_{s+t}
    CHECK(nf("J(1)*X+(2) - X+(2)*J(1)").str() == "2*X+(3)");
    CHECK(nf("J(2)*X-(0) - X-(0)*J(2)").str() == "-2*X-(2)");
    CHECK(bracket_gen(Xp(0), Xm(0)).str() == "J(0) - Q*J(1)");
    CHECK(bracket_gen(Xm(0), Xp(0)).str() == "-J(0) + Q*J(1)");
    CHECK(bracket_gen(Jg(0), Jg(3)).is_zero());
}

TEST_CASE("shift relation [X_{s+1}, X_t] = [X_s, X_{t+1}]") {
    for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t)
            for (const char* x : {"X+", "X-"}) {
                auto gen = [&](int d) { return std::string(x) + "(" + std::to_string(d) + ")"; };
                auto br = [&](int a, int b) { return gen(a) + "*" + gen(b) + " - " + gen(b) + "*" + gen(a); };
                CHECK(nf(br(s + 1, t) + " - (" + br(s, t + 1) + ")").is_zero());
            }
}

TEST_CASE("a three-letter product") {
    CHECK(nf("X+(0)*X+(0)*X-(0)").str() ==
          "X-(0)*X+(0)^2 + 2*J(0)*X+(0) - 2*Q*J(1)*X+(0) - 2*X+(0) + 2*Q*X+(1)");
}

TEST_CASE("normal forms are idempotent and independent of the rewrite order") {
    std::mt19937_64 g(31);
    for (int k = 0; k < 40; ++k) {
        std::string w = random_word(g, 2 + k % 4) + " - " + random_word(g, 3);
        UEAElement left = nf(w);
        NormalizeOptions right{1'000'000, Strategy::Rightmost, 0};
        NormalizeOptions random{1'000'000, Strategy::Random, static_cast<std::uint64_t>(k)};
        CHECK(nf(w, right) == left);
        CHECK(nf(w, random) == left);
        Expression again(left);
        CHECK(normalize(again) == left);
        CHECK(nf(left.str()) == left);
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937_64 g(37);
    for (int k = 0; k < 20; ++k) {
        UEAElement a = nf(random_word(g, 2)), b = nf(random_word(g, 2)), c = nf(random_word(g, 1));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("dagger") {
    UEAElement e = nf("X+(1)*X-(2)");
    CHECK(dagger(e).str() == "X-(1)*X+(2) + J(3) - Q*J(4)");
    std::mt19937_64 g(41);
    for (int k = 0; k < 20; ++k) {
        UEAElement a = nf(random_word(g, 3));
        CHECK(dagger(dagger(a)) == a);
        UEAElement b = nf(random_word(g, 2));
        CHECK(dagger(multiply(a, b)) == multiply(dagger(b), dagger(a)));
    }
}

TEST_CASE("term ceiling") {
    NormalizeOptions tiny{3, Strategy::Leftmost, 0};
    CHECK_THROWS_AS(nf("X+(0)^3*X-(0)^3", tiny), ResourceLimitExceeded);
}

TEST_CASE("derived elements") {
    CHECK(jay_power(1, 1).str() == "J(1) - Q*J(2)");
    CHECK(jay_power(4, 0).str() == "1");
    CHECK(divided_power(Sign::Plus, 0, 2).str() == "1/2*X+(0)^2");
    CHECK(divided_power(Sign::Plus, 0, -1).is_zero());
    CHECK(shifted_block(Sign::Minus, 0, 1, 1).str() == "X-(1) - Q*X-(2)");
    CHECK(shifted_block(Sign::Plus, -1, 1, 1).str() == "X+(0) - Q*X+(1)");
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partition_block(Sign::Plus, 0, {}, 1).str() == "1");
}

TEST_CASE("parser") {
    CHECK(nf("-(X+(0))").str() == "-X+(0)");
    CHECK(nf("(1-Q)^2*J(2)").str() == "(1 - 2*Q + Q^2)*J(2)");
    CHECK(nf("1/2*J(0) + 1/2*J(0)").str() == "J(0)");
    try {
        parse_expression("X+(1)*");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
    CHECK_THROWS_AS(parse_expression("X*(1)"), ParseError);
    CHECK_THROWS_AS(parse_expression("J(1"), ParseError);
    CHECK_THROWS_AS(parse_expression("K(1)"), ParseError);
}

TEST_CASE("JSON round trip") {
    UEAElement e = nf("X+(0)*X+(0)*X-(0)");
    nlohmann::json j = e;
    CHECK(j.get<UEAElement>() == e);
}
