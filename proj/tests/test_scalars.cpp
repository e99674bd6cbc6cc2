#include <random>

#include "doctest.h"
#include "dcla/monic.hpp"
#include "dcla/qpolynomial.hpp"
#include "dcla/rational.hpp"

using namespace dcla;

namespace {

Rational rnd(std::mt19937_64& g) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 7);
    long a = n(g), b = d(g);
    return Rational(a, b);
}

QPolynomial rnd_poly(std::mt19937_64& g, std::size_t arity) {
    QPolynomial p(Rational(0), arity);
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (int k = 0; k < 4; ++k) {
        Exponents x(arity);
        for (auto& v : x) v = e(g);
        p += QPolynomial::monomial(rnd(g), x);
    }
    return p;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(4, 2).json_str() == "2/1");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(-7, 7).to_long() == -1);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
    CHECK_THROWS_AS(Rational::parse(""), ValidationError);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(-1, 6);
    CHECK(a + b == Rational(1, 6));
    CHECK(a * b == Rational(-1, 18));
    CHECK(a / b == Rational(-2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
    CHECK_FALSE(rational_arith(a, Rational(0), ArithOp::Div).has_value());
    CHECK(*rational_arith(a, b, ArithOp::Sub) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 g(11);
    for (int k = 0; k < 200; ++k) {
        Rational x = rnd(g), y = rnd(g), z = rnd(g);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) + z == x + (y + z));
        if (!x.is_zero()) CHECK(x * x.inverse() == Rational(1));
        CHECK(Rational::parse(x.str()) == x);
        CHECK(nlohmann::json(x).get<Rational>() == x);
    }
}

TEST_CASE("polynomials in Q") {
    QPolynomial Q = QPolynomial::variable(0, 1);
    QPolynomial p = (QPolynomial(1) - Q).pow(2);
    CHECK(p.str() == "1 - 2*Q + Q^2");
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == Rational(4));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(QPolynomial(Rational(5)).is_constant());
    QPolynomial q2 = QPolynomial::variable(1, 2);
    CHECK_THROWS_AS(Q + q2, ArityMismatch);
    CHECK((QPolynomial(2) * q2).arity() == 2);
}

TEST_CASE("polynomial ring axioms on random samples") {
    std::mt19937_64 g(7);
    for (int k = 0; k < 60; ++k) {
        QPolynomial a = rnd_poly(g, 2), b = rnd_poly(g, 2), c = rnd_poly(g, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        std::vector<Rational> pt{rnd(g), rnd(g)};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK(nlohmann::json(a).get<QPolynomial>() == a);
    }
}

TEST_CASE("monic polynomials and their rational roots") {
    auto p = monic_from_roots({Rational(2), Rational(-1, 2), Rational(2)});
    CHECK(p.degree() == 3);
    CHECK(p.eval(Rational(2)).is_zero());
    REQUIRE(p.roots());
    CHECK(*p.roots() == std::vector<Rational>{Rational(-1, 2), Rational(2), Rational(2)});
    auto rs = rational_roots(MonicPolynomial(p.coefficients()));
    CHECK(rs.splits());
    CHECK(rs.roots == *p.roots());

    MonicPolynomial irreducible({Rational(-2), Rational(0)});  // x^2 - 2
    CHECK(rational_roots(irreducible).remainder_degree == 2);
    CHECK_THROWS_AS(split_roots(irreducible), NotFullyFactorable);

    // (x - 1/3)(x^2 + 1)
    MonicPolynomial mixed({Rational(-1, 3), Rational(1), Rational(-1, 3)});
    auto ms = rational_roots(mixed);
    CHECK(ms.roots == std::vector<Rational>{Rational(1, 3)});
    CHECK(ms.remainder_degree == 2);

    CHECK(monic_from_roots({}).degree() == 0);
    CHECK(monic_from_roots({}).str() == "1");
    CHECK(monic_from_roots({Rational(1), Rational(2)}).str() == "x^2 - 3*x + 2");
}

TEST_CASE("monic polynomial JSON") {
    auto p = monic_from_roots({Rational(1), Rational(3, 2)});
    nlohmann::json j = p;
    CHECK(j.get<MonicPolynomial>() == p);
    CHECK(nlohmann::json::parse(R"({"roots": [1, "3/2"]})").get<MonicPolynomial>() == p);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"roots": [1], "coefficients": ["0/1"]})").get<MonicPolynomial>(),
                    ValidationError);
    CHECK_THROWS_AS(MonicPolynomial({Rational(1)}).set_roots({Rational(2)}), ValidationError);
}
