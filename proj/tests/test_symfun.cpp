#include <algorithm>
#include <random>

#include "doctest.h"
#include "dcla/qpolynomial.hpp"
#include "dcla/symfun.hpp"

using namespace dcla;
using namespace dcla::symfun;

namespace {

std::vector<Rational> random_points(std::mt19937_64& g, std::size_t n) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    std::vector<Rational> x(n);
    for (auto& v : x) {
        long a = num(g), b = den(g);
        v = Rational(a, b);
    }
    return x;
}

}  // namespace

TEST_CASE("small power sums and elementary symmetric functions") {
    SymInstance s({Rational(1), Rational(2), Rational(3)});
    CHECK(power_sum(s, 1) == Rational(6));
    CHECK(power_sum(s, 2) == Rational(14));
    CHECK(elementary(s, 1) == Rational(6));
    CHECK(elementary(s, 2) == Rational(11));
    CHECK(elementary(s, 3) == Rational(6));
    CHECK(elementary(s, 4) == Rational(0));
    SymInstance w({Rational(1), Rational(2)}, {Rational(5), Rational(7)});
    CHECK(weighted_power_sum(w, 1) == Rational(19));
    // e^{(b)}_2 = x1 x2 (b1 + b2)
    CHECK(weighted_elementary(w, 2) == Rational(24));
    CHECK(weighted_elementary(w, 1) == Rational(19));
    CHECK_THROWS_AS(s.b(), ValidationError);
}

TEST_CASE("Newton, tail and weighted identities on random rational points") {
    std::mt19937_64 g(17);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            SymInstance s(random_points(g, n), random_points(g, n));
            for (unsigned k = 1; k <= n + 3; ++k) CHECK(check_newton_identity(s, k));
            for (unsigned t = n + 1; t <= n + 4; ++t) CHECK(check_tail_identity(s, t));
            for (unsigned k = 0; k < n; ++k) CHECK(check_weighted_newton_identity(s, k));
            CHECK(check_weighted_tail_identity(s));
        }
    CHECK_THROWS_AS(check_tail_identity(SymInstance({Rational(1), Rational(2)}), 2), PreconditionError);
}

TEST_CASE("the identities fail once a term is perturbed") {
    // a wrong sign in the tail sum is caught
    std::vector<Rational> x{Rational(1), Rational(2), Rational(-3)};
    std::span<const Rational> xs(x);
    auto e = elementary_all(xs);
    Rational wrong = power_sum(xs, 2) * e[3] + power_sum(xs, 3) * e[2] + power_sum(xs, 4) * e[1] - power_sum(xs, 4);
    CHECK_FALSE(wrong.is_zero());
    CHECK(tail_residual(xs, 4).is_zero());
}

TEST_CASE("identities hold as polynomial identities for n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<QPolynomial> x, b;
        for (std::size_t i = 0; i < n; ++i) {
            x.push_back(QPolynomial::variable(i, 2 * n));
            b.push_back(QPolynomial::variable(n + i, 2 * n));
        }
        std::span<const QPolynomial> xs(x), bs(b);
        for (unsigned k = 1; k <= n + 2; ++k) CHECK(newton_residual(xs, k).is_zero());
        for (unsigned s = n + 1; s <= n + 3; ++s) CHECK(tail_residual(xs, s).is_zero());
        for (unsigned k = 0; k < n; ++k) CHECK(weighted_newton_residual(xs, bs, k).is_zero());
        CHECK(weighted_tail_residual(xs, bs).is_zero());
        // p_2 is not e_1^2
        QPolynomial e1 = elementary(xs, 1);
        if (n > 1) CHECK_FALSE((power_sum(xs, 2) - e1 * e1).is_zero());
    }
}

TEST_CASE("solving for roots from power sums") {
    std::mt19937_64 g(23);
    for (std::size_t n = 0; n <= 5; ++n)
        for (int rep = 0; rep < 8; ++rep) {
            auto x = random_points(g, n);
            std::vector<Rational> u;
            for (unsigned k = 1; k <= n; ++k) u.push_back(power_sum<Rational>(x, k));
            auto p = solve_power_sum_system(u);
            std::sort(x.begin(), x.end());
            REQUIRE(p.roots());
            CHECK(*p.roots() == x);
        }
    // p_1 = 0, p_2 = 4 gives x^2 - 2
    auto q = solve_power_sum_system({Rational(0), Rational(4)});
    CHECK(q.degree() == 2);
    CHECK_FALSE(q.roots().has_value());
    CHECK(newton_e_from_p({Rational(3), Rational(5)}) == std::vector<Rational>{Rational(3), Rational(2)});
}

TEST_CASE("instance JSON") {
    SymInstance s({Rational(1, 2)}, {Rational(3)});
    nlohmann::json j = s;
    auto back = j.get<SymInstance>();
    CHECK(back.points == s.points);
    CHECK(back.weights == s.weights);
}
