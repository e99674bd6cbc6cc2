#include <random>

#include "doctest.h"
#include "dcla/matrix.hpp"
#include "dcla/qpolynomial.hpp"

using namespace dcla;

namespace {

Matrix random_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, int zero_bias = 0) {
    std::uniform_int_distribution<long> d(-3 - zero_bias, 3);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long v = d(g);
            m(i, j) = v < -3 ? Rational(0) : Rational(v, 2);
        }
    return m;
}

}  // namespace

TEST_CASE("units, products and commutators") {
    Matrix e12 = Matrix::unit(2, 0, 1), e21 = Matrix::unit(2, 1, 0);
    Matrix h = commutator(e12, e21);
    CHECK(h == Matrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}, 2));
    CHECK(commutator(h, e12) == e12 * Rational(2));
    CHECK((e12 * e12).is_zero());
    CHECK(kron(Matrix::identity(2), e12).rows() == 4);
    CHECK(kron(e12, e21)(1, 2) == Rational(1));
    CHECK(row_times({Rational(1), Rational(2)}, e12) == Vector{Rational(0), Rational(1)});
    CHECK(e12.transpose() == e21);
}

TEST_CASE("rank and kernel") {
    std::mt19937_64 g(3);
    for (int k = 0; k < 80; ++k) {
        std::size_t r = 1 + k % 5, c = 1 + (k / 5) % 6;
        Matrix m = random_matrix(g, r, c, 4);
        auto ker = kernel(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        auto e = rref(m);
        CHECK(e.pivots.size() == rank(m));
        for (std::size_t i = 0; i < e.pivots.size(); ++i) CHECK(e.reduced(i, e.pivots[i]) == Rational(1));
    }
}

TEST_CASE("solve") {
    std::mt19937_64 g(5);
    for (int k = 0; k < 50; ++k) {
        Matrix a = random_matrix(g, 4, 3, 2);
        Vector x{Rational(k), Rational(1, 3), Rational(-2)};
        Vector b = a * x;
        auto s = solve(a, b);
        REQUIRE(s);
        CHECK(a * *s == b);
    }
    Matrix z(2, 2);
    CHECK_FALSE(solve(z, {Rational(1), Rational(0)}).has_value());
}

TEST_CASE("subspaces") {
    Subspace s = Subspace::span(3, {{Rational(1), Rational(1), Rational(0)}, {Rational(2), Rational(2), Rational(0)}});
    CHECK(s.dim() == 1);
    CHECK(s.contains({Rational(-3), Rational(-3), Rational(0)}));
    CHECK_FALSE(s.contains({Rational(1), Rational(0), Rational(0)}));
    CHECK(s.insert({Rational(0), Rational(0), Rational(1)}));
    CHECK_FALSE(s.insert({Rational(1), Rational(1), Rational(5)}));
    CHECK(s.dim() == 2);
    Vector v{Rational(2), Rational(2), Rational(7)};
    Vector c = s.coordinates(v);
    Vector back(3);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * s.basis()[i][j];
    CHECK(back == v);
    Subspace t = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}});
    Subspace meet = s.intersect(t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({Rational(1), Rational(1), Rational(0)}));
    CHECK(Subspace::whole(3).dim() == 3);
    // the reduced basis is canonical
    CHECK(Subspace::span(3, {{Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(1)}}) == s);
}

TEST_CASE("matrix JSON") {
    std::mt19937_64 g(9);
    Matrix m = random_matrix(g, 3, 2);
    nlohmann::json j = m;
    CHECK(j.get<Matrix>() == m);
}
