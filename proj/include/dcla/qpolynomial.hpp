#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace dcla {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic: lower total degree first, ties broken lexicographically.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Polynomial over Q in the indeterminates Q_1..Q_n (n = arity).
// Polynomials of arity 0 are scalars and combine with any arity.
class QPolynomial {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    QPolynomial() = default;
    QPolynomial(const Rational& c, std::size_t arity = 0);  // NOLINT: scalars promote
    QPolynomial(long c) : QPolynomial(Rational(c)) {}       // NOLINT
    QPolynomial(int c) : QPolynomial(Rational(c)) {}        // NOLINT

    static QPolynomial variable(std::size_t index, std::size_t arity);
    // c * Q_1^e_1 ... Q_n^e_n
    static QPolynomial monomial(const Rational& c, Exponents e);

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // Total degree; -1 for the zero polynomial.
    long degree() const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    QPolynomial& operator*=(const Rational& c);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
    friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }

    QPolynomial pow(unsigned e) const;

    Rational eval(std::span<const Rational> point) const;
    Rational eval(const Rational& q) const;  // arity 0 or 1

    friend bool operator==(const QPolynomial& a, const QPolynomial& b);

    // Ascending graded-lex, e.g. "1 - 2*Q + Q^2"; arity > 1 names Q1, Q2, ...
    std::string str() const;
    // Same, wrapped in parentheses when it has more than one term.
    std::string factor_str() const;

private:
    void lift_to(std::size_t arity);
    std::size_t arity_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const QPolynomial& p);
void from_json(const nlohmann::json& j, QPolynomial& p);

}  // namespace dcla
