#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace dcla {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, integers are rationals
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n", "-n", "n/d".
    static Rational parse(std::string_view s);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    // Only meaningful for integers that fit.
    long to_long() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const;
    // Integer exponent; negative exponents invert.
    Rational pow(long e) const;

    // "n" for integers, "n/d" otherwise.
    std::string str() const;
    // Always "n/d"; the serialization form.
    std::string json_str() const;

    std::size_t hash() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { Add, Sub, Mul, Div };

// Total arithmetic: division by zero yields nullopt instead of throwing.
std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op);

Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace dcla

template <>
struct std::hash<dcla::Rational> {
    std::size_t operator()(const dcla::Rational& r) const { return r.hash(); }
};
