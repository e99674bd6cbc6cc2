#include "dcla/rational.hpp"

#include <cctype>

namespace dcla {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ValidationError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ValidationError("malformed rational '" + std::string(whole) + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
    return Rational(parse_integer(s.substr(0, slash), s), parse_integer(s.substr(slash + 1), s));
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw ValidationError("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::json_str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
    std::size_t h = mpz_get_ui(q_.get_num_mpz_t()) * 1000003u;
    h ^= mpz_get_ui(q_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(sgn(q_) + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div:
            if (b.is_zero()) return std::nullopt;
            return a / b;
    }
    return std::nullopt;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational factorial(long n) {
    if (n < 0) throw PreconditionError("factorial of a negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

}  // namespace dcla
