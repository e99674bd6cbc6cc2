#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rational.hpp"

namespace dcla {

// x^n + c_{n-1} x^{n-1} + ... + c_0, stored as (c_0, ..., c_{n-1}).
class MonicPolynomial {
public:
    MonicPolynomial() = default;
    explicit MonicPolynomial(std::vector<Rational> coefficients)
        : coeffs_(std::move(coefficients)) {}

    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Full coefficient list including the leading 1, low to high.
    std::vector<Rational> dense() const;
    const std::optional<std::vector<Rational>>& roots() const { return roots_; }

    Rational eval(const Rational& x) const;

    // Attaches a root multiset after checking it expands to this polynomial.
    void set_roots(std::vector<Rational> roots);

    friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
    std::optional<std::vector<Rational>> roots_;
};

MonicPolynomial monic_from_roots(std::vector<Rational> roots);

struct RootSearch {
    std::vector<Rational> roots;        // sorted ascending, with multiplicity
    std::size_t remainder_degree = 0;   // degree of the part without rational roots
    bool splits() const { return remainder_degree == 0; }
};

// Rational-root search; reports the unsplit remainder degree when p does not split over Q.
RootSearch rational_roots(const MonicPolynomial& p);

// Roots of p, or throws NotFullyFactorable.
std::vector<Rational> split_roots(const MonicPolynomial& p);

void to_json(nlohmann::json& j, const MonicPolynomial& p);
// Accepts {"roots": [...]} or {"coefficients": [...]} (or both, checked for agreement).
void from_json(const nlohmann::json& j, MonicPolynomial& p);

}  // namespace dcla
