#include "dcla/monic.hpp"

#include <algorithm>

#include "dcla/qpolynomial.hpp"

namespace dcla {

std::vector<Rational> MonicPolynomial::dense() const {
    std::vector<Rational> d = coeffs_;
    d.emplace_back(1);
    return d;
}

Rational MonicPolynomial::eval(const Rational& x) const {
    Rational acc(1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// c_0..c_{n-1} of prod (x - g)
std::vector<Rational> coefficients_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> d{Rational(1)};
    for (const auto& g : roots) {
        std::vector<Rational> next(d.size() + 1, Rational(0));
        for (std::size_t k = 0; k < d.size(); ++k) {
            next[k + 1] += d[k];
            next[k] -= g * d[k];
        }
        d = std::move(next);
    }
    d.pop_back();
    return d;
}

}  // namespace

void MonicPolynomial::set_roots(std::vector<Rational> roots) {
    std::sort(roots.begin(), roots.end());
    if (coefficients_from_roots(roots) != coeffs_)
        throw ValidationError("root multiset does not match polynomial " + str());
    roots_ = std::move(roots);
}

std::string MonicPolynomial::str() const {
    std::string s = "x";
    if (degree() == 0) return "1";
    if (degree() > 1) s += "^" + std::to_string(degree());
    for (std::size_t k = degree(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        s += c.sign() < 0 ? " - " : " + ";
        Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0) {
            s += mag.str();
            continue;
        }
        if (!mag.is_one()) s += mag.str() + "*";
        s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return s;
}

MonicPolynomial monic_from_roots(std::vector<Rational> roots) {
    MonicPolynomial p(coefficients_from_roots(roots));
    p.set_roots(std::move(roots));
    return p;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Divides the dense polynomial by (x - r), assuming r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& d, const Rational& r) {
    std::size_t n = d.size() - 1;
    std::vector<Rational> q(n, Rational(0));
    Rational carry(0);
    for (std::size_t k = n; k-- > 0;) {
        carry = d[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

Rational eval_dense(const std::vector<Rational>& d, const Rational& x) {
    Rational acc(0);
    for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

RootSearch rational_roots(const MonicPolynomial& p) {
    RootSearch out;
    std::vector<Rational> d = p.dense();
    while (d.size() > 1 && d[0].is_zero()) {
        out.roots.emplace_back(0);
        d.erase(d.begin());
    }
    bool progress = true;
    while (d.size() > 1 && progress) {
        progress = false;
        // clear denominators so candidates are ±(divisor of a_0)/(divisor of a_n)
        mpz_class lcm = 1;
        for (const auto& c : d) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_class a0 = (d.front() * Rational(lcm)).numerator();
        mpz_class an = (d.back() * Rational(lcm)).numerator();
        for (const auto& num : positive_divisors(a0)) {
            for (const auto& den : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational r(mpz_class(s * num), den);
                    while (d.size() > 1 && eval_dense(d, r).is_zero()) {
                        out.roots.push_back(r);
                        d = deflate(d, r);
                        progress = true;
                    }
                }
            }
            if (progress) break;
        }
    }
    out.remainder_degree = d.size() - 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<Rational> split_roots(const MonicPolynomial& p) {
    if (p.roots()) return *p.roots();
    RootSearch rs = rational_roots(p);
    if (!rs.splits()) throw NotFullyFactorable(rs.remainder_degree);
    return rs.roots;
}

void to_json(nlohmann::json& j, const MonicPolynomial& p) {
    j = nlohmann::json{{"coefficients", p.coefficients()}};
    if (p.roots()) j["roots"] = *p.roots();
}

void from_json(const nlohmann::json& j, MonicPolynomial& p) {
    if (j.contains("roots")) {
        MonicPolynomial r = monic_from_roots(j.at("roots").get<std::vector<Rational>>());
        if (j.contains("coefficients") &&
            j.at("coefficients").get<std::vector<Rational>>() != r.coefficients())
            throw ValidationError("polynomial roots and coefficients disagree");
        p = r;
        return;
    }
    p = MonicPolynomial(j.at("coefficients").get<std::vector<Rational>>());
}

}  // namespace dcla
