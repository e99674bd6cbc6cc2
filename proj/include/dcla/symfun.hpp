#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "monic.hpp"
#include "rational.hpp"

namespace dcla::symfun {

// The generic forms work over any commutative ring T admitting rational scalars;
// they are instantiated with Rational for values and with QPolynomial for
// identities in the variables themselves.

template <class T>
T power_sum(std::span<const T> x, unsigned k) {
    T s(0);
    for (const auto& xi : x) {
        T p(1);
        for (unsigned e = 0; e < k; ++e) p = p * xi;
        s = s + p;
    }
    return s;
}

// e_0..e_n of the points, by expanding prod (1 + x_i t).
template <class T>
std::vector<T> elementary_all(std::span<const T> x) {
    std::vector<T> e(x.size() + 1, T(0));
    e[0] = T(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + x[i] * e[k - 1];
    return e;
}

template <class T>
T elementary(std::span<const T> x, unsigned k) {
    if (k > x.size()) return T(0);
    return elementary_all(x)[k];
}

template <class T>
T weighted_power_sum(std::span<const T> x, std::span<const T> b, unsigned k) {
    T s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        T p = b[i];
        for (unsigned e = 0; e < k; ++e) p = p * x[i];
        s = s + p;
    }
    return s;
}

// e^{(b)}_0..e^{(b)}_n. Each added point x_i either stays out or joins a
// (k-1)-subset, contributing its weight b_i once per such subset.
template <class T>
std::vector<T> weighted_elementary_all(std::span<const T> x, std::span<const T> b) {
    std::size_t n = x.size();
    std::vector<T> e(n + 1, T(0)), eb(n + 1, T(0));
    e[0] = T(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k >= 1; --k) {
            eb[k] = eb[k] + x[i] * (eb[k - 1] + b[i] * e[k - 1]);
            e[k] = e[k] + x[i] * e[k - 1];
        }
    eb[0] = T(1);
    return eb;
}

// k e_k = sum_{z=1}^k (-1)^{z-1} p_z e_{k-z}; returns e_1..e_n.
template <class T>
std::vector<T> newton_e_from_p(std::span<const T> p) {
    std::vector<T> e(p.size() + 1, T(0));
    e[0] = T(1);
    for (std::size_t k = 1; k <= p.size(); ++k) {
        T acc(0);
        for (std::size_t z = 1; z <= k; ++z) {
            T term = p[z - 1] * e[k - z];
            acc = (z % 2 == 1) ? acc + term : acc - term;
        }
        e[k] = acc * Rational(1, static_cast<long>(k));
    }
    return std::vector<T>(e.begin() + 1, e.end());
}

// k e_k - sum_{z=1}^k (-1)^{z-1} p_z e_{k-z}
template <class T>
T newton_residual(std::span<const T> x, unsigned k) {
    auto e = elementary_all(x);
    auto ek = [&](std::size_t j) { return j < e.size() ? e[j] : T(0); };
    T acc = ek(k) * Rational(static_cast<long>(k));
    for (unsigned z = 1; z <= k; ++z) {
        T term = power_sum(x, z) * ek(k - z);
        acc = (z % 2 == 1) ? acc - term : acc + term;
    }
    return acc;
}

// sum_{w=0}^{n-1} (-1)^{n-w+1} p_{s-n+w} e_{n-w} - p_s, for s > n
template <class T>
T tail_residual(std::span<const T> x, unsigned s) {
    unsigned n = static_cast<unsigned>(x.size());
    auto e = elementary_all(x);
    T acc(0);
    for (unsigned w = 0; w < n; ++w) {
        T term = power_sum(x, s - n + w) * e[n - w];
        acc = ((n - w + 1) % 2 == 0) ? acc + term : acc - term;
    }
    return acc - power_sum(x, s);
}

// e^{(b)}_{k+1} - sum_{z=0}^k (-1)^z p^{(b)}_{z+1} e_{k-z}
template <class T>
T weighted_newton_residual(std::span<const T> x, std::span<const T> b, unsigned k) {
    auto e = elementary_all(x);
    auto eb = weighted_elementary_all(x, b);
    auto at = [](const std::vector<T>& v, std::size_t j) { return j < v.size() ? v[j] : T(0); };
    T acc = at(eb, k + 1);
    for (unsigned z = 0; z <= k; ++z) {
        T term = weighted_power_sum(x, b, z + 1) * at(e, k - z);
        acc = (z % 2 == 0) ? acc - term : acc + term;
    }
    return acc;
}

// sum_{z=0}^{n-1} (-1)^{n-z+1} p^{(b)}_{z+1} e_{n-z} - p^{(b)}_{n+1}
template <class T>
T weighted_tail_residual(std::span<const T> x, std::span<const T> b) {
    unsigned n = static_cast<unsigned>(x.size());
    auto e = elementary_all(x);
    T acc(0);
    for (unsigned z = 0; z < n; ++z) {
        T term = weighted_power_sum(x, b, z + 1) * e[n - z];
        acc = ((n - z + 1) % 2 == 0) ? acc + term : acc - term;
    }
    return acc - weighted_power_sum(x, b, n + 1);
}

struct SymInstance {
    std::vector<Rational> points;
    std::optional<std::vector<Rational>> weights;

    SymInstance() = default;
    explicit SymInstance(std::vector<Rational> x) : points(std::move(x)) {}
    SymInstance(std::vector<Rational> x, std::vector<Rational> b);

    std::size_t size() const { return points.size(); }
    std::span<const Rational> x() const { return points; }
    // Throws ValidationError when no weights are attached.
    std::span<const Rational> b() const;
};

Rational power_sum(const SymInstance& inst, unsigned k);
Rational elementary(const SymInstance& inst, unsigned k);
Rational weighted_power_sum(const SymInstance& inst, unsigned k);
Rational weighted_elementary(const SymInstance& inst, unsigned k);
std::vector<Rational> newton_e_from_p(const std::vector<Rational>& p);

bool check_newton_identity(const SymInstance& inst, unsigned k);
bool check_tail_identity(const SymInstance& inst, unsigned s);
bool check_weighted_newton_identity(const SymInstance& inst, unsigned k);
bool check_weighted_tail_identity(const SymInstance& inst);

// x^n - e_1 x^{n-1} + ... + (-1)^n e_n, where e comes from the power sums u (n = 0 gives 1);
// roots are attached when the polynomial splits over Q.
MonicPolynomial solve_power_sum_system(const std::vector<Rational>& u);

void to_json(nlohmann::json& j, const SymInstance& s);
void from_json(const nlohmann::json& j, SymInstance& s);

}  // namespace dcla::symfun
