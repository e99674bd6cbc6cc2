#include "dcla/symfun.hpp"

#include "dcla/qpolynomial.hpp"

namespace dcla::symfun {

SymInstance::SymInstance(std::vector<Rational> x, std::vector<Rational> b)
    : points(std::move(x)), weights(std::move(b)) {
    if (weights->size() != points.size())
        throw ValidationError("weights and points differ in length");
}

std::span<const Rational> SymInstance::b() const {
    if (!weights) throw ValidationError("instance carries no weights");
    if (weights->size() != points.size()) throw ValidationError("weights and points differ in length");
    return *weights;
}

Rational power_sum(const SymInstance& inst, unsigned k) {
    if (k == 0) throw PreconditionError("power sums start at k = 1");
    return power_sum(inst.x(), k);
}

Rational elementary(const SymInstance& inst, unsigned k) { return elementary(inst.x(), k); }

Rational weighted_power_sum(const SymInstance& inst, unsigned k) {
    return weighted_power_sum(inst.x(), inst.b(), k);
}

Rational weighted_elementary(const SymInstance& inst, unsigned k) {
    auto b = inst.b();
    if (k > inst.size()) return Rational(0);
    return weighted_elementary_all(inst.x(), b)[k];
}

std::vector<Rational> newton_e_from_p(const std::vector<Rational>& p) {
    return newton_e_from_p(std::span<const Rational>(p));
}

bool check_newton_identity(const SymInstance& inst, unsigned k) {
    return newton_residual(inst.x(), k).is_zero();
}

bool check_tail_identity(const SymInstance& inst, unsigned s) {
    if (s <= inst.size()) throw PreconditionError("tail identity needs s > n");
    return tail_residual(inst.x(), s).is_zero();
}

bool check_weighted_newton_identity(const SymInstance& inst, unsigned k) {
    return weighted_newton_residual(inst.x(), inst.b(), k).is_zero();
}

bool check_weighted_tail_identity(const SymInstance& inst) {
    return weighted_tail_residual(inst.x(), inst.b()).is_zero();
}

MonicPolynomial solve_power_sum_system(const std::vector<Rational>& u) {
    std::vector<Rational> e = newton_e_from_p(u);
    std::size_t n = u.size();
    std::vector<Rational> c(n);
    // coefficient of x^{n-k} is (-1)^k e_k
    for (std::size_t k = 1; k <= n; ++k) c[n - k] = (k % 2 == 0) ? e[k - 1] : -e[k - 1];
    MonicPolynomial p(std::move(c));
    RootSearch rs = rational_roots(p);
    if (rs.splits()) p.set_roots(rs.roots);
    return p;
}

void to_json(nlohmann::json& j, const SymInstance& s) {
    j = nlohmann::json{{"points", s.points}};
    if (s.weights) j["weights"] = *s.weights;
}

void from_json(const nlohmann::json& j, SymInstance& s) {
    auto x = j.at("points").get<std::vector<Rational>>();
    if (j.contains("weights"))
        s = SymInstance(std::move(x), j.at("weights").get<std::vector<Rational>>());
    else
        s = SymInstance(std::move(x));
}

}  // namespace dcla::symfun
