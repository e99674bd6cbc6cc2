#include "dcla/qpolynomial.hpp"

#include <numeric>
#include <sstream>

namespace dcla {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return a < b;
}

QPolynomial::QPolynomial(const Rational& c, std::size_t arity) : arity_(arity) {
    if (!c.is_zero()) terms_.emplace(Exponents(arity, 0), c);
}

QPolynomial QPolynomial::variable(std::size_t index, std::size_t arity) {
    if (index >= arity) throw PreconditionError("variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(Rational(1), std::move(e));
}

QPolynomial QPolynomial::monomial(const Rational& c, Exponents e) {
    QPolynomial p;
    p.arity_ = e.size();
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool QPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

Rational QPolynomial::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& [e, c] = *terms_.begin();
    for (auto x : e)
        if (x != 0) return Rational(0);
    return c;
}

long QPolynomial::degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<long>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

void QPolynomial::lift_to(std::size_t arity) {
    if (arity_ == arity) return;
    if (arity_ != 0) throw ArityMismatch(arity_, arity);
    Terms lifted;
    for (auto& [e, c] : terms_) lifted.emplace(Exponents(arity, 0), c);
    terms_ = std::move(lifted);
    arity_ = arity;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.arity_ != arity_) {
        if (o.arity_ == 0) return *this += QPolynomial(o.constant_term(), arity_);
        lift_to(o.arity_);
    }
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) { return *this += -o; }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    std::size_t arity = a.arity_;
    if (a.arity_ != b.arity_) {
        if (a.arity_ != 0 && b.arity_ != 0) throw ArityMismatch(a.arity_, b.arity_);
        arity = std::max(a.arity_, b.arity_);
    }
    QPolynomial r;
    r.arity_ = arity;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(arity, 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial& QPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

QPolynomial QPolynomial::pow(unsigned e) const {
    QPolynomial r(Rational(1), arity_);
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
}

Rational QPolynomial::eval(std::span<const Rational> point) const {
    if (arity_ != 0 && point.size() != arity_) throw ArityMismatch(arity_, point.size());
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

Rational QPolynomial::eval(const Rational& q) const {
    if (arity_ > 1) throw ArityMismatch(arity_, 1);
    return eval(std::span<const Rational>(&q, 1));
}

bool operator==(const QPolynomial& a, const QPolynomial& b) {
    if (a.arity_ == b.arity_) return a.terms_ == b.terms_;
    if (a.arity_ != 0 && b.arity_ != 0) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
}

namespace {

std::string monomial_str(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += e.size() == 1 ? "Q" : "Q" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string QPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = monomial_str(e);
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
        first = false;
    }
    return out;
}

std::string QPolynomial::factor_str() const {
    if (terms_.size() > 1) return "(" + str() + ")";
    return str();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.str(); }

void to_json(nlohmann::json& j, const Rational& r) { j = r.json_str(); }

void from_json(const nlohmann::json& j, Rational& r) {
    if (j.is_number_integer()) {
        r = Rational(j.get<long>());
        return;
    }
    if (!j.is_string()) throw ValidationError("rational must be a \"num/den\" string");
    r = Rational::parse(j.get<std::string>());
}

void to_json(nlohmann::json& j, const QPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", c}});
    j = {{"arity", p.arity()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, QPolynomial& p) {
    std::size_t arity = j.at("arity").get<std::size_t>();
    QPolynomial r(Rational(0), arity);
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exponents").get<Exponents>();
        if (e.size() != arity) throw ValidationError("exponent vector length differs from arity");
        r += QPolynomial::monomial(t.at("coefficient").get<Rational>(), e);
    }
    p = r;
}

}  // namespace dcla
