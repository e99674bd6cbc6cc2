#include "dcla/pbw.hpp"

#include <algorithm>
#include <random>

namespace dcla::pbw {

namespace {

const char* kind_prefix(Kind k) {
    switch (k) {
        case Kind::Xminus: return "X-(";
        case Kind::J: return "J(";
        case Kind::Xplus: return "X+(";
    }
    return "?(";
}

struct LinearTerm {
    Generator g;
    QPolynomial c;
};

// [a, b] for a != b in kind; empty when they commute.
std::vector<LinearTerm> bracket_terms(const Generator& a, const Generator& b) {
    std::uint32_t d = a.degree + b.degree;
    if (a.kind == b.kind) return {};
    if (a.kind == Kind::J) return {{{b.kind, d}, QPolynomial(b.kind == Kind::Xplus ? 2 : -2)}};
    if (b.kind == Kind::J) return {{{a.kind, d}, QPolynomial(a.kind == Kind::Xplus ? -2 : 2)}};
    if (a.kind == Kind::Xplus)  // [X+_t, X-_s] = J_{s+t} - Q J_{s+t+1}
        return {{Jg(d), QPolynomial(1)}, {Jg(d + 1), -Q()}};
    return {{Jg(d), QPolynomial(-1)}, {Jg(d + 1), Q()}};
}

struct LongestFirst {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

}  // namespace

QPolynomial Q() { return QPolynomial::variable(0, 1); }

std::string Generator::str() const { return kind_prefix(kind) + std::to_string(degree) + ")"; }

PBWMonomial::PBWMonomial(Word w) : w_(std::move(w)) {
    if (!std::is_sorted(w_.begin(), w_.end())) throw PreconditionError("word is not in PBW order");
}

PBWMonomial PBWMonomial::from_blocks(const std::vector<Factor>& xminus, const std::vector<Factor>& j,
                                     const std::vector<Factor>& xplus) {
    Word w;
    auto push = [&](Kind k, const std::vector<Factor>& fs) {
        for (const auto& f : fs) {
            if (f.exponent == 0) throw ValidationError("zero exponent in PBW monomial");
            w.insert(w.end(), f.exponent, Generator{k, f.degree});
        }
    };
    push(Kind::Xminus, xminus);
    push(Kind::J, j);
    push(Kind::Xplus, xplus);
    return PBWMonomial(std::move(w));
}

std::vector<Factor> PBWMonomial::block(Kind k) const {
    std::vector<Factor> out;
    for (const auto& g : w_) {
        if (g.kind != k) continue;
        if (!out.empty() && out.back().degree == g.degree)
            ++out.back().exponent;
        else
            out.push_back({g.degree, 1});
    }
    return out;
}

std::uint64_t PBWMonomial::x_degree() const {
    std::uint64_t d = 0;
    for (const auto& g : w_) d += g.degree;
    return d;
}

std::string PBWMonomial::str() const {
    std::string s;
    for (Kind k : {Kind::Xminus, Kind::J, Kind::Xplus})
        for (const auto& f : block(k)) {
            if (!s.empty()) s += "*";
            s += Generator{k, f.degree}.str();
            if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
        }
    return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.word() < b.word();
}

UEAElement::UEAElement(const QPolynomial& c) {
    if (!c.is_zero()) terms_.emplace(PBWMonomial(), c);
}

UEAElement::UEAElement(const Generator& g) { terms_.emplace(PBWMonomial(Word{g}), QPolynomial(1)); }

UEAElement UEAElement::term(const QPolynomial& c, PBWMonomial m) {
    UEAElement e;
    e.add_term(m, c);
    return e;
}

QPolynomial UEAElement::coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QPolynomial() : it->second;
}

void UEAElement::add_term(const PBWMonomial& m, const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UEAElement UEAElement::operator-() const {
    UEAElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

UEAElement& UEAElement::operator*=(const QPolynomial& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return multiply(a, b); }

std::string UEAElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool negative = c.terms().size() == 1 && c.terms().begin()->second.sign() < 0;
        QPolynomial mag = negative ? -c : c;
        std::string body;
        if (m.is_one()) {
            body = mag.terms().size() > 1 && !first ? "(" + mag.str() + ")" : mag.str();
        } else if (mag.is_constant() && mag.constant_term().is_one()) {
            body = m.str();
        } else {
            body = mag.factor_str() + "*" + m.str();
        }
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const UEAElement& e) { return os << e.str(); }

Expression::Expression(const QPolynomial& c) { add(Word{}, c); }

Expression::Expression(const Generator& g) { add(Word{g}, QPolynomial(1)); }

Expression::Expression(const UEAElement& e) {
    for (const auto& [m, c] : e.terms()) add(m.word(), c);
}

Expression Expression::word(const QPolynomial& c, Word w) {
    Expression e;
    e.add(w, c);
    return e;
}

void Expression::add(const Word& w, const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Expression& Expression::operator+=(const Expression& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Expression& Expression::operator-=(const Expression& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Expression Expression::operator-() const {
    Expression r;
    for (const auto& [w, c] : terms_) r.add(w, -c);
    return r;
}

Expression operator*(const Expression& a, const Expression& b) {
    Expression r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

Expression Expression::pow(unsigned e) const {
    Expression r(QPolynomial(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string Expression::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.factor_str();
        for (const auto& g : w) out += "*" + g.str();
    }
    return out;
}

UEAElement normalize(const Expression& e, const NormalizeOptions& opts) {
    std::map<Word, QPolynomial, LongestFirst> pending(e.terms().begin(), e.terms().end());
    UEAElement out;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::size_t> descents;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        Word w = std::move(node.key());
        const QPolynomial& c = node.mapped();
        if (c.is_zero()) continue;
        for (;;) {
            descents.clear();
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i + 1] < w[i]) descents.push_back(i);
            if (descents.empty()) break;
            std::size_t i = descents.front();
            if (opts.strategy == Strategy::Rightmost) {
                i = descents.back();
            } else if (opts.strategy == Strategy::Random) {
                i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
            }
            Generator a = w[i], b = w[i + 1];
            std::swap(w[i], w[i + 1]);
            // ab = ba + [a,b]; the bracket replaces the pair by one generator
            for (const auto& t : bracket_terms(a, b)) {
                Word nw;
                nw.reserve(w.size() - 1);
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(i));
                nw.push_back(t.g);
                nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                QPolynomial nc = c * t.c;
                auto [it, inserted] = pending.emplace(std::move(nw), nc);
                if (!inserted) it->second += nc;
            }
        }
        out.add_term(PBWMonomial(std::move(w)), c);
        if (pending.size() + out.size() > opts.term_ceiling)
            throw ResourceLimitExceeded("normalization exceeded the term ceiling of " +
                                        std::to_string(opts.term_ceiling) + " monomials");
    }
    return out;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b, const NormalizeOptions& opts) {
    return normalize(Expression(a) * Expression(b), opts);
}

UEAElement commutator(const UEAElement& a, const UEAElement& b, const NormalizeOptions& opts) {
    Expression ea(a), eb(b);
    return normalize(ea * eb - eb * ea, opts);
}

UEAElement bracket_gen(const Generator& a, const Generator& b) {
    UEAElement r;
    for (const auto& t : bracket_terms(a, b)) r += UEAElement(t.g) * t.c;
    return r;
}

UEAElement dagger(const UEAElement& e, const NormalizeOptions& opts) {
    Expression r;
    for (const auto& [m, c] : e.terms()) {
        Word w(m.word().rbegin(), m.word().rend());
        for (auto& g : w) {
            if (g.kind == Kind::Xplus)
                g.kind = Kind::Xminus;
            else if (g.kind == Kind::Xminus)
                g.kind = Kind::Xplus;
        }
        r.add(w, c);
    }
    return normalize(r, opts);
}

namespace {

nlohmann::json factors_json(const std::vector<Factor>& fs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : fs) a.push_back({f.degree, f.exponent});
    return a;
}

std::vector<Factor> factors_from(const nlohmann::json& j) {
    std::vector<Factor> out;
    for (const auto& f : j) out.push_back({f.at(0).get<std::uint32_t>(), f.at(1).get<std::uint32_t>()});
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const UEAElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back({{"xminus", factors_json(m.block(Kind::Xminus))},
                         {"j", factors_json(m.block(Kind::J))},
                         {"xplus", factors_json(m.block(Kind::Xplus))},
                         {"coefficient", c}});
    j = {{"text", e.str()}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, UEAElement& e) {
    UEAElement r;
    for (const auto& t : j.at("terms"))
        r.add_term(PBWMonomial::from_blocks(factors_from(t.at("xminus")), factors_from(t.at("j")),
                                            factors_from(t.at("xplus"))),
                   t.at("coefficient").get<QPolynomial>());
    e = r;
}

}  // namespace dcla::pbw
