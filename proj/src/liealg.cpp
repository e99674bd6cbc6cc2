#include "dcla/liealg.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace dcla::liealg {

std::string to_string(Variant v) { return v == Variant::sl ? "sl" : "gl"; }

Variant parse_variant(std::string_view s) {
    if (s == "sl") return Variant::sl;
    if (s == "gl") return Variant::gl;
    throw ValidationError("unknown variant '" + std::string(s) + "' (expected sl or gl)");
}

void AlgebraSpec::validate() const {
    if (m < 2) throw ValidationError("m must be at least 2");
    if (Q.size() != m - 1)
        throw ValidationError("Q must have m-1 = " + std::to_string(m - 1) + " entries, got " +
                              std::to_string(Q.size()));
}

AlgebraSpec AlgebraSpec::with_bound(unsigned n) const {
    AlgebraSpec s = *this;
    s.N = n;
    return s;
}

AlgebraSpec AlgebraSpec::with_variant(Variant v) const {
    AlgebraSpec s = *this;
    s.variant = v;
    return s;
}

std::string BasisElement::str() const {
    switch (tag) {
        case Tag::E:
            return "E(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(t) + ")";
        case Tag::J:
            return "J(" + std::to_string(i) + ";" + std::to_string(t) + ")";
        case Tag::I:
            return "I(" + std::to_string(i) + ";" + std::to_string(t) + ")";
    }
    return "?";
}

namespace {

std::uint32_t read_uint(std::string_view s, std::size_t& pos, std::string_view whole) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) throw ParseError("expected a number in '" + std::string(whole) + "'", pos);
    pos = static_cast<std::size_t>(p - s.data());
    return v;
}

void expect(std::string_view s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw ParseError(std::string("expected '") + c + "' in '" + std::string(s) + "'", pos);
    ++pos;
}

}  // namespace

BasisElement BasisElement::parse(std::string_view s) {
    std::size_t pos = 0;
    if (s.empty()) throw ParseError("empty basis tag", 0);
    char head = s[pos++];
    expect(s, pos, '(');
    BasisElement b;
    if (head == 'E') {
        std::uint32_t a = read_uint(s, pos, s);
        expect(s, pos, ',');
        std::uint32_t c = read_uint(s, pos, s);
        expect(s, pos, ';');
        b = E(a, c, read_uint(s, pos, s));
    } else if (head == 'J' || head == 'I') {
        std::uint32_t a = read_uint(s, pos, s);
        expect(s, pos, ';');
        std::uint32_t t = read_uint(s, pos, s);
        b = head == 'J' ? J(a, t) : I(a, t);
    } else {
        throw ParseError("unknown basis tag '" + std::string(s) + "'", 0);
    }
    expect(s, pos, ')');
    if (pos != s.size()) throw ParseError("trailing characters in '" + std::string(s) + "'", pos);
    return b;
}

std::vector<BasisElement> basis(const AlgebraSpec& spec, unsigned n) {
    std::vector<BasisElement> out;
    for (std::uint32_t t = 0; t <= n; ++t) {
        for (std::uint32_t i = 1; i <= spec.m; ++i)
            for (std::uint32_t j = 1; j <= spec.m; ++j)
                if (i != j) out.push_back(BasisElement::E(i, j, t));
        if (spec.variant == Variant::sl)
            for (std::uint32_t i = 1; i < spec.m; ++i) out.push_back(BasisElement::J(i, t));
        else
            for (std::uint32_t j = 1; j <= spec.m; ++j) out.push_back(BasisElement::I(j, t));
    }
    return out;
}

bool belongs(const BasisElement& b, const AlgebraSpec& spec) {
    switch (b.tag) {
        case Tag::E: return b.i >= 1 && b.j >= 1 && b.i <= spec.m && b.j <= spec.m && b.i != b.j;
        case Tag::J: return spec.variant == Variant::sl && b.i >= 1 && b.i < spec.m;
        case Tag::I: return spec.variant == Variant::gl && b.i >= 1 && b.i <= spec.m;
    }
    return false;
}

// ---- LieElement

LieElement LieElement::term(const Rational& c, const BasisElement& b) {
    LieElement e;
    e.add_term(b, c);
    return e;
}

Rational LieElement::coefficient(const BasisElement& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const BasisElement& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(b, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

unsigned LieElement::max_degree() const {
    unsigned d = 0;
    for (const auto& [b, c] : terms_) d = std::max<unsigned>(d, b.t);
    return d;
}

LieElement LieElement::operator-() const {
    LieElement r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

std::string LieElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (a.sign() < 0) a = -a;
        if (!a.is_one()) os << a << "*";
        os << b.str();
        first = false;
    }
    return os.str();
}

LieElement xplus(unsigned i, unsigned t) { return BasisElement::E(i, i + 1, t); }
LieElement xminus(unsigned i, unsigned t) { return BasisElement::E(i + 1, i, t); }

LieElement jay(const AlgebraSpec& spec, unsigned i, unsigned t) {
    if (spec.variant == Variant::sl) return BasisElement::J(i, t);
    return LieElement(BasisElement::I(i, t)) - LieElement(BasisElement::I(i + 1, t));
}

// ---- evaluation images

namespace {

Matrix xplus_image(unsigned i, unsigned t, const Rational& g, const AlgebraSpec& spec) {
    return Matrix::unit(spec.m, i - 1, i) * ((Rational(1) - spec.Qi(i) * g) * g.pow(t));
}

Matrix xminus_image(unsigned i, unsigned t, const Rational& g, const AlgebraSpec& spec) {
    return Matrix::unit(spec.m, i, i - 1) * g.pow(t);
}

}  // namespace

Matrix eval_image(const BasisElement& b, const Rational& gamma, const AlgebraSpec& spec) {
    if (!belongs(b, spec)) throw ValidationError(b.str() + " is not a basis element of this algebra");
    const unsigned m = spec.m;
    switch (b.tag) {
        case Tag::J: {
            Matrix h = Matrix::unit(m, b.i - 1, b.i - 1) - Matrix::unit(m, b.i, b.i);
            return h * gamma.pow(b.t);
        }
        case Tag::I:
            return Matrix::unit(m, b.i - 1, b.i - 1) * gamma.pow(b.t);
        case Tag::E:
            break;
    }
    // the nested brackets defining E(i,j;t), innermost generator carries t
    if (b.j > b.i) {
        Matrix acc = xplus_image(b.j - 1, b.t, gamma, spec);
        for (unsigned k = b.j - 1; k-- > b.i;) acc = commutator(xplus_image(k, 0, gamma, spec), acc);
        return acc;
    }
    Matrix acc = xminus_image(b.j, b.t, gamma, spec);
    for (unsigned k = b.j + 1; k < b.i; ++k) acc = commutator(xminus_image(k, 0, gamma, spec), acc);
    return acc;
}

Matrix eval_image(const LieElement& e, const Rational& gamma, const AlgebraSpec& spec) {
    Matrix acc(spec.m, spec.m);
    for (const auto& [b, c] : e.terms()) acc += eval_image(b, gamma, spec) * c;
    return acc;
}

// ---- tables

const LieElement& StructureTable::at(const BasisElement& a, const BasisElement& b) const {
    auto it = entries.find({a, b});
    if (it == entries.end()) throw DegreeOverflow(std::max(a.t, b.t));
    return it->second;
}

LieElement bracket(const LieElement& a, const LieElement& b, const StructureTable& table) {
    unsigned need = std::max(a.max_degree(), b.max_degree());
    if (!a.is_zero() && !b.is_zero() && need > table.spec.N) throw DegreeOverflow(need);
    LieElement r;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) r += table.at(x, y) * (cx * cy);
    return r;
}

StructureEngine::StructureEngine(AlgebraSpec spec, SolverOptions opts)
    : spec_(std::move(spec)), opts_(opts) {
    spec_.validate();
}

StructureEngine::StructureEngine(const StructureTable& seed, SolverOptions opts)
    : StructureEngine(seed.spec, opts) {
    cache_ = seed.entries;
}

const Rational& StructureEngine::sample_point(std::size_t k) {
    while (points_.size() <= k) {
        long next = points_.empty() ? 1 : points_.back().to_long() + 1;
        for (;; ++next) {
            Rational g(next);
            bool bad = std::any_of(spec_.Q.begin(), spec_.Q.end(),
                                   [&](const Rational& q) { return !q.is_zero() && g * q == Rational(1); });
            if (!bad) break;
        }
        points_.emplace_back(next);
    }
    return points_[k];
}

const Matrix& StructureEngine::image(const BasisElement& b, std::size_t point) {
    auto key = std::make_pair(b, point);
    auto it = images_.find(key);
    if (it != images_.end()) return it->second;
    return images_.emplace(key, eval_image(b, sample_point(point), spec_)).first->second;
}

const LieElement& StructureEngine::bracket(const BasisElement& a, const BasisElement& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LieElement r = solve(a, b);
    return cache_.emplace(key, std::move(r)).first->second;
}

LieElement StructureEngine::bracket(const LieElement& a, const LieElement& b) {
    LieElement r;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) r += bracket(x, y) * (cx * cy);
    return r;
}

namespace {

// One block of the linear system: the unknowns are the coefficients of the
// given basis elements, the equations are the listed matrix entries at every
// sample point.
struct Group {
    std::vector<BasisElement> unknowns;
    std::vector<std::pair<unsigned, unsigned>> entries;  // 0-based
};

}  // namespace

LieElement StructureEngine::solve(const BasisElement& a, const BasisElement& b) {
    if (!belongs(a, spec_) || !belongs(b, spec_))
        throw ValidationError("bracket of elements outside the algebra: " + a.str() + ", " + b.str());
    const unsigned m = spec_.m;
    const unsigned st = a.t + b.t;
    // entries of [img a, img b] are polynomials in gamma of degree <= st + 2(m-1)
    const unsigned target_degree = st + 2 * (m - 1);

    for (unsigned D = st + 1; D <= st + 1 + opts_.degree_slack; ++D) {
        // enough points to pin down both the target and any candidate combination
        const std::size_t P = std::max(target_degree, D + m - 1) + 1;
        std::vector<Matrix> target;
        for (std::size_t p = 0; p <= P; ++p) target.push_back(commutator(image(a, p), image(b, p)));

        std::vector<Group> groups;
        for (unsigned i = 1; i <= m; ++i)
            for (unsigned j = 1; j <= m; ++j) {
                if (i == j) continue;
                Group g;
                for (unsigned k = 0; k <= D; ++k) g.unknowns.push_back(BasisElement::E(i, j, k));
                g.entries.emplace_back(i - 1, j - 1);
                groups.push_back(std::move(g));
            }
        Group diag;
        for (unsigned k = 0; k <= D; ++k) {
            if (spec_.variant == Variant::sl)
                for (unsigned i = 1; i < m; ++i) diag.unknowns.push_back(BasisElement::J(i, k));
            else
                for (unsigned j = 1; j <= m; ++j) diag.unknowns.push_back(BasisElement::I(j, k));
        }
        for (unsigned k = 0; k < m; ++k) diag.entries.emplace_back(k, k);
        groups.push_back(std::move(diag));

        LieElement result;
        bool consistent = true;
        for (const Group& g : groups) {
            bool zero = true;
            for (std::size_t p = 0; p < P && zero; ++p)
                for (auto [r, c] : g.entries)
                    if (!target[p](r, c).is_zero()) {
                        zero = false;
                        break;
                    }
            if (zero) continue;
            Matrix A(P * g.entries.size(), g.unknowns.size());
            Vector rhs(A.rows());
            std::size_t row = 0;
            for (std::size_t p = 0; p < P; ++p)
                for (auto [r, c] : g.entries) {
                    for (std::size_t u = 0; u < g.unknowns.size(); ++u) A(row, u) = image(g.unknowns[u], p)(r, c);
                    rhs[row++] = target[p](r, c);
                }
            auto x = dcla::solve(A, rhs);
            if (!x) {
                consistent = false;
                break;
            }
            for (std::size_t u = 0; u < g.unknowns.size(); ++u) result.add_term(g.unknowns[u], (*x)[u]);
        }
        if (!consistent) continue;

        // an extra point the solve never saw
        Matrix check(m, m);
        for (const auto& [e, c] : result.terms()) check += image(e, P) * c;
        if (!(check == target[P]))
            throw InternalConsistency("residual of [" + a.str() + ", " + b.str() + "] is nonzero at gamma = " +
                                      sample_point(P).str());
        ++solved_;
        growth_ = std::max(growth_, D - (st + 1));
        return result;
    }
    throw InternalConsistency("no solution for [" + a.str() + ", " + b.str() + "] up to degree " +
                              std::to_string(st + 1 + opts_.degree_slack));
}

StructureTable StructureEngine::table(unsigned n) {
    StructureTable t{spec_.with_bound(n), {}};
    auto B = basis(spec_, n);
    for (const auto& a : B)
        for (const auto& b : B) t.entries.emplace(BasisPair{a, b}, bracket(a, b));
    return t;
}

StructureTable structure_constants(const AlgebraSpec& spec, SolverOptions opts) {
    StructureEngine engine(spec, opts);
    return engine.table(spec.N);
}

// ---- Upsilon

LieElement upsilon(const LieElement& e) {
    LieElement r;
    for (const auto& [b, c] : e.terms()) {
        if (b.tag == Tag::J) {
            r.add_term(BasisElement::I(b.i, b.t), c);
            r.add_term(BasisElement::I(b.i + 1, b.t), -c);
        } else if (b.tag == Tag::E) {
            r.add_term(b, c);
        } else {
            throw ValidationError("upsilon expects an element of sl, got " + b.str());
        }
    }
    return r;
}

// ---- Phi

std::string GammaIndex::str() const { return "(" + std::to_string(i) + "," + std::to_string(k) + ")"; }

namespace {

unsigned total(const std::vector<unsigned>& comp) {
    unsigned s = 0;
    for (unsigned c : comp) s += c;
    return s;
}

}  // namespace

unsigned zeta(const std::vector<unsigned>& composition, GammaIndex g) {
    if (g.k < 1 || g.k > composition.size() || g.i < 1 || g.i > composition[g.k - 1])
        throw ValidationError("index " + g.str() + " outside Gamma(m)");
    unsigned s = 0;
    for (unsigned j = 0; j + 1 < g.k; ++j) s += composition[j];
    return s + g.i;
}

GammaIndex zeta_inverse(const std::vector<unsigned>& composition, unsigned n) {
    unsigned left = n;
    for (unsigned k = 0; k < composition.size(); ++k) {
        if (left >= 1 && left <= composition[k]) return {left, k + 1};
        left -= composition[k];
    }
    throw ValidationError("index " + std::to_string(n) + " outside 1.." + std::to_string(total(composition)));
}

std::vector<Rational> induced_Q(const std::vector<unsigned>& composition, const std::vector<Rational>& Qhat) {
    const unsigned m = total(composition);
    const std::size_t r = composition.size();
    std::vector<Rational> Q(m - 1, Rational(0));
    for (unsigned i = 1; i < m; ++i) {
        GammaIndex g = zeta_inverse(composition, i);
        if (g.k <= r - 1 && g.i == composition[g.k - 1]) Q[i - 1] = Qhat[g.k - 1].inverse();
    }
    return Q;
}

}  // namespace dcla::liealg
