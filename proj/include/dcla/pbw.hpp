#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpolynomial.hpp"

namespace dcla::pbw {

// Declaration order is the PBW block order.
enum class Kind : std::uint8_t { Xminus = 0, J = 1, Xplus = 2 };

struct Generator {
    Kind kind;
    std::uint32_t degree;
    friend auto operator<=>(const Generator&, const Generator&) = default;
    std::string str() const;
};

inline Generator Xp(std::uint32_t t) { return {Kind::Xplus, t}; }
inline Generator Xm(std::uint32_t t) { return {Kind::Xminus, t}; }
inline Generator Jg(std::uint32_t t) { return {Kind::J, t}; }

using Word = std::vector<Generator>;

struct Factor {
    std::uint32_t degree;
    std::uint32_t exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered monomial X^-... J... X^+..., degrees ascending inside each block.
class PBWMonomial {
public:
    PBWMonomial() = default;
    // Throws PreconditionError unless w is already in PBW order.
    explicit PBWMonomial(Word w);
    static PBWMonomial from_blocks(const std::vector<Factor>& xminus, const std::vector<Factor>& j,
                                   const std::vector<Factor>& xplus);

    const Word& word() const { return w_; }
    std::size_t length() const { return w_.size(); }
    bool is_one() const { return w_.empty(); }
    // Exponent-compressed factor list of one block.
    std::vector<Factor> block(Kind k) const;
    // Sum of generator degrees.
    std::uint64_t x_degree() const;

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    std::string str() const;

private:
    Word w_;
};

// Printing and storage order: longer monomials first, then lexicographic in PBW order.
struct MonomialOrder {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const;
};

// Element of U(sl_2^<Q>[x]) in PBW normal form, coefficients in Q[Q].
class UEAElement {
public:
    using Terms = std::map<PBWMonomial, QPolynomial, MonomialOrder>;

    UEAElement() = default;
    UEAElement(const QPolynomial& c);  // NOLINT: scalars embed
    UEAElement(long c) : UEAElement(QPolynomial(c)) {}  // NOLINT
    UEAElement(int c) : UEAElement(QPolynomial(c)) {}   // NOLINT
    UEAElement(const Generator& g);  // NOLINT

    static UEAElement term(const QPolynomial& c, PBWMonomial m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    QPolynomial coefficient(const PBWMonomial& m) const;

    UEAElement operator-() const;
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement& operator*=(const QPolynomial& c);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const QPolynomial& c) { return a *= c; }
    friend UEAElement operator*(const QPolynomial& c, UEAElement a) { return a *= c; }
    friend UEAElement operator*(UEAElement a, const Rational& c) { return a *= QPolynomial(c); }
    friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= QPolynomial(c); }
    // Algebra product, normalized with default options.
    friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
    friend bool operator==(const UEAElement&, const UEAElement&) = default;

    // Canonical text, e.g. "X-(2)*X+(1) + J(3) - Q*J(4)".
    std::string str() const;

    void add_term(const PBWMonomial& m, const QPolynomial& c);

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const UEAElement& e);

// Unnormalized finite sum of generator words; what the parser produces and
// what products expand into before straightening.
class Expression {
public:
    using Terms = std::map<Word, QPolynomial>;

    Expression() = default;
    Expression(const QPolynomial& c);  // NOLINT
    Expression(const Generator& g);    // NOLINT
    Expression(const UEAElement& e);   // NOLINT
    static Expression word(const QPolynomial& c, Word w);

    const Terms& terms() const { return terms_; }
    void add(const Word& w, const QPolynomial& c);

    Expression& operator+=(const Expression& o);
    Expression& operator-=(const Expression& o);
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend Expression operator*(const Expression& a, const Expression& b);
    Expression operator-() const;
    Expression pow(unsigned e) const;

    std::string str() const;

private:
    Terms terms_;
};

enum class Strategy { Leftmost, Rightmost, Random };

struct NormalizeOptions {
    std::size_t term_ceiling = 1'000'000;
    Strategy strategy = Strategy::Leftmost;
    std::uint64_t seed = 0;
};

// Straightens by swapping adjacent out-of-order generators, ab = ba + [a,b].
UEAElement normalize(const Expression& e, const NormalizeOptions& opts = {});
UEAElement multiply(const UEAElement& a, const UEAElement& b, const NormalizeOptions& opts = {});
UEAElement commutator(const UEAElement& a, const UEAElement& b, const NormalizeOptions& opts = {});

// [a, b] of two generators from the defining relations, as a linear combination of generators.
UEAElement bracket_gen(const Generator& a, const Generator& b);

// Anti-automorphism swapping X^+_t and X^-_t and fixing J_t.
UEAElement dagger(const UEAElement& e, const NormalizeOptions& opts = {});

// The indeterminate Q as a coefficient.
QPolynomial Q();

void to_json(nlohmann::json& j, const UEAElement& e);
void from_json(const nlohmann::json& j, UEAElement& e);

}  // namespace dcla::pbw
