#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace dcla::liealg {

enum class Variant { sl, gl };

std::string to_string(Variant v);
Variant parse_variant(std::string_view s);

struct AlgebraSpec {
    unsigned m = 2;
    Variant variant = Variant::sl;
    std::vector<Rational> Q;  // Q_1..Q_{m-1}
    unsigned N = 0;           // degree bound

    // Throws ValidationError.
    void validate() const;
    const Rational& Qi(unsigned i) const { return Q.at(i - 1); }
    // Same algebra, different truncation or variant.
    AlgebraSpec with_bound(unsigned n) const;
    AlgebraSpec with_variant(Variant v) const;
    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

enum class Tag : std::uint8_t { E = 0, J = 1, I = 2 };

// E(i,j;t) for i != j, J(i;t) in sl, I(j;t) in gl. Indices are 1-based.
struct BasisElement {
    Tag tag = Tag::E;
    std::uint32_t i = 1;
    std::uint32_t j = 0;  // only used by E
    std::uint32_t t = 0;

    static BasisElement E(std::uint32_t i, std::uint32_t j, std::uint32_t t) { return {Tag::E, i, j, t}; }
    static BasisElement J(std::uint32_t i, std::uint32_t t) { return {Tag::J, i, 0, t}; }
    static BasisElement I(std::uint32_t j, std::uint32_t t) { return {Tag::I, j, 0, t}; }

    bool is_diagonal() const { return tag != Tag::E; }
    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
    // "E(1,2;0)", "J(1;3)", "I(2;0)"
    std::string str() const;
    static BasisElement parse(std::string_view s);
};

// All basis elements of the variant with degree <= n, degree-major.
std::vector<BasisElement> basis(const AlgebraSpec& spec, unsigned n);
bool belongs(const BasisElement& b, const AlgebraSpec& spec);

class LieElement {
public:
    using Terms = std::map<BasisElement, Rational>;

    LieElement() = default;
    LieElement(const BasisElement& b) { terms_.emplace(b, Rational(1)); }  // NOLINT
    static LieElement term(const Rational& c, const BasisElement& b);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BasisElement& b) const;
    void add_term(const BasisElement& b, const Rational& c);
    unsigned max_degree() const;

    LieElement operator-() const;
    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    // "2*E(1,2;0) - J(1;1)", "0" when empty
    std::string str() const;

private:
    Terms terms_;
};

// Generators in terms of the basis. In gl, J(i;t) stands for I(i;t) - I(i+1;t).
LieElement xplus(unsigned i, unsigned t);
LieElement xminus(unsigned i, unsigned t);
LieElement jay(const AlgebraSpec& spec, unsigned i, unsigned t);

// Image under the evaluation map at gamma, as an m x m matrix.
Matrix eval_image(const BasisElement& b, const Rational& gamma, const AlgebraSpec& spec);
Matrix eval_image(const LieElement& e, const Rational& gamma, const AlgebraSpec& spec);

using BasisPair = std::pair<BasisElement, BasisElement>;

struct StructureTable {
    AlgebraSpec spec;
    std::map<BasisPair, LieElement> entries;

    // Throws DegreeOverflow if (a, b) lies outside the table.
    const LieElement& at(const BasisElement& a, const BasisElement& b) const;
};

struct SolverOptions {
    unsigned degree_slack = 6;  // D may grow from s+t+1 up to s+t+1+slack
};

// Computes brackets of basis elements on demand by evaluation at sample points
// and an exact solve, caching every result. Seeding with a table makes its
// entries authoritative; anything outside is computed.
class StructureEngine {
public:
    explicit StructureEngine(AlgebraSpec spec, SolverOptions opts = {});
    explicit StructureEngine(const StructureTable& seed, SolverOptions opts = {});

    const AlgebraSpec& spec() const { return spec_; }
    const LieElement& bracket(const BasisElement& a, const BasisElement& b);
    LieElement bracket(const LieElement& a, const LieElement& b);
    // gamma_0, gamma_1, ...: 1, 2, 3, ... skipping every Q_i^{-1}
    const Rational& sample_point(std::size_t k);
    std::size_t solved() const { return solved_; }
    // Largest target degree any solve needed beyond its starting s+t+1.
    unsigned max_degree_growth() const { return growth_; }

    StructureTable table(unsigned n);

private:
    LieElement solve(const BasisElement& a, const BasisElement& b);
    const Matrix& image(const BasisElement& b, std::size_t point);

    AlgebraSpec spec_;
    SolverOptions opts_;
    std::vector<Rational> points_;
    std::map<std::pair<BasisElement, std::size_t>, Matrix> images_;
    std::map<BasisPair, LieElement> cache_;
    std::size_t solved_ = 0;
    unsigned growth_ = 0;
};

// The table of all pairs of basis elements with degrees <= spec.N.
StructureTable structure_constants(const AlgebraSpec& spec, SolverOptions opts = {});

// Bilinear extension of the table.
LieElement bracket(const LieElement& a, const LieElement& b, const StructureTable& table);

struct FamilyReport {
    FamilyReport() = default;
    explicit FamilyReport(std::string name) : family(std::move(name)) {}
    std::string family;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;  // first few failing instances
    bool passed() const { return failures == 0; }
    void record(bool ok, const std::string& what);
};

struct CheckReport {
    std::vector<FamilyReport> families;
    bool passed() const;
    std::size_t instances() const;
    std::size_t failures() const;
};

// Defining relations with every generator degree <= N.
CheckReport check_relations(StructureEngine& engine, unsigned N);
CheckReport check_relations(const StructureTable& table);
CheckReport check_antisymmetry(const StructureTable& table);
// All triples of basis elements with degrees <= N, inner brackets computed as needed.
CheckReport check_jacobi(StructureEngine& engine, unsigned N);
// eval_image([a,b]) = [eval_image(a), eval_image(b)] at the given points.
CheckReport check_eval_homomorphism(const StructureTable& table, const std::vector<Rational>& gammas);
// Brackets of X^+_{i,t}, X^-_{i,t}, J_{i,t} agree with the rank-1 algebra at parameter Q_i.
CheckReport check_rank1_slice(const StructureTable& table);

// sl -> gl, X fixed and J(i;t) -> I(i;t) - I(i+1;t).
LieElement upsilon(const LieElement& e);
// Homomorphism on all table pairs and injectivity on the truncated span.
CheckReport check_upsilon(const StructureTable& sl_table, StructureEngine& gl_engine);

struct GammaIndex {
    unsigned i;
    unsigned k;
    friend auto operator<=>(const GammaIndex&, const GammaIndex&) = default;
    std::string str() const;  // "(i,k)"
};

// One generator map entry: source generator -> scalar * target generator.
struct GeneratorImage {
    std::string source;
    std::string target;
    Rational scalar;
};

struct PhiReport {
    std::vector<unsigned> composition;
    std::vector<Rational> Qhat;
    std::vector<Rational> Q;       // induced parameters of gl^<Q>
    std::vector<GammaIndex> zeta_inverse;  // zeta_inverse[i-1] = zeta^{-1}(i)
    std::vector<GeneratorImage> phi;
    std::vector<GeneratorImage> phi_inverse;
    bool inverse_ok = false;
    CheckReport relations;  // relations of g_Qhat(m) on the images of phi^{-1}
    bool passed() const { return inverse_ok && relations.passed(); }
};

unsigned zeta(const std::vector<unsigned>& composition, GammaIndex g);
GammaIndex zeta_inverse(const std::vector<unsigned>& composition, unsigned n);
// Q_i = Qhat_k^{-1} when zeta^{-1}(i) = (m_k, k), k < r; 0 otherwise.
std::vector<Rational> induced_Q(const std::vector<unsigned>& composition, const std::vector<Rational>& Qhat);

// Throws ValidationError on a zero Qhat_k or a bad composition.
PhiReport phi_isomorphism(const std::vector<unsigned>& composition, const std::vector<Rational>& Qhat,
                          unsigned N);

void to_json(nlohmann::json& j, const AlgebraSpec& s);
void from_json(const nlohmann::json& j, AlgebraSpec& s);
void to_json(nlohmann::json& j, const LieElement& e);
void from_json(const nlohmann::json& j, LieElement& e);
void to_json(nlohmann::json& j, const StructureTable& t);
void from_json(const nlohmann::json& j, StructureTable& t);
void to_json(nlohmann::json& j, const CheckReport& r);
void to_json(nlohmann::json& j, const PhiReport& r);

}  // namespace dcla::liealg
