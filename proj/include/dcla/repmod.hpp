#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liealg.hpp"
#include "matrix.hpp"
#include "monic.hpp"
#include "pbw.hpp"
#include "pbw_derived.hpp"

namespace dcla::repmod {

using liealg::AlgebraSpec;
using liealg::CheckReport;
using liealg::Variant;

// Cartan stands for J(i;t) over sl and I(j;t) over gl.
enum class GenKind : std::uint8_t { Xminus = 0, Cartan = 1, Xplus = 2 };

struct GenKey {
    GenKind kind;
    unsigned i;
    unsigned t;
    friend auto operator<=>(const GenKey&, const GenKey&) = default;
    std::string str(Variant v) const;  // "X+(1;0)", "X-(2;1)", "J(1;0)", "I(3;2)"
    static GenKey parse(const std::string& s);
};

// A finite-dimensional module given by one matrix per generator with t <= T.
// The basis is weight-graded: every basis vector is a weight vector, and
// equal weights are contiguous, highest first.
struct WeightModule {
    AlgebraSpec spec;
    unsigned T = 0;
    unsigned evaluation_factors = 0;  // tensor factors that are evaluation modules
    std::size_t dim = 0;
    std::map<GenKey, Matrix> gens;
    std::vector<Vector> weights;  // weight of each basis vector
    std::optional<Vector> highest;

    // Throws PreconditionError if the generator was not stored.
    const Matrix& gen(GenKind k, unsigned i, unsigned t) const;
    const Matrix& xplus(unsigned i, unsigned t) const { return gen(GenKind::Xplus, i, t); }
    const Matrix& xminus(unsigned i, unsigned t) const { return gen(GenKind::Xminus, i, t); }
    const Matrix& cartan(unsigned i, unsigned t) const { return gen(GenKind::Cartan, i, t); }
    // J(i;t); over gl this is I(i;t) - I(i+1;t).
    Matrix jay(unsigned i, unsigned t) const;
    unsigned cartan_count() const;
    // Distinct weights in basis order with the indices carrying them.
    std::vector<std::pair<Vector, std::vector<std::size_t>>> weight_table() const;
};

// A module over sl_m or gl_m itself: e_i, f_i and the diagonal units K_j.
struct ClassicalModule {
    unsigned m = 0;
    std::size_t dim = 0;
    std::vector<Matrix> e, f, K;  // e[i-1], f[i-1], K[j-1]
    Vector highest;
};

// The l-th exterior power of the natural module, basis the l-subsets in
// lexicographic order; the highest vector is the wedge of the first l unit vectors.
ClassicalModule fundamental_module(unsigned m, unsigned l);

// X+(i;t) -> (1 - Q_i gamma) gamma^t e_i, X-(i;t) -> gamma^t f_i,
// J(i;t) -> gamma^t (K_i - K_{i+1}) or I(j;t) -> gamma^t K_j, for t <= T.
WeightModule evaluation_twist(const ClassicalModule& C, const Rational& gamma, const AlgebraSpec& spec, unsigned T);

// Throws ValidationError when beta_i != 0 with Q_i = 0.
WeightModule one_dim_sl(const AlgebraSpec& spec, const std::vector<Rational>& beta, unsigned T);
WeightModule one_dim_gl_b(const AlgebraSpec& spec, const std::vector<Rational>& beta, unsigned T);
// Needs h_0..h_T.
WeightModule one_dim_gl_h(const AlgebraSpec& spec, const std::vector<Rational>& h, unsigned T);
WeightModule trivial_module(const AlgebraSpec& spec, unsigned T);

// x(v (x) w) = xv (x) w + v (x) xw, basis re-sorted by weight.
WeightModule tensor(const WeightModule& A, const WeightModule& B);

// Smallest subspace containing v and stable under every generator with t < limit.
Subspace invariant_closure(const WeightModule& M, const Vector& v, unsigned limit);
// Throws InternalConsistency unless S is a weight-graded invariant subspace.
WeightModule submodule(const WeightModule& M, const Subspace& S);
WeightModule quotient(const WeightModule& M, const Subspace& S);
// Closure under t <= max(1, evaluation_factors) - 1, then checked against every
// stored generator. The result carries v as its highest vector.
WeightModule cyclic_submodule(const WeightModule& M, const Vector& v);

// Largest invariant subspace inside the kernel of the coordinate functional
// dual to M.highest, whose weight space must be one-dimensional.
Subspace maximal_submodule(const WeightModule& M);
bool is_simple(const WeightModule& M);

struct HighestWeight {
    Variant variant = Variant::sl;
    std::vector<std::vector<Rational>> u;  // u[i-1][t]
    const Rational& at(unsigned i, unsigned t) const { return u.at(i - 1).at(t); }
    unsigned T() const { return u.empty() ? 0 : static_cast<unsigned>(u.front().size()) - 1; }
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

struct HighestWeightVector {
    HighestWeight weight;
    Vector vector;
};

// A common eigenvector of the Cartan generators killed by every X+; throws
// PreconditionError when there is none.
HighestWeightVector highest_weight_of(const WeightModule& M);

// Pulls a gl module back along upsilon.
WeightModule restrict_to_sl(const WeightModule& M);

// Relation instances whose generators all have t <= T, plus the weight grading.
CheckReport check_module_relations(const WeightModule& M);

// Action of a rank-1 enveloping algebra element, Q specialized to Q_1.
Matrix act(const pbw::UEAElement& x, const WeightModule& M);

// The truncation identity for v with X-(0)^{(n)} v != 0 and X-(0)^{(n+1)} v = 0:
// sum_w C(n,w)(-Q)^w J<1>_{t+ns+w} v
//   = sum_{k<n} (-1)^{n-k+1} (sum_w C(k,w)(-Q)^w J<1>_{t+ks+w}) J_s^{<n-k>} v.
// Throws PreconditionError if the hypotheses fail or T is too small.
bool check_truncation_identity(const WeightModule& M, const Vector& v, unsigned n, unsigned s, unsigned t);

struct RecipeFactor {
    enum class Kind { Fundamental, OneDimSl, OneDimGlB, OneDimGlH };
    Kind kind = Kind::Fundamental;
    unsigned l = 0;                // Fundamental
    Rational gamma;                // Fundamental
    std::vector<Rational> values;  // beta or h

    static RecipeFactor fundamental(unsigned l, Rational gamma);
    static RecipeFactor sl_beta(std::vector<Rational> beta);
    static RecipeFactor gl_beta(std::vector<Rational> beta);
    static RecipeFactor gl_h(std::vector<Rational> h);
};

struct ModuleRecipe {
    AlgebraSpec spec;
    std::vector<RecipeFactor> factors;

    void validate() const;
    unsigned evaluation_factors() const;
    // max(1, evaluation_factors)
    unsigned default_T() const;
};

struct RecipeBuild {
    WeightModule product;
    WeightModule cyclic;
    std::size_t radical_dim = 0;
    WeightModule simple;
};

// T below default_T is raised to it.
RecipeBuild build_from_recipe(const ModuleRecipe& r, unsigned T = 0);
WeightModule simple_from_recipe(const ModuleRecipe& r, unsigned T = 0);

// x^n + ... + c_0 of a small rational matrix.
MonicPolynomial characteristic_polynomial(const Matrix& A);

void to_json(nlohmann::json& j, const WeightModule& M);
void from_json(const nlohmann::json& j, WeightModule& M);
void to_json(nlohmann::json& j, const HighestWeight& h);
void to_json(nlohmann::json& j, const RecipeFactor& f);
void from_json(const nlohmann::json& j, RecipeFactor& f);

}  // namespace dcla::repmod
