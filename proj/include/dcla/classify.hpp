#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "monic.hpp"
#include "repmod.hpp"

namespace dcla::classify {

using repmod::HighestWeight;
using repmod::Variant;

// (phi, beta) for sl, (phi, beta, h) for gl. h is a finite prefix h_0..h_T.
struct ClassificationDatum {
    std::vector<MonicPolynomial> phi;
    std::vector<Rational> beta;
    std::optional<std::vector<Rational>> h;

    friend bool operator==(const ClassificationDatum&, const ClassificationDatum&) = default;
    std::string str() const;
};

// Every violation as a message: Q_i^{-1} roots of phi_i, beta_i != 0 with Q_i = 0,
// length mismatches. Empty means valid.
std::vector<std::string> validate(const ClassificationDatum& d, const std::vector<Rational>& Q);

// Strips every Q_i^{-1} root from phi_i and adds its multiplicity to beta_i.
ClassificationDatum canonicalize(const ClassificationDatum& d, const std::vector<Rational>& Q);

// u_{i,0} = deg phi_i + beta_i; u_{i,t} = p_t(roots of phi_i) + Q_i^{-t} beta_i for t > 0
// (the beta term dropped when Q_i = 0). Throws ValidationError / NotFullyFactorable.
HighestWeight hw_from_datum_sl(const ClassificationDatum& d, const std::vector<Rational>& Q, unsigned T);
// u~_{j,t} = sum_{k=j}^{m-1} u_{k,t} + h_t, and u~_{m,t} = h_t.
HighestWeight hw_from_datum_gl(const ClassificationDatum& d, const std::vector<Rational>& Q, unsigned T);

// Evaluation factors at the roots, then the one-dimensional factors.
repmod::ModuleRecipe recipe_from_datum(const ClassificationDatum& d, const repmod::AlgebraSpec& spec);

// n from the X-(0)-string of the highest vector, beta = u_0 - n (0 when Q = 0),
// the roots from the corrected power sums u_t - Q^{-t} beta, t = 1..n.
ClassificationDatum extract_datum_rank1(const repmod::WeightModule& M);
// The same per index i on the rank-1 slice; for gl, h is the last row.
ClassificationDatum extract_datum_rankm(const repmod::WeightModule& M);

// sl part of a gl weight: u_{i,t} = u~_{i,t} - u~_{i+1,t}.
HighestWeight sl_differences(const HighestWeight& gl);

void to_json(nlohmann::json& j, const ClassificationDatum& d);
void from_json(const nlohmann::json& j, ClassificationDatum& d);

}  // namespace dcla::classify
