#include "dcla/classify.hpp"

#include <algorithm>
#include <sstream>

#include "dcla/qpolynomial.hpp"
#include "dcla/symfun.hpp"

namespace dcla::classify {

std::string ClassificationDatum::str() const {
    std::ostringstream os;
    os << "phi = (";
    for (std::size_t i = 0; i < phi.size(); ++i) os << (i ? ", " : "") << phi[i].str();
    os << "), beta = (";
    for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? ", " : "") << beta[i];
    os << ")";
    if (h) {
        os << ", h = (";
        for (std::size_t i = 0; i < h->size(); ++i) os << (i ? ", " : "") << (*h)[i];
        os << ")";
    }
    return os.str();
}

std::vector<std::string> validate(const ClassificationDatum& d, const std::vector<Rational>& Q) {
    std::vector<std::string> out;
    if (d.phi.size() != Q.size())
        out.push_back("phi has " + std::to_string(d.phi.size()) + " entries, expected " + std::to_string(Q.size()));
    if (d.beta.size() != Q.size())
        out.push_back("beta has " + std::to_string(d.beta.size()) + " entries, expected " + std::to_string(Q.size()));
    for (std::size_t i = 0; i < Q.size(); ++i) {
        std::string idx = std::to_string(i + 1);
        if (i < d.beta.size() && Q[i].is_zero() && !d.beta[i].is_zero())
            out.push_back("beta_" + idx + " = " + d.beta[i].str() + " but Q_" + idx + " = 0 forces beta_" + idx + " = 0");
        if (i < d.phi.size() && !Q[i].is_zero() && d.phi[i].eval(Q[i].inverse()).is_zero())
            out.push_back("phi_" + idx + " has the root Q_" + idx + "^{-1} = " + Q[i].inverse().str());
    }
    return out;
}

namespace {

// p / (x - r), assuming r is a root
MonicPolynomial deflate(const MonicPolynomial& p, const Rational& r) {
    // synthetic division; q is dense low to high with q[n-1] = 1
    std::vector<Rational> d = p.dense();
    std::size_t n = p.degree();
    std::vector<Rational> q(n);
    q[n - 1] = 1;
    for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = d[k] + r * q[k];
    q.pop_back();
    MonicPolynomial out(std::move(q));
    if (p.roots()) {
        std::vector<Rational> rs = *p.roots();
        auto it = std::find(rs.begin(), rs.end(), r);
        if (it != rs.end()) rs.erase(it);
        out.set_roots(std::move(rs));
    }
    return out;
}

std::vector<Rational> roots_of(const MonicPolynomial& p) {
    if (p.roots()) return *p.roots();
    return split_roots(p);
}

void require_valid(const ClassificationDatum& d, const std::vector<Rational>& Q) {
    auto v = validate(d, Q);
    if (v.empty()) return;
    std::string msg = "invalid classification datum:";
    for (const auto& s : v) msg += " " + s + ";";
    throw ValidationError(msg);
}

}  // namespace

ClassificationDatum canonicalize(const ClassificationDatum& d, const std::vector<Rational>& Q) {
    ClassificationDatum out = d;
    for (std::size_t i = 0; i < Q.size() && i < out.phi.size(); ++i) {
        if (Q[i].is_zero()) continue;
        Rational r = Q[i].inverse();
        while (out.phi[i].degree() > 0 && out.phi[i].eval(r).is_zero()) {
            out.phi[i] = deflate(out.phi[i], r);
            out.beta[i] += 1;
        }
    }
    return out;
}

HighestWeight hw_from_datum_sl(const ClassificationDatum& d, const std::vector<Rational>& Q, unsigned T) {
    require_valid(d, Q);
    HighestWeight hw;
    hw.variant = Variant::sl;
    for (std::size_t i = 0; i < Q.size(); ++i) {
        std::vector<Rational> g = roots_of(d.phi[i]);
        std::vector<Rational> row(T + 1);
        row[0] = Rational(static_cast<long>(d.phi[i].degree())) + d.beta[i];
        for (unsigned t = 1; t <= T; ++t) {
            row[t] = symfun::power_sum<Rational>(g, t);
            if (!Q[i].is_zero()) row[t] += Q[i].pow(-static_cast<long>(t)) * d.beta[i];
        }
        hw.u.push_back(std::move(row));
    }
    return hw;
}

HighestWeight hw_from_datum_gl(const ClassificationDatum& d, const std::vector<Rational>& Q, unsigned T) {
    if (!d.h) throw ValidationError("a gl datum needs an h prefix");
    if (d.h->size() < T + 1)
        throw ValidationError("h prefix has " + std::to_string(d.h->size()) + " terms, need h_0..h_" +
                              std::to_string(T));
    HighestWeight sl = hw_from_datum_sl(d, Q, T);
    const std::size_t m = Q.size() + 1;
    HighestWeight hw;
    hw.variant = Variant::gl;
    hw.u.assign(m, std::vector<Rational>(T + 1));
    for (unsigned t = 0; t <= T; ++t) {
        Rational acc = (*d.h)[t];
        hw.u[m - 1][t] = acc;
        for (std::size_t j = m - 1; j-- > 0;) {
            acc += sl.u[j][t];
            hw.u[j][t] = acc;
        }
    }
    return hw;
}

HighestWeight sl_differences(const HighestWeight& gl) {
    HighestWeight out;
    out.variant = Variant::sl;
    for (std::size_t i = 0; i + 1 < gl.u.size(); ++i) {
        std::vector<Rational> row(gl.u[i].size());
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = gl.u[i][t] - gl.u[i + 1][t];
        out.u.push_back(std::move(row));
    }
    return out;
}

repmod::ModuleRecipe recipe_from_datum(const ClassificationDatum& d, const repmod::AlgebraSpec& spec) {
    using repmod::RecipeFactor;
    spec.validate();
    // Q_i^{-1} roots are allowed here: they are what canonicalize() absorbs
    repmod::ModuleRecipe r{spec, {}};
    for (std::size_t i = 0; i < d.phi.size(); ++i)
        for (const auto& g : roots_of(d.phi[i]))
            r.factors.push_back(RecipeFactor::fundamental(static_cast<unsigned>(i + 1), g));
    if (spec.variant == Variant::sl) {
        r.factors.push_back(RecipeFactor::sl_beta(d.beta));
    } else {
        if (!d.h) throw ValidationError("a gl datum needs an h prefix");
        r.factors.push_back(RecipeFactor::gl_beta(d.beta));
        r.factors.push_back(RecipeFactor::gl_h(*d.h));
    }
    return r;
}

namespace {

// phi_i and beta_i from the i-th row of an sl highest weight.
std::pair<MonicPolynomial, Rational> extract_row(const repmod::WeightModule& M, const Vector& v0,
                                                 const std::vector<Rational>& u, unsigned i) {
    const Rational& Q = M.spec.Qi(i);
    unsigned n = 0;
    Vector w = v0;
    const Matrix& f = M.xminus(i, 0);
    while (true) {
        w = f * w;
        if (is_zero(w)) break;
        if (++n > M.dim) throw InternalConsistency("X-(" + std::to_string(i) + ";0) is not nilpotent");
    }
    Rational beta = Q.is_zero() ? Rational(0) : u[0] - Rational(static_cast<long>(n));
    if (n + 1 > u.size())
        throw PreconditionError("highest weight known up to t = " + std::to_string(u.size() - 1) + ", need t = " +
                                std::to_string(n));
    std::vector<Rational> p;
    for (unsigned t = 1; t <= n; ++t) {
        Rational pt = u[t];
        if (!Q.is_zero()) pt -= Q.pow(-static_cast<long>(t)) * beta;
        p.push_back(pt);
    }
    MonicPolynomial phi = symfun::solve_power_sum_system(p);
    if (!phi.roots()) throw NotFullyFactorable(rational_roots(phi).remainder_degree);
    return {phi, beta};
}

}  // namespace

ClassificationDatum extract_datum_rank1(const repmod::WeightModule& M) {
    if (M.spec.m != 2 || M.spec.variant != Variant::sl) throw ValidationError("expected a rank-1 sl module");
    return extract_datum_rankm(M);
}

ClassificationDatum extract_datum_rankm(const repmod::WeightModule& M) {
    auto hv = repmod::highest_weight_of(M);
    HighestWeight sl = M.spec.variant == Variant::gl ? sl_differences(hv.weight) : hv.weight;
    ClassificationDatum d;
    for (unsigned i = 1; i < M.spec.m; ++i) {
        auto [phi, beta] = extract_row(M, hv.vector, sl.u[i - 1], i);
        d.phi.push_back(std::move(phi));
        d.beta.push_back(beta);
    }
    if (M.spec.variant == Variant::gl) d.h = hv.weight.u.back();
    return canonicalize(d, M.spec.Q);
}

void to_json(nlohmann::json& j, const ClassificationDatum& d) {
    j = nlohmann::json{{"phi", d.phi}, {"beta", d.beta}};
    if (d.h) j["h"] = *d.h;
}

void from_json(const nlohmann::json& j, ClassificationDatum& d) {
    try {
        d.phi = j.at("phi").get<std::vector<MonicPolynomial>>();
        d.beta = j.at("beta").get<std::vector<Rational>>();
        if (j.contains("h") && !j.at("h").is_null())
            d.h = j.at("h").get<std::vector<Rational>>();
        else
            d.h.reset();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad classification datum: ") + e.what());
    }
}

}  // namespace dcla::classify
