#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "dcla/classify.hpp"
#include "dcla/errors.hpp"
#include "dcla/liealg.hpp"
#include "dcla/pbw_identities.hpp"
#include "dcla/qpolynomial.hpp"
#include "dcla/symfun.hpp"
#include "oracles.hpp"

namespace dcla::selftest {

using classify::ClassificationDatum;
using liealg::Variant;
using repmod::RecipeFactor;

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failures;
        if (examples.size() < 10) examples.push_back(what);
    }
    void absorb(const liealg::FamilyReport& f, const std::string& where) {
        checks += f.instances;
        failures += f.failures;
        for (const auto& e : f.examples)
            if (examples.size() < 10) examples.push_back(where + " " + f.family + ": " + e);
    }
    void absorb(const liealg::CheckReport& r, const std::string& where) {
        for (const auto& f : r.families) absorb(f, where);
    }
    // Runs f; an exception counts as one failed check.
    void guarded(const std::string& what, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            record(false, what + ": " + e.what());
        }
    }
};

CriterionResult finish(unsigned id, std::string title, const Tally& t, std::string detail, Clock::time_point start) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.checks = t.checks;
    r.failures = t.failures;
    r.passed = t.failures == 0 && t.checks > 0;
    r.examples = t.examples;
    r.detail = std::move(detail);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::string params_str(const pbw::IdentityParams& p) {
    std::string s = "(";
    for (const auto& [k, v] : p) s += (s.size() > 1 ? "," : "") + k + "=" + std::to_string(v);
    return s + ")";
}

std::string vec_str(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

// all multisets of size <= max_size from pool, each sorted
void multisets(const std::vector<Rational>& pool, std::size_t max_size, std::vector<std::vector<Rational>>& out,
               std::vector<Rational>& cur, std::size_t from) {
    out.push_back(cur);
    if (cur.size() == max_size) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
        cur.push_back(pool[k]);
        multisets(pool, max_size, out, cur, k);
        cur.pop_back();
    }
}

void keep(Corpus* corpus, const std::string& label, const repmod::WeightModule& M) {
    if (corpus && M.dim <= 16 && M.highest) corpus->push_back({label, M});
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    long a = num(rng), b = den(rng);
    return Rational(a, b);
}

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CriterionResult criterion_1(const AcceptanceOptions&) {
    auto start = Clock::now();
    Tally t;
    std::size_t identities = 0;
    for (const auto& info : pbw::identity_catalog()) {
        ++identities;
        for (const auto& p : pbw::identity_grid(info.name, pbw::GridConfig{})) {
            std::string what = info.name + params_str(p);
            t.guarded(what, [&] {
                auto r = pbw::verify_identity(info.name, p);
                t.record(r.holds, what + " leaves " + r.difference.str());
            });
        }
    }
    return finish(1, "enveloping-algebra identity suite", t,
                  std::to_string(identities) + " identities over s,t,h <= 2, b,c <= 4, partitions of size <= 4",
                  start);
}

CriterionResult criterion_2(const AcceptanceOptions& opts) {
    auto start = Clock::now();
    Tally t;
    std::mt19937_64 rng(opts.seed);
    const std::vector<Rational> pool{Rational(0), Rational(1), Rational(1, 2), Rational(-2, 3)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t algebras = 0;
    std::string tried;
    for (unsigned m = 2; m <= 4; ++m)
        for (Variant v : {Variant::sl, Variant::gl}) {
            std::vector<std::vector<Rational>> draws{std::vector<Rational>(m - 1)};
            // two further distinct vectors; m = 2 only has three nonzero choices
            for (int attempt = 0; attempt < 32 && draws.size() < 3; ++attempt) {
                std::vector<Rational> Q(m - 1);
                for (auto& q : Q) q = pool[pick(rng)];
                if (std::find(draws.begin(), draws.end(), Q) == draws.end()) draws.push_back(Q);
            }
            for (const auto& Q : draws) {
                liealg::AlgebraSpec spec{m, v, Q, 3};
                std::string where = liealg::to_string(v) + std::to_string(m) + " Q=" + vec_str(Q);
                tried += (tried.empty() ? "" : "; ") + where;
                ++algebras;
                t.guarded(where, [&] {
                    liealg::StructureEngine engine(spec);
                    liealg::StructureTable table = engine.table(3);
                    t.absorb(liealg::check_relations(engine, 3), where);
                    t.absorb(liealg::check_antisymmetry(table), where);
                    t.absorb(liealg::check_jacobi(engine, 3), where);
                    bool classical = std::all_of(Q.begin(), Q.end(), [](const Rational& q) { return q.is_zero(); });
                    if (classical) t.absorb(compare_with_classical(table), where);
                });
            }
        }
    return finish(2, "relations, antisymmetry, Jacobi, classical oracle", t,
                  std::to_string(algebras) + " algebras at N = 3 (seed " + std::to_string(opts.seed) + "): " + tried,
                  start);
}

CriterionResult criterion_3(const AcceptanceOptions&, Corpus* corpus) {
    auto start = Clock::now();
    Tally t;
    const unsigned T = 4;
    std::vector<std::vector<Rational>> phis;
    std::vector<Rational> cur;
    multisets({Rational(-1), Rational(0), Rational(1), Rational(2)}, 3, phis, cur, 0);
    std::size_t data = 0, canonical = 0;
    for (Rational Q : {Rational(0), Rational(1), Rational(1, 3)}) {
        liealg::AlgebraSpec spec{2, Variant::sl, {Q}, 0};
        std::vector<Rational> betas{Rational(0)};
        if (!Q.is_zero()) betas = {Rational(0), Rational(1), Rational(-1, 2)};
        std::map<std::string, std::string> weight_owner;  // truncated weight -> canonical datum
        std::set<std::string> seen_canonical;
        for (const auto& roots : phis)
            for (const auto& beta : betas) {
                ++data;
                ClassificationDatum d{{monic_from_roots(roots)}, {beta}, std::nullopt};
                std::string label = "Q=" + Q.str() + " " + d.str();
                t.guarded(label, [&] {
                    auto build = repmod::build_from_recipe(classify::recipe_from_datum(d, spec), T);
                    const auto& M = build.simple;
                    ClassificationDatum canon = classify::canonicalize(d, spec.Q);
                    auto hv = repmod::highest_weight_of(M);
                    t.record(hv.weight == classify::hw_from_datum_sl(canon, spec.Q, T), label + ": highest weight");
                    t.record(classify::extract_datum_rank1(M) == canon, label + ": round trip");
                    auto rel = repmod::check_module_relations(M);
                    t.record(rel.passed(), label + ": module relations");
                    std::string ckey = canon.str(), wkey = nlohmann::json(hv.weight).dump();
                    if (seen_canonical.insert(ckey).second) ++canonical;
                    auto [it, fresh] = weight_owner.emplace(wkey, ckey);
                    if (!fresh)
                        t.record(it->second == ckey, label + ": same truncated weight as " + it->second);
                    keep(corpus, label + " cyclic", build.cyclic);
                    keep(corpus, label + " simple", M);
                });
            }
    }
    return finish(3, "rank-1 classification", t,
                  std::to_string(data) + " data, " + std::to_string(canonical) +
                      " canonical classes, weights compared up to t = " + std::to_string(T),
                  start);
}

CriterionResult criterion_4(const AcceptanceOptions&, Corpus* corpus) {
    auto start = Clock::now();
    Tally t;
    const unsigned T = 3;
    std::string detail;
    t.guarded("Q=1 gamma=1", [&] {
        liealg::AlgebraSpec spec{2, Variant::sl, {Rational(1)}, 0};
        auto M = repmod::evaluation_twist(repmod::fundamental_module(2, 1), Rational(1), spec, T);
        CoordinateSearch cs = invariant_coordinate_subspaces(M);
        t.record(cs.complete, "weight spaces are one-dimensional, so the search is exhaustive");
        const std::uint32_t full = (std::uint32_t(1) << M.dim) - 1;
        std::vector<std::uint32_t> proper;
        for (auto S : cs.invariant)
            if (S != 0 && S != full) proper.push_back(S);
        t.record(proper.size() == 1, std::to_string(proper.size()) + " proper nonzero submodules");
        for (unsigned s = 0; s <= T; ++s) t.record(M.xplus(1, s).is_zero(), "X+(1;" + std::to_string(s) + ") != 0");
        keep(corpus, "ev_1 of L(2) at Q=1", M);
        if (proper.size() != 1) return;
        std::uint32_t S = proper.front();
        t.record(std::popcount(S) == 1, "the proper submodule is not one-dimensional");
        std::vector<Vector> span;
        for (std::size_t k = 0; k < M.dim; ++k)
            if (S >> k & 1u) {
                Vector e(M.dim);
                e[k] = 1;
                span.push_back(e);
            }
        Subspace sub = Subspace::span(M.dim, span);
        auto N = repmod::submodule(M, sub);
        auto Q = repmod::quotient(M, sub);
        auto Lm = repmod::one_dim_sl(spec, {Rational(-1)}, T);
        auto Lp = repmod::one_dim_sl(spec, {Rational(1)}, T);
        t.record(N.dim == 1 && N.gens == Lm.gens, "submodule is not L^{-1}");
        t.record(Q.dim == 1 && Q.gens == Lp.gens, "quotient is not L^{1}");
        t.record(repmod::maximal_submodule(M).dim() == 1, "radical is not the 1-dimensional submodule");
        detail = "dim 2, one invariant line (basis vector " + std::to_string(std::countr_zero(S)) +
                 "), J(1;t) = -1 on it and 1 on the quotient for t <= " + std::to_string(T);
    });
    return finish(4, "evaluation module at Q = 1, gamma = 1 is not simple", t, detail, start);
}

CriterionResult criterion_5(const AcceptanceOptions&, Corpus* corpus) {
    auto start = Clock::now();
    Tally t;
    const unsigned T = 3;
    const std::vector<std::vector<Rational>> Qs{
        {Rational(0), Rational(0)}, {Rational(1), Rational(1, 2)}, {Rational(1, 3), Rational(0)}};
    const std::vector<std::vector<Rational>> root_options{
        {}, {Rational(-1)}, {Rational(0)}, {Rational(1)}, {Rational(2)}};
    const std::vector<std::vector<Rational>> hs{
        {Rational(0), Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}};
    std::size_t gl_data = 0, sl_data = 0;
    for (const auto& Q : Qs) {
        auto betas_for = [&](unsigned i) {
            return Q[i].is_zero() ? std::vector<Rational>{Rational(0)} : std::vector<Rational>{Rational(0), Rational(-1, 2)};
        };
        liealg::AlgebraSpec gl{3, Variant::gl, Q, 0}, sl{3, Variant::sl, Q, 0};
        for (const auto& r1 : root_options)
            for (const auto& r2 : root_options)
                for (const auto& b1 : betas_for(0))
                    for (const auto& b2 : betas_for(1))
                        for (std::size_t hk = 0; hk < hs.size(); ++hk) {
                            ClassificationDatum d{{monic_from_roots(r1), monic_from_roots(r2)}, {b1, b2}, hs[hk]};
                            ClassificationDatum canon = classify::canonicalize(d, Q);
                            std::string label = "gl3 Q=" + vec_str(Q) + " " + d.str();
                            ++gl_data;
                            t.guarded(label, [&] {
                                auto build = repmod::build_from_recipe(classify::recipe_from_datum(d, gl), T);
                                const auto& M = build.simple;
                                auto hw = repmod::highest_weight_of(M).weight;
                                auto expect = classify::hw_from_datum_gl(canon, Q, T);
                                for (unsigned j = 1; j <= 3; ++j)
                                    t.record(hw.u.at(j - 1) == expect.u.at(j - 1),
                                             label + ": row " + std::to_string(j) + " of the highest weight");
                                t.record(hw.u.at(2) == std::vector<Rational>(hs[hk].begin(), hs[hk].begin() + T + 1),
                                         label + ": last row is not h");
                                t.record(classify::extract_datum_rankm(M) == canon, label + ": round trip");
                                auto R = repmod::restrict_to_sl(M);
                                t.record(repmod::maximal_submodule(R).dim() == 0, label + ": sl restriction not simple");
                                auto hr = repmod::highest_weight_of(R).weight;
                                t.record(hr == classify::sl_differences(hw) &&
                                             hr == classify::hw_from_datum_sl(canon, Q, T),
                                         label + ": sl restriction weight");
                                keep(corpus, label + " cyclic", build.cyclic);
                                keep(corpus, label + " simple", M);
                                keep(corpus, label + " sl restriction", R);
                            });
                            if (hk != 0) continue;
                            ClassificationDatum ds{d.phi, d.beta, std::nullopt};
                            std::string slabel = "sl3 Q=" + vec_str(Q) + " " + ds.str();
                            ++sl_data;
                            t.guarded(slabel, [&] {
                                auto build = repmod::build_from_recipe(classify::recipe_from_datum(ds, sl), T);
                                ClassificationDatum scanon = classify::canonicalize(ds, Q);
                                t.record(repmod::highest_weight_of(build.simple).weight ==
                                             classify::hw_from_datum_sl(scanon, Q, T),
                                         slabel + ": highest weight");
                                t.record(classify::extract_datum_rankm(build.simple) == scanon, slabel + ": round trip");
                                keep(corpus, slabel + " cyclic", build.cyclic);
                            });
                        }
    }
    std::string dims;
    for (unsigned m = 3; m <= 4; ++m)
        for (unsigned l = 1; l < m; ++l) {
            std::string label = "L(omega_" + std::to_string(l) + ") over gl" + std::to_string(m);
            t.guarded(label, [&] {
                liealg::AlgebraSpec spec{m, Variant::gl, std::vector<Rational>(m - 1), 0};
                repmod::ModuleRecipe r{spec,
                                       {RecipeFactor::fundamental(l, Rational(0)),
                                        RecipeFactor::gl_beta(std::vector<Rational>(m - 1)),
                                        RecipeFactor::gl_h(std::vector<Rational>(2))}};
                auto build = repmod::build_from_recipe(r, 1);
                long expect = binom(m, l);
                t.record(build.simple.dim == static_cast<std::size_t>(expect),
                         label + " has dimension " + std::to_string(build.simple.dim));
                auto hw = repmod::highest_weight_of(build.simple).weight;
                bool fundamental = true;
                for (unsigned j = 1; j <= m; ++j)
                    for (unsigned s = 0; s <= hw.T(); ++s)
                        fundamental = fundamental && hw.at(j, s) == Rational(s == 0 && j <= l ? 1 : 0);
                t.record(fundamental, label + ": highest weight is not omega_" + std::to_string(l));
                dims += (dims.empty() ? "" : ", ") + std::to_string(build.simple.dim);
            });
        }
    return finish(5, "rank-m sl and gl classification", t,
                  std::to_string(gl_data) + " gl3 data and " + std::to_string(sl_data) +
                      " sl3 data at T = 3; fundamental dimensions " + dims,
                  start);
}

CriterionResult criterion_6(const AcceptanceOptions& opts) {
    auto start = Clock::now();
    Tally t;
    std::mt19937_64 rng(opts.seed + 6);
    std::size_t instances = 0;
    for (unsigned n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Rational> x(n), b(n);
            for (auto& v : x) v = random_rational(rng);
            for (auto& v : b) v = random_rational(rng);
            symfun::SymInstance inst(x, b);
            std::string where = "x=" + vec_str(x) + " b=" + vec_str(b);
            ++instances;
            t.guarded(where, [&] {
                for (unsigned k = 1; k <= n + 2; ++k)
                    t.record(symfun::check_newton_identity(inst, k), where + " Newton k=" + std::to_string(k));
                for (unsigned s = n + 1; s <= n + 3; ++s)
                    t.record(symfun::check_tail_identity(inst, s), where + " tail s=" + std::to_string(s));
                for (unsigned k = 0; k < n; ++k)
                    t.record(symfun::check_weighted_newton_identity(inst, k),
                             where + " weighted Newton k=" + std::to_string(k));
                t.record(symfun::check_weighted_tail_identity(inst), where + " weighted tail");
            });
        }
    for (std::size_t n = 1; n <= 3; ++n) {
        std::string where = "symbolic n=" + std::to_string(n);
        t.guarded(where, [&] {
            std::vector<QPolynomial> x, b;
            for (std::size_t i = 0; i < n; ++i) {
                x.push_back(QPolynomial::variable(i, 2 * n));
                b.push_back(QPolynomial::variable(n + i, 2 * n));
            }
            std::span<const QPolynomial> xs(x), bs(b);
            for (unsigned k = 1; k <= n + 2; ++k)
                t.record(symfun::newton_residual(xs, k).is_zero(), where + " Newton k=" + std::to_string(k));
            for (unsigned s = n + 1; s <= n + 3; ++s)
                t.record(symfun::tail_residual(xs, s).is_zero(), where + " tail s=" + std::to_string(s));
            for (unsigned k = 0; k < n; ++k)
                t.record(symfun::weighted_newton_residual(xs, bs, k).is_zero(),
                         where + " weighted Newton k=" + std::to_string(k));
            t.record(symfun::weighted_tail_residual(xs, bs).is_zero(), where + " weighted tail");
        });
    }
    std::uniform_int_distribution<int> small(-3, 3);
    std::size_t solved = 0;
    for (std::size_t n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 12; ++rep) {
            std::vector<Rational> x(n);
            for (auto& v : x) v = rep % 2 ? random_rational(rng) : Rational(small(rng));
            std::string where = "power sums of " + vec_str(x);
            ++solved;
            t.guarded(where, [&] {
                std::vector<Rational> u;
                for (unsigned k = 1; k <= n; ++k) u.push_back(symfun::power_sum<Rational>(x, k));
                MonicPolynomial p = symfun::solve_power_sum_system(u);
                std::vector<Rational> sorted = x;
                std::sort(sorted.begin(), sorted.end());
                t.record(p.roots() && *p.roots() == sorted, where + " solved to " + p.str());
            });
        }
    return finish(6, "power sums and elementary symmetric functions", t,
                  std::to_string(instances) + " rational instances n <= 6 (seed " + std::to_string(opts.seed + 6) +
                      "), symbolic n <= 3, " + std::to_string(solved) + " power-sum solves",
                  start);
}

CriterionResult criterion_7(const AcceptanceOptions& opts, const Corpus* corpus) {
    Corpus own;
    if (!corpus) {
        criterion_3(opts, &own);
        criterion_4(opts, &own);
        criterion_5(opts, &own);
        corpus = &own;
    }
    auto start = Clock::now();
    Tally t;
    std::size_t exhaustive = 0, nonsimple = 0;
    for (const auto& [label, M] : *corpus) {
        t.guarded(label, [&] {
            t.absorb(check_radical(M, label), "");
            if (invariant_coordinate_subspaces(M).complete) ++exhaustive;
            if (repmod::maximal_submodule(M).dim() > 0) ++nonsimple;
        });
    }
    return finish(7, "radical against independent oracles", t,
                  std::to_string(corpus->size()) + " modules of dim <= 16 (" + std::to_string(nonsimple) +
                      " with nonzero radical, " + std::to_string(exhaustive) + " multiplicity-free)",
                  start);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, const std::vector<unsigned>& which) {
    auto wanted = [&](unsigned id) { return which.empty() || std::find(which.begin(), which.end(), id) != which.end(); };
    bool gather = wanted(7) && wanted(3) && wanted(4) && wanted(5);
    Corpus corpus;
    Corpus* sink = gather ? &corpus : nullptr;
    std::vector<CriterionResult> out;
    if (wanted(1)) out.push_back(criterion_1(opts));
    if (wanted(2)) out.push_back(criterion_2(opts));
    if (wanted(3)) out.push_back(criterion_3(opts, sink));
    if (wanted(4)) out.push_back(criterion_4(opts, sink));
    if (wanted(5)) out.push_back(criterion_5(opts, sink));
    if (wanted(6)) out.push_back(criterion_6(opts));
    if (wanted(7)) out.push_back(criterion_7(opts, gather ? &corpus : nullptr));
    return out;
}

std::string summary_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", r.seconds);
    std::string s = std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + " (" +
                    std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failed, " + buf + ")";
    return s;
}

void to_json(nlohmann::json& j, const CriterionResult& r) {
    j = nlohmann::json{{"criterion", r.id},      {"title", r.title},       {"passed", r.passed},
                       {"checks", r.checks},     {"failures", r.failures}, {"detail", r.detail},
                       {"failing_examples", r.examples}};
}

}  // namespace dcla::selftest
