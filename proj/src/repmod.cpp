#include "dcla/repmod.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace dcla::repmod {

using liealg::FamilyReport;

std::string GenKey::str(Variant v) const {
    std::string head;
    switch (kind) {
        case GenKind::Xplus: head = "X+"; break;
        case GenKind::Xminus: head = "X-"; break;
        case GenKind::Cartan: head = v == Variant::sl ? "J" : "I"; break;
    }
    return head + "(" + std::to_string(i) + ";" + std::to_string(t) + ")";
}

GenKey GenKey::parse(const std::string& s) {
    GenKey k{GenKind::Cartan, 0, 0};
    std::size_t open = s.find('(');
    std::size_t semi = s.find(';');
    if (open == std::string::npos || semi == std::string::npos || s.back() != ')')
        throw ParseError("bad generator tag '" + s + "'", 0);
    std::string head = s.substr(0, open);
    if (head == "X+")
        k.kind = GenKind::Xplus;
    else if (head == "X-")
        k.kind = GenKind::Xminus;
    else if (head != "J" && head != "I")
        throw ParseError("bad generator tag '" + s + "'", 0);
    try {
        k.i = static_cast<unsigned>(std::stoul(s.substr(open + 1, semi - open - 1)));
        k.t = static_cast<unsigned>(std::stoul(s.substr(semi + 1, s.size() - semi - 2)));
    } catch (const std::exception&) {
        throw ParseError("bad generator tag '" + s + "'", open + 1);
    }
    return k;
}

const Matrix& WeightModule::gen(GenKind k, unsigned i, unsigned t) const {
    auto it = gens.find({k, i, t});
    if (it == gens.end())
        throw PreconditionError("generator " + GenKey{k, i, t}.str(spec.variant) + " not stored (T = " +
                                std::to_string(T) + ")");
    return it->second;
}

Matrix WeightModule::jay(unsigned i, unsigned t) const {
    if (spec.variant == Variant::sl) return cartan(i, t);
    return cartan(i, t) - cartan(i + 1, t);
}

unsigned WeightModule::cartan_count() const { return spec.variant == Variant::sl ? spec.m - 1 : spec.m; }

std::vector<std::pair<Vector, std::vector<std::size_t>>> WeightModule::weight_table() const {
    std::vector<std::pair<Vector, std::vector<std::size_t>>> out;
    for (std::size_t k = 0; k < dim; ++k) {
        if (out.empty() || out.back().first != weights[k]) out.push_back({weights[k], {}});
        out.back().second.push_back(k);
    }
    return out;
}

namespace {

// Coordinates in which every simple root is lexicographically positive:
// the K_j eigenvalues for gl, suffix sums of the H_i eigenvalues for sl.
Vector order_key(const Vector& w, Variant v) {
    if (v == Variant::gl) return w;
    Vector key(w.size());
    Rational acc;
    for (std::size_t i = w.size(); i-- > 0;) {
        acc += w[i];
        key[i] = acc;
    }
    return key;
}

// Reorders the basis so weights appear highest first, keeping ties stable.
WeightModule sorted_by_weight(WeightModule M) {
    std::vector<std::size_t> perm(M.dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vector> keys;
    for (const auto& w : M.weights) keys.push_back(order_key(w, M.spec.variant));
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    if (std::is_sorted(perm.begin(), perm.end())) return M;
    for (auto& [key, A] : M.gens) {
        Matrix B(M.dim, M.dim);
        for (std::size_t r = 0; r < M.dim; ++r)
            for (std::size_t c = 0; c < M.dim; ++c) B(r, c) = A(perm[r], perm[c]);
        A = std::move(B);
    }
    std::vector<Vector> w(M.dim);
    for (std::size_t r = 0; r < M.dim; ++r) w[r] = M.weights[perm[r]];
    M.weights = std::move(w);
    if (M.highest) {
        Vector h(M.dim);
        for (std::size_t r = 0; r < M.dim; ++r) h[r] = (*M.highest)[perm[r]];
        M.highest = std::move(h);
    }
    return M;
}

Rational cartan_entry(Variant v, unsigned j, unsigned i) {
    if (v == Variant::sl) {
        if (j == i) return 2;
        if (j + 1 == i || i + 1 == j) return -1;
        return 0;
    }
    if (j == i) return 1;
    if (j == i + 1) return -1;
    return 0;
}

Vector root(Variant v, unsigned m, unsigned i) {
    unsigned n = v == Variant::sl ? m - 1 : m;
    Vector a(n);
    for (unsigned j = 1; j <= n; ++j) a[j - 1] = cartan_entry(v, j, i);
    return a;
}

Vector add(Vector a, const Vector& b, int sign) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += sign > 0 ? b[k] : -b[k];
    return a;
}

Vector unit_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v[k] = 1;
    return v;
}

void check_beta(const AlgebraSpec& spec, const std::vector<Rational>& beta) {
    if (beta.size() != spec.m - 1)
        throw ValidationError("beta must have m-1 = " + std::to_string(spec.m - 1) + " entries");
    for (unsigned i = 1; i < spec.m; ++i)
        if (spec.Qi(i).is_zero() && !beta[i - 1].is_zero())
            throw ValidationError("beta_" + std::to_string(i) + " must be 0 because Q_" + std::to_string(i) + " = 0");
}

// Q_i^{-t} beta_i, read as 0 when Q_i = 0 (then beta_i = 0 anyway).
Rational scaled_beta(const AlgebraSpec& spec, const std::vector<Rational>& beta, unsigned i, unsigned t) {
    if (spec.Qi(i).is_zero()) return 0;
    return spec.Qi(i).pow(-static_cast<long>(t)) * beta[i - 1];
}

WeightModule one_dim(const AlgebraSpec& spec, unsigned T, const std::function<Rational(unsigned, unsigned)>& c) {
    spec.validate();
    WeightModule M;
    M.spec = spec.with_bound(0);
    M.T = T;
    M.dim = 1;
    unsigned n = M.cartan_count();
    for (unsigned t = 0; t <= T; ++t) {
        for (unsigned i = 1; i < spec.m; ++i) {
            M.gens[{GenKind::Xplus, i, t}] = Matrix(1, 1);
            M.gens[{GenKind::Xminus, i, t}] = Matrix(1, 1);
        }
        for (unsigned i = 1; i <= n; ++i) {
            Matrix a(1, 1);
            a(0, 0) = c(i, t);
            M.gens[{GenKind::Cartan, i, t}] = a;
        }
    }
    Vector w(n);
    for (unsigned i = 1; i <= n; ++i) w[i - 1] = c(i, 0);
    M.weights = {w};
    M.highest = Vector{Rational(1)};
    return M;
}

}  // namespace

ClassicalModule fundamental_module(unsigned m, unsigned l) {
    if (m < 2 || l < 1 || l >= m)
        throw ValidationError("fundamental module needs 1 <= l <= m-1 (m = " + std::to_string(m) +
                              ", l = " + std::to_string(l) + ")");
    std::vector<std::vector<unsigned>> subsets;
    std::vector<unsigned> cur(l);
    std::iota(cur.begin(), cur.end(), 1u);
    while (true) {
        subsets.push_back(cur);
        int k = static_cast<int>(l) - 1;
        while (k >= 0 && cur[k] == m - l + 1 + static_cast<unsigned>(k)) --k;
        if (k < 0) break;
        ++cur[k];
        for (unsigned q = k + 1; q < l; ++q) cur[q] = cur[q - 1] + 1;
    }
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k]] = k;

    ClassicalModule C;
    C.m = m;
    C.dim = subsets.size();
    // E_ab on the wedge of S: swap b for a, sign from the elements passed over
    auto unit_action = [&](unsigned a, unsigned b) {
        Matrix A(C.dim, C.dim);
        for (std::size_t k = 0; k < C.dim; ++k) {
            const auto& S = subsets[k];
            bool has_b = std::find(S.begin(), S.end(), b) != S.end();
            bool has_a = std::find(S.begin(), S.end(), a) != S.end();
            if (!has_b) continue;
            if (a == b) {
                A(k, k) = 1;
                continue;
            }
            if (has_a) continue;
            std::vector<unsigned> T2;
            unsigned between = 0;
            for (unsigned s : S) {
                if (s == b) continue;
                T2.push_back(s);
                if (s > std::min(a, b) && s < std::max(a, b)) ++between;
            }
            T2.push_back(a);
            std::sort(T2.begin(), T2.end());
            A(index.at(T2), k) = between % 2 == 0 ? 1 : -1;
        }
        return A;
    };
    for (unsigned i = 1; i < m; ++i) {
        C.e.push_back(unit_action(i, i + 1));
        C.f.push_back(unit_action(i + 1, i));
    }
    for (unsigned j = 1; j <= m; ++j) C.K.push_back(unit_action(j, j));
    C.highest = unit_vector(C.dim, 0);
    return C;
}

WeightModule evaluation_twist(const ClassicalModule& C, const Rational& gamma, const AlgebraSpec& spec, unsigned T) {
    spec.validate();
    if (C.m != spec.m) throw ValidationError("module and algebra disagree on m");
    WeightModule M;
    M.spec = spec.with_bound(0);
    M.T = T;
    M.evaluation_factors = 1;
    M.dim = C.dim;
    const unsigned m = spec.m;
    for (unsigned t = 0; t <= T; ++t) {
        Rational gt = gamma.pow(t);
        for (unsigned i = 1; i < m; ++i) {
            M.gens[{GenKind::Xplus, i, t}] = C.e[i - 1] * ((Rational(1) - spec.Qi(i) * gamma) * gt);
            M.gens[{GenKind::Xminus, i, t}] = C.f[i - 1] * gt;
        }
        if (spec.variant == Variant::sl)
            for (unsigned i = 1; i < m; ++i) M.gens[{GenKind::Cartan, i, t}] = (C.K[i - 1] - C.K[i]) * gt;
        else
            for (unsigned j = 1; j <= m; ++j) M.gens[{GenKind::Cartan, j, t}] = C.K[j - 1] * gt;
    }
    for (std::size_t k = 0; k < C.dim; ++k) {
        Vector w;
        if (spec.variant == Variant::sl)
            for (unsigned i = 1; i < m; ++i) w.push_back(C.K[i - 1](k, k) - C.K[i](k, k));
        else
            for (unsigned j = 1; j <= m; ++j) w.push_back(C.K[j - 1](k, k));
        M.weights.push_back(std::move(w));
    }
    M.highest = C.highest;
    return sorted_by_weight(std::move(M));
}

WeightModule one_dim_sl(const AlgebraSpec& spec, const std::vector<Rational>& beta, unsigned T) {
    if (spec.variant != Variant::sl) throw ValidationError("one_dim_sl needs an sl algebra");
    check_beta(spec, beta);
    return one_dim(spec, T, [&](unsigned i, unsigned t) { return scaled_beta(spec, beta, i, t); });
}

WeightModule one_dim_gl_b(const AlgebraSpec& spec, const std::vector<Rational>& beta, unsigned T) {
    if (spec.variant != Variant::gl) throw ValidationError("one_dim_gl_b needs a gl algebra");
    check_beta(spec, beta);
    // I(j;t) = sum_{k=j}^{m-1} J(k;t), so I(m;t) = 0
    return one_dim(spec, T, [&](unsigned j, unsigned t) {
        Rational s;
        for (unsigned k = j; k < spec.m; ++k) s += scaled_beta(spec, beta, k, t);
        return s;
    });
}

WeightModule one_dim_gl_h(const AlgebraSpec& spec, const std::vector<Rational>& h, unsigned T) {
    if (spec.variant != Variant::gl) throw ValidationError("one_dim_gl_h needs a gl algebra");
    if (h.size() < T + 1)
        throw ValidationError("h prefix has " + std::to_string(h.size()) + " terms, need h_0..h_" + std::to_string(T));
    return one_dim(spec, T, [&](unsigned, unsigned t) { return h[t]; });
}

WeightModule trivial_module(const AlgebraSpec& spec, unsigned T) {
    return one_dim(spec, T, [](unsigned, unsigned) { return Rational(0); });
}

WeightModule tensor(const WeightModule& A, const WeightModule& B) {
    if (A.spec.m != B.spec.m || A.spec.variant != B.spec.variant || A.spec.Q != B.spec.Q)
        throw ValidationError("tensor factors live over different algebras");
    if (A.T != B.T) throw ValidationError("tensor factors carry different truncations T");
    WeightModule M;
    M.spec = A.spec;
    M.T = A.T;
    M.evaluation_factors = A.evaluation_factors + B.evaluation_factors;
    M.dim = A.dim * B.dim;
    Matrix IA = Matrix::identity(A.dim), IB = Matrix::identity(B.dim);
    for (const auto& [key, a] : A.gens) {
        auto it = B.gens.find(key);
        if (it == B.gens.end()) throw ValidationError("tensor factors store different generators");
        M.gens[key] = kron(a, IB) + kron(IA, it->second);
    }
    for (std::size_t x = 0; x < A.dim; ++x)
        for (std::size_t y = 0; y < B.dim; ++y) M.weights.push_back(add(A.weights[x], B.weights[y], 1));
    if (A.highest && B.highest) {
        Vector h(M.dim);
        for (std::size_t x = 0; x < A.dim; ++x)
            for (std::size_t y = 0; y < B.dim; ++y) h[x * B.dim + y] = (*A.highest)[x] * (*B.highest)[y];
        M.highest = std::move(h);
    }
    return sorted_by_weight(std::move(M));
}

Subspace invariant_closure(const WeightModule& M, const Vector& v, unsigned limit) {
    Subspace S(M.dim);
    std::deque<Vector> todo;
    if (S.insert(v)) todo.push_back(v);
    while (!todo.empty()) {
        Vector w = std::move(todo.front());
        todo.pop_front();
        for (const auto& [key, g] : M.gens) {
            if (key.t >= limit) continue;
            Vector gw = g * w;
            if (S.insert(gw)) todo.push_back(std::move(gw));
        }
    }
    return S;
}

namespace {

void require_invariant(const WeightModule& M, const Subspace& S, const char* what) {
    for (const auto& [key, g] : M.gens)
        for (const auto& b : S.basis())
            if (!S.contains(g * b))
                throw InternalConsistency(std::string(what) + ": subspace not stable under " + key.str(M.spec.variant));
}

// Weight of a vector supported on a single weight.
const Vector& weight_of(const WeightModule& M, const Vector& v) {
    const Vector* w = nullptr;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (w && *w != M.weights[k]) throw InternalConsistency("vector is not a weight vector");
        w = &M.weights[k];
    }
    if (!w) throw PreconditionError("zero vector has no weight");
    return *w;
}

}  // namespace

WeightModule submodule(const WeightModule& M, const Subspace& S) {
    require_invariant(M, S, "submodule");
    WeightModule R;
    R.spec = M.spec;
    R.T = M.T;
    R.evaluation_factors = M.evaluation_factors;
    R.dim = S.dim();
    for (const auto& b : S.basis()) R.weights.push_back(weight_of(M, b));
    for (const auto& [key, g] : M.gens) {
        Matrix A(R.dim, R.dim);
        for (std::size_t c = 0; c < R.dim; ++c) {
            Vector x = S.coordinates(g * S.basis()[c]);
            for (std::size_t r = 0; r < R.dim; ++r) A(r, c) = x[r];
        }
        R.gens[key] = std::move(A);
    }
    if (M.highest && S.contains(*M.highest)) R.highest = S.coordinates(*M.highest);
    return sorted_by_weight(std::move(R));
}

WeightModule quotient(const WeightModule& M, const Subspace& S) {
    require_invariant(M, S, "quotient");
    for (const auto& b : S.basis()) weight_of(M, b);
    std::vector<bool> pivot(M.dim, false);
    for (auto p : S.pivots()) pivot[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < M.dim; ++k)
        if (!pivot[k]) keep.push_back(k);
    WeightModule R;
    R.spec = M.spec;
    R.T = M.T;
    R.evaluation_factors = M.evaluation_factors;
    R.dim = keep.size();
    for (auto k : keep) R.weights.push_back(M.weights[k]);
    auto project = [&](const Vector& v) {
        Vector r = S.reduce(v), out(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) out[k] = r[keep[k]];
        return out;
    };
    for (const auto& [key, g] : M.gens) {
        Matrix A(R.dim, R.dim);
        for (std::size_t c = 0; c < R.dim; ++c) {
            Vector x = project(g * unit_vector(M.dim, keep[c]));
            for (std::size_t r = 0; r < R.dim; ++r) A(r, c) = x[r];
        }
        R.gens[key] = std::move(A);
    }
    if (M.highest) {
        Vector h = project(*M.highest);
        if (!is_zero(h)) R.highest = std::move(h);
    }
    return R;
}

WeightModule cyclic_submodule(const WeightModule& M, const Vector& v) {
    if (v.size() != M.dim || is_zero(v)) throw PreconditionError("cyclic_submodule needs a nonzero vector of M");
    // On a product of K evaluation modules, gamma^t over the K points obeys a
    // linear recurrence of order K, so generators with t >= K act as combinations
    // of lower ones (1-dim factors only add scalars to the Cartan part).
    unsigned K = std::max(1u, M.evaluation_factors);
    Subspace S = invariant_closure(M, v, K);
    WeightModule base = M;
    base.highest = v;
    return submodule(base, S);
}

Subspace maximal_submodule(const WeightModule& M) {
    if (!M.highest) throw PreconditionError("maximal_submodule needs a distinguished highest vector");
    const Vector& v0 = *M.highest;
    const Vector& lambda = weight_of(M, v0);
    std::size_t p = M.dim, count = 0;
    for (std::size_t k = 0; k < M.dim; ++k)
        if (M.weights[k] == lambda) {
            ++count;
            p = k;
        }
    if (count != 1) throw PreconditionError("the weight space of the highest vector is not one-dimensional");
    // functionals vanishing on rad: phi and everything reachable by phi -> phi o g
    Vector phi = unit_vector(M.dim, p);
    phi[p] = v0[p].inverse();
    Subspace A(M.dim);
    std::deque<Vector> todo;
    A.insert(phi);
    todo.push_back(phi);
    while (!todo.empty()) {
        Vector psi = std::move(todo.front());
        todo.pop_front();
        for (const auto& [key, g] : M.gens) {
            Vector next = row_times(psi, g);
            if (A.insert(next)) todo.push_back(std::move(next));
        }
    }
    Matrix rows = Matrix::from_rows(A.basis(), M.dim);
    return Subspace::span(M.dim, kernel(rows));
}

bool is_simple(const WeightModule& M) { return maximal_submodule(M).dim() == 0; }

MonicPolynomial characteristic_polynomial(const Matrix& A) {
    // Faddeev-LeVerrier
    const std::size_t n = A.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix Mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = A * Mk + Matrix::identity(n) * c[n - k + 1];
        Matrix AM = A * Mk;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    c.pop_back();
    return MonicPolynomial(std::move(c));
}

HighestWeightVector highest_weight_of(const WeightModule& M) {
    // common kernel of the raising generators
    std::vector<Vector> rows;
    for (const auto& [key, g] : M.gens)
        if (key.kind == GenKind::Xplus)
            for (std::size_t r = 0; r < M.dim; ++r) rows.push_back(g.row(r));
    Subspace H = rows.empty() ? Subspace::whole(M.dim)
                              : Subspace::span(M.dim, kernel(Matrix::from_rows(rows, M.dim)));
    for (const auto& [w, idx] : M.weight_table()) {
        std::vector<Vector> unit;
        for (auto k : idx) unit.push_back(unit_vector(M.dim, k));
        Subspace V = H.intersect(Subspace::span(M.dim, unit));
        if (V.dim() == 0) continue;
        // narrow down to a common eigenvector of the commuting Cartan generators
        for (const auto& [key, g] : M.gens) {
            if (key.kind != GenKind::Cartan || V.dim() == 1) continue;
            Matrix R(V.dim(), V.dim());
            for (std::size_t c = 0; c < V.dim(); ++c) {
                Vector x = V.coordinates(g * V.basis()[c]);
                for (std::size_t r = 0; r < V.dim(); ++r) R(r, c) = x[r];
            }
            RootSearch rs = rational_roots(characteristic_polynomial(R));
            if (rs.roots.empty())
                throw PreconditionError("Cartan generator " + key.str(M.spec.variant) +
                                        " has no rational eigenvalue on the highest weight space");
            Matrix shifted = R - Matrix::identity(V.dim()) * rs.roots.back();
            std::vector<Vector> vs;
            for (const auto& x : kernel(shifted)) {
                Vector y(M.dim);
                for (std::size_t c = 0; c < V.dim(); ++c)
                    for (std::size_t j = 0; j < M.dim; ++j) y[j] += x[c] * V.basis()[c][j];
                vs.push_back(std::move(y));
            }
            V = Subspace::span(M.dim, vs);
        }
        HighestWeightVector out;
        out.vector = V.basis().front();
        out.weight.variant = M.spec.variant;
        std::size_t p = 0;
        while (out.vector[p].is_zero()) ++p;
        unsigned n = M.cartan_count();
        out.weight.u.assign(n, std::vector<Rational>(M.T + 1));
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned t = 0; t <= M.T; ++t) {
                Vector gv = M.cartan(i, t) * out.vector;
                Rational lam = gv[p] / out.vector[p];
                for (std::size_t j = 0; j < M.dim; ++j)
                    if (gv[j] != lam * out.vector[j])
                        throw InternalConsistency("highest weight vector is not a Cartan eigenvector");
                out.weight.u[i - 1][t] = lam;
            }
        return out;
    }
    throw PreconditionError("no vector is killed by every X+ generator");
}

WeightModule restrict_to_sl(const WeightModule& M) {
    if (M.spec.variant != Variant::gl) throw ValidationError("restrict_to_sl expects a gl module");
    WeightModule R = M;
    R.spec.variant = Variant::sl;
    R.gens.clear();
    for (const auto& [key, g] : M.gens)
        if (key.kind != GenKind::Cartan) R.gens[key] = g;
    for (unsigned t = 0; t <= M.T; ++t)
        for (unsigned i = 1; i < M.spec.m; ++i) R.gens[{GenKind::Cartan, i, t}] = M.jay(i, t);
    for (auto& w : R.weights) {
        Vector h(M.spec.m - 1);
        for (unsigned i = 0; i + 1 < M.spec.m; ++i) h[i] = w[i] - w[i + 1];
        w = std::move(h);
    }
    return sorted_by_weight(std::move(R));
}

CheckReport check_module_relations(const WeightModule& M) {
    const unsigned m = M.spec.m, T = M.T, nc = M.cartan_count();
    const Variant v = M.spec.variant;
    FamilyReport cc("cartan commute"), cx("[cartan,X]"), pm("[X+,X-]"), far("[X,X]=0 unless adjacent"),
        shift("shift"), serre("serre"), grading("weight grading");
    auto at = [](std::initializer_list<unsigned> xs) {
        std::string s;
        for (unsigned x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    for (unsigned a = 1; a <= nc; ++a)
        for (unsigned b = 1; b <= nc; ++b)
            for (unsigned s = 0; s <= T; ++s)
                for (unsigned t = 0; t <= T; ++t)
                    cc.record(commutator(M.cartan(a, s), M.cartan(b, t)).is_zero(), at({a, s, b, t}));
    for (unsigned j = 1; j <= nc; ++j)
        for (unsigned i = 1; i < m; ++i)
            for (unsigned s = 0; s <= T; ++s)
                for (unsigned t = 0; s + t <= T; ++t) {
                    Rational c = cartan_entry(v, j, i);
                    cx.record(commutator(M.cartan(j, s), M.xplus(i, t)) == M.xplus(i, s + t) * c, at({j, s, i, t}));
                    cx.record(commutator(M.cartan(j, s), M.xminus(i, t)) == M.xminus(i, s + t) * (-c),
                              at({j, s, i, t}));
                }
    for (unsigned i = 1; i < m; ++i)
        for (unsigned j = 1; j < m; ++j)
            for (unsigned t = 0; t <= T; ++t)
                for (unsigned s = 0; s + t + 1 <= T; ++s) {
                    Matrix want(M.dim, M.dim);
                    if (i == j) want = M.jay(i, s + t) - M.jay(i, s + t + 1) * M.spec.Qi(i);
                    pm.record(commutator(M.xplus(i, t), M.xminus(j, s)) == want, at({i, t, j, s}));
                }
    for (GenKind k : {GenKind::Xplus, GenKind::Xminus})
        for (unsigned i = 1; i < m; ++i)
            for (unsigned j = 1; j < m; ++j) {
                bool adjacent = i + 1 == j || j + 1 == i;
                if (!adjacent) {
                    for (unsigned t = 0; t <= T; ++t)
                        for (unsigned s = 0; s <= T; ++s)
                            far.record(commutator(M.gen(k, i, t), M.gen(k, j, s)).is_zero(), at({i, t, j, s}));
                    continue;
                }
                for (unsigned t = 0; t + 1 <= T; ++t)
                    for (unsigned s = 0; s + 1 <= T; ++s)
                        shift.record(commutator(M.gen(k, i, t + 1), M.gen(k, j, s)) ==
                                         commutator(M.gen(k, i, t), M.gen(k, j, s + 1)),
                                     at({i, t, j, s}));
                for (unsigned s = 0; s <= T; ++s)
                    for (unsigned t = 0; t <= T; ++t)
                        for (unsigned u = 0; u <= T; ++u)
                            serre.record(
                                commutator(M.gen(k, i, s), commutator(M.gen(k, i, t), M.gen(k, j, u))).is_zero(),
                                at({i, s, t, j, u}));
            }
    for (const auto& [key, g] : M.gens) {
        for (std::size_t c = 0; c < M.dim; ++c) {
            Vector target = M.weights[c];
            if (key.kind == GenKind::Xplus) target = add(target, root(v, m, key.i), 1);
            if (key.kind == GenKind::Xminus) target = add(target, root(v, m, key.i), -1);
            bool ok = true;
            for (std::size_t r = 0; r < M.dim; ++r)
                if (!g(r, c).is_zero() && M.weights[r] != target) ok = false;
            if (key.kind == GenKind::Cartan && key.t == 0)
                for (std::size_t r = 0; r < M.dim; ++r)
                    if (g(r, c) != (r == c ? M.weights[c][key.i - 1] : Rational(0))) ok = false;
            grading.record(ok, key.str(v) + " on basis vector " + std::to_string(c));
        }
    }
    return CheckReport{{cc, cx, pm, far, shift, serre, grading}};
}

Matrix act(const pbw::UEAElement& x, const WeightModule& M) {
    if (M.spec.m != 2 || M.spec.variant != Variant::sl) throw ValidationError("act expects a rank-1 sl module");
    Matrix out(M.dim, M.dim);
    for (const auto& [mono, coeff] : x.terms()) {
        Matrix p = Matrix::identity(M.dim);
        for (const auto& g : mono.word()) {
            GenKind k = g.kind == pbw::Kind::Xplus ? GenKind::Xplus
                                                   : (g.kind == pbw::Kind::Xminus ? GenKind::Xminus : GenKind::Cartan);
            p = p * M.gen(k, 1, g.degree);
        }
        out += p * coeff.eval(M.spec.Qi(1));
    }
    return out;
}

bool check_truncation_identity(const WeightModule& M, const Vector& v, unsigned n, unsigned s, unsigned t) {
    if (M.spec.m != 2 || M.spec.variant != Variant::sl)
        throw ValidationError("the truncation identity is a rank-1 statement");
    if (v.size() != M.dim || is_zero(v)) throw PreconditionError("v must be a nonzero vector of M");
    unsigned need = t + n * s + n + 1;
    if (need > M.T)
        throw PreconditionError("generators up to degree " + std::to_string(need) + " needed, module has T = " +
                                std::to_string(M.T));
    for (unsigned d = 0; d <= M.T; ++d) {
        if (!is_zero(M.xplus(1, d) * v)) throw PreconditionError("v is not killed by X+");
        Vector jv = M.cartan(1, d) * v;
        std::size_t p = 0;
        while (v[p].is_zero()) ++p;
        Rational lam = jv[p] / v[p];
        for (std::size_t k = 0; k < M.dim; ++k)
            if (jv[k] != lam * v[k]) throw PreconditionError("v is not a J eigenvector");
    }
    Vector w = v;
    for (unsigned k = 0; k < n; ++k) w = M.xminus(1, 0) * w;
    if (is_zero(w)) throw PreconditionError("X-(0)^n v = 0");
    if (!is_zero(M.xminus(1, 0) * w)) throw PreconditionError("X-(0)^(n+1) v != 0");

    QPolynomial mq = -pbw::Q();
    auto block = [&](unsigned k) {
        pbw::UEAElement acc;
        for (unsigned q = 0; q <= k; ++q)
            acc += pbw::jay_power(t + k * s + q, 1) * (QPolynomial(binomial(k, q)) * mq.pow(q));
        return act(acc, M);
    };
    Vector lhs = block(n) * v;
    Vector rhs(M.dim);
    for (unsigned k = 0; k < n; ++k) {
        Vector term = block(k) * (act(pbw::jay_power(s, n - k), M) * v);
        bool plus = (n - k + 1) % 2 == 0;
        for (std::size_t j = 0; j < M.dim; ++j) rhs[j] += plus ? term[j] : -term[j];
    }
    return lhs == rhs;
}

RecipeFactor RecipeFactor::fundamental(unsigned l, Rational gamma) {
    RecipeFactor f;
    f.kind = Kind::Fundamental;
    f.l = l;
    f.gamma = std::move(gamma);
    return f;
}

RecipeFactor RecipeFactor::sl_beta(std::vector<Rational> beta) {
    RecipeFactor f;
    f.kind = Kind::OneDimSl;
    f.values = std::move(beta);
    return f;
}

RecipeFactor RecipeFactor::gl_beta(std::vector<Rational> beta) {
    RecipeFactor f;
    f.kind = Kind::OneDimGlB;
    f.values = std::move(beta);
    return f;
}

RecipeFactor RecipeFactor::gl_h(std::vector<Rational> h) {
    RecipeFactor f;
    f.kind = Kind::OneDimGlH;
    f.values = std::move(h);
    return f;
}

void ModuleRecipe::validate() const {
    spec.validate();
    for (const auto& f : factors) {
        switch (f.kind) {
            case RecipeFactor::Kind::Fundamental:
                if (f.l < 1 || f.l >= spec.m) throw ValidationError("fundamental factor needs 1 <= l <= m-1");
                break;
            case RecipeFactor::Kind::OneDimSl:
                if (spec.variant != Variant::sl) throw ValidationError("sl one-dimensional factor over gl");
                check_beta(spec, f.values);
                break;
            case RecipeFactor::Kind::OneDimGlB:
                if (spec.variant != Variant::gl) throw ValidationError("gl one-dimensional factor over sl");
                check_beta(spec, f.values);
                break;
            case RecipeFactor::Kind::OneDimGlH:
                if (spec.variant != Variant::gl) throw ValidationError("gl one-dimensional factor over sl");
                break;
        }
    }
}

unsigned ModuleRecipe::evaluation_factors() const {
    return static_cast<unsigned>(std::count_if(factors.begin(), factors.end(), [](const RecipeFactor& f) {
        return f.kind == RecipeFactor::Kind::Fundamental;
    }));
}

unsigned ModuleRecipe::default_T() const { return std::max(1u, evaluation_factors()); }

RecipeBuild build_from_recipe(const ModuleRecipe& r, unsigned T) {
    r.validate();
    T = std::max(T, r.default_T());
    WeightModule acc = trivial_module(r.spec, T);
    for (const auto& f : r.factors) {
        WeightModule next;
        switch (f.kind) {
            case RecipeFactor::Kind::Fundamental:
                next = evaluation_twist(fundamental_module(r.spec.m, f.l), f.gamma, r.spec, T);
                break;
            case RecipeFactor::Kind::OneDimSl: next = one_dim_sl(r.spec, f.values, T); break;
            case RecipeFactor::Kind::OneDimGlB: next = one_dim_gl_b(r.spec, f.values, T); break;
            case RecipeFactor::Kind::OneDimGlH: next = one_dim_gl_h(r.spec, f.values, T); break;
        }
        acc = tensor(acc, next);
    }
    RecipeBuild out;
    out.product = acc;
    out.cyclic = cyclic_submodule(acc, *acc.highest);
    Subspace rad = maximal_submodule(out.cyclic);
    out.radical_dim = rad.dim();
    out.simple = quotient(out.cyclic, rad);
    return out;
}

WeightModule simple_from_recipe(const ModuleRecipe& r, unsigned T) { return build_from_recipe(r, T).simple; }

}  // namespace dcla::repmod
