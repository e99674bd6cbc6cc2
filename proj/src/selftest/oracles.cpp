#include "oracles.hpp"

#include <bit>

#include "dcla/errors.hpp"

namespace dcla::selftest {

using liealg::Tag;
using liealg::Variant;
using repmod::GenKind;

namespace {

Matrix matrix_unit_of(const BasisElement& b, unsigned m) {
    switch (b.tag) {
        case Tag::E: return Matrix::unit(m, b.i - 1, b.j - 1);
        case Tag::J: return Matrix::unit(m, b.i - 1, b.i - 1) - Matrix::unit(m, b.i, b.i);
        case Tag::I: return Matrix::unit(m, b.i - 1, b.i - 1);
    }
    return Matrix(m, m);
}

std::size_t highest_index(const WeightModule& M) {
    if (!M.highest) throw PreconditionError("module has no distinguished highest vector");
    std::size_t p = M.dim;
    for (std::size_t k = 0; k < M.dim; ++k)
        if (!(*M.highest)[k].is_zero()) {
            if (p != M.dim) throw PreconditionError("highest vector is not a basis vector up to scale");
            p = k;
        }
    if (p == M.dim) throw PreconditionError("highest vector is zero");
    return p;
}

}  // namespace

LieElement classical_bracket(const AlgebraSpec& spec, const BasisElement& a, const BasisElement& b) {
    const unsigned m = spec.m;
    Matrix C = commutator(matrix_unit_of(a, m), matrix_unit_of(b, m));
    const std::uint32_t d = a.t + b.t;
    LieElement out;
    for (unsigned r = 1; r <= m; ++r)
        for (unsigned c = 1; c <= m; ++c)
            if (r != c && !C(r - 1, c - 1).is_zero()) out.add_term(BasisElement::E(r, c, d), C(r - 1, c - 1));
    if (spec.variant == Variant::gl) {
        for (unsigned j = 1; j <= m; ++j)
            if (!C(j - 1, j - 1).is_zero()) out.add_term(BasisElement::I(j, d), C(j - 1, j - 1));
    } else {
        // diag(C) = sum_i c_i (E_ii - E_{i+1,i+1}) gives c_i = C_11 + ... + C_ii
        Rational acc;
        for (unsigned i = 1; i < m; ++i) {
            acc += C(i - 1, i - 1);
            if (!acc.is_zero()) out.add_term(BasisElement::J(i, d), acc);
        }
    }
    return out;
}

FamilyReport compare_with_classical(const StructureTable& table) {
    FamilyReport f("classical current algebra");
    for (const auto& q : table.spec.Q)
        if (!q.is_zero()) throw PreconditionError("the classical oracle needs Q = 0");
    for (const auto& [pair, value] : table.entries) {
        LieElement expect = classical_bracket(table.spec, pair.first, pair.second);
        f.record(expect == value, "[" + pair.first.str() + ", " + pair.second.str() + "] = " + value.str() +
                                      ", classical " + expect.str());
    }
    return f;
}

Subspace radical_by_raising_words(const WeightModule& M) {
    const std::size_t p = highest_index(M);
    std::vector<const Matrix*> raising;
    for (const auto& [key, g] : M.gens)
        if (key.kind == GenKind::Xplus) raising.push_back(&g);

    Vector phi(M.dim);
    phi[p] = (*M.highest)[p].inverse();
    std::vector<Vector> rows;
    const std::size_t cap = 500000;
    // depth-first over all words; a word stops once phi w vanishes
    std::vector<Vector> stack{phi};
    while (!stack.empty()) {
        Vector r = std::move(stack.back());
        stack.pop_back();
        for (const Matrix* g : raising) {
            Vector next = row_times(r, *g);
            if (is_zero(next)) continue;
            if (rows.size() + stack.size() > cap) throw ResourceLimitExceeded("too many raising words");
            stack.push_back(next);
        }
        rows.push_back(std::move(r));
    }
    return Subspace::span(M.dim, kernel(Matrix::from_rows(rows, M.dim)));
}

CoordinateSearch invariant_coordinate_subspaces(const WeightModule& M) {
    if (M.dim > 20) throw ResourceLimitExceeded("coordinate search limited to dimension 20");
    const std::size_t n = M.dim;
    // succ[c]: basis vectors some generator sends e_c onto
    std::vector<std::uint32_t> succ(n, 0);
    for (const auto& [key, g] : M.gens)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!g(r, c).is_zero()) succ[c] |= std::uint32_t(1) << r;
    CoordinateSearch out;
    for (std::uint32_t S = 0; S < (std::uint32_t(1) << n); ++S) {
        bool closed = true;
        for (std::uint32_t rest = S; rest && closed; rest &= rest - 1) {
            unsigned c = static_cast<unsigned>(std::countr_zero(rest));
            closed = (succ[c] & ~S) == 0;
        }
        if (closed) out.invariant.push_back(S);
    }
    out.complete = true;
    for (const auto& [w, idx] : M.weight_table())
        if (idx.size() > 1) out.complete = false;
    return out;
}

FamilyReport check_radical(const WeightModule& M, const std::string& label) {
    FamilyReport f("radical oracles");
    Subspace R = repmod::maximal_submodule(M);
    Subspace W = radical_by_raising_words(M);
    f.record(R == W, label + ": maximal_submodule dim " + std::to_string(R.dim()) + ", raising-word radical dim " +
                         std::to_string(W.dim()));

    const std::size_t p = highest_index(M);
    CoordinateSearch cs = invariant_coordinate_subspaces(M);
    std::uint32_t all_proper = 0;
    for (std::uint32_t S : cs.invariant) {
        if (S >> p & 1u) continue;
        all_proper |= S;
        bool inside = true;
        for (std::size_t k = 0; k < M.dim && inside; ++k)
            if (S >> k & 1u) {
                Vector e(M.dim);
                e[k] = 1;
                inside = R.contains(e);
            }
        f.record(inside, label + ": invariant coordinate subspace " + std::to_string(S) + " escapes the radical");
    }
    if (cs.complete) {
        std::vector<Vector> span;
        for (std::size_t k = 0; k < M.dim; ++k)
            if (all_proper >> k & 1u) {
                Vector e(M.dim);
                e[k] = 1;
                span.push_back(std::move(e));
            }
        Subspace U = Subspace::span(M.dim, span);
        f.record(U == R, label + ": sum of proper invariant subspaces has dim " + std::to_string(U.dim()) +
                             ", radical " + std::to_string(R.dim()));
    }
    return f;
}

}  // namespace dcla::selftest
