#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcla/liealg.hpp"
#include "dcla/repmod.hpp"

namespace dcla::selftest {

using liealg::AlgebraSpec;
using liealg::BasisElement;
using liealg::FamilyReport;
using liealg::LieElement;
using liealg::StructureTable;
using repmod::WeightModule;

// [a x^s, b x^t] = [a,b] x^{s+t} with a, b the matrix units behind the basis
// elements, decoded back into the basis. Only meaningful when every Q_i is 0.
LieElement classical_bracket(const AlgebraSpec& spec, const BasisElement& a, const BasisElement& b);

// Every table entry against classical_bracket.
FamilyReport compare_with_classical(const StructureTable& table);

// rad = {x : phi(w x) = 0 for every word w in the stored X+ generators}, phi the
// coordinate functional of the highest vector. Exact as long as the stored X+(i;t)
// span the action of all X+(i;t), which holds for t <= T when T >= #evaluation factors - 1.
Subspace radical_by_raising_words(const WeightModule& M);

// Subsets of the basis whose span is invariant, found by brute force over all 2^dim subsets.
struct CoordinateSearch {
    std::vector<std::uint32_t> invariant;  // bitmasks, including 0 and the full set
    // Every weight space is one-dimensional, so every invariant subspace is one of these.
    bool complete = false;
};
// dim <= 20
CoordinateSearch invariant_coordinate_subspaces(const WeightModule& M);

// maximal_submodule against both oracles:
//   equal to radical_by_raising_words;
//   contains every proper invariant coordinate subspace;
//   equal to their sum when the coordinate search is complete.
FamilyReport check_radical(const WeightModule& M, const std::string& label);

}  // namespace dcla::selftest
