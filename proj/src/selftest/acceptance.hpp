#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "dcla/repmod.hpp"

namespace dcla::selftest {

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
};

struct CriterionResult {
    unsigned id = 0;
    std::string title;
    bool passed = false;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string detail;                 // counts, or the first failures
    std::vector<std::string> examples;  // first few failing instances
    double seconds = 0;
};

// Modules gathered by criteria 3-5 for the oracle comparison of criterion 7.
struct LabeledModule {
    std::string label;
    repmod::WeightModule module;
};
using Corpus = std::vector<LabeledModule>;

CriterionResult criterion_1(const AcceptanceOptions& opts);
CriterionResult criterion_2(const AcceptanceOptions& opts);
CriterionResult criterion_3(const AcceptanceOptions& opts, Corpus* corpus = nullptr);
CriterionResult criterion_4(const AcceptanceOptions& opts, Corpus* corpus = nullptr);
CriterionResult criterion_5(const AcceptanceOptions& opts, Corpus* corpus = nullptr);
CriterionResult criterion_6(const AcceptanceOptions& opts);
// Rebuilds the corpus when none is given.
CriterionResult criterion_7(const AcceptanceOptions& opts, const Corpus* corpus = nullptr);

// The criteria listed (all when empty), in order; 3-5 feed 7.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, const std::vector<unsigned>& which = {});

// "PASS 3 rank-1 classification (245 checks, 1.2 s)"
std::string summary_line(const CriterionResult& r);

void to_json(nlohmann::json& j, const CriterionResult& r);

}  // namespace dcla::selftest
