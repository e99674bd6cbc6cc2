#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbw.hpp"

namespace dcla::pbw {

// Integer parameter assignment, e.g. {"s":1,"t":0,"h":1,"p":2}.
using IdentityParams = std::map<std::string, long>;

struct IdentityResult {
    bool holds = false;
    UEAElement difference;  // normalized LHS - RHS
};

struct IdentityInfo {
    std::string name;
    std::string statement;
    std::vector<std::string> params;
};

// Every identity verify_identity knows about, in a fixed order.
const std::vector<IdentityInfo>& identity_catalog();

// Throws ValidationError for unknown names or missing/inadmissible parameters.
IdentityResult verify_identity(const std::string& name, const IdentityParams& params,
                               const NormalizeOptions& opts = {});

struct GridConfig {
    long st_max = 2;         // s, t, h range over 0..st_max
    long bc_max = 4;         // b, c range over 1..bc_max; p over the matching natural range
    long partition_max = 4;  // k and partition sizes range over 0..partition_max
    long binomial_max = 8;   // z' range for the binomial convolution
};

// All admissible parameter tuples of one identity over the grid.
std::vector<IdentityParams> identity_grid(const std::string& name, const GridConfig& grid);

}  // namespace dcla::pbw
