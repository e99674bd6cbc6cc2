#include <cstdlib>
#include <iostream>

#include "acceptance.hpp"

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Optional arguments: criterion numbers to run.
int main(int argc, char** argv) {
    std::vector<unsigned> which;
    for (int i = 1; i < argc; ++i) which.push_back(static_cast<unsigned>(std::atoi(argv[i])));
    dcla::selftest::AcceptanceOptions opts;
    bool all = true;
    for (const auto& r : dcla::selftest::run_acceptance(opts, which)) {
        std::cout << dcla::selftest::summary_line(r) << "\n";
        std::cout << "    " << r.detail << "\n";
        for (const auto& e : r.examples) std::cout << "    failing: " << e << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
