#pragma once

#include <ostream>
#include <string>
#include <vector>

// Exit criteria for the engine model, shared by tests/acceptance and
// `otto selftest`.
namespace otto::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CriterionResult> run_all();

// One line per criterion: "[PASS] 01 name: detail".
void print_table(std::ostream& os, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

// Brute-force reference for the decoupled two-ion engine (k = 0, j2 = 0,
// measurement in |E1>): Boltzmann weights exp(-E_i/t) over the four
// energies (-2B, 2B, -J1, J1) summed directly, no matrices involved.
namespace oracle {

struct StrokeSums {
    double q_hot = 0.0;
    double w1 = 0.0;
    double q_cold = 0.0;
    double w2 = 0.0;
    double w_net = 0.0;
    double eta = 0.0;
};

StrokeSums decoupled_engine(double b_high, double b_low, double j1, double t_hot);

}  // namespace oracle

}  // namespace otto::acceptance
