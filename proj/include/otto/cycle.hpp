#pragma once

#include <optional>
#include <string_view>

#include "otto/model.hpp"
#include "otto/thermo.hpp"

namespace otto::cycle {

enum class Regime { Engine, Refrigerator, Unphysical };

std::string_view to_string(Regime r);  // lowercase word

// Sign tolerance used by classify_regime and the eta guard.
inline constexpr double kSignTol = 1e-12;

struct CycleResult {
    double q_hot = 0.0;   // heat taken from the hot bath
    double w1 = 0.0;      // stroke work, b_high -> b_low
    double q_cold = 0.0;  // heat exchanged by the measurement stroke
    double w2 = 0.0;      // stroke work, b_low -> b_high
    double w_net = 0.0;   // q_hot + q_cold, the work output
    std::optional<double> eta;  // w_net / q_hot; empty when |q_hot| < kSignTol
    Regime regime = Regime::Unphysical;
    thermo::Populations pops_hot;
    thermo::Populations pops_cold;
    double entropy_heating = 0.0;  // entropy of ion 1 after thermalization
    bool fields_inverted = false;  // b_low > b_high
};

// Delta distribution on the measured eigenstate.
thermo::Populations measurement_populations(model::Measure m);

// Engine:       q_hot > 0, q_cold < 0, w_net > 0
// Refrigerator: q_hot < 0, q_cold > 0, w_net < 0
// anything else, including boundary values, is Unphysical.
Regime classify_regime(double q_hot, double q_cold, double w_net);

// One steady-state pass of the measurement-based Otto cycle:
//   heating   thermalize the full model at b_high and t_hot, reduce to ions 1-2
//   stroke 1  populations carried from b_high to b_low
//   cooling   projective measurement onto |E1> or |E3>
//   stroke 2  measured populations carried back to b_high
// Throws InvalidParams.
CycleResult run_otto(const model::ModelParams& p);

}  // namespace otto::cycle
