#include <array>
#include <cmath>

#include "otto/acceptance.hpp"

namespace otto::acceptance::oracle {

StrokeSums decoupled_engine(double b_high, double b_low, double j1, double t_hot) {
    const std::array<double, 4> e_hot{-2.0 * b_high, 2.0 * b_high, -j1, j1};
    const std::array<double, 4> e_low{-2.0 * b_low, 2.0 * b_low, -j1, j1};
    const std::array<double, 4> cold{1.0, 0.0, 0.0, 0.0};

    double ground = e_hot[0];
    for (double e : e_hot) ground = std::fmin(ground, e);
    std::array<double, 4> hot{};
    double z = 0.0;
    for (int i = 0; i < 4; ++i) {
        hot[i] = std::exp(-(e_hot[i] - ground) / t_hot);
        z += hot[i];
    }
    for (double& p : hot) p /= z;

    StrokeSums s;
    for (int i = 0; i < 4; ++i) {
        s.q_hot += e_hot[i] * (hot[i] - cold[i]);
        s.w1 += hot[i] * (e_low[i] - e_hot[i]);
        s.q_cold += e_low[i] * (cold[i] - hot[i]);
        s.w2 += cold[i] * (e_hot[i] - e_low[i]);
    }
    s.w_net = s.q_hot + s.q_cold;
    s.eta = s.w_net / s.q_hot;
    return s;
}

}  // namespace otto::acceptance::oracle
