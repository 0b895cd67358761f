#include "otto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "otto/model.hpp"

namespace otto::thermo {

DensityMatrix::DensityMatrix(linalg::SymMatrix m) : m_(std::move(m)) {
    const double tr = m_.trace();
    if (!(std::abs(tr - 1.0) <= kTraceTol)) {
        throw NotADensityMatrix("density matrix trace is " + std::to_string(tr));
    }
    const auto spectrum = linalg::eig_sym(m_);
    if (spectrum.eigenvalues.front() < -kPsdTol) {
        throw NotADensityMatrix("density matrix has eigenvalue " + std::to_string(spectrum.eigenvalues.front()));
    }
}

DensityMatrix gibbs_state(const linalg::SymMatrix& h, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw InvalidTemperature("temperature must be positive and finite, got " + std::to_string(t));
    }
    const auto spectrum = linalg::eig_sym(h);
    const double ground = spectrum.eigenvalues.front();
    std::vector<double> weights(spectrum.dim());
    double z = 0.0;
    for (std::size_t n = 0; n < weights.size(); ++n) {
        weights[n] = std::exp(-(spectrum.eigenvalues[n] - ground) / t);
        z += weights[n];
    }
    for (double& w : weights) w /= z;
    return DensityMatrix(linalg::reconstruct(spectrum, weights));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw DimensionMismatch("partial_trace: zero factor dimension");
        total *= d;
    }
    if (total != rho.dim()) {
        throw DimensionMismatch("partial_trace: factor dimensions multiply to " + std::to_string(total) +
                                ", state has dimension " + std::to_string(rho.dim()));
    }
    if (keep.empty()) throw DimensionMismatch("partial_trace: nothing to keep");

    std::vector<bool> kept(dims.size(), false);
    for (std::size_t f : keep) {
        if (f >= dims.size()) throw DimensionMismatch("partial_trace: factor index out of range");
        if (kept[f]) throw DimensionMismatch("partial_trace: factor listed twice");
        kept[f] = true;
    }

    // Split every full index into (kept index, traced index).
    std::vector<std::size_t> kept_index(total), traced_index(total);
    std::size_t kept_dim = 1;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (kept[f]) kept_dim *= dims[f];
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rem = i, stride = total;
        std::size_t ki = 0, ti = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
            stride /= dims[f];
            const std::size_t digit = rem / stride;
            rem %= stride;
            if (kept[f]) {
                ki = ki * dims[f] + digit;
            } else {
                ti = ti * dims[f] + digit;
            }
        }
        kept_index[i] = ki;
        traced_index[i] = ti;
    }

    linalg::Matrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j)
            if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
    return DensityMatrix(linalg::SymMatrix(std::move(out)));
}

Populations populations(const DensityMatrix& rho_s, double b, double j1) {
    if (rho_s.dim() != model::kSystemDim) {
        throw DimensionMismatch("populations: expected a 4x4 two-ion state");
    }
    const auto eig = model::system_eigensystem(b, j1);
    Populations out;
    for (std::size_t i = 0; i < 4; ++i) out.p[i] = linalg::bilinear(rho_s.matrix(), eig.states[i], eig.states[i]);
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto spectrum = linalg::eig_sym(rho.matrix());
    double s = 0.0, total = 0.0;
    for (double lambda : spectrum.eigenvalues) {
        if (lambda < -kPsdTol) throw NotADensityMatrix("negative eigenvalue in entropy");
        total += lambda;
        const double l = std::clamp(lambda, 0.0, 1.0);
        if (l < kEntropyFloor) continue;
        s -= l * std::log(l);
    }
    if (std::abs(total - 1.0) > kTraceTol) throw NotADensityMatrix("eigenvalues do not sum to 1");
    return s;
}

double single_ion_entropy(const DensityMatrix& rho_s, std::size_t ion) {
    if (ion > 1) throw DimensionMismatch("single_ion_entropy: ion must be 0 or 1");
    const std::array<std::size_t, 1> keep{ion};
    return von_neumann_entropy(partial_trace(rho_s, model::kSystemFactors, keep));
}

}  // namespace otto::thermo
