#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "otto/linalg.hpp"

namespace otto::thermo {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
// Eigenvalues below this contribute 0 to -sum(l ln l).
inline constexpr double kEntropyFloor = 1e-14;

// Real symmetric, unit trace, positive semidefinite (both within 1e-10).
class DensityMatrix {
public:
    // Throws NotADensityMatrix.
    explicit DensityMatrix(linalg::SymMatrix m);

    std::size_t dim() const noexcept { return m_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const linalg::SymMatrix& matrix() const noexcept { return m_; }

private:
    linalg::SymMatrix m_;
};

// Occupations of the labelled two-ion eigenstates E1..E4.
struct Populations {
    std::array<double, 4> p{};

    double operator[](std::size_t i) const { return p[i]; }
    double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

// exp(-h/t)/Z, with Boltzmann weights shifted by the lowest eigenvalue.
// Throws InvalidTemperature for t <= 0 (or non-finite t).
DensityMatrix gibbs_state(const linalg::SymMatrix& h, double t);

// Traces out every factor not listed in `keep`. `dims` lists the factor
// dimensions, most significant first; kept factors stay in that order.
// Throws DimensionMismatch.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

// p_i = <E_i|rho_s|E_i> in the fixed basis of model::system_eigensystem(b, j1).
// Coherences between the E_i are dropped.
Populations populations(const DensityMatrix& rho_s, double b, double j1);

// -Tr(rho ln rho), k_B = 1.
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of one ion (0 or 1) of a two-ion state.
double single_ion_entropy(const DensityMatrix& rho_s, std::size_t ion);

}  // namespace otto::thermo
