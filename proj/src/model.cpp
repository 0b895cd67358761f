#include "otto/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace otto::model {

std::string_view to_string(Measure m) { return m == Measure::E1 ? "e1" : "e3"; }

Measure parse_measure(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "e1") return Measure::E1;
    if (lower == "e3") return Measure::E3;
    throw InvalidParams("measure must be e1 or e3, got '" + std::string(s) + "'");
}

void ModelParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw InvalidParams(what);
    };
    require(std::isfinite(b_high) && std::isfinite(b_low) && std::isfinite(j1) && std::isfinite(j2) &&
                std::isfinite(k) && std::isfinite(omega) && std::isfinite(t_hot),
            "parameters must be finite");
    require(b_high > 0.0, "b_high must be > 0");
    require(t_hot > 0.0, "t_hot must be > 0");
    require(omega > 0.0, "omega must be > 0");
    require(j1 >= 0.0, "j1 must be >= 0 (antiferromagnetic coupling only)");
    require(j2 >= 0.0, "j2 must be >= 0 (antiferromagnetic coupling only)");
    require(k >= 0.0, "k must be >= 0");
}

namespace ops {
using linalg::Matrix;
Matrix sigma_z() { return Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
Matrix sigma_x() { return Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
Matrix sigma_plus() { return Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}); }
Matrix sigma_minus() { return Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}); }
Matrix phonon_a() { return Matrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}); }
Matrix phonon_adag() { return Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}); }
Matrix id2() { return Matrix::identity(2); }
}  // namespace ops

namespace {

using linalg::Matrix;

// Kronecker product of four single-site operators (ion1, ion2, ion3, phonon).
Matrix site4(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return kron(kron(kron(a, b), c), d);
}

// Operator acting as `op` on ion `ion` (0-based) and `ph` on the phonon.
Matrix on_ion(std::size_t ion, const Matrix& op, const Matrix& ph) {
    const Matrix id = ops::id2();
    return site4(ion == 0 ? op : id, ion == 1 ? op : id, ion == 2 ? op : id, ph);
}

}  // namespace

linalg::SymMatrix build_full_hamiltonian(double b, const ModelParams& p) {
    p.validate();
    if (!std::isfinite(b)) throw InvalidParams("field must be finite");
    using namespace ops;
    const Matrix id = id2();
    const Matrix sz = sigma_z(), sp = sigma_plus(), sm = sigma_minus();
    const Matrix a = phonon_a(), ad = phonon_adag();

    Matrix h(kFullDim, kFullDim);
    for (std::size_t ion = 0; ion < 3; ++ion) h += b * on_ion(ion, sz, id);

    h += p.j1 * (site4(sp, sm, id, id) + site4(sm, sp, id, id));
    h += p.j2 * (site4(id, sp, sm, id) + site4(id, sm, sp, id));
    h += p.omega * site4(id, id, id, ad * a);
    for (std::size_t ion = 0; ion < 3; ++ion) {
        h += p.k * (on_ion(ion, sm, ad) + on_ion(ion, sp, a));
    }
    return linalg::SymMatrix(std::move(h));
}

linalg::SymMatrix build_system_hamiltonian(double b, double j1) {
    using namespace ops;
    const Matrix id = id2();
    Matrix h = b * (kron(sigma_z(), id) + kron(id, sigma_z()));
    h += j1 * (kron(sigma_plus(), sigma_minus()) + kron(sigma_minus(), sigma_plus()));
    return linalg::SymMatrix(std::move(h));
}

SystemEigensystem system_eigensystem(double b, double j1) {
    const double s = 1.0 / std::sqrt(2.0);
    // (b1, b2) order: |++>, |+->, |-+>, |-->
    return SystemEigensystem{
        {-2.0 * b, 2.0 * b, -j1, j1},
        {{{0.0, 0.0, 0.0, 1.0},
          {1.0, 0.0, 0.0, 0.0},
          {0.0, -s, s, 0.0},
          {0.0, s, s, 0.0}}},
    };
}

}  // namespace otto::model
