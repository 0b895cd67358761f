#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "otto/errors.hpp"
#include "otto/linalg.hpp"
#include "otto/model.hpp"
#include "reference_values.hpp"

using namespace otto;
using namespace otto::model;

TEST_CASE("critical field") {
    CHECK(critical_field(10.0) == 5.0);
    CHECK(critical_field(0.0) == 0.0);
    CHECK(critical_field(1.0) == 0.5);
}

TEST_CASE("measure names") {
    CHECK(to_string(Measure::E1) == "e1");
    CHECK(parse_measure("E3") == Measure::E3);
    CHECK(parse_measure("e1") == Measure::E1);
    CHECK_THROWS_AS(parse_measure("e2"), InvalidParams);
}

TEST_CASE("parameter validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    auto bad = [](auto mutate) {
        ModelParams q;
        mutate(q);
        return q;
    };
    CHECK_THROWS_AS(bad([](ModelParams& q) { q.t_hot = 0.0; }).validate(), InvalidParams);
    CHECK_THROWS_AS(bad([](ModelParams& q) { q.omega = -1.0; }).validate(), InvalidParams);
    CHECK_THROWS_AS(bad([](ModelParams& q) { q.b_high = 0.0; }).validate(), InvalidParams);
    CHECK_THROWS_AS(bad([](ModelParams& q) { q.j2 = -1.0; }).validate(), InvalidParams);
    CHECK_THROWS_AS(bad([](ModelParams& q) { q.k = NAN; }).validate(), InvalidParams);
    const auto inverted = bad([](ModelParams& q) { q.b_low = 12.0; });
    CHECK_NOTHROW(inverted.validate());
    CHECK(inverted.fields_inverted());
}

TEST_CASE("single-site operators") {
    using linalg::Matrix;
    CHECK(ops::sigma_plus()(0, 1) == 1.0);
    CHECK(ops::sigma_minus()(1, 0) == 1.0);
    CHECK(ops::phonon_a()(0, 1) == 1.0);
    CHECK(ops::phonon_adag()(1, 0) == 1.0);
    CHECK(ops::sigma_z()(0, 0) == 1.0);
    CHECK(ops::sigma_z()(1, 1) == -1.0);
    const auto sx = ops::sigma_plus() + ops::sigma_minus();
    CHECK((sx - ops::sigma_x()).frobenius_norm() == 0.0);
}

TEST_CASE("basis index") {
    CHECK(basis_index(0, 0, 0, 0) == 0);
    CHECK(basis_index(1, 0, 0, 0) == 8);
    CHECK(basis_index(1, 1, 1, 1) == 15);
}

TEST_CASE("system Hamiltonian spectrum") {
    const auto d = linalg::eig_sym(build_system_hamiltonian(10.0, 10.0));
    const std::vector<double> expect{-20, -10, 10, 20};
    for (std::size_t i = 0; i < 4; ++i) CHECK(d.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-13));

    const auto h0 = build_system_hamiltonian(3.0, 0.0);
    CHECK(h0(0, 0) == 6.0);
    CHECK(h0(1, 1) == 0.0);
    CHECK(h0(2, 2) == 0.0);
    CHECK(h0(3, 3) == -6.0);
    CHECK(h0.matrix().asymmetry() == 0.0);

    const auto pure = linalg::eig_sym(build_system_hamiltonian(0.0, 1.0));
    const std::vector<double> pure_expect{-1, 0, 0, 1};
    for (std::size_t i = 0; i < 4; ++i) CHECK(pure.eigenvalues[i] == doctest::Approx(pure_expect[i]).epsilon(1e-13));
}

TEST_CASE("labelled eigensystem is an exact eigenbasis") {
    for (double b : {0.0, 2.0, 5.0, 10.0}) {
        for (double j1 : {0.0, 1.0, 10.0}) {
            const auto es = system_eigensystem(b, j1);
            const auto h = build_system_hamiltonian(b, j1);
            for (std::size_t i = 0; i < 4; ++i) {
                for (std::size_t j = 0; j < 4; ++j) {
                    const double hij = linalg::bilinear(h, es.states[i], es.states[j]);
                    CHECK(hij == doctest::Approx(i == j ? es.energies[i] : 0.0).epsilon(1e-14).scale(1.0));
                    const double ov = linalg::bilinear(linalg::SymMatrix::identity(4), es.states[i], es.states[j]);
                    CHECK(ov == doctest::Approx(i == j ? 1.0 : 0.0).scale(1.0));
                }
            }
        }
    }
    const auto es = system_eigensystem(10.0, 10.0);
    CHECK(es.energies == std::array<double, 4>{-20, 20, -10, 10});
    const auto crit = system_eigensystem(5.0, 10.0);
    CHECK(crit.energies[0] == crit.energies[2]);
}

TEST_CASE("ground state switches at the critical field") {
    const double j1 = 10.0;
    for (double b : {0.5, 2.0, 4.9}) {
        const auto es = system_eigensystem(b, j1);
        CHECK(es.energies[2] < es.energies[0]);  // E3 lowest
    }
    for (double b : {5.1, 8.0, 20.0}) {
        const auto es = system_eigensystem(b, j1);
        CHECK(es.energies[0] < es.energies[2]);  // E1 lowest
    }
}

TEST_CASE("system Hamiltonian spectrum over a grid") {
    for (double b : {0.0, 0.3, 1.0, 4.0, 7.5}) {
        for (double j1 : {0.0, 0.5, 2.0, 9.0}) {
            auto expect = std::vector<double>{-2 * b, 2 * b, -j1, j1};
            std::sort(expect.begin(), expect.end());
            const auto d = linalg::eig_sym(build_system_hamiltonian(b, j1));
            for (std::size_t i = 0; i < 4; ++i) CHECK(d.eigenvalues[i] == doctest::Approx(expect[i]).scale(1.0));
        }
    }
}

TEST_CASE("full Hamiltonian: decoupled limit is the phonon energy") {
    ModelParams p;
    p.j1 = p.j2 = p.k = 0.0;
    p.omega = 1.0;
    const auto h = build_full_hamiltonian(0.0, p);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) CHECK(h(i, j) == (i == j ? static_cast<double>(i % 2) : 0.0));
}

TEST_CASE("full Hamiltonian: tensor-sum spectrum at k = 0, j2 = 0") {
    ModelParams p;
    p.j2 = 0.0;
    p.k = 0.0;
    p.j1 = 3.0;
    p.omega = 1.7;
    const double b = 2.5;
    std::vector<double> expect;
    for (double e : {-2 * b, 2 * b, -p.j1, p.j1})
        for (double s : {b, -b})
            for (double n : {0.0, 1.0}) expect.push_back(e + s + n * p.omega);
    std::sort(expect.begin(), expect.end());
    const auto d = linalg::eig_sym(build_full_hamiltonian(b, p));
    for (std::size_t i = 0; i < 16; ++i) CHECK(d.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-13));
}

TEST_CASE("full Hamiltonian: trace equals 8 omega") {
    ModelParams p;
    for (double omega : {0.5, 1.0, 3.0}) {
        p.omega = omega;
        CHECK(build_full_hamiltonian(7.0, p).trace() == doctest::Approx(8.0 * omega));
    }
}

TEST_CASE("full Hamiltonian: spectrum matches the independent reference") {
    const auto d = linalg::eig_sym(build_full_hamiltonian(10.0, ModelParams{}));
    for (std::size_t i = 0; i < 16; ++i)
        CHECK(d.eigenvalues[i] == doctest::Approx(reference::kFig2Spectrum[i]).epsilon(1e-12));
}

TEST_CASE("full Hamiltonian: coupling entries") {
    ModelParams p;
    p.j1 = 2.0;
    p.j2 = 3.0;
    p.k = 0.25;
    const auto h = build_full_hamiltonian(1.0, p);
    // ion1-ion2 flip-flop |+-> <-> |-+>
    CHECK(h(basis_index(0, 1, 0, 0), basis_index(1, 0, 0, 0)) == 2.0);
    // ion2-ion3 flip-flop
    CHECK(h(basis_index(0, 0, 1, 0), basis_index(0, 1, 0, 0)) == 3.0);
    // a^dag sigma_- on ion 1: |+,..,0> -> |-,..,1>
    CHECK(h(basis_index(1, 0, 0, 1), basis_index(0, 0, 0, 0)) == 0.25);
    // no counter-rotating term
    CHECK(h(basis_index(1, 0, 0, 0), basis_index(0, 0, 0, 1)) == 0.0);
    CHECK(h.matrix().asymmetry() == 0.0);
}

TEST_CASE("full Hamiltonian rejects invalid parameters") {
    ModelParams p;
    p.omega = 0.0;
    CHECK_THROWS_AS(build_full_hamiltonian(1.0, p), InvalidParams);
}
