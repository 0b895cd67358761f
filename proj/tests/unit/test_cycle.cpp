#include <doctest.h>

#include <cmath>

#include "otto/cycle.hpp"
#include "otto/errors.hpp"

using namespace otto;
using namespace otto::cycle;
using model::Measure;
using model::ModelParams;

namespace {

void check_bookkeeping(const CycleResult& r) {
    CHECK(std::abs(r.q_hot + r.q_cold + r.w1 + r.w2) <= 1e-9 * std::max(1.0, std::abs(r.q_hot)));
}

}  // namespace

TEST_CASE("regime classification") {
    CHECK(classify_regime(1.0, -0.5, 0.5) == Regime::Engine);
    CHECK(classify_regime(-1.0, 0.5, -0.5) == Regime::Refrigerator);
    CHECK(classify_regime(-1.0, -0.5, -1.5) == Regime::Unphysical);
    CHECK(classify_regime(1.0, -1.0, 0.0) == Regime::Unphysical);
    CHECK(classify_regime(0.0, 0.0, 0.0) == Regime::Unphysical);
    CHECK(to_string(Regime::Engine) == "engine");
    CHECK(to_string(Regime::Refrigerator) == "refrigerator");
    CHECK(to_string(Regime::Unphysical) == "unphysical");
}

TEST_CASE("measurement populations") {
    CHECK(measurement_populations(Measure::E1).p == std::array<double, 4>{1, 0, 0, 0});
    CHECK(measurement_populations(Measure::E3).p == std::array<double, 4>{0, 0, 1, 0});
}

TEST_CASE("reference point is an engine") {
    const auto r = run_otto(ModelParams{});
    CHECK(r.regime == Regime::Engine);
    CHECK(r.q_hot > 0.0);
    CHECK(r.q_cold < 0.0);
    CHECK(r.w_net > 0.0);
    REQUIRE(r.eta.has_value());
    CHECK(*r.eta == doctest::Approx(r.w_net / r.q_hot));
    CHECK(*r.eta > 0.0);
    CHECK(*r.eta < 1.0);
    CHECK(r.w_net == doctest::Approx(r.q_hot + r.q_cold));
    CHECK(r.pops_hot.sum() == doctest::Approx(1.0));
    CHECK(r.entropy_heating > 0.0);
    CHECK_FALSE(r.fields_inverted);
    check_bookkeeping(r);
}

TEST_CASE("reference point q_hot matches the reduced-state populations") {
    // With E1 measured, q_hot = sum E_i^H p_i + 2 b_high, using the reference
    // reduced state diagonal in the E basis.
    const ModelParams p;
    const auto r = run_otto(p);
    const std::array<double, 4> e{-2 * p.b_high, 2 * p.b_high, -p.j1, p.j1};
    double expect = 2.0 * p.b_high;
    for (std::size_t i = 0; i < 4; ++i) expect += e[i] * r.pops_hot[i];
    CHECK(r.q_hot == doctest::Approx(expect).epsilon(1e-13));
    CHECK(r.q_hot == doctest::Approx(1.28653072848).epsilon(1e-10));
    CHECK(r.w2 == doctest::Approx(-8.0));
}

TEST_CASE("equal fields give zero work") {
    ModelParams p;
    p.b_low = p.b_high;
    const auto r = run_otto(p);
    CHECK(r.w1 == 0.0);
    CHECK(r.w2 == 0.0);
    CHECK(r.w_net == doctest::Approx(0.0).scale(1.0));
    REQUIRE(r.eta.has_value());
    CHECK(*r.eta == doctest::Approx(0.0).scale(1.0));
    CHECK(r.regime == Regime::Unphysical);
}

TEST_CASE("single-ion limit") {
    ModelParams p;
    p.j1 = 1e-9;
    p.j2 = 0.0;
    p.k = 1e-6;
    const auto r = run_otto(p);
    REQUIRE(r.eta.has_value());
    CHECK(*r.eta == doctest::Approx(0.4).epsilon(1e-4));
}

TEST_CASE("E3 measurement below the critical field: every term negative") {
    for (double b_low : {1.0, 2.0, 3.0, 4.0}) {
        ModelParams p;
        p.b_low = b_low;
        p.measure = Measure::E3;
        const auto r = run_otto(p);
        CHECK(r.q_hot < 0.0);
        CHECK(r.q_cold < 0.0);
        CHECK(r.w_net < 0.0);
        CHECK(r.regime == Regime::Unphysical);
        check_bookkeeping(r);
    }
}

TEST_CASE("regime flip around the critical field with E1 measured") {
    for (double b_low : {5.0, 5.5, 7.0, 9.5}) {
        ModelParams p;
        p.b_low = b_low;
        CHECK(run_otto(p).regime == Regime::Engine);
    }
    for (double b_low : {1.0, 2.5, 4.0}) {
        ModelParams p;
        p.b_low = b_low;
        const auto r = run_otto(p);
        CHECK(r.regime != Regime::Engine);
        CHECK(r.q_cold > 0.0);
    }
}

TEST_CASE("efficiency decreases with b_low above the critical field") {
    double prev = INFINITY;
    for (double b_low = 5.05; b_low < 10.0; b_low += 0.25) {
        ModelParams p;
        p.b_low = b_low;
        const double eta = *run_otto(p).eta;
        CHECK(eta < prev);
        prev = eta;
    }
}

TEST_CASE("efficiency is insensitive to the phonon coupling") {
    std::vector<double> etas;
    for (double k : {0.05, 0.1, 0.2}) {
        ModelParams p;
        p.k = k;
        etas.push_back(*run_otto(p).eta);
    }
    const auto [lo, hi] = std::minmax_element(etas.begin(), etas.end());
    CHECK((*hi - *lo) / etas[1] < 0.01);
}

TEST_CASE("inverted fields are flagged, not rejected") {
    ModelParams p;
    p.b_low = 12.0;
    const auto r = run_otto(p);
    CHECK(r.fields_inverted);
    check_bookkeeping(r);
}

TEST_CASE("heating populations do not depend on the measured state") {
    ModelParams a, b;
    b.measure = Measure::E3;
    const auto ra = run_otto(a), rb = run_otto(b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(ra.pops_hot[i] == rb.pops_hot[i]);
    CHECK(ra.q_hot != rb.q_hot);
}

TEST_CASE("invalid parameters propagate") {
    ModelParams p;
    p.t_hot = -1.0;
    CHECK_THROWS_AS(run_otto(p), InvalidParams);
}
