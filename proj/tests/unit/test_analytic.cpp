#include <doctest.h>

#include <cmath>

#include "otto/acceptance.hpp"
#include "otto/analytic.hpp"
#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "reference_values.hpp"

using namespace otto;
using namespace otto::analytic;

TEST_CASE("f1, f2, z at the reference point") {
    const auto f = analytic_f1_f2(10.0, 10.0, 3.5);
    CHECK(f.z == doctest::Approx(reference::kAnalyticZ).epsilon(1e-14));
    CHECK(f.f1 == doctest::Approx(reference::kAnalyticF1).epsilon(1e-13));
    CHECK(f.f2 == doctest::Approx(reference::kAnalyticF2).epsilon(1e-13));
    CHECK(f.f1_minus_f2 == doctest::Approx(reference::kAnalyticF1 - reference::kAnalyticF2).epsilon(1e-13));
}

TEST_CASE("f1 stays positive and finite for large fields") {
    for (double bh : {50.0, 500.0}) {
        const auto f = analytic_f1_f2(10.0, bh, 3.5);
        CHECK(f.f1 > 0.0);
        CHECK(std::isfinite(f.f1));
        CHECK(f.f1 < 1e-10);
    }
    CHECK(std::isinf(analytic_f1_f2(10.0, 5000.0, 3.5).z));
}

TEST_CASE("f1_f2 argument errors") {
    CHECK_THROWS_AS(analytic_f1_f2(1.0, 1.0, 0.0), InvalidParams);
    CHECK_THROWS_AS(analytic_f1_f2(1.0, 0.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(analytic_f1_f2(-1.0, 1.0, 1.0), InvalidParams);
}

TEST_CASE("j1 -> 0 recovers the single-ion efficiency") {
    for (double bl : {1.0, 4.0, 8.0})
        CHECK(analytic_eta(0.0, 10.0, bl, 3.5) == doctest::Approx(1.0 - bl / 10.0).epsilon(1e-14));
    CHECK(analytic_eta(1e-9, 10.0, 6.0, 3.5) == doctest::Approx(0.4).epsilon(1e-8));
}

TEST_CASE("closed-form eta matches its definition") {
    const auto f = analytic_f1_f2(4.0, 9.0, 2.0);
    CHECK(analytic_eta(4.0, 9.0, 3.0, 2.0) == doctest::Approx((1.0 - 3.0 / 9.0) * f.f1 / (f.f1 - f.f2)));
}

TEST_CASE("work is zero for equal fields and linear in the field gap") {
    CHECK(analytic_work(10.0, 8.0, 8.0, 3.5) == 0.0);
    CHECK(analytic_eta(10.0, 8.0, 8.0, 3.5) == 0.0);
    const double w1 = analytic_work(10.0, 10.0, 6.0, 3.5);
    const double w2 = analytic_work(10.0, 10.0, 8.0, 3.5);
    CHECK(w1 == doctest::Approx(2.0 * w2));
    CHECK(w1 == doctest::Approx(kWorkPrefactor * 4.0 * reference::kAnalyticF1).epsilon(1e-13));
}

TEST_CASE("eta is linear in W at fixed b_high") {
    // eta = W / (c b_high (f1 - f2)) with b_high fixed
    const auto f = analytic_f1_f2(10.0, 10.0, 3.5);
    for (double bl : {5.0, 6.5, 9.0}) {
        const double w = analytic_work(10.0, 10.0, bl, 3.5);
        CHECK(analytic_eta(10.0, 10.0, bl, 3.5) ==
              doctest::Approx(w / (kWorkPrefactor * 10.0 * f.f1_minus_f2)).epsilon(1e-13));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(analytic_eta(10.0, 10.0, 4.0, 3.5), OutOfEngineDomain);
    CHECK_THROWS_AS(analytic_work(10.0, 10.0, 4.0, 3.5), OutOfEngineDomain);
    CHECK_THROWS_AS(analytic_eta(1.0, 5.0, 6.0, 3.5), OutOfEngineDomain);
    CHECK_NOTHROW(analytic_eta(10.0, 10.0, 5.0, 3.5));
}

TEST_CASE("analytic_point bundles the pieces") {
    const auto pt = analytic_point(10.0, 10.0, 6.0, 3.5);
    CHECK(pt.f1 == doctest::Approx(reference::kAnalyticF1));
    CHECK(pt.w == analytic_work(10.0, 10.0, 6.0, 3.5));
    CHECK(pt.eta == analytic_eta(10.0, 10.0, 6.0, 3.5));
}

TEST_CASE("closed form agrees with the full model in the weak-coupling limit") {
    model::ModelParams p;
    p.j2 = 0.0;
    p.k = 1e-6;
    const auto r = cycle::run_otto(p);
    CHECK(r.w_net == doctest::Approx(analytic_work(p.j1, p.b_high, p.b_low, p.t_hot)).epsilon(1e-3));
    CHECK(*r.eta == doctest::Approx(analytic_eta(p.j1, p.b_high, p.b_low, p.t_hot)).epsilon(1e-3));
}

TEST_CASE("scalar oracle fixes the work prefactor") {
    for (double j1 : {0.0, 2.0, 7.0}) {
        const double bl = j1 / 2 + 1.0, bh = bl + 2.0, t = bh;
        const auto ref = acceptance::oracle::decoupled_engine(bh, bl, j1, t);
        CHECK(analytic_work(j1, bh, bl, t) == doctest::Approx(ref.w_net).epsilon(1e-12));
        CHECK(analytic_eta(j1, bh, bl, t) == doctest::Approx(ref.eta).epsilon(1e-12));
    }
}
