#include <doctest.h>

#include <cmath>

#include "otto/analytic.hpp"
#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/optimize.hpp"

using namespace otto;
using namespace otto::optimize;

TEST_CASE("default interval") {
    const auto s = default_interval(6.0, 10.0, 3.5);
    CHECK(s.lo == doctest::Approx(6.0 + 1e-6));
    CHECK(s.hi == doctest::Approx(100.0));
    const auto below = default_interval(2.0, 10.0, 3.5);
    CHECK(below.lo == doctest::Approx(5.0 + 1e-6));
}

TEST_CASE("work_at follows the work model") {
    model::ModelParams p;
    p.j2 = 0.0;
    p.k = 0.0;
    CHECK(work_at(p, 12.0, WorkModel::Analytic) == doctest::Approx(analytic::analytic_work(p.j1, 12.0, p.b_low, p.t_hot)));
    model::ModelParams q = p;
    q.b_high = 12.0;
    CHECK(work_at(p, 12.0, WorkModel::Numeric) == doctest::Approx(cycle::run_otto(q).w_net));
}

TEST_CASE("golden-section optimum agrees with a dense grid") {
    model::ModelParams p;
    p.j1 = 1.0;
    p.b_low = 3.0;
    for (auto mode : {WorkModel::Analytic, WorkModel::Numeric}) {
        const auto s = default_interval(p.b_low, p.j1, p.t_hot);
        const auto r = maximize_work_over_bh(p, s, mode);
        double best_x = s.lo, best_w = -INFINITY;
        const int n = 10000;
        for (int i = 0; i <= n; ++i) {
            const double x = s.lo + (s.hi - s.lo) * i / n;
            const double w = work_at(p, x, mode);
            if (w > best_w) best_w = w, best_x = x;
        }
        CHECK(r.w_max >= best_w - 1e-12);
        CHECK(std::abs(r.b_high_star - best_x) <= 2.0 * (s.hi - s.lo) / n);
        CHECK_FALSE(r.boundary);
        CHECK(r.ratio == doctest::Approx(p.b_low / r.b_high_star));
        p.b_high = r.b_high_star;
        CHECK(r.eta_at_wmax > 0.0);
    }
}

TEST_CASE("analytic optimum at j1 -> 0 obeys the single-ion efficiency exactly") {
    model::ModelParams p;
    p.j1 = 0.0;
    p.b_low = 2.0;
    const auto r = maximize_work_over_bh(p, default_interval(p.b_low, p.j1, p.t_hot), WorkModel::Analytic);
    CHECK_FALSE(r.boundary);
    CHECK(r.b_high_star > p.b_low);
    CHECK(r.eta_at_wmax == doctest::Approx(1.0 - r.ratio).epsilon(1e-12));
}

TEST_CASE("monotone work on a short interval sets the boundary flag") {
    model::ModelParams p;
    p.b_low = 6.0;
    const SearchInterval s{p.b_low + 1e-6, p.b_low + 1e-3};
    const auto r = maximize_work_over_bh(p, s, WorkModel::Numeric);
    CHECK(r.boundary);
    CHECK(r.b_high_star == doctest::Approx(s.hi));
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(r.eta_at_wmax) < 2e-3);
}

TEST_CASE("optimizer errors") {
    model::ModelParams p;
    p.b_low = 6.0;
    CHECK_THROWS_AS(maximize_work_over_bh(p, {8.0, 7.0}), EmptyInterval);
    CHECK_THROWS_AS(maximize_work_over_bh(p, {5.0, 7.0}), EmptyInterval);
    p.b_low = 2.0;  // below j1/2 = 5
    CHECK_THROWS_AS(maximize_work_over_bh(p, {4.0, 7.0}), EmptyInterval);
    // E3 at b_low below the critical field: never an engine
    p.measure = model::Measure::E3;
    CHECK_THROWS_AS(maximize_work_over_bh(p, {5.0 + 1e-6, 6.0}), NoPositiveWork);
}

TEST_CASE("eta_wmax curve rows") {
    model::ModelParams base;
    base.j1 = 1.0;
    const std::vector<double> grid{1.0, 4.0, 8.0};
    const auto rows = eta_wmax_curve(base, grid, WorkModel::Numeric);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rows[i].result.b_low == grid[i]);
        CHECK(rows[i].one_minus_ratio == doctest::Approx(1.0 - rows[i].result.ratio));
        CHECK(rows[i].one_minus_sqrt_ratio == doctest::Approx(1.0 - std::sqrt(rows[i].result.ratio)));
        CHECK(std::abs(rows[i].result.eta_at_wmax - rows[i].one_minus_ratio) < 0.05);
    }
}

TEST_CASE("eta_wmax curve with an explicit search interval") {
    model::ModelParams base;
    const std::vector<double> grid{6.0, 8.0};
    // lo below both b_low values gets raised per point
    const auto rows = eta_wmax_curve(base, grid, WorkModel::Numeric, SearchInterval{0.0, 60.0});
    for (const auto& r : rows) CHECK(r.result.b_high_star > r.result.b_low);
}
