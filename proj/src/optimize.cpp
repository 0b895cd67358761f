#include "otto/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "otto/analytic.hpp"
#include "otto/cycle.hpp"
#include "otto/errors.hpp"

namespace otto::optimize {

SearchInterval default_interval(double b_low, double j1, double t_hot) {
    return {std::max(b_low, model::critical_field(j1)) + 1e-6, 10.0 * std::max({b_low, j1, t_hot})};
}

double work_at(const model::ModelParams& p, double b_high, WorkModel mode) {
    if (mode == WorkModel::Analytic) return analytic::analytic_work(p.j1, b_high, p.b_low, p.t_hot);
    model::ModelParams q = p;
    q.b_high = b_high;
    return cycle::run_otto(q).w_net;
}

namespace {

double eta_at(const model::ModelParams& p, double b_high, WorkModel mode) {
    if (mode == WorkModel::Analytic) return analytic::analytic_eta(p.j1, b_high, p.b_low, p.t_hot);
    model::ModelParams q = p;
    q.b_high = b_high;
    return cycle::run_otto(q).eta.value_or(std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

WmaxResult maximize_work_over_bh(const model::ModelParams& p, SearchInterval search, WorkModel mode) {
    const double floor = std::max(p.b_low, model::critical_field(p.j1));
    if (!(search.hi > search.lo) || !(search.lo >= floor)) {
        throw EmptyInterval("b_high search interval [" + std::to_string(search.lo) + ", " +
                            std::to_string(search.hi) + "] is empty or starts below max(b_low, j1/2) = " +
                            std::to_string(floor));
    }
    const auto w = [&](double bh) { return work_at(p, bh, mode); };

    const std::size_t n = kCoarseGridPoints;
    const double step = (search.hi - search.lo) / static_cast<double>(n - 1);
    const auto grid_x = [&](std::size_t i) { return i + 1 == n ? search.hi : search.lo + step * static_cast<double>(i); };
    std::size_t best = 0;
    double best_w = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = w(grid_x(i));
        if (wi > best_w) {
            best_w = wi;
            best = i;
        }
    }
    if (!(best_w > 0.0)) throw NoPositiveWork("net work is not positive anywhere in the b_high interval");

    double a = grid_x(best == 0 ? 0 : best - 1);
    double b = grid_x(best + 1 >= n ? n - 1 : best + 1);

    constexpr double inv_phi = 0.6180339887498948482;
    const double width_tol = kRelativeWidthTol * (search.hi - search.lo);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double wc = w(c), wd = w(d);
    while (b - a > width_tol) {
        if (wc >= wd) {
            b = d;
            d = c;
            wd = wc;
            c = b - inv_phi * (b - a);
            wc = w(c);
        } else {
            a = c;
            c = d;
            wc = wd;
            d = a + inv_phi * (b - a);
            wd = w(d);
        }
    }
    double x_star = 0.5 * (a + b);
    double w_star = w(x_star);
    if (best_w > w_star) {
        x_star = grid_x(best);
        w_star = best_w;
    }

    WmaxResult r;
    r.b_low = p.b_low;
    r.b_high_star = x_star;
    r.w_max = w_star;
    r.eta_at_wmax = eta_at(p, x_star, mode);
    r.ratio = p.b_low / x_star;
    r.boundary = x_star - search.lo <= width_tol || search.hi - x_star <= width_tol;
    return r;
}

std::vector<WmaxRow> eta_wmax_curve(const model::ModelParams& base, std::span<const double> b_low_grid,
                                    WorkModel mode, std::optional<SearchInterval> search) {
    std::vector<WmaxRow> rows;
    rows.reserve(b_low_grid.size());
    for (double b_low : b_low_grid) {
        model::ModelParams p = base;
        p.b_low = b_low;
        SearchInterval interval = default_interval(b_low, p.j1, p.t_hot);
        if (search) interval = {std::max(search->lo, interval.lo), search->hi};
        WmaxRow row;
        row.result = maximize_work_over_bh(p, interval, mode);
        row.one_minus_ratio = 1.0 - row.result.ratio;
        row.one_minus_sqrt_ratio = 1.0 - std::sqrt(row.result.ratio);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace otto::optimize
