#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "otto/model.hpp"

// Efficiency at maximum work: for fixed b_low (and everything else), find the
// heating field b_high that maximizes the net work and report eta there.
namespace otto::optimize {

enum class WorkModel {
    Numeric,   // run_otto on the full model
    Analytic,  // closed-form work and efficiency (weak-coupling limit)
};

struct SearchInterval {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr std::size_t kCoarseGridPoints = 129;
inline constexpr double kRelativeWidthTol = 1e-6;

struct WmaxResult {
    double b_low = 0.0;
    double b_high_star = 0.0;
    double w_max = 0.0;
    double eta_at_wmax = 0.0;
    double ratio = 0.0;     // b_low / b_high_star
    bool boundary = false;  // maximum sits on a search-interval endpoint
};

// lo = max(b_low, j1/2) + 1e-6, hi = 10 max(b_low, j1, t_hot).
SearchInterval default_interval(double b_low, double j1, double t_hot);

// Net work as a function of b_high with everything else taken from p.
double work_at(const model::ModelParams& p, double b_high, WorkModel mode);

// p.b_high is ignored. Coarse scan of kCoarseGridPoints points, then
// golden-section refinement of the bracket around the best one until it is
// narrower than kRelativeWidthTol * (hi - lo).
// Throws EmptyInterval (hi <= lo or lo below max(b_low, j1/2)) and
// NoPositiveWork (no b_high in range gives W > 0).
WmaxResult maximize_work_over_bh(const model::ModelParams& p, SearchInterval search,
                                 WorkModel mode = WorkModel::Numeric);

struct WmaxRow {
    WmaxResult result;
    double one_minus_ratio = 0.0;
    double one_minus_sqrt_ratio = 0.0;
};

// One maximization per b_low in the grid (default interval per point unless
// `search` is given; its lo is raised to the per-point minimum).
std::vector<WmaxRow> eta_wmax_curve(const model::ModelParams& base, std::span<const double> b_low_grid,
                                    WorkModel mode = WorkModel::Numeric,
                                    std::optional<SearchInterval> search = std::nullopt);

}  // namespace otto::optimize
