#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "otto/cycle.hpp"
#include "otto/model.hpp"
#include "otto/optimize.hpp"

namespace otto::sweep {

enum class Axis { BLow, BHigh, J1, J2, K, THot };

std::string_view to_string(Axis a);
Axis parse_axis(std::string_view s);  // b_low, b_high, j1, j2, k, t_hot; throws InvalidSweep

struct SweepSpec {
    model::ModelParams base;
    Axis axis = Axis::BLow;
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 2;
    bool critical_rule = false;  // b_low := j1/2 after the axis value is applied

    void validate() const;  // steps >= 2, start != stop; throws InvalidSweep
    std::vector<double> axis_values() const;  // inclusive linspace
    model::ModelParams point(double axis_value) const;
};

struct SweepRow {
    Axis axis = Axis::BLow;
    double axis_value = 0.0;
    model::ModelParams params;
    std::optional<cycle::CycleResult> result;  // empty when `error` is set
    // Closed-form comparison, present for E1 rows with j2 == 0 inside the
    // closed-form domain b_high >= b_low >= j1/2.
    std::optional<double> eta_analytic;
    std::optional<double> w_analytic;
    std::string error;
};

enum class Execution { Sequential, Parallel };

// Rows come back in axis order whatever the execution mode. Errors from a
// single point are recorded on that row; the sweep always completes.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec = Execution::Sequential,
                                unsigned threads = 0);

// Figure presets. Sweep figures return a SweepSpec; the efficiency-at-
// maximum-work figures return an OptimizerJob.
struct OptimizerJob {
    model::ModelParams base;
    std::vector<double> b_low_grid;
    optimize::WorkModel mode = optimize::WorkModel::Numeric;
};

using FigureJob = std::variant<SweepSpec, OptimizerJob>;

std::span<const std::string_view> figure_ids();
FigureJob figure_preset(std::string_view id);  // throws UnknownFigure

// Parameters shared by every preset: b_high=10, b_low=6, j1=j2=10, k=0.1,
// omega=1, t_hot=3.5, measurement in |E1>.
model::ModelParams reference_params();

inline constexpr std::string_view kCsvHeader =
    "axis,b_low,b_high,j1,j2,k,omega,t_hot,measure,q_hot,w1,q_cold,w2,w_net,eta,s_vn,regime,error";
inline constexpr std::string_view kWmaxCsvHeader =
    "b_low,b_high_star,w_max,eta_wmax,ratio,one_minus_ratio,one_minus_sqrt_ratio";

// 12 significant digits.
std::string format_real(double x);

std::string to_csv(std::span<const SweepRow> rows);
std::string to_json(std::span<const SweepRow> rows);
std::string to_csv(std::span<const optimize::WmaxRow> rows);
std::string to_json(std::span<const optimize::WmaxRow> rows);

}  // namespace otto::sweep
