#include "otto/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "otto/errors.hpp"
#include "otto/model.hpp"

namespace otto::analytic {

F1F2 analytic_f1_f2(double j1, double b_high, double t_hot) {
    if (!(t_hot > 0.0) || !(b_high > 0.0) || !(j1 >= 0.0) || !std::isfinite(t_hot) || !std::isfinite(b_high) ||
        !std::isfinite(j1)) {
        throw InvalidParams("analytic_f1_f2 needs t_hot > 0, b_high > 0, j1 >= 0");
    }
    const double x = 2.0 * b_high / t_hot;
    const double y = j1 / t_hot;
    // Everything is scaled by exp(-m) so no exponent exceeds zero.
    const double m = std::max(x, y);
    const double ex_p = std::exp(x - m), ex_m = std::exp(-x - m);
    const double ey_p = std::exp(y - m), ey_m = std::exp(-y - m);
    const double z_scaled = 0.5 * (ex_p + ex_m + ey_p + ey_m);
    const double cosh_y_scaled = 0.5 * (ey_p + ey_m);
    const double sinh_y_scaled = 0.5 * (ey_p - ey_m);
    const double ratio = j1 / (2.0 * b_high);

    F1F2 out;
    // 1 - sinh(x)/z == (exp(-x) + cosh(y)) / z
    out.f1 = (ex_m + cosh_y_scaled) / z_scaled;
    out.f2 = ratio * sinh_y_scaled / z_scaled;
    out.f1_minus_f2 = (ex_m + cosh_y_scaled - ratio * sinh_y_scaled) / z_scaled;
    out.z = m > 700.0 ? std::numeric_limits<double>::infinity() : std::cosh(x) + std::cosh(y);
    return out;
}

namespace {

void require_engine_domain(double j1, double b_high, double b_low) {
    if (!(b_high >= b_low) || !(b_low >= model::critical_field(j1))) {
        throw OutOfEngineDomain("closed forms need b_high >= b_low >= j1/2 (b_high=" + std::to_string(b_high) +
                                ", b_low=" + std::to_string(b_low) + ", j1=" + std::to_string(j1) + ")");
    }
}

}  // namespace

double analytic_eta(double j1, double b_high, double b_low, double t_hot) {
    require_engine_domain(j1, b_high, b_low);
    const auto f = analytic_f1_f2(j1, b_high, t_hot);
    if (std::abs(f.f1_minus_f2) <= 1e-15 * std::abs(f.f1)) {
        throw DivisionByZero("analytic_eta: f1 == f2");
    }
    return (1.0 - b_low / b_high) * f.f1 / f.f1_minus_f2;
}

double analytic_work(double j1, double b_high, double b_low, double t_hot) {
    require_engine_domain(j1, b_high, b_low);
    const auto f = analytic_f1_f2(j1, b_high, t_hot);
    return kWorkPrefactor * (b_high - b_low) * f.f1;
}

AnalyticPoint analytic_point(double j1, double b_high, double b_low, double t_hot) {
    const auto f = analytic_f1_f2(j1, b_high, t_hot);
    return AnalyticPoint{f.z, f.f1, f.f2, analytic_work(j1, b_high, b_low, t_hot),
                         analytic_eta(j1, b_high, b_low, t_hot)};
}

}  // namespace otto::analytic
