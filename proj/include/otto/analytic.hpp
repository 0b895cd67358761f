#pragma once

// Closed forms for the weak-coupling limit (k -> 0, j2 = 0, measurement in
// |E1>). With x = 2 b_high / t_hot and y = j1 / t_hot:
//
//   z   = cosh(x) + cosh(y)
//   f1  = 1 - sinh(x) / z
//   f2  = (j1 / (2 b_high)) sinh(y) / z
//   Q_H = c b_high (f1 - f2)
//   W   = c (b_high - b_low) f1
//   eta = (1 - b_low / b_high) f1 / (f1 - f2)
//
// Work prefactor. The closed form for W is often quoted with c = 1, but
// evaluating the four stroke sums directly with Boltzmann weights
// exp(-E_i/t) over (-2B, 2B, -J1, J1) gives
//   Q_H + Q_L = 2 (b_high - b_low) f1,
// i.e. c = 2, and the brute-force check in the acceptance suite confirms it
// to 1e-10. eta does not depend on c because Q_H carries the same factor.
namespace otto::analytic {

inline constexpr double kWorkPrefactor = 2.0;

struct AnalyticPoint {
    double z = 0.0;    // may be +inf once x or y exceeds ~710; f1, f2 stay finite
    double f1 = 0.0;
    double f2 = 0.0;
    double w = 0.0;
    double eta = 0.0;
};

struct F1F2 {
    double f1 = 0.0;
    double f2 = 0.0;
    double z = 0.0;
    double f1_minus_f2 = 0.0;  // evaluated without cancellation between f1 and f2
};

// Throws InvalidParams unless t_hot > 0, b_high > 0, j1 >= 0.
F1F2 analytic_f1_f2(double j1, double b_high, double t_hot);

// Both require b_high >= b_low >= j1 / 2 (OutOfEngineDomain otherwise).
// analytic_eta throws DivisionByZero if f1 == f2.
double analytic_eta(double j1, double b_high, double b_low, double t_hot);
double analytic_work(double j1, double b_high, double b_low, double t_hot);

AnalyticPoint analytic_point(double j1, double b_high, double b_low, double t_hot);

}  // namespace otto::analytic
