#include "otto/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "otto/analytic.hpp"
#include "otto/errors.hpp"

namespace otto::sweep {

namespace {

constexpr std::array<std::pair<Axis, std::string_view>, 6> kAxisNames{{
    {Axis::BLow, "b_low"},
    {Axis::BHigh, "b_high"},
    {Axis::J1, "j1"},
    {Axis::J2, "j2"},
    {Axis::K, "k"},
    {Axis::THot, "t_hot"},
}};

}  // namespace

std::string_view to_string(Axis a) {
    for (const auto& [axis, name] : kAxisNames)
        if (axis == a) return name;
    return "b_low";
}

Axis parse_axis(std::string_view s) {
    for (const auto& [axis, name] : kAxisNames)
        if (name == s) return axis;
    throw InvalidSweep("unknown sweep axis '" + std::string(s) + "' (expected b_low, b_high, j1, j2, k or t_hot)");
}

void SweepSpec::validate() const {
    if (steps < 2) throw InvalidSweep("sweep needs at least 2 steps");
    if (!std::isfinite(start) || !std::isfinite(stop)) throw InvalidSweep("sweep bounds must be finite");
    if (start == stop) throw InvalidSweep("sweep start and stop are equal");
    if (critical_rule && axis == Axis::BLow) throw InvalidSweep("critical rule fixes b_low; sweep another axis");
}

std::vector<double> SweepSpec::axis_values() const {
    validate();
    std::vector<double> xs(steps);
    const double span = stop - start;
    for (std::size_t i = 0; i < steps; ++i)
        xs[i] = start + span * static_cast<double>(i) / static_cast<double>(steps - 1);
    xs.back() = stop;
    return xs;
}

model::ModelParams SweepSpec::point(double x) const {
    model::ModelParams p = base;
    switch (axis) {
        case Axis::BLow: p.b_low = x; break;
        case Axis::BHigh: p.b_high = x; break;
        case Axis::J1: p.j1 = x; break;
        case Axis::J2: p.j2 = x; break;
        case Axis::K: p.k = x; break;
        case Axis::THot: p.t_hot = x; break;
    }
    if (critical_rule) p.b_low = model::critical_field(p.j1);
    return p;
}

namespace {

SweepRow evaluate(const SweepSpec& spec, double x) {
    SweepRow row;
    row.axis = spec.axis;
    row.axis_value = x;
    row.params = spec.point(x);
    const auto& p = row.params;
    try {
        row.result = cycle::run_otto(p);
        if (p.measure == model::Measure::E1 && p.j2 == 0.0 && p.b_high >= p.b_low &&
            p.b_low >= model::critical_field(p.j1)) {
            row.eta_analytic = analytic::analytic_eta(p.j1, p.b_high, p.b_low, p.t_hot);
            row.w_analytic = analytic::analytic_work(p.j1, p.b_high, p.b_low, p.t_hot);
        }
    } catch (const std::exception& e) {
        row.result.reset();
        row.eta_analytic.reset();
        row.w_analytic.reset();
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec, unsigned threads) {
    const auto xs = spec.axis_values();
    std::vector<SweepRow> rows(xs.size());
    if (exec == Execution::Sequential) {
        for (std::size_t i = 0; i < xs.size(); ++i) rows[i] = evaluate(spec, xs[i]);
        return rows;
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, xs.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < xs.size(); i = next++) rows[i] = evaluate(spec, xs[i]);
        });
    }
    pool.clear();  // joins
    return rows;
}

// ---------------------------------------------------------------------------
// Figure presets. Abscissa ranges that are only readable off the plots stay
// 0.05 away from the critical field j1/2 (or from b_high).

model::ModelParams reference_params() { return model::ModelParams{}; }

namespace {

constexpr std::array<std::string_view, 13> kFigureIds{
    "fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig5", "fig6",
    "fig7", "fig8", "fig9a", "fig9b", "fig10a", "fig10b"};

SweepSpec make_sweep(model::ModelParams base, Axis axis, double start, double stop, std::size_t steps,
                     bool critical = false) {
    return SweepSpec{base, axis, start, stop, steps, critical};
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.back() = b;
    return xs;
}

}  // namespace

std::span<const std::string_view> figure_ids() { return kFigureIds; }

FigureJob figure_preset(std::string_view id) {
    const model::ModelParams ref = reference_params();
    const double above_critical = model::critical_field(ref.j1) + 0.05;

    if (id == "fig2a" || id == "fig3a" || id == "fig3b") {
        return make_sweep(ref, Axis::BLow, above_critical, ref.b_high - 0.05, 100);
    }
    if (id == "fig2b") {
        model::ModelParams p = ref;
        p.measure = model::Measure::E3;
        return make_sweep(p, Axis::BLow, 0.05, model::critical_field(ref.j1) - 0.05, 100);
    }
    if (id == "fig4") {
        return make_sweep(ref, Axis::BHigh, ref.b_low + 0.05, 30.0, 100);
    }
    if (id == "fig5") {
        model::ModelParams p = ref;
        p.j2 = 0.1;
        // j1 stays below 2 b_low = 12 so b_low remains above the critical field.
        return make_sweep(p, Axis::J1, 0.0, 11.9, 120);
    }
    if (id == "fig6") {
        return make_sweep(ref, Axis::J1, 0.2, 19.8, 50, true);
    }
    if (id == "fig7") {
        model::ModelParams p = ref;
        p.j2 = 0.0;
        return make_sweep(p, Axis::J1, 0.2, 19.8, 50, true);
    }
    if (id == "fig8") {
        return make_sweep(ref, Axis::J2, 0.0, 10.0, 11, true);
    }
    if (id == "fig9a") {
        model::ModelParams p = ref;
        p.k = 0.2;
        return make_sweep(p, Axis::BLow, above_critical, ref.b_high - 0.05, 100);
    }
    if (id == "fig9b") {
        model::ModelParams p = ref;
        p.k = 0.2;
        return make_sweep(p, Axis::BHigh, ref.b_low + 0.05, 30.0, 100);
    }
    if (id == "fig10a") {
        model::ModelParams p = ref;
        p.j1 = 1.0;
        return OptimizerJob{p, linspace(0.7, 10.0, 32), optimize::WorkModel::Numeric};
    }
    if (id == "fig10b") {
        return OptimizerJob{ref, linspace(6.0, 20.0, 29), optimize::WorkModel::Numeric};
    }
    throw UnknownFigure("unknown figure '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Serialization

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(std::span<const SweepRow> rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& row : rows) {
        const auto& p = row.params;
        os << to_string(row.axis) << ',' << format_real(p.b_low) << ',' << format_real(p.b_high) << ','
           << format_real(p.j1) << ',' << format_real(p.j2) << ',' << format_real(p.k) << ','
           << format_real(p.omega) << ',' << format_real(p.t_hot) << ',' << model::to_string(p.measure) << ',';
        if (row.result) {
            const auto& r = *row.result;
            os << format_real(r.q_hot) << ',' << format_real(r.w1) << ',' << format_real(r.q_cold) << ','
               << format_real(r.w2) << ',' << format_real(r.w_net) << ','
               << (r.eta ? format_real(*r.eta) : std::string()) << ',' << format_real(r.entropy_heating) << ','
               << cycle::to_string(r.regime) << ',';
        } else {
            os << ",,,,,,,,";
        }
        os << csv_field(row.error) << '\n';
    }
    return os.str();
}

std::string to_json(std::span<const SweepRow> rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        const auto& p = row.params;
        nlohmann::ordered_json j;
        j["axis"] = to_string(row.axis);
        j["b_low"] = p.b_low;
        j["b_high"] = p.b_high;
        j["j1"] = p.j1;
        j["j2"] = p.j2;
        j["k"] = p.k;
        j["omega"] = p.omega;
        j["t_hot"] = p.t_hot;
        j["measure"] = model::to_string(p.measure);
        for (const char* key : {"q_hot", "w1", "q_cold", "w2", "w_net", "eta", "s_vn", "regime"}) j[key] = nullptr;
        if (row.result) {
            const auto& r = *row.result;
            j["q_hot"] = r.q_hot;
            j["w1"] = r.w1;
            j["q_cold"] = r.q_cold;
            j["w2"] = r.w2;
            j["w_net"] = r.w_net;
            if (r.eta) j["eta"] = *r.eta;
            j["s_vn"] = r.entropy_heating;
            j["regime"] = cycle::to_string(r.regime);
        }
        j["error"] = row.error;
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

std::string to_csv(std::span<const optimize::WmaxRow> rows) {
    std::ostringstream os;
    os << kWmaxCsvHeader << '\n';
    for (const auto& row : rows) {
        const auto& r = row.result;
        os << format_real(r.b_low) << ',' << format_real(r.b_high_star) << ',' << format_real(r.w_max) << ','
           << format_real(r.eta_at_wmax) << ',' << format_real(r.ratio) << ',' << format_real(row.one_minus_ratio)
           << ',' << format_real(row.one_minus_sqrt_ratio) << '\n';
    }
    return os.str();
}

std::string to_json(std::span<const optimize::WmaxRow> rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        const auto& r = row.result;
        nlohmann::ordered_json j;
        j["b_low"] = r.b_low;
        j["b_high_star"] = r.b_high_star;
        j["w_max"] = r.w_max;
        j["eta_wmax"] = r.eta_at_wmax;
        j["ratio"] = r.ratio;
        j["one_minus_ratio"] = row.one_minus_ratio;
        j["one_minus_sqrt_ratio"] = row.one_minus_sqrt_ratio;
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

}  // namespace otto::sweep
