#include "otto/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otto/acceptance.hpp"
#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/model.hpp"
#include "otto/optimize.hpp"
#include "otto/sweep.hpp"

namespace otto::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first < last && std::isspace(static_cast<unsigned char>(*first))) ++first;
    while (last > first && std::isspace(static_cast<unsigned char>(last[-1]))) --last;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw UsageError(what + ": not a number '" + s + "'");
    return v;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError(what + ": not a count '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// key = value per line, '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

// Parameter flags shared by every evaluating subcommand. Values are kept as
// strings so "given on the command line" and "given in the config file" can
// be layered over a base ModelParams.
struct ParamFlags {
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;

    static constexpr const char* kKeys[] = {"bh", "bl", "j1", "j2", "k", "omega", "th", "measure"};

    void attach(CLI::App* app) {
        const std::map<std::string, std::string> help{
            {"bh", "heating field b_high"},     {"bl", "measurement-stroke field b_low"},
            {"j1", "ion1-ion2 coupling"},       {"j2", "ion2-ion3 coupling"},
            {"k", "spin-phonon coupling"},      {"omega", "phonon frequency"},
            {"th", "hot bath temperature k_B T_H"}, {"measure", "measured eigenstate: e1 or e3"}};
        for (const char* key : kKeys) options[key] = app->add_option("--" + std::string(key), values[key], help.at(key));
    }

    bool given(const std::string& key) const { return options.at(key)->count() > 0; }

    // Explicit flags win over the config file; anything else keeps `base`.
    model::ModelParams apply(model::ModelParams p, const std::map<std::string, std::string>& config) const {
        for (const char* key : kKeys) {
            std::string raw;
            if (given(key)) {
                raw = values.at(key);
            } else if (auto it = config.find(key); it != config.end()) {
                raw = it->second;
            } else {
                continue;
            }
            const std::string k = key;
            if (k == "measure") {
                p.measure = model::parse_measure(raw);
                continue;
            }
            const double v = parse_real(raw, "--" + k);
            if (k == "bh") p.b_high = v;
            else if (k == "bl") p.b_low = v;
            else if (k == "j1") p.j1 = v;
            else if (k == "j2") p.j2 = v;
            else if (k == "k") p.k = v;
            else if (k == "omega") p.omega = v;
            else if (k == "th") p.t_hot = v;
        }
        return p;
    }
};

struct Output {
    std::string path;
    std::string format = "csv";
    CLI::Option* format_opt = nullptr;
    CLI::Option* path_opt = nullptr;

    void attach(CLI::App* app, const char* default_format) {
        format = default_format;
        std::vector<std::string> choices{"csv", "json"};
        if (std::string(default_format) == "text") choices.insert(choices.begin(), "text");
        path_opt = app->add_option("--out", path, "output file (default: standard output)");
        format_opt = app->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
    }

    void resolve(const std::map<std::string, std::string>& config) {
        if (format_opt->count() == 0)
            if (auto it = config.find("format"); it != config.end()) format = it->second;
        if (path_opt->count() == 0)
            if (auto it = config.find("out"); it != config.end()) path = it->second;
    }

    void write(std::ostream& out, const std::string& text) const {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + path + "'");
        file << text;
        if (!file) throw UsageError("write to '" + path + "' failed");
    }
};

std::string cycle_text(const model::ModelParams& p, const cycle::CycleResult& r) {
    std::ostringstream os;
    auto line = [&](const char* key, const std::string& value) { os << key << " = " << value << '\n'; };
    using sweep::format_real;
    line("b_high", format_real(p.b_high));
    line("b_low", format_real(p.b_low));
    line("j1", format_real(p.j1));
    line("j2", format_real(p.j2));
    line("k", format_real(p.k));
    line("omega", format_real(p.omega));
    line("t_hot", format_real(p.t_hot));
    line("measure", std::string(model::to_string(p.measure)));
    line("q_hot", format_real(r.q_hot));
    line("w1", format_real(r.w1));
    line("q_cold", format_real(r.q_cold));
    line("w2", format_real(r.w2));
    line("w_net", format_real(r.w_net));
    line("eta", r.eta ? format_real(*r.eta) : std::string());
    line("regime", std::string(cycle::to_string(r.regime)));
    line("s_vn", format_real(r.entropy_heating));
    line("fields_inverted", r.fields_inverted ? "true" : "false");
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string idx = std::to_string(i + 1);
        line(("p_hot_E" + idx).c_str(), format_real(r.pops_hot[i]));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string idx = std::to_string(i + 1);
        line(("p_cold_E" + idx).c_str(), format_real(r.pops_cold[i]));
    }
    return os.str();
}

struct Range3 {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;
};

Range3 parse_range3(const std::string& s, const std::string& what) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError(what + ": expected start:stop:steps, got '" + s + "'");
    return {parse_real(parts[0], what), parse_real(parts[1], what), parse_count(parts[2], what)};
}

sweep::SweepSpec parse_sweep_flag(const std::string& s, const model::ModelParams& base, bool critical) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--sweep: expected axis=start:stop:steps, got '" + s + "'");
    const auto axis = sweep::parse_axis(trim(s.substr(0, eq)));
    const auto r = parse_range3(s.substr(eq + 1), "--sweep");
    sweep::SweepSpec spec{base, axis, r.start, r.stop, r.steps, critical};
    spec.validate();
    return spec;
}

std::string render(std::span<const sweep::SweepRow> rows, const std::string& format) {
    return format == "json" ? sweep::to_json(rows) : sweep::to_csv(rows);
}

std::string render(std::span<const optimize::WmaxRow> rows, const std::string& format) {
    return format == "json" ? sweep::to_json(rows) : sweep::to_csv(rows);
}

std::vector<double> grid(const Range3& r) {
    if (r.steps == 0) throw UsageError("--bl-grid: steps must be at least 1");
    if (r.steps == 1) return {r.start};
    std::vector<double> xs(r.steps);
    for (std::size_t i = 0; i < r.steps; ++i)
        xs[i] = r.start + (r.stop - r.start) * static_cast<double>(i) / static_cast<double>(r.steps - 1);
    xs.back() = r.stop;
    return xs;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measurement-based quantum Otto engine with a two-ion working substance", "otto"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value file; command-line flags take precedence");

    // cycle
    auto* cyc = app.add_subcommand("cycle", "evaluate one cycle and print every result field");
    ParamFlags cyc_params;
    Output cyc_out;
    cyc_params.attach(cyc);
    cyc_out.attach(cyc, "text");
    cyc->add_option("--config", config_path, "key = value file");

    // sweep
    auto* swp = app.add_subcommand("sweep", "sweep one parameter and print one row per point");
    ParamFlags swp_params;
    Output swp_out;
    std::string sweep_flag, rule;
    unsigned threads = 0;
    swp_params.attach(swp);
    swp_out.attach(swp, "csv");
    swp->add_option("--config", config_path, "key = value file");
    auto* sweep_opt = swp->add_option("--sweep", sweep_flag, "axis=start:stop:steps (axis: b_low b_high j1 j2 k t_hot)");
    auto* rule_opt = swp->add_option("--rule", rule, "'critical' pins b_low to j1/2")->check(CLI::IsMember({"critical"}));
    swp->add_option("--threads", threads, "worker threads (0: hardware concurrency)");

    // figure
    auto* fig = app.add_subcommand("figure", "run a named preset");
    ParamFlags fig_params;
    Output fig_out;
    std::string figure_id;
    fig_params.attach(fig);
    fig_out.attach(fig, "csv");
    fig->add_option("--config", config_path, "key = value file");
    fig->add_option("id", figure_id, "preset id")->required();

    // optimize
    auto* opt = app.add_subcommand("optimize", "efficiency at maximum work over a b_low grid");
    ParamFlags opt_params;
    Output opt_out;
    std::string bl_grid, bh_range, mode = "numeric";
    opt_params.attach(opt);
    opt_out.attach(opt, "csv");
    opt->add_option("--config", config_path, "key = value file");
    auto* grid_opt = opt->add_option("--bl-grid", bl_grid, "b_low grid start:stop:steps");
    auto* range_opt = opt->add_option("--bh-range", bh_range, "b_high search interval lo:hi");
    auto* mode_opt = opt->add_option("--mode", mode, "work model")->check(CLI::IsMember({"numeric", "analytic"}));

    // selftest
    auto* self = app.add_subcommand("selftest", "run the acceptance criteria and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return 1;
    }

    try {
        std::map<std::string, std::string> config;
        if (!config_path.empty()) config = read_config(config_path);
        auto config_value = [&](const std::string& key, CLI::Option* flag, std::string& target) {
            if (flag->count() == 0)
                if (auto it = config.find(key); it != config.end()) target = it->second;
        };

        if (self->parsed()) {
            const auto results = acceptance::run_all();
            acceptance::print_table(out, results);
            return acceptance::all_passed(results) ? 0 : 2;
        }

        if (cyc->parsed()) {
            cyc_out.resolve(config);
            const auto p = cyc_params.apply(sweep::reference_params(), config);
            const auto r = cycle::run_otto(p);
            if (cyc_out.format == "text") {
                cyc_out.write(out, cycle_text(p, r));
            } else {
                sweep::SweepRow row;
                row.params = p;
                row.axis_value = p.b_low;
                row.result = r;
                cyc_out.write(out, render(std::span<const sweep::SweepRow>(&row, 1), cyc_out.format));
            }
            return 0;
        }

        if (swp->parsed()) {
            swp_out.resolve(config);
            config_value("sweep", sweep_opt, sweep_flag);
            config_value("rule", rule_opt, rule);
            if (sweep_flag.empty()) throw UsageError("sweep: --sweep axis=start:stop:steps is required");
            if (!rule.empty() && rule != "critical") throw UsageError("--rule: only 'critical' is supported");
            const auto p = swp_params.apply(sweep::reference_params(), config);
            const auto spec = parse_sweep_flag(sweep_flag, p, rule == "critical");
            const auto rows = sweep::run_sweep(spec, sweep::Execution::Parallel, threads);
            swp_out.write(out, render(rows, swp_out.format));
            return 0;
        }

        if (fig->parsed()) {
            fig_out.resolve(config);
            auto job = sweep::figure_preset(figure_id);
            if (auto* spec = std::get_if<sweep::SweepSpec>(&job)) {
                spec->base = fig_params.apply(spec->base, config);
                const auto rows = sweep::run_sweep(*spec, sweep::Execution::Parallel);
                fig_out.write(out, render(rows, fig_out.format));
            } else {
                auto& oj = std::get<sweep::OptimizerJob>(job);
                oj.base = fig_params.apply(oj.base, config);
                const auto rows = optimize::eta_wmax_curve(oj.base, oj.b_low_grid, oj.mode);
                fig_out.write(out, render(rows, fig_out.format));
            }
            return 0;
        }

        if (opt->parsed()) {
            opt_out.resolve(config);
            config_value("bl-grid", grid_opt, bl_grid);
            config_value("bh-range", range_opt, bh_range);
            config_value("mode", mode_opt, mode);
            if (bl_grid.empty()) throw UsageError("optimize: --bl-grid start:stop:steps is required");
            if (mode != "numeric" && mode != "analytic") throw UsageError("--mode: expected numeric or analytic");
            const auto p = opt_params.apply(sweep::reference_params(), config);
            const auto xs = grid(parse_range3(bl_grid, "--bl-grid"));
            std::optional<optimize::SearchInterval> search;
            if (!bh_range.empty()) {
                const auto parts = split(bh_range, ':');
                if (parts.size() != 2) throw UsageError("--bh-range: expected lo:hi, got '" + bh_range + "'");
                search = optimize::SearchInterval{parse_real(parts[0], "--bh-range"), parse_real(parts[1], "--bh-range")};
            }
            const auto wm = mode == "analytic" ? optimize::WorkModel::Analytic : optimize::WorkModel::Numeric;
            const auto rows = optimize::eta_wmax_curve(p, xs, wm, search);
            opt_out.write(out, render(rows, opt_out.format));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << app.help();
    return 1;
}

}  // namespace otto::cli
