#include "mobispread/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "mobispread/csv.hpp"
#include "mobispread/experiments.hpp"
#include "mobispread/meanfield.hpp"
#include "mobispread/parallel.hpp"
#include "mobispread/params.hpp"
#include "mobispread/stats.hpp"

namespace mobispread::cli {

using csv::format_real;

namespace {

constexpr std::uint64_t default_steps = 10000;

std::string_view name_of(Subcommand s) {
    switch (s) {
        case Subcommand::simulate: return "simulate";
        case Subcommand::meanfield: return "meanfield";
        case Subcommand::threshold: return "threshold";
        case Subcommand::sweep: return "sweep";
        case Subcommand::acor: return "acor";
    }
    return "";
}

double round_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

double parse_number(const std::string& token) {
    double v = 0.0;
    const char* end = token.data() + token.size();
    const auto res = std::from_chars(token.data(), end, v);
    if (token.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v))
        throw std::invalid_argument("'" + token + "' is not a number");
    return v;
}

std::uint64_t parse_count(const std::string& flag, const std::string& text, std::uint64_t min,
                          std::uint64_t max = UINT64_MAX) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != end)
        throw UsageError(flag + ": '" + text + "' is not a nonnegative integer");
    if (v < min || v > max)
        throw UsageError(flag + ": " + text + " is outside [" + std::to_string(min) + "," +
                         std::to_string(max) + "]");
    return v;
}

std::vector<double> grid_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_grid(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

void check_unit(const std::string& flag, const std::vector<double>& values) {
    for (double v : values)
        if (v < 0.0 || v > 1.0)
            throw UsageError(flag + ": " + format_real(v) + " is outside the range [0,1]");
}

double single(const std::string& flag, const std::vector<double>& values) {
    if (values.size() != 1) throw UsageError(flag + ": expects a single value");
    return values.front();
}

std::string quoted(const std::string& s) {
    if (s.find_first_of(" \t'\"") == std::string::npos && !s.empty()) return s;
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            values.push_back(parse_number(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos || item.find(':', c2 + 1) != std::string::npos)
            throw std::invalid_argument("range '" + item + "' must be lo:hi:step");
        const double lo = parse_number(item.substr(0, c1));
        const double hi = parse_number(item.substr(c1 + 1, c2 - c1 - 1));
        const double step = parse_number(item.substr(c2 + 1));
        if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
        if (hi < lo) throw std::invalid_argument("range '" + item + "' has hi below lo");
        const double slack = 1e-9 * step;
        for (std::uint64_t i = 0;; ++i) {
            const double v = lo + static_cast<double>(i) * step;
            if (v > hi + slack) break;
            values.push_back(round_sig12(v));
            if (i > 10'000'000) throw std::invalid_argument("range has too many points");
        }
    }
    if (values.empty() || (!text.empty() && text.back() == ','))
        throw std::invalid_argument("empty value list");
    return values;
}

std::uint64_t RunConfig::effective_steps() const {
    if (steps != 0) return steps;
    if (subcommand == Subcommand::threshold) return experiments::default_horizon(size);
    return default_steps;
}

std::string RunConfig::canonical_command() const {
    std::ostringstream os;
    os << "mobispread " << name_of(subcommand);
    auto flag = [&](std::string_view name, const std::string& value) {
        os << " --" << name << ' ' << value;
    };
    const auto sz = std::to_string(size);
    const auto st = std::to_string(effective_steps());
    switch (subcommand) {
        case Subcommand::simulate:
            flag("size", sz);
            flag("density", csv::join_reals(density));
            flag("p", csv::join_reals(p));
            flag("q", csv::join_reals(q));
            flag("f0", format_real(f0));
            flag("steps", st);
            flag("seed", std::to_string(seed));
            flag("thin", std::to_string(thin));
            break;
        case Subcommand::meanfield:
            if (curve) os << " --curve";
            flag("p", csv::join_reals(p));
            if (!curve) flag("q", csv::join_reals(q));
            flag("density", csv::join_reals(density));
            if (!curve) flag("tol", format_real(tol));
            break;
        case Subcommand::threshold:
            flag("size", sz);
            flag("density", csv::join_reals(density));
            flag("p", csv::join_reals(p));
            flag("f0", format_real(f0));
            flag("steps", st);
            flag("replicates", std::to_string(replicates));
            flag("resolution", format_real(resolution));
            flag("seed", std::to_string(seed));
            break;
        case Subcommand::sweep:
            flag("size", sz);
            flag("density", csv::join_reals(density));
            flag("p", csv::join_reals(p));
            flag("q", csv::join_reals(q));
            flag("f0", format_real(f0));
            flag("steps", st);
            flag("replicates", std::to_string(replicates));
            flag("seed", std::to_string(seed));
            break;
        case Subcommand::acor:
            flag("window", format_real(window));
            flag("input", quoted(input));
            break;
    }
    return os.str();
}

RunConfig parse_args(std::span<const std::string> args) {
    CLI::App app{"Monte Carlo and mean-field analysis of proximity malware spread", "mobispread"};
    app.require_subcommand(1, 1);

    struct Raw {
        std::string size, density, p, q, steps, seed, replicates, f0, resolution, thin, tol,
            window, input, out, jobs;
        bool curve = false;
    } raw;

    auto* simulate = app.add_subcommand("simulate", "Run one trajectory and write f(t)");
    auto* meanfield = app.add_subcommand("meanfield", "Evaluate the mean-field solution");
    auto* threshold = app.add_subcommand("threshold", "Bisect the empirical threshold q*");
    auto* sweep = app.add_subcommand("sweep", "Estimate f_inf over a p x q x density grid");
    auto* acor = app.add_subcommand("acor", "Analyse a saved trajectory file");

    auto opt = [](CLI::App* sub, const char* name, std::string& target, const char* help) {
        sub->add_option(name, target, help);
    };
    for (auto* sub : {simulate, threshold, sweep}) {
        opt(sub, "--size", raw.size, "Lattice side L (default 128)");
        opt(sub, "--steps", raw.steps,
            "Ticks per run (default 10000; threshold: 50*size^2)");
        opt(sub, "--seed", raw.seed, "Master seed (default 1)");
        opt(sub, "--f0", raw.f0, "Initial infected fraction (default 0.2)");
    }
    for (auto* sub : {simulate, meanfield, threshold, sweep}) {
        opt(sub, "--density", raw.density, "Agents per site; list or lo:hi:step (default 1)");
        opt(sub, "--p", raw.p, "Infection probability; list or lo:hi:step (default 0.5)");
    }
    for (auto* sub : {simulate, meanfield, sweep})
        opt(sub, "--q", raw.q, "Healing probability; list or lo:hi:step (default 0.05)");
    for (auto* sub : {threshold, sweep}) {
        opt(sub, "--replicates", raw.replicates, "Replicates per point (default 16)");
        opt(sub, "--jobs", raw.jobs, "Worker threads (default: all cores)");
    }
    opt(threshold, "--resolution", raw.resolution, "Final bracket width (default 1/256)");
    opt(simulate, "--thin", raw.thin, "Record every k-th tick (default 1)");
    meanfield->add_flag("--curve", raw.curve, "Emit the threshold curve p,d,q0");
    opt(meanfield, "--tol", raw.tol, "Solver tolerance (default 1e-10)");
    opt(acor, "--window", raw.window, "Sokal window factor c (default 7)");
    opt(acor, "--input", raw.input, "Trajectory CSV written by simulate");
    acor->add_option("input_file", raw.input, "Trajectory CSV (alternative to --input)");
    for (auto* sub : {simulate, meanfield, threshold, sweep, acor})
        opt(sub, "--out", raw.out, "Output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands()) throw HelpRequested(sub->help());
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    const CLI::App* chosen = app.get_subcommands().front();
    const std::string& name = chosen->get_name();
    if (name == "simulate") cfg.subcommand = Subcommand::simulate;
    else if (name == "meanfield") cfg.subcommand = Subcommand::meanfield;
    else if (name == "threshold") cfg.subcommand = Subcommand::threshold;
    else if (name == "sweep") cfg.subcommand = Subcommand::sweep;
    else cfg.subcommand = Subcommand::acor;

    if (!raw.size.empty())
        cfg.size = static_cast<std::uint32_t>(parse_count("--size", raw.size, 1, 65535));
    if (!raw.density.empty()) cfg.density = grid_flag("--density", raw.density);
    if (!raw.p.empty()) cfg.p = grid_flag("--p", raw.p);
    if (!raw.q.empty()) cfg.q = grid_flag("--q", raw.q);
    if (!raw.steps.empty()) cfg.steps = parse_count("--steps", raw.steps, 1);
    if (!raw.seed.empty()) cfg.seed = parse_count("--seed", raw.seed, 0);
    if (!raw.replicates.empty())
        cfg.replicates =
            static_cast<std::uint32_t>(parse_count("--replicates", raw.replicates, 1, 1u << 20));
    if (!raw.thin.empty()) cfg.thin = parse_count("--thin", raw.thin, 1);
    if (!raw.jobs.empty()) cfg.jobs = static_cast<unsigned>(parse_count("--jobs", raw.jobs, 1, 4096));
    cfg.curve = raw.curve;
    cfg.input = raw.input;
    cfg.out = raw.out;

    auto real_flag = [](const std::string& flag, const std::string& text) {
        try {
            return parse_number(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(flag + ": " + e.what());
        }
    };
    if (!raw.f0.empty()) cfg.f0 = real_flag("--f0", raw.f0);
    if (!raw.resolution.empty()) cfg.resolution = real_flag("--resolution", raw.resolution);
    if (!raw.tol.empty()) cfg.tol = real_flag("--tol", raw.tol);
    if (!raw.window.empty()) cfg.window = real_flag("--window", raw.window);

    check_unit("--p", cfg.p);
    check_unit("--q", cfg.q);
    check_unit("--f0", {cfg.f0});
    if (!(cfg.resolution > 0.0 && cfg.resolution <= 1.0))
        throw UsageError("--resolution: " + format_real(cfg.resolution) +
                         " is outside the range (0,1]");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol: must be positive");
    if (!(cfg.window > 0.0)) throw UsageError("--window: must be positive");
    for (double d : cfg.density) {
        if (d < 0.0) throw UsageError("--density: " + format_real(d) + " is negative");
        if (cfg.subcommand != Subcommand::meanfield &&
            SimParams::agents_for_density(cfg.size, d) == 0)
            throw UsageError("--density: " + format_real(d) +
                             " leaves no agents on a lattice of side " + std::to_string(cfg.size));
    }
    if (cfg.subcommand == Subcommand::simulate) {
        single("--density", cfg.density);
        single("--p", cfg.p);
        single("--q", cfg.q);
    }
    if (cfg.subcommand == Subcommand::acor && cfg.input.empty())
        throw UsageError("acor: an input trajectory file is required");
    return cfg;
}

namespace {

SimParams sim_params(const RunConfig& cfg, double d, double p, double q) {
    SimParams sp;
    sp.lattice_side = cfg.size;
    sp.agent_count = SimParams::agents_for_density(cfg.size, d);
    sp.infect_prob = p;
    sp.heal_prob = q;
    sp.initial_infected_fraction = cfg.f0;
    sp.max_steps = cfg.effective_steps();
    sp.seed = cfg.seed;
    return sp;
}

csv::Header base_header(const RunConfig& cfg) {
    csv::Header h;
    h.command = cfg.canonical_command();
    return h;
}

unsigned jobs_of(const RunConfig& cfg) { return cfg.jobs != 0 ? cfg.jobs : default_jobs(); }

void run_simulate(const RunConfig& cfg, std::ostream& os) {
    const SimParams sp = sim_params(cfg, cfg.density[0], cfg.p[0], cfg.q[0]);
    auto h = base_header(cfg);
    h.add("master_seed", std::to_string(cfg.seed));
    h.add("size", std::to_string(sp.lattice_side));
    h.add("density", format_real(cfg.density[0]));
    h.add("agents", std::to_string(sp.agent_count));
    h.add("p", format_real(sp.infect_prob));
    h.add("q", format_real(sp.heal_prob));
    h.add("f0", format_real(sp.initial_infected_fraction));
    h.add("steps", std::to_string(sp.max_steps));
    h.add("thin", std::to_string(cfg.thin));
    h.add("seed", std::to_string(cfg.seed));
    h.add("stream", "0");

    const auto series = experiments::run_trajectory(sp, RngStream::derive(cfg.seed, 0), cfg.thin);
    h.write(os);
    os << "tick,infected_fraction\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        os << (i + 1) * cfg.thin << ',' << format_real(series[i]) << '\n';
}

void run_meanfield(const RunConfig& cfg, std::ostream& os) {
    auto h = base_header(cfg);
    h.add("master_seed", "n/a");
    h.add("p", csv::join_reals(cfg.p));
    if (!cfg.curve) h.add("q", csv::join_reals(cfg.q));
    h.add("density", csv::join_reals(cfg.density));
    if (!cfg.curve) h.add("tol", format_real(cfg.tol));
    h.write(os);

    if (cfg.curve) {
        os << "p,d,q0\n";
        for (double d : cfg.density)
            for (const auto& pt : meanfield::mf_threshold_curve(d, cfg.p))
                os << format_real(pt.p) << ',' << format_real(d) << ',' << format_real(pt.q0)
                   << '\n';
        return;
    }
    os << "p,q,d,f_mf,regime,residual,q0\n";
    for (double p : cfg.p)
        for (double q : cfg.q)
            for (double d : cfg.density) {
                const auto r = meanfield::solve_fmf({p, q, d}, cfg.tol);
                os << format_real(p) << ',' << format_real(q) << ',' << format_real(d) << ','
                   << format_real(r.f_mf) << ',' << meanfield::to_string(r.regime) << ','
                   << format_real(r.residual) << ',' << format_real(r.q0) << '\n';
            }
}

void run_threshold(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    experiments::ThresholdSearch search;
    search.lattice_side = cfg.size;
    search.replicates = cfg.replicates;
    search.steps = cfg.effective_steps();
    search.resolution = cfg.resolution;
    search.initial_infected_fraction = cfg.f0;
    search.master_seed = cfg.seed;

    auto h = base_header(cfg);
    h.add("master_seed", std::to_string(cfg.seed));
    h.add("size", std::to_string(cfg.size));
    h.add("density", csv::join_reals(cfg.density));
    h.add("p", csv::join_reals(cfg.p));
    h.add("f0", format_real(cfg.f0));
    h.add("steps", std::to_string(search.steps));
    h.add("replicates", std::to_string(cfg.replicates));
    h.add("resolution", format_real(cfg.resolution));
    h.add("decision", "epidemic iff surviving >= replicates/2 at the horizon");
    h.write(os);
    os << "p,d,q_star,bracket_low,bracket_high,resolution,q0\n";
    os.flush();

    struct Point {
        double p, d;
    };
    std::vector<Point> points;
    for (double p : cfg.p)
        for (double d : cfg.density) points.push_back({p, d});

    // Many points: one thread per point. Few points: threads share replicates.
    const unsigned jobs = jobs_of(cfg);
    const bool per_point = points.size() >= jobs;
    std::vector<std::optional<experiments::ThresholdEstimate>> results(points.size());
    std::size_t next = 0;
    std::mutex mu;
    parallel_for(points.size(), per_point ? jobs : 1, [&](std::size_t i) {
        auto est = experiments::find_q_star(points[i].p, points[i].d, search, per_point ? 1 : jobs);
        std::lock_guard lock(mu);
        err << "threshold p=" << format_real(est.p) << " d=" << format_real(est.d)
            << " q*=" << format_real(est.q_star) << '\n';
        results[i] = std::move(est);
        for (; next < results.size() && results[next]; ++next) {
            const auto& e = *results[next];
            os << format_real(e.p) << ',' << format_real(e.d) << ',' << format_real(e.q_star)
               << ',' << format_real(e.bracket_low) << ',' << format_real(e.bracket_high) << ','
               << format_real(e.resolution) << ','
               << format_real(meanfield::threshold_q0(e.p, e.d)) << '\n';
            for (const auto& pr : e.probes)
                os << "# probe p=" << format_real(e.p) << " d=" << format_real(e.d)
                   << " q=" << format_real(pr.q) << " surviving=" << pr.surviving << '/'
                   << pr.replicates << '\n';
            os.flush();
        }
    });
}

void write_analysis_row(std::ostream& os, double p, double q, double d, const std::string& L,
                        const std::string& seed, double tau, double burn_in, double f_inf,
                        double std_err, double n_eff, const std::string& extinct) {
    os << format_real(p) << ',' << format_real(q) << ',' << format_real(d) << ',' << L << ','
       << seed << ',' << format_real(tau) << ',' << format_real(burn_in) << ','
       << format_real(f_inf) << ',' << format_real(std_err) << ',' << format_real(n_eff) << ','
       << extinct << '\n';
}

constexpr const char* analysis_columns = "p,q,d,L,seed,tau,burn_in,f_inf,std_err,n_eff,extinct\n";

void run_sweep(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    experiments::SweepSettings settings;
    settings.lattice_side = cfg.size;
    settings.steps = cfg.effective_steps();
    settings.replicates = cfg.replicates;
    settings.initial_infected_fraction = cfg.f0;
    settings.master_seed = cfg.seed;

    auto h = base_header(cfg);
    h.add("master_seed", std::to_string(cfg.seed));
    h.add("size", std::to_string(cfg.size));
    h.add("density", csv::join_reals(cfg.density));
    h.add("p", csv::join_reals(cfg.p));
    h.add("q", csv::join_reals(cfg.q));
    h.add("f0", format_real(cfg.f0));
    h.add("steps", std::to_string(settings.steps));
    h.add("replicates", std::to_string(cfg.replicates));
    h.add("aggregation",
          "tau=mean over surviving, burn_in=max over surviving, n_eff=sum over surviving");
    h.write(os);
    os << analysis_columns;
    os.flush();

    const experiments::SweepGrid grid{cfg.p, cfg.q, cfg.density};
    const std::size_t total = grid.p.size() * grid.q.size() * grid.d.size();
    std::size_t done = 0;
    const auto L = std::to_string(cfg.size);
    const auto seed = std::to_string(cfg.seed);
    experiments::sweep(
        grid, settings,
        [&](const experiments::SweepRow& row) {
            ++done;
            err << "sweep [" << done << '/' << total << "] p=" << format_real(row.p)
                << " q=" << format_real(row.q) << " d=" << format_real(row.d) << '\n';
            if (!row.estimate) {
                os << "# error p=" << format_real(row.p) << " q=" << format_real(row.q)
                   << " d=" << format_real(row.d) << ": " << row.error << '\n';
                const double nan = std::nan("");
                write_analysis_row(os, row.p, row.q, row.d, L, seed, nan, nan, nan, nan, nan, "nan");
                os.flush();
                return;
            }
            const auto& e = *row.estimate;
            double tau = 0.0;
            double burn = 0.0;
            double n_eff = 0.0;
            for (const auto& r : e.runs) {
                if (r.extinct) continue;
                tau += r.tau;
                burn = std::max(burn, static_cast<double>(r.burn_in));
                n_eff += r.n_effective;
            }
            if (e.surviving > 0) tau /= e.surviving;
            const bool extinct = e.f_inf == 0.0;
            write_analysis_row(os, row.p, row.q, row.d, L, seed, tau, burn, e.f_inf, e.std_error,
                               n_eff, extinct ? "1" : "0");
            os.flush();
        },
        jobs_of(cfg));
}

void run_acor(const RunConfig& cfg, std::ostream& os) {
    std::ifstream in(cfg.input);
    if (!in) throw csv::IoError("cannot open '" + cfg.input + "': " + std::strerror(errno));
    const csv::Table table = csv::read_table(in);
    if (table.columns.empty()) throw csv::IoError("'" + cfg.input + "' holds no CSV header");

    std::size_t col = table.columns.size() - 1;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        if (table.columns[i] == "infected_fraction") col = i;
    stats::TimeSeries series;
    series.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        try {
            series.push_back(csv::parse_real(row[col]));
        } catch (const std::invalid_argument& e) {
            throw csv::IoError("'" + cfg.input + "': " + e.what());
        }
    }

    // Whole-series tau first: a series with no fluctuations has no
    // autocorrelation time, and that is reported as an error.
    stats::integrated_autocorrelation_time(series, cfg.window);
    const auto est = stats::estimate_equilibrium(series, cfg.window);

    auto meta = [&](const char* key) -> std::string {
        const auto it = table.metadata.find(key);
        return it == table.metadata.end() ? std::string("nan") : it->second;
    };
    auto meta_real = [&](const char* key) {
        try {
            return csv::parse_real(meta(key));
        } catch (const std::invalid_argument&) {
            return std::nan("");
        }
    };

    auto h = base_header(cfg);
    h.add("master_seed", meta("master_seed"));
    h.add("source", cfg.input);
    h.add("samples", std::to_string(series.size()));
    h.add("window", format_real(cfg.window));
    h.write(os);
    os << analysis_columns;
    write_analysis_row(os, meta_real("p"), meta_real("q"), meta_real("density"), meta("size"),
                       meta("seed"), est.tau, static_cast<double>(est.burn_in), est.mean,
                       est.std_error, est.n_effective, est.extinct ? "1" : "0");
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::out | std::ios::trunc | std::ios::binary);
        if (!file) {
            err << "mobispread: cannot write '" << cfg.out << "': " << std::strerror(errno) << '\n';
            return exit_io;
        }
        os = &file;
    }

    try {
        switch (cfg.subcommand) {
            case Subcommand::simulate: run_simulate(cfg, *os); break;
            case Subcommand::meanfield: run_meanfield(cfg, *os); break;
            case Subcommand::threshold: run_threshold(cfg, *os, err); break;
            case Subcommand::sweep: run_sweep(cfg, *os, err); break;
            case Subcommand::acor: run_acor(cfg, *os); break;
        }
    } catch (const csv::IoError& e) {
        err << "mobispread: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "mobispread " << name_of(cfg.subcommand) << ": " << e.what() << '\n';
        return exit_runtime;
    }

    os->flush();
    if (!*os) {
        err << "mobispread: write failed"
            << (cfg.out.empty() ? std::string() : " for '" + cfg.out + "'") << '\n';
        return exit_io;
    }
    return exit_ok;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return exit_ok;
    } catch (const UsageError& e) {
        std::cerr << "mobispread: " << e.what() << "\nRun 'mobispread --help' for usage.\n";
        return exit_usage;
    }
    return execute(cfg, std::cout, std::cerr);
}

}  // namespace mobispread::cli
