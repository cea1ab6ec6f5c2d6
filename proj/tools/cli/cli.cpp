#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "divorient/bounds.hpp"
#include "divorient/exact.hpp"
#include "divorient/format.hpp"
#include "divorient/numtheory.hpp"
#include "divorient/simulate.hpp"
#include "grid.hpp"
#include "svg.hpp"

namespace divorient::cli {

namespace {

constexpr const char* kConventionNote =
    "Diameter convention: the diameter of a sampled orientation is the diameter of its largest strongly "
    "connected component (ties: the component holding the smallest label).\n"
    "Seed derivation: sample j of cell (N, rho index i) uses SplitMix64 seeded with "
    "mix(master_seed, N, i, j); an edge is reversed when (next >> 11) * 2^-53 < rho.\n"
    "Threads: DIVORIENT_THREADS caps the worker count; output does not depend on it.";

/// Writes to `path` through a temporary file that is renamed on commit, so a
/// failed command leaves no partial output behind.
class OutputFile {
public:
    explicit OutputFile(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp")
    {
        stream_.open(tmp_, std::ios::binary | std::ios::trunc);
        if (!stream_)
            throw std::runtime_error("cannot write to '" + path_ + "'");
    }
    OutputFile(const OutputFile&) = delete;
    OutputFile& operator=(const OutputFile&) = delete;
    ~OutputFile()
    {
        if (!committed_) {
            stream_.close();
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }

    std::ostream& stream() { return stream_; }

    void commit()
    {
        stream_.close();
        if (stream_.fail())
            throw std::runtime_error("failed writing '" + path_ + "'");
        std::filesystem::rename(tmp_, path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::string tmp_;
    std::ofstream stream_;
    bool committed_ = false;
};

// ---------------------------------------------------------------- exact

struct ExactArgs {
    std::uint32_t n = 0;
    std::optional<double> rho;
    std::string out;
    unsigned edge_limit = kDefaultEdgeLimit;
    unsigned threads = 0;
};

int cmd_exact(const ExactArgs& a, std::ostream& out)
{
    std::optional<OutputFile> file;
    if (!a.out.empty())
        file.emplace(a.out);
    const RhoPolynomial p = exact_expectation_polynomial(a.n, ExactOptions{a.edge_limit, a.threads});
    const std::string row = to_csv_row(p);
    out << row << '\n';
    if (a.rho)
        out << "rho=" << format_double(*a.rho) << " expectation=" << format_double(evaluate(p, *a.rho)) << '\n';
    if (file) {
        file->stream() << row << '\n';
        file->commit();
    }
    return 0;
}

// ---------------------------------------------------------------- sim

struct SimArgs {
    std::string stat;
    std::string n_grid;
    std::string rho_grid;
    std::uint32_t samples = 0;
    std::uint64_t seed = 0;
    std::string out;
    bool paper_scale = false;
    unsigned threads = 0;
};

int cmd_sim(const SimArgs& a, std::ostream& out)
{
    const Statistic stat = parse_statistic(a.stat);
    ExperimentConfig config = a.paper_scale ? paper_grid(stat, a.seed) : desk_grid(stat, a.seed);
    if (!a.paper_scale) {
        if (!a.n_grid.empty())
            config.n_values = parse_uint_grid(a.n_grid);
        if (!a.rho_grid.empty())
            config.rho_values = parse_real_grid(a.rho_grid);
        if (a.samples > 0)
            config.samples_per_cell = a.samples;
    }
    config.validate();

    std::optional<OutputFile> file;
    if (!a.out.empty())
        file.emplace(a.out);
    const SimTable table{stat, a.seed, run_grid(config, a.threads)};
    if (file) {
        write_sim_csv(file->stream(), table);
        file->commit();
        out << "wrote " << table.records.size() << " rows to " << a.out << '\n';
    } else {
        write_sim_csv(out, table);
    }
    return 0;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    std::uint64_t n = 0;
    double rho = 0.5;
    std::string mode = "all";
    std::optional<double> epsilon;
    std::optional<std::uint64_t> x;
    std::string out;
};

BoundReport best_corollary4(std::uint64_t n, double rho)
{
    BoundReport best = corollary4_bound(n, 0.01, rho);
    for (int i = 2; i <= 99; ++i) {
        const BoundReport r = corollary4_bound(n, i / 100.0, rho);
        if (r.value > best.value)
            best = r;
    }
    return best;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out)
{
    if (a.mode != "theorem1" && a.mode != "cor4" && a.mode != "cor5" && a.mode != "all")
        throw std::invalid_argument("bounds: mode must be theorem1, cor4, cor5 or all");
    if (a.mode == "cor4" && !a.epsilon)
        throw std::invalid_argument("bounds: cor4 requires --epsilon");
    if (a.epsilon && !(*a.epsilon > 0.0 && *a.epsilon < 1.0))
        throw std::invalid_argument("bounds: epsilon must lie in (0,1)");
    if (a.n > 0xFFFFFFFFull && (a.mode == "theorem1" || a.mode == "all"))
        throw std::invalid_argument("bounds: theorem1 needs the divisor table; N must fit 32 bits");

    std::optional<OutputFile> file;
    if (!a.out.empty())
        file.emplace(a.out);

    std::vector<BoundReport> rows;
    if (a.mode == "theorem1" || a.mode == "all")
        rows.push_back(best_theorem1_bound(numtheory::tau_sieve(static_cast<std::uint32_t>(a.n)), a.rho));
    if (a.mode == "cor4" || a.mode == "all")
        rows.push_back(a.epsilon ? corollary4_bound(a.n, *a.epsilon, a.rho) : best_corollary4(a.n, a.rho));
    if (a.mode == "cor5" || a.mode == "all")
        rows.push_back(a.x ? corollary5_bound(a.n, a.rho, *a.x) : best_corollary5_bound(a.n, a.rho));

    std::ostringstream text;
    text << bound_csv_header() << '\n';
    for (const auto& r : rows)
        text << to_csv_row(r) << '\n';
    out << text.str();
    if (file) {
        file->stream() << text.str();
        file->commit();
    }
    return 0;
}

// ---------------------------------------------------------------- tau

struct TauArgs {
    std::uint32_t n = 0;
    std::vector<double> at_least;
    bool constants = false;
    std::string out;
};

int cmd_tau(const TauArgs& a, std::ostream& out)
{
    if (a.n == 0 && !a.constants)
        throw std::invalid_argument("tau: --n is required unless --constants is given");
    std::optional<OutputFile> file;
    if (!a.out.empty())
        file.emplace(a.out);

    std::ostringstream text;
    if (a.n > 0) {
        const auto table = numtheory::tau_sieve(a.n);
        if (!a.at_least.empty()) {
            for (double t : a.at_least)
                text << "tau>=" << format_double(t) << ": " << numtheory::count_tau_at_least(table, t) << '\n';
        } else {
            std::map<std::uint32_t, std::uint64_t> histogram;
            for (auto t : table.values())
                ++histogram[t];
            text << "# tau distribution, N=" << a.n << "\ntau,count\n";
            for (auto [t, c] : histogram)
                text << t << ',' << c << '\n';
            const auto total = numtheory::divisor_sum_total(table);
            const auto est = numtheory::dirichlet_degree_estimate(a.n);
            text << "divisor_sum=" << total << '\n'
                 << "edges=" << total - a.n << '\n'
                 << "average_degree=" << format_double(numtheory::average_degree(table)) << '\n'
                 << "degree_estimate_dirichlet=" << format_double(est.dirichlet) << '\n'
                 << "degree_estimate_alternate=" << format_double(est.alternate) << '\n';
            if (a.n >= 2) {
                const auto br = numtheory::mertens_bracket(a.n);
                text << "mertens_sum=" << format_double(br.sum) << " bracket=[" << format_double(br.lower) << ", "
                     << format_double(br.upper) << "] holds=" << (br.holds() ? "true" : "false") << '\n'
                     << "E(N)=" << format_double(numtheory::e_of_n(a.n)) << '\n'
                     << "V(N)^2=" << format_double(numtheory::v2_of_n(a.n)) << '\n';
            }
        }
    }
    if (a.constants) {
        text << "S_E(k<=60,p<=1e6)=" << format_double(numtheory::s_e_partial(60, 1'000'000))
             << " reference=" << format_double(numtheory::kTailE) << '\n'
             << "S_V(k<=60,p<=1e6)=" << format_double(numtheory::s_v_partial(60, 1'000'000))
             << " reference=" << format_double(numtheory::kTailV) << '\n'
             << "sum_p<=1e7 1/p^2=" << format_double(numtheory::sum_inverse_prime_squares(10'000'000))
             << " reference=" << format_double(numtheory::kPrimeZeta2) << '\n'
             << "M=" << format_double(numtheory::kMeisselMertens) << '\n'
             << "gamma=" << format_double(numtheory::kEulerGamma) << '\n';
    }
    out << text.str();
    if (file) {
        file->stream() << text.str();
        file->commit();
    }
    return 0;
}

// ---------------------------------------------------------------- fit / plot helpers

SimTable load_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    return read_sim_csv(in);
}

std::vector<double> distinct_rhos(const SimTable& t)
{
    std::vector<double> rhos;
    for (const auto& r : t.records)
        if (std::none_of(rhos.begin(), rhos.end(), [&](double x) { return std::fabs(x - r.rho) < 1e-9; }))
            rhos.push_back(r.rho);
    return rhos;
}

std::vector<SimRecord> records_for(const SimTable& t, double rho)
{
    std::vector<SimRecord> out;
    for (const auto& r : t.records)
        if (std::fabs(r.rho - rho) < 1e-9)
            out.push_back(r);
    return out;
}

double pick_rho(const SimTable& t, std::optional<double> requested)
{
    if (requested)
        return *requested;
    const auto rhos = distinct_rhos(t);
    if (rhos.size() != 1)
        throw std::invalid_argument("fit: the file holds several rho values; pass --rho");
    return rhos.front();
}

// ---------------------------------------------------------------- fit

struct FitArgs {
    std::string in;
    std::optional<double> rho;
    std::string out;
};

int cmd_fit(const FitArgs& a, std::ostream& out)
{
    const SimTable table = load_table(a.in);
    const double rho = pick_rho(table, a.rho);
    const auto records = records_for(table, rho);
    const FitResult fit = linfit_log(records);
    std::ostringstream text;
    text << "alpha,beta,mse\n"
         << format_double(fit.alpha) << ',' << format_double(fit.beta) << ',' << format_double(fit.mse) << '\n';
    if (!a.out.empty()) {
        OutputFile file(a.out);
        file.stream() << text.str();
        file.commit();
    }
    out << "rho=" << format_double(rho) << " points=" << records.size() << '\n' << text.str();
    return 0;
}

// ---------------------------------------------------------------- plot

struct PlotArgs {
    std::string in;
    std::string kind;
    std::string out;
    bool fit = false;
    bool bound = false;
    std::optional<double> rho;
};

int cmd_plot(const PlotArgs& a, std::ostream& out)
{
    if (a.kind != "scc_ratio" && a.kind != "diameter")
        throw std::invalid_argument("plot: kind must be scc_ratio or diameter");
    const SimTable table = load_table(a.in);
    std::vector<double> rhos = a.rho ? std::vector<double>{*a.rho} : distinct_rhos(table);

    PlotSpec spec;
    if (a.kind == "scc_ratio") {
        if (table.statistic != Statistic::lscc_size)
            throw std::invalid_argument("plot: scc_ratio needs an lscc_size run");
        spec.title = "Largest SCC / N";
        spec.x_label = "N";
        spec.y_label = "mean largest SCC / N";
        for (double rho : rhos) {
            const auto records = records_for(table, rho);
            PlotSeries s{"rho=" + format_double(rho), {}};
            for (auto [n, ratio] : frontier_ratio(records))
                s.points.emplace_back(n, ratio);
            spec.series.push_back(std::move(s));
            if (a.bound && rho > 0.0 && rho < 1.0) {
                PlotSeries b{"cor5 bound rho=" + format_double(rho), {}};
                for (const auto& r : records)
                    b.points.emplace_back(r.n, best_corollary5_bound(r.n, rho).value / r.n);
                spec.overlay_curves.push_back(std::move(b));
            }
        }
    } else {
        if (table.statistic != Statistic::diameter)
            throw std::invalid_argument("plot: diameter needs a diameter run");
        spec.title = "Mean diameter";
        spec.x_label = "log N";
        spec.y_label = "mean diameter";
        for (double rho : rhos) {
            const auto records = records_for(table, rho);
            PlotSeries s{"rho=" + format_double(rho), {}};
            for (const auto& r : records)
                s.points.emplace_back(std::log(static_cast<double>(r.n)), r.mean);
            spec.series.push_back(std::move(s));
            if (a.fit) {
                const FitResult fit = linfit_log(records);
                spec.overlay_lines.push_back({"fit rho=" + format_double(rho), fit.alpha, fit.beta});
            }
        }
    }
    for (const auto& s : spec.series)
        if (s.points.empty())
            throw std::invalid_argument("plot: no rows for " + s.label);
    const std::string svg = render_svg(spec);
    OutputFile file(a.out);
    file.stream() << svg;
    file.commit();
    out << "wrote " << a.out << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"divorient: randomly oriented divisor graphs"};
    app.require_subcommand(1);
    app.footer(kConventionNote);

    ExactArgs exact;
    auto* c_exact = app.add_subcommand("exact", "Exact E[largest SCC] polynomial in rho by full enumeration");
    c_exact->add_option("--n", exact.n, "N (vertices 1..N)")->required()->check(CLI::PositiveNumber);
    c_exact->add_option("--rho", exact.rho, "Also evaluate at this rho")->check(CLI::Range(0.0, 1.0));
    c_exact->add_option("--out", exact.out, "Write the CSV row `N,degree,c0,...` here");
    c_exact->add_option("--edge-limit", exact.edge_limit, "Refuse graphs with more edges")->capture_default_str();
    c_exact->add_option("--threads", exact.threads, "Worker threads (0: DIVORIENT_THREADS or hardware)");
    c_exact->footer(kConventionNote);

    SimArgs sim;
    auto* c_sim = app.add_subcommand("sim", "Monte Carlo grid of largest-SCC sizes or diameters");
    c_sim->add_option("--stat", sim.stat, "lscc or diameter")->required();
    c_sim->add_option("--n", sim.n_grid, "N grid, e.g. 256..16384:256 or 5,10,20");
    c_sim->add_option("--rho", sim.rho_grid, "rho list, e.g. 0.1,0.2,0.3");
    c_sim->add_option("--samples", sim.samples, "Samples per cell");
    c_sim->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    c_sim->add_option("--out", sim.out, "CSV output path (default: stdout)");
    c_sim->add_flag("--paper-scale", sim.paper_scale,
                    "Full grids: lscc N=256m (m<=1024), 50 samples; diameter N=1024m (m<=323), 10 samples");
    c_sim->add_option("--threads", sim.threads, "Worker threads (0: DIVORIENT_THREADS or hardware)");
    c_sim->footer(kConventionNote);

    BoundsArgs bounds;
    auto* c_bounds = app.add_subcommand("bounds", "Lower bounds on E[largest SCC]");
    c_bounds->add_option("--n", bounds.n, "N")->required()->check(CLI::PositiveNumber);
    c_bounds->add_option("--rho", bounds.rho, "rho")->capture_default_str();
    c_bounds->add_option("--mode", bounds.mode, "theorem1, cor4, cor5 or all")->capture_default_str();
    c_bounds->add_option("--epsilon", bounds.epsilon, "epsilon in (0,1) for cor4");
    c_bounds->add_option("--x", bounds.x, "Fixed x for cor5 (default: best x)");
    c_bounds->add_option("--out", bounds.out, "CSV output path");
    c_bounds->footer(kConventionNote);

    TauArgs tau;
    auto* c_tau = app.add_subcommand("tau", "Divisor-function statistics and number-theory constants");
    c_tau->add_option("--n", tau.n, "N");
    c_tau->add_option("--at-least", tau.at_least, "Count n <= N with tau(n) >= threshold (repeatable)");
    c_tau->add_flag("--constants", tau.constants, "Print the prime-sum constants");
    c_tau->add_option("--out", tau.out, "Also write the report here");
    c_tau->footer(kConventionNote);

    FitArgs fit;
    auto* c_fit = app.add_subcommand("fit", "Least-squares fit mean = alpha log N + beta");
    c_fit->add_option("--in", fit.in, "sim CSV")->required();
    c_fit->add_option("--rho", fit.rho, "rho to fit (required when the file holds several)");
    c_fit->add_option("--out", fit.out, "Write `alpha,beta,mse` here");
    c_fit->footer(kConventionNote);

    PlotArgs plot;
    auto* c_plot = app.add_subcommand("plot", "Render a sim CSV as SVG");
    c_plot->add_option("--in", plot.in, "sim CSV")->required();
    c_plot->add_option("--kind", plot.kind, "scc_ratio or diameter")->required();
    c_plot->add_option("--out", plot.out, "SVG output path")->required();
    c_plot->add_flag("--fit", plot.fit, "Overlay the least-squares line (diameter)");
    c_plot->add_flag("--bound", plot.bound, "Overlay the primorial lower bound / N (scc_ratio)");
    c_plot->add_option("--rho", plot.rho, "Plot only this rho");
    c_plot->footer(kConventionNote);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (c_exact->parsed())
            return cmd_exact(exact, out);
        if (c_sim->parsed())
            return cmd_sim(sim, out);
        if (c_bounds->parsed())
            return cmd_bounds(bounds, out);
        if (c_tau->parsed())
            return cmd_tau(tau, out);
        if (c_fit->parsed())
            return cmd_fit(fit, out);
        if (c_plot->parsed())
            return cmd_plot(plot, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace divorient::cli
