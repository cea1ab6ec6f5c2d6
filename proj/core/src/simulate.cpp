#include "divorient/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "divorient/diameter.hpp"
#include "divorient/format.hpp"
#include "divorient/graph.hpp"
#include "divorient/numtheory.hpp"
#include "divorient/parallel.hpp"
#include "divorient/scc.hpp"

namespace divorient {

std::string to_string(Statistic s) { return s == Statistic::lscc_size ? "lscc_size" : "diameter"; }

Statistic parse_statistic(const std::string& text)
{
    if (text == "lscc" || text == "lscc_size")
        return Statistic::lscc_size;
    if (text == "diameter")
        return Statistic::diameter;
    throw std::invalid_argument("unknown statistic '" + text + "' (expected lscc or diameter)");
}

void ExperimentConfig::validate() const
{
    if (n_values.empty())
        throw std::invalid_argument("experiment: no N values");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == 0)
            throw std::invalid_argument("experiment: N must be >= 1");
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("experiment: N values must be strictly ascending");
    }
    if (rho_values.empty())
        throw std::invalid_argument("experiment: no rho values");
    for (double r : rho_values)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument("experiment: rho must lie in [0,1]");
    if (samples_per_cell == 0)
        throw std::invalid_argument("experiment: samples per cell must be >= 1");
}

namespace {

ExperimentConfig grid(Statistic s, std::uint64_t seed, std::uint32_t step, std::uint32_t count, std::uint32_t samples)
{
    ExperimentConfig c;
    for (std::uint32_t m = 1; m <= count; ++m)
        c.n_values.push_back(step * m);
    c.rho_values = {0.1, 0.2, 0.3, 0.4, 0.5};
    c.samples_per_cell = samples;
    c.master_seed = seed;
    c.statistic = s;
    return c;
}

}  // namespace

ExperimentConfig desk_grid(Statistic s, std::uint64_t master_seed)
{
    return s == Statistic::lscc_size ? grid(s, master_seed, 256, 64, 50) : grid(s, master_seed, 1024, 16, 10);
}

ExperimentConfig paper_grid(Statistic s, std::uint64_t master_seed)
{
    return s == Statistic::lscc_size ? grid(s, master_seed, 256, 1024, 50) : grid(s, master_seed, 1024, 323, 10);
}

CellFailure::CellFailure(std::uint32_t n_, double rho_, const std::string& what)
    : std::runtime_error("cell (N=" + std::to_string(n_) + ", rho=" + format_double(rho_) + "): " + what),
      n(n_), rho(rho_)
{
}

namespace {

struct Scratch {
    OrientationBuffers orient;
    SccWorkspace scc;
    IfubSolver ifub;
};

double measure(const DivisorGraph& g, double rho, SeedSpec seed, std::uint64_t sample, Statistic statistic,
               Scratch& s)
{
    const Orientation o = sample_orientation(g, rho, seed, sample);
    const Digraph& d = s.orient.build(g, o);
    const ComponentLabeling& labeling = s.scc.run(d);
    if (statistic == Statistic::lscc_size)
        return largest_scc_size(labeling);
    const InducedSubgraph core = restrict_to_largest_scc(d, labeling);
    return s.ifub.diameter(core.digraph);
}

// values[r][j] for every rho index r and sample j of one N.
std::vector<std::vector<double>> sample_n(const DivisorGraph& g, std::span<const double> rhos,
                                          std::span<const std::uint64_t> rho_indices, std::uint32_t samples,
                                          std::uint64_t master_seed, Statistic statistic, unsigned threads)
{
    std::vector<std::vector<double>> values(rhos.size(), std::vector<double>(samples));
    std::vector<std::unique_ptr<Scratch>> scratch(std::max(threads, 1u));
    for (auto& s : scratch)
        s = std::make_unique<Scratch>();
    const std::size_t tasks = rhos.size() * std::size_t{samples};
    parallel_for(tasks, threads, [&](std::size_t task, unsigned worker) {
        const std::size_t r = task / samples;
        const std::uint32_t j = static_cast<std::uint32_t>(task % samples);
        try {
            values[r][j] = measure(g, rhos[r], SeedSpec{master_seed, rho_indices[r]}, j, statistic, *scratch[worker]);
        } catch (const std::exception& e) {
            throw CellFailure(g.n(), rhos[r], e.what());
        }
    });
    return values;
}

}  // namespace

std::vector<double> sample_cell(std::uint32_t n, double rho, std::uint64_t rho_index, std::uint32_t samples,
                                std::uint64_t master_seed, Statistic statistic, unsigned threads)
{
    const DivisorGraph g = build_divisor_graph(n);
    const double rhos[] = {rho};
    const std::uint64_t idx[] = {rho_index};
    return sample_n(g, rhos, idx, samples, master_seed, statistic, resolve_threads(threads))[0];
}

SimRecord aggregate(std::uint32_t n, double rho, Statistic statistic, std::span<const double> values)
{
    SimRecord r;
    r.n = n;
    r.rho = rho;
    r.statistic = statistic;
    r.samples = static_cast<std::uint32_t>(values.size());
    if (values.empty())
        return r;
    numtheory::CompensatedSum sum;
    for (double v : values)
        sum += v;
    r.mean = sum.value() / static_cast<double>(values.size());
    if (values.size() > 1) {
        numtheory::CompensatedSum sq;
        for (double v : values)
            sq += (v - r.mean) * (v - r.mean);
        r.variance = sq.value() / static_cast<double>(values.size() - 1);
        r.variance_defined = true;
    }
    return r;
}

std::vector<SimRecord> run_grid(const ExperimentConfig& config, unsigned threads)
{
    config.validate();
    threads = resolve_threads(threads);
    std::vector<std::uint64_t> rho_indices(config.rho_values.size());
    for (std::size_t i = 0; i < rho_indices.size(); ++i)
        rho_indices[i] = i;

    std::vector<SimRecord> records;
    records.reserve(config.n_values.size() * config.rho_values.size());
    for (std::uint32_t n : config.n_values) {
        const DivisorGraph g = build_divisor_graph(n);
        const auto values = sample_n(g, config.rho_values, rho_indices, config.samples_per_cell,
                                     config.master_seed, config.statistic, threads);
        for (std::size_t r = 0; r < config.rho_values.size(); ++r)
            records.push_back(aggregate(n, config.rho_values[r], config.statistic, values[r]));
    }
    return records;
}

FitResult linfit_log(std::span<const SimRecord> records)
{
    std::set<std::uint32_t> distinct;
    for (const auto& r : records)
        distinct.insert(r.n);
    if (distinct.size() < 2)
        throw std::invalid_argument("linfit_log: need at least two distinct N values");

    const double count = static_cast<double>(records.size());
    numtheory::CompensatedSum sx, sy;
    for (const auto& r : records) {
        sx += std::log(static_cast<double>(r.n));
        sy += r.mean;
    }
    const double mx = sx.value() / count;
    const double my = sy.value() / count;
    numtheory::CompensatedSum sxx, sxy;
    for (const auto& r : records) {
        const double dx = std::log(static_cast<double>(r.n)) - mx;
        sxx += dx * dx;
        sxy += dx * (r.mean - my);
    }
    FitResult fit;
    fit.alpha = sxy.value() / sxx.value();
    fit.beta = my - fit.alpha * mx;
    numtheory::CompensatedSum sse;
    for (const auto& r : records) {
        const double e = r.mean - (fit.alpha * std::log(static_cast<double>(r.n)) + fit.beta);
        sse += e * e;
    }
    fit.mse = sse.value() / count;
    return fit;
}

std::vector<std::pair<std::uint32_t, double>> frontier_ratio(std::span<const SimRecord> records)
{
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.emplace_back(r.n, r.mean / static_cast<double>(r.n));
    return out;
}

std::string sim_csv_header(Statistic s, std::uint64_t master_seed)
{
    return "# divorient v1, statistic=" + to_string(s) + ", master_seed=" + std::to_string(master_seed) +
           ", diameter_convention=largest_scc";
}

void write_sim_csv(std::ostream& os, const SimTable& table)
{
    os << sim_csv_header(table.statistic, table.master_seed) << '\n';
    os << "n,rho,samples,mean,variance\n";
    for (const auto& r : table.records)
        os << r.n << ',' << format_double(r.rho) << ',' << r.samples << ',' << format_double(r.mean) << ','
           << format_double(r.variance) << '\n';
}

namespace {

std::string header_field(const std::string& header, const std::string& key)
{
    const auto pos = header.find(key + "=");
    if (pos == std::string::npos)
        throw std::runtime_error("sim csv: header lacks '" + key + "'");
    const auto start = pos + key.size() + 1;
    const auto end = header.find(',', start);
    return header.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

SimTable read_sim_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("# divorient v1", 0) != 0)
        throw std::runtime_error("sim csv: missing '# divorient v1' header");
    SimTable table;
    table.statistic = parse_statistic(header_field(line, "statistic"));
    try {
        table.master_seed = std::stoull(header_field(line, "master_seed"));
    } catch (const std::logic_error&) {
        throw std::runtime_error("sim csv: bad master_seed");
    }
    if (!std::getline(is, line) || line != "n,rho,samples,mean,variance")
        throw std::runtime_error("sim csv: missing column line");

    std::size_t line_no = 2;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ','))
            fields.push_back(field);
        if (fields.size() != 5)
            throw std::runtime_error("sim csv: line " + std::to_string(line_no) + " has " +
                                     std::to_string(fields.size()) + " fields");
        SimRecord r;
        try {
            r.n = static_cast<std::uint32_t>(std::stoul(fields[0]));
            r.rho = std::stod(fields[1]);
            r.samples = static_cast<std::uint32_t>(std::stoul(fields[2]));
            r.mean = std::stod(fields[3]);
            r.variance = std::stod(fields[4]);
        } catch (const std::logic_error&) {
            throw std::runtime_error("sim csv: unparseable value on line " + std::to_string(line_no));
        }
        if (!std::isfinite(r.mean) || !std::isfinite(r.variance) || r.n == 0)
            throw std::runtime_error("sim csv: invalid value on line " + std::to_string(line_no));
        r.statistic = table.statistic;
        r.variance_defined = r.samples > 1;
        table.records.push_back(r);
    }
    if (table.records.empty())
        throw std::runtime_error("sim csv: no data rows");
    return table;
}

}  // namespace divorient
