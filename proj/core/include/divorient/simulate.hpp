#pragma once

// Monte Carlo grids over (N, rho).
//
// Sample j of cell (N, rho_values[i]) is drawn from the stream
// stream_seed(master_seed, N, i, j), so every cell is reproducible on its
// own and results do not depend on the worker count.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divorient {

enum class Statistic { lscc_size, diameter };

std::string to_string(Statistic s);
/// Accepts "lscc", "lscc_size" and "diameter".
Statistic parse_statistic(const std::string& text);

struct ExperimentConfig {
    std::vector<std::uint32_t> n_values;
    std::vector<double> rho_values;
    std::uint32_t samples_per_cell = 1;
    std::uint64_t master_seed = 0;
    Statistic statistic = Statistic::lscc_size;

    /// Throws std::invalid_argument on an empty or non-ascending N list,
    /// an empty rho list, rho outside [0,1], or zero samples.
    void validate() const;
};

/// Desk-scale grids: lscc N = 256m (m <= 64), 50 samples;
/// diameter N = 1024m (m <= 16), 10 samples; rho in {0.1, ..., 0.5}.
ExperimentConfig desk_grid(Statistic s, std::uint64_t master_seed);
/// Full grids: lscc N = 256m (m <= 1024), 50 samples;
/// diameter N = 1024m (m <= 323), 10 samples.
ExperimentConfig paper_grid(Statistic s, std::uint64_t master_seed);

struct SimRecord {
    std::uint32_t n = 0;
    double rho = 0.0;
    std::uint32_t samples = 0;
    double mean = 0.0;
    double variance = 0.0;  ///< unbiased; 0 when samples == 1
    Statistic statistic = Statistic::lscc_size;
    bool variance_defined = false;
};

/// Raised when a cell fails; identifies the cell.
class CellFailure : public std::runtime_error {
public:
    CellFailure(std::uint32_t n, double rho, const std::string& what);
    std::uint32_t n;
    double rho;
};

/// Per-sample statistic values of one cell.
std::vector<double> sample_cell(std::uint32_t n, double rho, std::uint64_t rho_index, std::uint32_t samples,
                                std::uint64_t master_seed, Statistic statistic, unsigned threads = 0);

/// Cells in (N ascending, rho in config order). threads == 0: resolve_threads().
std::vector<SimRecord> run_grid(const ExperimentConfig& config, unsigned threads = 0);

/// Mean and unbiased variance in a fixed summation order.
SimRecord aggregate(std::uint32_t n, double rho, Statistic statistic, std::span<const double> values);

struct FitResult {
    double alpha = 0.0;  ///< slope against log N
    double beta = 0.0;
    double mse = 0.0;
};

/// Least squares of mean against log N. Throws std::invalid_argument with
/// fewer than two distinct N.
FitResult linfit_log(std::span<const SimRecord> records);

/// (N, mean / N) per record.
std::vector<std::pair<std::uint32_t, double>> frontier_ratio(std::span<const SimRecord> records);

/// One run as stored on disk.
struct SimTable {
    Statistic statistic = Statistic::lscc_size;
    std::uint64_t master_seed = 0;
    std::vector<SimRecord> records;
};

std::string sim_csv_header(Statistic s, std::uint64_t master_seed);
void write_sim_csv(std::ostream& os, const SimTable& table);
/// Throws std::runtime_error on a missing header, bad row or no rows.
SimTable read_sim_csv(std::istream& is);

}  // namespace divorient
