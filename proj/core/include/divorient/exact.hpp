#pragma once

// Exact E[#Phi(D_rho(N))] as an integer polynomial in rho, by enumerating
// every orientation of G_N.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "divorient/numtheory.hpp"

namespace divorient {

inline constexpr unsigned kDefaultEdgeLimit = 26;

/// coeffs[j] multiplies rho^j. Trailing zero coefficients are trimmed.
struct RhoPolynomial {
    std::vector<std::int64_t> coeffs;
    std::uint32_t n_source = 0;

    [[nodiscard]] std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const RhoPolynomial&, const RhoPolynomial&) = default;
};

class EdgeLimitExceeded : public std::invalid_argument {
public:
    EdgeLimitExceeded(std::uint32_t n, std::size_t edges, unsigned limit);
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_; }

private:
    std::size_t edges_;
};

struct ExactOptions {
    unsigned edge_limit = kDefaultEdgeLimit;
    unsigned threads = 0;  ///< 0: resolve_threads()
};

/// bucket[k] = sum of the largest-SCC size over all orientations with k
/// reversed edges. Vector length is edge_count + 1.
std::vector<numtheory::BigInt> lscc_flip_buckets(std::uint32_t n, const ExactOptions& options = {});

/// sum_k bucket[k] rho^k (1-rho)^(E-k), expanded exactly. Throws
/// std::overflow_error if a coefficient does not fit in 64 bits.
RhoPolynomial expand_buckets(std::span<const numtheory::BigInt> buckets, std::uint32_t n_source);

/// Throws EdgeLimitExceeded when G_N has more than options.edge_limit edges.
RhoPolynomial exact_expectation_polynomial(std::uint32_t n, const ExactOptions& options = {});

/// Horner evaluation.
double evaluate(const RhoPolynomial& p, double rho);

/// The polynomial q(rho) = p(1 - rho).
RhoPolynomial reflect(const RhoPolynomial& p);

/// `N,degree,c0,...,cd`.
std::string to_csv_row(const RhoPolynomial& p);

/// Largest SCC of a digraph on n <= 64 vertices given as out/in bitmasks.
unsigned largest_scc_bitmask(std::span<const std::uint64_t> out, std::span<const std::uint64_t> in);

}  // namespace divorient
