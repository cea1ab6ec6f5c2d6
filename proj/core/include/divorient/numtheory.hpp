#pragma once

// Divisor-function sieves, primorials and the prime sums that control how
// often tau(n) is large.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divorient::numtheory {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kEulerGamma = 0.5772156649015329;
/// Meissel-Mertens constant: lim (sum_{p<=n} 1/p - loglog n).
inline constexpr double kMeisselMertens = 0.26149721284;
/// sum over all primes of 1/p^2.
inline constexpr double kPrimeZeta2 = 0.45224742004106549850;
/// Reference limits of the prime-power tails (k >= 2) of E(N) and V(N)^2.
inline constexpr double kTailE = 0.76371069;
inline constexpr double kTailV = 1.33879;

/// Constants of the effective Hardy-Ramanujan count: valid for
/// N >= exp(exp(kHrLogLogConstant / eps)), deficit kHrCountConstant / (eps^2 loglog N).
inline constexpr double kHrLogLogConstant = 1.842;
inline constexpr double kHrCountConstant = 85.165;

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept;
    CompensatedSum& operator+=(double x) noexcept { add(x); return *this; }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// tau(n) for 1 <= n <= n_max. Immutable after construction.
class TauTable {
public:
    explicit TauTable(std::uint32_t n_max);

    [[nodiscard]] std::uint32_t n_max() const noexcept { return n_max_; }
    /// 1-based: operator[](n) is tau(n).
    [[nodiscard]] std::uint32_t operator[](std::uint32_t n) const { return tau_[n]; }
    /// tau(1..n_max); element 0 is tau(1).
    [[nodiscard]] std::span<const std::uint32_t> values() const noexcept
    {
        return {tau_.data() + 1, n_max_};
    }

private:
    std::uint32_t n_max_;
    std::vector<std::uint32_t> tau_;
};

/// All primes <= limit, ascending (plain Eratosthenes).
class PrimeList {
public:
    explicit PrimeList(std::uint64_t limit);

    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }
    [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept { return primes_; }
    [[nodiscard]] std::size_t size() const noexcept { return primes_.size(); }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
};

/// Harmonic enumeration of multiples, O(n log n). Throws on n_max == 0.
TauTable tau_sieve(std::uint32_t n_max);

/// #{1 <= n <= n_max : tau(n) >= threshold}.
std::uint64_t count_tau_at_least(const TauTable& table, double threshold);

/// sum_{n <= n_max} tau(n). Equals |E(G_N)| + N.
std::uint64_t divisor_sum_total(const TauTable& table);

/// Exact mean degree of G_N: 2 (sum tau - N) / N.
double average_degree(const TauTable& table);

/// Closed-form mean-degree estimates 2 log N + c for two candidate
/// constants: 2(2 gamma - 3), and 2(2 gamma - 2), which follows from
/// Dirichlet's sum_{n<=N} tau(n) = N log N + (2 gamma - 1) N. The sieve
/// agrees with the latter.
struct DegreeEstimate {
    double alternate;  ///< 2 log N + 2(2 gamma - 3)
    double dirichlet;
};
DegreeEstimate dirichlet_degree_estimate(std::uint64_t n);

/// Product of the first d primes; primorial(0) == 1.
BigInt primorial(unsigned d);

/// Smallest d with 2^d >= divisor_target, i.e. ceil(log2(D)), computed exactly.
unsigned primorial_index_for(double divisor_target);

/// floor(N / p_d#) with d = ceil(log2 D): a certified lower bound on
/// #{n <= N : tau(n) >= D}.
std::uint64_t primorial_count_bound(std::uint64_t n, double divisor_target);

/// Validity threshold exp(exp(1.842 / eps)). `value` is +inf when it does
/// not fit a double; `loglog` is always exact and is what comparisons use.
struct HrThreshold {
    double value;
    double loglog;

    [[nodiscard]] bool admits_loglog(double loglog_n) const noexcept { return loglog_n >= loglog; }
    [[nodiscard]] bool admits(std::uint64_t n) const noexcept;
};
HrThreshold hr_threshold(double epsilon);

/// N (1 - 85.165 / (eps^2 loglog N)), unclamped.
struct HrCountBound {
    double value;
    double factor;   ///< 1 - 85.165 / (eps^2 loglog N)
    bool certified;  ///< N >= hr_threshold(eps)
};
HrCountBound hr_count_bound(std::uint64_t n, double epsilon);
/// The same bound in loglog space, for N too large to represent.
double hr_count_factor(double loglog_n, double epsilon);

/// sum_{p <= N} 1/p.
double mertens_prime_sum(std::uint64_t n);

/// Rosser-Schoenfeld bracket around sum_{p<=N} 1/p.
struct MertensBracket {
    double lower;
    double sum;
    double upper;
    [[nodiscard]] bool holds() const noexcept { return lower < sum && sum < upper; }
};
MertensBracket mertens_bracket(std::uint64_t n);

/// E(N) = sum_{p^k <= N} log(k+1) p^-k (1 - 1/p).
double e_of_n(std::uint64_t n);
/// V(N)^2 = sum_{p^k <= N} log(k+1)^2 p^-k.
double v2_of_n(std::uint64_t n);

/// Truncations (k <= k_max, p <= p_limit) of the k >= 2 tails of E and V^2.
double s_e_partial(unsigned k_max, std::uint64_t p_limit);
double s_v_partial(unsigned k_max, std::uint64_t p_limit);

/// sum_{p <= p_limit} 1/p^2.
double sum_inverse_prime_squares(std::uint64_t p_limit);

}  // namespace divorient::numtheory
