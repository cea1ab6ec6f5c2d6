#include "divorient/numtheory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace divorient::numtheory {

void CompensatedSum::add(double x) noexcept
{
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

TauTable::TauTable(std::uint32_t n_max) : n_max_(n_max), tau_(std::size_t{n_max} + 1, 0)
{
    if (n_max == 0)
        throw std::invalid_argument("tau_sieve: n_max must be >= 1");
    for (std::uint64_t d = 1; d <= n_max; ++d)
        for (std::uint64_t m = d; m <= n_max; m += d)
            ++tau_[m];
}

PrimeList::PrimeList(std::uint64_t limit) : limit_(limit)
{
    if (limit > std::uint64_t{0xFFFFFFFFu})
        throw std::invalid_argument("PrimeList: limit exceeds 32-bit range");
    if (limit < 2)
        return;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p)
        if (!composite[p])
            for (std::uint64_t m = p * p; m <= limit; m += p)
                composite[m] = true;
    for (std::uint64_t p = 2; p <= limit; ++p)
        if (!composite[p])
            primes_.push_back(static_cast<std::uint32_t>(p));
}

TauTable tau_sieve(std::uint32_t n_max) { return TauTable(n_max); }

std::uint64_t count_tau_at_least(const TauTable& table, double threshold)
{
    std::uint64_t count = 0;
    for (auto t : table.values())
        if (static_cast<double>(t) >= threshold)
            ++count;
    return count;
}

std::uint64_t divisor_sum_total(const TauTable& table)
{
    std::uint64_t total = 0;
    for (auto t : table.values())
        total += t;
    return total;
}

double average_degree(const TauTable& table)
{
    const auto n = static_cast<double>(table.n_max());
    return 2.0 * (static_cast<double>(divisor_sum_total(table)) - n) / n;
}

DegreeEstimate dirichlet_degree_estimate(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("dirichlet_degree_estimate: N must be >= 1");
    const double main = 2.0 * std::log(static_cast<double>(n));
    return {main + 2.0 * (2.0 * kEulerGamma - 3.0), main + 2.0 * (2.0 * kEulerGamma - 2.0)};
}

BigInt primorial(unsigned d)
{
    BigInt product = 1;
    if (d == 0)
        return product;
    // p_d < d (ln d + ln ln d) for d >= 6.
    std::uint64_t limit = 16;
    while (true) {
        PrimeList primes(limit);
        if (primes.size() >= d) {
            for (unsigned i = 0; i < d; ++i)
                product *= primes.primes()[i];
            return product;
        }
        limit *= 2;
    }
}

unsigned primorial_index_for(double divisor_target)
{
    if (!(divisor_target >= 1.0))
        throw std::invalid_argument("primorial_index_for: D must be >= 1");
    unsigned d = 0;
    while (std::ldexp(1.0, static_cast<int>(d)) < divisor_target)
        ++d;
    return d;
}

std::uint64_t primorial_count_bound(std::uint64_t n, double divisor_target)
{
    if (n == 0)
        throw std::invalid_argument("primorial_count_bound: N must be >= 1");
    const BigInt p = primorial(primorial_index_for(divisor_target));
    if (p > n)
        return 0;
    return static_cast<std::uint64_t>(BigInt(n) / p);
}

namespace {

void check_epsilon(double epsilon, const char* where)
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument(std::string(where) + ": epsilon must lie in (0,1)");
}

double log_log(std::uint64_t n) { return std::log(std::log(static_cast<double>(n))); }

}  // namespace

bool HrThreshold::admits(std::uint64_t n) const noexcept
{
    return n >= 3 && admits_loglog(log_log(n));
}

HrThreshold hr_threshold(double epsilon)
{
    check_epsilon(epsilon, "hr_threshold");
    const double ll = kHrLogLogConstant / epsilon;
    return {std::exp(std::exp(ll)), ll};
}

double hr_count_factor(double loglog_n, double epsilon)
{
    check_epsilon(epsilon, "hr_count_factor");
    if (!(loglog_n > 0.0))
        throw std::invalid_argument("hr_count_factor: loglog N must be positive");
    return 1.0 - kHrCountConstant / (epsilon * epsilon * loglog_n);
}

HrCountBound hr_count_bound(std::uint64_t n, double epsilon)
{
    if (n < 3)
        throw std::invalid_argument("hr_count_bound: N must be >= 3");
    const double factor = hr_count_factor(log_log(n), epsilon);
    return {static_cast<double>(n) * factor, factor, hr_threshold(epsilon).admits(n)};
}

double mertens_prime_sum(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("mertens_prime_sum: N must be >= 2");
    CompensatedSum sum;
    const PrimeList primes(n);
    for (auto p : primes.primes())
        sum += 1.0 / p;
    return sum.value();
}

MertensBracket mertens_bracket(std::uint64_t n)
{
    const double sum = mertens_prime_sum(n);
    const double l = std::log(static_cast<double>(n));
    const double ll = std::log(l);
    return {ll + kMeisselMertens - 1.0 / (2.0 * l * l), sum, ll + kMeisselMertens + 1.0 / (l * l)};
}

namespace {

// Visits every prime power p^k <= n as (p, k, p^-k).
template <typename Fn>
void for_each_prime_power(std::uint64_t n, Fn&& fn)
{
    const PrimeList primes(n);
    for (std::uint64_t p : primes.primes()) {
        std::uint64_t pk = p;
        double inv = 1.0 / static_cast<double>(p);
        for (unsigned k = 1;; ++k) {
            fn(p, k, inv);
            if (pk > n / p)
                break;
            pk *= p;
            inv /= static_cast<double>(p);
        }
    }
}

}  // namespace

double e_of_n(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("e_of_n: N must be >= 2");
    CompensatedSum sum;
    for_each_prime_power(n, [&](std::uint64_t p, unsigned k, double inv_pk) {
        sum += std::log(k + 1.0) * inv_pk * (1.0 - 1.0 / static_cast<double>(p));
    });
    return sum.value();
}

double v2_of_n(std::uint64_t n)
{
    if (n < 2)
        throw std::invalid_argument("v2_of_n: N must be >= 2");
    CompensatedSum sum;
    for_each_prime_power(n, [&](std::uint64_t, unsigned k, double inv_pk) {
        const double lg = std::log(k + 1.0);
        sum += lg * lg * inv_pk;
    });
    return sum.value();
}

namespace {

template <typename Term>
double prime_power_tail(unsigned k_max, std::uint64_t p_limit, Term&& term)
{
    CompensatedSum sum;
    if (k_max < 2 || p_limit < 2)
        return 0.0;
    const PrimeList primes(p_limit);
    for (std::uint64_t p : primes.primes()) {
        const double inv_p = 1.0 / static_cast<double>(p);
        double inv_pk = inv_p * inv_p;
        for (unsigned k = 2; k <= k_max && inv_pk > 0.0; ++k) {
            sum += term(k, inv_p, inv_pk);
            inv_pk *= inv_p;
        }
    }
    return sum.value();
}

}  // namespace

double s_e_partial(unsigned k_max, std::uint64_t p_limit)
{
    return prime_power_tail(k_max, p_limit, [](unsigned k, double inv_p, double inv_pk) {
        return std::log(k + 1.0) * inv_pk * (1.0 - inv_p);
    });
}

double s_v_partial(unsigned k_max, std::uint64_t p_limit)
{
    return prime_power_tail(k_max, p_limit, [](unsigned k, double, double inv_pk) {
        const double lg = std::log(k + 1.0);
        return lg * lg * inv_pk;
    });
}

double sum_inverse_prime_squares(std::uint64_t p_limit)
{
    CompensatedSum sum;
    if (p_limit < 2)
        return 0.0;
    const PrimeList primes(p_limit);
    for (std::uint64_t p : primes.primes()) {
        const double inv = 1.0 / static_cast<double>(p);
        sum += inv * inv;
    }
    return sum.value();
}

}  // namespace divorient::numtheory
