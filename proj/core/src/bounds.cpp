#include "divorient/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "divorient/format.hpp"

namespace divorient {

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::theorem1: return "theorem1";
    case BoundKind::corollary4: return "cor4";
    case BoundKind::corollary5: return "cor5";
    }
    return "unknown";
}

namespace {

void require_closed_unit(double rho, const char* where)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument(std::string(where) + ": rho must lie in [0,1]");
}

void require_open_unit(double v, const char* where, const char* name)
{
    if (!(v > 0.0 && v < 1.0))
        throw std::invalid_argument(std::string(where) + ": " + name + " must lie in (0,1)");
}

double power(double base, double x)
{
    if (x == 0.0)
        return 1.0;
    if (base <= 0.0)
        return 0.0;
    return std::exp(x * std::log(base));
}

double clamp_to(double v, std::uint64_t n) { return std::clamp(v, 0.0, static_cast<double>(n)); }

}  // namespace

double triangle_factor(double x, double rho)
{
    require_closed_unit(rho, "triangle_factor");
    const double a = 2.0 * rho - rho * rho;
    const double b = 1.0 - rho * rho;
    return 1.0 - rho * power(a, x) - (1.0 - rho) * power(b, x);
}

double triangle_prob(std::uint32_t tau_m, double rho)
{
    if (tau_m < 2)
        throw std::invalid_argument("triangle_prob: tau(m) must be >= 2");
    return triangle_factor(static_cast<double>(tau_m - 2), rho);
}

double theorem1_bound(std::uint64_t x, double y, double rho)
{
    if (!(y >= 0.0))
        throw std::invalid_argument("theorem1_bound: y must be >= 0");
    return y * triangle_factor(static_cast<double>(x), rho);
}

BoundReport best_theorem1_bound(const numtheory::TauTable& table, double rho)
{
    require_closed_unit(rho, "best_theorem1_bound");
    std::map<std::uint32_t, std::uint64_t> histogram;
    for (auto t : table.values())
        ++histogram[t];

    BoundReport best{BoundKind::theorem1, table.n_max(), rho, 0.0, 0, 0.0, 0.0, true};
    std::uint64_t at_least = 0;
    for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
        at_least += it->second;  // #{n : tau(n) >= it->first}
        if (it->first < 3)
            continue;
        const std::uint64_t x = it->first - 2;
        const double v = theorem1_bound(x, static_cast<double>(at_least), rho);
        if (v > best.value_raw) {
            best.param = static_cast<double>(x);
            best.count = at_least;
            best.value_raw = v;
        }
    }
    best.value = clamp_to(best.value_raw, best.n);
    return best;
}

double corollary4_exponent(double loglog_n, double epsilon)
{
    return std::exp(std::log(2.0) * (1.0 - epsilon) * loglog_n) - 2.0;
}

double corollary4_fraction(double loglog_n, double epsilon, double rho)
{
    require_open_unit(epsilon, "corollary4", "epsilon");
    require_open_unit(rho, "corollary4", "rho");
    const double count = numtheory::hr_count_factor(loglog_n, epsilon);
    const double tri = triangle_factor(std::max(0.0, corollary4_exponent(loglog_n, epsilon)), rho);
    return std::max(0.0, count) * std::max(0.0, tri);
}

BoundReport corollary4_bound(std::uint64_t n, double epsilon, double rho)
{
    require_open_unit(epsilon, "corollary4_bound", "epsilon");
    require_open_unit(rho, "corollary4_bound", "rho");
    if (n < 3)
        throw std::invalid_argument("corollary4_bound: N must be >= 3");
    const auto hr = numtheory::hr_count_bound(n, epsilon);
    const double loglog_n = std::log(std::log(static_cast<double>(n)));
    const double tri = triangle_factor(corollary4_exponent(loglog_n, epsilon), rho);

    BoundReport r{BoundKind::corollary4, n, rho, epsilon, 0, hr.value * tri, 0.0, hr.certified};
    r.value = clamp_to(static_cast<double>(n) * corollary4_fraction(loglog_n, epsilon, rho), n);
    return r;
}

BoundReport corollary5_bound(std::uint64_t n, double rho, std::uint64_t x)
{
    require_open_unit(rho, "corollary5_bound", "rho");
    if (n == 0)
        throw std::invalid_argument("corollary5_bound: N must be >= 1");
    const std::uint64_t count = numtheory::primorial_count_bound(n, static_cast<double>(x) + 2.0);
    BoundReport r{BoundKind::corollary5, n, rho, static_cast<double>(x), count, 0.0, 0.0, true};
    r.value_raw = static_cast<double>(count) * triangle_factor(static_cast<double>(x), rho);
    r.value = clamp_to(r.value_raw, n);
    return r;
}

BoundReport best_corollary5_bound(std::uint64_t n, double rho)
{
    BoundReport best = corollary5_bound(n, rho, 0);
    for (unsigned d = 1; d < 63 && numtheory::primorial(d) <= n; ++d) {
        const std::uint64_t x = (std::uint64_t{1} << d) - 2;
        const BoundReport r = corollary5_bound(n, rho, x);
        if (r.value_raw > best.value_raw)
            best = r;
    }
    return best;
}

std::string bound_csv_header() { return "kind,n,rho,param,value_raw,value_clamped,certified"; }

std::string to_csv_row(const BoundReport& r)
{
    return to_string(r.kind) + "," + std::to_string(r.n) + "," + format_double(r.rho) + "," +
           format_double(r.param) + "," + format_double(r.value_raw) + "," + format_double(r.value) + "," +
           (r.certified ? "true" : "false");
}

}  // namespace divorient
