#pragma once

// Closed-form lower bounds on E[#Phi(D_rho(N))].
//
// Every bound has the shape  count * (1 - rho a^x - (1-rho) b^x)  with
// a = 2 rho - rho^2 and b = 1 - rho^2: `count` integers m <= N have at least
// x + 2 divisors, and each such m joins the component of 1 through one of
// its divisor triangles {1, d, m} with at least the given probability.

#include <cstdint>
#include <string>

#include "divorient/numtheory.hpp"

namespace divorient {

enum class BoundKind { theorem1, corollary4, corollary5 };

std::string to_string(BoundKind kind);

struct BoundReport {
    BoundKind kind = BoundKind::theorem1;
    std::uint64_t n = 0;
    double rho = 0.0;
    double param = 0.0;       ///< x for theorem1/corollary5, epsilon for corollary4
    std::uint64_t count = 0;  ///< y (theorem1) or floor(N / p_d#) (corollary5)
    double value_raw = 0.0;   ///< formula value before clamping
    double value = 0.0;       ///< clamped to [0, N]
    bool certified = false;
};

/// 1 - rho (2rho - rho^2)^x - (1-rho)(1-rho^2)^x for real x >= 0. Powers are
/// taken in log space so astronomically large x underflows cleanly to 0.
double triangle_factor(double x, double rho);

/// Lower bound on P[m in Phi_1] for an m with tau(m) = tau_m >= 2.
double triangle_prob(std::uint32_t tau_m, double rho);

/// y * triangle_factor(x, rho). The caller vouches for #{n : tau(n) - 2 >= x} >= y.
double theorem1_bound(std::uint64_t x, double y, double rho);

/// Maximizes theorem1_bound over the steps of y(x) = #{n : tau(n) >= x + 2}.
BoundReport best_theorem1_bound(const numtheory::TauTable& table, double rho);

/// x_N = log(N)^(log 2 (1 - eps)) - 2 evaluated from loglog N.
double corollary4_exponent(double loglog_n, double epsilon);

/// Corollary-4 bound divided by N, for N given only through loglog N.
/// Each factor is clamped at 0 before multiplying.
double corollary4_fraction(double loglog_n, double epsilon, double rho);

/// Effective Hardy-Ramanujan count combined with the triangle factor at x_N.
/// certified iff N >= exp(exp(1.842 / eps)). Rejects eps, rho outside (0,1).
BoundReport corollary4_bound(std::uint64_t n, double epsilon, double rho);

/// floor(N / p_d#) * triangle_factor(x, rho), d = ceil(log2(x + 2)). Always certified.
BoundReport corollary5_bound(std::uint64_t n, double rho, std::uint64_t x);

/// Best corollary-5 bound over x. Within one d the factor grows with x, so
/// only x = 2^d - 2 needs checking for each d with p_d# <= N.
BoundReport best_corollary5_bound(std::uint64_t n, double rho);

/// `kind,N,rho,param,value_raw,value_clamped,certified`
std::string bound_csv_header();
std::string to_csv_row(const BoundReport& report);

}  // namespace divorient
