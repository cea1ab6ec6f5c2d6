#include "divorient/exact.hpp"

#include <bit>
#include <limits>

#include "divorient/graph.hpp"
#include "divorient/parallel.hpp"

namespace divorient {

using numtheory::BigInt;

__extension__ typedef unsigned __int128 uint128;

EdgeLimitExceeded::EdgeLimitExceeded(std::uint32_t n, std::size_t edges, unsigned limit)
    : std::invalid_argument("exact enumeration: G_" + std::to_string(n) + " has " + std::to_string(edges) +
                            " edges, above the edge limit " + std::to_string(limit)),
      edges_(edges)
{
}

namespace {

std::uint64_t closure(unsigned v, std::span<const std::uint64_t> adj, std::uint64_t mask)
{
    std::uint64_t reach = std::uint64_t{1} << v;
    std::uint64_t frontier = reach;
    while (frontier) {
        const unsigned u = static_cast<unsigned>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[u] & mask & ~reach;
        reach |= fresh;
        frontier |= fresh;
    }
    return reach;
}

}  // namespace

unsigned largest_scc_bitmask(std::span<const std::uint64_t> out, std::span<const std::uint64_t> in)
{
    const std::size_t n = out.size();
    std::uint64_t remaining = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    unsigned best = 0;
    while (remaining) {
        if (static_cast<unsigned>(std::popcount(remaining)) <= best)
            break;
        const unsigned v = static_cast<unsigned>(std::countr_zero(remaining));
        // SCCs are closed, so restricting the search to unassigned vertices is exact.
        const std::uint64_t comp = closure(v, out, remaining) & closure(v, in, remaining);
        best = std::max(best, static_cast<unsigned>(std::popcount(comp)));
        remaining &= ~comp;
    }
    return best;
}

std::vector<BigInt> lscc_flip_buckets(std::uint32_t n, const ExactOptions& options)
{
    const DivisorGraph g = build_divisor_graph(n);
    const std::size_t m = g.edge_count();
    if (m > options.edge_limit)
        throw EdgeLimitExceeded(n, m, options.edge_limit);
    if (n > 64 || m >= 63)
        throw EdgeLimitExceeded(n, m, 62);

    const auto edges = g.edges();
    const std::uint64_t total = std::uint64_t{1} << m;
    const unsigned threads = resolve_threads(options.threads);
    const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{threads} * 8);
    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(m + 1, 0));

    parallel_for(chunks, threads, [&](std::size_t c, unsigned) {
        const std::uint64_t begin = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
        const std::uint64_t end = begin + total / chunks + (c < total % chunks ? 1 : 0);
        std::vector<std::uint64_t> out(n, 0), in(n, 0);
        const std::uint64_t gray = begin ^ (begin >> 1);
        for (std::size_t i = 0; i < m; ++i) {
            const unsigned hi = edges[i].hi - 1, lo = edges[i].lo - 1;
            const bool flipped = (gray >> i) & 1u;
            const unsigned s = flipped ? lo : hi, t = flipped ? hi : lo;
            out[s] |= std::uint64_t{1} << t;
            in[t] |= std::uint64_t{1} << s;
        }
        unsigned k = static_cast<unsigned>(std::popcount(gray));
        std::uint64_t code = gray;
        auto& bucket = partial[c];
        for (std::uint64_t idx = begin;;) {
            bucket[k] += largest_scc_bitmask(out, in);
            if (++idx == end)
                break;
            // Successive Gray codes differ in bit ctz(idx).
            const auto bit = static_cast<unsigned>(std::countr_zero(idx));
            const unsigned hi = edges[bit].hi - 1, lo = edges[bit].lo - 1;
            const std::uint64_t hb = std::uint64_t{1} << hi, lb = std::uint64_t{1} << lo;
            out[hi] ^= lb;
            out[lo] ^= hb;
            in[lo] ^= hb;
            in[hi] ^= lb;
            code ^= std::uint64_t{1} << bit;
            k = ((code >> bit) & 1u) ? k + 1 : k - 1;
        }
    });

    std::vector<uint128> wide(m + 1, 0);
    for (const auto& b : partial)
        for (std::size_t k = 0; k <= m; ++k)
            wide[k] += b[k];
    std::vector<BigInt> buckets(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        BigInt v = static_cast<std::uint64_t>(wide[k] >> 64);
        v <<= 64;
        v += static_cast<std::uint64_t>(wide[k]);
        buckets[k] = v;
    }
    return buckets;
}

namespace {

std::vector<BigInt> binomial_row(std::size_t n)
{
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

RhoPolynomial to_polynomial(std::vector<BigInt> coeffs, std::uint32_t n_source)
{
    while (coeffs.size() > 1 && coeffs.back() == 0)
        coeffs.pop_back();
    RhoPolynomial p;
    p.n_source = n_source;
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& c : coeffs) {
        if (c < lo || c > hi)
            throw std::overflow_error("RhoPolynomial: coefficient exceeds 64-bit range");
        p.coeffs.push_back(static_cast<std::int64_t>(c));
    }
    return p;
}

}  // namespace

RhoPolynomial expand_buckets(std::span<const BigInt> buckets, std::uint32_t n_source)
{
    if (buckets.empty())
        throw std::invalid_argument("expand_buckets: no buckets");
    const std::size_t m = buckets.size() - 1;
    std::vector<BigInt> coeffs(m + 1, 0);
    for (std::size_t k = 0; k <= m; ++k) {
        if (buckets[k] == 0)
            continue;
        // rho^k (1-rho)^(m-k) = sum_i C(m-k, i) (-1)^i rho^(k+i)
        const auto row = binomial_row(m - k);
        for (std::size_t i = 0; i <= m - k; ++i) {
            const BigInt term = buckets[k] * row[i];
            if (i & 1u)
                coeffs[k + i] -= term;
            else
                coeffs[k + i] += term;
        }
    }
    return to_polynomial(std::move(coeffs), n_source);
}

RhoPolynomial exact_expectation_polynomial(std::uint32_t n, const ExactOptions& options)
{
    const auto buckets = lscc_flip_buckets(n, options);
    return expand_buckets(buckets, n);
}

double evaluate(const RhoPolynomial& p, double rho)
{
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * rho + static_cast<double>(*it);
    return acc;
}

RhoPolynomial reflect(const RhoPolynomial& p)
{
    // (1-rho)^j = sum_i C(j, i) (-1)^i rho^i
    std::vector<BigInt> coeffs(std::max<std::size_t>(p.coeffs.size(), 1), 0);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
        const auto row = binomial_row(j);
        for (std::size_t i = 0; i <= j; ++i) {
            const BigInt term = row[i] * p.coeffs[j];
            if (i & 1u)
                coeffs[i] -= term;
            else
                coeffs[i] += term;
        }
    }
    return to_polynomial(std::move(coeffs), p.n_source);
}

std::string to_csv_row(const RhoPolynomial& p)
{
    std::string row = std::to_string(p.n_source) + "," + std::to_string(p.degree());
    for (auto c : p.coeffs)
        row += "," + std::to_string(c);
    return row;
}

}  // namespace divorient
