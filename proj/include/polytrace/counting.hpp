#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytrace/field.hpp"
#include "polytrace/poly.hpp"

namespace polytrace {

inline int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
    int sign = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;  // squared prime factor
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

namespace detail {

// The divisor-sum formulas are evaluated exactly in 128-bit integers; the
// final division is always exact and the quotients fit u64 for n <= 126.
inline u64 exact_quotient(i128 sum, int divisor, const char* what) {
    if (sum % divisor != 0 || sum < 0)
        throw std::logic_error(std::string(what) + ": divisor sum does not divide exactly");
    return static_cast<u64>(sum / divisor);
}

}  // namespace detail

// Number of irreducibles of degree n: (1/n) sum over d | n of mu(d) 2^(n/d).
inline u64 irreducible_count(int n) {
    if (n < 1 || n > 126) throw std::invalid_argument("degree out of range");
    detail::i128 s = 0;
    for (int d : divisors(n)) s += static_cast<detail::i128>(mobius(d)) * (detail::i128{1} << (n / d));
    return detail::exact_quotient(s, n, "irreducible_count");
}

// Number of trace-1 irreducibles of degree n: (1/2n) sum over odd d | n.
inline u64 trace1_count(int n) {
    if (n < 1 || n > 126) throw std::invalid_argument("degree out of range");
    detail::i128 s = 0;
    for (int d : divisors(n))
        if (d % 2 == 1) s += static_cast<detail::i128>(mobius(d)) * (detail::i128{1} << (n / d));
    return detail::exact_quotient(s, 2 * n, "trace1_count");
}

// |S_{1,1}(n)| - |S_{0,0}(n)|: zero for odd n, the degree-n/2 trace-1 count
// for even n.
inline u64 diff_count(int n) {
    if (n < 2) throw std::invalid_argument("diff_count needs n >= 2");
    return n % 2 ? 0 : trace1_count(n / 2);
}

// Cached N_i / H_i / G_i values across the divisor lattice of a target degree
// n = 2^k * m with m odd. The H tables exist only for even n, keyed by the
// odd divisors of m at the fixed 2-adic valuation k.
struct CountingTables {
    int n = 0;
    int two_adic = 0;
    int odd_part = 1;
    std::map<int, u64> n0, n1;  // field degree -> N_i
    std::map<int, u64> h0, h1;  // odd divisor of odd_part -> H_i
    std::map<int, u64> g0, g1;  // degree -> G_i
};

inline CountingTables build_counting_tables(int n, const FieldOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("counting tables need n >= 2");
    CountingTables t;
    t.n = n;
    int m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++t.two_adic;
    }
    t.odd_part = m;

    const auto fill_n = [&](int d) {
        const TracePairCounts c = n_counts(d, opts);
        t.n0[d] = c.n0;
        t.n1[d] = c.n1;
    };

    if (t.two_adic == 0) {
        // Odd case: Mobius inversion of N_i directly over the divisors of n.
        for (int d : divisors(n)) fill_n(d);
        for (int d : divisors(n)) {
            detail::i128 s0 = 0, s1 = 0;
            for (int e : divisors(d)) {
                s0 += static_cast<detail::i128>(mobius(e)) * t.n0.at(d / e);
                s1 += static_cast<detail::i128>(mobius(e)) * t.n1.at(d / e);
            }
            if (s0 < 0 || s1 < 0) throw std::logic_error("negative G value");
            t.g0[d] = static_cast<u64>(s0);
            t.g1[d] = static_cast<u64>(s1);
        }
        return t;
    }

    // Even case: arguments 2^k e for e | m. H_1(e) = N_1(2^k e);
    // H_0(e) = N_0(2^k e) - |F^x_{2^(2^(k-1) e)}|; then G_i by inversion of H.
    const int scale = 1 << t.two_adic;
    const int half = 1 << (t.two_adic - 1);
    for (int e : divisors(m)) fill_n(scale * e);
    for (int e : divisors(m)) {
        t.h1[e] = t.n1.at(scale * e);
        const u64 sub = (u64{1} << (half * e)) - 1;
        if (t.n0.at(scale * e) < sub) throw std::logic_error("H_0 underflow");
        t.h0[e] = t.n0.at(scale * e) - sub;
    }
    for (int e : divisors(m)) {
        detail::i128 s0 = 0, s1 = 0;
        for (int d : divisors(e)) {
            s0 += static_cast<detail::i128>(mobius(e / d)) * t.h0.at(d);
            s1 += static_cast<detail::i128>(mobius(e / d)) * t.h1.at(d);
        }
        if (s0 < 0 || s1 < 0) throw std::logic_error("negative G value");
        t.g0[scale * e] = static_cast<u64>(s0);
        t.g1[scale * e] = static_cast<u64>(s1);
    }
    return t;
}

// (G_0(n), G_1(n)): the counts of full-degree field elements with both traces
// 0 resp. 1; each is divisible by n.
inline std::pair<u64, u64> g_counts(int n, const FieldOptions& opts = {}) {
    const CountingTables t = build_counting_tables(n, opts);
    return {t.g0.at(n), t.g1.at(n)};
}

// The four-bucket prediction from the analytic pipeline: the diagonal from
// G_i(n)/n, the off-diagonal split evenly from the total via the reciprocal
// bijection between S_{0,1} and S_{1,0}.
struct PredictedRow {
    int n;
    u64 s00, s01, s10, s11;
    std::string method = "analytic+field";
};

inline PredictedRow predicted_row(int n, const FieldOptions& opts = {}) {
    const auto [g0, g1] = g_counts(n, opts);
    if (g0 % n != 0 || g1 % n != 0) throw std::logic_error("G_i not divisible by the degree");
    PredictedRow row;
    row.n = n;
    row.s00 = g0 / n;
    row.s11 = g1 / n;
    const u64 total = irreducible_count(n);
    if (total < row.s00 + row.s11 || (total - row.s00 - row.s11) % 2 != 0)
        throw std::logic_error("off-diagonal split is not an even remainder");
    row.s01 = row.s10 = (total - row.s00 - row.s11) / 2;
    return row;
}

}  // namespace polytrace
