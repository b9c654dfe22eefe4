#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polytrace/detail/parallel.hpp"
#include "polytrace/poly.hpp"

namespace polytrace {

struct FieldOptions {
    int threads = 0;      // 0 = hardware concurrency
    int max_degree = 24;  // enumeration budget for the 2^n element scans
};

// The lexicographically smallest (as a bit pattern) irreducible of degree n.
// Irreducibles are dense, so the ascending scan terminates quickly.
inline Poly smallest_irreducible(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n == 1) return Poly::x();  // 0b10 precedes 0b11
    const auto cps = detail::rabin_checkpoints(n);
    const u64 base = u64{1} << n;
    for (u64 f = base + 1; f < 2 * base; f += 2)
        if (std::popcount(f) % 2 == 1 && detail::rabin64(f, n, cps)) return Poly::from_value(f);
    throw std::logic_error("no irreducible found");  // cannot happen
}

// F_{2^n} as residues modulo a fixed irreducible, with a precomputed trace
// mask: Tr of a residue is the parity of (residue AND mask), by linearity of
// the trace over the power basis.
class FieldCtx {
public:
    static constexpr int kMaxDegree = 62;

    static FieldCtx make(int n) {
        check_degree(n);
        return FieldCtx(n, smallest_irreducible(n).to_value());
    }

    static FieldCtx with_modulus(const Poly& modulus) {
        const auto d = modulus.degree();
        if (!d || *d < 1) throw std::invalid_argument("modulus must have degree >= 1");
        check_degree(*d);
        if (!is_irreducible(modulus)) throw std::invalid_argument("modulus must be irreducible");
        return FieldCtx(*d, modulus.to_value());
    }

    int n() const { return n_; }
    const Poly& modulus() const { return modulus_; }
    u64 trace_mask() const { return trace_mask_; }

    int trace_word(u64 a) const { return std::popcount(a & trace_mask_) & 1; }
    u64 inverse_word(u64 a) const { return detail::invmod64(a, modulus_word_); }
    u64 mul_word(u64 a, u64 b) const { return detail::mulmod64(a, b, modulus_word_); }
    u64 square_word(u64 a) const { return detail::sqmod64(a, modulus_word_); }

    int trace(const Poly& a) const {
        return trace_word(residue_value(a));
    }

    Poly inverse(const Poly& a) const {
        const u64 v = residue_value(a);
        if (v == 0) throw std::invalid_argument("zero has no inverse");
        return Poly::from_value(inverse_word(v));
    }

private:
    FieldCtx(int n, u64 modulus_word)
        : n_(n), modulus_word_(modulus_word), modulus_(Poly::from_value(modulus_word)) {
        // Tr(x^k) for each power basis element, by the defining sum of
        // Frobenius images; each sum lands in {0, 1}.
        trace_mask_ = 0;
        for (int k = 0; k < n_; ++k) {
            u64 t = u64{1} << k;
            u64 s = t;
            for (int i = 1; i < n_; ++i) {
                t = detail::sqmod64(t, modulus_word_);
                s ^= t;
            }
            if (s > 1) throw std::logic_error("trace of a basis element is not in GF(2)");
            trace_mask_ |= s << k;
        }
    }

    static void check_degree(int n) {
        if (n < 1 || n > kMaxDegree) throw std::out_of_range("field degree out of range");
    }

    u64 residue_value(const Poly& a) const {
        const auto d = a.degree();
        if (d && *d >= n_) throw std::invalid_argument("residue out of range");
        return a.to_value();
    }

    int n_;
    u64 modulus_word_;
    u64 trace_mask_;
    Poly modulus_;
};

// Counts of alpha in F_{2^n}^x with Tr(alpha) = Tr(alpha^{-1}) = i, plus the
// Kloosterman sum at 1 tallied along the way.
struct TracePairCounts {
    int n;
    u64 n0;
    u64 n1;
    long long kloosterman;
};

// Walks the nonzero residues once. Each inverse pair {a, a^{-1}} is credited
// at its canonical representative (a <= a^{-1} as bit patterns) with weight 2,
// so disjoint range partitions never double-count; a = 1 is its own inverse
// and gets weight 1.
inline TracePairCounts n_counts(const FieldCtx& ctx, int threads = 0) {
    struct Tally {
        u64 n0 = 0, n1 = 0;
        long long kl = 0;
    };
    const u64 order = u64{1} << ctx.n();
    const Tally total = detail::parallel_chunks<Tally>(
        1, order, threads,
        [&ctx](u64 lo, u64 hi) {
            Tally t;
            for (u64 a = lo; a < hi; ++a) {
                const u64 inv = ctx.inverse_word(a);
                if (inv < a) continue;
                const int w = inv == a ? 1 : 2;
                const int t1 = ctx.trace_word(a);
                const int t2 = ctx.trace_word(inv);
                if (t1 == t2) {
                    (t1 ? t.n1 : t.n0) += w;
                    t.kl += w;  // Tr(a + a^{-1}) = Tr(a) + Tr(a^{-1}) = 0
                } else {
                    t.kl -= w;
                }
            }
            return t;
        },
        [](Tally a, Tally b) {
            return Tally{a.n0 + b.n0, a.n1 + b.n1, a.kl + b.kl};
        });
    return {ctx.n(), total.n0, total.n1, total.kl};
}

inline TracePairCounts n_counts(int n, const FieldOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n > opts.max_degree) throw std::out_of_range("field enumeration budget exceeded");
    return n_counts(FieldCtx::make(n), opts.threads);
}

// N_1(n) = (2^n + 1 + K)/4 with K the tallied Kloosterman sum; exact check.
inline bool kloosterman_check(int n, const FieldOptions& opts = {}) {
    const TracePairCounts c = n_counts(n, opts);
    const detail::i128 num = (detail::i128{1} << n) + 1 + c.kloosterman;
    return num % 4 == 0 && num / 4 == static_cast<detail::i128>(c.n1);
}

// Tallies every alpha of full degree (F_2(alpha) = F_{2^n}) by the pair
// (Tr(alpha), Tr(alpha^{-1})). Each bucket count is divisible by n, and the
// quotients are the per-bucket irreducible counts; the diagonal entries are
// the G_i values. Subfield membership is tested with alpha^(2^d) = alpha at
// the maximal proper subfield degrees.
inline std::array<u64, 4> full_degree_pair_counts(const FieldCtx& ctx, int threads = 0) {
    struct Tally {
        std::array<u64, 4> c{};
    };
    const int n = ctx.n();
    std::vector<int> proper;  // maximal proper subfield degrees n/p
    for (int p : detail::distinct_prime_factors(n)) proper.push_back(n / p);

    const auto in_subfield = [&ctx](u64 a, int d) {
        u64 t = a;
        for (int i = 0; i < d; ++i) t = ctx.square_word(t);
        return t == a;
    };

    const u64 order = u64{1} << n;
    const Tally total = detail::parallel_chunks<Tally>(
        1, order, threads,
        [&](u64 lo, u64 hi) {
            Tally t;
            for (u64 a = lo; a < hi; ++a) {
                bool full = true;
                for (int d : proper)
                    if (in_subfield(a, d)) {
                        full = false;
                        break;
                    }
                if (!full) continue;
                const u64 inv = ctx.inverse_word(a);
                if (inv < a) continue;  // credit the pair once, below
                const int t1 = ctx.trace_word(a);
                const int t2 = ctx.trace_word(inv);
                t.c[2 * t1 + t2] += 1;
                if (inv != a) t.c[2 * t2 + t1] += 1;  // the partner lands in the mirrored bucket
            }
            return t;
        },
        [](Tally a, Tally b) {
            Tally m;
            for (int i = 0; i < 4; ++i) m.c[i] = a.c[i] + b.c[i];
            return m;
        });
    return total.c;
}

}  // namespace polytrace
