#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polytrace/detail/parallel.hpp"
#include "polytrace/poly.hpp"
#include "polytrace/table1.hpp"

namespace polytrace {

// Degrees 27..32 are opt-in: the scan at n = 32 is ~2^30 irreducibility tests.
inline constexpr int kDefaultMaxDegree = 26;
inline constexpr int kLongRunMaxDegree = 32;

struct EnumOptions {
    int threads = 0;                    // 0 = hardware concurrency
    int max_degree = kDefaultMaxDegree;
};

struct BucketCounts {
    int n = 0;
    std::array<u64, 4> counts{};  // indexed by Bucket::index()
    std::string method = "enumerate";
    double elapsed_ms = 0;

    u64 total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
};

namespace detail {

inline void check_enum_degree(int n, const EnumOptions& opts) {
    if (n < 2 || n > opts.max_degree || n > 62)
        throw std::out_of_range("degree outside the enumeration budget");
}

// Scans the monic degree-n candidates with constant term 1 whose middle bits
// encode t in [lo, hi), calling visit(pattern) for each irreducible one.
// Candidates with an even number of terms are skipped up front: any
// irreducible of degree >= 2 has an odd number of terms, since an even count
// would make x+1 a factor.
template <class Visit>
void scan_irreducibles(int n, u64 lo, u64 hi, const std::vector<int>& cps, Visit&& visit) {
    const u64 base = (u64{1} << n) | 1;
    for (u64 t = lo; t < hi; ++t) {
        const u64 f = base | (t << 1);
        if (std::popcount(f) % 2 == 0) continue;
        if (rabin64(f, n, cps)) visit(f);
    }
}

inline int bucket_index_of_word(u64 f, int n) {
    return static_cast<int>(((f >> (n - 1)) & 1) * 2 + ((f >> 1) & 1));
}

}  // namespace detail

// Exact bucket counts for degree n by exhaustive scan; the ground truth the
// other routes are checked against. The candidate space is split into
// contiguous ranges of the middle bits and partial counts merge by addition,
// so results do not depend on the parallelism.
inline BucketCounts classify_all(int n, const EnumOptions& opts = {}) {
    detail::check_enum_degree(n, opts);
    const auto start = std::chrono::steady_clock::now();
    const auto cps = detail::rabin_checkpoints(n);

    using Tally = std::array<u64, 4>;
    const Tally counts = detail::parallel_chunks<Tally>(
        0, u64{1} << (n - 1), opts.threads,
        [n, &cps](u64 lo, u64 hi) {
            Tally t{};
            detail::scan_irreducibles(n, lo, hi, cps,
                                      [&](u64 f) { ++t[detail::bucket_index_of_word(f, n)]; });
            return t;
        },
        [](Tally a, Tally b) {
            for (int i = 0; i < 4; ++i) a[i] += b[i];
            return a;
        });

    BucketCounts result;
    result.n = n;
    result.counts = counts;
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// The members of S_{i,j}(n), sorted ascending by bit pattern. Chunks are
// concatenated in range order, so the scan order is the sort order.
inline std::vector<Poly> enumerate_bucket(int n, Bucket b, const EnumOptions& opts = {}) {
    detail::check_enum_degree(n, opts);
    const auto cps = detail::rabin_checkpoints(n);
    const int want = b.index();

    using Part = std::vector<u64>;
    const Part values = detail::parallel_chunks<Part>(
        0, u64{1} << (n - 1), opts.threads,
        [n, want, &cps](u64 lo, u64 hi) {
            Part p;
            detail::scan_irreducibles(n, lo, hi, cps, [&](u64 f) {
                if (detail::bucket_index_of_word(f, n) == want) p.push_back(f);
            });
            return p;
        },
        [](Part a, Part b2) {
            a.insert(a.end(), b2.begin(), b2.end());
            return a;
        });

    std::vector<Poly> out;
    out.reserve(values.size());
    for (u64 v : values) out.push_back(Poly::from_value(v));
    return out;
}

// All irreducibles of degree n in ascending bit-pattern order. Single
// threaded; meant for the small degrees the transform and SRI machinery
// works with.
template <class Fn>
void for_each_irreducible(int n, Fn&& fn) {
    if (n < 1 || n > 62) throw std::out_of_range("degree out of range");
    if (n == 1) {
        fn(Poly::x());
        fn(add(Poly::x(), Poly::one()));
        return;
    }
    const auto cps = detail::rabin_checkpoints(n);
    detail::scan_irreducibles(n, 0, u64{1} << (n - 1), cps,
                              [&](u64 f) { fn(Poly::from_value(f)); });
}

struct RowCheck {
    int n = 0;
    std::array<u64, 4> expected{};
    std::array<u64, 4> actual{};
    bool pass = false;
    double elapsed_ms = 0;
};

struct TableReport {
    std::vector<RowCheck> rows;
    bool all_pass = true;
};

// Compares the exhaustive scan against the embedded reference table row by
// row.
inline TableReport verify_table(int n_min, int n_max, const EnumOptions& opts = {}) {
    if (n_min < 2 || n_max > 32 || n_min > n_max)
        throw std::out_of_range("verify range must lie within 2..32");
    TableReport report;
    for (int n = n_min; n <= n_max; ++n) {
        const ReferenceRow* ref = reference_row(n);
        const BucketCounts actual = classify_all(n, opts);
        RowCheck check;
        check.n = n;
        check.expected = ref->counts;
        check.actual = actual.counts;
        check.pass = check.expected == check.actual;
        check.elapsed_ms = actual.elapsed_ms;
        report.all_pass = report.all_pass && check.pass;
        report.rows.push_back(check);
    }
    return report;
}

}  // namespace polytrace
