#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

// Word-level GF(2)[x] kernels. Bit k of a word is the coefficient of x^k.
// These back both the Poly class and the enumeration hot loops; callers are
// responsible for keeping degrees inside the stated widths.

namespace polytrace::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// degree of a nonzero word
constexpr int deg64(u64 v) { return 63 - std::countl_zero(v); }

constexpr int deg128(u128 v) {
    const u64 hi = static_cast<u64>(v >> 64);
    return hi ? 64 + deg64(hi) : deg64(static_cast<u64>(v));
}

constexpr std::array<std::uint16_t, 256> make_spread8() {
    std::array<std::uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        unsigned s = 0;
        for (int i = 0; i < 8; ++i)
            if (b >> i & 1u) s |= 1u << (2 * i);
        t[b] = static_cast<std::uint16_t>(s);
    }
    return t;
}

// kSpread8[b] holds the bits of b moved to even positions: bit i -> bit 2i.
inline constexpr std::array<std::uint16_t, 256> kSpread8 = make_spread8();

// square of a polynomial of degree <= 31
inline u64 square32(u64 v) {
    return static_cast<u64>(kSpread8[v & 0xff])
         | static_cast<u64>(kSpread8[(v >> 8) & 0xff]) << 16
         | static_cast<u64>(kSpread8[(v >> 16) & 0xff]) << 32
         | static_cast<u64>(kSpread8[(v >> 24) & 0xff]) << 48;
}

// square of a polynomial of degree <= 63
inline u128 square64(u64 v) {
    return static_cast<u128>(square32(v >> 32)) << 64 | square32(v & 0xffffffffu);
}

// carryless 64x64 -> 128 product
inline u128 clmul64(u64 a, u64 b) {
    u128 r = 0;
    const u128 aa = a;
    while (b) {
        r ^= aa << std::countr_zero(b);
        b &= b - 1;
    }
    return r;
}

// remainder of a (any degree <= 127) modulo nonzero m (degree <= 63)
inline u64 rem128(u128 a, u64 m) {
    const int md = deg64(m);
    for (;;) {
        const u64 hi = static_cast<u64>(a >> 64);
        if (hi != 0) {
            a ^= static_cast<u128>(m) << (64 + deg64(hi) - md);
            continue;
        }
        u64 lo = static_cast<u64>(a);
        while (lo != 0 && deg64(lo) >= md) lo ^= m << (deg64(lo) - md);
        return lo;
    }
}

inline u64 rem64(u64 a, u64 m) {
    const int md = deg64(m);
    while (a != 0 && deg64(a) >= md) a ^= m << (deg64(a) - md);
    return a;
}

inline u64 sqmod64(u64 a, u64 m) { return rem128(square64(a), m); }
inline u64 mulmod64(u64 a, u64 b, u64 m) { return rem128(clmul64(a, b), m); }

inline u64 gcd64(u64 a, u64 b) {
    while (b != 0) {
        const int db = deg64(b);
        while (a != 0 && deg64(a) >= db) a ^= b << (deg64(a) - db);
        std::swap(a, b);
    }
    return a;
}

// inverse of a modulo f; f irreducible of degree <= 62, a nonzero, deg a < deg f.
// Extended Euclid tracking the cofactor of a only: s_i * a = r_i (mod f).
inline u64 invmod64(u64 a, u64 f) {
    u64 r0 = f, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const int d1 = deg64(r1);
        while (r0 != 0 && deg64(r0) >= d1) {
            const int sh = deg64(r0) - d1;
            r0 ^= r1 << sh;
            s0 ^= s1 << sh;
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    return s0;
}

inline std::vector<int> distinct_prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin irreducibility checkpoints for degree n: the proper checkpoints n/p
// plus n itself, strictly ascending.
inline std::vector<int> rabin_checkpoints(int n) {
    std::vector<int> cps;
    for (int p : distinct_prime_factors(n)) cps.push_back(n / p);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    cps.push_back(n);
    return cps;
}

// Rabin test for a monic word-sized f of degree n >= 1:
// x^(2^n) = x mod f, and gcd(x^(2^(n/p)) - x, f) = 1 for every prime p | n.
inline bool rabin64(u64 f, int n, const std::vector<int>& cps) {
    if (n == 1) return true;
    u64 h = 2;  // the polynomial x
    std::size_t ci = 0;
    for (int k = 1; k <= n; ++k) {
        h = sqmod64(h, f);
        if (k == cps[ci]) {
            ++ci;
            if (k == n) return h == 2;
            if (gcd64(h ^ 2u, f) != 1) return false;
        }
    }
    return false;  // unreachable: the final checkpoint is n
}

inline bool rabin64(u64 f, int n) { return rabin64(f, n, rabin_checkpoints(n)); }

}  // namespace polytrace::detail
