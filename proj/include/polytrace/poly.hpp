#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polytrace/detail/gf2x64.hpp"

namespace polytrace {

using detail::u64;

// A binary polynomial as a packed coefficient bit sequence: bit k of word k/64
// is the coefficient of x^k. Storage is canonical (no trailing zero words), so
// equal polynomials are bitwise equal and compare cheaply.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return {}; }
    static Poly one() { return from_value(1); }
    static Poly x() { return from_value(2); }

    static Poly from_value(u64 bits) {
        Poly p;
        if (bits) p.words_.push_back(bits);
        return p;
    }

    static Poly from_words(std::vector<u64> words) {
        Poly p;
        p.words_ = std::move(words);
        p.trim();
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    // The zero polynomial has no degree; everything else reports its top bit.
    std::optional<int> degree() const {
        if (words_.empty()) return std::nullopt;
        return static_cast<int>(64 * (words_.size() - 1)) + detail::deg64(words_.back());
    }

    bool coeff(int k) const {
        if (k < 0) return false;
        const std::size_t w = static_cast<std::size_t>(k) / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (k % 64)) & 1u;
    }

    void set_coeff(int k, bool value) {
        if (k < 0) throw std::invalid_argument("negative exponent");
        const std::size_t w = static_cast<std::size_t>(k) / 64;
        if (value) {
            if (w >= words_.size()) words_.resize(w + 1, 0);
            words_[w] |= u64{1} << (k % 64);
        } else if (w < words_.size()) {
            words_[w] &= ~(u64{1} << (k % 64));
            trim();
        }
    }

    // Value view for word-sized polynomials (degree <= 63).
    u64 to_value() const {
        if (words_.size() > 1) throw std::overflow_error("polynomial does not fit one word");
        return words_.empty() ? 0 : words_[0];
    }

    const std::vector<u64>& words() const { return words_; }

    friend bool operator==(const Poly&, const Poly&) = default;

    // Orders by bit pattern interpreted as an integer.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (a.words_.size() != b.words_.size())
            return a.words_.size() <=> b.words_.size();
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<u64> words_;
};

namespace detail {

// acc ^= src << shift, growing acc as needed
inline void xor_shifted(std::vector<u64>& acc, const std::vector<u64>& src, int shift) {
    const int ws = shift / 64, bs = shift % 64;
    const std::size_t need = src.size() + ws + (bs ? 1 : 0);
    if (acc.size() < need) acc.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) acc[i + ws] ^= src[i];
    } else {
        u64 carry = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            acc[i + ws] ^= (src[i] << bs) | carry;
            carry = src[i] >> (64 - bs);
        }
        acc[src.size() + ws] ^= carry;
    }
}

}  // namespace detail

inline Poly add(const Poly& a, const Poly& b) {
    std::vector<u64> w(std::max(a.words().size(), b.words().size()), 0);
    for (std::size_t i = 0; i < a.words().size(); ++i) w[i] = a.words()[i];
    for (std::size_t i = 0; i < b.words().size(); ++i) w[i] ^= b.words()[i];
    return Poly::from_words(std::move(w));
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<u64> r(a.words().size() + b.words().size(), 0);
    for (std::size_t i = 0; i < a.words().size(); ++i) {
        for (std::size_t j = 0; j < b.words().size(); ++j) {
            const detail::u128 p = detail::clmul64(a.words()[i], b.words()[j]);
            r[i + j] ^= static_cast<u64>(p);
            r[i + j + 1] ^= static_cast<u64>(p >> 64);
        }
    }
    return Poly::from_words(std::move(r));
}

// multiplication by x^shift
inline Poly shl(const Poly& a, int shift) {
    if (shift < 0) throw std::invalid_argument("negative shift");
    if (a.is_zero() || shift == 0) return a;
    std::vector<u64> r;
    detail::xor_shifted(r, a.words(), shift);
    return Poly::from_words(std::move(r));
}

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

struct DivMod {
    Poly quotient;
    Poly remainder;
};

inline DivMod divmod(const Poly& a, const Poly& m) {
    if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const int dm = *m.degree();
    std::vector<u64> r = a.words();
    Poly q;
    for (;;) {
        Poly rp = Poly::from_words(r);
        const auto dr = rp.degree();
        if (!dr || *dr < dm) return {q, rp};
        const int sh = *dr - dm;
        r = rp.words();
        detail::xor_shifted(r, m.words(), sh);
        q.set_coeff(sh, true);
    }
}

inline Poly rem(const Poly& a, const Poly& m) {
    if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (m.words().size() == 1 && a.words().size() <= 2) {
        detail::u128 v = a.words().empty() ? 0 : a.words()[0];
        if (a.words().size() == 2) v |= static_cast<detail::u128>(a.words()[1]) << 64;
        return Poly::from_value(detail::rem128(v, m.words()[0]));
    }
    std::vector<u64> r = a.words();
    const int dm = *m.degree();
    for (;;) {
        Poly rp = Poly::from_words(std::move(r));
        const auto dr = rp.degree();
        if (!dr || *dr < dm) return rp;
        r = rp.words();
        detail::xor_shifted(r, m.words(), *dr - dm);
    }
}

inline Poly operator%(const Poly& a, const Poly& m) { return rem(a, m); }

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;  // monic automatically over GF(2)
}

struct ExtGcd {
    Poly g;  // gcd(a, m)
    Poly u;  // cofactor of a
    Poly v;  // cofactor of m: u*a + v*m = g
};

inline ExtGcd ext_gcd(const Poly& a, const Poly& m) {
    Poly r0 = a, r1 = m, u0 = Poly::one(), u1 = Poly::zero();
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        Poly nu = add(u0, mul(qr.quotient, u1));
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    // v = (g + u*a) / m, an exact division
    if (m.is_zero()) return {r0, u0, Poly::zero()};
    DivMod v = divmod(add(r0, mul(u0, a)), m);
    return {r0, u0, v.quotient};
}

// Rabin's criterion; word-sized inputs take the packed fast path.
inline bool is_irreducible(const Poly& f) {
    const auto d = f.degree();
    if (!d || *d < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    const int n = *d;
    if (f.words().size() == 1) return detail::rabin64(f.words()[0], n);
    const auto cps = detail::rabin_checkpoints(n);
    Poly h = Poly::x();
    std::size_t ci = 0;
    for (int k = 1; k <= n; ++k) {
        h = rem(mul(h, h), f);
        if (k == cps[ci]) {
            ++ci;
            if (k == n) return h == Poly::x();
            if (gcd(add(h, Poly::x()), f) != Poly::one()) return false;
        }
    }
    return false;
}

// Trace and cotrace classification. The classification domain is monic
// polynomials of degree n >= 2 with constant term 1; degree-1 inputs are
// rejected rather than defaulted.
namespace detail {
inline int classification_degree(const Poly& f) {
    const auto d = f.degree();
    if (!d || *d < 2) throw std::invalid_argument("classification needs degree >= 2");
    if (!f.coeff(0)) throw std::invalid_argument("classification needs constant term 1");
    return *d;
}
}  // namespace detail

inline int trace_coeff(const Poly& f) {
    const int n = detail::classification_degree(f);
    return f.coeff(n - 1) ? 1 : 0;
}

inline int cotrace_coeff(const Poly& f) {
    detail::classification_degree(f);
    return f.coeff(1) ? 1 : 0;
}

// Parity of the sum of exponents k in [2, n-2] with a set coefficient; only
// odd k contribute mod 2.
inline int signature(const Poly& f) {
    const auto d = f.degree();
    if (!d || *d < 2) throw std::invalid_argument("signature needs degree >= 2");
    int s = 0;
    for (int k = 3; k <= *d - 2; k += 2) s ^= f.coeff(k) ? 1 : 0;
    return s;
}

struct Bucket {
    int trace_bit;
    int cotrace_bit;

    // Rendering order (0,0),(0,1),(1,0),(1,1).
    int index() const { return trace_bit * 2 + cotrace_bit; }
    static Bucket from_index(int i) { return {(i >> 1) & 1, i & 1}; }

    std::string label() const {
        return "S_{" + std::to_string(trace_bit) + "," + std::to_string(cotrace_bit) + "}";
    }

    friend bool operator==(const Bucket&, const Bucket&) = default;
};

inline Bucket bucket(const Poly& f) {
    detail::classification_degree(f);
    if (!is_irreducible(f)) throw std::invalid_argument("bucket classification needs an irreducible polynomial");
    return {trace_coeff(f), cotrace_coeff(f)};
}

// f*(x) = x^n f(1/x): reverses the coefficient sequence over width n+1.
// Requires constant term 1 so the degree is preserved and the map involutive.
inline Poly reciprocal(const Poly& f) {
    if (!f.coeff(0)) throw std::invalid_argument("reciprocal needs constant term 1");
    const int n = *f.degree();
    Poly r;
    for (int k = 0; k <= n; ++k)
        if (f.coeff(k)) r.set_coeff(n - k, true);
    return r;
}

enum class PolyStyle { hex, symbolic };

inline std::string format(const Poly& f, PolyStyle style = PolyStyle::hex) {
    if (style == PolyStyle::hex) {
        if (f.is_zero()) return "0x0";
        static const char* digits = "0123456789ABCDEF";
        std::string out;
        bool leading = true;
        for (std::size_t w = f.words().size(); w-- > 0;) {
            for (int nib = 15; nib >= 0; --nib) {
                const unsigned v = (f.words()[w] >> (4 * nib)) & 0xf;
                if (leading && v == 0) continue;
                leading = false;
                out.push_back(digits[v]);
            }
        }
        return "0x" + out;
    }
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = *f.degree(); k >= 0; --k) {
        if (!f.coeff(k)) continue;
        if (!out.empty()) out.push_back('+');
        if (k == 0) out += "1";
        else if (k == 1) out += "x";
        else out += "x^" + std::to_string(k);
    }
    return out;
}

namespace detail {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline int parse_exponent(std::string_view s) {
    int k = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc{} || p != s.data() + s.size() || k < 0)
        throw std::invalid_argument("bad exponent in polynomial text");
    if (k > (1 << 20)) throw std::invalid_argument("exponent too large");
    return k;
}

}  // namespace detail

// Accepts "0x2B" (bit k of the value is the coefficient of x^k) or the
// symbolic form "x^5+x^2+1". Repeated symbolic terms cancel mod 2.
inline Poly parse(std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        if (s.empty()) throw std::invalid_argument("hex polynomial needs digits");
        Poly p;
        int bitpos = 0;
        for (std::size_t i = s.size(); i-- > 0; bitpos += 4) {
            const char c = s[i];
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else throw std::invalid_argument("bad hex digit in polynomial text");
            for (int b = 0; b < 4; ++b)
                if (v >> b & 1) p.set_coeff(bitpos + b, true);
        }
        return p;
    }
    Poly p;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i != s.size() && s[i] != '+') continue;
        std::string_view term = detail::strip(s.substr(start, i - start));
        start = i + 1;
        if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
        int k;
        if (term == "0") continue;
        else if (term == "1") k = 0;
        else if (term == "x") k = 1;
        else if (term.size() >= 3 && term[0] == 'x' && term[1] == '^')
            k = detail::parse_exponent(term.substr(2));
        else throw std::invalid_argument("bad term in polynomial text");
        p.set_coeff(k, !p.coeff(k));  // repeated terms cancel in characteristic 2
    }
    return p;
}

}  // namespace polytrace
