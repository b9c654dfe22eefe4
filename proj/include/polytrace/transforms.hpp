#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytrace/poly.hpp"

namespace polytrace {

// An invertible 2x2 matrix over F_2; exactly six exist. Acts on irreducibles
// by the fractional linear substitution x -> (ax+b)/(cx+d).
class Gl2Matrix {
public:
    Gl2Matrix(int a, int b, int c, int d)
        : a_(a & 1), b_(b & 1), c_(c & 1), d_(d & 1) {
        if (((a_ & d_) ^ (b_ & c_)) != 1) throw std::invalid_argument("singular matrix over GF(2)");
    }

    static Gl2Matrix identity() { return {1, 0, 0, 1}; }

    static const std::array<Gl2Matrix, 6>& all() {
        static const std::array<Gl2Matrix, 6> ms = {
            Gl2Matrix{1, 0, 0, 1}, Gl2Matrix{0, 1, 1, 0}, Gl2Matrix{1, 1, 0, 1},
            Gl2Matrix{1, 0, 1, 1}, Gl2Matrix{0, 1, 1, 1}, Gl2Matrix{1, 1, 1, 0}};
        return ms;
    }

    int a() const { return a_; }
    int b() const { return b_; }
    int c() const { return c_; }
    int d() const { return d_; }

    Gl2Matrix operator*(const Gl2Matrix& o) const {
        return {(a_ & o.a_) ^ (b_ & o.c_), (a_ & o.b_) ^ (b_ & o.d_),
                (c_ & o.a_) ^ (d_ & o.c_), (c_ & o.b_) ^ (d_ & o.d_)};
    }

    // Determinant is 1, so the adjugate is the inverse; over F_2 the sign
    // flips vanish.
    Gl2Matrix inverse() const { return {d_, b_, c_, a_}; }

    friend bool operator==(const Gl2Matrix&, const Gl2Matrix&) = default;

private:
    int a_, b_, c_, d_;
};

namespace detail {
inline int transform_degree(const Poly& f) {
    const auto d = f.degree();
    if (!d || *d < 2) throw std::invalid_argument("substitution needs degree >= 2");
    if (!is_irreducible(f)) throw std::invalid_argument("substitution needs an irreducible polynomial");
    return *d;
}
}  // namespace detail

// (cx+d)^n f((ax+b)/(cx+d)), accumulated Horner-style in the two linear forms
// so no rational bookkeeping is needed. Irreducibles of degree >= 2 have no
// roots in F_2 or at infinity, so degree and irreducibility are preserved.
inline Poly gl2_apply(const Gl2Matrix& m, const Poly& f) {
    const int n = detail::transform_degree(f);
    Poly u;  // ax + b
    if (m.a()) u.set_coeff(1, true);
    if (m.b()) u.set_coeff(0, true);
    Poly v;  // cx + d
    if (m.c()) v.set_coeff(1, true);
    if (m.d()) v.set_coeff(0, true);

    Poly r = Poly::one();  // f is monic
    Poly vp = Poly::one();
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, u);
        vp = mul(vp, v);
        if (f.coeff(k)) r = add(r, vp);
    }
    return r;
}

// psi(f) = (x+1)^n f(1/(x+1)) and its inverse psi^{-1}(f) = x^n f((x+1)/x).
inline Poly psi(const Poly& f) { return gl2_apply(Gl2Matrix{0, 1, 1, 1}, f); }
inline Poly psi_inv(const Poly& f) { return gl2_apply(Gl2Matrix{1, 1, 1, 0}, f); }

inline bool is_self_reciprocal(const Poly& f) {
    if (f.is_zero()) return true;
    const int n = *f.degree();
    for (int k = 0; 2 * k <= n; ++k)
        if (f.coeff(k) != f.coeff(n - k)) return false;
    return true;
}

// f^Q(x) = x^n f(x + 1/x) = sum over k of f_k x^(n-k) (x^2+1)^k:
// self-reciprocal of degree 2n. Irreducible exactly when f is irreducible
// with f_1 = 1 (for degree 1, exactly when f = x+1).
inline Poly q_transform(const Poly& f) {
    const auto d = f.degree();
    if (!d) throw std::invalid_argument("q_transform needs a nonzero polynomial");
    const int n = *d;
    Poly base;
    base.set_coeff(2, true);
    base.set_coeff(0, true);
    Poly pw = Poly::one();
    Poly acc;
    for (int k = 0; k <= n; ++k) {
        if (f.coeff(k)) acc = add(acc, shl(pw, n - k));
        if (k < n) pw = mul(pw, base);
    }
    return acc;
}

// Inverts the Q-transform. The basis polynomials x^(m-k)(x^2+1)^k are
// triangular in their leading coefficients x^(m+k), so back-substitution from
// k = m peels off one unknown at a time; a nonzero residual afterwards means
// the input violated the preconditions (self-reciprocal, even degree,
// constant term 1).
inline Poly q_root(const Poly& f) {
    const auto d = f.degree();
    if (!d) throw std::invalid_argument("q_root needs a nonzero polynomial");
    if (*d % 2 != 0) throw std::invalid_argument("q_root needs even degree");
    const int m = *d / 2;
    if (m > 0 && !f.coeff(0)) throw std::invalid_argument("q_root needs constant term 1");
    if (!is_self_reciprocal(f)) throw std::invalid_argument("q_root needs a self-reciprocal polynomial");

    Poly base;
    base.set_coeff(2, true);
    base.set_coeff(0, true);
    std::vector<Poly> basis(m + 1);  // basis[k] = x^(m-k) (x^2+1)^k
    Poly pw = Poly::one();
    for (int k = 0; k <= m; ++k) {
        basis[k] = shl(pw, m - k);
        if (k < m) pw = mul(pw, base);
    }

    Poly root;
    Poly residual = f;
    for (int k = m; k >= 0; --k) {
        if (residual.coeff(m + k)) {
            root.set_coeff(k, true);
            residual = add(residual, basis[k]);
        }
    }
    if (!residual.is_zero()) throw std::invalid_argument("polynomial is not a Q-transform");
    return root;
}

}  // namespace polytrace
