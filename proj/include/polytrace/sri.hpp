#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polytrace/enumeration.hpp"
#include "polytrace/poly.hpp"
#include "polytrace/transforms.hpp"

namespace polytrace {

// Degree-n self-reciprocal irreducibles with trace 1, ascending by bit
// pattern. Odd degrees above 1 have none (roots of a self-reciprocal come in
// inverse pairs). Even degrees are enumerated through the Q-transform
// preimage: every member is f'^Q for an irreducible f' of degree n/2 with
// cotrace 1, so scanning degree n/2 beats scanning degree-n palindromes.
inline std::vector<Poly> enumerate_sri1(int n, const EnumOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n == 1) return {add(Poly::x(), Poly::one())};
    if (n % 2 == 1) return {};
    const int m = n / 2;
    if (m > opts.max_degree) throw std::out_of_range("degree outside the enumeration budget");

    std::vector<Poly> members;
    for_each_irreducible(m, [&](const Poly& f) {
        if (m >= 2 && cotrace_coeff(f) != 1) return;
        const Poly q = q_transform(f);
        if (!is_irreducible(q)) return;  // degree-1 f = x fails here
        if (trace_coeff(q) == 1) members.push_back(q);
    });
    std::sort(members.begin(), members.end());
    return members;
}

// The pairing/fixed-point decomposition of SRI_1(n): f pairs with
// (q_root(f)*)^Q, and the fixed points are exactly the members whose q_root
// is itself self-reciprocal.
struct SriPartition {
    int n = 0;
    std::vector<std::pair<Poly, Poly>> pairs;  // canonical: smaller bit pattern first
    std::vector<Poly> fixed;
};

inline SriPartition sri_pairing(int n, const EnumOptions& opts = {}) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("sri_pairing needs an even degree >= 2");
    SriPartition part;
    part.n = n;
    for (const Poly& f : enumerate_sri1(n, opts)) {
        const Poly root = q_root(f);
        if (is_self_reciprocal(root)) {
            part.fixed.push_back(f);
            continue;
        }
        const Poly partner = q_transform(reciprocal(root));
        if (f < partner) part.pairs.emplace_back(f, partner);
    }
    return part;
}

// Predicted parity of |S_{1,1}(n)|: odd exactly when n is a power of two.
inline int parity_verdict(int n) {
    if (n < 2) throw std::invalid_argument("parity_verdict needs n >= 2");
    return (n & (n - 1)) == 0 ? 1 : 0;
}

}  // namespace polytrace
