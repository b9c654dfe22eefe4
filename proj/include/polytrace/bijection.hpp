#pragma once

#include <array>
#include <stdexcept>

#include "polytrace/poly.hpp"
#include "polytrace/transforms.hpp"

namespace polytrace {

enum class LemmaDirection { forward, inverse };  // psi resp. psi^{-1}

// The eight (source bucket, signature, direction) -> target bucket clauses,
// stored as data so checks compare against a declarative table.
struct LemmaRow {
    Bucket source;
    int sigma;
    LemmaDirection direction;
    Bucket target;
};

inline constexpr std::array<LemmaRow, 8> kLemmaTable{{
    {{1, 1}, 1, LemmaDirection::forward, {0, 0}},
    {{1, 1}, 0, LemmaDirection::forward, {0, 1}},
    {{1, 1}, 0, LemmaDirection::inverse, {0, 0}},
    {{1, 1}, 1, LemmaDirection::inverse, {1, 0}},
    {{0, 0}, 1, LemmaDirection::forward, {1, 1}},
    {{0, 0}, 0, LemmaDirection::forward, {1, 0}},
    {{0, 0}, 0, LemmaDirection::inverse, {1, 1}},
    {{0, 0}, 1, LemmaDirection::inverse, {0, 1}},
}};

inline Bucket lemma_target(Bucket source, int sigma, LemmaDirection direction) {
    for (const LemmaRow& row : kLemmaTable)
        if (row.source == source && row.sigma == sigma && row.direction == direction)
            return row.target;
    throw std::invalid_argument("bucket not covered by the lemma table");
}

namespace detail {
inline Bucket diagonal_bucket(const Poly& f) {
    const auto d = f.degree();
    if (!d || *d < 3 || *d % 2 == 0) throw std::invalid_argument("odd degree >= 3 required");
    const Bucket b = bucket(f);  // validates irreducibility
    if (b.trace_bit != b.cotrace_bit)
        throw std::invalid_argument("bucket (0,1)/(1,0) input is not covered");
    return b;
}
}  // namespace detail

// Applies psi (forward) or psi^{-1} (inverse) to a diagonal-bucket input and
// classifies the result; callers compare against lemma_target.
inline Bucket lemma_case(const Poly& f, LemmaDirection direction) {
    detail::diagonal_bucket(f);
    const Poly image = direction == LemmaDirection::forward ? psi(f) : psi_inv(f);
    return bucket(image);
}

// The explicit bijection S_{1,1}(n) -> S_{0,0}(n), odd n >= 3: apply psi when
// the signature is 1 and psi^{-1} when it is 0.
inline Poly phi(const Poly& f) {
    const Bucket b = detail::diagonal_bucket(f);
    if (b != Bucket{1, 1}) throw std::invalid_argument("phi needs bucket (1,1)");
    return signature(f) ? psi(f) : psi_inv(f);
}

// Inverse map S_{0,0}(n) -> S_{1,1}(n), same selector.
inline Poly rho(const Poly& g) {
    const Bucket b = detail::diagonal_bucket(g);
    if (b != Bucket{0, 0}) throw std::invalid_argument("rho needs bucket (0,0)");
    return signature(g) ? psi(g) : psi_inv(g);
}

}  // namespace polytrace
