#pragma once

#include <array>
#include <cstdint>

namespace polytrace {

// Reference bucket cardinalities (|S_00|, |S_01|, |S_10|, |S_11|) for
// 2 <= n <= 32. Every row is reproduced by the three independent routes in
// this library (exhaustive enumeration, in-field tallies, analytic pipeline)
// and satisfies the closed-form row identities exactly.
struct ReferenceRow {
    int n;
    std::array<std::uint64_t, 4> counts;
};

inline constexpr std::array<ReferenceRow, 31> kReferenceCounts{{
    {2, {0, 0, 0, 1}},
    {3, {0, 1, 1, 0}},
    {4, {0, 1, 1, 1}},
    {5, {2, 1, 1, 2}},
    {6, {1, 3, 3, 2}},
    {7, {4, 5, 5, 4}},
    {8, {7, 7, 7, 9}},
    {9, {14, 14, 14, 14}},
    {10, {21, 27, 27, 24}},
    {11, {48, 45, 45, 48}},
    {12, {81, 84, 84, 86}},
    {13, {154, 161, 161, 154}},
    {14, {285, 291, 291, 294}},
    {15, {550, 541, 541, 550}},
    {16, {1001, 1031, 1031, 1017}},
    {17, {1926, 1929, 1929, 1926}},
    {18, {3626, 3626, 3626, 3654}},
    {19, {6888, 6909, 6909, 6888}},
    {20, {13041, 13122, 13122, 13092}},
    {21, {24998, 24931, 24931, 24998}},
    {22, {47565, 47667, 47667, 47658}},
    {23, {91124, 91237, 91237, 91124}},
    {24, {174652, 174698, 174698, 174822}},
    {25, {335588, 335500, 335500, 335588}},
    {26, {644805, 645435, 645435, 645120}},
    {27, {1242822, 1242682, 1242682, 1242822}},
    {28, {2396385, 2396520, 2396520, 2396970}},
    {29, {4627850, 4628545, 4628545, 4627850}},
    {30, {8946665, 8947923, 8947923, 8947756}},
    {31, {17319148, 17317685, 17317685, 17319148}},
    {32, {33551833, 33554983, 33554983, 33553881}},
}};

inline const ReferenceRow* reference_row(int n) {
    if (n < 2 || n > 32) return nullptr;
    return &kReferenceCounts[static_cast<std::size_t>(n - 2)];
}

}  // namespace polytrace
