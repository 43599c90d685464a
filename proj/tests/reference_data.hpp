#pragma once

#include <array>
#include <cstdint>
#include <map>

namespace ref {

// Vertex and edge counts of the partition graphs, indexed [r - 2][n - 5],
// r = 2..5, n = 5..12.
inline constexpr std::array<std::array<std::uint64_t, 8>, 4> kVertices = {{
    {15, 31, 63, 127, 255, 511, 1023, 2047},
    {25, 90, 301, 966, 3025, 9330, 28501, 86526},
    {10, 65, 350, 1701, 7770, 34105, 145750, 611501},
    {1, 15, 140, 1050, 6951, 42525, 246730, 1379400},
}};

inline constexpr std::array<std::array<std::uint64_t, 8>, 4> kEdges = {{
    {35, 90, 217, 504, 1143, 2550, 5621, 12276},
    {90, 450, 1890, 7224, 26082, 90750, 307890, 1026036},
    {30, 360, 2730, 16800, 91854, 466200, 2250930, 10494000},
    {0, 60, 1050, 11200, 94500, 695100, 4677750, 29607600},
}};

// Nerve classes of the 3-partitions of the regular n-gon: no edge, one edge,
// two edges, hollow triangle, filled triangle.
inline const std::map<int, std::array<std::uint64_t, 5>> kPolygonCensus = {
    {7, {105, 154, 28, 7, 7}},
    {8, {196, 512, 152, 16, 90}},
    {9, {336, 1467, 630, 138, 454}},
    {10, {540, 3820, 2215, 370, 2385}},
    {11, {825, 9328, 6974, 1419, 9955}},
    {12, {1210, 21792, 20304, 2776, 40444}},
    {13, {1716, 49361, 55796, 9768, 144984}},
};

// Tverberg 3-partition graph of the regular octagon.
inline constexpr std::uint64_t kOctagonVertices = 90;
inline constexpr std::uint64_t kOctagonEdges = 272;
inline constexpr std::uint64_t kOctagonDiameter = 5;
inline constexpr std::uint64_t kOctagonClique = 3;
inline const std::map<std::size_t, std::size_t> kOctagonDegrees = {{5, 48}, {6, 16}, {8, 26}};

}  // namespace ref
