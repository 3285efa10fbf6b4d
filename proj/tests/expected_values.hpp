#ifndef ORBITOPE_TESTS_EXPECTED_VALUES_HPP
#define ORBITOPE_TESTS_EXPECTED_VALUES_HPP

#include <map>

// Frozen expected values. Counts for n = 4 and n = 5 were produced by the
// exhaustive Fourier-Motzkin oracle in oracles.hpp before the engine was
// written; derived dimensions follow from the closed forms checked in
// test_oracles.cpp. Values marked kPending are filled in from the first
// audited engine run and then never touched again.

namespace expected {

inline constexpr int kPending = -1;

// Sum walls of the slice arrangement (complement-deduped) and the full wall
// count including the coordinate walls x_i = 0 and x_i = 1.
inline constexpr int kSumWalls4 = 3;
inline constexpr int kSumWalls5 = 10;
inline constexpr int kSumWalls6 = 25;
inline constexpr int kWallsTotal4 = 11;
inline constexpr int kWallsTotal5 = 20;
inline constexpr int kWallsTotal6 = 37;

// Chambers of the interior arrangement.
inline constexpr int kChambers4 = 8;
inline constexpr int kChambers5 = 76;
// Distribution of n = 5 chambers by the number of '+' walls.
inline const std::map<int, int> kChambers5ByPlus = {{0, 1}, {1, 10}, {2, 30}, {3, 30}, {4, 5}};
// n = 6 is out of reach for the exhaustive oracle (2^25 sign vectors). A
// randomized sample of 2 * 10^6 interior points produced 1678 distinct
// chambers; the breadth-first engine run then terminated at exactly that
// count, which is frozen here together with its distribution by the number
// of '+' pair walls.
inline constexpr int kChambers6 = 1678;
inline constexpr int kChambers6LowerBound = 1678;
inline const std::map<int, int> kChambers6ByPlusPairs = {{0, 332}, {1, 690}, {2, 480},
                                                         {3, 140}, {4, 30},  {5, 6}};

// Full-dimensional admissible polytopes and interior-meeting slices.
inline constexpr int kAdmissibleFullDim5 = 36;
inline constexpr int kAdmissibleFullDim6 = 171;
inline constexpr int kSlices5 = 10;
inline constexpr int kSlices6 = 25;

// Divisor classes modulo the quartet relations: generator counts and the
// dimension of the quotient, with the closed form 2^(n-1) - C(n,2) - 1.
inline constexpr int kDivisors4 = 3;
inline constexpr int kDivisors5 = 10;
inline constexpr int kDivisors6 = 25;
inline constexpr int kDivisorQuotient4 = 1;
inline constexpr int kDivisorQuotient5 = 5;
inline constexpr int kDivisorQuotient6 = 16;
inline constexpr int kDivisorRank4 = 2;
inline constexpr int kDivisorRank5 = 5;
inline constexpr int kDivisorRank6 = 9;

// Cycle space of the complete graph K_n: C(n,2) - n + 1 = (n-1)(n-2)/2,
// and its index-2 subspace of even-weight cycle vectors.
inline constexpr int kCycleDim5 = 6;
inline constexpr int kCycleDim6 = 10;
inline constexpr int kEvenCycleDim5 = 5;
inline constexpr int kEvenCycleDim6 = 9;

// Pair-relation quotients for distinguished chambers.
inline constexpr int kQuotientOmega0N5 = 5;
inline constexpr int kQuotientMissingPairN5 = 4;
inline constexpr int kQuotientOmega0N6Grade4 = 6;
inline constexpr int kQuotientOmega0N6Grade2 = 46;

// Middle-degree relation system for n = 6: 15 generators, boundary rank 4.
inline constexpr int kMidGenerators6 = 15;
inline constexpr int kMidRank6 = 4;
inline constexpr int kMidQuotient6 = 11;

// Mod-2 Betti numbers. Dimensions of X_n: 3n - 7.
inline const std::map<int, int> kBettiX5 = {{0, 1}, {5, 1}, {6, 1}, {8, 1}};
inline const std::map<int, int> kBettiX6 = {{0, 1}, {5, 1}, {6, 3}, {7, 11}, {8, 1}, {9, 1}, {11, 1}};
inline constexpr int kH6X6Exhaustive = 1;

// Sizes of the distinguished chamber label sets.
inline constexpr int kOmega0Size5 = 26;
inline constexpr int kOmega0Size6 = 116;

}  // namespace expected

#endif  // ORBITOPE_TESTS_EXPECTED_VALUES_HPP
