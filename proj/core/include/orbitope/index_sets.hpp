#ifndef ORBITOPE_INDEX_SETS_HPP
#define ORBITOPE_INDEX_SETS_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

// Subsets of {1..n} as bitmasks: element i occupies bit i-1. n stays small
// (at most 6 in validated range), so 32 bits are plenty.

namespace orbitope::sets {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline Mask complement(Mask m, int n) { return full_mask(n) & ~m; }

inline bool contains(Mask m, int i) { return (m >> (i - 1)) & 1u; }

inline Mask mask_of(std::initializer_list<int> elems) {
    Mask m = 0;
    for (int e : elems) m |= Mask{1} << (e - 1);
    return m;
}

inline Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= Mask{1} << (e - 1);
    return m;
}

inline std::vector<int> elements(Mask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

// Concatenated element digits, e.g. {1,3,4} -> "134". Only valid for n <= 9,
// which keeps these strings totally ordered the same way as element lists.
inline std::string digits(Mask m) {
    std::string s;
    for (int i : elements(m)) s.push_back(static_cast<char>('0' + i));
    return s;
}

// Lexicographic by element list ({1,4} before {2,3}), not by mask value.
inline std::vector<Mask> subsets_of_size(int n, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m <= full_mask(n); ++m)
        if (popcount(m) == k) out.push_back(m);
    std::sort(out.begin(), out.end(),
              [](Mask a, Mask b) { return elements(a) < elements(b); });
    return out;
}

// perm is 1-based: perm[i-1] is the image of element i.
inline Mask apply_permutation(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (int i : elements(m)) out |= Mask{1} << (perm[i - 1] - 1);
    return out;
}

}  // namespace orbitope::sets

#endif  // ORBITOPE_INDEX_SETS_HPP
