#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "largeness/nat.hpp"

namespace largeness {

/// Nonempty subsets of {1..k} are represented as bitmasks: bit i-1 <-> index i.
/// Mask numeric order is the canonical order on index sets throughout.
using Mask = std::uint32_t;

constexpr int kFsDepthCap = 16;

inline int mask_popcount(Mask m) { return std::popcount(m); }

/// Largest index (1-based) in a nonempty mask.
inline int mask_max(Mask m) { return std::bit_width(m); }

/// Smallest index (1-based) in a nonempty mask.
inline int mask_min(Mask m) { return std::countr_zero(m) + 1; }

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

inline Mask mask_from_indices(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 1 || i > 32) throw Error("index out of mask range: " + std::to_string(i));
        m |= Mask{1} << (i - 1);
    }
    return m;
}

/// Nonempty subsets of {1..m} ordered by size, then lexicographically on the
/// sorted index tuples. This is the canonical H search order.
inline std::vector<Mask> size_lex_masks(std::size_t m) {
    if (m == 0 || m > 20) throw Error("index range out of bounds for H enumeration");
    std::vector<Mask> masks;
    masks.reserve((std::size_t{1} << m) - 1);
    for (Mask h = 1; h < (Mask{1} << m); ++h) masks.push_back(h);
    std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
        if (mask_popcount(a) != mask_popcount(b)) return mask_popcount(a) < mask_popcount(b);
        auto ia = mask_indices(a), ib = mask_indices(b);
        return ia < ib;
    });
    return masks;
}

inline std::string mask_to_string(Mask m) {
    std::string out = "{";
    for (int i : mask_indices(m)) {
        if (out.size() > 1) out += ",";
        out += std::to_string(i);
    }
    return out + "}";
}

}  // namespace largeness
