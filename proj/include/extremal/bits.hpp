#pragma once

#include <bit>
#include <cstdint>

namespace extremal {

/// Packed 0/1 vector. Which bit belongs to which dimension is decided by Domain.
using Mask = std::uint64_t;

/// Hard upper bound on domain size imposed by Mask.
inline constexpr int kMaxDomainBits = 63;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Gathers the bits of `value` selected by `select` into the low end (software pext).
inline Mask gather_bits(Mask value, Mask select) {
    Mask out = 0;
    Mask bit = 1;
    for (Mask s = select; s != 0; s &= s - 1) {
        if (value & (s & -s)) out |= bit;
        bit <<= 1;
    }
    return out;
}

/// Inverse of gather_bits: spreads the low bits of `packed` onto the positions of `select`.
inline Mask scatter_bits(Mask packed, Mask select) {
    Mask out = 0;
    Mask bit = 1;
    for (Mask s = select; s != 0; s &= s - 1) {
        if (packed & bit) out |= (s & -s);
        bit <<= 1;
    }
    return out;
}

/// Calls f(sub) for every sub ⊆ set, including 0 and set itself.
template <class F>
void for_each_subset(Mask set, F&& f) {
    Mask sub = 0;
    while (true) {
        f(sub);
        if (sub == set) break;
        sub = (sub - set) & set;
    }
}

}  // namespace extremal
