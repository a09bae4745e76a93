#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ul/domain.hpp"

namespace ul {

// Symbols are packed as tier (4 bits) | segment (8 bits) | local id (4 bits),
// which is injective for every size reachable below 2^32. The reserved value 0
// is the dedicated symbol of the one-element family.
using SpernerSymbol = std::uint16_t;

constexpr SpernerSymbol pack_symbol(u32 tier, u32 segment, u32 local) {
    return static_cast<SpernerSymbol>((tier << 12) | (segment << 4) | local);
}

// A multiset of symbols, symbol -> multiplicity.
using SpernerMultiset = std::map<SpernerSymbol, u32>;

u64 multiset_size(const SpernerMultiset& ms);
std::vector<SpernerSymbol> multiset_elements(const SpernerMultiset& ms);  // sorted

// The fast-growing tower A_r(t): A_r(1) = 2, A_1(t) = 2t, and
// A_{r+1}(t) = A_r(A_{r+1}(t-1)). Returns nullopt when the value exceeds
// `cap`; evaluation short-circuits so towers never materialize.
std::optional<u64> ack(u64 r, u64 t, u64 cap);

// Smallest t with n <= A_t(t).
u32 inv_ack(u64 n);

// The size-m member of the family Q^{r,t}, covering m in
// [A_r(t), A_r(A_r(t))], over local symbols 1..2r. Any two members of the same
// family are incomparable under multiset inclusion.
SpernerMultiset family_segment(u32 r, u64 t, u64 m);

// The size-m member of the global family: a tier and segment are chosen from
// m, and the segment's local symbols are tagged with them so that all members,
// across every size m >= 1, remain pairwise incomparable.
SpernerMultiset global_family(u64 m);

// Brute-force pairwise non-containment check.
bool verify_sperner(const std::vector<SpernerMultiset>& ms);

}  // namespace ul
