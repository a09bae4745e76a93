#pragma once

#include <functional>
#include <random>

#include "ul/domain.hpp"

namespace ul {

// Exhaustive enumeration of labeled multisets over Z = X x {0,1}, used by the
// oracle suites. Items are emitted in nondecreasing flat order (point index *
// 2 + label), one representative per multiset.

u64 flat_item_count(const ConceptClass& cls);  // 2 |X|
Example flat_item(const ConceptClass& cls, u64 flat);

// Calls f once per multiset of size exactly n.
void for_each_multiset(const ConceptClass& cls, u32 n,
                       const std::function<void(const Dataset&)>& f);

// Number of size-n multisets over z distinct items: C(z + n - 1, n).
u64 multiset_count(u64 z, u32 n);

// A random dataset the given scheme accepts: realizable where the scheme
// demands it, repetition-free for central:noreppoint, arbitrary labels
// elsewhere. Deterministic in the generator state.
Dataset random_dataset_for(const std::string& scheme_id, const ConceptClass& cls,
                           u32 n, std::mt19937_64& rng);

}  // namespace ul
