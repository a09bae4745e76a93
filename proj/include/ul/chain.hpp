#pragma once

#include "ul/bits.hpp"
#include "ul/domain.hpp"
#include "ul/mergeable.hpp"

namespace ul {

// Deletion-capable learner built on repeated compression. Learning peels off
// cells T_1 = compress(S), T_2 = compress(S minus T_1), ... until compression
// of the remainder is empty. An item of cell j gets a ticket holding j and the
// items of T_j followed by T_{j+1}; items left in the final remainder get a
// terminal ticket holding only the cell field, set to 0. The two cells inside
// a payload need no length field: every item of T_j strictly changes the
// running encoding while the items of T_{j+1} are implied by T_j, so the split
// point is recoverable by scanning.
//
// Ticket sizes are at most 2 * K * example_bits + ceil(log2(n + 1)) where K is
// the class's compression bound. The stored state is the serialized output
// hypothesis.

struct ChainModel {
    Hypothesis h;
    Blob aux;                   // serialized h
    std::vector<Blob> tickets;  // one per item, in dataset order
};

ChainModel chain_learn(const ConceptClass& cls, const Dataset& S);

// `deleted` pairs each removed item with its ticket; `n` is the original
// dataset size.
Hypothesis chain_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                         const std::vector<std::pair<Example, Blob>>& deleted);

}  // namespace ul
