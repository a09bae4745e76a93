#pragma once

#include "ul/bits.hpp"
#include "ul/domain.hpp"
#include "ul/mergeable.hpp"

namespace ul {

// Deletion-capable learner over a mergeable class, built on a complete binary
// merge tree. Item i's ticket stores its leaf index plus the encodings of the
// siblings along its root-to-leaf path, so any set of deletions leaves a
// frontier of untouched subtrees whose encodings are all present in the
// deleted items' tickets.
//
// With n padded to n_pad = 2^k, every ticket is exactly k + k * encoded_bits
// bits and the stored state is the serialized output hypothesis.

struct TreeModel {
    Hypothesis h;
    Blob aux;                   // serialized h
    std::vector<Blob> tickets;  // one per item, in dataset order
};

TreeModel tree_learn(const ConceptClass& cls, const Dataset& S);

// `deleted` holds the tickets of the removed items; `n` is the original
// dataset size. Returns the hypothesis the learner would have produced on the
// surviving items alone.
Hypothesis tree_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                        const std::vector<Blob>& deleted);

}  // namespace ul
