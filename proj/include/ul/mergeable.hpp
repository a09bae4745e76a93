#pragma once

#include "ul/bits.hpp"
#include "ul/domain.hpp"

namespace ul {

// Fixed-width, canonical encoding of a realizable dataset. Two datasets with
// the same multiset of examples serialize to identical bits.
struct EncodedState {
    ClassKind kind = ClassKind::Thresholds;
    u32 xminus = 0;           // Thresholds: largest 0-labeled x, 0 if none
    std::vector<u32> rows;    // Parities: RREF of the constraint system
    Hypothesis closure;       // ProductThresholds / Explicit: the closure

    friend bool operator==(const EncodedState&, const EncodedState&) = default;
};

bool class_is_mergeable(const ConceptClass& cls);

// Encoding of the empty dataset; the identity element of merge.
EncodedState neutral_encoding(const ConceptClass& cls);

EncodedState encode(const ConceptClass& cls, const Dataset& S);
Hypothesis decode(const ConceptClass& cls, const EncodedState& e);
EncodedState merge(const ConceptClass& cls, const EncodedState& a, const EncodedState& b);

// A deterministic compression: sub-multiset T of S with |T| <= K and
// encode(T) == encode(S), stable under deleting elements of S outside T.
Dataset compress(const ConceptClass& cls, const Dataset& S);

// Per-class compression size bound K (VC dimension for explicit tables).
u32 compression_bound(const ConceptClass& cls);

// Serialized width in bits; identical for every encoding of the class.
unsigned encoded_bits(const ConceptClass& cls);
void write_encoded(const ConceptClass& cls, const EncodedState& e, BitWriter& w);
EncodedState read_encoded(const ConceptClass& cls, BitReader& r);

// Serialized width of a single example, and its wire format.
unsigned example_bits(const ConceptClass& cls);
void write_example(const ConceptClass& cls, const Example& z, BitWriter& w);
Example read_example(const ConceptClass& cls, BitReader& r);

// Given the concatenated payload of two consecutive compression cells, the
// length of the first cell: the maximal prefix whose items each strictly
// change the running encoding. Items of the second cell are always implied by
// the first and never change it.
std::size_t compression_prefix(const ConceptClass& cls, const Dataset& payload);

}  // namespace ul
