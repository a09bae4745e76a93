#pragma once

#include <optional>
#include <utility>

#include "ul/bits.hpp"
#include "ul/ctz.hpp"
#include "ul/domain.hpp"

namespace ul {

// Ticketed schemes whose deletion logic reduces to per-group emptiness tests:
// the minimum/maximum-value primitives, point functions, products of
// per-coordinate thresholds, and 1D thresholds via binary search cells.

// -- MinVal / MaxVal ---------------------------------------------------------
// Values live in {1..V}. Aux is the extreme value (0 = none). Each item's
// ticket holds its value-group symbol (16 bits) plus the next distinct value
// in the walk direction (successor for MinVal, predecessor for MaxVal;
// 0 = none), so deletions can advance the stored extreme without rescanning.

struct ValModel {
    std::optional<u32> value;
    Blob aux;
    std::vector<Blob> tickets;  // one per input value, in input order
};

ValModel minval_learn(const std::vector<u32>& values, u32 V);
ValModel maxval_learn(const std::vector<u32>& values, u32 V);

// `deleted` pairs each removed value with its ticket.
std::optional<u32> minval_unlearn(const std::vector<std::pair<u32, Blob>>& deleted,
                                  const Blob& aux, u32 V);
std::optional<u32> maxval_unlearn(const std::vector<std::pair<u32, Blob>>& deleted,
                                  const Blob& aux, u32 V);

unsigned val_aux_bits(u32 V);
unsigned val_ticket_bits(u32 V);

// -- class schemes -----------------------------------------------------------

struct SharpModel {
    Hypothesis h;
    Blob aux;
    std::vector<Blob> tickets;
};

// Point functions: per-x-value group symbols; aux holds the hypothesis, a bit
// for whether any 1-label exists, and the smallest value with no 0-label.
SharpModel point_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis point_unlearn(const ConceptClass& cls, const Blob& aux,
                         const std::vector<std::pair<Example, Blob>>& deleted);

// Product of d thresholds: one MinVal instance per coordinate over the
// 1-labeled items' coordinate values; 0-labeled items get empty tickets.
SharpModel prodthresh_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis prodthresh_unlearn(const ConceptClass& cls, const Blob& aux,
                              const std::vector<std::pair<Example, Blob>>& deleted);

// 1D thresholds: binary-search path over the (padded) domain; the sorted path
// values cut the line into cells, each with its own group symbols; aux is the
// final search point plus one occupancy bit per cell.
SharpModel sharpthresh_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis sharpthresh_unlearn(const ConceptClass& cls, const Blob& aux,
                               const std::vector<std::pair<Example, Blob>>& deleted);

// The binary-search path ending at the zero-loss point (shared with the
// central thresholds scheme). `lo`/`hi` delimit the consistent thresholds;
// `D` is the padded domain size 2^d - 2.
std::vector<u32> search_path(u32 D, u32 lo, u32 hi);
// The unique path reaching `target`, reconstructed without the data.
std::vector<u32> search_path_to(u32 D, u32 target);
// Smallest padded domain size 2^d - 2 >= N (d >= 2).
u32 padded_domain(u32 N);

}  // namespace ul
