#pragma once

#include <utility>

#include "ul/bits.hpp"
#include "ul/domain.hpp"

namespace ul {

// Agnostic 1D thresholds: works on arbitrary (possibly unrealizable) data and
// tracks, per dyadic interval of the padded domain, the locally optimal
// threshold and its loss over the full dataset. An item's ticket carries the
// sibling interval stats along its root-to-leaf path plus its own leaf stat
// and label counts, which is enough to re-derive the minimal ERM of any
// surviving subset.

struct AgnosticModel {
    Hypothesis h;
    Blob aux;  // the learned threshold
    std::vector<Blob> tickets;
};

AgnosticModel agnostic_thresh_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis agnostic_thresh_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                                   const std::vector<std::pair<Example, Blob>>& deleted);

// Realizability testing for 1D thresholds: tracks the largest 0-labeled and
// smallest 1-labeled values via the MaxVal/MinVal primitives. Returns true
// when the surviving data is realizable.
struct RealizabilityModel {
    bool realizable;
    Blob aux;
    std::vector<Blob> tickets;
};

RealizabilityModel realizability_learn(const ConceptClass& cls, const Dataset& S);
bool realizability_unlearn(const ConceptClass& cls, const Blob& aux,
                           const std::vector<std::pair<Example, Blob>>& deleted);

}  // namespace ul
