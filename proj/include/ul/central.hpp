#pragma once

#include "ul/bits.hpp"
#include "ul/domain.hpp"

namespace ul {

// Central-model learners: deletions are served from stored state alone, so
// there are no tickets. Each unlearn call receives the deleted examples
// themselves plus the original dataset size n (needed to size count fields).

struct CentralModel {
    Hypothesis h;
    Blob aux;
};

// 1D thresholds via binary search: aux is the final search point and the
// dataset losses along the path.
CentralModel central_thresh_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis central_thresh_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                                  const Dataset& deleted);

// Point functions augmented with the all-zeros hypothesis: aux is the learned
// hypothesis and the multiplicity of its 1-labeled example.
CentralModel augpoint_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis augpoint_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                            const Dataset& deleted);

// Point functions on repetition-free data: aux is the output point and the
// smallest value with no 0-labeled example.
CentralModel norep_point_learn(const ConceptClass& cls, const Dataset& S);
Hypothesis norep_point_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                               const Dataset& deleted);

}  // namespace ul
