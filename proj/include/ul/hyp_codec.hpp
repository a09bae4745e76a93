#pragma once

#include "ul/bits.hpp"
#include "ul/domain.hpp"

namespace ul {

// Fixed-width serialization of hypotheses, one format per class; the width is
// the ceil-log of the hypothesis count.

unsigned hypothesis_bits(const ConceptClass& cls);
void write_hypothesis(const ConceptClass& cls, const Hypothesis& h, BitWriter& w);
Hypothesis read_hypothesis(const ConceptClass& cls, BitReader& r);

}  // namespace ul
