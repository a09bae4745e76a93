#include "ul/hyp_codec.hpp"

#include <stdexcept>

namespace ul {

unsigned hypothesis_bits(const ConceptClass& cls) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
            return bit_width_for(u64(cls.domain_size) + 1);
        case ClassKind::ProductThresholds:
            return cls.dims * bit_width_for(u64(cls.side) + 1);
        case ClassKind::Parities:
            return cls.dims;
        case ClassKind::PointFunctions:
            return bit_width_for(u64(cls.domain_size) + 1);  // room for the zero variant
        case ClassKind::Explicit:
            return bit_width_for(cls.table.size());
    }
    throw std::invalid_argument("bad class");
}

void write_hypothesis(const ConceptClass& cls, const Hypothesis& h, BitWriter& w) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
        case ClassKind::Explicit:
            w.put(h.param[0], hypothesis_bits(cls));
            return;
        case ClassKind::PointFunctions:
            w.put(h.param[0], hypothesis_bits(cls));  // 0 encodes the zero hypothesis
            return;
        case ClassKind::ProductThresholds:
            for (u32 j = 0; j < cls.dims; ++j)
                w.put(h.param[j], bit_width_for(u64(cls.side) + 1));
            return;
        case ClassKind::Parities:
            for (u32 j = 0; j < cls.dims; ++j) w.put(h.param[j], 1);
            return;
    }
    throw std::invalid_argument("bad class");
}

Hypothesis read_hypothesis(const ConceptClass& cls, BitReader& r) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
            return {HypKind::Threshold, {static_cast<u32>(r.get(hypothesis_bits(cls)))}};
        case ClassKind::Explicit:
            return {HypKind::Explicit, {static_cast<u32>(r.get(hypothesis_bits(cls)))}};
        case ClassKind::PointFunctions: {
            u32 a = static_cast<u32>(r.get(hypothesis_bits(cls)));
            return {a == 0 ? HypKind::PointOrZero : HypKind::Point, {a}};
        }
        case ClassKind::ProductThresholds: {
            std::vector<u32> v(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j)
                v[j] = static_cast<u32>(r.get(bit_width_for(u64(cls.side) + 1)));
            return {HypKind::ProductThreshold, std::move(v)};
        }
        case ClassKind::Parities: {
            std::vector<u32> v(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j) v[j] = static_cast<u32>(r.get(1));
            return {HypKind::Parity, std::move(v)};
        }
    }
    throw std::invalid_argument("bad class");
}

}  // namespace ul
