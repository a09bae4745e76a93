#include "ul/mergeable.hpp"

#include <algorithm>
#include <stdexcept>

#include "ul/gf2.hpp"

namespace ul {

namespace {

u32 parity_row(const ConceptClass& cls, const Example& z) {
    u32 r = u32(z.y) << cls.dims;
    for (u32 j = 0; j < cls.dims; ++j) r |= z.x[j] << j;
    return r;
}

bool closure_class(const ConceptClass& cls) {
    return cls.kind == ClassKind::ProductThresholds || cls.kind == ClassKind::Explicit;
}

// Least hypothesis of an explicit intersection-closed table that pointwise
// dominates both arguments; throws if no row dominates both (the underlying
// union of datasets was not realizable).
Hypothesis explicit_join(const ConceptClass& cls, const Hypothesis& h1, const Hypothesis& h2) {
    const auto& r1 = cls.table[h1.param[0]];
    const auto& r2 = cls.table[h2.param[0]];
    std::vector<std::uint8_t> acc(cls.domain_size, 1);
    bool any = false;
    for (u32 r = 0; r < cls.table.size(); ++r) {
        const auto& row = cls.table[r];
        bool dominates = true;
        for (u32 i = 0; i < cls.domain_size && dominates; ++i)
            if ((r1[i] && !row[i]) || (r2[i] && !row[i])) dominates = false;
        if (!dominates) continue;
        for (u32 i = 0; i < cls.domain_size; ++i) acc[i] &= row[i];
        any = true;
    }
    if (!any) throw std::runtime_error("merge: no hypothesis covers both operands");
    for (u32 r = 0; r < cls.table.size(); ++r)
        if (cls.table[r] == acc) return {HypKind::Explicit, {r}};
    throw std::runtime_error("merge: table is not intersection-closed");
}

// Brute-force VC dimension of an explicit table; test-scale domains only.
u32 explicit_vc_dim(const ConceptClass& cls) {
    const u32 n = cls.domain_size;
    u32 best = 0;
    for (u32 mask = 1; mask < (u32(1) << n); ++mask) {
        u32 k = static_cast<u32>(__builtin_popcount(mask));
        if (k <= best) continue;
        std::vector<u32> pts;
        for (u32 i = 0; i < n; ++i)
            if ((mask >> i) & 1) pts.push_back(i);
        u32 seen = 0;  // bitmask over labelings actually realized
        std::vector<bool> hit(std::size_t(1) << k, false);
        u32 count = 0;
        for (const auto& row : cls.table) {
            u32 lab = 0;
            for (u32 i = 0; i < k; ++i) lab |= u32(row[pts[i]]) << i;
            if (!hit[lab]) { hit[lab] = true; ++count; }
        }
        (void)seen;
        if (count == (u32(1) << k)) best = k;
    }
    return best;
}

}  // namespace

bool class_is_mergeable(const ConceptClass& cls) {
    // Point functions admit no small codec; asking for one is an error.
    return cls.kind != ClassKind::PointFunctions;
}

EncodedState neutral_encoding(const ConceptClass& cls) {
    EncodedState e;
    e.kind = cls.kind;
    switch (cls.kind) {
        case ClassKind::Thresholds:
            e.xminus = 0;
            break;
        case ClassKind::Parities:
            break;  // no constraints: the full space
        case ClassKind::ProductThresholds:
        case ClassKind::Explicit:
            e.closure = canonical_erm(cls, {});  // bottom of the closure lattice
            break;
        case ClassKind::PointFunctions:
            throw std::invalid_argument("point functions are not mergeable");
    }
    return e;
}

EncodedState encode(const ConceptClass& cls, const Dataset& S) {
    check_dataset(cls, S);
    EncodedState e;
    e.kind = cls.kind;
    switch (cls.kind) {
        case ClassKind::Thresholds: {
            if (!is_realizable(cls, S)) throw std::runtime_error("encode: dataset not realizable");
            for (const auto& [x, y] : S)
                if (y == 0) e.xminus = std::max(e.xminus, x[0]);
            break;
        }
        case ClassKind::Parities: {
            std::vector<u32> rows;
            for (const auto& z : S) rows.push_back(parity_row(cls, z));
            e.rows = gf2::rref(std::move(rows), cls.dims);
            if (!gf2::consistent(e.rows, cls.dims))
                throw std::runtime_error("encode: dataset not realizable");
            break;
        }
        case ClassKind::ProductThresholds:
        case ClassKind::Explicit:
            e.closure = canonical_erm(cls, S);  // throws when not realizable
            break;
        case ClassKind::PointFunctions:
            throw std::invalid_argument("point functions are not mergeable");
    }
    return e;
}

Hypothesis decode(const ConceptClass& cls, const EncodedState& e) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
            return {HypKind::Threshold, {e.xminus}};
        case ClassKind::Parities: {
            auto w = gf2::lex_min_solution(e.rows, cls.dims);
            if (!w) throw std::runtime_error("decode: inconsistent encoding");
            std::vector<u32> wv(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j) wv[j] = (*w >> j) & 1;
            return {HypKind::Parity, std::move(wv)};
        }
        case ClassKind::ProductThresholds:
        case ClassKind::Explicit:
            return e.closure;
        case ClassKind::PointFunctions:
            break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

EncodedState merge(const ConceptClass& cls, const EncodedState& a, const EncodedState& b) {
    EncodedState e;
    e.kind = cls.kind;
    switch (cls.kind) {
        case ClassKind::Thresholds:
            e.xminus = std::max(a.xminus, b.xminus);
            break;
        case ClassKind::Parities: {
            std::vector<u32> rows = a.rows;
            rows.insert(rows.end(), b.rows.begin(), b.rows.end());
            e.rows = gf2::rref(std::move(rows), cls.dims);
            if (!gf2::consistent(e.rows, cls.dims))
                throw std::runtime_error("merge: empty intersection (union not realizable)");
            break;
        }
        case ClassKind::ProductThresholds: {
            // Join of the closure lattice: loosest coordinate bound wins.
            std::vector<u32> v(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j)
                v[j] = std::min(a.closure.param[j], b.closure.param[j]);
            e.closure = {HypKind::ProductThreshold, std::move(v)};
            break;
        }
        case ClassKind::Explicit:
            e.closure = explicit_join(cls, a.closure, b.closure);
            break;
        case ClassKind::PointFunctions:
            throw std::invalid_argument("point functions are not mergeable");
    }
    return e;
}

Dataset compress(const ConceptClass& cls, const Dataset& S) {
    switch (cls.kind) {
        case ClassKind::Thresholds: {
            if (!is_realizable(cls, S)) throw std::runtime_error("compress: dataset not realizable");
            u32 xm = 0;
            for (const auto& [x, y] : S)
                if (y == 0) xm = std::max(xm, x[0]);
            if (xm == 0) return {};
            return {Example{{xm}, 0}};
        }
        case ClassKind::Parities: {
            // Keep items whose constraint raises the rank of the running
            // system, scanning in dataset order.
            Dataset T;
            std::vector<u32> sys;
            for (const auto& z : S) {
                auto trial = sys;
                trial.push_back(parity_row(cls, z));
                trial = gf2::rref(std::move(trial), cls.dims);
                if (!gf2::consistent(trial, cls.dims))
                    throw std::runtime_error("compress: dataset not realizable");
                if (trial.size() > sys.size()) {
                    sys = std::move(trial);
                    T.push_back(z);
                }
            }
            return T;
        }
        case ClassKind::ProductThresholds:
        case ClassKind::Explicit: {
            const EncodedState full = encode(cls, S);
            // Removal scan over the 1-labeled items: drop everything whose
            // absence leaves the closure unchanged.
            Dataset T;
            for (const auto& z : S)
                if (z.y == 1) T.push_back(z);
            for (std::size_t i = 0; i < T.size();) {
                Dataset trial = T;
                trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
                if (encode(cls, trial) == full)
                    T = std::move(trial);
                else
                    ++i;
            }
            return T;
        }
        case ClassKind::PointFunctions:
            break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

u32 compression_bound(const ConceptClass& cls) {
    switch (cls.kind) {
        case ClassKind::Thresholds: return 1;
        case ClassKind::Parities: return cls.dims;
        case ClassKind::ProductThresholds: return cls.dims;
        case ClassKind::Explicit: return explicit_vc_dim(cls);
        case ClassKind::PointFunctions: break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

unsigned encoded_bits(const ConceptClass& cls) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
            return bit_width_for(u64(cls.domain_size) + 1);
        case ClassKind::Parities:
            return cls.dims * (cls.dims + 1);
        case ClassKind::ProductThresholds:
            return cls.dims * bit_width_for(u64(cls.side) + 1);
        case ClassKind::Explicit:
            return bit_width_for(cls.table.size());
        case ClassKind::PointFunctions:
            break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

void write_encoded(const ConceptClass& cls, const EncodedState& e, BitWriter& w) {
    switch (cls.kind) {
        case ClassKind::Thresholds:
            w.put(e.xminus, bit_width_for(u64(cls.domain_size) + 1));
            return;
        case ClassKind::Parities:
            for (u32 i = 0; i < cls.dims; ++i)
                w.put(i < e.rows.size() ? e.rows[i] : 0, cls.dims + 1);
            return;
        case ClassKind::ProductThresholds:
            for (u32 j = 0; j < cls.dims; ++j)
                w.put(e.closure.param[j], bit_width_for(u64(cls.side) + 1));
            return;
        case ClassKind::Explicit:
            w.put(e.closure.param[0], bit_width_for(cls.table.size()));
            return;
        case ClassKind::PointFunctions:
            break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

EncodedState read_encoded(const ConceptClass& cls, BitReader& r) {
    EncodedState e;
    e.kind = cls.kind;
    switch (cls.kind) {
        case ClassKind::Thresholds:
            e.xminus = static_cast<u32>(r.get(bit_width_for(u64(cls.domain_size) + 1)));
            return e;
        case ClassKind::Parities:
            for (u32 i = 0; i < cls.dims; ++i) {
                u32 row = static_cast<u32>(r.get(cls.dims + 1));
                if (row != 0) e.rows.push_back(row);
            }
            return e;
        case ClassKind::ProductThresholds: {
            std::vector<u32> v(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j)
                v[j] = static_cast<u32>(r.get(bit_width_for(u64(cls.side) + 1)));
            e.closure = {HypKind::ProductThreshold, std::move(v)};
            return e;
        }
        case ClassKind::Explicit:
            e.closure = {HypKind::Explicit, {static_cast<u32>(r.get(bit_width_for(cls.table.size())))}};
            return e;
        case ClassKind::PointFunctions:
            break;
    }
    throw std::invalid_argument("point functions are not mergeable");
}

unsigned example_bits(const ConceptClass& cls) {
    return bit_width_for(cls.domain_count()) + 1;
}

void write_example(const ConceptClass& cls, const Example& z, BitWriter& w) {
    u64 idx = 0;
    switch (cls.kind) {
        case ClassKind::Thresholds:
        case ClassKind::PointFunctions:
        case ClassKind::Explicit:
            idx = z.x[0] - 1;
            break;
        case ClassKind::Parities:
            for (u32 j = 0; j < cls.dims; ++j) idx |= u64(z.x[j]) << j;
            break;
        case ClassKind::ProductThresholds:
            for (u32 j = cls.dims; j-- > 0;) idx = idx * cls.side + (z.x[j] - 1);
            break;
    }
    w.put(idx, bit_width_for(cls.domain_count()));
    w.put(z.y, 1);
}

Example read_example(const ConceptClass& cls, BitReader& r) {
    u64 idx = r.get(bit_width_for(cls.domain_count()));
    Example z;
    z.x = cls.point_at(idx);
    z.y = static_cast<std::uint8_t>(r.get(1));
    return z;
}

std::size_t compression_prefix(const ConceptClass& cls, const Dataset& payload) {
    EncodedState run = neutral_encoding(cls);
    std::size_t split = 0;
    for (const auto& z : payload) {
        EncodedState next = merge(cls, run, encode(cls, {z}));
        if (next == run) break;
        run = std::move(next);
        ++split;
    }
    return split;
}

}  // namespace ul
