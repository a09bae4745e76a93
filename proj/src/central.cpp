#include "ul/central.hpp"

#include <algorithm>
#include <stdexcept>

#include "ul/sharp.hpp"

namespace ul {

CentralModel central_thresh_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::Thresholds)
        throw std::invalid_argument("central_thresh_learn: wrong class");
    check_dataset(cls, S);
    const u32 D = padded_domain(cls.domain_size);
    const unsigned vbits = bit_width_for(u64(D) + 1);
    const unsigned ebits = bit_width_for(u64(S.size()) + 1);

    u32 p = 0, q1 = D + 1;
    for (const auto& [x, y] : S) {
        if (y == 0) p = std::max(p, x[0]);
        else q1 = std::min(q1, x[0]);
    }
    if (p >= q1) throw std::runtime_error("central_thresh_learn: dataset not realizable");

    const auto path = search_path(D, p, q1 - 1);
    CentralModel out;
    out.h = {HypKind::Threshold, {path.back()}};
    BitWriter w;
    w.put(path.back(), vbits);
    for (u32 aj : path)
        w.put(loss(cls, {HypKind::Threshold, {aj}}, S), ebits);
    out.aux = w.take();
    return out;
}

Hypothesis central_thresh_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                                  const Dataset& deleted) {
    const u32 D = padded_domain(cls.domain_size);
    const unsigned vbits = bit_width_for(u64(D) + 1);
    const unsigned ebits = bit_width_for(u64(n) + 1);

    BitReader r(aux);
    const u32 ai = static_cast<u32>(r.get(vbits));
    const auto path = search_path_to(D, ai);
    for (u32 aj : path) {
        const u64 err = r.get(ebits);
        Hypothesis h{HypKind::Threshold, {aj}};
        if (err == loss(cls, h, deleted)) return h;  // survivor loss hit zero
    }
    throw std::logic_error("central_thresh_unlearn: no zero-loss path point");
}

CentralModel augpoint_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::PointFunctions)
        throw std::invalid_argument("augpoint_learn: wrong class");
    check_dataset(cls, S);
    const unsigned vbits = bit_width_for(u64(cls.domain_size) + 1);
    const unsigned cbits = bit_width_for(u64(S.size()) + 1);

    u32 a = 0, c = 0;
    for (const auto& [x, y] : S) {
        if (y != 1) continue;
        if (a != 0 && a != x[0])
            throw std::runtime_error("augpoint_learn: two distinct 1-labeled values");
        a = x[0];
        ++c;
    }
    if (a != 0)
        for (const auto& [x, y] : S)
            if (y == 0 && x[0] == a)
                throw std::runtime_error("augpoint_learn: dataset not realizable");

    CentralModel out;
    out.h = {HypKind::PointOrZero, {a}};  // 0 = the all-zeros hypothesis
    BitWriter w;
    w.put(a, vbits);
    w.put(c, cbits);
    out.aux = w.take();
    return out;
}

Hypothesis augpoint_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                            const Dataset& deleted) {
    const unsigned vbits = bit_width_for(u64(cls.domain_size) + 1);
    const unsigned cbits = bit_width_for(u64(n) + 1);
    BitReader r(aux);
    const u32 a = static_cast<u32>(r.get(vbits));
    const u64 c = r.get(cbits);
    if (a == 0) return {HypKind::PointOrZero, {0}};
    u64 k = 0;
    for (const auto& [x, y] : deleted)
        if (y == 1 && x[0] == a) ++k;
    return {HypKind::PointOrZero, {k == c ? 0 : a}};
}

CentralModel norep_point_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::PointFunctions)
        throw std::invalid_argument("norep_point_learn: wrong class");
    check_dataset(cls, S);
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (S[i] == S[j]) throw std::runtime_error("norep_point_learn: repeated example");
    const unsigned vbits = bit_width_for(u64(cls.domain_size) + 1);

    CentralModel out;
    out.h = canonical_erm(cls, S);  // throws when not realizable
    std::vector<bool> zero_at(cls.domain_size + 1, false);
    u32 a = 0;  // the 1-labeled value, 0 when the data is all 0-labeled
    for (const auto& [x, y] : S) {
        if (y == 0) zero_at[x[0]] = true;
        else a = x[0];
    }
    u32 b = 0;
    for (u32 v = 1; v <= cls.domain_size; ++v)
        if (!zero_at[v]) { b = v; break; }

    BitWriter w;
    w.put(a, vbits);
    w.put(b, vbits);
    out.aux = w.take();
    return out;
}

Hypothesis norep_point_unlearn(const ConceptClass& cls, u32 /*n*/, const Blob& aux,
                               const Dataset& deleted) {
    const unsigned vbits = bit_width_for(u64(cls.domain_size) + 1);
    BitReader r(aux);
    const u32 a = static_cast<u32>(r.get(vbits));
    const u32 b = static_cast<u32>(r.get(vbits));

    bool a_deleted = false;
    u32 c = 0;  // smallest deleted 0-labeled value, 0 = none
    for (const auto& [x, y] : deleted) {
        if (y == 1 && x[0] == a) a_deleted = true;
        if (y == 0 && (c == 0 || x[0] < c)) c = x[0];
    }
    // A surviving 1-labeled example pins the output; otherwise the smallest
    // value with no surviving 0-label wins (repetition-free data frees a
    // value as soon as its single 0-labeled example is deleted).
    if (a != 0 && !a_deleted) return {HypKind::Point, {a}};
    return {HypKind::Point, {c == 0 ? b : std::min(b, c)}};
}

}  // namespace ul
