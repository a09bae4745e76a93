#include "ul/agnostic.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "ul/sharp.hpp"

namespace ul {

namespace {

u32 pow2_domain(u32 N) {
    u32 p = 2;
    while (p < N) p <<= 1;
    return p;
}

struct Counts {
    std::vector<u64> c0, c1;  // per value, index 1..Dp
    // Loss of h_{>a} over the items with x in [p, q].
    u64 loss_range(u32 a, u32 p, u32 q) const {
        u64 l = 0;
        for (u32 x = p; x <= q; ++x) l += x <= a ? c1[x] : c0[x];
        return l;
    }
};

struct Stat {
    u32 a;
    u64 err;  // loss of h_{>a} over the FULL dataset
};

// Locally optimal threshold of interval [p, q]: the smallest a in [p-1, q]
// minimizing the loss over the interval's own items.
Stat interval_stat(const Counts& c, u32 p, u32 q, u32 Dp) {
    u32 best = p - 1;
    u64 best_loss = c.loss_range(p - 1, p, q);
    for (u32 a = p; a <= q; ++a) {
        u64 l = c.loss_range(a, p, q);
        if (l < best_loss) { best = a; best_loss = l; }
    }
    return {best, c.loss_range(best, 1, Dp)};
}

}  // namespace

AgnosticModel agnostic_thresh_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::Thresholds)
        throw std::invalid_argument("agnostic_thresh_learn: wrong class");
    check_dataset(cls, S);
    const u32 Dp = pow2_domain(cls.domain_size);
    const unsigned abits = bit_width_for(u64(Dp) + 1);
    const unsigned ebits = bit_width_for(u64(S.size()) + 1);
    const unsigned L = bit_width_for(Dp);  // tree depth

    Counts c{std::vector<u64>(Dp + 1, 0), std::vector<u64>(Dp + 1, 0)};
    for (const auto& [x, y] : S) (y == 0 ? c.c0 : c.c1)[x[0]]++;

    // Heap layout over Dp leaves; node v covers a dyadic interval.
    std::vector<Stat> stat(std::size_t(2) * Dp);
    for (u32 v = 2 * Dp - 1; v >= 1; --v) {
        u32 lo = v, hi = v;
        while (lo < Dp) { lo *= 2; hi = hi * 2 + 1; }
        stat[v] = interval_stat(c, lo - Dp + 1, hi - Dp + 1, Dp);
    }

    AgnosticModel out;
    out.h = {HypKind::Threshold, {stat[1].a}};
    {
        BitWriter w;
        w.put(stat[1].a, abits);
        out.aux = w.take();
    }
    for (const auto& [x, y] : S) {
        const u32 leaf = Dp + x[0] - 1;
        BitWriter w;
        for (unsigned depth = 1; depth <= L; ++depth) {
            u32 sib = (leaf >> (L - depth)) ^ 1;
            w.put(stat[sib].a, abits);
            w.put(stat[sib].err, ebits);
        }
        w.put(stat[leaf].a, abits);
        w.put(stat[leaf].err, ebits);
        w.put(c.c0[x[0]], ebits);
        w.put(c.c1[x[0]], ebits);
        out.tickets.push_back(w.take());
    }
    return out;
}

Hypothesis agnostic_thresh_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                                   const std::vector<std::pair<Example, Blob>>& deleted) {
    const u32 Dp = pow2_domain(cls.domain_size);
    const unsigned abits = bit_width_for(u64(Dp) + 1);
    const unsigned ebits = bit_width_for(u64(n) + 1);
    const unsigned L = bit_width_for(Dp);

    BitReader ar(aux);
    const u32 a_root = static_cast<u32>(ar.get(abits));
    if (deleted.empty()) return {HypKind::Threshold, {a_root}};

    struct ParsedTicket {
        std::vector<Stat> sibling;  // index depth-1
        Stat leaf;
        u64 cnt0, cnt1;
    };
    std::map<u32, ParsedTicket> by_value;  // first ticket per deleted value
    Dataset removed;
    for (const auto& [z, t] : deleted) {
        removed.push_back(z);
        if (by_value.count(z.x[0])) continue;
        BitReader r(t);
        ParsedTicket pt;
        for (unsigned depth = 1; depth <= L; ++depth) {
            Stat s{static_cast<u32>(r.get(abits)), r.get(ebits)};
            pt.sibling.push_back(s);
        }
        pt.leaf = {static_cast<u32>(r.get(abits)), r.get(ebits)};
        pt.cnt0 = r.get(ebits);
        pt.cnt1 = r.get(ebits);
        if (!r.done()) throw std::invalid_argument("malformed ticket");
        by_value.emplace(z.x[0], std::move(pt));
    }

    std::vector<bool> touched(std::size_t(2) * Dp, false);
    for (const auto& [x, pt] : by_value)
        for (u32 v = Dp + x - 1; v >= 1; v >>= 1) touched[v] = true;

    // Candidate thresholds with their full-dataset losses: untouched sibling
    // subtrees contribute their stored stat; each deleted value contributes
    // both of its leaf-range thresholds, the second priced via the label
    // counts (the two hypotheses differ only at that value).
    std::vector<Stat> cand;
    std::set<u32> seen;
    for (const auto& [x, pt] : by_value) {
        const u32 leaf = Dp + x - 1;
        for (unsigned depth = 1; depth <= L; ++depth) {
            u32 sib = (leaf >> (L - depth)) ^ 1;
            if (!touched[sib] && seen.insert(sib).second) cand.push_back(pt.sibling[depth - 1]);
        }
        if (pt.leaf.a == x)
            cand.push_back({x - 1, pt.leaf.err + pt.cnt0 - pt.cnt1});
        else
            cand.push_back({x, pt.leaf.err - pt.cnt0 + pt.cnt1});
        cand.push_back(pt.leaf);
    }

    u32 best_a = 0;
    u64 best_loss = 0;
    bool first = true;
    for (const Stat& s : cand) {
        const u64 l = s.err - loss(cls, {HypKind::Threshold, {s.a}}, removed);
        if (first || l < best_loss || (l == best_loss && s.a < best_a)) {
            best_a = s.a;
            best_loss = l;
            first = false;
        }
    }
    return {HypKind::Threshold, {best_a}};
}

RealizabilityModel realizability_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::Thresholds)
        throw std::invalid_argument("realizability_learn: wrong class");
    check_dataset(cls, S);
    const u32 N = cls.domain_size;

    std::vector<u32> v0, v1;
    std::vector<std::size_t> i0, i1;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i].y == 0) { v0.push_back(S[i].x[0]); i0.push_back(i); }
        else { v1.push_back(S[i].x[0]); i1.push_back(i); }
    }
    ValModel x0 = maxval_learn(v0, N);
    ValModel x1 = minval_learn(v1, N);

    RealizabilityModel out;
    out.realizable = !x0.value || !x1.value || *x0.value < *x1.value;
    BitWriter w;
    w.put(out.realizable ? 1 : 0, 1);
    append_bits(w, x0.aux);
    append_bits(w, x1.aux);
    out.aux = w.take();
    out.tickets.assign(S.size(), Blob{});
    for (std::size_t k = 0; k < i0.size(); ++k) out.tickets[i0[k]] = x0.tickets[k];
    for (std::size_t k = 0; k < i1.size(); ++k) out.tickets[i1[k]] = x1.tickets[k];
    return out;
}

bool realizability_unlearn(const ConceptClass& cls, const Blob& aux,
                           const std::vector<std::pair<Example, Blob>>& deleted) {
    const u32 N = cls.domain_size;
    const unsigned vbits = bit_width_for(u64(N) + 1);
    BitReader r(aux);
    const bool was_realizable = r.get(1) != 0;
    Blob aux0 = read_bits(r, vbits);
    Blob aux1 = read_bits(r, vbits);
    if (was_realizable) return true;  // deletion cannot break realizability

    std::vector<std::pair<u32, Blob>> d0, d1;
    for (const auto& [z, t] : deleted)
        (z.y == 0 ? d0 : d1).emplace_back(z.x[0], t);
    auto x0 = maxval_unlearn(d0, aux0, N);
    auto x1 = minval_unlearn(d1, aux1, N);
    return !x0 || !x1 || *x0 < *x1;
}

}  // namespace ul
