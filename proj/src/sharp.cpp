#include "ul/sharp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ul {

namespace {

// Assigns each input position its group's next family symbol, groups keyed by
// value. Returns position -> symbol.
std::vector<SpernerSymbol> group_symbols(const std::vector<u32>& keys) {
    std::map<u32, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
    std::vector<SpernerSymbol> out(keys.size());
    for (const auto& [k, idxs] : groups) {
        auto syms = multiset_elements(global_family(idxs.size()));
        for (std::size_t j = 0; j < idxs.size(); ++j) out[idxs[j]] = syms[j];
    }
    return out;
}

// True when the whole group was removed: the deleted symbols reproduce the
// family of their own size.
bool group_emptied(const std::vector<SpernerSymbol>& syms) {
    return !syms.empty() && ctz_unlearn(syms, std::nullopt) == Verdict::Empty;
}

ValModel extreme_learn(const std::vector<u32>& values, u32 V, bool want_min) {
    for (u32 v : values)
        if (v < 1 || v > V) throw std::invalid_argument("value out of range");
    const unsigned vbits = bit_width_for(u64(V) + 1);

    ValModel out;
    if (!values.empty())
        out.value = want_min ? *std::min_element(values.begin(), values.end())
                             : *std::max_element(values.begin(), values.end());
    {
        BitWriter w;
        w.put(out.value.value_or(0), vbits);
        out.aux = w.take();
    }

    // Next distinct value in walk direction, per distinct value.
    std::vector<u32> distinct(values);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<u32, u32> next;  // 0 = none
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (want_min)
            next[distinct[i]] = i + 1 < distinct.size() ? distinct[i + 1] : 0;
        else
            next[distinct[i]] = i > 0 ? distinct[i - 1] : 0;
    }

    auto syms = group_symbols(values);
    out.tickets.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        BitWriter w;
        w.put(syms[i], 16);
        w.put(next[values[i]], vbits);
        out.tickets.push_back(w.take());
    }
    return out;
}

std::optional<u32> extreme_unlearn(const std::vector<std::pair<u32, Blob>>& deleted,
                                   const Blob& aux, u32 V) {
    const unsigned vbits = bit_width_for(u64(V) + 1);
    BitReader ar(aux);
    u32 b = static_cast<u32>(ar.get(vbits));
    if (b == 0) {
        if (!deleted.empty()) throw std::invalid_argument("deletion from an empty multiset");
        return std::nullopt;
    }

    struct Parsed { SpernerSymbol sym; u32 next; };
    std::map<u32, std::vector<Parsed>> by_value;
    for (const auto& [v, t] : deleted) {
        BitReader r(t);
        Parsed p{static_cast<SpernerSymbol>(r.get(16)), static_cast<u32>(r.get(vbits))};
        if (!r.done()) throw std::invalid_argument("malformed ticket");
        by_value[v].push_back(p);
    }

    // Walk from the stored extreme while its whole group is gone.
    for (;;) {
        auto it = by_value.find(b);
        if (it == by_value.end()) return b;
        std::vector<SpernerSymbol> syms;
        for (const auto& p : it->second) syms.push_back(p.sym);
        if (!group_emptied(syms)) return b;
        u32 nxt = it->second.front().next;
        if (nxt == 0) return std::nullopt;
        b = nxt;
    }
}

}  // namespace

ValModel minval_learn(const std::vector<u32>& values, u32 V) {
    return extreme_learn(values, V, true);
}

ValModel maxval_learn(const std::vector<u32>& values, u32 V) {
    return extreme_learn(values, V, false);
}

std::optional<u32> minval_unlearn(const std::vector<std::pair<u32, Blob>>& deleted,
                                  const Blob& aux, u32 V) {
    return extreme_unlearn(deleted, aux, V);
}

std::optional<u32> maxval_unlearn(const std::vector<std::pair<u32, Blob>>& deleted,
                                  const Blob& aux, u32 V) {
    return extreme_unlearn(deleted, aux, V);
}

unsigned val_aux_bits(u32 V) { return bit_width_for(u64(V) + 1); }
unsigned val_ticket_bits(u32 V) { return 16 + bit_width_for(u64(V) + 1); }

// -- point functions ---------------------------------------------------------

SharpModel point_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::PointFunctions) throw std::invalid_argument("point_learn: wrong class");
    check_dataset(cls, S);
    const u32 N = cls.domain_size;
    const unsigned vbits = bit_width_for(u64(N) + 1);

    SharpModel out;
    out.h = canonical_erm(cls, S);  // throws when not realizable

    bool has_one = false;
    std::vector<bool> zero_at(N + 1, false);
    for (const auto& [x, y] : S) {
        if (y == 1) has_one = true;
        else zero_at[x[0]] = true;
    }
    u32 b = 0;
    for (u32 v = 1; v <= N; ++v)
        if (!zero_at[v]) { b = v; break; }
    // b always exists: otherwise no point hypothesis is consistent.

    BitWriter w;
    w.put(out.h.param[0], vbits);
    w.put(has_one ? 1 : 0, 1);
    w.put(b, vbits);
    out.aux = w.take();

    std::vector<u32> keys;
    for (const auto& z : S) keys.push_back(z.x[0]);
    auto syms = group_symbols(keys);
    for (std::size_t i = 0; i < S.size(); ++i) {
        BitWriter tw;
        tw.put(syms[i], 16);
        out.tickets.push_back(tw.take());
    }
    return out;
}

Hypothesis point_unlearn(const ConceptClass& cls, const Blob& aux,
                         const std::vector<std::pair<Example, Blob>>& deleted) {
    const u32 N = cls.domain_size;
    const unsigned vbits = bit_width_for(u64(N) + 1);
    BitReader ar(aux);
    const u32 a = static_cast<u32>(ar.get(vbits));
    const bool has_one = ar.get(1) != 0;
    u32 b = static_cast<u32>(ar.get(vbits));

    if (deleted.empty()) return {HypKind::Point, {a}};

    std::map<u32, std::vector<SpernerSymbol>> by_value;
    for (const auto& [z, t] : deleted) {
        BitReader r(t);
        by_value[z.x[0]].push_back(static_cast<SpernerSymbol>(r.get(16)));
        if (!r.done()) throw std::invalid_argument("malformed ticket");
    }

    if (has_one) {
        auto it = by_value.find(a);
        if (it == by_value.end() || !group_emptied(it->second))
            return {HypKind::Point, {a}};
        // The 1-labeled group is gone; fall through to the 0-label rule.
    }
    // Survivors are all 0-labeled: smallest value with no surviving example.
    // Every value below b occurs in the original data, so only fully deleted
    // groups can beat b.
    for (u32 j = b; j-- > 1;) {
        auto it = by_value.find(j);
        if (it != by_value.end() && group_emptied(it->second)) b = j;
    }
    return {HypKind::Point, {b}};
}

// -- product of d thresholds -------------------------------------------------

SharpModel prodthresh_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::ProductThresholds)
        throw std::invalid_argument("prodthresh_learn: wrong class");
    check_dataset(cls, S);
    const u32 d = cls.dims, m = cls.side;

    SharpModel out;
    out.h = canonical_erm(cls, S);  // throws when not realizable

    std::vector<u32> pos_idx;  // positions of 1-labeled items
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S[i].y == 1) pos_idx.push_back(static_cast<u32>(i));
    // Hand out group symbols in a canonical item order so the ticket multiset
    // does not depend on how the dataset happens to be ordered.
    std::stable_sort(pos_idx.begin(), pos_idx.end(),
                     [&](u32 a, u32 b) { return S[a].x < S[b].x; });

    std::vector<ValModel> coord(d);
    for (u32 j = 0; j < d; ++j) {
        std::vector<u32> vals;
        for (u32 i : pos_idx) vals.push_back(S[i].x[j]);
        coord[j] = minval_learn(vals, m);
    }

    BitWriter aw;
    for (u32 j = 0; j < d; ++j) append_bits(aw, coord[j].aux);
    out.aux = aw.take();

    out.tickets.assign(S.size(), Blob{});
    for (std::size_t k = 0; k < pos_idx.size(); ++k) {
        BitWriter tw;
        for (u32 j = 0; j < d; ++j) append_bits(tw, coord[j].tickets[k]);
        out.tickets[pos_idx[k]] = tw.take();
    }
    return out;
}

Hypothesis prodthresh_unlearn(const ConceptClass& cls, const Blob& aux,
                              const std::vector<std::pair<Example, Blob>>& deleted) {
    const u32 d = cls.dims, m = cls.side;
    const unsigned vbits = bit_width_for(u64(m) + 1);
    const unsigned tbits = val_ticket_bits(m);

    BitReader ar(aux);
    std::vector<Blob> coord_aux(d);
    for (u32 j = 0; j < d; ++j) coord_aux[j] = read_bits(ar, vbits);

    std::vector<std::vector<std::pair<u32, Blob>>> coord_del(d);
    for (const auto& [z, t] : deleted) {
        if (z.y == 0) {
            if (t.nbits != 0) throw std::invalid_argument("0-labeled ticket must be empty");
            continue;
        }
        BitReader r(t);
        for (u32 j = 0; j < d; ++j) coord_del[j].emplace_back(z.x[j], read_bits(r, tbits));
        if (!r.done()) throw std::invalid_argument("malformed ticket");
    }

    std::vector<u32> a(d);
    for (u32 j = 0; j < d; ++j) {
        auto b = minval_unlearn(coord_del[j], coord_aux[j], m);
        a[j] = b ? *b - 1 : m;
    }
    return {HypKind::ProductThreshold, std::move(a)};
}

// -- sharp 1D thresholds -----------------------------------------------------

u32 padded_domain(u32 N) {
    u32 dd = 2;
    while ((u32(1) << dd) - 2 < N) ++dd;
    return (u32(1) << dd) - 2;
}

std::vector<u32> search_path(u32 D, u32 lo, u32 hi) {
    const unsigned dd = bit_width_for(u64(D) + 2);  // D = 2^dd - 2
    u32 a = (u32(1) << (dd - 1)) - 1;
    std::vector<u32> path{a};
    for (unsigned i = 0; a < lo || a > hi; ++i) {
        if (dd < i + 2) throw std::logic_error("search_path: did not converge");
        u32 step = u32(1) << (dd - i - 2);
        a = a < lo ? a + step : a - step;
        path.push_back(a);
    }
    return path;
}

std::vector<u32> search_path_to(u32 D, u32 target) {
    return search_path(D, target, target);
}

namespace {

struct Cells {
    std::vector<u32> bounds;  // sorted distinct path values v_1 < ... < v_s
    // Cell k (0-based) is (bounds[k], bounds[k+1]].
    std::size_t count() const { return bounds.empty() ? 0 : bounds.size() - 1; }
    // Cell containing x, or nullopt when x is outside every cell.
    std::optional<std::size_t> locate(u32 x) const {
        if (bounds.empty() || x <= bounds.front() || x > bounds.back()) return std::nullopt;
        auto it = std::lower_bound(bounds.begin(), bounds.end(), x);
        return static_cast<std::size_t>(it - bounds.begin()) - 1;
    }
};

Cells path_cells(const std::vector<u32>& path) {
    Cells c;
    c.bounds = path;
    std::sort(c.bounds.begin(), c.bounds.end());
    c.bounds.erase(std::unique(c.bounds.begin(), c.bounds.end()), c.bounds.end());
    return c;
}

}  // namespace

SharpModel sharpthresh_learn(const ConceptClass& cls, const Dataset& S) {
    if (cls.kind != ClassKind::Thresholds) throw std::invalid_argument("sharpthresh_learn: wrong class");
    check_dataset(cls, S);
    const u32 D = padded_domain(cls.domain_size);
    const unsigned vbits = bit_width_for(u64(D) + 1);

    u32 p = 0, q1 = D + 1;  // q1 = smallest 1-labeled x
    for (const auto& [x, y] : S) {
        if (y == 0) p = std::max(p, x[0]);
        else q1 = std::min(q1, x[0]);
    }
    if (p >= q1) throw std::runtime_error("sharpthresh_learn: dataset not realizable");
    const u32 q = q1 - 1;

    const auto path = search_path(D, p, q);
    const Cells cells = path_cells(path);

    // Group items by cell; assign family symbols per group in input order.
    std::vector<std::optional<std::size_t>> cell_of(S.size());
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < S.size(); ++i) {
        cell_of[i] = cells.locate(S[i].x[0]);
        if (cell_of[i]) members[*cell_of[i]].push_back(i);
    }

    SharpModel out;
    out.h = {HypKind::Threshold, {path.back()}};
    out.tickets.assign(S.size(), Blob{});
    for (const auto& [k, idxs] : members) {
        auto syms = multiset_elements(global_family(idxs.size()));
        for (std::size_t j = 0; j < idxs.size(); ++j) {
            BitWriter tw;
            tw.put(syms[j], 16);
            out.tickets[idxs[j]] = tw.take();
        }
    }

    BitWriter aw;
    aw.put(path.back(), vbits);
    for (std::size_t k = 0; k < cells.count(); ++k)
        aw.put(members.count(k) ? 1 : 0, 1);
    out.aux = aw.take();
    return out;
}

Hypothesis sharpthresh_unlearn(const ConceptClass& cls, const Blob& aux,
                               const std::vector<std::pair<Example, Blob>>& deleted) {
    const u32 D = padded_domain(cls.domain_size);
    const unsigned vbits = bit_width_for(u64(D) + 1);

    BitReader ar(aux);
    const u32 ai = static_cast<u32>(ar.get(vbits));
    const auto path = search_path_to(D, ai);
    const Cells cells = path_cells(path);
    std::vector<bool> occupied(cells.count());
    for (std::size_t k = 0; k < cells.count(); ++k) occupied[k] = ar.get(1) != 0;

    if (deleted.empty()) return {HypKind::Threshold, {ai}};

    std::map<std::size_t, std::vector<SpernerSymbol>> by_cell;
    for (const auto& [z, t] : deleted) {
        auto k = cells.locate(z.x[0]);
        if (!k) {
            if (t.nbits != 0) throw std::invalid_argument("out-of-cell ticket must be empty");
            continue;
        }
        BitReader r(t);
        by_cell[*k].push_back(static_cast<SpernerSymbol>(r.get(16)));
        if (!r.done()) throw std::invalid_argument("malformed ticket");
    }

    std::vector<bool> alive(cells.count());
    for (std::size_t k = 0; k < cells.count(); ++k) {
        auto it = by_cell.find(k);
        alive[k] = it == by_cell.end() ? occupied[k] : !group_emptied(it->second);
    }

    // First path point whose span to a_i holds no survivor; h at that point
    // has zero loss on the survivors, and earlier points do not.
    for (u32 aj : path) {
        const u32 lo = std::min(aj, ai), hi = std::max(aj, ai);
        bool clear = true;
        for (std::size_t k = 0; k < cells.count() && clear; ++k)
            if (alive[k] && cells.bounds[k] >= lo && cells.bounds[k + 1] <= hi) clear = false;
        if (clear) return {HypKind::Threshold, {aj}};
    }
    return {HypKind::Threshold, {ai}};  // unreachable: the span at a_i is empty
}

}  // namespace ul
