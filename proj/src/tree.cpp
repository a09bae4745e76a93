#include "ul/tree.hpp"

#include <map>
#include <stdexcept>

#include "ul/hyp_codec.hpp"

namespace ul {

namespace {

u32 pad_to_pow2(u32 n) {
    u32 p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

TreeModel tree_learn(const ConceptClass& cls, const Dataset& S) {
    if (!class_is_mergeable(cls)) throw std::invalid_argument("tree scheme needs a mergeable class");
    check_dataset(cls, S);
    const u32 n = static_cast<u32>(S.size());
    const u32 n_pad = pad_to_pow2(std::max(n, u32(1)));
    const unsigned k = bit_width_for(n_pad);

    // Heap layout: root at 1, leaves at n_pad..2*n_pad-1.
    std::vector<EncodedState> node(std::size_t(2) * n_pad);
    for (u32 i = 0; i < n_pad; ++i)
        node[n_pad + i] = i < n ? encode(cls, {S[i]}) : neutral_encoding(cls);
    for (u32 v = n_pad - 1; v >= 1; --v)
        node[v] = merge(cls, node[2 * v], node[2 * v + 1]);

    TreeModel out;
    out.h = decode(cls, node[1]);
    {
        BitWriter w;
        write_hypothesis(cls, out.h, w);
        out.aux = w.take();
    }
    out.tickets.reserve(n);
    for (u32 i = 0; i < n; ++i) {
        BitWriter w;
        w.put(i, k);
        // Sibling encodings along the root-to-leaf path, root end first.
        for (unsigned depth = 1; depth <= k; ++depth) {
            u32 path = (n_pad + i) >> (k - depth);
            write_encoded(cls, node[path ^ 1], w);
        }
        out.tickets.push_back(w.take());
    }
    return out;
}

Hypothesis tree_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                        const std::vector<Blob>& deleted) {
    if (deleted.size() > n) throw std::invalid_argument("tree_unlearn: bad sizes");
    if (deleted.empty()) {
        BitReader r(aux);
        return read_hypothesis(cls, r);
    }
    const u32 n_pad = pad_to_pow2(n);
    const unsigned k = bit_width_for(n_pad);

    // Parse tickets and mark every node on a deleted leaf's path as touched.
    struct Ticket {
        u32 leaf;
        std::vector<EncodedState> siblings;  // index depth-1
    };
    std::vector<Ticket> ts;
    std::vector<bool> touched(std::size_t(2) * n_pad, false);
    for (const Blob& b : deleted) {
        BitReader r(b);
        Ticket t;
        t.leaf = static_cast<u32>(r.get(k));
        if (t.leaf >= n) throw std::invalid_argument("tree_unlearn: ticket index out of range");
        for (unsigned depth = 1; depth <= k; ++depth)
            t.siblings.push_back(read_encoded(cls, r));
        if (!r.done()) throw std::invalid_argument("tree_unlearn: trailing ticket bits");
        for (u32 v = n_pad + t.leaf; v >= 1; v >>= 1) touched[v] = true;
        ts.push_back(std::move(t));
    }

    // Fold the frontier: untouched nodes whose parent is touched. Each one is
    // the recorded sibling, at its depth, in the ticket of any deleted leaf
    // lying under its own sibling.
    EncodedState acc = neutral_encoding(cls);
    std::map<u32, EncodedState> folded;
    for (const Ticket& t : ts) {
        for (unsigned depth = 1; depth <= k; ++depth) {
            u32 path = (n_pad + t.leaf) >> (k - depth);
            u32 sib = path ^ 1;
            if (touched[sib]) {
                auto it = folded.find(sib);
                if (it != folded.end() && !(it->second == t.siblings[depth - 1]))
                    throw std::invalid_argument("tree_unlearn: tickets disagree on a sibling");
                continue;
            }
            acc = merge(cls, acc, t.siblings[depth - 1]);
            touched[sib] = true;  // folded once
            folded.emplace(sib, t.siblings[depth - 1]);
        }
    }
    return decode(cls, acc);
}

}  // namespace ul
