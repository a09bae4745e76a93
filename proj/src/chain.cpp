#include "ul/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ul/hyp_codec.hpp"

namespace ul {

namespace {

// Removes one occurrence of each item of `items` from `from`; throws if an
// occurrence is missing.
void multiset_subtract(Dataset& from, const Dataset& items) {
    for (const auto& z : items) {
        auto it = std::find(from.begin(), from.end(), z);
        if (it == from.end()) throw std::runtime_error("chain: item not present in cell");
        from.erase(it);
    }
}

}  // namespace

ChainModel chain_learn(const ConceptClass& cls, const Dataset& S) {
    if (!class_is_mergeable(cls)) throw std::invalid_argument("chain scheme needs a mergeable class");
    check_dataset(cls, S);
    const u32 n = static_cast<u32>(S.size());
    const unsigned idx_bits = bit_width_for(u64(n) + 1);

    // Peel cells off the remainder, recording each item's cell (0 = none).
    std::vector<Dataset> cells;
    std::vector<u32> cell_of(n, 0);
    {
        std::vector<std::size_t> live(n);
        for (std::size_t i = 0; i < n; ++i) live[i] = i;
        Dataset remaining = S;
        for (;;) {
            Dataset T = compress(cls, remaining);
            if (T.empty()) break;
            cells.push_back(T);
            for (const auto& z : T) {
                auto it = std::find(remaining.begin(), remaining.end(), z);
                std::size_t pos = static_cast<std::size_t>(it - remaining.begin());
                cell_of[live[pos]] = static_cast<u32>(cells.size());
                remaining.erase(it);
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
            }
        }
    }

    ChainModel out;
    out.h = decode(cls, encode(cls, S));
    {
        BitWriter w;
        write_hypothesis(cls, out.h, w);
        out.aux = w.take();
    }
    out.tickets.reserve(n);
    for (u32 i = 0; i < n; ++i) {
        BitWriter w;
        const u32 j = cell_of[i];
        w.put(j, idx_bits);
        if (j != 0) {
            for (const auto& z : cells[j - 1]) write_example(cls, z, w);
            if (j < cells.size())
                for (const auto& z : cells[j]) write_example(cls, z, w);
        }
        out.tickets.push_back(w.take());
    }
    return out;
}

Hypothesis chain_unlearn(const ConceptClass& cls, u32 n, const Blob& aux,
                         const std::vector<std::pair<Example, Blob>>& deleted) {
    if (deleted.size() > n) throw std::invalid_argument("chain_unlearn: bad sizes");
    const unsigned idx_bits = bit_width_for(u64(n) + 1);
    const unsigned ex_bits = example_bits(cls);

    if (deleted.empty()) {
        BitReader r(aux);
        return read_hypothesis(cls, r);
    }

    // Parse the deleted tickets: cell index plus the concatenated payload of
    // that cell and its successor.
    std::map<u32, Dataset> payload_of;     // cell -> payload (first seen)
    std::map<u32, Dataset> removed_from;   // cell -> deleted items of that cell
    for (const auto& [z, b] : deleted) {
        BitReader r(b);
        const u32 j = static_cast<u32>(r.get(idx_bits));
        if (r.remaining() % ex_bits != 0)
            throw std::invalid_argument("chain_unlearn: malformed ticket");
        Dataset payload;
        while (!r.done()) payload.push_back(read_example(cls, r));
        if (j == 0) {
            if (!payload.empty()) throw std::invalid_argument("chain_unlearn: malformed ticket");
            continue;  // item was never in a cell; removing it changes nothing
        }
        payload_of.emplace(j, std::move(payload));
        removed_from[j].push_back(z);
    }

    // First cell with no deletion. Everything from that cell on is intact, so
    // its encoding stands in for the whole remainder.
    u32 ell = 1;
    while (removed_from.count(ell)) ++ell;
    if (ell == 1) {
        BitReader r(aux);
        return read_hypothesis(cls, r);
    }

    EncodedState acc = neutral_encoding(cls);
    for (u32 j = 1; j < ell; ++j) {
        const Dataset& payload = payload_of.at(j);
        std::size_t split = compression_prefix(cls, payload);
        Dataset cell(payload.begin(), payload.begin() + static_cast<std::ptrdiff_t>(split));
        multiset_subtract(cell, removed_from.at(j));
        acc = merge(cls, acc, encode(cls, cell));
        if (j == ell - 1) {
            Dataset next(payload.begin() + static_cast<std::ptrdiff_t>(split), payload.end());
            acc = merge(cls, acc, encode(cls, next));
        }
    }
    return decode(cls, acc);
}

}  // namespace ul
