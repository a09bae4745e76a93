#include "ul/sperner.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ul {

u64 multiset_size(const SpernerMultiset& ms) {
    u64 n = 0;
    for (const auto& [s, c] : ms) n += c;
    return n;
}

std::vector<SpernerSymbol> multiset_elements(const SpernerMultiset& ms) {
    std::vector<SpernerSymbol> out;
    for (const auto& [s, c] : ms)
        out.insert(out.end(), c, s);
    return out;
}

std::optional<u64> ack(u64 r, u64 t, u64 cap) {
    if (r == 0 || t == 0) throw std::invalid_argument("ack: r, t >= 1");
    if (t == 1) return u64(2) <= cap ? std::optional<u64>(2) : std::nullopt;
    if (r == 1) {
        if (t > cap / 2) return std::nullopt;
        return 2 * t;
    }
    if (r == 2) {
        if (t >= 64 || (u64(1) << t) > cap) return std::nullopt;
        return u64(1) << t;
    }
    if (r == 3) {
        // Tower of 2s of height t, evaluated bottom-up with early exit.
        u64 v = 2;
        for (u64 i = 2; i <= t; ++i) {
            if (v >= 64 || (u64(1) << v) > cap) return std::nullopt;
            v = u64(1) << v;
        }
        return v;
    }
    // A_r(t) = A_{r-1}(A_r(t-1)); A_{r-1}(x) >= x, so an overflowing inner
    // value forces an overflowing result.
    auto inner = ack(r, t - 1, cap);
    if (!inner) return std::nullopt;
    return ack(r - 1, *inner, cap);
}

u32 inv_ack(u64 n) {
    if (n == 0) throw std::invalid_argument("inv_ack: n >= 1");
    for (u32 t = 1;; ++t) {
        auto v = ack(t, t, n);
        if (v && *v >= n) return t;
        if (!v) return t;  // A_t(t) > n means n <= A_t(t)
    }
}

SpernerMultiset family_segment(u32 r, u64 t, u64 m) {
    if (r == 0 || t == 0) throw std::invalid_argument("family_segment: r, t >= 1");
    if (r == 1) {
        // m in [2t, 4t]: (4t - m) copies of symbol 1, (2m - 4t) copies of 2.
        if (m < 2 * t || m > 4 * t) throw std::out_of_range("family_segment: m out of range");
        SpernerMultiset ms;
        if (4 * t - m > 0) ms[1] = static_cast<u32>(4 * t - m);
        if (2 * m - 4 * t > 0) ms[2] = static_cast<u32>(2 * m - 4 * t);
        return ms;
    }
    const u64 cap = m + 2;
    auto Tv = ack(r, t, cap);
    if (!Tv || m < *Tv) throw std::out_of_range("family_segment: m out of range");
    const u64 T = *Tv;
    auto top = ack(r, T, cap);
    if (top && m > *top) throw std::out_of_range("family_segment: m out of range");
    const u64 mp = m - T + 2;

    // The unique j with A_r(j) <= m' < A_r(j+1).
    u64 j = 1;
    while (true) {
        auto nxt = ack(r, j + 1, cap);
        if (!nxt || *nxt > mp) break;
        ++j;
    }
    if (T < j + 1) throw std::out_of_range("family_segment: m out of range");

    const u64 tin = j >= 2 ? *ack(r, j - 1, cap) : 1;
    SpernerMultiset ms = family_segment(r - 1, tin, mp);
    if (T - j - 1 > 0) ms[static_cast<SpernerSymbol>(2 * r - 1)] = static_cast<u32>(T - j - 1);
    if (j - 1 > 0) ms[static_cast<SpernerSymbol>(2 * r)] = static_cast<u32>(j - 1);
    return ms;
}

SpernerMultiset global_family(u64 m) {
    if (m == 0) throw std::invalid_argument("global_family: m >= 1");
    if (m == 1) return {{pack_symbol(0, 0, 0), 1}};

    const u32 tier = std::max(u32(2), inv_ack(m));
    // Smallest segment i with A_tier(i) <= m <= A_tier(i+1).
    const u64 cap = m;
    u32 i = 1;
    while (true) {
        auto hi = ack(tier, i + 1, cap);
        if (!hi || *hi >= m) break;
        ++i;
    }
    const u64 tin = i >= 2 ? *ack(tier, i - 1, cap) : 1;

    SpernerMultiset local = family_segment(tier - 1, tin, m);
    SpernerMultiset out;
    for (const auto& [s, c] : local) out[pack_symbol(tier, i, s)] = c;
    return out;
}

bool verify_sperner(const std::vector<SpernerMultiset>& ms) {
    // Dense count vectors over the union alphabet, then pairwise comparison.
    // Only the smaller of a pair can be contained in the larger.
    std::unordered_map<SpernerSymbol, u32> col;
    for (const auto& m : ms)
        for (const auto& [s, c] : m)
            col.emplace(s, static_cast<u32>(col.size()));
    const std::size_t a = col.size();
    std::vector<std::vector<u32>> dense(ms.size(), std::vector<u32>(a, 0));
    std::vector<u64> size(ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k) {
        for (const auto& [s, c] : ms[k]) dense[k][col[s]] = c;
        size[k] = multiset_size(ms[k]);
    }
    for (std::size_t p = 0; p < ms.size(); ++p)
        for (std::size_t q = p + 1; q < ms.size(); ++q) {
            const auto& lo = size[p] <= size[q] ? dense[p] : dense[q];
            const auto& hi = size[p] <= size[q] ? dense[q] : dense[p];
            if (size[p] == size[q] && lo == hi) return false;  // duplicates compare both ways
            bool contained = true;
            for (std::size_t s = 0; s < a; ++s)
                if (lo[s] > hi[s]) { contained = false; break; }
            if (contained) return false;
        }
    return true;
}

}  // namespace ul
