#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace ul::gf2 {

// Linear systems over GF(2) in up to 31 variables. A row is an augmented
// constraint: bits 0..d-1 are coefficients of w_1..w_d, bit d is the
// right-hand side.

// Reduced row echelon form; canonical for a given solution set. Zero rows are
// dropped. An inconsistent system keeps a row equal to 1 << d (i.e. 0 = 1).
inline std::vector<std::uint32_t> rref(std::vector<std::uint32_t> rows, unsigned d) {
    std::vector<std::uint32_t> out;
    for (unsigned col = 0; col <= d; ++col) {  // col == d catches 0 = 1 rows
        auto it = std::find_if(rows.begin(), rows.end(), [&](std::uint32_t r) {
            return ((r >> col) & 1) != 0 && (r & ((std::uint32_t(1) << col) - 1)) == 0;
        });
        if (it == rows.end()) continue;
        std::uint32_t pivot = *it;
        rows.erase(it);
        for (auto& r : rows)
            if ((r >> col) & 1) r ^= pivot;
        for (auto& r : out)
            if ((r >> col) & 1) r ^= pivot;
        out.push_back(pivot);
    }
    // Rows come out ordered by pivot column already (we scan columns in order).
    return out;
}

inline bool consistent(const std::vector<std::uint32_t>& rref_rows, unsigned d) {
    for (auto r : rref_rows)
        if ((r & ((std::uint32_t(1) << d) - 1)) == 0 && (r >> d) != 0) return false;
    return true;
}

// Lexicographically smallest solution (w_1 most significant), or nullopt if
// the system is inconsistent. Greedy: fix w_1, w_2, ... to 0 when feasible.
inline std::optional<std::uint32_t> lex_min_solution(std::vector<std::uint32_t> rows, unsigned d) {
    rows = rref(rows, d);
    if (!consistent(rows, d)) return std::nullopt;
    std::uint32_t w = 0;
    for (unsigned j = 0; j < d; ++j) {
        auto with_zero = rows;
        with_zero.push_back(std::uint32_t(1) << j);  // w_{j+1} = 0
        with_zero = rref(std::move(with_zero), d);
        if (consistent(with_zero, d)) {
            rows = std::move(with_zero);
        } else {
            rows.push_back((std::uint32_t(1) << j) | (std::uint32_t(1) << d));  // w_{j+1} = 1
            rows = rref(std::move(rows), d);
            w |= std::uint32_t(1) << j;
        }
    }
    return w;
}

}  // namespace ul::gf2
