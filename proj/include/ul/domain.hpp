#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ul {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

enum class ClassKind {
    Thresholds,          // X = {1..|X|}, h_{>a}(x) = 1{x > a}, a in {0..|X|}
    ProductThresholds,   // X = {1..m}^d, h_{>a}(x) = 1{x_j > a_j for all j}
    Parities,            // X = {0,1}^d, h_w(x) = <w,x> over GF(2)
    PointFunctions,      // X = {1..|X|}, h_a(x) = 1{x = a}
    Explicit             // finite truth table, must be intersection-closed
};

struct ConceptClass {
    ClassKind kind = ClassKind::Thresholds;
    u32 domain_size = 0;  // |X| for 1D classes (Thresholds, PointFunctions, Explicit)
    u32 dims = 0;         // d for ProductThresholds / Parities
    u32 side = 0;         // m for ProductThresholds

    // Explicit classes: table[h][x-1] in {0,1}. Rows are hypotheses.
    std::vector<std::vector<std::uint8_t>> table;

    static ConceptClass thresholds(u32 domain_size);
    static ConceptClass product_thresholds(u32 d, u32 m);
    static ConceptClass parities(u32 d);
    static ConceptClass point_functions(u32 domain_size);
    static ConceptClass explicit_table(std::vector<std::vector<std::uint8_t>> table);

    u32 domain_count() const;      // |X|
    u64 hypothesis_count() const;  // |H|
    bool intersection_closed() const;
    // The idx-th domain point, idx in [0, domain_count()).
    std::vector<u32> point_at(u64 idx) const;
    bool contains_point(const std::vector<u32>& x) const;

    std::string describe() const;
};

struct Example {
    std::vector<u32> x;
    std::uint8_t y = 0;

    friend bool operator==(const Example&, const Example&) = default;
    friend auto operator<=>(const Example&, const Example&) = default;
};

using Dataset = std::vector<Example>;

// Hypothesis parameters by kind:
//   Threshold         param = {a},             a in 0..|X|
//   ProductThreshold  param = {a_1..a_d},      a_j in 0..m
//   Parity            param = {w_1..w_d},      bits
//   Point             param = {a},             a in 1..|X|
//   PointOrZero       param = {a},             0 = the zero hypothesis
//   Explicit          param = {row index}
enum class HypKind { Threshold, ProductThreshold, Parity, Point, PointOrZero, Explicit };

struct Hypothesis {
    HypKind kind = HypKind::Threshold;
    std::vector<u32> param;

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
    std::string describe() const;
};

std::uint8_t predict(const ConceptClass& cls, const Hypothesis& h, const std::vector<u32>& x);

// Summed 0/1 loss over the dataset.
u64 loss(const ConceptClass& cls, const Hypothesis& h, const Dataset& S);

// All hypotheses of the class, in canonical enumeration order. Throws if the
// class has more than `cap` hypotheses. Test-oracle scale only.
std::vector<Hypothesis> all_hypotheses(const ConceptClass& cls, u64 cap = u64(1) << 22);

// Exact argmin set by exhaustive enumeration. Test oracle.
std::vector<Hypothesis> erm_set(const ConceptClass& cls, const Dataset& S, u64 cap = u64(1) << 22);

bool is_realizable(const ConceptClass& cls, const Dataset& S);

// Deterministic tie-broken ERM representative; the target every scheme's
// Learn/Unlearn output is tested against. Throws on unrealizable input for
// every class except Thresholds (which has an agnostic rule: smallest
// minimum-loss threshold).
Hypothesis canonical_erm(const ConceptClass& cls, const Dataset& S);

void check_dataset(const ConceptClass& cls, const Dataset& S);

}  // namespace ul
