#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ul/enumerate.hpp"
#include "ul/sharp.hpp"

using namespace ul;

namespace {

Example ex1(u32 x, int y) { return {{x}, static_cast<std::uint8_t>(y)}; }
Example ex2(u32 a, u32 b, int y) { return {{a, b}, static_cast<std::uint8_t>(y)}; }

Dataset survivors(const Dataset& S, u32 mask) {
    Dataset out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (!((mask >> i) & 1)) out.push_back(S[i]);
    return out;
}

std::vector<std::pair<Example, Blob>> picked(const Dataset& S, const std::vector<Blob>& tickets,
                                             u32 mask) {
    std::vector<std::pair<Example, Blob>> out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if ((mask >> i) & 1) out.emplace_back(S[i], tickets[i]);
    return out;
}

std::vector<std::pair<u32, Blob>> val_picked(const std::vector<u32>& vals,
                                             const std::vector<Blob>& tickets, u32 mask) {
    std::vector<std::pair<u32, Blob>> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if ((mask >> i) & 1) out.emplace_back(vals[i], tickets[i]);
    return out;
}

}  // namespace

TEST_CASE("minval walks the successor chain") {
    auto m = minval_learn({3, 3, 7}, 7);
    CHECK(m.value == 3);
    CHECK(m.aux.nbits == val_aux_bits(7));
    for (const auto& t : m.tickets) CHECK(t.nbits == val_ticket_bits(7));

    CHECK(minval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b001), m.aux, 7) == 3);
    CHECK(minval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b011), m.aux, 7) == 7);
    CHECK(minval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b111), m.aux, 7) == std::nullopt);
}

TEST_CASE("maxval mirrors minval") {
    auto m = maxval_learn({3, 3, 7}, 7);
    CHECK(m.value == 7);
    CHECK(maxval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b100), m.aux, 7) == 3);
    CHECK(maxval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b101), m.aux, 7) == 3);
    CHECK(maxval_unlearn(val_picked({3, 3, 7}, m.tickets, 0b111), m.aux, 7) == std::nullopt);
}

TEST_CASE("minval and maxval match retraining exhaustively") {
    const u32 V = 5;
    for (u32 n = 0; n <= 4; ++n) {
        std::vector<u32> vals(n, 1);
        for (;;) {
            auto mn = minval_learn(vals, V);
            auto mx = maxval_learn(vals, V);
            for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                std::vector<u32> rest;
                for (u32 i = 0; i < n; ++i)
                    if (!((mask >> i) & 1)) rest.push_back(vals[i]);
                std::optional<u32> lo, hi;
                for (u32 v : rest) {
                    lo = lo ? std::min(*lo, v) : v;
                    hi = hi ? std::max(*hi, v) : v;
                }
                CHECK(minval_unlearn(val_picked(vals, mn.tickets, mask), mn.aux, V) == lo);
                CHECK(maxval_unlearn(val_picked(vals, mx.tickets, mask), mx.aux, V) == hi);
            }
            // Next nondecreasing value vector.
            u32 i = n;
            while (i > 0 && vals[i - 1] == V) --i;
            if (i == 0) break;
            const u32 v = vals[i - 1] + 1;
            for (u32 j = i - 1; j < n; ++j) vals[j] = v;
        }
    }
}

TEST_CASE("point scheme on small cases") {
    auto cls = ConceptClass::point_functions(5);
    Dataset S{ex1(2, 1), ex1(2, 1), ex1(4, 0)};
    auto m = point_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::Point, {2}});
    CHECK(point_unlearn(cls, m.aux, picked(S, m.tickets, 0b011)) ==
          Hypothesis{HypKind::Point, {1}});

    Dataset Z{ex1(1, 0), ex1(2, 0)};
    auto mz = point_learn(cls, Z);
    CHECK(mz.h == Hypothesis{HypKind::Point, {3}});
    CHECK(point_unlearn(cls, mz.aux, picked(Z, mz.tickets, 0b10)) ==
          Hypothesis{HypKind::Point, {2}});
}

TEST_CASE("product thresholds scheme on small cases") {
    auto cls = ConceptClass::product_thresholds(2, 4);
    Dataset S{ex2(2, 3, 1), ex2(3, 2, 1), ex2(1, 1, 0)};
    auto m = prodthresh_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::ProductThreshold, {1, 1}});
    // 0-labeled items carry no ticket payload at all.
    CHECK(m.tickets[2].nbits == 0);
    CHECK(m.tickets[0].nbits == 2 * val_ticket_bits(4));
    CHECK(prodthresh_unlearn(cls, m.aux, picked(S, m.tickets, 0b001)) ==
          Hypothesis{HypKind::ProductThreshold, {2, 1}});
}

TEST_CASE("threshold scheme follows the binary-search cells") {
    auto cls = ConceptClass::thresholds(6);
    CHECK(padded_domain(6) == 6);
    CHECK(padded_domain(7) == 14);
    CHECK(search_path(6, 4, 4) == std::vector<u32>{3, 5, 4});
    CHECK(search_path_to(6, 4) == std::vector<u32>{3, 5, 4});

    Dataset S{ex1(4, 0), ex1(5, 1)};
    auto m = sharpthresh_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::Threshold, {4}});
    CHECK(sharpthresh_unlearn(cls, m.aux, picked(S, m.tickets, 0b01)) ==
          Hypothesis{HypKind::Threshold, {3}});

    Dataset T{ex1(2, 0), ex1(5, 1)};
    auto mt = sharpthresh_learn(cls, T);
    CHECK(mt.h == Hypothesis{HypKind::Threshold, {3}});
    for (u32 mask = 0; mask < 4; ++mask)
        CHECK(sharpthresh_unlearn(cls, mt.aux, picked(T, mt.tickets, mask)) ==
              Hypothesis{HypKind::Threshold, {3}});
}

TEST_CASE("sharp schemes match retraining exhaustively") {
    auto run = [](const ConceptClass& cls, auto learn, auto unlearn) {
        for (u32 n = 0; n <= 3; ++n) {
            for_each_multiset(cls, n, [&](const Dataset& S) {
                decltype(learn(cls, S)) m;
                try {
                    m = learn(cls, S);
                } catch (const std::exception&) {
                    CHECK_FALSE(is_realizable(cls, S));
                    return;
                }
                for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                    CAPTURE(mask);
                    auto got = unlearn(cls, m.aux, picked(S, m.tickets, mask));
                    const Dataset rest = survivors(S, mask);
                    CHECK(got == learn(cls, rest).h);
                }
            });
        }
    };
    run(ConceptClass::point_functions(5), [](auto& c, auto& s) { return point_learn(c, s); },
        [](auto& c, auto& a, auto&& d) { return point_unlearn(c, a, d); });
    run(ConceptClass::product_thresholds(2, 3),
        [](auto& c, auto& s) { return prodthresh_learn(c, s); },
        [](auto& c, auto& a, auto&& d) { return prodthresh_unlearn(c, a, d); });
    run(ConceptClass::thresholds(6), [](auto& c, auto& s) { return sharpthresh_learn(c, s); },
        [](auto& c, auto& a, auto&& d) { return sharpthresh_unlearn(c, a, d); });
}

TEST_CASE("regime errors") {
    auto th = ConceptClass::thresholds(6);
    CHECK_THROWS(sharpthresh_learn(th, {ex1(3, 0), ex1(2, 1)}));
    CHECK_THROWS(point_learn(th, {}));
    CHECK_THROWS(minval_learn({9}, 5));
}
