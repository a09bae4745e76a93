#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ul/domain.hpp"
#include "ul/enumerate.hpp"

using namespace ul;

namespace {

Example ex1(u32 x, int y) { return {{x}, static_cast<std::uint8_t>(y)}; }
Example ex2(u32 a, u32 b, int y) { return {{a, b}, static_cast<std::uint8_t>(y)}; }

bool in_set(const std::vector<Hypothesis>& hs, const Hypothesis& h) {
    return std::find(hs.begin(), hs.end(), h) != hs.end();
}

}  // namespace

TEST_CASE("loss counts mismatches") {
    auto cls = ConceptClass::thresholds(6);
    Hypothesis h{HypKind::Threshold, {3}};
    CHECK(loss(cls, h, {ex1(2, 0), ex1(5, 1)}) == 0);
    CHECK(loss(cls, h, {ex1(4, 0), ex1(5, 1)}) == 1);
    CHECK(loss(cls, h, {}) == 0);
}

TEST_CASE("erm_set by enumeration") {
    auto cls = ConceptClass::thresholds(4);
    auto s = erm_set(cls, {ex1(2, 0), ex1(4, 1)});
    REQUIRE(s.size() == 2);
    CHECK(in_set(s, {HypKind::Threshold, {2}}));
    CHECK(in_set(s, {HypKind::Threshold, {3}}));

    CHECK(erm_set(cls, {}).size() == 5);

    auto par = ConceptClass::parities(2);
    auto ps = erm_set(par, {ex2(1, 0, 1)});
    REQUIRE(ps.size() == 2);
    CHECK(in_set(ps, {HypKind::Parity, {1, 0}}));
    CHECK(in_set(ps, {HypKind::Parity, {1, 1}}));
}

TEST_CASE("realizability") {
    auto cls = ConceptClass::thresholds(6);
    CHECK_FALSE(is_realizable(cls, {ex1(3, 0), ex1(2, 1)}));
    CHECK(is_realizable(cls, {ex1(2, 0), ex1(3, 1)}));
    CHECK(is_realizable(cls, {}));
}

TEST_CASE("canonical_erm tie-breaking") {
    auto th = ConceptClass::thresholds(4);
    CHECK(canonical_erm(th, {ex1(2, 0), ex1(4, 1)}) == Hypothesis{HypKind::Threshold, {2}});

    auto pt = ConceptClass::point_functions(5);
    CHECK(canonical_erm(pt, {ex1(1, 0), ex1(2, 0)}) == Hypothesis{HypKind::Point, {3}});

    auto par = ConceptClass::parities(2);
    CHECK(canonical_erm(par, {ex2(1, 1, 0)}) == Hypothesis{HypKind::Parity, {0, 0}});

    auto prod = ConceptClass::product_thresholds(2, 4);
    CHECK(canonical_erm(prod, {ex2(2, 3, 1), ex2(4, 2, 1)}) ==
          Hypothesis{HypKind::ProductThreshold, {1, 1}});
}

TEST_CASE("canonical_erm is a member of erm_set and permutation-invariant") {
    for (auto cls : {ConceptClass::thresholds(5), ConceptClass::point_functions(4),
                     ConceptClass::parities(2), ConceptClass::product_thresholds(2, 3)}) {
        for_each_multiset(cls, 3, [&](const Dataset& S) {
            if (!is_realizable(cls, S)) return;
            auto h = canonical_erm(cls, S);
            CHECK(in_set(erm_set(cls, S), h));
            Dataset R(S.rbegin(), S.rend());
            CHECK(canonical_erm(cls, R) == h);
        });
    }
}

TEST_CASE("multiset enumeration count matches the closed form") {
    auto cls = ConceptClass::thresholds(3);
    u64 seen = 0;
    for_each_multiset(cls, 3, [&](const Dataset&) { ++seen; });
    CHECK(seen == multiset_count(flat_item_count(cls), 3));
    CHECK(multiset_count(6, 3) == 56);
}

TEST_CASE("explicit tables must be intersection-closed") {
    // Rows: all-zeros, two points, and their AND (all-zeros) — closed.
    std::vector<std::vector<std::uint8_t>> ok = {{0, 0}, {1, 0}, {0, 1}};
    auto cls = ConceptClass::explicit_table(ok);
    CHECK(cls.hypothesis_count() == 3);
    std::vector<std::vector<std::uint8_t>> bad = {{1, 0}, {0, 1}};
    CHECK_THROWS(ConceptClass::explicit_table(bad));
}
