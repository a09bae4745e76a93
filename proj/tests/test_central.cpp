#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ul/central.hpp"
#include "ul/enumerate.hpp"

using namespace ul;

namespace {

Example ex1(u32 x, int y) { return {{x}, static_cast<std::uint8_t>(y)}; }

Dataset survivors(const Dataset& S, u32 mask) {
    Dataset out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (!((mask >> i) & 1)) out.push_back(S[i]);
    return out;
}

Dataset deleted_of(const Dataset& S, u32 mask) {
    Dataset out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if ((mask >> i) & 1) out.push_back(S[i]);
    return out;
}

bool norep(const Dataset& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (S[i] == S[j]) return false;
    return true;
}

}  // namespace

TEST_CASE("binary-search thresholds: stored path losses") {
    auto cls = ConceptClass::thresholds(6);
    Dataset S{ex1(4, 0), ex1(5, 1)};
    auto m = central_thresh_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::Threshold, {4}});
    // Path 3, 5, 4 with dataset losses 1, 1, 0.
    BitReader r(m.aux);
    CHECK(r.get(3) == 4);
    CHECK(r.get(2) == 1);
    CHECK(r.get(2) == 1);
    CHECK(r.get(2) == 0);
    CHECK(r.done());

    CHECK(central_thresh_unlearn(cls, 2, m.aux, {ex1(4, 0)}) ==
          Hypothesis{HypKind::Threshold, {3}});
    CHECK(central_thresh_unlearn(cls, 2, m.aux, {}) == m.h);
    CHECK(central_thresh_unlearn(cls, 2, m.aux, S) == Hypothesis{HypKind::Threshold, {3}});

    auto m2 = central_thresh_learn(cls, {ex1(2, 0), ex1(5, 1)});
    CHECK(m2.h == Hypothesis{HypKind::Threshold, {3}});
    CHECK(m2.aux.nbits == 3 + 2);

    CHECK(central_thresh_learn(cls, {}).h == Hypothesis{HypKind::Threshold, {3}});
    CHECK_THROWS(central_thresh_learn(cls, {ex1(3, 0), ex1(2, 1)}));
}

TEST_CASE("augmented point functions: count depletion") {
    auto cls = ConceptClass::point_functions(5);
    Dataset S{ex1(2, 1), ex1(2, 1), ex1(5, 0)};
    auto m = augpoint_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::PointOrZero, {2}});
    CHECK(augpoint_unlearn(cls, 3, m.aux, {ex1(2, 1), ex1(2, 1)}) ==
          Hypothesis{HypKind::PointOrZero, {0}});
    CHECK(augpoint_unlearn(cls, 3, m.aux, {ex1(2, 1)}) == Hypothesis{HypKind::PointOrZero, {2}});

    CHECK(augpoint_learn(cls, {ex1(3, 0)}).h == Hypothesis{HypKind::PointOrZero, {0}});
    CHECK_THROWS(augpoint_learn(cls, {ex1(1, 1), ex1(2, 1)}));
    CHECK_THROWS(augpoint_learn(cls, {ex1(1, 1), ex1(1, 0)}));
}

TEST_CASE("repetition-free point functions") {
    auto cls = ConceptClass::point_functions(5);
    Dataset S{ex1(1, 0), ex1(2, 0), ex1(4, 1)};
    auto m = norep_point_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::Point, {4}});
    // aux = (a, b) = (4, 3).
    BitReader r(m.aux);
    CHECK(r.get(3) == 4);
    CHECK(r.get(3) == 3);
    CHECK(r.done());

    CHECK(norep_point_unlearn(cls, 3, m.aux, {ex1(1, 0)}) == Hypothesis{HypKind::Point, {4}});
    CHECK(norep_point_unlearn(cls, 3, m.aux, {ex1(4, 1)}) == Hypothesis{HypKind::Point, {3}});
    CHECK(norep_point_unlearn(cls, 3, m.aux, {ex1(1, 0), ex1(4, 1)}) ==
          Hypothesis{HypKind::Point, {1}});

    CHECK_THROWS(norep_point_learn(cls, {ex1(1, 0), ex1(1, 0)}));
}

TEST_CASE("central schemes match retraining exhaustively") {
    auto th = ConceptClass::thresholds(6);
    for (u32 n = 0; n <= 3; ++n) {
        for_each_multiset(th, n, [&](const Dataset& S) {
            if (!is_realizable(th, S)) return;
            auto m = central_thresh_learn(th, S);
            for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                CAPTURE(mask);
                CHECK(central_thresh_unlearn(th, n, m.aux, deleted_of(S, mask)) ==
                      central_thresh_learn(th, survivors(S, mask)).h);
            }
        });
    }

    auto pt = ConceptClass::point_functions(5);
    for (u32 n = 0; n <= 3; ++n) {
        for_each_multiset(pt, n, [&](const Dataset& S) {
            CentralModel ma, mn;
            bool ok_a = true, ok_n = true;
            try {
                ma = augpoint_learn(pt, S);
            } catch (const std::exception&) {
                ok_a = false;
            }
            try {
                mn = norep_point_learn(pt, S);
            } catch (const std::exception&) {
                ok_n = false;
                CHECK((!norep(S) || !is_realizable(pt, S)));
            }
            for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                CAPTURE(mask);
                Dataset D = deleted_of(S, mask), R = survivors(S, mask);
                if (ok_a)
                    CHECK(augpoint_unlearn(pt, n, ma.aux, D) == augpoint_learn(pt, R).h);
                if (ok_n)
                    CHECK(norep_point_unlearn(pt, n, mn.aux, D) == norep_point_learn(pt, R).h);
            }
        });
    }
}
