#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ul/agnostic.hpp"
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

std::vector<std::pair<Example, Blob>> picked(const Dataset& S, const std::vector<Blob>& tickets,
                                             u32 mask) {
    std::vector<std::pair<Example, Blob>> out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if ((mask >> i) & 1) out.emplace_back(S[i], tickets[i]);
    return out;
}

// Smallest-loss, then smallest-a threshold over the full class.
Hypothesis minimal_erm(const ConceptClass& cls, const Dataset& S) {
    u32 best = 0;
    u64 best_loss = loss(cls, {HypKind::Threshold, {0}}, S);
    for (u32 a = 1; a <= cls.domain_size; ++a) {
        u64 l = loss(cls, {HypKind::Threshold, {a}}, S);
        if (l < best_loss) { best = a; best_loss = l; }
    }
    return {HypKind::Threshold, {best}};
}

}  // namespace

TEST_CASE("agnostic thresholds on mixed data") {
    auto cls = ConceptClass::thresholds(4);
    Dataset S{ex1(1, 1), ex1(2, 0), ex1(3, 1), ex1(4, 0)};
    auto m = agnostic_thresh_learn(cls, S);
    CHECK(m.h == Hypothesis{HypKind::Threshold, {0}});
    CHECK(agnostic_thresh_unlearn(cls, 4, m.aux, picked(S, m.tickets, 0b1001)) ==
          Hypothesis{HypKind::Threshold, {2}});

    Dataset R{ex1(2, 0), ex1(3, 1)};
    auto mr = agnostic_thresh_learn(cls, R);
    CHECK(mr.h == Hypothesis{HypKind::Threshold, {2}});
    CHECK(agnostic_thresh_unlearn(cls, 2, mr.aux, picked(R, mr.tickets, 0b01)) ==
          Hypothesis{HypKind::Threshold, {0}});
}

TEST_CASE("agnostic thresholds match the brute-force minimal ERM") {
    auto cls = ConceptClass::thresholds(6);
    for (u32 n = 0; n <= 3; ++n) {
        for_each_multiset(cls, n, [&](const Dataset& S) {
            auto m = agnostic_thresh_learn(cls, S);
            CHECK(m.h == minimal_erm(cls, S));
            for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                CAPTURE(mask);
                CHECK(agnostic_thresh_unlearn(cls, n, m.aux, picked(S, m.tickets, mask)) ==
                      minimal_erm(cls, survivors(S, mask)));
            }
        });
    }
}

TEST_CASE("agnostic ticket budget") {
    auto cls = ConceptClass::thresholds(8);
    const unsigned abits = bit_width_for(u64(8) + 1);
    const unsigned L = 3;  // depth of the 8-leaf tree
    Dataset S{ex1(1, 1), ex1(5, 0), ex1(5, 0), ex1(8, 1)};
    const unsigned ebits = bit_width_for(u64(S.size()) + 1);
    auto m = agnostic_thresh_learn(cls, S);
    for (const auto& t : m.tickets)
        CHECK(t.nbits == (L + 1) * (abits + ebits) + 2 * ebits);
}

TEST_CASE("realizability verdicts and monotonicity") {
    auto cls = ConceptClass::thresholds(5);
    Dataset S{ex1(3, 0), ex1(2, 1)};
    auto m = realizability_learn(cls, S);
    CHECK_FALSE(m.realizable);
    CHECK(realizability_unlearn(cls, m.aux, picked(S, m.tickets, 0b01)));
    CHECK_FALSE(realizability_unlearn(cls, m.aux, picked(S, m.tickets, 0b00)));

    for (u32 n = 0; n <= 3; ++n) {
        for_each_multiset(cls, n, [&](const Dataset& T) {
            auto mt = realizability_learn(cls, T);
            CHECK(mt.realizable == is_realizable(cls, T));
            for (u32 mask = 0; mask < (u32(1) << n); ++mask) {
                CAPTURE(mask);
                const bool got = realizability_unlearn(cls, mt.aux, picked(T, mt.tickets, mask));
                CHECK(got == is_realizable(cls, survivors(T, mask)));
                if (mt.realizable) CHECK(got);  // deletion keeps realizable data realizable
            }
        });
    }
}
