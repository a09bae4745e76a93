#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ul/ctz.hpp"

using namespace ul;

namespace {

// True when some sub-multiset of `big` equals `small`, i.e. small <= big
// componentwise.
bool submultiset(const SpernerMultiset& small, const SpernerMultiset& big) {
    for (const auto& [s, c] : small) {
        auto it = big.find(s);
        if (it == big.end() || it->second < c) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("learn hands out the size-m family") {
    auto m0 = ctz_learn(0);
    CHECK(m0.aux == Verdict::Empty);
    CHECK(m0.tickets.empty());

    auto m2 = ctz_learn(2);
    CHECK(m2.aux == Verdict::NonEmpty);
    CHECK(m2.tickets == multiset_elements(global_family(2)));

    auto m3 = ctz_learn(3);
    CHECK(m3.tickets.size() == 3);
    CHECK(m3.tickets == multiset_elements(global_family(3)));
}

TEST_CASE("unlearn verdicts") {
    auto m3 = ctz_learn(3);
    CHECK(ctz_unlearn(m3.tickets, std::nullopt) == Verdict::Empty);
    // Deleting only the two repeated symbols is not the size-2 family.
    CHECK(ctz_unlearn({m3.tickets[1], m3.tickets[2]}, std::nullopt) == Verdict::NonEmpty);
    CHECK(ctz_unlearn({m3.tickets[0]}, std::nullopt) == Verdict::NonEmpty);

    // Empty deletions fall back to the stored bit, which must be present.
    CHECK(ctz_unlearn({}, Verdict::NonEmpty) == Verdict::NonEmpty);
    CHECK(ctz_unlearn({}, Verdict::Empty) == Verdict::Empty);
    CHECK_THROWS(ctz_unlearn({}, std::nullopt));
}

TEST_CASE("no partial batch can fake emptiness") {
    // A size-k deletion reads Empty only when the deleted symbols equal the
    // size-k family; for k < m that would make Q_k a sub-multiset of Q_m.
    for (u64 m = 1; m <= 120; ++m) {
        auto Qm = global_family(m);
        for (u64 k = 1; k < m; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK_FALSE(submultiset(global_family(k), Qm));
        }
        CHECK(ctz_unlearn(multiset_elements(Qm), std::nullopt) == Verdict::Empty);
    }
}

TEST_CASE("serialized widths") {
    CHECK(ctz_write_aux(Verdict::NonEmpty).nbits == 1);
    CHECK(ctz_read_aux(ctz_write_aux(Verdict::NonEmpty)) == Verdict::NonEmpty);
    CHECK(ctz_read_aux(ctz_write_aux(Verdict::Empty)) == Verdict::Empty);
    for (u64 m : {u64(1), u64(2), u64(17), u64(300)}) {
        for (SpernerSymbol s : ctz_learn(m).tickets) {
            Blob b = ctz_write_ticket(s);
            CHECK(b.nbits == 16);
            CHECK(ctz_read_ticket(b) == s);
        }
    }
}
