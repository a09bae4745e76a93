#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ul/dataset_io.hpp"
#include "ul/enumerate.hpp"
#include "ul/scheme_api.hpp"

#include <cstdio>

using namespace ul;

namespace {

Example ex1(u32 x, int y) { return {{x}, static_cast<std::uint8_t>(y)}; }

std::vector<UnlearnItem> request(const Dataset& S, const LearnOutput& out,
                                 const std::vector<u32>& idx) {
    std::vector<UnlearnItem> req;
    for (u32 i : idx) req.push_back({i, S[i], out.tickets[i]});
    return req;
}

}  // namespace

TEST_CASE("scheme id registry") {
    auto ids = scheme_ids();
    CHECK(ids.size() == 17);
    for (const auto& id : ids) CHECK(known_scheme(id));
    CHECK_FALSE(known_scheme("tree:points"));
    CHECK_THROWS(run_learn({"tree:points", ConceptClass::thresholds(4)}, {}));
}

TEST_CASE("dispatch produces one ticket per item") {
    Dataset S{ex1(2, 0), ex1(5, 1)};
    for (const auto& id : {"tree:thresholds", "chain:thresholds", "central:thresholds",
                           "sharp:thresholds", "agnostic:thresholds",
                           "realizability:thresholds", "ctz"}) {
        SchemeSpec spec{id, ConceptClass::thresholds(6)};
        auto out = run_learn(spec, S);
        CHECK(out.tickets.size() == S.size());
        // Empty request falls back to the learned result.
        CHECK(run_unlearn(spec, 2, out.aux, {}) == out.result);
    }
    // Central schemes answer from stored state alone.
    auto central = run_learn({"central:thresholds", ConceptClass::thresholds(6)}, S);
    CHECK(central.max_ticket_bits() == 0);
}

TEST_CASE("full deletion on ctz reads bottom") {
    SchemeSpec spec{"ctz", ConceptClass::thresholds(6)};
    Dataset S{ex1(1, 0), ex1(1, 0), ex1(1, 0)};
    auto out = run_learn(spec, S);
    CHECK(out.result.v == Verdict::NonEmpty);
    CHECK(run_unlearn(spec, 3, out.aux, request(S, out, {0, 1, 2})).v == Verdict::Empty);
    CHECK(run_unlearn(spec, 3, out.aux, request(S, out, {1, 2})).v == Verdict::NonEmpty);
}

TEST_CASE("request validation") {
    SchemeSpec spec{"tree:thresholds", ConceptClass::thresholds(6)};
    Dataset S{ex1(2, 0), ex1(5, 1)};
    auto out = run_learn(spec, S);
    CHECK_THROWS(run_unlearn(spec, 2, out.aux, request(S, out, {0, 0})));
    CHECK_THROWS(run_unlearn(spec, 1, out.aux,
                             {UnlearnItem{1, S[1], out.tickets[1]}}));
}

TEST_CASE("sessions are one-shot") {
    SchemeSpec spec{"chain:thresholds", ConceptClass::thresholds(6)};
    SchemeSession sess(spec, {ex1(2, 0), ex1(5, 1)});
    CHECK(sess.unlearn({0}).h == Hypothesis{HypKind::Threshold, {0}});
    CHECK_THROWS(sess.unlearn({1}));
    SchemeSession s2(spec, {ex1(2, 0)});
    CHECK_THROWS(s2.unlearn({3}));
}

TEST_CASE("count-to-zero adapter over the threshold scheme") {
    auto ad = make_ctz_adapter({"sharp:thresholds", ConceptClass::thresholds(6)});
    for (u32 m : {1u, 2u, 4u, 9u}) {
        auto out = ad.learn(m);
        Dataset S(m, ad.probe);
        std::vector<u32> all;
        for (u32 i = 0; i < m; ++i) all.push_back(i);
        CHECK(ad.unlearn(m, out.aux, request(S, out, all)) == Verdict::Empty);
        if (m > 1) {
            all.pop_back();
            CHECK(ad.unlearn(m, out.aux, request(S, out, all)) == Verdict::NonEmpty);
        }
    }
}

TEST_CASE("dataset text format round-trips") {
    for (auto cls : {ConceptClass::thresholds(6), ConceptClass::point_functions(5),
                     ConceptClass::product_thresholds(2, 3), ConceptClass::parities(2)}) {
        CHECK(parse_class_header(class_header(cls)).kind == cls.kind);
        Dataset S;
        for (u64 f = 0; f < flat_item_count(cls); f += 3) S.push_back(flat_item(cls, f));
        std::stringstream buf;
        write_dataset(buf, cls, S);
        auto parsed = read_dataset(buf);
        CHECK(parsed.cls.describe() == cls.describe());
        CHECK(parsed.items == S);
    }
    CHECK_THROWS(parse_class_header("class=waffles domain=2"));
}

TEST_CASE("blob files round-trip") {
    BitWriter w;
    w.put(0x2b, 7);
    w.put(5, 11);
    Blob b = w.take();
    const std::string path = "test_blob_roundtrip.bin";
    write_blob_file(path, b);
    CHECK(read_blob_file(path) == b);
    std::remove(path.c_str());
}

TEST_CASE("learn results describe themselves") {
    SchemeSpec spec{"sharp:minval", ConceptClass::thresholds(5)};
    auto out = run_learn(spec, {ex1(4, 0), ex1(2, 0)});
    CHECK(out.result.kind == ResultKind::Value);
    CHECK(out.result.value == 2);
    CHECK(out.result.describe() == "2");
    CHECK(run_unlearn(spec, 2, out.aux, {}).value == 2);
}
