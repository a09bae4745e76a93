#include "ul/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "ul/scheme_api.hpp"

namespace ul {

u64 flat_item_count(const ConceptClass& cls) { return 2 * cls.domain_count(); }

Example flat_item(const ConceptClass& cls, u64 flat) {
    Example z;
    z.x = cls.point_at(flat / 2);
    z.y = static_cast<std::uint8_t>(flat % 2);
    return z;
}

void for_each_multiset(const ConceptClass& cls, u32 n,
                       const std::function<void(const Dataset&)>& f) {
    const u64 z = flat_item_count(cls);
    std::vector<u64> pick(n, 0);
    Dataset S(n);
    for (;;) {
        for (u32 i = 0; i < n; ++i) S[i] = flat_item(cls, pick[i]);
        f(S);
        // Next nondecreasing sequence.
        u32 i = n;
        while (i > 0 && pick[i - 1] == z - 1) --i;
        if (i == 0) return;
        const u64 v = pick[i - 1] + 1;
        for (u32 j = i - 1; j < n; ++j) pick[j] = v;
    }
}

u64 multiset_count(u64 z, u32 n) {
    // C(z + n - 1, n)
    u64 num = 1;
    for (u32 k = 1; k <= n; ++k) num = num * (z + n - k) / k;
    return num;
}

Dataset random_dataset_for(const std::string& scheme_id, const ConceptClass& cls,
                           u32 n, std::mt19937_64& rng) {
    const bool arbitrary_labels = scheme_id == "agnostic:thresholds" ||
                                  scheme_id == "realizability:thresholds" ||
                                  scheme_id == "sharp:minval" ||
                                  scheme_id == "sharp:maxval" || scheme_id == "ctz";
    const bool norep = scheme_id == "central:noreppoint";
    const u64 points = cls.domain_count();

    for (int attempt = 0; attempt < 1000; ++attempt) {
        Dataset S;
        if (norep) {
            if (n > points) throw std::invalid_argument("n too large for repetition-free data");
            std::vector<u64> idx(points);
            for (u64 i = 0; i < points; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            // Label a random subset of points by a random point hypothesis.
            u64 a = rng() % (points + 1);  // points = no 1-labeled value
            for (u32 i = 0; i < n; ++i)
                S.push_back({cls.point_at(idx[i]), static_cast<std::uint8_t>(idx[i] == a)});
        } else if (arbitrary_labels) {
            for (u32 i = 0; i < n; ++i)
                S.push_back(flat_item(cls, rng() % flat_item_count(cls)));
        } else {
            auto hyps = all_hypotheses(cls);
            const Hypothesis& h = hyps[rng() % hyps.size()];
            for (u32 i = 0; i < n; ++i) {
                auto x = cls.point_at(rng() % points);
                S.push_back({x, predict(cls, h, x)});
            }
        }
        try {
            run_learn({scheme_id, cls}, S);
            return S;
        } catch (const std::exception&) {
            // regime violation (e.g. unrealizable point data); resample
        }
    }
    throw std::runtime_error("could not sample a dataset for " + scheme_id);
}

}  // namespace ul
