#include "ul/scheme_api.hpp"

#include <algorithm>
#include <stdexcept>

#include "ul/agnostic.hpp"
#include "ul/central.hpp"
#include "ul/chain.hpp"
#include "ul/sharp.hpp"
#include "ul/tree.hpp"

namespace ul {

std::string SchemeResult::describe() const {
    switch (kind) {
        case ResultKind::Hyp: return h.describe();
        case ResultKind::Bit: return v == Verdict::Empty ? "bot" : "top";
        case ResultKind::Value: return value ? std::to_string(*value) : "none";
    }
    return "?";
}

std::size_t LearnOutput::max_ticket_bits() const {
    std::size_t m = 0;
    for (const auto& t : tickets) m = std::max(m, t.nbits);
    return m;
}

namespace {

SchemeResult hyp_result(Hypothesis h) {
    SchemeResult r;
    r.kind = ResultKind::Hyp;
    r.h = std::move(h);
    return r;
}

SchemeResult bit_result(Verdict v) {
    SchemeResult r;
    r.kind = ResultKind::Bit;
    r.v = v;
    return r;
}

SchemeResult value_result(std::optional<u32> value) {
    SchemeResult r;
    r.kind = ResultKind::Value;
    r.value = value;
    return r;
}

std::vector<u32> bare_values(const Dataset& S) {
    std::vector<u32> v;
    for (const auto& z : S) v.push_back(z.x[0]);
    return v;
}

std::vector<std::pair<Example, Blob>> example_pairs(const std::vector<UnlearnItem>& deleted) {
    std::vector<std::pair<Example, Blob>> out;
    for (const auto& d : deleted) out.emplace_back(d.z, d.ticket);
    return out;
}

Dataset bare_examples(const std::vector<UnlearnItem>& deleted) {
    Dataset out;
    for (const auto& d : deleted) out.push_back(d.z);
    return out;
}

}  // namespace

std::vector<std::string> scheme_ids() {
    return {"tree:thresholds",  "tree:prodthresh",  "tree:parities",
            "chain:thresholds", "chain:prodthresh", "chain:parities",
            "central:thresholds", "central:augpoint", "central:noreppoint",
            "sharp:point", "sharp:minval", "sharp:maxval",
            "sharp:prodthresh", "sharp:thresholds",
            "agnostic:thresholds", "realizability:thresholds", "ctz"};
}

bool known_scheme(const std::string& id) {
    auto ids = scheme_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

LearnOutput run_learn(const SchemeSpec& spec, const Dataset& S) {
    const std::string& id = spec.id;
    if (!known_scheme(id)) throw std::invalid_argument("unknown scheme id: " + id);
    LearnOutput out;
    if (id.rfind("tree:", 0) == 0) {
        TreeModel m = tree_learn(spec.cls, S);
        out.result = hyp_result(m.h);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id.rfind("chain:", 0) == 0) {
        ChainModel m = chain_learn(spec.cls, S);
        out.result = hyp_result(m.h);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id == "central:thresholds" || id == "central:augpoint" ||
               id == "central:noreppoint") {
        CentralModel m = id == "central:thresholds" ? central_thresh_learn(spec.cls, S)
                       : id == "central:augpoint"   ? augpoint_learn(spec.cls, S)
                                                    : norep_point_learn(spec.cls, S);
        out.result = hyp_result(m.h);
        out.aux = m.aux;
        out.tickets.assign(S.size(), Blob{});
    } else if (id == "sharp:point" || id == "sharp:prodthresh" || id == "sharp:thresholds") {
        SharpModel m = id == "sharp:point"      ? point_learn(spec.cls, S)
                     : id == "sharp:prodthresh" ? prodthresh_learn(spec.cls, S)
                                                : sharpthresh_learn(spec.cls, S);
        out.result = hyp_result(m.h);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id == "sharp:minval" || id == "sharp:maxval") {
        ValModel m = id == "sharp:minval" ? minval_learn(bare_values(S), spec.cls.domain_size)
                                          : maxval_learn(bare_values(S), spec.cls.domain_size);
        out.result = value_result(m.value);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id == "agnostic:thresholds") {
        AgnosticModel m = agnostic_thresh_learn(spec.cls, S);
        out.result = hyp_result(m.h);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id == "realizability:thresholds") {
        RealizabilityModel m = realizability_learn(spec.cls, S);
        out.result = bit_result(m.realizable ? Verdict::Empty : Verdict::NonEmpty);
        out.aux = m.aux;
        out.tickets = m.tickets;
    } else if (id == "ctz") {
        CtzModel m = ctz_learn(S.size());
        out.result = bit_result(m.aux);
        out.aux = ctz_write_aux(m.aux);
        for (SpernerSymbol s : m.tickets) out.tickets.push_back(ctz_write_ticket(s));
    } else {
        throw std::invalid_argument("unknown scheme id: " + id);
    }
    if (out.tickets.size() != S.size())
        throw std::logic_error("scheme produced wrong ticket count");
    return out;
}

SchemeResult run_unlearn(const SchemeSpec& spec, u32 n, const Blob& aux,
                         const std::vector<UnlearnItem>& deleted) {
    const std::string& id = spec.id;
    if (!known_scheme(id)) throw std::invalid_argument("unknown scheme id: " + id);
    if (deleted.size() > n) throw std::invalid_argument("more deletions than items");
    {
        std::vector<u32> idx;
        for (const auto& d : deleted) idx.push_back(d.index);
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::invalid_argument("repeated deletion index");
        if (!idx.empty() && idx.back() >= n)
            throw std::invalid_argument("deletion index out of range");
    }
    if (id.rfind("tree:", 0) == 0) {
        std::vector<Blob> tickets;
        for (const auto& d : deleted) tickets.push_back(d.ticket);
        return hyp_result(tree_unlearn(spec.cls, n, aux, tickets));
    }
    if (id.rfind("chain:", 0) == 0)
        return hyp_result(chain_unlearn(spec.cls, n, aux, example_pairs(deleted)));
    if (id == "central:thresholds")
        return hyp_result(central_thresh_unlearn(spec.cls, n, aux, bare_examples(deleted)));
    if (id == "central:augpoint")
        return hyp_result(augpoint_unlearn(spec.cls, n, aux, bare_examples(deleted)));
    if (id == "central:noreppoint")
        return hyp_result(norep_point_unlearn(spec.cls, n, aux, bare_examples(deleted)));
    if (id == "sharp:point")
        return hyp_result(point_unlearn(spec.cls, aux, example_pairs(deleted)));
    if (id == "sharp:prodthresh")
        return hyp_result(prodthresh_unlearn(spec.cls, aux, example_pairs(deleted)));
    if (id == "sharp:thresholds")
        return hyp_result(sharpthresh_unlearn(spec.cls, aux, example_pairs(deleted)));
    if (id == "sharp:minval" || id == "sharp:maxval") {
        std::vector<std::pair<u32, Blob>> pairs;
        for (const auto& d : deleted) pairs.emplace_back(d.z.x[0], d.ticket);
        auto v = id == "sharp:minval" ? minval_unlearn(pairs, aux, spec.cls.domain_size)
                                      : maxval_unlearn(pairs, aux, spec.cls.domain_size);
        return value_result(v);
    }
    if (id == "agnostic:thresholds")
        return hyp_result(agnostic_thresh_unlearn(spec.cls, n, aux, example_pairs(deleted)));
    if (id == "realizability:thresholds")
        return bit_result(realizability_unlearn(spec.cls, aux, example_pairs(deleted))
                              ? Verdict::Empty
                              : Verdict::NonEmpty);
    if (id == "ctz") {
        if (deleted.empty()) return bit_result(ctz_read_aux(aux));
        std::vector<SpernerSymbol> syms;
        for (const auto& d : deleted) syms.push_back(ctz_read_ticket(d.ticket));
        return bit_result(ctz_unlearn(syms, std::nullopt));
    }
    throw std::invalid_argument("unknown scheme id: " + id);
}

SchemeSession::SchemeSession(SchemeSpec spec, const Dataset& S)
    : spec_(std::move(spec)), data_(S), out_(run_learn(spec_, S)) {}

SchemeResult SchemeSession::unlearn(const std::vector<u32>& indices) {
    if (used_) throw std::logic_error("unlearn already performed for this session");
    used_ = true;
    std::vector<UnlearnItem> req;
    for (u32 i : indices) {
        if (i >= data_.size()) throw std::invalid_argument("bad deletion index");
        req.push_back({i, data_[i], out_.tickets[i]});
    }
    return run_unlearn(spec_, static_cast<u32>(data_.size()), out_.aux, req);
}

CtzAdapter make_ctz_adapter(const SchemeSpec& spec) {
    LearnOutput empty = run_learn(spec, {});
    if (empty.result.kind != ResultKind::Hyp)
        throw std::invalid_argument("ctz adapter needs a hypothesis-valued scheme");
    const Hypothesis h1 = empty.result.h;
    // A probe the empty-data hypothesis mislabels, on which a one-example
    // dataset is realizable; m copies are then realizable too.
    for (u64 i = 0; i < spec.cls.domain_count(); ++i) {
        auto x = spec.cls.point_at(i);
        std::uint8_t y = predict(spec.cls, h1, x) ? 0 : 1;
        Example probe{x, y};
        if (is_realizable(spec.cls, {probe})) {
            try {
                run_learn(spec, {probe});
            } catch (const std::exception&) {
                continue;
            }
            return {spec, probe};
        }
    }
    throw std::invalid_argument("ctz adapter: class is trivial");
}

LearnOutput CtzAdapter::learn(u64 m) const {
    return run_learn(spec, Dataset(m, probe));
}

Verdict CtzAdapter::unlearn(u32 n, const Blob& aux,
                            const std::vector<UnlearnItem>& deleted) const {
    SchemeResult r = run_unlearn(spec, n, aux, deleted);
    return predict(spec.cls, r.h, probe.x) == probe.y ? Verdict::NonEmpty : Verdict::Empty;
}

}  // namespace ul
