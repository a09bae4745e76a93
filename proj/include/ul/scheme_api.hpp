#pragma once

#include <optional>
#include <string>

#include "ul/bits.hpp"
#include "ul/ctz.hpp"
#include "ul/domain.hpp"

namespace ul {

// Uniform interface over every scheme: learn returns a result, an aux blob,
// and one ticket per item; unlearn takes the deleted items with their tickets
// plus the instance parameters (original n and the class), which the caller
// must retain to parse variable-width fields. Central schemes appear with
// zero-length tickets. Each learn admits exactly one unlearn; SchemeSession
// enforces that.
//
// Scheme ids: tree:<class>, chain:<class> (<class> one of thresholds,
// prodthresh, parities), central:thresholds, central:augpoint,
// central:noreppoint, sharp:point, sharp:minval, sharp:maxval,
// sharp:prodthresh, sharp:thresholds, agnostic:thresholds,
// realizability:thresholds, ctz.

struct SchemeSpec {
    std::string id;
    ConceptClass cls;  // ignored by ctz; value range for minval/maxval
};

enum class ResultKind { Hyp, Bit, Value };

// Bit results: for ctz, Empty means nothing survives; for realizability,
// Empty means the survivors are realizable (both are the scheme's "bottom").
struct SchemeResult {
    ResultKind kind = ResultKind::Hyp;
    Hypothesis h;
    Verdict v = Verdict::Empty;
    std::optional<u32> value;

    friend bool operator==(const SchemeResult&, const SchemeResult&) = default;
    std::string describe() const;
};

struct LearnOutput {
    SchemeResult result;
    Blob aux;
    std::vector<Blob> tickets;  // size n (empty blobs for central schemes)
    std::size_t aux_bits() const { return aux.nbits; }
    std::size_t max_ticket_bits() const;
};

struct UnlearnItem {
    u32 index;
    Example z;
    Blob ticket;
};

bool known_scheme(const std::string& id);
std::vector<std::string> scheme_ids();

// For minval/maxval/ctz, dataset items are read as bare values / counted only.
LearnOutput run_learn(const SchemeSpec& spec, const Dataset& S);
SchemeResult run_unlearn(const SchemeSpec& spec, u32 n, const Blob& aux,
                         const std::vector<UnlearnItem>& deleted);

// One learn, at most one unlearn.
class SchemeSession {
public:
    SchemeSession(SchemeSpec spec, const Dataset& S);
    const LearnOutput& learned() const { return out_; }
    SchemeResult unlearn(const std::vector<u32>& indices);

private:
    SchemeSpec spec_;
    Dataset data_;
    LearnOutput out_;
    bool used_ = false;
};

// Count-to-Zero built from any class scheme: learn(m) trains the wrapped
// scheme on m copies of a probe example whose label disagrees with the
// empty-data hypothesis, and the verdict reads off how the recovered
// hypothesis labels the probe.
struct CtzAdapter {
    SchemeSpec spec;
    Example probe;

    LearnOutput learn(u64 m) const;
    Verdict unlearn(u32 n, const Blob& aux, const std::vector<UnlearnItem>& deleted) const;
};

CtzAdapter make_ctz_adapter(const SchemeSpec& spec);

}  // namespace ul
