#pragma once

#include <optional>

#include "ul/bits.hpp"
#include "ul/sperner.hpp"

namespace ul {

// Count-to-Zero: a deletion scheme whose only job is to report, after a batch
// of removals, whether anything survives. Item i of an m-element learn call
// gets the i-th element of the size-m family as its ticket; a batch of k
// deleted tickets matches the size-k family exactly only when k = m, so the
// verdict never needs the stored bit unless the batch is empty.

enum class Verdict : std::uint8_t { Empty = 0, NonEmpty = 1 };

struct CtzModel {
    Verdict aux;
    std::vector<SpernerSymbol> tickets;  // canonical sorted order
};

CtzModel ctz_learn(u64 m);

// `aux` may be omitted only when `deleted` is non-empty; it is never read in
// that case.
Verdict ctz_unlearn(const std::vector<SpernerSymbol>& deleted,
                    std::optional<Verdict> aux);

// Serialization: aux is 1 bit, each ticket 16 bits.
Blob ctz_write_aux(Verdict v);
Verdict ctz_read_aux(const Blob& b);
Blob ctz_write_ticket(SpernerSymbol s);
SpernerSymbol ctz_read_ticket(const Blob& b);

}  // namespace ul
