#include "ul/ctz.hpp"

#include <stdexcept>

namespace ul {

CtzModel ctz_learn(u64 m) {
    CtzModel out;
    out.aux = m == 0 ? Verdict::Empty : Verdict::NonEmpty;
    if (m > 0) out.tickets = multiset_elements(global_family(m));
    return out;
}

Verdict ctz_unlearn(const std::vector<SpernerSymbol>& deleted,
                    std::optional<Verdict> aux) {
    if (deleted.empty()) {
        if (!aux) throw std::invalid_argument("ctz_unlearn: aux required for empty deletion");
        return *aux;
    }
    SpernerMultiset got;
    for (SpernerSymbol s : deleted) ++got[s];
    return got == global_family(deleted.size()) ? Verdict::Empty : Verdict::NonEmpty;
}

Blob ctz_write_aux(Verdict v) {
    BitWriter w;
    w.put(static_cast<u64>(v), 1);
    return w.take();
}

Verdict ctz_read_aux(const Blob& b) {
    BitReader r(b);
    Verdict v = static_cast<Verdict>(r.get(1));
    if (!r.done()) throw std::invalid_argument("ctz aux: trailing bits");
    return v;
}

Blob ctz_write_ticket(SpernerSymbol s) {
    BitWriter w;
    w.put(s, 16);
    return w.take();
}

SpernerSymbol ctz_read_ticket(const Blob& b) {
    BitReader r(b);
    auto s = static_cast<SpernerSymbol>(r.get(16));
    if (!r.done()) throw std::invalid_argument("ctz ticket: trailing bits");
    return s;
}

}  // namespace ul
