#include "ul/domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ul/gf2.hpp"

namespace ul {

ConceptClass ConceptClass::thresholds(u32 domain_size) {
    if (domain_size == 0) throw std::invalid_argument("thresholds: empty domain");
    ConceptClass c;
    c.kind = ClassKind::Thresholds;
    c.domain_size = domain_size;
    return c;
}

ConceptClass ConceptClass::product_thresholds(u32 d, u32 m) {
    if (d == 0 || m == 0) throw std::invalid_argument("product_thresholds: empty domain");
    ConceptClass c;
    c.kind = ClassKind::ProductThresholds;
    c.dims = d;
    c.side = m;
    return c;
}

ConceptClass ConceptClass::parities(u32 d) {
    if (d == 0 || d > 24) throw std::invalid_argument("parities: d out of range");
    ConceptClass c;
    c.kind = ClassKind::Parities;
    c.dims = d;
    return c;
}

ConceptClass ConceptClass::point_functions(u32 domain_size) {
    if (domain_size == 0) throw std::invalid_argument("point_functions: empty domain");
    ConceptClass c;
    c.kind = ClassKind::PointFunctions;
    c.domain_size = domain_size;
    return c;
}

ConceptClass ConceptClass::explicit_table(std::vector<std::vector<std::uint8_t>> table) {
    if (table.empty() || table[0].empty())
        throw std::invalid_argument("explicit_table: empty table");
    ConceptClass c;
    c.kind = ClassKind::Explicit;
    c.domain_size = static_cast<u32>(table[0].size());
    for (const auto& row : table)
        if (row.size() != c.domain_size)
            throw std::invalid_argument("explicit_table: ragged rows");
    c.table = std::move(table);
    if (!c.intersection_closed())
        throw std::invalid_argument("explicit_table: table is not intersection-closed");
    return c;
}

u32 ConceptClass::domain_count() const {
    switch (kind) {
        case ClassKind::Thresholds:
        case ClassKind::PointFunctions:
        case ClassKind::Explicit:
            return domain_size;
        case ClassKind::Parities:
            return u32(1) << dims;
        case ClassKind::ProductThresholds: {
            u64 n = 1;
            for (u32 j = 0; j < dims; ++j) n *= side;
            return static_cast<u32>(n);
        }
    }
    return 0;
}

u64 ConceptClass::hypothesis_count() const {
    switch (kind) {
        case ClassKind::Thresholds:
            return u64(domain_size) + 1;
        case ClassKind::PointFunctions:
            return domain_size;
        case ClassKind::Explicit:
            return table.size();
        case ClassKind::Parities:
            return u64(1) << dims;
        case ClassKind::ProductThresholds: {
            u64 n = 1;
            for (u32 j = 0; j < dims; ++j) n *= u64(side) + 1;
            return n;
        }
    }
    return 0;
}

bool ConceptClass::intersection_closed() const {
    if (kind == ClassKind::ProductThresholds) return true;
    if (kind != ClassKind::Explicit) return false;
    std::set<std::vector<std::uint8_t>> rows(table.begin(), table.end());
    for (const auto& a : table)
        for (const auto& b : table) {
            std::vector<std::uint8_t> both(a.size());
            for (size_t i = 0; i < a.size(); ++i) both[i] = a[i] & b[i];
            if (!rows.count(both)) return false;
        }
    return true;
}

std::vector<u32> ConceptClass::point_at(u64 idx) const {
    if (idx >= domain_count()) throw std::out_of_range("point_at");
    switch (kind) {
        case ClassKind::Thresholds:
        case ClassKind::PointFunctions:
        case ClassKind::Explicit:
            return {static_cast<u32>(idx + 1)};
        case ClassKind::Parities: {
            std::vector<u32> x(dims);
            for (u32 j = 0; j < dims; ++j) x[j] = (idx >> j) & 1;
            return x;
        }
        case ClassKind::ProductThresholds: {
            std::vector<u32> x(dims);
            for (u32 j = 0; j < dims; ++j) {
                x[j] = static_cast<u32>(idx % side) + 1;
                idx /= side;
            }
            return x;
        }
    }
    return {};
}

bool ConceptClass::contains_point(const std::vector<u32>& x) const {
    switch (kind) {
        case ClassKind::Thresholds:
        case ClassKind::PointFunctions:
        case ClassKind::Explicit:
            return x.size() == 1 && x[0] >= 1 && x[0] <= domain_size;
        case ClassKind::Parities:
            if (x.size() != dims) return false;
            for (u32 v : x)
                if (v > 1) return false;
            return true;
        case ClassKind::ProductThresholds:
            if (x.size() != dims) return false;
            for (u32 v : x)
                if (v < 1 || v > side) return false;
            return true;
    }
    return false;
}

std::string ConceptClass::describe() const {
    std::ostringstream os;
    switch (kind) {
        case ClassKind::Thresholds: os << "thresholds domain=" << domain_size; break;
        case ClassKind::ProductThresholds: os << "prodthresh d=" << dims << " m=" << side; break;
        case ClassKind::Parities: os << "parities d=" << dims; break;
        case ClassKind::PointFunctions: os << "point domain=" << domain_size; break;
        case ClassKind::Explicit: os << "explicit |X|=" << domain_size << " |H|=" << table.size(); break;
    }
    return os.str();
}

std::string Hypothesis::describe() const {
    std::ostringstream os;
    switch (kind) {
        case HypKind::Threshold: os << "h_>" << param[0]; break;
        case HypKind::ProductThreshold: {
            os << "h_>(";
            for (size_t j = 0; j < param.size(); ++j) os << (j ? "," : "") << param[j];
            os << ")";
            break;
        }
        case HypKind::Parity: {
            os << "h_w(";
            for (size_t j = 0; j < param.size(); ++j) os << (j ? "," : "") << param[j];
            os << ")";
            break;
        }
        case HypKind::Point: os << "h_" << param[0]; break;
        case HypKind::PointOrZero: os << (param[0] == 0 ? std::string("h_zero") : "h_" + std::to_string(param[0])); break;
        case HypKind::Explicit: os << "row_" << param[0]; break;
    }
    return os.str();
}

std::uint8_t predict(const ConceptClass& cls, const Hypothesis& h, const std::vector<u32>& x) {
    switch (h.kind) {
        case HypKind::Threshold:
            return x[0] > h.param[0] ? 1 : 0;
        case HypKind::ProductThreshold:
            for (size_t j = 0; j < h.param.size(); ++j)
                if (x[j] <= h.param[j]) return 0;
            return 1;
        case HypKind::Parity: {
            u32 acc = 0;
            for (size_t j = 0; j < h.param.size(); ++j) acc ^= h.param[j] & x[j];
            return static_cast<std::uint8_t>(acc & 1);
        }
        case HypKind::Point:
            return x[0] == h.param[0] ? 1 : 0;
        case HypKind::PointOrZero:
            return (h.param[0] != 0 && x[0] == h.param[0]) ? 1 : 0;
        case HypKind::Explicit:
            return cls.table.at(h.param[0]).at(x[0] - 1);
    }
    return 0;
}

u64 loss(const ConceptClass& cls, const Hypothesis& h, const Dataset& S) {
    u64 err = 0;
    for (const auto& [x, y] : S)
        if (predict(cls, h, x) != y) ++err;
    return err;
}

std::vector<Hypothesis> all_hypotheses(const ConceptClass& cls, u64 cap) {
    const u64 count = cls.hypothesis_count();
    if (count > cap) throw std::runtime_error("all_hypotheses: enumeration cap exceeded");
    std::vector<Hypothesis> out;
    out.reserve(count);
    switch (cls.kind) {
        case ClassKind::Thresholds:
            for (u32 a = 0; a <= cls.domain_size; ++a)
                out.push_back({HypKind::Threshold, {a}});
            break;
        case ClassKind::PointFunctions:
            for (u32 a = 1; a <= cls.domain_size; ++a)
                out.push_back({HypKind::Point, {a}});
            break;
        case ClassKind::Parities:
            for (u32 mask = 0; mask < (u32(1) << cls.dims); ++mask) {
                std::vector<u32> w(cls.dims);
                for (u32 j = 0; j < cls.dims; ++j) w[j] = (mask >> j) & 1;
                out.push_back({HypKind::Parity, std::move(w)});
            }
            break;
        case ClassKind::ProductThresholds:
            for (u64 idx = 0; idx < count; ++idx) {
                std::vector<u32> a(cls.dims);
                u64 t = idx;
                for (u32 j = 0; j < cls.dims; ++j) {
                    a[j] = static_cast<u32>(t % (u64(cls.side) + 1));
                    t /= u64(cls.side) + 1;
                }
                out.push_back({HypKind::ProductThreshold, std::move(a)});
            }
            break;
        case ClassKind::Explicit:
            for (u32 r = 0; r < cls.table.size(); ++r)
                out.push_back({HypKind::Explicit, {r}});
            break;
    }
    return out;
}

std::vector<Hypothesis> erm_set(const ConceptClass& cls, const Dataset& S, u64 cap) {
    check_dataset(cls, S);
    auto hyps = all_hypotheses(cls, cap);
    u64 best = ~u64(0);
    std::vector<Hypothesis> out;
    for (auto& h : hyps) {
        u64 l = loss(cls, h, S);
        if (l < best) {
            best = l;
            out.clear();
        }
        if (l == best) out.push_back(std::move(h));
    }
    return out;
}

bool is_realizable(const ConceptClass& cls, const Dataset& S) {
    check_dataset(cls, S);
    switch (cls.kind) {
        case ClassKind::Thresholds: {
            u32 p = 0, q1 = cls.domain_size + 1;  // largest 0-label, smallest 1-label
            for (const auto& [x, y] : S)
                if (y == 0) p = std::max(p, x[0]); else q1 = std::min(q1, x[0]);
            return p < q1;
        }
        case ClassKind::Parities: {
            std::vector<u32> rows;
            for (const auto& [x, y] : S) {
                u32 r = u32(y) << cls.dims;
                for (u32 j = 0; j < cls.dims; ++j) r |= x[j] << j;
                rows.push_back(r);
            }
            return gf2::consistent(gf2::rref(std::move(rows), cls.dims), cls.dims);
        }
        default: {
            for (const auto& h : all_hypotheses(cls))
                if (loss(cls, h, S) == 0) return true;
            return false;
        }
    }
}

void check_dataset(const ConceptClass& cls, const Dataset& S) {
    for (const auto& [x, y] : S) {
        if (!cls.contains_point(x)) throw std::invalid_argument("example outside class domain");
        if (y > 1) throw std::invalid_argument("label must be 0 or 1");
    }
}

Hypothesis canonical_erm(const ConceptClass& cls, const Dataset& S) {
    check_dataset(cls, S);
    switch (cls.kind) {
        case ClassKind::Thresholds: {
            // Smallest minimum-loss threshold; agnostic-safe. Loss as a
            // function of a changes only at sample points, so scan all a.
            u64 best = ~u64(0);
            u32 arg = 0;
            for (u32 a = 0; a <= cls.domain_size; ++a) {
                u64 l = loss(cls, {HypKind::Threshold, {a}}, S);
                if (l < best) { best = l; arg = a; }
            }
            return {HypKind::Threshold, {arg}};
        }
        case ClassKind::ProductThresholds: {
            // The closure: tightest product threshold still accepting every
            // 1-labeled example (pointwise AND of the ERM set).
            std::vector<u32> a(cls.dims, cls.side);
            bool any_one = false;
            for (const auto& [x, y] : S)
                if (y == 1) {
                    for (u32 j = 0; j < cls.dims; ++j)
                        a[j] = any_one ? std::min(a[j], x[j] - 1) : x[j] - 1;
                    any_one = true;
                }
            Hypothesis h{HypKind::ProductThreshold, std::move(a)};
            if (loss(cls, h, S) != 0)
                throw std::runtime_error("canonical_erm: dataset not realizable");
            return h;
        }
        case ClassKind::Parities: {
            std::vector<u32> rows;
            for (const auto& [x, y] : S) {
                u32 r = u32(y) << cls.dims;
                for (u32 j = 0; j < cls.dims; ++j) r |= x[j] << j;
                rows.push_back(r);
            }
            auto w = gf2::lex_min_solution(std::move(rows), cls.dims);
            if (!w) throw std::runtime_error("canonical_erm: dataset not realizable");
            std::vector<u32> wv(cls.dims);
            for (u32 j = 0; j < cls.dims; ++j) wv[j] = (*w >> j) & 1;
            return {HypKind::Parity, std::move(wv)};
        }
        case ClassKind::PointFunctions: {
            std::vector<std::uint8_t> zero_at(cls.domain_size + 1, 0);
            u32 one_at = 0;
            for (const auto& [x, y] : S) {
                if (y == 1) {
                    if (one_at != 0 && one_at != x[0])
                        throw std::runtime_error("canonical_erm: dataset not realizable");
                    one_at = x[0];
                } else {
                    zero_at[x[0]] = 1;
                }
            }
            if (one_at != 0) {
                if (zero_at[one_at])
                    throw std::runtime_error("canonical_erm: dataset not realizable");
                return {HypKind::Point, {one_at}};
            }
            for (u32 b = 1; b <= cls.domain_size; ++b)
                if (!zero_at[b]) return {HypKind::Point, {b}};
            throw std::runtime_error("canonical_erm: dataset not realizable");
        }
        case ClassKind::Explicit: {
            std::vector<std::uint8_t> acc(cls.domain_size, 1);
            bool any = false;
            for (u32 r = 0; r < cls.table.size(); ++r) {
                if (loss(cls, {HypKind::Explicit, {r}}, S) != 0) continue;
                for (u32 i = 0; i < cls.domain_size; ++i) acc[i] &= cls.table[r][i];
                any = true;
            }
            if (!any) throw std::runtime_error("canonical_erm: dataset not realizable");
            for (u32 r = 0; r < cls.table.size(); ++r)
                if (cls.table[r] == acc) return {HypKind::Explicit, {r}};
            throw std::runtime_error("canonical_erm: table is not intersection-closed");
        }
    }
    throw std::logic_error("canonical_erm: unknown class");
}

}  // namespace ul
