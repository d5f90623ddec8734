#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "largeness/ad_family.hpp"
#include "largeness/index_sets.hpp"
#include "largeness/nat.hpp"
#include "largeness/seq_family.hpp"

namespace largeness {

// ---------------------------------------------------------------------------
// S_L(a, H) blocks and witness search.
// ---------------------------------------------------------------------------

struct CrWitness {
    Nat a;
    Mask h = 0;
};

/// S_L(a, H) = { a + sum_{t in H} f(t) : f in L }, duplicates collapsed.
inline std::set<Nat> sl_block(const SeqFamily& L, const CrWitness& w) {
    std::set<Nat> out;
    for (std::size_t i = 0; i < L.size(); ++i) out.insert(w.a + L.row_sum(i, w.h));
    return out;
}

/// Least (a, H) with S_L(a, H) inside the set, a ascending and H in
/// size-then-lex order; failure within bounds is not a disproof.
template <typename Pred>
std::optional<CrWitness> cr_witness_search(Pred&& member, const SeqFamily& L, const Nat& a_max) {
    if (a_max < 1) throw Error("cr_witness_search: aMax must be >= 1");
    auto masks = size_lex_masks(L.length());
    std::vector<std::vector<Nat>> sums(masks.size());
    for (std::size_t k = 0; k < masks.size(); ++k)
        for (std::size_t i = 0; i < L.size(); ++i) sums[k].push_back(L.row_sum(i, masks[k]));

    for (Nat a = 1; a <= a_max; ++a) {
        for (std::size_t k = 0; k < masks.size(); ++k) {
            bool ok = true;
            for (const auto& s : sums[k]) {
                if (!member(a + s)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return CrWitness{a, masks[k]};
        }
    }
    return std::nullopt;
}

/// Unique representative of L's translation class: the translate whose
/// global minimum entry is 1. Idempotent and constant on orbits.
inline SeqFamily translate_class_rep(const SeqFamily& L) {
    Nat m = L.min_entry();
    if (m == 1) return L;
    return L.minus(m - 1);
}

// ---------------------------------------------------------------------------
// Schedules and family enumeration.
// ---------------------------------------------------------------------------

/// The sequence-length schedule <r_n>: family size n pairs with sequence
/// length r_n. Explicit finite table.
struct CrSchedule {
    std::vector<std::uint32_t> r;  // r[0] = r_1

    static CrSchedule defaults(std::size_t n_max) {  // r_n = 2^n + 1
        CrSchedule s;
        for (std::size_t n = 1; n <= n_max; ++n)
            s.r.push_back(static_cast<std::uint32_t>((1u << n) + 1));
        return s;
    }

    std::uint32_t at(std::size_t n) const {
        if (n == 0 || n > r.size())
            throw Error("schedule has no r_" + std::to_string(n));
        std::uint32_t v = r[n - 1];
        if (v < 1) throw Error("schedule entries must be positive");
        return v;
    }
};

namespace detail {

/// All sequences of length m over {1..horizon}, lexicographic order.
inline std::vector<std::vector<Nat>> all_sequences(std::size_t m, std::uint64_t horizon,
                                                   std::size_t cap) {
    double count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= static_cast<double>(horizon);
    if (count > static_cast<double>(cap))
        throw Error("sequence enumeration exceeds the configured cap");
    std::vector<std::vector<Nat>> out;
    std::vector<std::uint64_t> cur(m, 1);
    while (true) {
        std::vector<Nat> seq;
        seq.reserve(m);
        for (auto v : cur) seq.emplace_back(v);
        out.push_back(std::move(seq));
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == horizon) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

}  // namespace detail

/// All families with n <= n_max members, member length r_n, entries in
/// [1, horizon]; ordered by n, then lexicographically on the sorted members.
/// Family sizes beyond 2 are enumerated by combinations in the same order.
inline std::vector<SeqFamily> enumerate_seq_families(const CrSchedule& sched, std::size_t n_max,
                                                     std::uint64_t entry_horizon,
                                                     std::size_t cap = 200000) {
    if (entry_horizon < 1) throw Error("entry horizon must be >= 1");
    std::vector<SeqFamily> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto seqs = detail::all_sequences(sched.at(n), entry_horizon, cap);
        if (seqs.size() < n) continue;
        // lexicographically ordered size-n combinations of the sorted sequence list
        std::vector<std::size_t> pick(n);
        for (std::size_t i = 0; i < n; ++i) pick[i] = i;
        while (true) {
            std::vector<std::vector<Nat>> members;
            members.reserve(n);
            for (auto i : pick) members.push_back(seqs[i]);
            out.push_back(SeqFamily(std::move(members)));
            if (out.size() > cap) throw Error("family enumeration exceeds the configured cap");
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == seqs.size() - (n - i) - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Translate-class buckets: per-bucket sets of translated representatives such
// that every enumerated family has, in every bucket, a translate of itself.
// Disjoint mode uses arithmetic progressions of offsets; almost-disjoint mode
// uses prefix-code offsets from one binary branch per bucket.
// ---------------------------------------------------------------------------

enum class SplitMode { Disjoint, AlmostDisjoint };

inline std::string split_mode_name(SplitMode m) {
    return m == SplitMode::Disjoint ? "disjoint" : "almost-disjoint";
}

inline SplitMode parse_split_mode(const std::string& s) {
    if (s == "disjoint") return SplitMode::Disjoint;
    if (s == "almost-disjoint") return SplitMode::AlmostDisjoint;
    throw Error("unknown split mode: " + s);
}

namespace detail {

/// Offsets of bucket `p` up to and including its canonical coverage offset,
/// the least offset >= horizon in the bucket's class. Translating any family
/// with entries <= horizon by that offset lands inside the bucket.
inline std::vector<Nat> bucket_offsets(SplitMode mode, std::size_t p, std::size_t buckets,
                                       std::uint64_t horizon, const AdNatFamily* branches) {
    std::vector<Nat> out;
    if (mode == SplitMode::Disjoint) {
        for (std::uint64_t o = p;; o += buckets) {
            out.emplace_back(o);
            if (o >= horizon) break;
        }
    } else {
        for (std::size_t n = 1;; ++n) {
            Nat code = branches->member(p, n);
            out.push_back(code);
            if (code >= Nat(horizon)) break;
        }
    }
    return out;
}

inline Nat coverage_offset(SplitMode mode, std::size_t p, std::size_t buckets,
                           std::uint64_t horizon, const AdNatFamily* branches) {
    return bucket_offsets(mode, p, buckets, horizon, branches).back();
}

/// Buckets a family lands in, by its translation shift.
inline std::vector<std::size_t> buckets_of_shift(const Nat& shift, SplitMode mode,
                                                 std::size_t buckets,
                                                 const AdNatFamily* branches) {
    std::vector<std::size_t> out;
    if (mode == SplitMode::Disjoint) {
        out.push_back(static_cast<std::size_t>(shift % buckets));
    } else {
        for (std::size_t p = 0; p < buckets; ++p) {
            for (std::size_t n = 1;; ++n) {
                Nat code = branches->member(p, n);
                if (code == shift) {
                    out.push_back(p);
                    break;
                }
                if (code > shift) break;
            }
        }
    }
    return out;
}

}  // namespace detail

struct Lem1Buckets {
    std::vector<SeqFamily> representatives;
    std::vector<std::vector<SeqFamily>> buckets;
};

inline Lem1Buckets lem1_families(const CrSchedule& sched, std::size_t n_max, std::size_t buckets,
                                 SplitMode mode, std::uint64_t entry_horizon,
                                 std::size_t cap = 200000) {
    if (buckets < 1) throw Error("lem1_families: buckets must be >= 1");
    if (entry_horizon < 1)
        throw Error("lem1_families: horizon too small to cover any representative");

    std::set<SeqFamily> reps;
    for (const auto& fam : enumerate_seq_families(sched, n_max, entry_horizon, cap))
        reps.insert(translate_class_rep(fam));

    Lem1Buckets out;
    out.representatives.assign(reps.begin(), reps.end());

    std::optional<AdNatFamily> branches;
    if (mode == SplitMode::AlmostDisjoint) branches = AdNatFamily::from_indices(buckets);

    out.buckets.resize(buckets);
    for (std::size_t p = 0; p < buckets; ++p) {
        auto offsets = detail::bucket_offsets(mode, p, buckets, entry_horizon,
                                              branches ? &*branches : nullptr);
        for (const auto& rep : out.representatives)
            for (const auto& o : offsets)
                out.buckets[p].push_back(o == 0 ? rep : rep.plus(o));
    }
    return out;
}

// ---------------------------------------------------------------------------
// The greedy combinatorially-rich splitter.
// ---------------------------------------------------------------------------

struct CrLedgerEntry {
    SeqFamily family;
    Nat a;
    Mask h = 0;
    std::vector<Nat> block;        // sorted values of sl_block(family, (a, h))
    std::vector<std::size_t> parts;  // bucket assignment (empty = none)
    Nat ladder_b = 0;              // translation used by the retry ladder, 0 = none
    bool coverage_extra = false;
    std::size_t rep_index = 0;     // into CrSplitResult::representatives
};

struct CrSplitResult {
    std::vector<std::set<Nat>> parts;
    std::vector<CrLedgerEntry> ledger;
    std::vector<SeqFamily> representatives;
};

struct CrSplitOptions {
    Nat a_max = 1u << 30;
    unsigned retry_cap = 40;       // ladder length: b = 1, 2, ..., 2^(retry_cap-1)
    std::size_t enum_cap = 200000;
};

namespace detail {

/// Dense set of used block values. Every block value is >= 2 (a >= 1 and row
/// sums are >= 1), so [2, first_free()) being fully used lets a search skip
/// every a whose whole block would land below the frontier.
class UsedValues {
public:
    bool contains64(std::uint64_t x) const {
        if (x < bits_.size()) return bits_[x];
        return !big_.empty() && big_.contains(Nat(x));
    }

    bool contains(const Nat& v) const {
        if (v < Nat(bits_.size())) return bits_[static_cast<std::size_t>(v)];
        return big_.contains(v);
    }

    void insert(const Nat& v) {
        if (v <= Nat(kBitCap)) {
            std::size_t x = static_cast<std::size_t>(v);
            if (x >= bits_.size())
                bits_.resize(std::max<std::size_t>(x + 1, bits_.size() * 2), false);
            bits_[x] = true;
            return;
        }
        big_.insert(v);
    }

    /// Smallest value >= 2 not in the set.
    std::uint64_t first_free() const {
        std::size_t v = cursor_;
        while (v < bits_.size() && bits_[v]) ++v;
        cursor_ = v;
        while (!big_.empty() && big_.contains(Nat(v))) ++v;  // past the bitmap only
        return v;
    }

private:
    static constexpr std::size_t kBitCap = std::size_t{1} << 26;
    std::vector<bool> bits_;
    std::set<Nat> big_;
    mutable std::size_t cursor_ = 2;
};

/// Per-family search tables for one ladder rung: row sums over every H in
/// size-lex order, already shifted by |H| * b. The uint64 mirror drives the
/// hot loop whenever the whole value range fits.
struct CrSearchTables {
    const std::vector<Mask>* masks = nullptr;     // size-lex order, shared per length
    std::vector<std::vector<Nat>> sums;           // per mask: shifted row sums
    std::vector<std::vector<std::uint64_t>> sums64;
    Nat max_row = 0;
    bool fits64 = false;
};

inline CrSearchTables cr_tables(const SeqFamily& L, const std::vector<Mask>& masks,
                                const Nat& b) {
    CrSearchTables t;
    t.masks = &masks;
    t.sums.resize(masks.size());
    for (std::size_t k = 0; k < masks.size(); ++k) {
        Nat shift = b == 0 ? Nat(0) : Nat(mask_popcount(masks[k])) * b;
        for (std::size_t i = 0; i < L.size(); ++i) {
            Nat s = L.row_sum(i, masks[k]) + shift;
            t.max_row = std::max(t.max_row, s);
            t.sums[k].push_back(std::move(s));
        }
    }
    t.fits64 = t.max_row <= Nat(std::uint64_t{1} << 62);
    if (t.fits64) {
        t.sums64.resize(t.sums.size());
        for (std::size_t k = 0; k < t.sums.size(); ++k)
            for (const auto& s : t.sums[k])
                t.sums64[k].push_back(static_cast<std::uint64_t>(s));
    }
    return t;
}

/// Least (a, H) whose block is inside A and disjoint from `used`. Every a
/// with a + maxRow below the used frontier is skipped: such a block would sit
/// entirely inside the fully-used band [2, first_free).
template <typename Pred>
std::optional<CrWitness> cr_bounded_search(Pred&& member, const CrSearchTables& t,
                                           const UsedValues& used, const Nat& a_max) {
    const auto& masks = *t.masks;
    std::uint64_t first = used.first_free();

    if (t.fits64 && a_max <= Nat(std::uint64_t{1} << 62)) {
        std::uint64_t amax = static_cast<std::uint64_t>(a_max);
        std::uint64_t mrow = static_cast<std::uint64_t>(t.max_row);
        std::uint64_t a = first > mrow + 1 ? first - mrow : 1;
        for (; a <= amax; ++a) {
            for (std::size_t k = 0; k < masks.size(); ++k) {
                bool ok = true;
                for (std::uint64_t s : t.sums64[k]) {
                    std::uint64_t v = a + s;
                    if (used.contains64(v) || !member(Nat(v))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return CrWitness{Nat(a), masks[k]};
            }
        }
        return std::nullopt;
    }

    Nat a = 1;
    if (Nat(first) > t.max_row + 1) a = Nat(first) - t.max_row;
    for (; a <= a_max; ++a) {
        for (std::size_t k = 0; k < masks.size(); ++k) {
            bool ok = true;
            for (const auto& s : t.sums[k]) {
                Nat v = a + s;
                if (used.contains(v) || !member(v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return CrWitness{a, masks[k]};
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Splits a combinatorially rich set (at this scale) into `parts` block
/// unions: every enumerated family receives a block inside A, pairwise
/// disjoint from all others, plus one coverage translate of each class
/// representative per part so every part certifies every family. Collisions
/// are escaped by translating the family by doubling b and converting the
/// witness back through sl_block(L + b, (c, H)) = sl_block(L, (c + |H|b, H)).
template <typename Pred>
CrSplitResult cr_split(Pred&& member, const CrSchedule& sched, std::size_t n_max,
                       std::uint64_t entry_horizon, std::size_t parts, SplitMode mode,
                       const CrSplitOptions& opt = {}) {
    if (parts < 1) throw Error("cr_split: parts must be >= 1");

    auto base = enumerate_seq_families(sched, n_max, entry_horizon, opt.enum_cap);

    std::set<SeqFamily> rep_set;
    for (const auto& fam : base) rep_set.insert(translate_class_rep(fam));
    std::vector<SeqFamily> reps(rep_set.begin(), rep_set.end());
    std::map<SeqFamily, std::size_t> rep_index;
    for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;

    std::optional<AdNatFamily> branches;
    if (mode == SplitMode::AlmostDisjoint) branches = AdNatFamily::from_indices(parts);
    const AdNatFamily* br = branches ? &*branches : nullptr;

    // Processed stream: the base enumeration, then one coverage translate per
    // (representative, part), deduplicated.
    struct Item {
        SeqFamily family;
        bool coverage = false;
        std::size_t rep = 0;
    };
    std::vector<Item> stream;
    stream.reserve(base.size() + reps.size() * parts);
    std::set<SeqFamily> queued;
    for (auto& fam : base) {
        queued.insert(fam);
        std::size_t ri = rep_index.at(translate_class_rep(fam));
        stream.push_back({std::move(fam), false, ri});
    }
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
        for (std::size_t p = 0; p < parts; ++p) {
            Nat o = detail::coverage_offset(mode, p, parts, entry_horizon, br);
            SeqFamily extra = o == 0 ? reps[ri] : reps[ri].plus(o);
            if (queued.insert(extra).second) stream.push_back({std::move(extra), true, ri});
        }
    }

    CrSplitResult result;
    result.representatives = std::move(reps);
    result.parts.resize(parts);
    detail::UsedValues used;
    std::map<std::size_t, std::vector<Mask>> masks_by_length;

    for (auto& item : stream) {
        auto [mit, fresh] = masks_by_length.try_emplace(item.family.length());
        if (fresh) mit->second = size_lex_masks(item.family.length());
        const auto& masks = mit->second;

        Nat ladder_b = 0;
        auto w = detail::cr_bounded_search(member, detail::cr_tables(item.family, masks, 0),
                                           used, opt.a_max);
        if (!w) {
            Nat b = 1;
            for (unsigned attempt = 0; attempt < opt.retry_cap && !w; ++attempt, b <<= 1) {
                w = detail::cr_bounded_search(member, detail::cr_tables(item.family, masks, b),
                                              used, opt.a_max);
                if (w) ladder_b = b;
            }
        }
        if (!w) {
            std::string desc;
            for (const auto& f : item.family.members()) {
                desc += desc.empty() ? "(" : " (";
                for (std::size_t t = 0; t < f.size(); ++t)
                    desc += (t ? "," : "") + nat_str(f[t]);
                desc += ")";
            }
            throw ExhaustionError(
                "cr_split: witness search exhausted for family {" + desc +
                "}; the set is not certified combinatorially rich at this scale");
        }
        // Convert a ladder witness for L + b back to one for L itself.
        CrWitness witness = *w;
        if (ladder_b > 0) witness.a = w->a + Nat(mask_popcount(w->h)) * ladder_b;

        auto block = sl_block(item.family, witness);
        Nat shift = item.family.min_entry() - 1;

        CrLedgerEntry entry{std::move(item.family), witness.a, witness.h,
                            std::vector<Nat>(block.begin(), block.end()),
                            detail::buckets_of_shift(shift, mode, parts, br),
                            ladder_b, item.coverage, item.rep};
        for (const auto& v : entry.block) used.insert(v);
        for (auto p : entry.parts) result.parts[p].insert(block.begin(), block.end());
        result.ledger.push_back(std::move(entry));
    }
    return result;
}

}  // namespace largeness
