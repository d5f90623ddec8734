#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "largeness/index_sets.hpp"
#include "largeness/nat.hpp"
#include "largeness/poly.hpp"
#include "largeness/seq_family.hpp"

namespace largeness {

/// Finite truncations of a set of sequences over N; same invariants as the
/// combinatorial sequence families (common length, sorted, deduplicated).
using SeqList = SeqFamily;

struct JpWitness {
    Nat a;
    Mask h = 0;
};

/// S_{R,L}(a, H) = { a + f(sum_{t in H} g(t)) : f in R, g in L }.
inline std::set<Nat> srl_block(const PolyFamily& R, const SeqList& L, const JpWitness& w) {
    std::set<Nat> out;
    for (std::size_t i = 0; i < L.size(); ++i) {
        Nat sum = L.row_sum(i, w.h);
        for (const auto& f : R.members()) out.insert(w.a + f.eval(sum));
    }
    return out;
}

/// Least (a, H) with min H > min_h and the block inside the set; a ascending,
/// H in size-then-lex order, sums capped by sum_max for every member of L.
template <typename Pred>
std::optional<JpWitness> jp_witness_search(Pred&& member, const PolyFamily& R, const SeqList& L,
                                           std::size_t min_h, const Nat& a_max,
                                           const Nat& sum_max) {
    if (min_h >= L.length())
        throw Error("jp_witness_search: minH must leave room inside the truncation");
    std::vector<Mask> masks;
    std::vector<std::vector<Nat>> images;  // per admissible mask: all f(sum) values
    for (Mask h : size_lex_masks(L.length())) {
        if (static_cast<std::size_t>(mask_min(h)) <= min_h) continue;
        bool within = true;
        std::vector<Nat> vals;
        for (std::size_t i = 0; i < L.size() && within; ++i) {
            Nat sum = L.row_sum(i, h);
            if (sum > sum_max) {
                within = false;
                break;
            }
            for (const auto& f : R.members()) vals.push_back(f.eval(sum));
        }
        if (!within) continue;
        masks.push_back(h);
        images.push_back(std::move(vals));
    }

    for (Nat a = 1; a <= a_max; ++a) {
        for (std::size_t k = 0; k < masks.size(); ++k) {
            bool ok = true;
            for (const auto& v : images[k]) {
                if (!member(a + v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return JpWitness{a, masks[k]};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Increasing sum subsystems: strictly separated blocks whose per-row sums
// strictly increase, built greedily from contiguous index runs.
// ---------------------------------------------------------------------------

struct IncreasingSubsystem {
    std::vector<std::vector<int>> blocks;  // K_1..K_m, 1-based, max K_j < min K_{j+1}
    std::vector<std::vector<Nat>> derived_members;  // y_{i,j} = sum over K_j of row i

    SeqList derived() const { return SeqList(derived_members); }
};

inline IncreasingSubsystem increasing_subsystem(const SeqList& L, std::size_t out_len) {
    if (out_len < 1) throw Error("increasing_subsystem: out_len must be >= 1");
    IncreasingSubsystem out;
    out.derived_members.resize(L.size());

    std::vector<Nat> prev(L.size(), Nat(0));  // row sums of the previous block
    int next = 1;
    bool first = true;
    while (out.blocks.size() < out_len) {
        std::vector<int> block;
        std::vector<Nat> sums(L.size(), Nat(0));
        bool done = false;
        for (int t = next; static_cast<std::size_t>(t) <= L.length(); ++t) {
            block.push_back(t);
            done = true;
            for (std::size_t i = 0; i < L.size(); ++i) {
                sums[i] += L.members()[i][static_cast<std::size_t>(t - 1)];
                if (!first && sums[i] <= prev[i]) done = false;
            }
            if (done) break;
        }
        if (!done || block.empty())
            throw ExhaustionError("increasing_subsystem: truncation exhausted after " +
                                  std::to_string(out.blocks.size()) + " of " +
                                  std::to_string(out_len) + " blocks");
        next = block.back() + 1;
        for (std::size_t i = 0; i < L.size(); ++i) out.derived_members[i].push_back(sums[i]);
        prev = std::move(sums);
        out.blocks.push_back(std::move(block));
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite-deletion robustness: witnesses for A with escalating min H have
// blocks that eventually clear any fixed finite set B.
// ---------------------------------------------------------------------------

struct JpRobustTrial {
    std::size_t n = 0;  // trial index; the witness satisfies min H > n
    Nat a;
    Mask h = 0;
    std::vector<Nat> block;
    std::vector<Nat> hits;      // block values inside B
    std::vector<Nat> row_sums;  // sum over H per member of L'
};

struct JpRobustReport {
    IncreasingSubsystem subsystem;
    std::vector<JpRobustTrial> trials;
    std::size_t blocks_meeting_b = 0;
};

template <typename Pred>
JpRobustReport jp_minus_finite_demo(Pred&& member, const std::set<Nat>& B, const PolyFamily& R,
                                    const SeqList& L, std::size_t trials, const Nat& a_max,
                                    const Nat& sum_max) {
    if (trials < 1) throw Error("jp_minus_finite_demo: trials must be >= 1");
    JpRobustReport report;
    report.subsystem = increasing_subsystem(L, trials + 1);
    SeqList derived = report.subsystem.derived();

    for (std::size_t n = 1; n <= trials; ++n) {
        auto w = jp_witness_search(member, R, derived, n, a_max, sum_max);
        if (!w)
            throw ExhaustionError("jp_minus_finite_demo: witness search failed at trial " +
                                  std::to_string(n));
        JpRobustTrial trial;
        trial.n = n;
        trial.a = w->a;
        trial.h = w->h;
        auto block = srl_block(R, derived, *w);
        trial.block.assign(block.begin(), block.end());
        for (const auto& v : trial.block)
            if (B.contains(v)) trial.hits.push_back(v);
        for (std::size_t i = 0; i < derived.size(); ++i)
            trial.row_sums.push_back(derived.row_sum(i, w->h));
        if (!trial.hits.empty()) ++report.blocks_meeting_b;
        report.trials.push_back(std::move(trial));
    }
    return report;
}

// ---------------------------------------------------------------------------
// PP-rich blocks and witnesses.
// ---------------------------------------------------------------------------

/// S_R(a, x) = { a + f(x) : f in R }.
inline std::set<Nat> sr_block(const PolyFamily& R, const Nat& a, const Nat& x) {
    std::set<Nat> out;
    for (const auto& f : R.members()) out.insert(a + f.eval(x));
    return out;
}

/// Least (a, x) in lexicographic order with S_R(a, x) inside the set.
template <typename Pred>
std::optional<std::pair<Nat, Nat>> pp_witness(Pred&& member, const PolyFamily& R,
                                              const Nat& a_max, const Nat& x_max) {
    std::vector<std::vector<Nat>> images;  // per x: f(x) for every f
    for (Nat x = 1; x <= x_max; ++x) {
        std::vector<Nat> vals;
        for (const auto& f : R.members()) vals.push_back(f.eval(x));
        images.push_back(std::move(vals));
    }
    for (Nat a = 1; a <= a_max; ++a) {
        for (std::size_t xi = 0; xi < images.size(); ++xi) {
            bool ok = true;
            for (const auto& v : images[xi]) {
                if (!member(a + v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(a, Nat(xi + 1));
        }
    }
    return std::nullopt;
}

struct AnchoredPpWitness {
    Nat b;        // b in A with S_R(b, x) inside A
    Nat x;
    Nat inner_a;  // the unanchored witness for f + R that produced b
};

/// Anchored witness via the f + R reduction: search the family
/// { f + h : h in R } together with f itself, then b = a + f(x) lands in A
/// and anchors the block.
template <typename Pred>
std::optional<AnchoredPpWitness> pp_witness_anchored(Pred&& member, const PolyFamily& R,
                                                     const Nat& a_max, const Nat& x_max) {
    const IntPoly& f = R.least();
    std::vector<IntPoly> shifted{f};
    for (const auto& h : R.members()) shifted.push_back(f.plus(h));
    PolyFamily lifted(std::move(shifted));

    auto w = pp_witness(member, lifted, a_max, x_max);
    if (!w) return std::nullopt;
    return AnchoredPpWitness{w->first + f.eval(w->second), w->second, w->first};
}

// ---------------------------------------------------------------------------
// Superset-cofinal bucket assignment and the PP-rich splitter.
// ---------------------------------------------------------------------------

struct BucketAssignment {
    std::vector<std::vector<std::size_t>> buckets;     // candidate indices per bucket
    std::vector<std::optional<std::size_t>> bucket_of;  // per candidate index
};

/// Dovetails over (demand family, bucket) pairs, assigning the least-index
/// unassigned superset whenever the bucket does not already contain one.
/// Buckets end up pairwise disjoint, and every demand family has a superset
/// in every bucket. Demand is the prefix candidates[0..demand_count).
inline BucketAssignment superset_cofinal_buckets(const std::vector<PolyFamily>& candidates,
                                                 std::size_t buckets,
                                                 std::size_t demand_count) {
    if (buckets < 1) throw Error("superset_cofinal_buckets: buckets must be >= 1");
    if (demand_count > candidates.size())
        throw Error("superset_cofinal_buckets: demand exceeds the candidate stream");

    BucketAssignment out;
    out.buckets.resize(buckets);
    out.bucket_of.resize(candidates.size());

    for (std::size_t j = 0; j < demand_count; ++j) {
        for (std::size_t p = 0; p < buckets; ++p) {
            bool covered = false;
            for (auto idx : out.buckets[p]) {
                if (candidates[idx].is_superset_of(candidates[j])) {
                    covered = true;
                    break;
                }
            }
            if (covered) continue;
            bool assigned = false;
            for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
                if (out.bucket_of[idx].has_value()) continue;
                if (!candidates[idx].is_superset_of(candidates[j])) continue;
                out.bucket_of[idx] = p;
                out.buckets[p].push_back(idx);
                assigned = true;
                break;
            }
            if (!assigned)
                throw ExhaustionError(
                    "superset_cofinal_buckets: no unassigned superset of " +
                    candidates[j].to_string() + " left for bucket " + std::to_string(p) +
                    "; enumeration horizon too small");
        }
    }
    return out;
}

struct PpLedgerEntry {
    PolyFamily family;
    Nat a;
    Nat x;
    std::vector<Nat> block;
    std::optional<std::size_t> part;
};

struct PpSplitResult {
    std::vector<std::set<Nat>> parts;
    std::vector<PpLedgerEntry> ledger;
    std::size_t demand_count = 0;  // ledger[0..demand_count) is the base enumeration
};

struct PpSplitOptions {
    std::size_t degree_max = 2;
    std::uint64_t coeff_max = 2;
    std::size_t size_max = 2;
    Nat a_max = 64;
    Nat x_max = 64;
    unsigned escalation_cap = 8;  // bound doublings on collision
    std::size_t enum_cap = 1u << 20;
};

/// Greedy PP-rich splitting: every enumerated family receives an S_R(a, x)
/// block inside A and disjoint from all earlier blocks (escalating the search
/// bounds on collision); parts are the block unions over a superset-cofinal
/// bucket assignment, so each part certifies every base family through
/// S_R(a, x) <= S_G(a, x) for the assigned superset G.
template <typename Pred>
PpSplitResult pp_split(Pred&& member, std::size_t parts, const PpSplitOptions& opt = {}) {
    if (parts < 1) throw Error("pp_split: parts must be >= 1");

    auto demand = enumerate_poly_families(opt.degree_max, opt.coeff_max, opt.size_max,
                                          opt.enum_cap);
    std::vector<PolyFamily> stream = demand;
    if (parts >= 2) {
        // Distinct per-part supersets of a maximal-size family require one
        // extra size class in the candidate stream.
        for (auto& fam : enumerate_poly_families(opt.degree_max, opt.coeff_max,
                                                 opt.size_max + 1, opt.enum_cap))
            if (fam.size() == opt.size_max + 1) stream.push_back(std::move(fam));
    }

    PpSplitResult result;
    result.demand_count = demand.size();

    std::set<Nat> used;
    for (const auto& R : stream) {
        std::optional<std::pair<Nat, Nat>> w;
        Nat a_bound = opt.a_max, x_bound = opt.x_max;
        for (unsigned attempt = 0; attempt <= opt.escalation_cap && !w; ++attempt) {
            w = pp_witness(
                [&](const Nat& v) { return !used.contains(v) && member(v); }, R, a_bound,
                x_bound);
            if (!w) {
                a_bound <<= 1;
                x_bound <<= 1;
            }
        }
        if (!w)
            throw ExhaustionError("pp_split: witness search exhausted for " + R.to_string() +
                                  "; the set is not certified PP-rich at this scale");
        auto block = sr_block(R, w->first, w->second);
        for (const auto& v : block) used.insert(v);
        result.ledger.push_back(PpLedgerEntry{
            R, w->first, w->second, std::vector<Nat>(block.begin(), block.end()), std::nullopt});
    }

    auto assignment = superset_cofinal_buckets(stream, parts, demand.size());
    result.parts.resize(parts);
    for (std::size_t idx = 0; idx < stream.size(); ++idx) {
        if (!assignment.bucket_of[idx]) continue;
        std::size_t p = *assignment.bucket_of[idx];
        result.ledger[idx].part = p;
        result.parts[p].insert(result.ledger[idx].block.begin(), result.ledger[idx].block.end());
    }
    return result;
}

// ---------------------------------------------------------------------------
// Statement-level polynomial van der Waerden search and the piecewise
// syndeticity heuristic that gates it.
// ---------------------------------------------------------------------------

/// Least (a, H) with a + f(sum_{n in H} y_n) in the set for every f in R.
template <typename Pred>
std::optional<std::pair<Nat, Mask>> pvdw_search(Pred&& member, const PolyFamily& R,
                                                const std::vector<Nat>& ys, const Nat& a_max) {
    if (ys.empty()) throw Error("pvdw_search: need at least one sequence element");
    if (ys.size() > 20) throw Error("pvdw_search: sequence too long for exhaustive H search");
    auto masks = size_lex_masks(ys.size());
    std::vector<std::vector<Nat>> images(masks.size());
    for (std::size_t k = 0; k < masks.size(); ++k) {
        Nat sum = 0;
        for (int t : mask_indices(masks[k])) sum += ys[static_cast<std::size_t>(t - 1)];
        for (const auto& f : R.members()) images[k].push_back(f.eval(sum));
    }
    for (Nat a = 1; a <= a_max; ++a) {
        for (std::size_t k = 0; k < masks.size(); ++k) {
            bool ok = true;
            for (const auto& v : images[k]) {
                if (!member(a + v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(a, masks[k]);
        }
    }
    return std::nullopt;
}

struct PwsResult {
    bool pass = false;
    Nat window_start;  // first member of the qualifying run (when pass)
    Nat window_end;    // last member scanned in the run
};

/// Desk-scale piecewise-syndeticity heuristic: looks for a run of members
/// with consecutive gaps <= gap_bound spanning at least window_len within the
/// horizon. Advisory only.
template <typename Pred>
PwsResult pws_check(Pred&& member, const Nat& gap_bound, const Nat& window_len,
                    std::uint64_t horizon) {
    if (gap_bound < 1 || window_len < 1) throw Error("pws_check: bounds must be >= 1");
    PwsResult out;
    std::optional<Nat> run_start, prev;
    for (std::uint64_t i = 1; i <= horizon; ++i) {
        Nat v(i);
        if (!member(v)) continue;
        if (prev && v - *prev > gap_bound) run_start.reset();
        if (!run_start) run_start = v;
        prev = v;
        if (v - *run_start >= window_len) {
            out.pass = true;
            out.window_start = *run_start;
            out.window_end = v;
            return out;
        }
    }
    return out;
}

}  // namespace largeness
