#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "largeness/ad_family.hpp"
#include "largeness/index_sets.hpp"
#include "largeness/nat.hpp"
#include "largeness/semigroup.hpp"

namespace largeness {

// ---------------------------------------------------------------------------
// FS systems: a finite generator sequence together with its full indexed
// finite-sums table. Sums are taken in increasing index order.
// ---------------------------------------------------------------------------

template <Semigroup S>
class FsSystem {
public:
    using Element = typename S::Element;

    FsSystem(const S& s, std::vector<Element> generators, std::vector<Element> sums)
        : sg_(&s), generators_(std::move(generators)), sums_(std::move(sums)) {}

    const S& semigroup() const { return *sg_; }
    std::size_t depth() const { return generators_.size(); }
    const std::vector<Element>& generators() const { return generators_; }

    /// Sum over the index set encoded by `mask` (nonempty, within depth).
    const Element& sum_of(Mask mask) const { return sums_.at(mask); }

    std::size_t table_size() const { return sums_.size() - 1; }  // 2^k - 1 entries

    ElementSet<S> values() const {
        auto out = make_element_set(*sg_);
        for (Mask m = 1; m < sums_.size(); ++m) out.insert(sums_[m]);
        return out;
    }

private:
    const S* sg_;
    std::vector<Element> generators_;
    std::vector<Element> sums_;  // indexed by mask; slot 0 unused
};

/// Builds the complete finite-sums table of a generator sequence: all
/// 2^|xs| - 1 pairs (H, sum), sum folded left-to-right over sorted H.
template <Semigroup S>
FsSystem<S> fs_set(const S& s, const std::vector<typename S::Element>& xs,
                   int depth_cap = kFsDepthCap) {
    if (xs.empty()) throw Error("fs_set: need at least one generator");
    if (static_cast<int>(xs.size()) > depth_cap)
        throw Error("fs_set: depth " + std::to_string(xs.size()) + " exceeds cap " +
                    std::to_string(depth_cap));
    std::size_t k = xs.size();
    std::vector<typename S::Element> sums(std::size_t{1} << k, xs[0]);
    for (Mask m = 1; m < (Mask{1} << k); ++m) {
        int hi = mask_max(m);
        Mask rest = m & ~(Mask{1} << (hi - 1));
        sums[m] = rest == 0 ? xs[hi - 1] : s.add(sums[rest], xs[hi - 1]);
    }
    return FsSystem<S>(s, xs, std::move(sums));
}

// ---------------------------------------------------------------------------
// IP witness search: a depth-first backtracking search for a generator
// sequence whose every finite sum satisfies the membership predicate.
// Failure is a value, not a proof that no witness exists.
// ---------------------------------------------------------------------------

template <Semigroup S, typename Pred>
std::optional<std::vector<typename S::Element>> ip_witness_search(const S& s, Pred&& member,
                                                                  int depth,
                                                                  std::size_t horizon) {
    if (depth < 1) throw Error("ip_witness_search: depth must be >= 1");
    if (depth > kFsDepthCap)
        throw Error("ip_witness_search: depth exceeds cap " + std::to_string(kFsDepthCap));
    std::size_t limit = std::min(horizon, s.universe_size());

    std::vector<typename S::Element> chosen;
    std::vector<typename S::Element> fs_values;  // FS set of `chosen`, unordered

    // Candidates are explored in enumeration order; indices strictly increase
    // along a chain, which is exhaustive for a commutative semigroup.
    auto dfs = [&](auto&& self, std::size_t from) -> bool {
        if (chosen.size() == static_cast<std::size_t>(depth)) return true;
        for (std::size_t i = from; i < limit; ++i) {
            auto x = s.element_at(i);
            if (!member(x)) continue;
            std::vector<typename S::Element> fresh{x};
            bool ok = true;
            for (const auto& z : fs_values) {
                auto v = s.add(z, x);
                if (!member(v)) {
                    ok = false;
                    break;
                }
                fresh.push_back(v);
            }
            if (!ok) continue;
            std::size_t mark = fs_values.size();
            fs_values.insert(fs_values.end(), fresh.begin(), fresh.end());
            chosen.push_back(x);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            fs_values.resize(mark);
        }
        return false;
    };

    if (dfs(dfs, 0)) return chosen;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Greedy IP splitting: round-robin over `parts` sequences drawn from a ground
// pool, each pick avoiding every current FS value and every left solution of
// a cross-part sum equation, so the finished FS sets are pairwise disjoint.
// ---------------------------------------------------------------------------

template <Semigroup S>
std::vector<FsSystem<S>> ip_split(const S& s, const std::vector<typename S::Element>& pool,
                                  std::size_t parts, std::size_t out_len) {
    if (parts < 1) throw Error("ip_split: parts must be >= 1");
    if (out_len < 1) throw Error("ip_split: out_len must be >= 1");
    if (out_len > static_cast<std::size_t>(kFsDepthCap))
        throw Error("ip_split: out_len exceeds depth cap");

    std::vector<std::vector<typename S::Element>> seqs(parts);
    std::vector<ElementSet<S>> fsv;
    for (std::size_t p = 0; p < parts; ++p) fsv.push_back(make_element_set(s));
    std::vector<bool> used(pool.size(), false);

    for (std::size_t round = 1; round <= out_len; ++round) {
        for (std::size_t p = 0; p < parts; ++p) {
            auto avoid = make_element_set(s);
            bool truncated = false;
            for (std::size_t q = 0; q < parts; ++q)
                avoid.insert(fsv[q].begin(), fsv[q].end());
            for (std::size_t q = 0; q < parts && !truncated; ++q) {
                if (q == p) continue;
                for (const auto& z2 : fsv[p]) {
                    for (const auto& z1 : fsv[q]) {
                        auto r = s.solve_left(z2, z1);
                        if (r.truncated) {
                            truncated = true;
                            break;
                        }
                        avoid.insert(r.values.begin(), r.values.end());
                    }
                    if (truncated) break;
                }
            }
            if (truncated)
                throw ExhaustionError(
                    "ip_split: truncated left solution set while building the avoidance set "
                    "at part " + std::to_string(p + 1) + ", round " + std::to_string(round));

            bool picked = false;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (used[i] || avoid.contains(pool[i])) continue;
                used[i] = true;
                const auto& x = pool[i];
                std::vector<typename S::Element> fresh{x};
                for (const auto& z : fsv[p]) fresh.push_back(s.add(z, x));
                fsv[p].insert(fresh.begin(), fresh.end());
                seqs[p].push_back(x);
                picked = true;
                break;
            }
            if (!picked)
                throw ExhaustionError("ip_split: pool exhausted at part " + std::to_string(p + 1) +
                                      " of " + std::to_string(parts) + ", round " +
                                      std::to_string(round) + " of " + std::to_string(out_len));
        }
    }

    std::vector<FsSystem<S>> out;
    out.reserve(parts);
    for (std::size_t p = 0; p < parts; ++p) out.push_back(fs_set(s, seqs[p]));
    return out;
}

// ---------------------------------------------------------------------------
// Sum subsystems with finiteness / uniqueness of finite sums.
// ---------------------------------------------------------------------------

template <Semigroup S>
struct SumSubsystem {
    std::vector<typename S::Element> source;       // the ambient xs
    std::vector<std::vector<int>> blocks;          // H_1..H_m, 1-based, max H_i < min H_{i+1}
    std::vector<typename S::Element> derived;      // y_i = sum over H_i
};

namespace detail {

// Least admissible tail sum for the FFS greedy over (N, +): a subset-sum
// reachability bitmap over values, which stays polynomial on degenerate pools
// (e.g. all-ones) where mask enumeration blows up.
struct NatTailPick {
    enum class Status { Found, NoneExists, CapExceeded };
    Status status = Status::NoneExists;
    Nat value;
    std::vector<int> indices;  // 0-based positions within the tail
};

inline NatTailPick least_tail_sum_nat(const std::vector<Nat>& tail,
                                      const std::set<Nat>& avoid) {
    constexpr std::uint64_t kValueCap = 1u << 22;
    Nat max_tail = 0;
    for (const auto& v : tail) max_tail = std::max(max_tail, v);
    Nat bound = max_tail + 1;
    // The least admissible sum is at most max(avoid) + max(tail): from any
    // reachable value <= max(avoid), one more element escapes the avoid set.
    if (!avoid.empty()) bound = *avoid.rbegin() + max_tail + 1;
    if (bound > kValueCap) return {NatTailPick::Status::CapExceeded, 0, {}};
    std::size_t cap = static_cast<std::size_t>(bound) + 1;
    std::size_t words = (cap + 63) / 64;

    using Bits = std::vector<std::uint64_t>;
    auto shift_or = [&](const Bits& src, std::size_t sh, Bits& dst) {
        std::size_t wsh = sh / 64, bsh = sh % 64;
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t v = 0;
            if (w >= wsh) {
                v = src[w - wsh] << bsh;
                if (bsh != 0 && w > wsh) v |= src[w - wsh - 1] >> (64 - bsh);
            }
            dst[w] |= v;
        }
    };
    auto test = [&](const Bits& b, std::uint64_t v) {
        return v < cap && (b[v / 64] >> (v % 64) & 1u) != 0;
    };

    // prefix[i] = sums reachable from subsets of tail[0..i), empty sum included.
    std::vector<Bits> prefix(tail.size() + 1, Bits(words, 0));
    prefix[0][0] = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        std::uint64_t step = static_cast<std::uint64_t>(tail[i]);
        prefix[i + 1] = prefix[i];
        if (step < cap) shift_or(prefix[i], static_cast<std::size_t>(step), prefix[i + 1]);
    }

    std::uint64_t best = 0;
    bool found = false;
    for (std::uint64_t v = 1; v < cap; ++v) {
        if (test(prefix[tail.size()], v) && !avoid.contains(Nat(v))) {
            best = v;
            found = true;
            break;
        }
    }
    if (!found) return {NatTailPick::Status::NoneExists, 0, {}};

    // The block uses the shortest possible prefix (smallest max index), so
    // later steps keep as much tail material as possible.
    std::size_t plen = 1;
    while (!test(prefix[plen], best)) ++plen;
    std::size_t last = plen - 1;  // forced: best is unreachable without it

    // Earliest-index-greedy over the rest; reach[k] = sums from tail[k..last).
    std::vector<Bits> reach(plen, Bits(words, 0));
    reach[last][0] = 1;
    for (std::size_t k = last; k-- > 0;) {
        std::uint64_t step = static_cast<std::uint64_t>(tail[k]);
        reach[k] = reach[k + 1];
        if (step < cap) shift_or(reach[k + 1], static_cast<std::size_t>(step), reach[k]);
    }

    NatTailPick pick{NatTailPick::Status::Found, Nat(best), {}};
    std::uint64_t rem = best - static_cast<std::uint64_t>(tail[last]);
    for (std::size_t k = 0; k < last && rem > 0; ++k) {
        std::uint64_t v = static_cast<std::uint64_t>(tail[k]);
        if (v <= rem && test(reach[k + 1], rem - v)) {
            pick.indices.push_back(static_cast<int>(k));
            rem -= v;
        }
    }
    if (rem != 0) throw Error("internal: tail sum reconstruction failed");
    pick.indices.push_back(static_cast<int>(last));
    return pick;
}

// Generic fallback: exhaustive mask enumeration over the tail, minimum by the
// semigroup's canonical order, ties by smallest max index then earliest block.
template <Semigroup S>
std::optional<std::pair<typename S::Element, std::vector<int>>> least_tail_sum_generic(
    const S& s, const std::vector<typename S::Element>& tail, const ElementSet<S>& avoid) {
    if (tail.size() > 20) throw Error("ffs tail too long for exhaustive search");
    std::vector<typename S::Element> sums(std::size_t{1} << tail.size(), tail[0]);
    std::optional<Mask> best;
    auto block_before = [](Mask a, Mask b) {
        if (mask_max(a) != mask_max(b)) return mask_max(a) < mask_max(b);
        auto ia = mask_indices(a), ib = mask_indices(b);
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    };
    for (Mask m = 1; m < (Mask{1} << tail.size()); ++m) {
        int hi = mask_max(m);
        Mask rest = m & ~(Mask{1} << (hi - 1));
        sums[m] = rest == 0 ? tail[hi - 1] : s.add(sums[rest], tail[hi - 1]);
        if (avoid.contains(sums[m])) continue;
        if (!best || s.less(sums[m], sums[*best]) ||
            (s.eq(sums[m], sums[*best]) && block_before(m, *best)))
            best = m;
    }
    if (!best) return std::nullopt;
    std::vector<int> idx;
    for (int i : mask_indices(*best)) idx.push_back(i - 1);
    return std::make_pair(sums[*best], idx);
}

// One greedy FFS step: the least finite sum of the tail outside
// avoid = Y union FS(so far), with its block.
template <Semigroup S>
std::optional<std::pair<typename S::Element, std::vector<int>>> least_tail_sum(
    const S& s, const std::vector<typename S::Element>& tail, const ElementSet<S>& avoid) {
    if constexpr (std::is_same_v<S, NatAdd>) {
        std::set<Nat> av(avoid.begin(), avoid.end());
        auto pick = least_tail_sum_nat(tail, av);
        switch (pick.status) {
            case NatTailPick::Status::Found:
                return std::make_pair(pick.value, pick.indices);
            case NatTailPick::Status::NoneExists:
                return std::nullopt;
            case NatTailPick::Status::CapExceeded:
                if (tail.size() <= 20) return least_tail_sum_generic(s, tail, avoid);
                throw Error("ffs_subsystem: tail values exceed the desk-scale search cap");
        }
        return std::nullopt;
    } else {
        return least_tail_sum_generic(s, tail, avoid);
    }
}

template <Semigroup S>
SumSubsystem<S> ffs_greedy(const S& s, const std::vector<typename S::Element>& xs,
                           std::size_t out_len, bool allow_short) {
    if (out_len < 1) throw Error("ffs_subsystem: out_len must be >= 1");
    if (xs.empty()) throw ExhaustionError("ffs_subsystem: empty generator sequence");

    SumSubsystem<S> sub;
    sub.source = xs;
    sub.blocks.push_back({1});
    sub.derived.push_back(xs[0]);

    auto fsv = make_element_set(s);
    fsv.insert(xs[0]);

    while (sub.derived.size() < out_len) {
        // Y = { y : exists z1, z2 in FS(so far) with z1 + y = z2 }
        auto avoid = fsv;
        for (const auto& z1 : fsv) {
            for (const auto& z2 : fsv) {
                auto r = s.solve_left(z1, z2);
                if (r.truncated)
                    throw Error("ffs_subsystem: left solution set of " + s.to_string(z1) +
                                " against " + s.to_string(z2) +
                                " exceeds the horizon; semigroup is not weakly left "
                                "cancellative here");
                avoid.insert(r.values.begin(), r.values.end());
            }
        }

        int m = sub.blocks.back().back();  // max index used so far
        if (static_cast<std::size_t>(m) >= xs.size()) {
            if (allow_short) break;
            throw ExhaustionError("ffs_subsystem: tail exhausted after " +
                                  std::to_string(sub.derived.size()) + " of " +
                                  std::to_string(out_len) + " blocks");
        }
        std::vector<typename S::Element> tail(xs.begin() + m, xs.end());
        auto pick = detail::least_tail_sum(s, tail, avoid);
        if (!pick) {
            if (allow_short) break;
            throw ExhaustionError("ffs_subsystem: no admissible tail sum after " +
                                  std::to_string(sub.derived.size()) + " of " +
                                  std::to_string(out_len) + " blocks");
        }
        std::vector<int> block;
        for (int t : pick->second) block.push_back(m + 1 + t);
        const auto& y = pick->first;
        std::vector<typename S::Element> fresh{y};
        for (const auto& z : fsv) fresh.push_back(s.add(z, y));
        fsv.insert(fresh.begin(), fresh.end());
        sub.blocks.push_back(std::move(block));
        sub.derived.push_back(y);
    }
    return sub;
}

}  // namespace detail

/// Greedy sum subsystem with finiteness of finite sums: at each step the
/// avoidance set is every left solution of z1 + y = z2 over current finite
/// sums, and the pick is the least tail finite sum outside it.
template <Semigroup S>
SumSubsystem<S> ffs_subsystem(const S& s, const std::vector<typename S::Element>& xs,
                              std::size_t out_len) {
    return detail::ffs_greedy(s, xs, out_len, false);
}

struct FfsViolation {
    Mask h1 = 0, h2 = 0;  // distinct maxima, equal sums
};

/// Exhaustive finiteness-of-finite-sums check: looks for index sets with
/// different maxima and equal sums; returns the least violating pair in
/// (mask1, mask2) numeric order, or nullopt when the sequence passes.
template <Semigroup S>
std::optional<FfsViolation> check_ffs(const S& s, const std::vector<typename S::Element>& ys) {
    if (ys.empty()) return std::nullopt;
    if (ys.size() > static_cast<std::size_t>(kFsDepthCap))
        throw Error("check_ffs: sequence exceeds depth cap");
    auto sys = fs_set(s, ys);

    std::map<typename S::Element, std::vector<Mask>, ElementLess<S>> by_value{ElementLess<S>{&s}};
    for (Mask m = 1; m < (Mask{1} << ys.size()); ++m) by_value[sys.sum_of(m)].push_back(m);

    std::optional<FfsViolation> best;
    for (const auto& [value, masks] : by_value) {
        for (std::size_t i = 0; i < masks.size(); ++i) {
            for (std::size_t j = i + 1; j < masks.size(); ++j) {
                if (mask_max(masks[i]) == mask_max(masks[j])) continue;
                if (!best || masks[i] < best->h1 ||
                    (masks[i] == best->h1 && masks[j] < best->h2))
                    best = FfsViolation{masks[i], masks[j]};
                break;  // later j only increase the pair for this i
            }
        }
    }
    return best;
}

struct UfsError : VerificationError {
    Mask h1, h2;
    UfsError(const std::string& what, Mask a, Mask b) : VerificationError(what), h1(a), h2(b) {}
};

/// Same construction as ffs_subsystem, then a post-hoc exhaustive check that
/// all 2^out_len - 1 sums are pairwise distinct. The construction only
/// guarantees uniqueness when the semigroup is right cancellative and
/// idempotent-free (as (N, +) is); that hypothesis is documented, not checked,
/// and its failure surfaces as the verification error.
template <Semigroup S>
SumSubsystem<S> ufs_subsystem(const S& s, const std::vector<typename S::Element>& xs,
                              std::size_t out_len) {
    auto sub = detail::ffs_greedy(s, xs, out_len, false);
    auto sys = fs_set(s, sub.derived);
    std::map<typename S::Element, Mask, ElementLess<S>> seen{ElementLess<S>{&s}};
    for (Mask m = 1; m < (Mask{1} << sub.derived.size()); ++m) {
        auto [it, inserted] = seen.emplace(sys.sum_of(m), m);
        if (!inserted)
            throw UfsError("ufs_subsystem: sums over index sets " + mask_to_string(it->second) +
                               " and " + mask_to_string(m) +
                               " coincide; semigroup fails the uniqueness hypotheses",
                           it->second, m);
    }
    return sub;
}

// ---------------------------------------------------------------------------
// Almost disjoint IP families: an FFS subsystem lifted through almost
// disjoint index sets. Any sum shared between two members forces a shared
// maximal index, so truncated intersections stay bounded by the number of
// shared indices.
// ---------------------------------------------------------------------------

template <Semigroup S>
struct IpAdFamily {
    SumSubsystem<S> subsystem;                    // ys, built to maximal length
    std::vector<std::vector<int>> index_sets;     // per branch: selected ys indices
    std::vector<std::vector<typename S::Element>> subsequences;
    std::vector<FsSystem<S>> fs_truncations;
};

template <Semigroup S>
IpAdFamily<S> ip_ad_family(const S& s, const std::vector<typename S::Element>& xs,
                           std::size_t branch_count, std::size_t truncation) {
    if (branch_count < 1) throw Error("ip_ad_family: need at least one branch");
    if (truncation < 1 || truncation > static_cast<std::size_t>(kFsDepthCap))
        throw Error("ip_ad_family: truncation out of range");

    IpAdFamily<S> fam;
    fam.subsystem = detail::ffs_greedy(s, xs, xs.size(), true);
    std::size_t len = fam.subsystem.derived.size();

    AdNatFamily branches = AdNatFamily::from_indices(branch_count);
    for (std::size_t b = 0; b < branch_count; ++b) {
        std::vector<int> idx;
        for (std::size_t n = 1; n <= truncation; ++n) {
            Nat code = branches.member(b, n);
            if (code > Nat(len)) break;  // codes are strictly increasing
            idx.push_back(static_cast<int>(code));
        }
        if (idx.empty())
            throw ExhaustionError("ip_ad_family: branch " + std::to_string(b) +
                                  " selects no indices within subsystem length " +
                                  std::to_string(len));
        std::vector<typename S::Element> sub;
        for (int i : idx) sub.push_back(fam.subsystem.derived[static_cast<std::size_t>(i - 1)]);
        fam.index_sets.push_back(std::move(idx));
        fam.fs_truncations.push_back(fs_set(s, sub));
        fam.subsequences.push_back(std::move(sub));
    }
    return fam;
}

}  // namespace largeness
