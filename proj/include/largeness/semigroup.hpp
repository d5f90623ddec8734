#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "largeness/nat.hpp"

namespace largeness {

/// Result of a left-solution-set query { x : a + x = b }. `truncated` is set
/// exactly when the instance's case analysis shows the true solution set
/// exceeds the enumeration horizon; callers must then treat the set as
/// unusable for avoidance arguments.
template <typename E>
struct SolveResult {
    std::vector<E> values;
    bool truncated = false;
};

/// An executable commutative semigroup: total operation, decidable equality,
/// a deterministic canonical order, an indexed finite enumeration, and a
/// left-solution-set solver. Handles are immutable after construction.
template <typename S>
concept Semigroup = requires(const S& s, const typename S::Element& a,
                             const typename S::Element& b, std::size_t i) {
    { s.name() } -> std::convertible_to<std::string>;
    { s.add(a, b) } -> std::same_as<typename S::Element>;
    { s.eq(a, b) } -> std::same_as<bool>;
    { s.less(a, b) } -> std::same_as<bool>;
    { s.universe_size() } -> std::convertible_to<std::size_t>;
    { s.element_at(i) } -> std::same_as<typename S::Element>;
    { s.solve_left(a, b) } -> std::same_as<SolveResult<typename S::Element>>;
    { s.to_string(a) } -> std::convertible_to<std::string>;
};

/// Comparator over a semigroup's canonical element order, usable with std::set.
template <typename S>
struct ElementLess {
    const S* sg = nullptr;
    bool operator()(const typename S::Element& a, const typename S::Element& b) const {
        return sg->less(a, b);
    }
};

template <typename S>
using ElementSet = std::set<typename S::Element, ElementLess<S>>;

template <typename S>
ElementSet<S> make_element_set(const S& s) {
    return ElementSet<S>(ElementLess<S>{&s});
}

// ---------------------------------------------------------------------------
// (N, +), positive integers under addition. Cancellative, no idempotent.
// ---------------------------------------------------------------------------

class NatAdd {
public:
    using Element = Nat;

    explicit NatAdd(std::size_t horizon = 1u << 16) : horizon_(horizon) {}

    std::string name() const { return "nat"; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }
    std::size_t universe_size() const { return horizon_; }
    Element element_at(std::size_t i) const { return Nat(i) + 1; }

    // At most one solution; the truncated flag only fires when b - a lies
    // beyond the enumeration horizon.
    SolveResult<Element> solve_left(const Element& a, const Element& b) const {
        SolveResult<Element> r;
        if (b > a) {
            Nat x = b - a;
            if (x <= Nat(horizon_))
                r.values.push_back(x);
            else
                r.truncated = true;
        }
        return r;
    }

    std::string to_string(const Element& e) const { return nat_str(e); }

private:
    std::size_t horizon_;
};

// ---------------------------------------------------------------------------
// The level/index semigroup: countably many disjoint levels, each a copy of
// N indexed alpha_1, alpha_2, ...; higher level absorbs, equal levels add
// indices. Commutative, associative, idempotent-free, and very weakly
// cancellative but not weakly cancellative (diagonal solution sets are
// infinite). The operation is total on all representable elements; the level
// and index bounds cap enumeration only.
// ---------------------------------------------------------------------------

struct ExElement {
    std::uint32_t level = 0;
    std::uint64_t idx = 1;  // >= 1; unbounded in principle

    friend bool operator==(const ExElement&, const ExElement&) = default;
    friend auto operator<=>(const ExElement& a, const ExElement& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        return a.idx <=> b.idx;
    }
};

class ExSemigroup {
public:
    using Element = ExElement;

    ExSemigroup(std::uint32_t level_bound, std::uint64_t idx_bound)
        : level_bound_(level_bound), idx_bound_(idx_bound) {
        if (level_bound == 0 || idx_bound == 0)
            throw Error("ex semigroup bounds must be positive");
    }

    std::string name() const {
        return "ex(" + std::to_string(level_bound_) + "," + std::to_string(idx_bound_) + ")";
    }

    Element add(const Element& a, const Element& b) const {
        if (a.level < b.level) return b;
        if (b.level < a.level) return a;
        if (a.idx > std::numeric_limits<std::uint64_t>::max() - b.idx)
            throw Error("ex semigroup index overflow: " + to_string(a) + " + " + to_string(b));
        return Element{a.level, a.idx + b.idx};
    }

    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }

    std::size_t universe_size() const {
        return static_cast<std::size_t>(level_bound_) * static_cast<std::size_t>(idx_bound_);
    }

    // Lexicographic (level, idx) enumeration.
    Element element_at(std::size_t i) const {
        return Element{static_cast<std::uint32_t>(i / idx_bound_), i % idx_bound_ + 1};
    }

    SolveResult<Element> solve_left(const Element& a, const Element& b) const {
        SolveResult<Element> r;
        auto push_within_horizon = [&](Element e) {
            if (e.level < level_bound_ && e.idx <= idx_bound_)
                r.values.push_back(e);
            else
                r.truncated = true;
        };
        if (a.level < b.level) {
            push_within_horizon(b);
        } else if (a.level == b.level) {
            if (a.idx < b.idx) {
                push_within_horizon(Element{a.level, b.idx - a.idx});
            } else if (a.idx == b.idx && a.level > 0) {
                // a + x = a holds for every x of strictly lower level; the true
                // set is infinite, so the horizon always cuts it.
                r.truncated = true;
                for (std::uint32_t lv = 0; lv < a.level && lv < level_bound_; ++lv)
                    for (std::uint64_t ix = 1; ix <= idx_bound_; ++ix)
                        r.values.push_back(Element{lv, ix});
            }
        }
        return r;
    }

    std::string to_string(const Element& e) const {
        return std::to_string(e.level) + "." + std::to_string(e.idx);
    }

    std::uint32_t level_bound() const { return level_bound_; }
    std::uint64_t idx_bound() const { return idx_bound_; }

private:
    std::uint32_t level_bound_;
    std::uint64_t idx_bound_;
};

// ---------------------------------------------------------------------------
// Test fixtures. MaxFixture is a genuine commutative semigroup, rich in
// idempotents (max(x,x) = x). LeftProjFixture is deliberately *not*
// commutative (x * y = x) and exists to exercise law-violation reporting.
// ---------------------------------------------------------------------------

class MaxFixture {
public:
    using Element = Nat;

    explicit MaxFixture(std::size_t n) : n_(n) {
        if (n == 0) throw Error("max fixture needs a nonempty universe");
    }

    std::string name() const { return "max(" + std::to_string(n_) + ")"; }
    Element add(const Element& a, const Element& b) const { return a > b ? a : b; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }
    std::size_t universe_size() const { return n_; }
    Element element_at(std::size_t i) const { return Nat(i) + 1; }

    SolveResult<Element> solve_left(const Element& a, const Element& b) const {
        SolveResult<Element> r;
        if (a < b) {
            r.values.push_back(b);
        } else if (a == b) {
            for (Nat x = 1; x <= b && x <= Nat(n_); ++x) r.values.push_back(x);
        }
        return r;
    }

    std::string to_string(const Element& e) const { return nat_str(e); }

private:
    std::size_t n_;
};

class LeftProjFixture {
public:
    using Element = Nat;

    explicit LeftProjFixture(std::size_t n) : n_(n) {}

    std::string name() const { return "leftproj(" + std::to_string(n_) + ")"; }
    Element add(const Element& a, const Element&) const { return a; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    bool less(const Element& a, const Element& b) const { return a < b; }
    std::size_t universe_size() const { return n_; }
    Element element_at(std::size_t i) const { return Nat(i) + 1; }

    SolveResult<Element> solve_left(const Element& a, const Element& b) const {
        SolveResult<Element> r;
        if (a == b)
            for (std::size_t i = 0; i < n_; ++i) r.values.push_back(element_at(i));
        return r;
    }

    std::string to_string(const Element& e) const { return nat_str(e); }

private:
    std::size_t n_;
};

// ---------------------------------------------------------------------------
// Brute-force law checking over enumeration prefixes.
// ---------------------------------------------------------------------------

enum class LawKind { Commutative, Associative, NoIdempotent };

inline std::string law_name(LawKind k) {
    switch (k) {
        case LawKind::Commutative: return "commutative";
        case LawKind::Associative: return "associative";
        case LawKind::NoIdempotent: return "no-idempotent";
    }
    return "?";
}

template <typename S>
struct LawReport {
    LawKind law;
    std::size_t sample_size = 0;
    // Witnessing tuples: pairs for commutativity, triples for associativity,
    // singletons for idempotents. Empty iff the law held on every sampled tuple.
    std::vector<std::vector<typename S::Element>> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks commutativity (all pairs), associativity (all triples) and absence
/// of idempotents over the first `sample_size` enumerated elements.
template <Semigroup S>
std::vector<LawReport<S>> check_laws(const S& s, std::size_t sample_size) {
    if (sample_size == 0) throw Error("check_laws: sample size must be >= 1");
    std::size_t n = std::min(sample_size, s.universe_size());

    std::vector<typename S::Element> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(s.element_at(i));

    LawReport<S> comm{LawKind::Commutative, n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!s.eq(s.add(xs[i], xs[j]), s.add(xs[j], xs[i])))
                comm.violations.push_back({xs[i], xs[j]});

    LawReport<S> assoc{LawKind::Associative, n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!s.eq(s.add(s.add(xs[i], xs[j]), xs[k]),
                          s.add(xs[i], s.add(xs[j], xs[k]))))
                    assoc.violations.push_back({xs[i], xs[j], xs[k]});

    LawReport<S> idem{LawKind::NoIdempotent, n, {}};
    for (std::size_t i = 0; i < n; ++i)
        if (s.eq(s.add(xs[i], xs[i]), xs[i])) idem.violations.push_back({xs[i]});

    return {comm, assoc, idem};
}

/// Distribution of |solve_left(a,b)| over all sampled pairs, with truncation
/// counts. Supports classifying left cancellative (all sizes <= 1) against
/// weakly left cancellative (all finite).
struct CancellationProfile {
    std::size_t sample_size = 0;
    std::map<std::size_t, std::size_t> size_histogram;  // size -> pair count (non-truncated)
    std::size_t truncated_pairs = 0;
    std::string classification;
};

template <Semigroup S>
CancellationProfile cancellativity_profile(const S& s, std::size_t sample_size) {
    if (sample_size == 0) throw Error("cancellativity_profile: sample size must be >= 1");
    std::size_t n = std::min(sample_size, s.universe_size());

    CancellationProfile p;
    p.sample_size = n;
    bool all_unit = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto r = s.solve_left(s.element_at(i), s.element_at(j));
            if (r.truncated) {
                ++p.truncated_pairs;
            } else {
                ++p.size_histogram[r.values.size()];
                if (r.values.size() > 1) all_unit = false;
            }
        }
    }
    if (p.truncated_pairs > 0)
        p.classification = "truncated-solution-sets";
    else
        p.classification = all_unit ? "left-cancellative" : "weakly-left-cancellative";
    return p;
}

}  // namespace largeness
