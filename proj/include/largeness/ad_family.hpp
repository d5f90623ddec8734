#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "largeness/nat.hpp"

namespace largeness {

/// An infinite binary sequence given finitely: a prefix followed by a repeated
/// cycle. Two branches denote the same sequence iff they agree on the first
/// max(prefix lengths) + lcm(cycle lengths) bits, so distinctness is decidable.
class Branch {
public:
    Branch(std::vector<bool> prefix, std::vector<bool> cycle)
        : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
        if (cycle_.empty()) throw Error("branch cycle must be nonempty");
    }

    static Branch constant(bool b) { return Branch({}, {b}); }

    /// "0111" with cycle "1" denotes 0111111...
    static Branch from_strings(const std::string& prefix, const std::string& cycle) {
        auto bits = [](const std::string& s) {
            std::vector<bool> out;
            for (char c : s) {
                if (c != '0' && c != '1') throw Error("branch bits must be 0/1: " + s);
                out.push_back(c == '1');
            }
            return out;
        };
        return Branch(bits(prefix), bits(cycle));
    }

    /// Bits of i, least significant first, padded with zeros. Distinct i give
    /// distinct sequences.
    static Branch from_index(std::uint64_t i) {
        std::vector<bool> prefix;
        for (; i != 0; i >>= 1) prefix.push_back(i & 1u);
        return Branch(std::move(prefix), {false});
    }

    bool bit(std::size_t n) const {  // 0-based
        if (n < prefix_.size()) return prefix_[n];
        return cycle_[(n - prefix_.size()) % cycle_.size()];
    }

    bool same_sequence(const Branch& other) const {
        std::size_t pre = std::max(prefix_.size(), other.prefix_.size());
        std::size_t per = std::lcm(cycle_.size(), other.cycle_.size());
        for (std::size_t n = 0; n < pre + per; ++n)
            if (bit(n) != other.bit(n)) return false;
        return true;
    }

    std::string describe() const {
        std::string s;
        for (bool b : prefix_) s += b ? '1' : '0';
        s += '(';
        for (bool b : cycle_) s += b ? '1' : '0';
        s += ')';
        return s;
    }

private:
    std::vector<bool> prefix_;
    std::vector<bool> cycle_;
};

/// Code of a finite binary string s: the value of "1"s read in binary. This is
/// a bijection from finite binary strings onto {2, 3, 4, ...}; prefixes of a
/// branch code to a strictly increasing integer sequence, and two branches
/// share exactly the codes of their common prefixes.
inline Nat prefix_code(const Branch& b, std::size_t len) {
    Nat v = 1;
    for (std::size_t n = 0; n < len; ++n) {
        v <<= 1;
        if (b.bit(n)) v += 1;
    }
    return v;
}

/// A family of almost disjoint infinite subsets of N: member i is the set of
/// prefix codes of branch i. Pairwise intersections are the codes of common
/// prefixes, hence finite.
class AdNatFamily {
public:
    explicit AdNatFamily(std::vector<Branch> branches) : branches_(std::move(branches)) {
        if (branches_.empty()) throw Error("ad family needs at least one branch");
        for (std::size_t i = 0; i < branches_.size(); ++i)
            for (std::size_t j = i + 1; j < branches_.size(); ++j)
                if (branches_[i].same_sequence(branches_[j]))
                    throw Error("duplicate branch seeds: " + branches_[i].describe() +
                                " and " + branches_[j].describe());
    }

    static AdNatFamily from_indices(std::size_t count) {
        std::vector<Branch> bs;
        for (std::size_t i = 0; i < count; ++i) bs.push_back(Branch::from_index(i));
        return AdNatFamily(std::move(bs));
    }

    std::size_t size() const { return branches_.size(); }
    const Branch& branch(std::size_t i) const { return branches_.at(i); }

    /// n-th element (n >= 1) of member set i; strictly increasing in n.
    Nat member(std::size_t i, std::size_t n) const {
        if (n == 0) throw Error("member index is 1-based");
        return prefix_code(branches_.at(i), n);
    }

    std::vector<Nat> members(std::size_t i, std::size_t count) const {
        std::vector<Nat> out;
        out.reserve(count);
        for (std::size_t n = 1; n <= count; ++n) out.push_back(member(i, n));
        return out;
    }

private:
    std::vector<Branch> branches_;
};

}  // namespace largeness
