#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "largeness/index_sets.hpp"
#include "largeness/nat.hpp"

namespace largeness {

// A finite set of equal-length sequences over N, kept sorted and
// deduplicated. Serves both as the L of S_L(a, H) blocks and as the finite
// truncations of sequence families in the polynomial machinery.
class SeqFamily {
public:
    explicit SeqFamily(std::vector<std::vector<Nat>> members) {
        if (members.empty()) throw Error("sequence family must be nonempty");
        length_ = members[0].size();
        if (length_ == 0) throw Error("sequence family members must be nonempty");
        for (const auto& f : members) {
            if (f.size() != length_) throw Error("sequence family members must share a length");
            for (const auto& v : f)
                if (v < 1) throw Error("sequence entries must be positive");
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    std::size_t length() const { return length_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::vector<Nat>>& members() const { return members_; }

    Nat min_entry() const {
        Nat m = members_[0][0];
        for (const auto& f : members_)
            for (const auto& v : f) m = std::min(m, v);
        return m;
    }

    Nat max_entry() const {
        Nat m = members_[0][0];
        for (const auto& f : members_)
            for (const auto& v : f) m = std::max(m, v);
        return m;
    }

    /// Sum of member `i` over the index set `h`.
    Nat row_sum(std::size_t i, Mask h) const {
        if (h == 0 || mask_max(h) > static_cast<int>(length_))
            throw Error("index set out of range for sequence family");
        Nat sum = 0;
        const auto& f = members_.at(i);
        for (int t : mask_indices(h)) sum += f[static_cast<std::size_t>(t - 1)];
        return sum;
    }

    SeqFamily plus(const Nat& a) const {
        auto ms = members_;
        for (auto& f : ms)
            for (auto& v : f) v += a;
        return SeqFamily(std::move(ms));
    }

    SeqFamily minus(const Nat& a) const {
        auto ms = members_;
        for (auto& f : ms)
            for (auto& v : f) {
                if (v <= a) throw Error("translation would leave N");
                v -= a;
            }
        return SeqFamily(std::move(ms));
    }

    friend bool operator==(const SeqFamily& x, const SeqFamily& y) {
        return x.members_ == y.members_;
    }
    friend std::weak_ordering operator<=>(const SeqFamily& x, const SeqFamily& y) {
        if (auto c = x.length_ <=> y.length_; c != 0) return c;
        if (auto c = x.members_.size() <=> y.members_.size(); c != 0) return c;
        return x.members_ <=> y.members_;
    }

private:
    std::size_t length_;
    std::vector<std::vector<Nat>> members_;
};

}  // namespace largeness
