#pragma once

#include <set>
#include <vector>

#include "largeness/finite_sums.hpp"
#include "largeness/nat.hpp"
#include "largeness/semigroup.hpp"

namespace testutil {

inline std::vector<largeness::Nat> nats(std::initializer_list<long long> xs) {
    std::vector<largeness::Nat> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

inline std::set<largeness::Nat> natset(std::initializer_list<long long> xs) {
    std::set<largeness::Nat> out;
    for (auto x : xs) out.emplace(x);
    return out;
}

inline std::vector<largeness::Nat> pow2_pool(int hi) {  // <2^1, ..., 2^hi>
    std::vector<largeness::Nat> out;
    for (int i = 1; i <= hi; ++i) out.push_back(largeness::Nat(1) << i);
    return out;
}

/// Independent recursive oracle for finite-sums sets:
/// FS(k) = FS(k-1) u {x_k} u (FS(k-1) + x_k). Kept free of the fs_set path.
template <largeness::Semigroup S>
largeness::ElementSet<S> fs_oracle(const S& s, const std::vector<typename S::Element>& xs) {
    auto acc = largeness::make_element_set(s);
    for (const auto& x : xs) {
        auto next = acc;
        next.insert(x);
        for (const auto& z : acc) next.insert(s.add(z, x));
        acc = std::move(next);
    }
    return acc;
}

}  // namespace testutil
