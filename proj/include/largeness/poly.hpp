#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "largeness/nat.hpp"

namespace largeness {

/// An integral polynomial: zero constant term by construction (there is no
/// c_0 slot), non-negative integer coefficients, exact evaluation. Maps N
/// into N whenever some coefficient is positive.
class IntPoly {
public:
    IntPoly() = default;  // the zero polynomial

    explicit IntPoly(std::vector<Nat> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static IntPoly monomial(std::size_t degree, const Nat& coeff = 1) {
        if (degree == 0) throw Error("integral polynomials have no constant term");
        std::vector<Nat> cs(degree, Nat(0));
        cs[degree - 1] = coeff;
        return IntPoly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.size(); }  // 0 for the zero polynomial
    const std::vector<Nat>& coeffs() const { return coeffs_; }  // c_1 .. c_d

    /// Exact Horner evaluation; eval(0) = 0 always.
    Nat eval(const Nat& x) const {
        if (coeffs_.empty()) return 0;
        Nat acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + coeffs_[k];
        return acc * x;
    }

    /// degree + sum of coefficients; the enumeration's primary key.
    Nat weight() const {
        Nat w = coeffs_.size();
        for (const auto& c : coeffs_) w += c;
        return w;
    }

    IntPoly plus(const IntPoly& other) const {
        std::vector<Nat> cs(std::max(coeffs_.size(), other.coeffs_.size()), Nat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] += coeffs_[i];
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) cs[i] += other.coeffs_[i];
        return IntPoly(std::move(cs));
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            if (coeffs_[k] == 0) continue;
            if (!out.empty()) out += " + ";
            if (coeffs_[k] != 1) out += nat_str(coeffs_[k]);
            out += "x";
            if (k > 0) out += "^" + std::to_string(k + 1);
        }
        return out;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    // (degree, coefficients lex): the member order inside families
    friend std::weak_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
        if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
        return a.coeffs_ <=> b.coeffs_;
    }

private:
    std::vector<Nat> coeffs_;
};

/// A finite nonempty set of nonzero integral polynomials.
class PolyFamily {
public:
    explicit PolyFamily(std::vector<IntPoly> members) {
        if (members.empty()) throw Error("polynomial family must be nonempty");
        for (const auto& f : members)
            if (f.is_zero()) throw Error("polynomial family members must be nonzero");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    std::size_t size() const { return members_.size(); }
    const std::vector<IntPoly>& members() const { return members_; }
    const IntPoly& least() const { return members_.front(); }

    bool contains(const IntPoly& f) const {
        return std::binary_search(members_.begin(), members_.end(), f,
                                  [](const IntPoly& a, const IntPoly& b) { return a < b; });
    }

    bool is_superset_of(const PolyFamily& other) const {
        return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                             other.members_.end(),
                             [](const IntPoly& a, const IntPoly& b) { return a < b; });
    }

    Nat weight() const {
        Nat w = 0;
        for (const auto& f : members_) w += f.weight();
        return w;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < members_.size(); ++i)
            out += (i ? ", " : "") + members_[i].to_string();
        return out + "}";
    }

    friend bool operator==(const PolyFamily& a, const PolyFamily& b) {
        return a.members_ == b.members_;
    }
    friend std::weak_ordering operator<=>(const PolyFamily& a, const PolyFamily& b) {
        if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
        return a.members_ <=> b.members_;
    }

private:
    std::vector<IntPoly> members_;
};

/// All nonzero polynomials with degree <= degree_max and coefficients
/// <= coeff_max, ordered by (weight, coefficients lex).
inline std::vector<IntPoly> enumerate_polys(std::size_t degree_max, std::uint64_t coeff_max) {
    if (degree_max < 1 || coeff_max < 1) throw Error("polynomial bounds must be >= 1");
    if (degree_max > 8) throw Error("polynomial degree bound too large for enumeration");
    std::vector<IntPoly> out;
    std::vector<std::uint64_t> cur(degree_max, 0);
    while (true) {
        std::vector<Nat> cs;
        cs.reserve(degree_max);
        for (auto v : cur) cs.emplace_back(v);
        IntPoly f(std::move(cs));
        if (!f.is_zero()) out.push_back(std::move(f));
        std::size_t i = degree_max;
        while (i > 0 && cur[i - 1] == coeff_max) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        Nat wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.coeffs() < b.coeffs();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Deterministic enumeration of all nonempty polynomial families within the
/// bounds, ordered by (total weight, size, members lex); stable across runs.
inline std::vector<PolyFamily> enumerate_poly_families(std::size_t degree_max,
                                                       std::uint64_t coeff_max,
                                                       std::size_t size_max,
                                                       std::size_t cap = 1u << 20) {
    if (size_max < 1) throw Error("family size bound must be >= 1");
    auto polys = enumerate_polys(degree_max, coeff_max);
    std::vector<PolyFamily> out;
    for (std::size_t n = 1; n <= std::min(size_max, polys.size()); ++n) {
        std::vector<std::size_t> pick(n);
        for (std::size_t i = 0; i < n; ++i) pick[i] = i;
        while (true) {
            std::vector<IntPoly> members;
            members.reserve(n);
            for (auto i : pick) members.push_back(polys[i]);
            out.push_back(PolyFamily(std::move(members)));
            if (out.size() > cap) throw Error("family enumeration exceeds the configured cap");
            std::size_t i = n;
            while (i > 0 && pick[i - 1] == polys.size() - (n - i) - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFamily& a, const PolyFamily& b) {
        Nat wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a < b;  // (size, members lex)
    });
    return out;
}

}  // namespace largeness
