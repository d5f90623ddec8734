#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace largeness {

/// Exact unbounded natural number. All value-level arithmetic in the library
/// (finite sums, polynomial evaluation, block values) is done in this type so
/// that nothing ever wraps silently.
using Nat = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a construction runs out of material (pool, tail, horizon)
/// before reaching its requested length. The message names the stage reached.
struct ExhaustionError : Error {
    using Error::Error;
};

/// Raised when a post-hoc verification inside an operation fails (e.g. the
/// uniqueness check of ufs_subsystem on a semigroup outside its hypotheses).
struct VerificationError : Error {
    using Error::Error;
};

inline std::string nat_str(const Nat& n) { return n.str(); }

inline Nat parse_nat(const std::string& text) {
    if (text.empty()) throw Error("empty integer literal");
    for (char c : text)
        if (c < '0' || c > '9') throw Error("bad integer literal: " + text);
    return Nat(text);
}

/// FNV-1a 64-bit. Used for content hashes of oversized tables in reports;
/// stable across platforms, unlike std::hash.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace largeness
