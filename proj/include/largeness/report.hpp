#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "largeness/index_sets.hpp"
#include "largeness/nat.hpp"

namespace largeness {

/// Values up to 2^53 serialize as JSON numbers, larger ones as decimal
/// strings, keeping reports byte-stable and readable everywhere.
inline nlohmann::json nat_json(const Nat& v) {
    if (v <= Nat(std::uint64_t{1} << 53)) return nlohmann::json(static_cast<std::uint64_t>(v));
    return nlohmann::json(nat_str(v));
}

inline nlohmann::json nats_json(const std::vector<Nat>& vs) {
    auto out = nlohmann::json::array();
    for (const auto& v : vs) out.push_back(nat_json(v));
    return out;
}

template <typename Container>
nlohmann::json nat_set_json(const Container& vs) {
    auto out = nlohmann::json::array();
    for (const auto& v : vs) out.push_back(nat_json(v));
    return out;
}

inline nlohmann::json mask_json(Mask h) {
    auto out = nlohmann::json::array();
    for (int i : mask_indices(h)) out.push_back(i);
    return out;
}

/// Canonical serialization: nlohmann objects iterate in sorted key order, so
/// a fixed indent plus a trailing newline makes identical configs produce
/// byte-identical reports.
inline std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// A machine-checkable restricted statement: the claim (always carrying its
/// bound vector), raw evidence, and a verification section recomputed from
/// the evidence alone.
struct Certificate {
    std::string command;
    nlohmann::json claim;
    nlohmann::json config;
    nlohmann::json evidence;

    struct Check {
        std::string name;
        bool pass = false;
        nlohmann::json detail;
    };
    std::vector<Check> checks;

    /// "verified" | "exhausted" | "error" — exhaustion and structured errors
    /// are outcomes, not verification failures.
    std::string outcome = "verified";
    nlohmann::json error;

    bool verification_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void check(const std::string& name, bool pass, nlohmann::json detail = nullptr) {
        checks.push_back({name, pass, std::move(detail)});
    }

    int exit_code() const {
        if (outcome == "exhausted") return 3;
        if (outcome == "error") return 1;
        return verification_pass() ? 0 : 1;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["claim"] = claim;
        j["config"] = config;
        j["evidence"] = evidence;
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            if (!c.detail.is_null()) cj["detail"] = c.detail;
            checks_json.push_back(cj);
        }
        j["verification"]["checks"] = checks_json;
        j["verification"]["pass"] = verification_pass();
        j["outcome"] = outcome;
        if (!error.is_null()) j["error"] = error;
        return j;
    }
};

/// Large finite-sums tables are replaced by a stable content hash.
constexpr std::size_t kTableEmitCap = 4096;

}  // namespace largeness
