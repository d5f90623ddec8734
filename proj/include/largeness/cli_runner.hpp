#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "largeness/comb_rich.hpp"
#include "largeness/finite_sums.hpp"
#include "largeness/nat.hpp"
#include "largeness/poly_largeness.hpp"
#include "largeness/report.hpp"
#include "largeness/semigroup.hpp"
#include "largeness/set_spec.hpp"

namespace largeness {

struct UsageError : Error {
    using Error::Error;
};

/// One run's full configuration. String-typed bounds stay empty when the
/// subcommand's own default applies; identical configs produce byte-identical
/// reports.
struct RunConfig {
    std::string command;
    std::string semigroup = "nat";
    std::string set_text;    // JSON set spec; empty means all of N
    std::string generators;  // comma-separated elements in the handle's syntax
    std::string polys;       // JSON array of coefficient arrays [c1, c2, ...]
    std::string seqs;        // JSON array of equal-length sequences
    std::string ys;          // comma-separated positive integers
    std::string exclude;     // comma-separated positive integers
    std::string schedule;    // comma-separated r_n values; empty = 2^n + 1
    std::string mode = "disjoint";
    std::string amax, xmax, summax;  // empty = per-command default

    std::uint64_t depth = 4;
    std::uint64_t horizon = 4096;
    std::uint64_t outlen = 3;
    std::uint64_t parts = 2;
    std::uint64_t trials = 3;
    std::uint64_t nmax = 1;
    std::uint64_t entry_horizon = 2;
    std::uint64_t sample = 16;
    std::uint64_t branches = 2;
    std::uint64_t truncation = 4;
    std::uint64_t minh = 0;
    std::uint64_t gap = 3;
    std::uint64_t window = 30;
    std::uint64_t degree_max = 2;
    std::uint64_t coeff_max = 2;
    std::uint64_t size_max = 2;
    std::uint64_t seed = 0;
    unsigned retry_cap = 40;
};

namespace cli_detail {

inline Nat bound_or(const std::string& text, const char* fallback) {
    return parse_nat(text.empty() ? fallback : text);
}

inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<Nat> parse_nat_csv(const std::string& text, const char* what) {
    auto tokens = split_csv(text);
    if (tokens.empty()) throw UsageError(std::string("expected a value list for ") + what);
    std::vector<Nat> out;
    for (const auto& t : tokens) out.push_back(parse_nat(t));
    return out;
}

inline SetSpec parse_set(const RunConfig& cfg) {
    if (cfg.set_text.empty()) return SetSpec::all();
    return SetSpec::parse_text(cfg.set_text);
}

inline PolyFamily parse_polys(const std::string& text) {
    if (text.empty()) throw UsageError("expected --polys as a JSON array of coefficient arrays");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("--polys is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("--polys must be a nonempty array");
    std::vector<IntPoly> members;
    for (const auto& coeffs : j) {
        if (!coeffs.is_array()) throw UsageError("--polys entries must be coefficient arrays");
        std::vector<Nat> cs;
        for (const auto& c : coeffs) {
            if (!c.is_number_unsigned()) throw UsageError("--polys coefficients must be >= 0");
            cs.emplace_back(c.get<std::uint64_t>());
        }
        members.push_back(IntPoly(std::move(cs)));
    }
    return PolyFamily(std::move(members));
}

inline SeqList parse_seqs(const std::string& text) {
    if (text.empty()) throw UsageError("expected --seqs as a JSON array of sequences");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("--seqs is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("--seqs must be a nonempty array");
    std::vector<std::vector<Nat>> members;
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("--seqs entries must be arrays");
        std::vector<Nat> r;
        for (const auto& v : row) {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
                throw UsageError("--seqs entries must be positive integers");
            r.emplace_back(v.get<std::uint64_t>());
        }
        members.push_back(std::move(r));
    }
    return SeqList(std::move(members));
}

inline CrSchedule parse_schedule(const RunConfig& cfg) {
    if (cfg.schedule.empty()) return CrSchedule::defaults(cfg.nmax);
    CrSchedule s;
    for (const auto& v : parse_nat_csv(cfg.schedule, "--schedule")) {
        if (v < 1 || v > 20) throw UsageError("--schedule entries must be in [1, 20]");
        s.r.push_back(static_cast<std::uint32_t>(v));
    }
    if (s.r.size() < cfg.nmax) throw UsageError("--schedule shorter than --nmax");
    return s;
}

// Element syntax: plain decimals for N-valued handles, "level.idx" for the
// level/index semigroup.
inline Nat parse_element(const NatAdd&, const std::string& t) { return parse_nat(t); }
inline Nat parse_element(const MaxFixture&, const std::string& t) { return parse_nat(t); }
inline Nat parse_element(const LeftProjFixture&, const std::string& t) { return parse_nat(t); }
inline ExElement parse_element(const ExSemigroup&, const std::string& t) {
    auto dot = t.find('.');
    if (dot == std::string::npos)
        throw UsageError("level/index elements are written level.idx: " + t);
    Nat level = parse_nat(t.substr(0, dot));
    Nat idx = parse_nat(t.substr(dot + 1));
    if (idx < 1) throw UsageError("element index must be >= 1: " + t);
    if (level > Nat(std::numeric_limits<std::uint32_t>::max()) ||
        idx > Nat(std::numeric_limits<std::uint64_t>::max()))
        throw UsageError("element out of representable range: " + t);
    return ExElement{static_cast<std::uint32_t>(level), static_cast<std::uint64_t>(idx)};
}

inline nlohmann::json element_json(const NatAdd&, const Nat& v) { return nat_json(v); }
template <typename S>
nlohmann::json element_json(const S& s, const typename S::Element& e) {
    return nlohmann::json(s.to_string(e));
}

template <typename S>
std::vector<typename S::Element> parse_generators(const S& s, const RunConfig& cfg) {
    auto tokens = split_csv(cfg.generators);
    if (tokens.empty()) throw UsageError("expected --generators");
    std::vector<typename S::Element> out;
    for (const auto& t : tokens) out.push_back(parse_element(s, t));
    return out;
}

template <typename S>
nlohmann::json elements_json(const S& s, const std::vector<typename S::Element>& es) {
    auto out = nlohmann::json::array();
    for (const auto& e : es) out.push_back(element_json(s, e));
    return out;
}

/// Independent finite-sums oracle used only by verification paths:
/// FS(k) = FS(k-1) u {x_k} u (FS(k-1) + x_k).
template <Semigroup S>
ElementSet<S> fs_values_oracle(const S& s, const std::vector<typename S::Element>& xs) {
    auto acc = make_element_set(s);
    for (const auto& x : xs) {
        auto next = acc;
        next.insert(x);
        for (const auto& z : acc) next.insert(s.add(z, x));
        acc = std::move(next);
    }
    return acc;
}

/// Left-to-right fold over explicit 1-based indices into `source`.
template <Semigroup S>
typename S::Element fold_indices(const S& s, const std::vector<typename S::Element>& source,
                                 const std::vector<int>& idx) {
    auto v = source.at(static_cast<std::size_t>(idx.at(0) - 1));
    for (std::size_t i = 1; i < idx.size(); ++i)
        v = s.add(v, source.at(static_cast<std::size_t>(idx[i] - 1)));
    return v;
}

/// Arrays larger than the emit cap collapse to a count plus a stable hash of
/// their canonical serialization.
inline nlohmann::json capped_array(nlohmann::json arr) {
    if (arr.size() <= kTableEmitCap) return arr;
    nlohmann::json out;
    out["count"] = arr.size();
    out["fnv1a64"] = fnv1a64_hex(dump_canonical(arr));
    return out;
}

inline nlohmann::json bounds_json(std::initializer_list<std::pair<const char*, nlohmann::json>> kv) {
    nlohmann::json out;
    for (const auto& [k, v] : kv) out[k] = v;
    return out;
}

inline nlohmann::json config_json(const RunConfig& cfg,
                                  std::initializer_list<const char*> fields) {
    nlohmann::json out;
    out["command"] = cfg.command;
    out["seed"] = cfg.seed;
    auto want = [&](const char* f) {
        for (const char* g : fields)
            if (std::string(f) == g) return true;
        return false;
    };
    if (want("semigroup")) out["semigroup"] = cfg.semigroup;
    if (want("set")) out["set"] = cfg.set_text.empty() ? "N" : cfg.set_text;
    if (want("generators")) out["generators"] = cfg.generators;
    if (want("polys")) out["polys"] = cfg.polys;
    if (want("seqs")) out["seqs"] = cfg.seqs;
    if (want("ys")) out["ys"] = cfg.ys;
    if (want("exclude")) out["exclude"] = cfg.exclude;
    if (want("schedule")) out["schedule"] = cfg.schedule.empty() ? "default" : cfg.schedule;
    if (want("mode")) out["mode"] = cfg.mode;
    if (want("amax")) out["amax"] = cfg.amax;
    if (want("xmax")) out["xmax"] = cfg.xmax;
    if (want("summax")) out["summax"] = cfg.summax;
    if (want("depth")) out["depth"] = cfg.depth;
    if (want("horizon")) out["horizon"] = cfg.horizon;
    if (want("outlen")) out["outlen"] = cfg.outlen;
    if (want("parts")) out["parts"] = cfg.parts;
    if (want("trials")) out["trials"] = cfg.trials;
    if (want("nmax")) out["nmax"] = cfg.nmax;
    if (want("entry-horizon")) out["entry-horizon"] = cfg.entry_horizon;
    if (want("sample")) out["sample"] = cfg.sample;
    if (want("branches")) out["branches"] = cfg.branches;
    if (want("truncation")) out["truncation"] = cfg.truncation;
    if (want("minh")) out["minh"] = cfg.minh;
    if (want("gap")) out["gap"] = cfg.gap;
    if (want("window")) out["window"] = cfg.window;
    if (want("degree-max")) out["degree-max"] = cfg.degree_max;
    if (want("coeff-max")) out["coeff-max"] = cfg.coeff_max;
    if (want("size-max")) out["size-max"] = cfg.size_max;
    if (want("retry-cap")) out["retry-cap"] = cfg.retry_cap;
    return out;
}

inline nlohmann::json seq_family_json(const SeqFamily& L) {
    auto rows = nlohmann::json::array();
    for (const auto& f : L.members()) rows.push_back(nats_json(f));
    return rows;
}

inline nlohmann::json poly_family_json(const PolyFamily& R) {
    auto out = nlohmann::json::array();
    for (const auto& f : R.members()) out.push_back(nats_json(f.coeffs()));
    return out;
}

// ---------------------------------------------------------------------------
// Per-command handlers.
// ---------------------------------------------------------------------------

template <Semigroup S>
Certificate run_law_check(const S& s, const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "sample"});
    auto reports = check_laws(s, cfg.sample);
    std::size_t n = reports.at(0).sample_size;
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"sample", n}, {"semigroup", cfg.semigroup}})},
                  {"statement", "commutativity, associativity and absence of idempotents over "
                                "the enumeration prefix"}};

    auto law_json = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr;
        jr["law"] = law_name(r.law);
        jr["sampleSize"] = r.sample_size;
        auto viol = nlohmann::json::array();
        for (const auto& tuple : r.violations) viol.push_back(elements_json(s, tuple));
        jr["violations"] = capped_array(viol);
        jr["pass"] = r.passed();
        law_json.push_back(jr);
    }
    cert.evidence["laws"] = law_json;

    // recount every law from scratch and confirm the reported tuples
    std::vector<typename S::Element> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(s.element_at(i));
    std::size_t comm = 0, assoc = 0, idem = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!s.eq(s.add(xs[i], xs[j]), s.add(xs[j], xs[i]))) ++comm;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!s.eq(s.add(s.add(xs[i], xs[j]), xs[k]), s.add(xs[i], s.add(xs[j], xs[k]))))
                    ++assoc;
    for (std::size_t i = 0; i < n; ++i)
        if (s.eq(s.add(xs[i], xs[i]), xs[i])) ++idem;
    cert.check("commutativity-violations-recounted", comm == reports[0].violations.size(),
               {{"recount", comm}});
    cert.check("associativity-violations-recounted", assoc == reports[1].violations.size(),
               {{"recount", assoc}});
    cert.check("idempotents-recounted", idem == reports[2].violations.size(),
               {{"recount", idem}});
    for (const auto& r : reports)
        for (const auto& tuple : r.violations) {
            bool genuine = true;
            if (r.law == LawKind::Commutative)
                genuine = !s.eq(s.add(tuple[0], tuple[1]), s.add(tuple[1], tuple[0]));
            else if (r.law == LawKind::Associative)
                genuine = !s.eq(s.add(s.add(tuple[0], tuple[1]), tuple[2]),
                                s.add(tuple[0], s.add(tuple[1], tuple[2])));
            else
                genuine = s.eq(s.add(tuple[0], tuple[0]), tuple[0]);
            if (!genuine) {
                cert.check("reported-violation-genuine", false, elements_json(s, tuple));
                return cert;
            }
        }
    cert.check("reported-violations-genuine", true);
    return cert;
}

template <Semigroup S>
Certificate run_cancel_profile(const S& s, const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "sample"});
    auto p = cancellativity_profile(s, cfg.sample);
    cert.claim = {
        {"command", cfg.command},
        {"restricted_to", bounds_json({{"sample", p.sample_size}, {"semigroup", cfg.semigroup}})},
        {"statement", "distribution of left solution set sizes over all sampled pairs"}};

    nlohmann::json hist;
    for (const auto& [size, count] : p.size_histogram) hist[std::to_string(size)] = count;
    cert.evidence["histogram"] = hist;
    cert.evidence["truncatedPairs"] = p.truncated_pairs;
    cert.evidence["classification"] = p.classification;

    std::map<std::size_t, std::size_t> recount;
    std::size_t trunc = 0;
    for (std::size_t i = 0; i < p.sample_size; ++i)
        for (std::size_t j = 0; j < p.sample_size; ++j) {
            auto r = s.solve_left(s.element_at(i), s.element_at(j));
            if (r.truncated)
                ++trunc;
            else
                ++recount[r.values.size()];
            for (const auto& x : r.values)
                if (!s.eq(s.add(s.element_at(i), x), s.element_at(j))) {
                    cert.check("solutions-genuine", false,
                               {{"a", element_json(s, s.element_at(i))},
                                {"b", element_json(s, s.element_at(j))}});
                    return cert;
                }
        }
    cert.check("solutions-genuine", true);
    cert.check("histogram-recounted", recount == p.size_histogram && trunc == p.truncated_pairs,
               {{"truncatedRecount", trunc}});
    return cert;
}

template <Semigroup S>
Certificate run_fs(const S& s, const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "generators", "depth"});
    auto xs = parse_generators(s, cfg);
    auto sys = fs_set(s, xs, static_cast<int>(std::min<std::uint64_t>(cfg.depth, kFsDepthCap)));
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"depth", xs.size()}})},
                  {"statement", "the complete indexed finite-sums table of the generators"}};

    auto table = nlohmann::json::array();
    for (Mask m = 1; m < (Mask{1} << xs.size()); ++m)
        table.push_back({{"H", mask_json(m)}, {"sum", element_json(s, sys.sum_of(m))}});
    cert.evidence["generators"] = elements_json(s, xs);
    cert.evidence["table"] = capped_array(table);

    bool ok = true;
    for (Mask m = 1; m < (Mask{1} << xs.size()) && ok; ++m)
        ok = s.eq(sys.sum_of(m), fold_indices(s, xs, mask_indices(m)));
    cert.check("table-entries-refolded", ok);
    auto oracle = fs_values_oracle(s, xs);
    auto vals = sys.values();
    cert.check("value-set-matches-recursive-oracle",
               oracle.size() == vals.size() &&
                   std::equal(oracle.begin(), oracle.end(), vals.begin(),
                              [&](const auto& a, const auto& b) { return s.eq(a, b); }));
    return cert;
}

inline Certificate run_ip_search(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "depth", "horizon"});
    auto A = parse_set(cfg);
    NatAdd nat(cfg.horizon);
    auto w = ip_witness_search(
        nat, [&](const Nat& v) { return A.contains(v); }, static_cast<int>(cfg.depth),
        cfg.horizon);
    cert.claim = {
        {"command", cfg.command},
        {"restricted_to", bounds_json({{"depth", cfg.depth}, {"horizon", cfg.horizon}})},
        {"statement", "a generator sequence whose every finite sum lies in the set"}};
    if (!w) {
        cert.outcome = "exhausted";
        cert.evidence["witness"] = nullptr;
        return cert;
    }
    cert.evidence["witness"] = nats_json(*w);
    bool ok = true;
    for (const auto& v : fs_values_oracle(nat, *w)) ok = ok && A.contains(v);
    cert.check("all-finite-sums-inside-set", ok);
    return cert;
}

template <Semigroup S>
Certificate run_ip_split(const S& s, const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "generators", "parts", "outlen"});
    auto pool = parse_generators(s, cfg);
    auto systems = ip_split(s, pool, cfg.parts, cfg.outlen);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"pool", pool.size()},
                                                 {"parts", cfg.parts},
                                                 {"outlen", cfg.outlen}})},
                  {"statement", "pairwise disjoint finite-sums systems drawn from the pool"}};

    auto parts_json = nlohmann::json::array();
    for (const auto& sys : systems) {
        nlohmann::json pj;
        pj["generators"] = elements_json(s, sys.generators());
        auto vals = nlohmann::json::array();
        for (const auto& v : sys.values()) vals.push_back(element_json(s, v));
        pj["values"] = capped_array(vals);
        parts_json.push_back(pj);
    }
    cert.evidence["pool"] = elements_json(s, pool);
    cert.evidence["systems"] = parts_json;

    // parts draw disjoint index sets from the pool
    std::vector<bool> used(pool.size(), false);
    bool drawn = true;
    for (const auto& sys : systems) {
        for (const auto& g : sys.generators()) {
            bool found = false;
            for (std::size_t i = 0; i < pool.size() && !found; ++i) {
                if (!used[i] && s.eq(pool[i], g)) {
                    used[i] = true;
                    found = true;
                }
            }
            drawn = drawn && found;
        }
    }
    cert.check("generators-drawn-from-distinct-pool-slots", drawn);

    std::vector<ElementSet<S>> values;
    for (const auto& sys : systems) values.push_back(fs_values_oracle(s, sys.generators()));
    bool disjoint = true;
    for (std::size_t p = 0; p < values.size(); ++p)
        for (std::size_t q = p + 1; q < values.size(); ++q)
            for (const auto& v : values[p]) disjoint = disjoint && !values[q].contains(v);
    cert.check("finite-sums-pairwise-disjoint", disjoint);

    if (pool.size() <= static_cast<std::size_t>(kFsDepthCap)) {
        auto ambient = fs_values_oracle(s, pool);
        bool inside = true;
        for (const auto& vs : values)
            for (const auto& v : vs) inside = inside && ambient.contains(v);
        cert.check("finite-sums-inside-ambient", inside);
    }
    return cert;
}

template <Semigroup S>
void verify_subsystem_cert(Certificate& cert, const S& s, const SumSubsystem<S>& sub) {
    bool separated = true, recomputed = true;
    for (std::size_t i = 0; i < sub.blocks.size(); ++i) {
        const auto& b = sub.blocks[i];
        separated = separated && !b.empty() && std::is_sorted(b.begin(), b.end());
        if (i + 1 < sub.blocks.size())
            separated = separated && b.back() < sub.blocks[i + 1].front();
        recomputed = recomputed && s.eq(sub.derived[i], fold_indices(s, sub.source, b));
    }
    cert.check("blocks-strictly-separated", separated);
    cert.check("derived-values-refolded", recomputed);
}

template <Semigroup S>
nlohmann::json subsystem_json(const S& s, const SumSubsystem<S>& sub) {
    nlohmann::json j;
    j["source"] = elements_json(s, sub.source);
    auto blocks = nlohmann::json::array();
    for (const auto& b : sub.blocks) blocks.push_back(b);
    j["blocks"] = blocks;
    j["derived"] = elements_json(s, sub.derived);
    return j;
}

template <Semigroup S>
Certificate run_ffs(const S& s, const RunConfig& cfg, bool unique) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "generators", "outlen"});
    auto xs = parse_generators(s, cfg);
    auto sub = unique ? ufs_subsystem(s, xs, cfg.outlen) : ffs_subsystem(s, xs, cfg.outlen);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"pool", xs.size()}, {"outlen", cfg.outlen}})},
                  {"statement", unique ? "a sum subsystem with pairwise distinct finite sums"
                                       : "a sum subsystem with finiteness of finite sums"}};
    cert.evidence["subsystem"] = subsystem_json(s, sub);

    verify_subsystem_cert(cert, s, sub);

    // independent pair scan over all index sets of the derived sequence
    bool ffs_ok = true, ufs_ok = true;
    std::size_t k = sub.derived.size();
    std::vector<typename S::Element> sums(std::size_t{1} << k, sub.derived[0]);
    for (Mask m = 1; m < (Mask{1} << k); ++m)
        sums[m] = fold_indices(s, sub.derived, mask_indices(m));
    for (Mask m1 = 1; m1 < (Mask{1} << k); ++m1)
        for (Mask m2 = m1 + 1; m2 < (Mask{1} << k); ++m2)
            if (s.eq(sums[m1], sums[m2])) {
                ufs_ok = false;
                if (mask_max(m1) != mask_max(m2)) ffs_ok = false;
            }
    cert.check("finiteness-of-finite-sums", ffs_ok);
    if (unique) cert.check("uniqueness-of-finite-sums", ufs_ok);
    return cert;
}

template <Semigroup S>
Certificate run_ip_ad(const S& s, const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"semigroup", "generators", "branches", "truncation"});
    auto xs = parse_generators(s, cfg);
    auto fam = ip_ad_family(s, xs, cfg.branches, cfg.truncation);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"branches", cfg.branches},
                                                 {"truncation", cfg.truncation},
                                                 {"pool", xs.size()}})},
                  {"statement", "finite-sums truncations over almost disjoint index sets"}};

    cert.evidence["subsystem"] = subsystem_json(s, fam.subsystem);
    auto members = nlohmann::json::array();
    for (std::size_t b = 0; b < fam.index_sets.size(); ++b) {
        nlohmann::json mj;
        mj["indices"] = fam.index_sets[b];
        auto vals = nlohmann::json::array();
        for (const auto& v : fam.fs_truncations[b].values()) vals.push_back(element_json(s, v));
        mj["values"] = capped_array(vals);
        members.push_back(mj);
    }
    cert.evidence["members"] = members;

    verify_subsystem_cert(cert, s, fam.subsystem);

    bool bounded = true, shared_max = true;
    for (std::size_t i = 0; i < fam.index_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.index_sets.size(); ++j) {
            std::set<int> shared;
            for (int a : fam.index_sets[i])
                for (int b : fam.index_sets[j])
                    if (a == b) shared.insert(a);
            auto vi = fs_values_oracle(s, fam.subsequences[i]);
            std::size_t common = 0;
            for (const auto& v : fs_values_oracle(s, fam.subsequences[j]))
                if (vi.contains(v)) ++common;
            bounded = bounded && common <= shared.size();
            // every shared sum's maximal index is shared
            const auto& fi = fam.fs_truncations[i];
            const auto& fj = fam.fs_truncations[j];
            for (Mask mi = 1; mi < (Mask{1} << fi.depth()); ++mi)
                for (Mask mj = 1; mj < (Mask{1} << fj.depth()); ++mj)
                    if (s.eq(fi.sum_of(mi), fj.sum_of(mj)))
                        shared_max =
                            shared_max &&
                            fam.index_sets[i][static_cast<std::size_t>(mask_max(mi) - 1)] ==
                                fam.index_sets[j][static_cast<std::size_t>(mask_max(mj) - 1)];
        }
    }
    cert.check("intersections-bounded-by-shared-indices", bounded);
    cert.check("shared-sums-share-maximal-index", shared_max);
    return cert;
}

inline Certificate run_cr_search(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "seqs", "amax"});
    auto A = parse_set(cfg);
    auto L = parse_seqs(cfg.seqs);
    Nat a_max = bound_or(cfg.amax, "64");
    auto w = cr_witness_search([&](const Nat& v) { return A.contains(v); }, L, a_max);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"amax", nat_json(a_max)}})},
                  {"statement", "a least (a, H) with the S_L(a, H) block inside the set"}};
    cert.evidence["family"] = seq_family_json(L);
    if (!w) {
        cert.outcome = "exhausted";
        return cert;
    }
    cert.evidence["witness"] = {{"a", nat_json(w->a)}, {"H", mask_json(w->h)}};
    auto block = sl_block(L, *w);
    cert.evidence["block"] = nat_set_json(block);
    bool ok = true;
    for (std::size_t i = 0; i < L.size(); ++i) {
        Nat sum = 0;
        for (int t : mask_indices(w->h)) sum += L.members()[i][static_cast<std::size_t>(t - 1)];
        ok = ok && A.contains(w->a + sum) && block.contains(w->a + sum);
    }
    cert.check("block-inside-set", ok);
    return cert;
}

inline Certificate run_cr_split(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "nmax", "entry-horizon", "parts", "mode", "amax",
                                    "retry-cap", "schedule"});
    auto A = parse_set(cfg);
    auto sched = parse_schedule(cfg);
    auto mode = parse_split_mode(cfg.mode);
    CrSplitOptions opt;
    opt.a_max = bound_or(cfg.amax, "1073741824");
    opt.retry_cap = cfg.retry_cap;
    auto member = [&](const Nat& v) { return A.contains(v); };
    auto r = cr_split(member, sched, cfg.nmax, cfg.entry_horizon, cfg.parts, mode, opt);

    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"nmax", cfg.nmax},
                                                 {"entry-horizon", cfg.entry_horizon},
                                                 {"parts", cfg.parts},
                                                 {"mode", cfg.mode},
                                                 {"amax", nat_json(opt.a_max)}})},
                  {"statement", "disjoint block unions, one translated witness block per part "
                                "for every enumerated family"}};

    auto ledger = nlohmann::json::array();
    for (const auto& e : r.ledger) {
        nlohmann::json ej;
        ej["family"] = seq_family_json(e.family);
        ej["a"] = nat_json(e.a);
        ej["H"] = mask_json(e.h);
        ej["block"] = nats_json(e.block);
        ej["parts"] = e.parts;
        if (e.ladder_b > 0) ej["ladderB"] = nat_json(e.ladder_b);
        if (e.coverage_extra) ej["coverage"] = true;
        ledger.push_back(std::move(ej));
    }
    cert.evidence["ledger"] = capped_array(std::move(ledger));
    auto part_sizes = nlohmann::json::array();
    for (const auto& p : r.parts) part_sizes.push_back(p.size());
    cert.evidence["partSizes"] = part_sizes;

    // recompute blocks, containment, and global disjointness from witnesses
    bool inside = true, disjoint = true, recomputed = true;
    std::set<Nat> seen;
    for (const auto& e : r.ledger) {
        auto block = sl_block(e.family, {e.a, e.h});
        recomputed = recomputed && std::equal(block.begin(), block.end(), e.block.begin(),
                                              e.block.end());
        for (const auto& v : block) {
            inside = inside && A.contains(v);
            disjoint = disjoint && seen.insert(v).second;
        }
    }
    cert.check("blocks-recomputed-from-witnesses", recomputed);
    cert.check("blocks-inside-set", inside);
    cert.check("blocks-pairwise-disjoint", disjoint);

    // coverage: every enumerated family has a translated block in every part
    std::map<SeqFamily, std::size_t> index_of;
    for (std::size_t i = 0; i < r.ledger.size(); ++i) index_of.emplace(r.ledger[i].family, i);
    std::optional<AdNatFamily> branches;
    if (mode == SplitMode::AlmostDisjoint) branches = AdNatFamily::from_indices(cfg.parts);
    bool covered = true;
    for (const auto& L : enumerate_seq_families(sched, cfg.nmax, cfg.entry_horizon)) {
        auto rep = translate_class_rep(L);
        Nat shift = L.min_entry() - 1;
        for (std::size_t p = 0; p < cfg.parts && covered; ++p) {
            Nat o = detail::coverage_offset(mode, p, cfg.parts, cfg.entry_horizon,
                                            branches ? &*branches : nullptr);
            SeqFamily expected = o == 0 ? rep : rep.plus(o);
            auto it = index_of.find(expected);
            if (it == index_of.end()) {
                covered = false;
                break;
            }
            const auto& e = r.ledger[it->second];
            if (std::find(e.parts.begin(), e.parts.end(), p) == e.parts.end()) {
                covered = false;
                break;
            }
            Nat a = o - shift;  // e.family = L + a with a >= 1
            if (a < 1 || !(e.family == L.plus(a))) {
                covered = false;
                break;
            }
            auto direct = sl_block(L, {e.a + Nat(mask_popcount(e.h)) * a, e.h});
            covered = covered && std::equal(direct.begin(), direct.end(), e.block.begin(),
                                            e.block.end());
            for (const auto& v : direct) covered = covered && r.parts[p].contains(v);
        }
        if (!covered) break;
    }
    cert.check("every-part-covers-every-family", covered);
    return cert;
}

inline Certificate run_jp_search(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "polys", "seqs", "minh", "amax", "summax"});
    auto A = parse_set(cfg);
    auto R = parse_polys(cfg.polys);
    auto L = parse_seqs(cfg.seqs);
    Nat a_max = bound_or(cfg.amax, "100");
    Nat sum_max = bound_or(cfg.summax, "100000");
    auto w = jp_witness_search([&](const Nat& v) { return A.contains(v); }, R, L, cfg.minh,
                               a_max, sum_max);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"minh", cfg.minh},
                                                 {"amax", nat_json(a_max)},
                                                 {"summax", nat_json(sum_max)},
                                                 {"truncation", L.length()}})},
                  {"statement", "a least (a, H) with min H beyond the floor and the "
                                "S_{R,L}(a, H) block inside the set"}};
    cert.evidence["polys"] = poly_family_json(R);
    cert.evidence["seqs"] = seq_family_json(L);
    if (!w) {
        cert.outcome = "exhausted";
        return cert;
    }
    auto block = srl_block(R, L, *w);
    cert.evidence["witness"] = {{"a", nat_json(w->a)}, {"H", mask_json(w->h)}};
    cert.evidence["block"] = nat_set_json(block);

    cert.check("minH-respected", static_cast<std::uint64_t>(mask_min(w->h)) > cfg.minh);
    bool inside = true;
    for (std::size_t i = 0; i < L.size(); ++i) {
        Nat sum = 0;
        for (int t : mask_indices(w->h)) sum += L.members()[i][static_cast<std::size_t>(t - 1)];
        inside = inside && sum <= sum_max;
        for (const auto& f : R.members()) inside = inside && A.contains(w->a + f.eval(sum));
    }
    cert.check("block-inside-set", inside);
    return cert;
}

inline Certificate run_jp_robust(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "exclude", "polys", "seqs", "trials", "amax",
                                    "summax"});
    auto A = parse_set(cfg);
    auto R = parse_polys(cfg.polys);
    auto L = parse_seqs(cfg.seqs);
    std::set<Nat> B;
    if (!cfg.exclude.empty())
        for (const auto& v : parse_nat_csv(cfg.exclude, "--exclude")) B.insert(v);
    Nat a_max = bound_or(cfg.amax, "100");
    Nat sum_max = bound_or(cfg.summax, "100000");
    auto report = jp_minus_finite_demo([&](const Nat& v) { return A.contains(v); }, B, R, L,
                                       cfg.trials, a_max, sum_max);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"trials", cfg.trials},
                                                 {"amax", nat_json(a_max)},
                                                 {"summax", nat_json(sum_max)}})},
                  {"statement", "escalating-minH witnesses for the set whose blocks eventually "
                                "avoid the excluded finite set"}};

    nlohmann::json sub;
    auto blocks = nlohmann::json::array();
    for (const auto& b : report.subsystem.blocks) blocks.push_back(b);
    sub["blocks"] = blocks;
    auto derived = nlohmann::json::array();
    for (const auto& row : report.subsystem.derived_members) derived.push_back(nats_json(row));
    sub["derived"] = derived;
    cert.evidence["subsystem"] = sub;

    auto trials_json = nlohmann::json::array();
    for (const auto& t : report.trials) {
        nlohmann::json tj;
        tj["n"] = t.n;
        tj["a"] = nat_json(t.a);
        tj["H"] = mask_json(t.h);
        tj["block"] = nats_json(t.block);
        tj["hits"] = nats_json(t.hits);
        tj["rowSums"] = nats_json(t.row_sums);
        trials_json.push_back(tj);
    }
    cert.evidence["trials"] = trials_json;
    cert.evidence["blocksMeetingExcluded"] = report.blocks_meeting_b;

    SeqList derived_list = report.subsystem.derived();
    bool minh_ok = true, inside = true, hits_ok = true;
    std::size_t meet = 0;
    for (const auto& t : report.trials) {
        minh_ok = minh_ok && static_cast<std::size_t>(mask_min(t.h)) > t.n;
        auto block = srl_block(R, derived_list, {t.a, t.h});
        inside = inside && std::equal(block.begin(), block.end(), t.block.begin(), t.block.end());
        std::vector<Nat> hits;
        for (const auto& v : block) {
            inside = inside && A.contains(v);
            if (B.contains(v)) hits.push_back(v);
        }
        hits_ok = hits_ok && hits == t.hits;
        if (!hits.empty()) ++meet;
    }
    cert.check("minH-escalates-past-trial-index", minh_ok);
    cert.check("blocks-recomputed-inside-set", inside);
    cert.check("excluded-hits-recomputed", hits_ok && meet == report.blocks_meeting_b);
    return cert;
}

inline Certificate run_pp_search(const RunConfig& cfg, bool anchored) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "polys", "amax", "xmax"});
    auto A = parse_set(cfg);
    auto R = parse_polys(cfg.polys);
    Nat a_max = bound_or(cfg.amax, "64");
    Nat x_max = bound_or(cfg.xmax, "64");
    auto member = [&](const Nat& v) { return A.contains(v); };
    cert.claim = {{"command", cfg.command},
                  {"restricted_to",
                   bounds_json({{"amax", nat_json(a_max)}, {"xmax", nat_json(x_max)}})},
                  {"statement", anchored ? "an anchored witness: b in the set with S_R(b, x) "
                                           "inside it"
                                         : "a least (a, x) with S_R(a, x) inside the set"}};
    cert.evidence["polys"] = poly_family_json(R);

    if (anchored) {
        auto w = pp_witness_anchored(member, R, a_max, x_max);
        if (!w) {
            cert.outcome = "exhausted";
            return cert;
        }
        auto block = sr_block(R, w->b, w->x);
        cert.evidence["witness"] = {{"b", nat_json(w->b)},
                                    {"x", nat_json(w->x)},
                                    {"innerA", nat_json(w->inner_a)}};
        cert.evidence["block"] = nat_set_json(block);
        cert.check("anchor-inside-set", A.contains(w->b));
        bool inside = true;
        for (const auto& f : R.members()) inside = inside && A.contains(w->b + f.eval(w->x));
        cert.check("block-inside-set", inside);
        cert.check("anchor-produced-by-reduction", w->b == w->inner_a + R.least().eval(w->x));
    } else {
        auto w = pp_witness(member, R, a_max, x_max);
        if (!w) {
            cert.outcome = "exhausted";
            return cert;
        }
        auto block = sr_block(R, w->first, w->second);
        cert.evidence["witness"] = {{"a", nat_json(w->first)}, {"x", nat_json(w->second)}};
        cert.evidence["block"] = nat_set_json(block);
        bool inside = true;
        for (const auto& f : R.members())
            inside = inside && A.contains(w->first + f.eval(w->second));
        cert.check("block-inside-set", inside);
    }
    return cert;
}

inline Certificate run_pp_split(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "parts", "degree-max", "coeff-max", "size-max",
                                    "amax", "xmax", "retry-cap"});
    auto A = parse_set(cfg);
    PpSplitOptions opt;
    opt.degree_max = cfg.degree_max;
    opt.coeff_max = cfg.coeff_max;
    opt.size_max = cfg.size_max;
    opt.a_max = bound_or(cfg.amax, "64");
    opt.x_max = bound_or(cfg.xmax, "64");
    opt.escalation_cap = cfg.retry_cap;
    auto member = [&](const Nat& v) { return A.contains(v); };
    auto r = pp_split(member, cfg.parts, opt);

    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"parts", cfg.parts},
                                                 {"degree-max", cfg.degree_max},
                                                 {"coeff-max", cfg.coeff_max},
                                                 {"size-max", cfg.size_max},
                                                 {"amax", nat_json(opt.a_max)},
                                                 {"xmax", nat_json(opt.x_max)}})},
                  {"statement", "disjoint block unions with a covering block in every part for "
                                "every enumerated polynomial family"}};

    auto ledger = nlohmann::json::array();
    for (const auto& e : r.ledger) {
        nlohmann::json ej;
        ej["family"] = poly_family_json(e.family);
        ej["a"] = nat_json(e.a);
        ej["x"] = nat_json(e.x);
        ej["block"] = nats_json(e.block);
        if (e.part) ej["part"] = *e.part;
        ledger.push_back(std::move(ej));
    }
    cert.evidence["ledger"] = capped_array(std::move(ledger));
    cert.evidence["demandCount"] = r.demand_count;

    bool recomputed = true, inside = true, disjoint = true;
    std::set<Nat> seen;
    for (const auto& e : r.ledger) {
        auto block = sr_block(e.family, e.a, e.x);
        recomputed = recomputed &&
                     std::equal(block.begin(), block.end(), e.block.begin(), e.block.end());
        for (const auto& v : block) {
            inside = inside && A.contains(v);
            disjoint = disjoint && seen.insert(v).second;
        }
    }
    cert.check("blocks-recomputed-from-witnesses", recomputed);
    cert.check("blocks-inside-set", inside);
    cert.check("blocks-pairwise-disjoint", disjoint);

    bool covered = true;
    for (std::size_t j = 0; j < r.demand_count && covered; ++j) {
        const auto& R = r.ledger[j].family;
        for (std::size_t p = 0; p < cfg.parts; ++p) {
            bool part_ok = false;
            for (const auto& e : r.ledger) {
                if (!e.part || *e.part != p || !e.family.is_superset_of(R)) continue;
                part_ok = true;
                for (const auto& v : sr_block(R, e.a, e.x))
                    part_ok = part_ok && r.parts[p].contains(v) && A.contains(v);
                if (part_ok) break;
            }
            covered = covered && part_ok;
        }
    }
    cert.check("every-part-covers-every-family", covered);
    return cert;
}

inline Certificate run_pvdw(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "polys", "ys", "amax"});
    auto A = parse_set(cfg);
    auto R = parse_polys(cfg.polys);
    auto ys = parse_nat_csv(cfg.ys, "--ys");
    Nat a_max = bound_or(cfg.amax, "50");
    auto w = pvdw_search([&](const Nat& v) { return A.contains(v); }, R, ys, a_max);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to",
                   bounds_json({{"amax", nat_json(a_max)}, {"sequence", ys.size()}})},
                  {"statement", "an (a, H) with a + f(sum over H) inside the set for every "
                                "family member"}};
    cert.evidence["polys"] = poly_family_json(R);
    cert.evidence["ys"] = nats_json(ys);
    if (!w) {
        cert.outcome = "exhausted";
        return cert;
    }
    cert.evidence["witness"] = {{"a", nat_json(w->first)}, {"H", mask_json(w->second)}};
    Nat sum = 0;
    for (int t : mask_indices(w->second)) sum += ys[static_cast<std::size_t>(t - 1)];
    bool inside = true;
    auto images = nlohmann::json::array();
    for (const auto& f : R.members()) {
        Nat v = w->first + f.eval(sum);
        images.push_back(nat_json(v));
        inside = inside && A.contains(v);
    }
    cert.evidence["images"] = images;
    cert.check("all-images-inside-set", inside);
    return cert;
}

inline Certificate run_pws_check(const RunConfig& cfg) {
    Certificate cert;
    cert.command = cfg.command;
    cert.config = config_json(cfg, {"set", "gap", "window", "horizon"});
    auto A = parse_set(cfg);
    auto member = [&](const Nat& v) { return A.contains(v); };
    auto verdict = pws_check(member, cfg.gap, cfg.window, cfg.horizon);
    cert.claim = {{"command", cfg.command},
                  {"restricted_to", bounds_json({{"gap", cfg.gap},
                                                 {"window", cfg.window},
                                                 {"horizon", cfg.horizon}})},
                  {"statement", "a run of members with bounded gaps spanning the window, "
                                "within the horizon"}};
    cert.evidence["pass"] = verdict.pass;
    if (verdict.pass) {
        cert.evidence["windowStart"] = nat_json(verdict.window_start);
        cert.evidence["windowEnd"] = nat_json(verdict.window_end);
        // rescan the claimed window
        bool ok = member(verdict.window_start) && member(verdict.window_end) &&
                  verdict.window_end - verdict.window_start >= Nat(cfg.window);
        Nat prev = verdict.window_start;
        for (Nat v = verdict.window_start + 1; v <= verdict.window_end; ++v) {
            if (!member(v)) continue;
            ok = ok && v - prev <= Nat(cfg.gap);
            prev = v;
        }
        ok = ok && prev == verdict.window_end;
        cert.check("window-gaps-verified", ok);
    } else {
        // independent rescan: no qualifying run anywhere in the horizon
        bool none = true;
        std::optional<Nat> run_start, prev;
        for (std::uint64_t i = 1; i <= cfg.horizon; ++i) {
            Nat v(i);
            if (!member(v)) continue;
            if (prev && v - *prev > Nat(cfg.gap)) run_start.reset();
            if (!run_start) run_start = v;
            prev = v;
            if (v - *run_start >= Nat(cfg.window)) none = false;
        }
        cert.check("no-qualifying-window-within-horizon", none);
    }
    return cert;
}

}  // namespace cli_detail

/// Executes one configured run and returns the certificate. Usage errors
/// throw; module-level exhaustion and verification failures come back as
/// certificate outcomes.
inline Certificate run(const RunConfig& cfg) {
    using namespace cli_detail;

    auto with_semigroup = [&](auto&& fn) -> Certificate {
        const std::string& key = cfg.semigroup;
        if (key == "nat" || key.starts_with("nat(")) {
            std::uint64_t horizon = 1u << 16;
            if (key.starts_with("nat(")) {
                if (!key.ends_with(")")) throw UsageError("bad semigroup key: " + key);
                horizon = static_cast<std::uint64_t>(parse_nat(key.substr(4, key.size() - 5)));
            }
            return fn(NatAdd(horizon));
        }
        if (key.starts_with("ex(") && key.ends_with(")")) {
            auto inner = key.substr(3, key.size() - 4);
            auto parts = split_csv(inner);
            if (parts.size() != 2) throw UsageError("expected ex(levelBound,idxBound)");
            return fn(ExSemigroup(static_cast<std::uint32_t>(parse_nat(parts[0])),
                                  static_cast<std::uint64_t>(parse_nat(parts[1]))));
        }
        if (key.starts_with("max(") && key.ends_with(")")) {
            return fn(MaxFixture(static_cast<std::size_t>(parse_nat(key.substr(4, key.size() - 5)))));
        }
        if (key.starts_with("leftproj(") && key.ends_with(")")) {
            return fn(
                LeftProjFixture(static_cast<std::size_t>(parse_nat(key.substr(9, key.size() - 10)))));
        }
        throw UsageError("unknown semigroup key: " + key);
    };

    const std::string& c = cfg.command;
    try {
        if (c == "law-check")
            return with_semigroup([&](const auto& s) { return run_law_check(s, cfg); });
        if (c == "cancel-profile")
            return with_semigroup([&](const auto& s) { return run_cancel_profile(s, cfg); });
        if (c == "fs") return with_semigroup([&](const auto& s) { return run_fs(s, cfg); });
        if (c == "ip-search") return run_ip_search(cfg);
        if (c == "ip-split")
            return with_semigroup([&](const auto& s) { return run_ip_split(s, cfg); });
        if (c == "ffs")
            return with_semigroup([&](const auto& s) { return run_ffs(s, cfg, false); });
        if (c == "ufs")
            return with_semigroup([&](const auto& s) { return run_ffs(s, cfg, true); });
        if (c == "ip-ad") return with_semigroup([&](const auto& s) { return run_ip_ad(s, cfg); });
        if (c == "cr-search") return run_cr_search(cfg);
        if (c == "cr-split") return run_cr_split(cfg);
        if (c == "jp-search") return run_jp_search(cfg);
        if (c == "jp-robust") return run_jp_robust(cfg);
        if (c == "pp-search") return run_pp_search(cfg, false);
        if (c == "pp-anchored") return run_pp_search(cfg, true);
        if (c == "pp-split") return run_pp_split(cfg);
        if (c == "pvdw") return run_pvdw(cfg);
        if (c == "pws-check") return run_pws_check(cfg);
        throw UsageError("unknown subcommand: " + c);
    } catch (const UfsError& e) {
        Certificate cert;
        cert.command = c;
        cert.config = config_json(cfg, {"semigroup", "generators", "outlen"});
        cert.outcome = "error";
        cert.error = {{"type", "verification"},
                      {"message", e.what()},
                      {"pair", {mask_json(e.h1), mask_json(e.h2)}}};
        return cert;
    } catch (const VerificationError& e) {
        Certificate cert;
        cert.command = c;
        cert.outcome = "error";
        cert.error = {{"type", "verification"}, {"message", e.what()}};
        return cert;
    } catch (const ExhaustionError& e) {
        Certificate cert;
        cert.command = c;
        cert.outcome = "exhausted";
        cert.error = {{"type", "exhaustion"}, {"message", e.what()}};
        return cert;
    }
}

inline std::string run_to_report(const RunConfig& cfg) {
    return dump_canonical(run(cfg).to_json());
}

}  // namespace largeness
