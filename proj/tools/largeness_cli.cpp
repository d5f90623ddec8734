#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "largeness/cli_runner.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("LARGENESS_LOG");
    return env ? std::atoi(env) : 0;
}

}  // namespace

int main(int argc, char** argv) {
    using largeness::RunConfig;

    CLI::App app{"largeness: witness searches, splitting constructions and brute-force "
                 "verification for combinatorial largeness notions at desk scale"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string set_path, out_path;

    app.add_option("--out", out_path, "write the JSON report here (default: stdout)");
    app.add_option("--seed", cfg.seed, "echoed into the report for reproducibility");

    auto opt_set = [&](CLI::App* sc) {
        sc->add_option("--set", set_path, "JSON set-spec file; omitted means all of N");
    };
    auto opt_sg = [&](CLI::App* sc) {
        sc->add_option("--semigroup", cfg.semigroup,
                       "nat | nat(horizon) | ex(levelBound,idxBound) | max(n) | leftproj(n)");
    };
    auto opt_gens = [&](CLI::App* sc) {
        sc->add_option("--generators", cfg.generators,
                       "comma-separated elements (level.idx syntax for ex)")
            ->required();
    };
    auto opt_polys = [&](CLI::App* sc) {
        sc->add_option("--polys", cfg.polys, "JSON array of coefficient arrays [c1,c2,...]")
            ->required();
    };
    auto opt_seqs = [&](CLI::App* sc) {
        sc->add_option("--seqs", cfg.seqs, "JSON array of equal-length positive sequences")
            ->required();
    };
    auto opt_amax = [&](CLI::App* sc) { sc->add_option("--amax", cfg.amax, "witness bound on a"); };

    auto* law = app.add_subcommand("law-check", "brute-force semigroup law reports");
    opt_sg(law);
    law->add_option("--sample", cfg.sample, "enumeration prefix length");

    auto* cancel = app.add_subcommand("cancel-profile", "left solution set size histogram");
    opt_sg(cancel);
    cancel->add_option("--sample", cfg.sample, "enumeration prefix length");

    auto* fs = app.add_subcommand("fs", "complete finite-sums table of a generator sequence");
    opt_sg(fs);
    opt_gens(fs);
    fs->add_option("--depth", cfg.depth, "depth cap (default 16)");

    auto* ipsearch = app.add_subcommand("ip-search", "depth-first IP witness search");
    opt_set(ipsearch);
    ipsearch->add_option("--depth", cfg.depth, "witness length");
    ipsearch->add_option("--horizon", cfg.horizon, "candidate enumeration horizon");

    auto* ipsplit = app.add_subcommand("ip-split", "greedy disjoint IP splitting from a pool");
    opt_sg(ipsplit);
    opt_gens(ipsplit);
    ipsplit->add_option("--parts", cfg.parts, "number of systems");
    ipsplit->add_option("--outlen", cfg.outlen, "generators per system");

    auto* ffs = app.add_subcommand("ffs", "sum subsystem with finiteness of finite sums");
    opt_sg(ffs);
    opt_gens(ffs);
    ffs->add_option("--outlen", cfg.outlen, "subsystem length");

    auto* ufs = app.add_subcommand("ufs", "sum subsystem with uniqueness of finite sums");
    opt_sg(ufs);
    opt_gens(ufs);
    ufs->add_option("--outlen", cfg.outlen, "subsystem length");

    auto* ipad = app.add_subcommand("ip-ad", "almost disjoint finite-sums truncations");
    opt_sg(ipad);
    opt_gens(ipad);
    ipad->add_option("--branches", cfg.branches, "number of branches");
    ipad->add_option("--truncation", cfg.truncation, "codes per branch");

    auto* crsearch = app.add_subcommand("cr-search", "least S_L(a,H) witness inside a set");
    opt_set(crsearch);
    opt_seqs(crsearch);
    opt_amax(crsearch);

    auto* crsplit = app.add_subcommand("cr-split", "greedy combinatorially-rich splitting");
    opt_set(crsplit);
    crsplit->add_option("--nmax", cfg.nmax, "largest family size");
    crsplit->add_option("--entry-horizon", cfg.entry_horizon, "largest sequence entry");
    crsplit->add_option("--parts", cfg.parts, "number of parts");
    crsplit->add_option("--mode", cfg.mode, "disjoint | almost-disjoint");
    crsplit->add_option("--schedule", cfg.schedule, "comma-separated r_n (default 2^n + 1)");
    opt_amax(crsplit);
    crsplit->add_option("--retry-cap", cfg.retry_cap, "translation ladder length");

    auto* jpsearch = app.add_subcommand("jp-search", "least S_{R,L}(a,H) witness inside a set");
    opt_set(jpsearch);
    opt_polys(jpsearch);
    opt_seqs(jpsearch);
    jpsearch->add_option("--minh", cfg.minh, "require min H beyond this floor");
    opt_amax(jpsearch);
    jpsearch->add_option("--summax", cfg.summax, "bound on every row sum over H");

    auto* jprobust = app.add_subcommand("jp-robust", "finite-deletion robustness demo");
    opt_set(jprobust);
    opt_polys(jprobust);
    opt_seqs(jprobust);
    jprobust->add_option("--exclude", cfg.exclude, "comma-separated finite deletion set");
    jprobust->add_option("--trials", cfg.trials, "number of escalating witnesses");
    opt_amax(jprobust);
    jprobust->add_option("--summax", cfg.summax, "bound on every row sum over H");

    auto* ppsearch = app.add_subcommand("pp-search", "least S_R(a,x) witness inside a set");
    opt_set(ppsearch);
    opt_polys(ppsearch);
    opt_amax(ppsearch);
    ppsearch->add_option("--xmax", cfg.xmax, "witness bound on x");

    auto* ppanch = app.add_subcommand("pp-anchored", "anchored S_R witness with b inside the set");
    opt_set(ppanch);
    opt_polys(ppanch);
    opt_amax(ppanch);
    ppanch->add_option("--xmax", cfg.xmax, "witness bound on x");

    auto* ppsplit = app.add_subcommand("pp-split", "greedy PP-rich splitting");
    opt_set(ppsplit);
    ppsplit->add_option("--parts", cfg.parts, "number of parts");
    ppsplit->add_option("--degree-max", cfg.degree_max, "polynomial degree bound");
    ppsplit->add_option("--coeff-max", cfg.coeff_max, "polynomial coefficient bound");
    ppsplit->add_option("--size-max", cfg.size_max, "family size bound");
    opt_amax(ppsplit);
    ppsplit->add_option("--xmax", cfg.xmax, "witness bound on x");
    ppsplit->add_option("--retry-cap", cfg.retry_cap, "bound doublings on collision");

    auto* pvdw = app.add_subcommand("pvdw", "polynomial van der Waerden statement search");
    opt_set(pvdw);
    opt_polys(pvdw);
    pvdw->add_option("--ys", cfg.ys, "comma-separated sequence")->required();
    opt_amax(pvdw);

    auto* pws = app.add_subcommand("pws-check", "piecewise syndeticity heuristic");
    opt_set(pws);
    pws->add_option("--gap", cfg.gap, "largest allowed gap");
    pws->add_option("--window", cfg.window, "required window span");
    pws->add_option("--horizon", cfg.horizon, "scan horizon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!set_path.empty()) {
        std::ifstream in(set_path);
        if (!in) {
            std::cerr << "error: cannot open set spec file " << set_path << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        cfg.set_text = buf.str();
    }

    try {
        if (log_level() > 0) std::cerr << "largeness: running " << cfg.command << "\n";
        auto cert = largeness::run(cfg);
        auto text = largeness::dump_canonical(cert.to_json());
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open report destination " << out_path << "\n";
                return 2;
            }
            out << text;
            if (!out) {
                std::cerr << "error: failed writing report to " << out_path << "\n";
                return 2;
            }
        }
        if (log_level() > 0) std::cerr << "largeness: outcome " << cert.outcome << "\n";
        return cert.exit_code();
    } catch (const largeness::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const largeness::SetSpecError& e) {
        std::cerr << "set spec error: " << e.what() << "\n";
        return 2;
    } catch (const largeness::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
