// Acceptance gate: one pass/fail line per criterion. Usage:
//   qdom-acceptance <path-to-cli-binary> <path-to-fixtures-dir>
// Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>

#include "qdom/harness.hpp"
#include "qdom/io.hpp"

using namespace qdom;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool pass, double secs, double limitSecs,
            const std::string& detail = "") {
    bool ok = pass && secs <= limitSecs;
    if (!ok) ++failures;
    std::printf("criterion %2d (%s): %s  [%.2fs, limit %.0fs]%s%s\n", n, what.c_str(),
                ok ? "PASS" : "FAIL", secs, limitSecs, detail.empty() ? "" : "  ",
                detail.c_str());
    std::fflush(stdout);
}

struct CmdResult {
    int exitCode;
    std::string output;
};

CmdResult run(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    if (!p) return {-1, "popen failed"};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool noFailLines(const SuiteReport& rep) { return rep.allPass(); }

bool strictPass(const SuiteReport& rep) { return rep.allPass() && !rep.anySampled(); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <fixtures-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fx = argv[2];

    // 1. Quantale core laws, exhaustive, all four base fixtures.
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (const auto& id : {"boolean", "lukasiewicz-3", "goedel-3", "nonintegral-3"}) {
            auto L = fixtureQuantale(id);
            ok = ok && L->validate().allPass() && L->checkResiduationLaws().allPass();
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(1, "quantale core laws", ok, s, 1.0);
    }

    // 2. Boolean differential oracle, 50 seeded posets with |P| <= 5.
    {
        auto t0 = Clock::now();
        GenConfig cfg;
        cfg.quantaleId = "boolean";
        cfg.seed = 2024;
        cfg.minPoints = 1;
        cfg.maxPoints = 5;
        cfg.instances = 50;
        SuiteReport rep = runSuite("oracle", cfg);
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(2, "boolean differential oracle", strictPass(rep), s, 30.0);
    }

    // 3. wayBelow = wayBelowAlt on 30 seeded L-dcpos over three quantales.
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (const auto& id : {"boolean", "lukasiewicz-3", "goedel-3"}) {
            GenConfig cfg;
            cfg.quantaleId = id;
            cfg.seed = 101;
            cfg.minPoints = 2;
            cfg.maxPoints = 4;
            cfg.instances = 10;
            ok = ok && strictPass(runSuite("waybelow", cfg));
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(3, "way-below form agreement", ok, s, 120.0);
    }

    // 4+5. Interpolative spaces: directed closed sets form a continuous
    // L-dcpo with the canonical approximant, and the representation round
    // trip holds (both bundled in the rep1 suite lines).
    {
        auto t0 = Clock::now();
        GenConfig cfgB;
        cfgB.quantaleId = "boolean";
        cfgB.seed = 7;
        cfgB.maxPoints = 4;
        cfgB.instances = 20;
        SuiteReport rb = runSuite("rep1", cfgB);
        GenConfig cfgL;
        cfgL.quantaleId = "lukasiewicz-3";
        cfgL.seed = 7;
        cfgL.maxPoints = 3;
        cfgL.instances = 10;
        SuiteReport rl = runSuite("rep1", cfgL);
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        auto linesPass = [](const SuiteReport& r, const std::string& prefix) {
            bool seen = false, ok = true;
            for (const auto& l : r.lines)
                if (l.property.rfind(prefix, 0) == 0) {
                    seen = true;
                    ok = ok && l.status == "pass";
                }
            return seen && ok;
        };
        bool base = strictPass(rb) && strictPass(rl);
        report(4, "closed-set domains continuous + approximant", base, s, 300.0);
        report(5, "representation round trip (continuous)",
               base && linesPass(rb, "roundtrip") && linesPass(rl, "roundtrip"), 0.0, 300.0);
    }

    // 6. L-closure spaces: algebraic carrier, compact point closures, and
    // the algebraic representation round trip.
    {
        auto t0 = Clock::now();
        GenConfig cfgB;
        cfgB.quantaleId = "boolean";
        cfgB.seed = 13;
        cfgB.maxPoints = 4;
        cfgB.instances = 20;
        GenConfig cfgG;
        cfgG.quantaleId = "goedel-3";
        cfgG.seed = 13;
        cfgG.maxPoints = 3;
        cfgG.instances = 10;
        bool ok = strictPass(runSuite("rep2", cfgB)) && strictPass(runSuite("rep2", cfgG));
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(6, "algebraic representation", ok, s, 300.0);
    }

    // 7. Dense subspaces on integral fixtures, plus the integrality refusal
    // and the algebraicity re-verification (rep3 suite).
    {
        auto t0 = Clock::now();
        GenConfig cfg;
        cfg.quantaleId = "boolean";
        cfg.seed = 23;
        cfg.maxPoints = 4;
        cfg.instances = 15;
        bool ok = strictPass(runSuite("dense", cfg)) && strictPass(runSuite("rep3", cfg));
        GenConfig cfgG;
        cfgG.quantaleId = "goedel-3";
        cfgG.seed = 23;
        cfgG.maxPoints = 3;
        cfgG.instances = 8;
        ok = ok && strictPass(runSuite("dense", cfgG));
        bool refused = false;
        try {
            GenConfig bad;
            bad.quantaleId = "nonintegral-3";
            runSuite("dense", bad);
        } catch (const PreconditionError&) {
            refused = true;
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(7, "dense subspaces + integrality gate", ok && refused, s, 300.0);
    }

    // 8. Approximable relations: exhaustive tiny bijection plus 20 seeded
    // instances of the functor-law/round-trip battery.
    {
        auto t0 = Clock::now();
        GenConfig tiny;
        tiny.quantaleId = "boolean";
        tiny.seed = 31;
        tiny.minPoints = 1;
        tiny.maxPoints = 2;
        tiny.instances = 8;
        tiny.budget = 100000;
        SuiteReport tr = runSuite("equiv", tiny);
        bool tinyOk = strictPass(tr);
        GenConfig big;
        big.quantaleId = "boolean";
        big.seed = 37;
        big.minPoints = 2;
        big.maxPoints = 3;
        big.instances = 20;
        big.budget = 200000;
        SuiteReport br = runSuite("equiv", big);
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(8, "approximable-relation battery", tinyOk && noFailLines(br), s, 300.0,
               br.anySampled() ? "(larger instances include budget-sampled lines)" : "");
    }

    // 9. Determinism of machine-readable reports across runs and workers.
    {
        auto t0 = Clock::now();
        GenConfig cfg;
        cfg.quantaleId = "lukasiewicz-3";
        cfg.seed = 99;
        cfg.maxPoints = 3;
        cfg.instances = 6;
        std::string a = runSuite("waybelow", cfg).toJson();
        std::string b = runSuite("waybelow", cfg).toJson();
        int saved = worker_count();
        worker_count() = 4;
        std::string c = runSuite("waybelow", cfg).toJson();
        worker_count() = saved;
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(9, "report determinism (runs, workers 1 vs 4)", a == b && a == c, s, 120.0);
    }

    // 10. CLI contract: documented exit codes on shipped fixtures and a
    // witness naming the violated axiom on a corrupted fixture.
    {
        auto t0 = Clock::now();
        namespace fs = std::filesystem;
        fs::path ws = fs::temp_directory_path() / "qdom-acceptance-ws";
        fs::remove_all(ws);
        std::string W = " --workspace " + ws.string() + " ";
        bool ok = true;
        auto expect = [&](const std::string& args, int code, const std::string& needle = "") {
            CmdResult r = run(cli + W + args);
            bool good = r.exitCode == code &&
                        (needle.empty() || r.output.find(needle) != std::string::npos);
            if (!good) {
                ok = false;
                std::printf("    cli FAIL: `%s` -> exit %d (want %d)\n%s\n", args.c_str(),
                            r.exitCode, code, r.output.c_str());
            }
        };
        expect("validate " + fx + "/boolean.json", 0);
        expect("validate " + fx + "/lukasiewicz-3.json", 0);
        expect("validate " + fx + "/two-chain.json", 0);
        expect("validate " + fx + "/downset-space.json", 0);
        expect("validate " + fx + "/identity-relation.json", 0);
        expect("validate " + fx + "/corrupted-quantale.json", 1);
        expect("validate " + fx + "/corrupted-space.json", 1, "GC2");
        expect("validate " + fx + "/corrupted-relation.json", 1, "AP");
        expect("validate " + fx + "/malformed.json", 2);
        expect("validate " + fx + "/no-such-file.json", 2);
        expect("load " + fx + "/two-chain.json --as P", 0);
        expect("load " + fx + "/diamond.json --as D", 0);
        expect("analyze P", 0, "continuous: yes");
        expect("analyze D", 0);
        expect("analyze nobody", 2);
        expect("construct closure-of-domain P --as CP", 0);
        expect("construct closure-of-algebraic P --as AP", 0);
        expect("validate " + ws.string() + "/CP.json", 0);
        expect("construct restrict CP --points p1 --as CP1", 0);
        expect("construct restrict CP --points zzz --as CPbad", 2);
        expect("export-dot P -o " + ws.string() + "/p.dot", 0);
        expect("export-dot nobody -o " + ws.string() + "/x.dot", 2);
        expect("suite core --quantale lukasiewicz-3 --instances 3 --max-points 3", 0);
        expect("suite rep1 --seed 42 --instances 5 --max-points 3", 0);
        expect("suite dense --quantale nonintegral-3", 2);
        expect("suite no-such-suite", 2);
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        report(10, "CLI exit-code contract", ok, s, 300.0);
        fs::remove_all(ws);
    }

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
