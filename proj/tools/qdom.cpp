// Command-line workbench: validation, analysis, constructions, verification
// suites and DOT export for quantale-valued ordered structures.
//
// Exit codes: 0 pass, 1 mathematical failure (axiom/property violation),
// 2 input or gate error (parse error, unknown object, precondition refusal),
// 3 suite completed with sampled (budget-limited) evidence only.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qdom/harness.hpp"
#include "qdom/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSampled = 3;

struct Workspace {
    fs::path dir;

    fs::path pathOf(const std::string& name) const { return dir / (name + ".json"); }

    qdom::LoadedObject get(const std::string& name) const {
        auto p = pathOf(name);
        if (!fs::exists(p))
            throw qdom::StructuralError("no object named '" + name + "' in workspace " +
                                        dir.string());
        return qdom::loadFile(p.string());
    }

    void putJson(const std::string& name, const json& j) const {
        fs::create_directories(dir);
        qdom::saveFile(pathOf(name).string(), j);
    }
};

void printReport(const std::string& title, const qdom::ValidationReport& rep) {
    std::cout << title << ":\n" << rep.summary();
}

/// Kind-appropriate validators; returns the process exit code.
int validateObject(const qdom::LoadedObject& obj) {
    bool pass = true;
    if (const auto* q = std::get_if<qdom::QuantalePtr>(&obj)) {
        auto laws = (*q)->validate();
        printReport("quantale laws", laws);
        pass = laws.allPass();
        if (pass) {
            auto res = (*q)->checkResiduationLaws();
            printReport("residuation laws", res);
            pass = res.allPass();
        }
    } else if (const auto* P = std::get_if<qdom::LOrderedSet>(&obj)) {
        auto laws = P->validate();
        printReport("L-order laws", laws);
        pass = laws.allPass();
    } else if (const auto* S = std::get_if<qdom::ClosureSpace>(&obj)) {
        auto gc = qdom::validateGeneralized(*S);
        std::cout << "generalized closure: "
                  << (gc.pass ? "pass" : "FAIL " + gc.axiom + " [" + gc.witness + "]") << '\n';
        pass = gc.pass;
        if (gc.pass) {
            auto it = qdom::isInterpolative(*S);
            std::cout << "interpolative: "
                      << (it.pass ? "pass" : "FAIL " + it.axiom + " [" + it.witness + "]")
                      << '\n';
            pass = it.pass;
            auto lc = qdom::isLClosureSpace(*S);
            std::cout << "L-closure space: " << (lc.pass ? "yes" : "no (" + lc.axiom + ")")
                      << '\n';
        }
    } else {
        const auto& R = std::get<qdom::ApproxRelation>(obj);
        auto ap = qdom::validateApproximable(R);
        std::cout << "approximable: "
                  << (ap.pass ? "pass" : "FAIL " + ap.axiom + " [" + ap.witness + "]") << '\n';
        pass = ap.pass;
    }
    return pass ? kExitPass : kExitMathFailure;
}

int analyzeOrder(const qdom::LOrderedSet& P) {
    std::cout << "L-ordered set '" << P.id << "' over quantale " << P.L->name() << ", |P| = "
              << P.size() << '\n';
    auto an = qdom::analyzeDomain(P);
    std::cout << "L-dcpo: " << (an.dcpo.pass ? "yes" : "no (" + an.dcpo.witness + ")") << '\n';
    if (!an.dcpo.pass) return kExitPass;
    std::cout << "continuous: " << (an.continuous.pass ? "yes" : "no") << '\n';
    std::cout << "algebraic: " << (an.algebraic.pass ? "yes" : "no") << '\n';
    std::cout << "K(P) = {";
    for (std::size_t i = 0; i < an.compactPoints.size(); ++i)
        std::cout << (i ? ", " : "") << P.points[an.compactPoints[i]];
    std::cout << "}\n";
    std::cout << "way-below subsets:\n";
    for (std::size_t x = 0; x < P.size(); ++x)
        std::cout << "  wb(" << P.points[x] << ") = "
                  << qdom::renderSubset(P, an.wayBelowTable[x]) << '\n';
    if (an.continuous.pass) {
        try {
            auto S = qdom::closureOfDomain(P);
            auto fam = qdom::dirClosedSets(S);
            std::cout << "directed closed sets of the induced space (" << fam.carrier.size()
                      << "):\n";
            for (const auto& pt : fam.order.points) std::cout << "  " << pt << '\n';
        } catch (const qdom::CapExceeded& e) {
            std::cout << "warning: directed-closed listing omitted (" << e.what() << ")\n";
        }
    }
    return kExitPass;
}

int analyzeSpace(const qdom::ClosureSpace& S) {
    std::cout << "closure space '" << S.id << "' over quantale " << S.L->name() << ", |X| = "
              << S.size() << '\n';
    auto gc = qdom::validateGeneralized(S);
    std::cout << "generalized: " << (gc.pass ? "yes" : "no (" + gc.axiom + ")") << '\n';
    if (!gc.pass) return kExitPass;
    auto it = qdom::isInterpolative(S);
    std::cout << "interpolative: " << (it.pass ? "yes" : "no (" + it.axiom + ")") << '\n';
    auto lc = qdom::isLClosureSpace(S);
    std::cout << "L-closure space: " << (lc.pass ? "yes" : "no (" + lc.axiom + ")") << '\n';
    if (!it.pass) return kExitPass;
    try {
        auto fam = qdom::dirClosedSets(S);
        std::cout << "directed closed sets (" << fam.carrier.size() << "):\n";
        for (const auto& pt : fam.order.points) std::cout << "  " << pt << '\n';
        auto an = qdom::analyzeDomain(fam.order);
        std::cout << "carrier L-dcpo: " << (an.dcpo.pass ? "yes" : "no") << ", continuous: "
                  << (an.continuous.pass ? "yes" : "no") << ", algebraic: "
                  << (an.algebraic.pass ? "yes" : "no") << '\n';
    } catch (const qdom::CapExceeded& e) {
        std::cout << "warning: directed-closed listing omitted (" << e.what() << ")\n";
    }
    return kExitPass;
}

int cmdAnalyze(const Workspace& ws, const std::string& name) {
    auto obj = ws.get(name);
    if (const auto* q = std::get_if<qdom::QuantalePtr>(&obj)) {
        const auto& L = **q;
        std::cout << "quantale '" << L.name() << "', |L| = " << L.size() << ", unit = "
                  << L.label(L.unit()) << ", integral: " << (L.isIntegral() ? "yes" : "no")
                  << '\n';
        std::cout << "bottom = " << L.label(L.bottom()) << ", top = " << L.label(L.top())
                  << '\n';
        return kExitPass;
    }
    if (const auto* P = std::get_if<qdom::LOrderedSet>(&obj)) return analyzeOrder(*P);
    if (const auto* S = std::get_if<qdom::ClosureSpace>(&obj)) return analyzeSpace(*S);
    const auto& R = std::get<qdom::ApproxRelation>(obj);
    auto ap = qdom::validateApproximable(R);
    std::cout << "relation " << R.source.id << " -> " << R.target.id << ": "
              << (ap.pass ? "approximable" : "NOT approximable (" + ap.axiom + ")") << '\n';
    return kExitPass;
}

qdom::LOrderedSet getOrder(const Workspace& ws, const std::string& name) {
    auto obj = ws.get(name);
    if (const auto* P = std::get_if<qdom::LOrderedSet>(&obj)) return *P;
    throw qdom::StructuralError("'" + name + "' is not an L-ordered set");
}

qdom::ClosureSpace getSpace(const Workspace& ws, const std::string& name) {
    auto obj = ws.get(name);
    if (const auto* S = std::get_if<qdom::ClosureSpace>(&obj)) return *S;
    throw qdom::StructuralError("'" + name + "' is not a closure space");
}

qdom::ApproxRelation getRelation(const Workspace& ws, const std::string& name) {
    auto obj = ws.get(name);
    if (const auto* R = std::get_if<qdom::ApproxRelation>(&obj)) return *R;
    throw qdom::StructuralError("'" + name + "' is not an approximable relation");
}

int cmdExportDot(const Workspace& ws, const std::string& name, const std::string& outPath) {
    qdom::LOrderedSet P = getOrder(ws, name);
    if (P.size() > 64)
        throw qdom::StructuralError("export-dot supports at most 64 points, got " +
                                    std::to_string(P.size()));
    const auto& q = *P.L;
    const std::size_t n = P.size();
    // u-cut digraph, then transitive reduction (the cut is a partial order
    // thanks to antisymmetry, so the reduction is unique).
    std::vector<bool> cut(n * n, false);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            cut[x * n + y] = x != y && q.leq(q.unit(), P.ord(x, y));
    std::vector<bool> reduced = cut;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (cut[x * n + y])
                for (std::size_t z = 0; z < n; ++z)
                    if (cut[x * n + z] && cut[z * n + y]) reduced[x * n + y] = false;
    std::ofstream out(outPath);
    if (!out) throw qdom::StructuralError("cannot open output file " + outPath);
    out << "digraph \"" << P.id << "\" {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < n; ++x)
        out << "  n" << x << " [label=\"" << P.points[x] << "\"];\n";
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (reduced[x * n + y]) {
                out << "  n" << x << " -> n" << y;
                if (P.ord(x, y) != q.top())
                    out << " [label=\"" << q.label(P.ord(x, y)) << "\"]";
                out << ";\n";
            }
    out << "}\n";
    std::cout << "wrote " << outPath << '\n';
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model workbench for quantale-valued domain theory"};
    app.require_subcommand(1);

    std::string wsDir = "workspace";
    app.add_option("--workspace", wsDir, "directory holding registered objects");
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for scan kernels");
    std::size_t capOverride = 0;
    app.add_option("--cap", capOverride, "override the subset-enumeration cap");

    // validate
    auto* vCmd = app.add_subcommand("validate", "run the kind-appropriate validators on a file");
    std::string vFile;
    vCmd->add_option("file", vFile, "definition file (JSON)")->required();

    // load
    auto* lCmd = app.add_subcommand("load", "register a definition file in the workspace");
    std::string lFile, lName;
    lCmd->add_option("file", lFile)->required();
    lCmd->add_option("--as", lName, "registry name")->required();

    // analyze
    auto* aCmd = app.add_subcommand("analyze", "analysis report for a registered object");
    std::string aName;
    aCmd->add_option("name", aName)->required();

    // construct
    auto* cCmd = app.add_subcommand("construct", "derive and register a new object");
    std::string cKind, cA, cB, cAs, cPoints, cMap;
    cCmd->add_option("kind", cKind,
                     "closure-of-domain | closure-of-algebraic | restrict | compose | theta")
        ->required();
    cCmd->add_option("args", cA, "first argument (registered name)")->required();
    cCmd->add_option("arg2", cB, "second argument (registered name), when applicable");
    cCmd->add_option("--as", cAs, "name for the result")->required();
    cCmd->add_option("--points", cPoints, "comma-separated point labels (restrict)");
    cCmd->add_option("--map", cMap, "comma-separated target indices of a Scott map (theta)");

    // suite
    auto* sCmd = app.add_subcommand("suite", "run a named verification suite");
    std::string sName;
    sCmd->add_option("name", sName)->required();
    qdom::GenConfig cfg;
    sCmd->add_option("--seed", cfg.seed, "generator seed (fixed default, never wall clock)");
    sCmd->add_option("--instances", cfg.instances, "number of generated instances");
    sCmd->add_option("--quantale", cfg.quantaleId, "fixture quantale id");
    sCmd->add_option("--min-points", cfg.minPoints, "minimum carrier size");
    sCmd->add_option("--max-points", cfg.maxPoints, "maximum carrier size");
    sCmd->add_option("--budget", cfg.budget, "exhaustive-enumeration budget");
    std::string sOut;
    sCmd->add_option("-o,--output", sOut, "machine-readable report path");

    // export-dot
    auto* eCmd = app.add_subcommand("export-dot", "u-cut Hasse diagram of an L-ordered set");
    std::string eName, eOut;
    eCmd->add_option("name", eName)->required();
    eCmd->add_option("-o,--output", eOut)->required();

    CLI11_PARSE(app, argc, argv);

    qdom::worker_count() = workers;
    if (capOverride > 0) {
        qdom::caps().enumeration = capOverride;
        qdom::caps().pair_enumeration = capOverride;
    }
    Workspace ws{fs::path(wsDir)};

    try {
        if (vCmd->parsed()) return validateObject(qdom::loadFile(vFile));

        if (lCmd->parsed()) {
            std::ifstream in(lFile);
            if (!in) throw qdom::StructuralError("cannot open file: " + lFile);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw qdom::StructuralError(std::string("JSON parse error: ") + e.what());
            }
            auto obj = qdom::loadAny(j);  // structural gate
            ws.putJson(lName, j);
            std::cout << "registered " << qdom::kindOf(obj) << " as '" << lName << "'\n";
            return kExitPass;
        }

        if (aCmd->parsed()) return cmdAnalyze(ws, aName);

        if (cCmd->parsed()) {
            json result;
            if (cKind == "closure-of-domain") {
                result = qdom::toJson(qdom::closureOfDomain(getOrder(ws, cA)));
            } else if (cKind == "closure-of-algebraic") {
                result = qdom::toJson(qdom::closureOfAlgebraic(getOrder(ws, cA)));
            } else if (cKind == "restrict") {
                auto S = getSpace(ws, cA);
                if (cPoints.empty())
                    throw qdom::StructuralError("restrict needs --points a,b,...");
                std::vector<std::size_t> Y;
                std::stringstream ss(cPoints);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    int i = S.indexOf(tok);
                    Y.push_back(static_cast<std::size_t>(i));
                }
                result = qdom::toJson(qdom::restrictToSubspace(S, Y, S.id + "|" + cAs));
            } else if (cKind == "compose") {
                auto outer = getRelation(ws, cA);
                auto inner = getRelation(ws, cB);
                result = qdom::toJson(qdom::composeRelations(outer, inner));
            } else if (cKind == "theta") {
                auto X = getSpace(ws, cA);
                auto Y = getSpace(ws, cB);
                if (cMap.empty()) throw qdom::StructuralError("theta needs --map i,j,...");
                std::vector<std::size_t> psi;
                std::stringstream ss(cMap);
                std::string tok;
                while (std::getline(ss, tok, ',')) psi.push_back(std::stoul(tok));
                auto cx = qdom::dirClosedSets(X);
                auto cy = qdom::dirClosedSets(Y);
                result = qdom::toJson(qdom::thetaOf(psi, X, Y, cx, cy));
            } else {
                throw qdom::StructuralError("unknown construct kind '" + cKind + "'");
            }
            ws.putJson(cAs, result);
            std::cout << "registered " << result["kind"].get<std::string>() << " as '" << cAs
                      << "'\n";
            return kExitPass;
        }

        if (sCmd->parsed()) {
            qdom::SuiteReport rep = qdom::runSuite(sName, cfg);
            std::cout << rep.toText();
            std::string outPath =
                sOut.empty() ? (ws.dir / ("suite-" + sName + ".json")).string() : sOut;
            fs::create_directories(fs::path(outPath).parent_path().empty()
                                       ? fs::path(".")
                                       : fs::path(outPath).parent_path());
            std::ofstream out(outPath);
            out << rep.toJson();
            std::cout << "report: " << outPath << '\n';
            if (!rep.allPass()) return kExitMathFailure;
            return rep.anySampled() ? kExitSampled : kExitPass;
        }

        if (eCmd->parsed()) return cmdExportDot(ws, eName, eOut);
    } catch (const qdom::CapExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitSampled;
    } catch (const qdom::PreconditionError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitInputError;
    } catch (const qdom::StructuralError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
