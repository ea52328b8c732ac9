// Acceptance checks for the stable-matching suite: one line per criterion,
// "pass"/"FAIL" (plus one optional "skip"), exit 0 iff every gating criterion
// passes. Each check is self-contained and uses fixed seeds so a run is
// reproducible bit for bit.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "smti/asp.hpp"
#include "smti/cli.hpp"
#include "smti/encode.hpp"
#include "smti/errors.hpp"
#include "smti/gs.hpp"
#include "smti/io.hpp"
#include "smti/model.hpp"
#include "smti/oracle.hpp"
#include "smti/threedim.hpp"

using namespace smti;
using asp::Interpretation;
using asp::lit;

namespace {

constexpr std::array<double, 3> kProbs = {0.0, 0.3, 0.7};

std::string dataFile(const std::string& name) {
    return std::string(SMTI_TEST_DATA_DIR) + "/" + name;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

template <typename T>
std::vector<T> sorted(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    return values;
}

std::vector<std::string> positiveAtoms(const Interpretation& interp) {
    std::vector<std::string> atoms;
    for (const asp::Literal& l : interp)
        if (!l.negated) atoms.push_back(l.atom);
    return atoms;
}

// The two-sided matching named by an answer set's accept atoms.
Matching matchingFromAtoms(const Instance& inst, const Interpretation& interp) {
    std::vector<std::pair<int, int>> pairs;
    for (const asp::Literal& l : interp) {
        if (l.negated || l.atom.rfind("accept(", 0) != 0) continue;
        const std::string args = l.atom.substr(7, l.atom.size() - 8);
        const std::size_t comma = args.find(',');
        const PersonRef a = parsePersonRef(args.substr(0, comma));
        const PersonRef b = parsePersonRef(args.substr(comma + 1));
        if (a.side == Side::Man && b.side == Side::Woman)
            pairs.emplace_back(a.index, b.index);
    }
    return Matching::fromPairs(inst.menCount(), inst.womenCount(), pairs);
}

// The full answer set a stable matching must induce: every person proposes
// to everyone strictly better than their assignment plus the partner itself,
// matched pairs become accept atoms, singles self-accept.
Interpretation inducedAnswerSet(const Instance& inst, const Matching& mu) {
    std::vector<asp::Literal> lits;
    for (int i = 1; i <= inst.menCount(); ++i) {
        const PreferenceList& pl = inst.men[static_cast<std::size_t>(i) - 1];
        const int partner = mu.manPartner[static_cast<std::size_t>(i) - 1];
        const int bar = partner == 0 ? pl.selfRank() : pl.rankOfPartner(partner);
        for (int j : pl.acceptable())
            if (pl.rankOfPartner(j) < bar || j == partner)
                lits.push_back(lit("manpropose(" + encode::manName(i) + "," +
                                   encode::womanName(j) + ")"));
        lits.push_back(lit(partner == 0
                               ? "accept(" + encode::manName(i) + "," + encode::manName(i) + ")"
                               : "accept(" + encode::manName(i) + "," +
                                     encode::womanName(partner) + ")"));
    }
    for (int j = 1; j <= inst.womenCount(); ++j) {
        const PreferenceList& pl = inst.women[static_cast<std::size_t>(j) - 1];
        const int partner = mu.womanPartner[static_cast<std::size_t>(j) - 1];
        const int bar = partner == 0 ? pl.selfRank() : pl.rankOfPartner(partner);
        for (int m : pl.acceptable())
            if (pl.rankOfPartner(m) < bar || m == partner)
                lits.push_back(lit("womanpropose(" + encode::manName(m) + "," +
                                   encode::womanName(j) + ")"));
        if (partner == 0)
            lits.push_back(
                lit("accept(" + encode::womanName(j) + "," + encode::womanName(j) + ")"));
    }
    return asp::makeInterpretation(std::move(lits));
}

// Complete strict square instance: every list is ({1},...,{k},()).
Instance strictSquare(int k) {
    PreferenceList pl;
    for (int j = 1; j <= k; ++j) pl.groups.push_back({j});
    pl.groups.push_back({});
    Instance inst;
    inst.men.assign(static_cast<std::size_t>(k), pl);
    inst.women.assign(static_cast<std::size_t>(k), pl);
    return inst;
}

// Complete strict cube: all partner pairs in lexicographic order.
threedim::Instance3 strictCube(int k) {
    threedim::PairPreferenceList pl;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) pl.groups.push_back({{a, b}});
    pl.groups.push_back({});
    threedim::Instance3 inst;
    inst.men.assign(static_cast<std::size_t>(k), pl);
    inst.women.assign(static_cast<std::size_t>(k), pl);
    inst.children.assign(static_cast<std::size_t>(k), pl);
    return inst;
}

std::vector<std::string> matchingTexts(const std::vector<Matching>& ms) {
    std::vector<std::string> texts;
    for (const Matching& m : ms) texts.push_back(to_text(m));
    return texts;
}

// ---- criteria -------------------------------------------------------------

// 1. Enumerating the bundled fixture reproduces the golden file byte for
//    byte, in well under a second.
bool fixtureEnumeration(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"enumerate", dataFile("smti_2x3.smti")}, out, err);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    const std::string golden = readFile(dataFile("enumerate_2x3.txt"));
    detail = "3 matchings in " + std::to_string(elapsed) + " ms";
    return code == 0 && out.str() == golden && elapsed < 1000;
}

// 2. Optimization on the fixture hits the hand-computed optima exactly.
bool fixtureOptima(std::string& detail) {
    const Instance inst = fixtures::twoByThree();
    const std::string s1 = "m1-w3,m2-w1,w2-w2";
    const std::string s2 = "m1-w2,m2-w1,w3-w3";
    const std::string s3 = "m1-w1,m2-m2,w2-w2,w3-w3";
    const auto expect = [&](Criterion c, int value,
                            const std::vector<std::string>& texts) {
        const oracle::Optimum got = oracle::optimize(inst, c);
        return got.value == value && matchingTexts(got.matchings) == texts;
    };
    detail = "regret 2, sexeq 1, egalitarian 9, singles 1";
    return expect(Criterion::Regret, 2, {s1}) && expect(Criterion::SexEqual, 1, {s2, s1}) &&
           expect(Criterion::Egalitarian, 9, {s3, s2, s1}) &&
           expect(Criterion::Singles, 1, {s2, s1});
}

// 3. Over 200 seeded instances the propose/accept program's answer sets
//    biject with the brute-force stable matchings, including the exact
//    literal content each matching induces.
bool answerSetBijection(std::string& detail) {
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 4;
        const int p = 1 + (i / 4) % 4;
        const double ties = kProbs[static_cast<std::size_t>(i / 16) % 3];
        const double inc = kProbs[static_cast<std::size_t>(i / 48) % 3];
        const Instance inst = io::generateInstance(n, p, ties, inc, 1000 + i);

        const std::vector<Matching> stable = oracle::enumerateStable(inst);
        const std::vector<Interpretation> sets =
            asp::enumerateAnswerSets(encode::encodeSmti(inst), 64);
        if (sets.size() != stable.size()) return false;

        std::vector<std::string> got;
        for (const Interpretation& s : sets) {
            const Matching mu = matchingFromAtoms(inst, s);
            if (s != inducedAnswerSet(inst, mu)) return false;
            got.push_back(to_text(mu));
        }
        if (sorted(got) != sorted(matchingTexts(stable))) return false;
        ++checked;
    }
    detail = std::to_string(checked) + " instances, full literal content";
    return checked == 200;
}

// 4. The guess-and-check disjunctive program names exactly the same atom
//    sets as the propose/accept program.
bool disjunctiveCoincidence(std::string& detail) {
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + i % 3;
        const int p = 1 + (i / 3) % 3;
        const double ties = i % 2 == 0 ? 0.0 : 0.5;
        const double inc = (i / 9) % 2 == 0 ? 0.0 : 0.4;
        const Instance inst = io::generateInstance(n, p, ties, inc, 2000 + i);

        std::vector<std::vector<std::string>> normal;
        for (const Interpretation& s : asp::enumerateAnswerSets(encode::encodeSmti(inst), 64))
            normal.push_back(positiveAtoms(s));
        std::vector<std::vector<std::string>> disjunctive;
        for (const Interpretation& s :
             asp::enumerateAnswerSets(encode::encodeSmtiDisjunctive(inst), 128))
            disjunctive.push_back(positiveAtoms(s));
        if (sorted(normal) != sorted(disjunctive)) return false;
        ++checked;
    }
    detail = std::to_string(checked) + " instances";
    return checked == 50;
}

// 5. The propose/accept program is tight, so the models of its clausal
//    completion are exactly its answer sets.
bool completionModels(std::string& detail) {
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + i % 3;
        const int p = 1 + (i / 3) % 3;
        const double ties = i % 2 == 0 ? 0.0 : 0.5;
        const double inc = (i / 9) % 2 == 0 ? 0.0 : 0.4;
        const Instance inst = io::generateInstance(n, p, ties, inc, 2000 + i);

        const asp::Program program = encode::encodeSmti(inst);
        if (!asp::isTight(program)) return false;
        std::vector<std::vector<std::string>> fromSets;
        for (const Interpretation& s : asp::enumerateAnswerSets(program, 64))
            fromSets.push_back(positiveAtoms(s));
        const std::vector<std::vector<std::string>> fromCompletion =
            asp::modelsOfCompletion(encode::encodeCompletion(inst), 64);
        if (sorted(fromSets) != sorted(fromCompletion)) return false;
        ++checked;
    }
    detail = std::to_string(checked) + " instances, all tight";
    return checked == 50;
}

// 6. Emitted programs reproduce the golden files: the ground rule set as a
//    structural set, the optimization program byte for byte. The fixture's
//    woman-1 single-life cost is 3 (one plus her two listed partners); the
//    golden pins that value.
bool goldenEncodings(std::string& detail) {
    const auto ruleKey = [](const asp::Rule& r) { return std::tie(r.head, r.positive, r.naf); };
    const auto structurallyEqual = [&](const asp::Program& a, const asp::Program& b) {
        std::vector<asp::Rule> x = a.rules;
        std::vector<asp::Rule> y = b.rules;
        const auto less = [&](const asp::Rule& l, const asp::Rule& r) {
            return ruleKey(l) < ruleKey(r);
        };
        std::sort(x.begin(), x.end(), less);
        std::sort(y.begin(), y.end(), less);
        return x == y;
    };
    const Instance inst = fixtures::twoByThree();
    const asp::Program normal = encode::encodeSmti(inst);
    const asp::Program golden = asp::parseProgram(readFile(dataFile("normal_2x3.lp")));
    if (!structurallyEqual(normal, golden)) return false;

    const std::string opt = encode::emitOptProgram(inst, Criterion::Regret);
    const std::string optGolden = readFile(dataFile("opt_regret_2x3.txt"));
    if (opt != optGolden) return false;
    if (opt.find("womancost(1,3) :- accept(w1,w1).") == std::string::npos) return false;
    if (opt.find("womancost(1,2) :- accept(w1,w1).") != std::string::npos) return false;
    detail = "rule set structural, optimization text byte-exact";
    return true;
}

// 7. Grounded sizes stay within the documented bounds (docs/encodings.md):
//    4k^2 propose/accept, 5k^3 disjunctive and three-sided, 48k^3 regret and
//    singles optimization, 56k^4 sex-equal and egalitarian optimization.
bool groundedSizeBounds(std::string& detail) {
    for (int k = 2; k <= 6; ++k) {
        const Instance square = strictSquare(k);
        const double k2 = static_cast<double>(k) * k;
        const double k3 = k2 * k;
        const double k4 = k3 * k;
        if (encode::encodeSmti(square).rules.size() > 4 * k2) return false;
        if (encode::encodeSmtiDisjunctive(square).rules.size() > 5 * k3) return false;
        if (encode::encodeSmti3d(strictCube(k)).rules.size() > 5 * k3) return false;
        if (encode::optNotionalGroundedCount(square, Criterion::Regret) > 48 * k3) return false;
        if (encode::optNotionalGroundedCount(square, Criterion::Singles) > 48 * k3)
            return false;
        if (encode::optNotionalGroundedCount(square, Criterion::SexEqual) > 56 * k4)
            return false;
        if (encode::optNotionalGroundedCount(square, Criterion::Egalitarian) > 56 * k4)
            return false;
    }
    detail = "k in 2..6: 4k^2 / 5k^3 / 5k^3 / 48k^3 / 56k^4";
    return true;
}

// 8. Deferred acceptance always outputs a weakly stable matching, under
//    every tie-break mode and both proposing sides; on strict complete
//    square instances the men-proposing run is men-optimal.
bool deferredAcceptance(std::string& detail) {
    int optimalityChecks = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + i % 6;
        const int p = 1 + (i / 6) % 6;
        const double ties = kProbs[static_cast<std::size_t>(i / 36) % 3];
        const double inc = kProbs[static_cast<std::size_t>(i / 108) % 3];
        const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
        const Instance inst = io::generateInstance(n, p, ties, inc, seed);

        for (const gs::ProposingSide side : {gs::ProposingSide::Men, gs::ProposingSide::Women})
            for (const gs::TieBreak& tb :
                 {gs::TieBreak::lexicographic(), gs::TieBreak::seeded(seed),
                  gs::TieBreak::seeded(seed * 7 + 1)})
                if (!analyzeStability(inst, gs::solve(inst, tb, side)).stable()) return false;

        if (ties == 0.0 && inc == 0.0 && n == p) {
            const Matching got = gs::solve(inst, gs::TieBreak::lexicographic(),
                                           gs::ProposingSide::Men);
            const std::vector<Matching> all = oracle::enumerateStable(inst);
            for (int man = 1; man <= n; ++man) {
                const PersonRef who{Side::Man, man};
                int best = inst.partnerCost(who, all.front().assignmentOf(who));
                for (const Matching& m : all)
                    best = std::min(best, inst.partnerCost(who, m.assignmentOf(who)));
                if (inst.partnerCost(who, got.assignmentOf(who)) != best) return false;
            }
            ++optimalityChecks;
        }
    }
    detail = "1000 instances x 6 runs; " + std::to_string(optimalityChecks) +
             " men-optimality checks";
    return optimalityChecks > 0;
}

// 9. Without ties, every stable matching of an instance matches the same
//    set of people.
bool matchedSetConstancy(std::string& detail) {
    int multi = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 4 + i % 3;
        const int p = 4 + (i / 3) % 3;
        const double inc = kProbs[static_cast<std::size_t>(i / 9) % 3];
        const Instance inst = io::generateInstance(n, p, 0.0, inc, 7000 + i);

        const std::vector<Matching> all = oracle::enumerateStable(inst);
        if (all.empty()) return false; // no-ties instances always have one
        const auto matchedSet = [](const Matching& m) {
            std::vector<int> mask;
            for (int v : m.manPartner) mask.push_back(v != 0);
            for (int v : m.womanPartner) mask.push_back(v != 0);
            return mask;
        };
        const std::vector<int> first = matchedSet(all.front());
        for (const Matching& m : all)
            if (matchedSet(m) != first) return false;
        if (all.size() > 1) ++multi;
    }
    detail = "100 instances, " + std::to_string(multi) + " with several stable matchings";
    return multi > 0;
}

// 10. Three-sided enumeration coincides with the accept-triple projection of
//     the three-sided program's answer sets, and the existence check agrees.
bool threeSidedSuite(std::string& detail) {
    for (int i = 0; i < 20; ++i) {
        const double ties = kProbs[static_cast<std::size_t>(i) % 3];
        const double inc = kProbs[static_cast<std::size_t>(i / 3) % 3];
        const threedim::Instance3 inst = io::generateInstance3(2, 2, 2, ties, inc, 8000 + i);

        std::vector<std::vector<threedim::Triple>> got;
        for (const Interpretation& s :
             asp::enumerateAnswerSets(encode::encodeSmti3d(inst), 80)) {
            std::vector<threedim::Triple> triples;
            for (const asp::Literal& l : s) {
                if (l.atom.rfind("accept(m", 0) != 0) continue;
                const std::string args = l.atom.substr(7, l.atom.size() - 8);
                const std::size_t c1 = args.find(',');
                const std::size_t c2 = args.find(',', c1 + 1);
                const PersonRef a = parsePersonRef(args.substr(0, c1));
                const PersonRef b = parsePersonRef(args.substr(c1 + 1, c2 - c1 - 1));
                const PersonRef c = parsePersonRef(args.substr(c2 + 1));
                if (b.side == Side::Woman) triples.push_back({a.index, b.index, c.index});
            }
            got.push_back(sorted(triples));
        }
        std::vector<std::vector<threedim::Triple>> want;
        for (const threedim::Matching3& mu : threedim::enumerateStable3(inst))
            want.push_back(mu.triples());
        if (sorted(got) != sorted(want)) return false;
        if (threedim::existsStable3(inst) != !want.empty()) return false;
    }
    detail = "20 seeded 2x2x2 instances";
    return true;
}

// 11. Optional: if a dlv binary is on the path, its answer sets for the
//     optimization program project to the oracle's optima. Non-gating.
bool externalSolver(std::string& detail, bool& skipped) {
    std::string solver;
    if (FILE* pipe = popen("command -v dlv 2>/dev/null || command -v dlv2 2>/dev/null", "r")) {
        char buffer[256];
        while (fgets(buffer, sizeof buffer, pipe)) solver += buffer;
        pclose(pipe);
    }
    while (!solver.empty() && (solver.back() == '\n' || solver.back() == '\r'))
        solver.pop_back();
    if (solver.empty()) {
        skipped = true;
        detail = "no dlv-compatible solver on the path";
        return true;
    }

    int checked = 0;
    for (int i = 0; i < 10; ++i) {
        const int n = 1 + i % 2;
        const int p = 1 + (i / 2) % 2;
        const Criterion crit =
            std::array{Criterion::Regret, Criterion::Egalitarian}[static_cast<std::size_t>(i) %
                                                                  2];
        const Instance inst = io::generateInstance(n, p, 0.3, 0.3, 9000 + i);
        const std::string programPath = "/tmp/smti-acceptance-" + std::to_string(i) + ".lp";
        {
            std::ofstream f(programPath);
            f << encode::emitOptProgram(inst, crit);
        }
        std::string output;
        if (FILE* pipe = popen((solver + " -silent " + programPath).c_str(), "r")) {
            char buffer[4096];
            while (fgets(buffer, sizeof buffer, pipe)) output += buffer;
            pclose(pipe);
        }
        std::remove(programPath.c_str());

        // Each model line "{a, b, ...}" names one optimal stable matching.
        std::vector<std::string> got;
        const std::string critAtom =
            (crit == Criterion::Regret ? "regret(" : "weight(");
        std::istringstream lines(output);
        std::string line;
        bool valueSeen = false;
        while (std::getline(lines, line)) {
            const std::size_t open = line.find('{');
            if (open == std::string::npos) continue;
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t at = line.find("accept(m"); at != std::string::npos;
                 at = line.find("accept(m", at + 1)) {
                int mi = 0, wj = 0;
                if (std::sscanf(line.c_str() + at, "accept(m%d,w%d)", &mi, &wj) == 2)
                    pairs.emplace_back(mi, wj);
            }
            if (line.find(critAtom) != std::string::npos) valueSeen = true;
            got.push_back(
                to_text(Matching::fromPairs(inst.menCount(), inst.womenCount(), pairs)));
        }
        const oracle::Optimum best = oracle::optimize(inst, crit);
        std::vector<std::string> want = matchingTexts(best.matchings);
        if (sorted(got) != sorted(want) || !valueSeen) return false;
        ++checked;
    }
    detail = "solver " + solver + ", " + std::to_string(checked) + " instances";
    return true;
}

} // namespace

int main() {
    struct Check {
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Check> checks = {
        {"fixture enumeration matches the golden file", fixtureEnumeration},
        {"fixture optima are exact", fixtureOptima},
        {"answer sets biject with stable matchings", answerSetBijection},
        {"disjunctive program has the same atom sets", disjunctiveCoincidence},
        {"programs are tight and completion models agree", completionModels},
        {"golden encodings reproduced", goldenEncodings},
        {"grounded sizes within documented bounds", groundedSizeBounds},
        {"deferred acceptance stable everywhere, men-optimal when strict", deferredAcceptance},
        {"matched people constant across stable matchings without ties", matchedSetConstancy},
        {"three-sided enumeration matches its program", threeSidedSuite},
    };

    bool allPass = true;
    int number = 0;
    for (const Check& check : checks) {
        ++number;
        std::string detail;
        bool ok = false;
        try {
            ok = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        allPass = allPass && ok;
        std::printf("%2d %s  %s%s%s\n", number, ok ? "pass" : "FAIL", check.label,
                    detail.empty() ? "" : " — ", detail.c_str());
    }

    {
        std::string detail;
        bool skipped = false;
        bool ok = false;
        try {
            ok = externalSolver(detail, skipped);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("11 %s  external solver cross-check — %s\n",
                    skipped ? "skip" : (ok ? "pass" : "FAIL"), detail.c_str());
        // Non-gating: a failure here is reported but does not flip the exit code.
    }

    return allPass ? 0 : 1;
}
