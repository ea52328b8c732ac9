#include "smti/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smti/asp.hpp"
#include "smti/encode.hpp"
#include "smti/errors.hpp"
#include "smti/gs.hpp"
#include "smti/io.hpp"
#include "smti/model.hpp"
#include "smti/oracle.hpp"
#include "smti/threedim.hpp"

namespace smti::cli {

namespace {

using nlohmann::ordered_json;

std::string pairText(const std::pair<PersonRef, PersonRef>& pr) {
    return to_string(pr.first) + "-" + to_string(pr.second);
}

std::string tripleText(const threedim::Triple& t) {
    return to_string(PersonRef{Side::Man, t.man}) + "-" +
           to_string(PersonRef{Side::Woman, t.woman}) + "-" +
           to_string(PersonRef{Side::Child, t.child});
}

Criterion parseCriterion(const std::string& token) {
    for (Criterion c : {Criterion::SexEqual, Criterion::Egalitarian, Criterion::Regret,
                        Criterion::Singles, Criterion::ManWeight, Criterion::WomanWeight})
        if (criterionName(c) == token) return c;
    throw ValidationError("unknown criterion \"" + token +
                          "\" (expected sexeq, egal, regret, singles, man-weight or "
                          "woman-weight)");
}

Direction parseDirection(const std::string& token) {
    if (token == "min") return Direction::Minimize;
    if (token == "max") return Direction::Maximize;
    throw ValidationError("unknown direction \"" + token + "\" (expected min or max)");
}

gs::TieBreak parseTieBreak(const std::string& token) {
    if (token == "lex") return gs::TieBreak::lexicographic();
    if (token.rfind("seed:", 0) == 0) {
        try {
            return gs::TieBreak::seeded(std::stoull(token.substr(5)));
        } catch (const std::exception&) {
            throw ValidationError("malformed tie-break seed in \"" + token + "\"");
        }
    }
    throw ValidationError("unknown tie-break \"" + token + "\" (expected lex or seed:<N>)");
}

gs::ProposingSide parseSide(const std::string& token) {
    if (token == "men") return gs::ProposingSide::Men;
    if (token == "women") return gs::ProposingSide::Women;
    throw ValidationError("unknown side \"" + token + "\" (expected men or women)");
}

const Instance& twoSided(const io::AnyInstance& any) {
    if (const Instance* inst = std::get_if<Instance>(&any)) return *inst;
    throw ValidationError("this operation needs a two-sided instance (file kind \"smti\")");
}

const threedim::Instance3& threeSided(const io::AnyInstance& any) {
    if (const threedim::Instance3* inst = std::get_if<threedim::Instance3>(&any)) return *inst;
    throw ValidationError("this operation needs a three-sided instance (file kind \"smti3\")");
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    if (!out) throw ValidationError("cannot write " + path);
}

void emitJson(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// ---- subcommand bodies ----------------------------------------------------

int runCheck(const std::string& file, const std::string& matchingText, bool machine,
             std::ostream& out) {
    const io::AnyInstance any = io::loadInstanceFile(file);
    if (const Instance* inst = std::get_if<Instance>(&any)) {
        const Matching m =
            matchingFromText(inst->menCount(), inst->womenCount(), matchingText);
        const BlockReport report = analyzeStability(*inst, m);
        if (machine) {
            ordered_json j;
            j["stable"] = report.stable();
            j["blockingPairs"] = ordered_json::array();
            for (const auto& pr : report.blockingPairs) j["blockingPairs"].push_back(pairText(pr));
            j["blockingIndividuals"] = ordered_json::array();
            for (const PersonRef& p : report.blockingIndividuals)
                j["blockingIndividuals"].push_back(to_string(p));
            j["unacceptablePairings"] = ordered_json::array();
            for (const auto& pr : report.unacceptablePairings)
                j["unacceptablePairings"].push_back(pairText(pr));
            emitJson(out, j);
        } else if (report.stable()) {
            out << "stable\n";
        } else {
            out << "unstable\n";
            for (const auto& pr : report.blockingPairs)
                out << "blocking pair " << pairText(pr) << "\n";
            for (const PersonRef& p : report.blockingIndividuals)
                out << "blocking individual " << to_string(p) << "\n";
            for (const auto& pr : report.unacceptablePairings)
                out << "unacceptable pairing " << pairText(pr) << "\n";
        }
        return report.stable() ? kExitOk : kExitUnstable;
    }
    const threedim::Instance3& inst = std::get<threedim::Instance3>(any);
    const threedim::Matching3 m = threedim::matching3FromText(
        inst.menCount(), inst.womenCount(), inst.childrenCount(), matchingText);
    const threedim::BlockReport3 report = threedim::analyzeStability3(inst, m);
    if (machine) {
        ordered_json j;
        j["stable"] = report.stable();
        j["blockingTriples"] = ordered_json::array();
        for (const threedim::Triple& t : report.blockingTriples)
            j["blockingTriples"].push_back(tripleText(t));
        j["blockingIndividuals"] = ordered_json::array();
        for (const PersonRef& p : report.blockingIndividuals)
            j["blockingIndividuals"].push_back(to_string(p));
        j["unacceptablyAssigned"] = ordered_json::array();
        for (const PersonRef& p : report.unacceptablyAssigned)
            j["unacceptablyAssigned"].push_back(to_string(p));
        emitJson(out, j);
    } else if (report.stable()) {
        out << "stable\n";
    } else {
        out << "unstable\n";
        for (const threedim::Triple& t : report.blockingTriples)
            out << "blocking triple " << tripleText(t) << "\n";
        for (const PersonRef& p : report.blockingIndividuals)
            out << "blocking individual " << to_string(p) << "\n";
        for (const PersonRef& p : report.unacceptablyAssigned)
            out << "unacceptable assignment " << to_string(p) << "\n";
    }
    return report.stable() ? kExitOk : kExitUnstable;
}

int runEnumerate(const std::string& file, std::size_t bound, bool machine, std::ostream& out) {
    const io::AnyInstance any = io::loadInstanceFile(file);
    std::vector<std::string> lines;
    if (const Instance* inst = std::get_if<Instance>(&any)) {
        for (const Matching& m :
             oracle::enumerateStable(*inst, bound ? bound : oracle::kDefaultPersonBound))
            lines.push_back(to_text(m));
    } else {
        const threedim::Instance3& cube = std::get<threedim::Instance3>(any);
        for (const threedim::Matching3& m : threedim::enumerateStable3(
                 cube, bound ? bound : threedim::kDefaultPersonBound3))
            lines.push_back(to_text(m));
    }
    if (machine) {
        ordered_json j;
        j["matchings"] = lines;
        emitJson(out, j);
    } else {
        for (const std::string& line : lines) out << line << "\n";
    }
    return kExitOk;
}

int runGs(const std::string& file, const std::string& tieBreak, const std::string& side,
          bool machine, std::ostream& out) {
    const io::AnyInstance any = io::loadInstanceFile(file);
    const Instance& inst = twoSided(any);
    const Matching m = gs::solve(inst, parseTieBreak(tieBreak), parseSide(side));
    if (machine) {
        ordered_json j;
        j["matching"] = to_text(m);
        emitJson(out, j);
    } else {
        out << to_text(m) << "\n";
    }
    return kExitOk;
}

int runOptimize(const std::string& file, const std::string& criterion,
                const std::string& direction, std::size_t bound, bool machine,
                std::ostream& out) {
    const io::AnyInstance any = io::loadInstanceFile(file);
    const Instance& inst = twoSided(any);
    const Criterion crit = parseCriterion(criterion);
    const Direction dir = parseDirection(direction);
    const oracle::Optimum best =
        oracle::optimize(inst, crit, dir, bound ? bound : oracle::kDefaultPersonBound);
    if (machine) {
        ordered_json j;
        j["criterion"] = criterionName(crit);
        j["direction"] = direction;
        j["value"] = best.value;
        j["matchings"] = ordered_json::array();
        for (const Matching& m : best.matchings) j["matchings"].push_back(to_text(m));
        emitJson(out, j);
    } else {
        out << "value " << best.value << "\n";
        for (const Matching& m : best.matchings) out << to_text(m) << "\n";
    }
    return kExitOk;
}

int runEncode(const std::string& file, const std::string& program, const std::string& outPath,
              const std::string& direction, bool machine, std::ostream& out) {
    const io::AnyInstance any = io::loadInstanceFile(file);
    std::string text;
    if (program == "normal") {
        text = asp::emitDlv(encode::encodeSmti(twoSided(any)));
    } else if (program == "disjunctive") {
        text = asp::emitDlv(encode::encodeSmtiDisjunctive(twoSided(any)));
    } else if (program == "completion") {
        text = asp::emitDlv(encode::encodeCompletion(twoSided(any)));
    } else if (program == "3d") {
        text = asp::emitDlv(encode::encodeSmti3d(threeSided(any)));
    } else if (program.rfind("opt:", 0) == 0) {
        text = encode::emitOptProgram(twoSided(any), parseCriterion(program.substr(4)),
                                      parseDirection(direction));
    } else {
        throw ValidationError("unknown program kind \"" + program +
                              "\" (expected normal, disjunctive, completion, 3d or "
                              "opt:<criterion>)");
    }
    if (!outPath.empty()) writeTextFile(outPath, text);
    if (machine) {
        ordered_json j;
        j["program"] = text;
        emitJson(out, j);
    } else if (outPath.empty()) {
        out << text;
    }
    return kExitOk;
}

int runAnswerSets(const std::string& file, std::size_t maxAtoms, bool machine,
                  std::ostream& out) {
    const asp::Program program = asp::parseProgram(readTextFile(file));
    const std::vector<asp::Interpretation> sets = asp::enumerateAnswerSets(program, maxAtoms);
    if (machine) {
        ordered_json j;
        j["answerSets"] = ordered_json::array();
        for (const asp::Interpretation& s : sets) {
            ordered_json one = ordered_json::array();
            for (const asp::Literal& l : s) one.push_back(asp::to_string(l));
            j["answerSets"].push_back(one);
        }
        emitJson(out, j);
    } else {
        for (const asp::Interpretation& s : sets) {
            out << "{";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i > 0) out << ", ";
                out << asp::to_string(s[i]);
            }
            out << "}\n";
        }
    }
    return kExitOk;
}

int runGen(int men, int women, int children, double ties, double incomplete,
           std::uint64_t seed, bool machine, std::ostream& out) {
    const std::string text =
        children > 0
            ? io::serialize(io::generateInstance3(men, women, children, ties, incomplete, seed))
            : io::serialize(io::generateInstance(men, women, ties, incomplete, seed));
    if (machine) {
        ordered_json j;
        j["instance"] = text;
        emitJson(out, j);
    } else {
        out << text;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stable matching toolkit: ties, incomplete lists, triples"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "emit results as JSON");

    struct {
        std::string file, matching;
    } check;
    CLI::App* checkCmd = app.add_subcommand("check", "stability-check a matching");
    checkCmd->fallthrough();
    checkCmd->add_option("file", check.file, "instance file")->required();
    checkCmd->add_option("matching", check.matching,
                         "comma-separated pairs, e.g. m1-w3,m2-w1; singles implied")
        ->required();

    struct {
        std::string file;
        std::size_t bound = 0;
    } enumerate;
    CLI::App* enumerateCmd =
        app.add_subcommand("enumerate", "list every weakly stable matching");
    enumerateCmd->fallthrough();
    enumerateCmd->add_option("file", enumerate.file, "instance file")->required();
    enumerateCmd->add_option("--bound", enumerate.bound,
                             "person-count bound for the enumeration (default 12, 3-sided 9)");

    struct {
        std::string file, tieBreak = "lex", side = "men";
    } gsArgs;
    CLI::App* gsCmd = app.add_subcommand("gs", "deferred-acceptance matching");
    gsCmd->fallthrough();
    gsCmd->add_option("file", gsArgs.file, "instance file")->required();
    gsCmd->add_option("--tie-break", gsArgs.tieBreak, "lex or seed:<N> (default lex)");
    gsCmd->add_option("--side", gsArgs.side, "proposing side: men or women (default men)");

    struct {
        std::string file, criterion, direction = "min";
        std::size_t bound = 0;
    } optimize;
    CLI::App* optimizeCmd =
        app.add_subcommand("optimize", "best stable matchings for a criterion");
    optimizeCmd->fallthrough();
    optimizeCmd->add_option("file", optimize.file, "instance file")->required();
    optimizeCmd
        ->add_option("--criterion", optimize.criterion,
                     "sexeq, egal, regret, singles, man-weight or woman-weight")
        ->required();
    optimizeCmd->add_option("--direction", optimize.direction, "min or max (default min)");
    optimizeCmd->add_option("--bound", optimize.bound,
                            "person-count bound for the enumeration (default 12)");

    struct {
        std::string file, program, out, direction = "min";
    } encodeArgs;
    CLI::App* encodeCmd = app.add_subcommand("encode", "emit a logic program for the instance");
    encodeCmd->fallthrough();
    encodeCmd->add_option("file", encodeArgs.file, "instance file")->required();
    encodeCmd
        ->add_option("--program", encodeArgs.program,
                     "normal, disjunctive, completion, 3d or opt:<criterion>")
        ->required();
    encodeCmd->add_option("--out", encodeArgs.out, "write the program to this file");
    encodeCmd->add_option("--direction", encodeArgs.direction,
                          "min or max for opt:<criterion> (default min)");

    struct {
        std::string file;
        std::size_t maxAtoms = asp::kDefaultUniverseBound;
    } answerSets;
    CLI::App* answerSetsCmd =
        app.add_subcommand("answer-sets", "enumerate answer sets of a ground program");
    answerSetsCmd->fallthrough();
    answerSetsCmd->add_option("file", answerSets.file, "ground program file")->required();
    answerSetsCmd->add_option("--max-atoms", answerSets.maxAtoms,
                              "universe size bound (default 26)");

    struct {
        int men = 0, women = 0, children = 0;
        double ties = 0.0, incomplete = 0.0;
        std::uint64_t seed = 0;
    } gen;
    CLI::App* genCmd = app.add_subcommand("gen", "generate a random instance");
    genCmd->fallthrough();
    genCmd->add_option("--men", gen.men, "number of men")->required();
    genCmd->add_option("--women", gen.women, "number of women")->required();
    genCmd->add_option("--children", gen.children, "number of children (makes it 3-sided)");
    genCmd->add_option("--ties", gen.ties, "tie probability in [0,1] (default 0)");
    genCmd->add_option("--incomplete", gen.incomplete,
                       "unacceptability probability in [0,1] (default 0)");
    genCmd->add_option("--seed", gen.seed, "generator seed (default 0)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("smti");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(checkCmd))
            return runCheck(check.file, check.matching, machine, out);
        if (app.got_subcommand(enumerateCmd))
            return runEnumerate(enumerate.file, enumerate.bound, machine, out);
        if (app.got_subcommand(gsCmd))
            return runGs(gsArgs.file, gsArgs.tieBreak, gsArgs.side, machine, out);
        if (app.got_subcommand(optimizeCmd))
            return runOptimize(optimize.file, optimize.criterion, optimize.direction,
                               optimize.bound, machine, out);
        if (app.got_subcommand(encodeCmd))
            return runEncode(encodeArgs.file, encodeArgs.program, encodeArgs.out,
                             encodeArgs.direction, machine, out);
        if (app.got_subcommand(answerSetsCmd))
            return runAnswerSets(answerSets.file, answerSets.maxAtoms, machine, out);
        if (app.got_subcommand(genCmd))
            return runGen(gen.men, gen.women, gen.children, gen.ties, gen.incomplete, gen.seed,
                          machine, out);
    } catch (const BoundError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace smti::cli
