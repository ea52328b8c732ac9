// Text emitter for the saturation-based optimization programs: a normal
// guess part, a primed disjunctive copy (classical negation spelled as an
// "n" prefix), consistency rules deriving sat, successor-arithmetic chains
// recomputing the criterion in the primed copy, the sat comparison rule, and
// the saturation rules that flood the primed atoms once sat holds. The text
// is DLV dialect (variables, aggregates, #succ, #maxint) and is meant for an
// external solver; the in-tree kernel only handles the ground encoders.
#include "smti/encode.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smti/errors.hpp"

namespace smti::encode {

namespace {

std::string num(int v) { return std::to_string(v); }

// Predicate carrying the criterion value in the emitted program.
std::string critPredicate(Criterion c) {
    switch (c) {
        case Criterion::SexEqual: return "sexeq";
        case Criterion::Egalitarian: return "weight";
        case Criterion::Regret: return "regret";
        case Criterion::Singles: return "singles";
        case Criterion::ManWeight: return "manweight";
        case Criterion::WomanWeight: return "womanweight";
    }
    throw ValidationError("unknown criterion");
}

// Rivals of partner j (listed in group g): every partner ranked strictly
// better or tied, in group-sweep order, plus a flag for "staying single ties
// with j" (j in the neutral group).
struct Rivals {
    std::vector<int> partners;
    bool self = false;
};

Rivals rivalsOf(const std::vector<std::vector<int>>& groups, int g, int j) {
    Rivals r;
    for (int b = 0; b <= g; ++b)
        for (int x : groups[b])
            if (!(b == g && x == j)) r.partners.push_back(x);
    r.self = g + 1 == static_cast<int>(groups.size());
    return r;
}

std::string joinDisjuncts(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += " v ";
        out += parts[i];
    }
    return out;
}

struct OptEmitter {
    const Instance& inst;
    Criterion crit;
    Direction dir;
    int n;
    int p;
    std::vector<std::string> lines;

    OptEmitter(const Instance& instance, Criterion criterion, Direction direction)
        : inst(instance),
          crit(criterion),
          dir(direction),
          n(instance.menCount()),
          p(instance.womenCount()) {}

    void add(std::string line) { lines.push_back(std::move(line)); }

    // --- atom spellings ----------------------------------------------------
    static std::string acc(const std::string& a, const std::string& b, bool primed) {
        return std::string("accept") + (primed ? "'" : "") + "(" + a + "," + b + ")";
    }
    std::string accMW(int i, int j, bool primed) const {
        return acc(manName(i), womanName(j), primed);
    }
    static std::string nacc(const std::string& a, const std::string& b) {
        return "naccept'(" + a + "," + b + ")";
    }
    std::string naccMW(int i, int j) const { return nacc(manName(i), womanName(j)); }
    std::string mprop(int i, int j, bool primed) const {
        return std::string("manpropose") + (primed ? "'" : "") + "(" + manName(i) + "," +
               womanName(j) + ")";
    }
    std::string wprop(int i, int j, bool primed) const {
        return std::string("womanpropose") + (primed ? "'" : "") + "(" + manName(i) + "," +
               womanName(j) + ")";
    }
    std::string nmprop(int i, int j) const {
        return "nmanpropose'(" + manName(i) + "," + womanName(j) + ")";
    }
    std::string nwprop(int i, int j) const {
        return "nwomanpropose'(" + manName(i) + "," + womanName(j) + ")";
    }

    // --- sections ----------------------------------------------------------
    void emitNormal() {
        add("accept(X,Y) :- manpropose(X,Y), womanpropose(X,Y).");
        for (int i = 1; i <= n; ++i)
            emitNormalPerson(
                inst.men[i - 1].groups, manName(i),
                [&](int w) { return accMW(i, w, false); },
                [&](int w) { return mprop(i, w, false); });
        for (int j = 1; j <= p; ++j)
            emitNormalPerson(
                inst.women[j - 1].groups, womanName(j),
                [&](int m) { return acc(manName(m), womanName(j), false); },
                [&](int m) { return wprop(m, j, false); });
    }

    template <typename AcceptOf, typename ProposeOf>
    void emitNormalPerson(const std::vector<std::vector<int>>& groups, const std::string& who,
                          AcceptOf&& acceptOf, ProposeOf&& proposeOf) {
        const std::string self = acc(who, who, false);
        for (int g = 0; g < static_cast<int>(groups.size()); ++g)
            for (int partner : groups[g]) {
                const Rivals rv = rivalsOf(groups, g, partner);
                std::vector<std::string> nafs;
                for (int x : rv.partners) nafs.push_back(acceptOf(x));
                if (rv.self) nafs.push_back(self);
                add(proposeOf(partner) + nafBody(nafs));
            }
        std::vector<std::string> nafs;
        for (const auto& group : groups)
            for (int x : group) nafs.push_back(acceptOf(x));
        add(self + nafBody(nafs));
    }

    static std::string nafBody(const std::vector<std::string>& atoms) {
        if (atoms.empty()) return ".";
        std::string out = " :- ";
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (i > 0) out += ", ";
            out += "not " + atoms[i];
        }
        return out + ".";
    }

    void emitDomainFacts() {
        for (int i = 1; i <= n; ++i) add("man(" + manName(i) + ").");
        for (int j = 1; j <= p; ++j) add("woman(" + womanName(j) + ").");
    }

    void emitCostRules(bool primed) {
        const char* tick = primed ? "'" : "";
        for (int i = 1; i <= n; ++i) {
            const PreferenceList& pl = inst.men[i - 1];
            for (int w : pl.acceptable())
                add(std::string("mancost") + tick + "(" + num(i) + "," +
                    num(pl.costOfPartner(w)) + ") :- " + accMW(i, w, primed) + ".");
            add(std::string("mancost") + tick + "(" + num(i) + "," + num(pl.selfCost()) +
                ") :- " + acc(manName(i), manName(i), primed) + ".");
        }
        for (int j = 1; j <= p; ++j) {
            const PreferenceList& pl = inst.women[j - 1];
            for (int m : pl.acceptable())
                add(std::string("womancost") + tick + "(" + num(j) + "," +
                    num(pl.costOfPartner(m)) + ") :- " + accMW(m, j, primed) + ".");
            add(std::string("womancost") + tick + "(" + num(j) + "," + num(pl.selfCost()) +
                ") :- " + acc(womanName(j), womanName(j), primed) + ".");
        }
    }

    void emitUnprimedCriterion() {
        const std::string sumM = "manweight(Z) :- #sum{B,A : mancost(A,B)}=Z, #int(Z).";
        const std::string sumW = "womanweight(Z) :- #sum{B,A : womancost(A,B)}=Z, #int(Z).";
        switch (crit) {
            case Criterion::SexEqual:
                add(sumM);
                add(sumW);
                add("sexeq(Z) :- manweight(X), womanweight(Y), Z=X-Y.");
                add("sexeq(Z) :- manweight(X), womanweight(Y), Z=Y-X.");
                break;
            case Criterion::Egalitarian:
                add(sumM);
                add(sumW);
                add("weight(Z) :- manweight(X), womanweight(Y), Z=X+Y.");
                break;
            case Criterion::Regret:
                add("manregret(Z) :- #max{B : mancost(A,B)}=Z, #int(Z).");
                add("womanregret(Z) :- #max{B : womancost(A,B)}=Z, #int(Z).");
                add("regret(X) :- manregret(X), womanregret(Y), X>Y.");
                add("regret(Y) :- manregret(X), womanregret(Y), X<=Y.");
                break;
            case Criterion::Singles:
                add("singles(Z) :- #count{B : accept(B,B)} = Z, #int(Z).");
                break;
            case Criterion::ManWeight:
                add(sumM);
                break;
            case Criterion::WomanWeight:
                add(sumW);
                break;
        }
    }

    void emitDisjunctivePrimed() {
        add("naccept'(M,W) v manpropose'(M,W) :- man(M), woman(W).");
        add("naccept'(M,W) v womanpropose'(M,W) :- man(M), woman(W).");
        add("accept'(M,W) v nmanpropose'(M,W) v nwomanpropose'(M,W) :- man(M), woman(W).");
        for (int i = 1; i <= n; ++i)
            emitDisjunctivePerson(
                inst.men[i - 1], manName(i), p,
                [&](int w) { return accMW(i, w, true); }, [&](int w) { return naccMW(i, w); },
                [&](int w) { return mprop(i, w, true); }, [&](int w) { return nmprop(i, w); });
        for (int j = 1; j <= p; ++j)
            emitDisjunctivePerson(
                inst.women[j - 1], womanName(j), n,
                [&](int m) { return accMW(m, j, true); }, [&](int m) { return naccMW(m, j); },
                [&](int m) { return wprop(m, j, true); }, [&](int m) { return nwprop(m, j); });
    }

    template <typename AccOf, typename NAccOf, typename PropOf, typename NPropOf>
    void emitDisjunctivePerson(const PreferenceList& pl, const std::string& who,
                               int partnerCount, AccOf&& accOf, NAccOf&& naccOf, PropOf&& propOf,
                               NPropOf&& npropOf) {
        const std::string self = acc(who, who, true);
        const std::string nself = nacc(who, who);
        const std::vector<int> acceptable = pl.acceptable();

        std::vector<std::string> covering;
        for (int x : acceptable) covering.push_back(accOf(x));
        covering.push_back(self);
        add(joinDisjuncts(covering) + ".");

        for (int x : acceptable) add(nself + " v " + naccOf(x) + ".");

        for (int x : acceptable) {
            const Rivals rv = rivalsOf(pl.groups, pl.groupOf(x) - 1, x);
            for (int y : rv.partners) add(npropOf(x) + " v " + naccOf(y) + ".");
            if (rv.self) add(npropOf(x) + " v " + nself + ".");
        }
        for (int x : acceptable) {
            const Rivals rv = rivalsOf(pl.groups, pl.groupOf(x) - 1, x);
            std::vector<std::string> support;
            for (int y : rv.partners) support.push_back(accOf(y));
            if (rv.self) support.push_back(self);
            support.push_back(propOf(x));
            add(joinDisjuncts(support) + ".");
        }
        for (int x = 1; x <= partnerCount; ++x)
            if (!pl.isAcceptable(x)) add(npropOf(x) + ".");
    }

    void emitSatConsistency() {
        add("sat :- manpropose'(X,Y), nmanpropose'(X,Y), man(X), woman(Y).");
        add("sat :- womanpropose'(X,Y), nwomanpropose'(X,Y), man(X), woman(Y).");
        add("sat :- accept'(X,Y), naccept'(X,Y), man(X), woman(Y).");
        add("sat :- accept'(X,X), naccept'(X,X), man(X).");
        add("sat :- accept'(X,X), naccept'(X,X), woman(X).");
    }

    void addManSumChain() {
        add("mansum'(" + num(n) + ",X) :- mancost'(" + num(n) + ",X).");
        add("mansum'(J,Z) :- mansum'(I,X), mancost'(J,Y), Z=X+Y, #succ(J,I).");
        add("manweight'(Z) :- mansum'(1,Z).");
    }
    void addWomanSumChain() {
        add("womansum'(" + num(p) + ",X) :- womancost'(" + num(p) + ",X).");
        add("womansum'(J,Z) :- womansum'(I,X), womancost'(J,Y), Z=X+Y, #succ(J,I).");
        add("womanweight'(Z) :- womansum'(1,Z).");
    }
    void addManMaxChain() {
        add("manmax'(" + num(n) + ",X) :- mancost'(" + num(n) + ",X).");
        add("manmax'(J,X) :- manmax'(I,X), mancost'(J,Y), X>=Y, #succ(J,I).");
        add("manmax'(J,Y) :- manmax'(I,X), mancost'(J,Y), X<Y, #succ(J,I).");
        add("manregret'(Z) :- manmax'(1,Z).");
    }
    void addWomanMaxChain() {
        add("womanmax'(" + num(p) + ",X) :- womancost'(" + num(p) + ",X).");
        add("womanmax'(J,X) :- womanmax'(I,X), womancost'(J,Y), X>=Y, #succ(J,I).");
        add("womanmax'(J,Y) :- womanmax'(I,X), womancost'(J,Y), X<Y, #succ(J,I).");
        add("womanregret'(Z) :- womanmax'(1,Z).");
    }
    void addSinglesChain() {
        for (int i = 1; i <= n; ++i) {
            add("single'(" + num(p + i) + ",1) :- " + acc(manName(i), manName(i), true) + ".");
            add("single'(" + num(p + i) + ",0) :- " + nacc(manName(i), manName(i)) + ".");
        }
        for (int j = 1; j <= p; ++j) {
            add("single'(" + num(j) + ",1) :- " + acc(womanName(j), womanName(j), true) + ".");
            add("single'(" + num(j) + ",0) :- " + nacc(womanName(j), womanName(j)) + ".");
        }
        add("singlesum'(" + num(n + p) + ",X) :- single'(" + num(n + p) + ",X).");
        add("singlesum'(J,Z) :- singlesum'(I,X), single'(J,Y), Z=X+Y, #succ(J,I).");
        add("singles'(Z) :- singlesum'(1,Z).");
    }

    void emitPrimedCriterion() {
        switch (crit) {
            case Criterion::SexEqual:
                addManSumChain();
                addWomanSumChain();
                add("sexeq'(Z) :- manweight'(X), womanweight'(Y), Z=X-Y.");
                add("sexeq'(Z) :- manweight'(X), womanweight'(Y), Z=Y-X.");
                break;
            case Criterion::Egalitarian:
                addManSumChain();
                addWomanSumChain();
                add("weight'(Z) :- manweight'(X), womanweight'(Y), Z=X+Y.");
                break;
            case Criterion::Regret:
                addManMaxChain();
                addWomanMaxChain();
                add("regret'(X) :- manregret'(X), womanregret'(Y), X>Y.");
                add("regret'(Y) :- manregret'(X), womanregret'(Y), X<=Y.");
                break;
            case Criterion::Singles:
                addSinglesChain();
                break;
            case Criterion::ManWeight:
                addManSumChain();
                break;
            case Criterion::WomanWeight:
                addWomanSumChain();
                break;
        }
    }

    void emitSelection() {
        const std::string cp = critPredicate(crit);
        const std::string cmp = dir == Direction::Minimize ? "X<=Y" : "X>=Y";
        add("sat :- " + cp + "(X), " + cp + "'(Y), " + cmp + ".");
        add(":- not sat.");
    }

    void emitSaturation() {
        add("manargcost_1'(1.." + num(n) + ").");
        add("manargcost_2'(1.." + num(p + 1) + ").");
        add("womanargcost_1'(1.." + num(p) + ").");
        add("womanargcost_2'(1.." + num(n + 1) + ").");
        add("mancost'(X,Y) :- sat, manargcost_1'(X), manargcost_2'(Y).");
        add("womancost'(X,Y) :- sat, womanargcost_1'(X), womanargcost_2'(Y).");
        add("manpropose'(X,Y) :- sat, man(X), woman(Y).");
        add("nmanpropose'(X,Y) :- sat, man(X), woman(Y).");
        add("womanpropose'(X,Y) :- sat, man(X), woman(Y).");
        add("nwomanpropose'(X,Y) :- sat, man(X), woman(Y).");
        add("accept'(X,Y) :- sat, man(X), woman(Y).");
        add("accept'(X,X) :- sat, man(X).");
        add("accept'(X,X) :- sat, woman(X).");
        add("naccept'(X,Y) :- sat, man(X), woman(Y).");
        add("naccept'(X,X) :- sat, man(X).");
        add("naccept'(X,X) :- sat, woman(X).");
    }

    std::string run() {
        add("#maxint=" + num(optMaxInt(inst, crit)) + ".");
        emitNormal();
        emitDomainFacts();
        if (crit != Criterion::Singles) emitCostRules(false);
        emitUnprimedCriterion();
        emitDisjunctivePrimed();
        emitSatConsistency();
        if (crit != Criterion::Singles) emitCostRules(true);
        emitPrimedCriterion();
        emitSelection();
        emitSaturation();
        std::string out;
        for (const std::string& line : lines) {
            out += line;
            out += '\n';
        }
        return out;
    }
};

} // namespace

int optMaxInt(const Instance& inst, Criterion criterion) {
    const int n = inst.menCount();
    const int p = inst.womenCount();
    switch (criterion) {
        case Criterion::SexEqual: return n * p + std::max(n, p);
        case Criterion::Egalitarian: return 2 * n * p + n + p;
        case Criterion::Regret: return std::max(n, p) + 1;
        case Criterion::Singles: return n + p;
        case Criterion::ManWeight: return n * (p + 1);
        case Criterion::WomanWeight: return p * (n + 1);
    }
    throw ValidationError("unknown criterion");
}

std::string emitOptProgram(const Instance& inst, Criterion criterion, Direction direction) {
    inst.validate();
    if (inst.menCount() == 0 || inst.womenCount() == 0)
        throw ValidationError(
            "optimization program needs at least one man and one woman (the "
            "summation chains are anchored at the last index of each side)");
    return OptEmitter(inst, criterion, direction).run();
}

std::size_t optNotionalGroundedCount(const Instance& inst, Criterion criterion) {
    inst.validate();
    if (inst.menCount() == 0 || inst.womenCount() == 0)
        throw ValidationError("optimization program needs at least one man and one woman");
    const std::size_t n = static_cast<std::size_t>(inst.menCount());
    const std::size_t p = static_cast<std::size_t>(inst.womenCount());
    // Integer-variable range: DLV grounds arithmetic variables over 0..#maxint.
    const std::size_t V = static_cast<std::size_t>(optMaxInt(inst, criterion)) + 1;

    std::size_t costLines = 0;
    for (const PreferenceList& pl : inst.men)
        costLines += static_cast<std::size_t>(pl.acceptableCount()) + 1;
    for (const PreferenceList& pl : inst.women)
        costLines += static_cast<std::size_t>(pl.acceptableCount()) + 1;

    // Recomputing-chain multiplicities: anchor line (one value variable over
    // the cost range), recursion line (index x running value x cost value),
    // and the final projection line (one value variable).
    const auto sumChain = [&](std::size_t persons, std::size_t costRange) {
        return costRange + persons * V * costRange + V;
    };
    const auto maxChain = [&](std::size_t persons, std::size_t costRange) {
        return costRange + 2 * persons * V * costRange + V;
    };

    std::size_t total = 0;
    total += encodeSmti(inst).rules.size(); // guarded accept schema = n*p instances
    total += n + p;                         // domain facts
    if (criterion != Criterion::Singles) total += 2 * costLines;
    switch (criterion) { // unprimed criterion rules (#sum/#max/#count = one per value)
        case Criterion::SexEqual: total += 2 * V + 2 * V * V; break;
        case Criterion::Egalitarian: total += 2 * V + V * V; break;
        case Criterion::Regret: total += 2 * V + 2 * V * V; break;
        case Criterion::Singles: total += V; break;
        case Criterion::ManWeight: total += V; break;
        case Criterion::WomanWeight: total += V; break;
    }
    total += encodeSmtiDisjunctive(inst).rules.size(); // primed copy (3 schemas = n*p each)
    total += 3 * n * p + n + p;                        // sat-consistency rules
    switch (criterion) {                               // primed chains and combinators
        case Criterion::SexEqual:
            total += sumChain(n, p + 1) + sumChain(p, n + 1) + 2 * V * V;
            break;
        case Criterion::Egalitarian:
            total += sumChain(n, p + 1) + sumChain(p, n + 1) + V * V;
            break;
        case Criterion::Regret:
            total += maxChain(n, p + 1) + maxChain(p, n + 1) + 2 * V * V;
            break;
        case Criterion::Singles:
            total += 2 * (n + p) + 2 + (n + p) * V * 2 + V;
            break;
        case Criterion::ManWeight: total += sumChain(n, p + 1); break;
        case Criterion::WomanWeight: total += sumChain(p, n + 1); break;
    }
    total += V * V; // sat comparison rule
    total += 1;     // :- not sat.
    total += n + (p + 1) + p + (n + 1);                            // argcost range facts
    total += n * (p + 1) + p * (n + 1) + 6 * n * p + 2 * (n + p); // saturation rules
    return total;
}

} // namespace smti::encode
