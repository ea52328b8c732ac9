#include "smti/asp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "smti/errors.hpp"

namespace smti::asp {

namespace {

void sortUnique(std::vector<Literal>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Literal lit(std::string atom) { return Literal{std::move(atom), false}; }
Literal neg(std::string atom) { return Literal{std::move(atom), true}; }

std::string to_string(const Literal& l) {
    return l.negated ? "-" + l.atom : l.atom;
}

Rule makeRule(std::vector<Literal> head, std::vector<Literal> positive,
              std::vector<Literal> naf) {
    Rule r{std::move(head), std::move(positive), std::move(naf)};
    sortUnique(r.head);
    sortUnique(r.positive);
    sortUnique(r.naf);
    if (r.head.empty() && r.positive.empty() && r.naf.empty())
        throw ValidationError("a rule needs a head or a body");
    return r;
}

std::vector<Literal> Program::universe() const {
    std::vector<Literal> lits;
    for (const Rule& r : rules) {
        lits.insert(lits.end(), r.head.begin(), r.head.end());
        lits.insert(lits.end(), r.positive.begin(), r.positive.end());
        lits.insert(lits.end(), r.naf.begin(), r.naf.end());
    }
    sortUnique(lits);
    return lits;
}

bool Program::nafFree() const {
    return std::all_of(rules.begin(), rules.end(),
                       [](const Rule& r) { return r.naf.empty(); });
}

Interpretation makeInterpretation(std::vector<Literal> literals) {
    sortUnique(literals);
    return literals;
}

bool isConsistent(const Interpretation& interp) {
    // interp is sorted: "atom" (positive) sorts right before "-atom".
    for (std::size_t i = 0; i + 1 < interp.size(); ++i)
        if (interp[i].atom == interp[i + 1].atom &&
            interp[i].negated != interp[i + 1].negated)
            return false;
    return true;
}

std::vector<std::string> ClauseSet::atoms() const {
    std::vector<std::string> names;
    for (const Clause& c : clauses)
        for (const SignedAtom& s : c.literals) names.push_back(s.atom);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

// ---- Parsing ---------------------------------------------------------------

namespace {

class RuleCursor {
public:
    RuleCursor(const std::string& text, int lineNumber)
        : text_(text), line_(lineNumber) {}

    void skipSpaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool atEnd() {
        skipSpaces();
        return pos_ >= text_.size();
    }

    char peek() {
        skipSpaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool tryConsume(std::string_view token) {
        skipSpaces();
        if (text_.compare(pos_, token.size(), token) != 0) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token, const std::string& what) {
        if (!tryConsume(token)) fail("expected " + what);
    }

    char rawPeek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }
    std::size_t position() const { return pos_; }
    void restore(std::size_t pos) { pos_ = pos; }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

private:
    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
};

bool identChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string parseName(RuleCursor& cursor, const char* what) {
    char c = cursor.peek();
    if (std::isupper(static_cast<unsigned char>(c)))
        cursor.fail("variables are not allowed in ground programs");
    bool nameOk = std::islower(static_cast<unsigned char>(c)) ||
                  std::isdigit(static_cast<unsigned char>(c));
    if (!nameOk) cursor.fail(std::string("expected ") + what);
    std::string name;
    while (identChar(cursor.rawPeek())) {
        name.push_back(cursor.rawPeek());
        cursor.advance();
    }
    return name;
}

Literal parseLiteral(RuleCursor& cursor) {
    bool negated = cursor.tryConsume("-");
    char c = cursor.peek();
    if (!std::islower(static_cast<unsigned char>(c))) {
        if (std::isupper(static_cast<unsigned char>(c)))
            cursor.fail("variables are not allowed in ground programs");
        cursor.fail("expected an atom");
    }
    std::string text = parseName(cursor, "an atom");
    if (cursor.rawPeek() == '\'') {
        text.push_back('\'');
        cursor.advance();
    }
    if (cursor.rawPeek() == '(') {
        cursor.advance();
        text.push_back('(');
        for (;;) {
            text += parseName(cursor, "a constant argument");
            if (cursor.tryConsume(",")) {
                text.push_back(',');
                continue;
            }
            cursor.expect(")", "')' closing the argument list");
            text.push_back(')');
            break;
        }
    }
    return Literal{std::move(text), negated};
}

} // namespace

Program parseProgram(std::string_view text) {
    Program program;
    int lineNumber = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line(text.substr(
            start, end == std::string_view::npos ? std::string_view::npos
                                                 : end - start));
        ++lineNumber;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;

        if (std::size_t percent = line.find('%'); percent != std::string::npos)
            line.erase(percent);
        while (!line.empty() &&
               (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        RuleCursor cursor(line, lineNumber);
        std::vector<Literal> head, positive, naf;

        if (cursor.peek() != ':') {
            for (;;) {
                head.push_back(parseLiteral(cursor));
                // " v " separates head literals; a lone "v" before another
                // literal is the separator, since "." or ":-" follows a
                // complete head.
                if (cursor.peek() == 'v') {
                    RuleCursor probe = cursor;
                    probe.advance();
                    char after = probe.rawPeek();
                    if (after == ' ' || after == '\t') {
                        cursor.advance();
                        continue;
                    }
                }
                break;
            }
        }

        if (cursor.tryConsume(":-")) {
            for (;;) {
                bool isNaf = false;
                std::size_t save = cursor.position();
                if (cursor.tryConsume("not")) {
                    char after = cursor.rawPeek();
                    if (after == ' ' || after == '\t')
                        isNaf = true;
                    else
                        cursor.restore(save); // an atom merely starting with "not"
                }
                Literal l = parseLiteral(cursor);
                (isNaf ? naf : positive).push_back(std::move(l));
                if (!cursor.tryConsume(",")) break;
            }
        }

        cursor.expect(".", "'.' terminating the rule");
        if (!cursor.atEnd()) cursor.fail("unexpected text after the rule");
        if (head.empty() && positive.empty() && naf.empty())
            cursor.fail("a rule needs a head or a body");
        program.rules.push_back(
            makeRule(std::move(head), std::move(positive), std::move(naf)));
    }
    return program;
}

// ---- Emission --------------------------------------------------------------

namespace {

void emitBody(std::ostringstream& out, const Rule& r) {
    bool first = true;
    for (const Literal& l : r.positive) {
        if (!first) out << ", ";
        out << to_string(l);
        first = false;
    }
    for (const Literal& l : r.naf) {
        if (!first) out << ", ";
        out << "not " << to_string(l);
        first = false;
    }
}

} // namespace

std::string emitDlv(const Program& program) {
    std::ostringstream out;
    for (const Rule& r : program.rules) {
        for (std::size_t i = 0; i < r.head.size(); ++i) {
            if (i != 0) out << " v ";
            out << to_string(r.head[i]);
        }
        if (!r.positive.empty() || !r.naf.empty()) {
            if (!r.head.empty()) out << " ";
            out << ":- ";
            emitBody(out, r);
        }
        out << ".\n";
    }
    return out.str();
}

std::string emitDlv(const ClauseSet& clauses) {
    std::ostringstream out;
    for (const Clause& c : clauses.clauses) {
        if (c.literals.empty())
            throw ValidationError("cannot emit an empty clause");
        bool firstHead = true;
        for (const SignedAtom& s : c.literals) {
            if (!s.positive) continue;
            out << (firstHead ? "" : " v ") << s.atom;
            firstHead = false;
        }
        bool anyBody =
            std::any_of(c.literals.begin(), c.literals.end(),
                        [](const SignedAtom& s) { return !s.positive; });
        if (anyBody) {
            if (!firstHead) out << " ";
            out << ":- ";
            bool firstBody = true;
            for (const SignedAtom& s : c.literals) {
                if (s.positive) continue;
                if (!firstBody) out << ", ";
                out << s.atom;
                firstBody = false;
            }
        }
        out << ".\n";
    }
    return out.str();
}

// ---- Reduct ----------------------------------------------------------------

Program reduct(const Program& program, const Interpretation& interp) {
    Program out;
    for (const Rule& r : program.rules) {
        bool blocked = std::any_of(r.naf.begin(), r.naf.end(), [&](const Literal& l) {
            return std::binary_search(interp.begin(), interp.end(), l);
        });
        if (blocked) continue;
        Rule kept = r;
        kept.naf.clear();
        out.rules.push_back(std::move(kept));
    }
    return out;
}

// ---- Shared solver machinery ------------------------------------------------

namespace {

// Literal <-> variable index for one program/interpretation universe.
struct Index {
    std::vector<Literal> lits; // sorted

    int idOf(const Literal& l) const {
        auto it = std::lower_bound(lits.begin(), lits.end(), l);
        if (it == lits.end() || *it != l) return -1;
        return static_cast<int>(it - lits.begin());
    }
    int size() const { return static_cast<int>(lits.size()); }
};

// CNF literal encoding: +(var+1) positive, -(var+1) negative.
using CnfClause = std::vector<int>;

// Small deterministic DPLL over 0..vars-1. Branches lowest unassigned
// variable, false first.
struct Sat {
    int vars = 0;
    std::vector<CnfClause> clauses;

    // assignment: 0 unknown, +1 true, -1 false
    bool propagate(std::vector<int>& val) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const CnfClause& c : clauses) {
                int unknownLit = 0;
                int unknownCount = 0;
                bool satisfied = false;
                for (int enc : c) {
                    int v = std::abs(enc) - 1;
                    int want = enc > 0 ? 1 : -1;
                    if (val[static_cast<std::size_t>(v)] == want) {
                        satisfied = true;
                        break;
                    }
                    if (val[static_cast<std::size_t>(v)] == 0) {
                        ++unknownCount;
                        unknownLit = enc;
                    }
                }
                if (satisfied) continue;
                if (unknownCount == 0) return false;
                if (unknownCount == 1) {
                    int v = std::abs(unknownLit) - 1;
                    val[static_cast<std::size_t>(v)] = unknownLit > 0 ? 1 : -1;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool findModel(std::vector<int>& val) const {
        if (!propagate(val)) return false;
        int branch = -1;
        for (int v = 0; v < vars; ++v)
            if (val[static_cast<std::size_t>(v)] == 0) {
                branch = v;
                break;
            }
        if (branch < 0) return true;
        for (int choice : {-1, 1}) {
            std::vector<int> copy = val;
            copy[static_cast<std::size_t>(branch)] = choice;
            if (findModel(copy)) {
                val = std::move(copy);
                return true;
            }
        }
        return false;
    }

    void allModels(std::vector<int>& val,
                   const std::function<void(const std::vector<int>&)>& visit) const {
        if (!propagate(val)) return;
        int branch = -1;
        for (int v = 0; v < vars; ++v)
            if (val[static_cast<std::size_t>(v)] == 0) {
                branch = v;
                break;
            }
        if (branch < 0) {
            visit(val);
            return;
        }
        for (int choice : {-1, 1}) {
            std::vector<int> copy = val;
            copy[static_cast<std::size_t>(branch)] = choice;
            allModels(copy, visit);
        }
    }
};

// Rule satisfaction clause under the interpretation semantics:
// I |= r  iff  head∩I ≠ ∅  or  positive ⊄ I  or  naf∩I ≠ ∅.
CnfClause satisfactionClause(const Rule& r, const Index& index) {
    CnfClause c;
    for (const Literal& l : r.head) c.push_back(index.idOf(l) + 1);
    for (const Literal& l : r.positive) c.push_back(-(index.idOf(l) + 1));
    for (const Literal& l : r.naf) c.push_back(index.idOf(l) + 1);
    return c;
}

// Binary exclusion clauses for every atom occurring with both signs.
void appendConsistencyClauses(const Index& index, std::vector<CnfClause>& clauses) {
    for (std::size_t i = 0; i + 1 < index.lits.size(); ++i)
        if (index.lits[i].atom == index.lits[i + 1].atom &&
            index.lits[i].negated != index.lits[i + 1].negated)
            clauses.push_back(
                {-(static_cast<int>(i) + 1), -(static_cast<int>(i) + 2)});
}

bool satisfiesNafFree(const Program& program, const Interpretation& interp) {
    for (const Rule& r : program.rules) {
        bool headHit = std::any_of(r.head.begin(), r.head.end(), [&](const Literal& l) {
            return std::binary_search(interp.begin(), interp.end(), l);
        });
        if (headHit) continue;
        bool bodyHolds =
            std::all_of(r.positive.begin(), r.positive.end(), [&](const Literal& l) {
                return std::binary_search(interp.begin(), interp.end(), l);
            });
        if (bodyHolds) return false;
    }
    return true;
}

// Minimality via subset search, restricted to the literals of interp (all
// others are false in any candidate subset). Assumes interp is a model.
bool isMinimalModelImpl(const Interpretation& interp, const Program& program) {
    if (interp.empty()) return true; // no strict subset exists

    Index index{interp};
    Sat sat;
    sat.vars = index.size();
    for (const Rule& r : program.rules) {
        bool bodyInside =
            std::all_of(r.positive.begin(), r.positive.end(), [&](const Literal& l) {
                return index.idOf(l) >= 0;
            });
        if (!bodyInside) continue; // body false under every subset of interp
        CnfClause c;
        for (const Literal& l : r.head)
            if (int id = index.idOf(l); id >= 0) c.push_back(id + 1);
        for (const Literal& l : r.positive) c.push_back(-(index.idOf(l) + 1));
        sat.clauses.push_back(std::move(c));
    }
    CnfClause strictSubset;
    for (int v = 0; v < sat.vars; ++v) strictSubset.push_back(-(v + 1));
    sat.clauses.push_back(std::move(strictSubset));

    std::vector<int> val(static_cast<std::size_t>(sat.vars), 0);
    return !sat.findModel(val);
}

bool isAnswerSetImpl(const Program& program, const Interpretation& interp) {
    if (!isConsistent(interp)) return false;
    Program red = reduct(program, interp);
    if (!satisfiesNafFree(red, interp)) return false;
    return isMinimalModelImpl(interp, red);
}

// Consistent minimal models of a naf-free program: find a model, shrink it
// to a minimal one, report it, block all its supersets, repeat.
std::vector<Interpretation> enumerateNafFree(const Program& program) {
    Index index{program.universe()};
    Sat sat;
    sat.vars = index.size();
    for (const Rule& r : program.rules)
        sat.clauses.push_back(satisfactionClause(r, index));
    appendConsistencyClauses(index, sat.clauses);

    std::vector<Interpretation> found;
    for (;;) {
        std::vector<int> val(static_cast<std::size_t>(sat.vars), 0);
        if (!sat.findModel(val)) break;

        std::vector<int> model;
        for (int v = 0; v < sat.vars; ++v)
            if (val[static_cast<std::size_t>(v)] == 1) model.push_back(v);

        for (;;) { // shrink to a minimal model
            Sat shrink = sat;
            std::vector<char> inModel(static_cast<std::size_t>(sat.vars), 0);
            for (int v : model) inModel[static_cast<std::size_t>(v)] = 1;
            CnfClause dropOne;
            for (int v = 0; v < sat.vars; ++v) {
                if (inModel[static_cast<std::size_t>(v)])
                    dropOne.push_back(-(v + 1));
                else
                    shrink.clauses.push_back({-(v + 1)});
            }
            shrink.clauses.push_back(std::move(dropOne));
            std::vector<int> sub(static_cast<std::size_t>(sat.vars), 0);
            if (!shrink.findModel(sub)) break;
            model.clear();
            for (int v = 0; v < sat.vars; ++v)
                if (sub[static_cast<std::size_t>(v)] == 1) model.push_back(v);
        }

        Interpretation interp;
        for (int v : model)
            interp.push_back(index.lits[static_cast<std::size_t>(v)]);
        found.push_back(interp);

        CnfClause block; // kill this minimal model and all supersets
        for (int v : model) block.push_back(-(v + 1));
        if (block.empty()) break; // {} is the unique minimal model
        sat.clauses.push_back(std::move(block));
    }
    return found;
}

// Three-valued search for programs with naf: unit propagation on the rule
// satisfaction clauses, support propagation, consistency, and a full
// definitional check at every leaf.
struct GenericSearch {
    struct IRule {
        std::vector<int> head, pos, naf;
    };

    Index index;
    std::vector<IRule> rules;
    std::vector<int> negPartner; // var of the opposite-sign literal, or -1
    const Program* program = nullptr;
    std::vector<Interpretation> out;

    // val: 0 unknown, 1 true, -1 false
    bool propagate(std::vector<int>& val) const {
        bool changed = true;
        while (changed) {
            changed = false;

            for (std::size_t v = 0; v < val.size(); ++v) {
                if (val[v] != 1) continue;
                int partner = negPartner[v];
                if (partner < 0) continue;
                if (val[static_cast<std::size_t>(partner)] == 1) return false;
                if (val[static_cast<std::size_t>(partner)] == 0) {
                    val[static_cast<std::size_t>(partner)] = -1;
                    changed = true;
                }
            }

            // satisfaction: some head true, or some positive false, or some
            // naf true — if only one way remains open, take it
            for (const IRule& r : rules) {
                bool satisfied = false;
                int unknownCount = 0;
                int forceVar = -1, forceVal = 0;
                auto scan = [&](const std::vector<int>& part, int satisfyingVal) {
                    for (int v : part) {
                        if (val[static_cast<std::size_t>(v)] == satisfyingVal)
                            satisfied = true;
                        else if (val[static_cast<std::size_t>(v)] == 0) {
                            ++unknownCount;
                            forceVar = v;
                            forceVal = satisfyingVal;
                        }
                    }
                };
                scan(r.head, 1);
                scan(r.pos, -1);
                scan(r.naf, 1);
                if (satisfied) continue;
                if (unknownCount == 0) return false;
                if (unknownCount == 1) {
                    val[static_cast<std::size_t>(forceVar)] = forceVal;
                    changed = true;
                }
            }

            // support: every true literal needs a rule that can fire with it
            // as the only true head; unknown literals with no such candidate
            // rule can never be supported and must be false
            for (std::size_t v = 0; v < val.size(); ++v) {
                if (val[v] == -1) continue;
                int candidates = 0;
                const IRule* only = nullptr;
                for (const IRule& r : rules) {
                    if (!std::count(r.head.begin(), r.head.end(),
                                    static_cast<int>(v)))
                        continue;
                    bool live = true;
                    for (int b : r.pos)
                        if (val[static_cast<std::size_t>(b)] == -1) live = false;
                    for (int c : r.naf)
                        if (val[static_cast<std::size_t>(c)] == 1) live = false;
                    for (int h : r.head)
                        if (h != static_cast<int>(v) &&
                            val[static_cast<std::size_t>(h)] == 1)
                            live = false;
                    if (!live) continue;
                    ++candidates;
                    only = &r;
                    if (candidates > 1) break;
                }
                if (candidates == 0) {
                    if (val[v] == 1) return false;
                    val[v] = -1;
                    changed = true;
                } else if (candidates == 1 && val[v] == 1) {
                    for (int b : only->pos) {
                        if (val[static_cast<std::size_t>(b)] == -1) return false;
                        if (val[static_cast<std::size_t>(b)] == 0) {
                            val[static_cast<std::size_t>(b)] = 1;
                            changed = true;
                        }
                    }
                    for (int c : only->naf) {
                        if (val[static_cast<std::size_t>(c)] == 1) return false;
                        if (val[static_cast<std::size_t>(c)] == 0) {
                            val[static_cast<std::size_t>(c)] = -1;
                            changed = true;
                        }
                    }
                    for (int h : only->head) {
                        if (h == static_cast<int>(v)) continue;
                        if (val[static_cast<std::size_t>(h)] == 1) return false;
                        if (val[static_cast<std::size_t>(h)] == 0) {
                            val[static_cast<std::size_t>(h)] = -1;
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    void search(std::vector<int> val) {
        if (!propagate(val)) return;
        int branch = -1;
        for (std::size_t v = 0; v < val.size(); ++v)
            if (val[v] == 0) {
                branch = static_cast<int>(v);
                break;
            }
        if (branch < 0) {
            Interpretation interp;
            for (std::size_t v = 0; v < val.size(); ++v)
                if (val[v] == 1) interp.push_back(index.lits[v]);
            if (isAnswerSetImpl(*program, interp)) out.push_back(std::move(interp));
            return;
        }
        for (int choice : {-1, 1}) {
            std::vector<int> copy = val;
            copy[static_cast<std::size_t>(branch)] = choice;
            search(std::move(copy));
        }
    }
};

std::vector<Interpretation> enumerateGeneric(const Program& program) {
    GenericSearch gs;
    gs.index = Index{program.universe()};
    gs.program = &program;
    for (const Rule& r : program.rules) {
        GenericSearch::IRule ir;
        for (const Literal& l : r.head) ir.head.push_back(gs.index.idOf(l));
        for (const Literal& l : r.positive) ir.pos.push_back(gs.index.idOf(l));
        for (const Literal& l : r.naf) ir.naf.push_back(gs.index.idOf(l));
        gs.rules.push_back(std::move(ir));
    }
    gs.negPartner.assign(gs.index.lits.size(), -1);
    for (std::size_t v = 0; v < gs.index.lits.size(); ++v) {
        Literal flipped = gs.index.lits[v];
        flipped.negated = !flipped.negated;
        gs.negPartner[v] = gs.index.idOf(flipped);
    }
    gs.search(std::vector<int>(gs.index.lits.size(), 0));
    return std::move(gs.out);
}

} // namespace

// ---- Public semantics -------------------------------------------------------

bool isMinimalModel(const Interpretation& interp, const Program& program,
                    std::size_t interpretationBound) {
    if (!program.nafFree())
        throw ValidationError("minimal models are defined for naf-free programs");
    Interpretation canon = makeInterpretation(interp);
    std::vector<Literal> universe = program.universe();
    for (const Literal& l : canon)
        if (!std::binary_search(universe.begin(), universe.end(), l))
            throw ValidationError("interpretation literal " + to_string(l) +
                                  " does not occur in the program");
    if (canon.size() > interpretationBound)
        throw BoundError("interpretation larger than the minimality search bound (" +
                         std::to_string(interpretationBound) + " literals)");
    if (!satisfiesNafFree(program, canon)) return false;
    return isMinimalModelImpl(canon, program);
}

bool isAnswerSet(const Program& program, const Interpretation& interp,
                 std::size_t interpretationBound) {
    Interpretation canon = makeInterpretation(interp);
    if (!isConsistent(canon)) return false;
    if (canon.size() > interpretationBound)
        throw BoundError("interpretation larger than the minimality search bound (" +
                         std::to_string(interpretationBound) + " literals)");
    return isAnswerSetImpl(program, canon);
}

std::vector<Interpretation> enumerateAnswerSets(const Program& program,
                                                std::size_t maxAtoms) {
    std::vector<Literal> universe = program.universe();
    if (universe.size() > maxAtoms)
        throw BoundError("program universe has " + std::to_string(universe.size()) +
                         " literals, above the enumeration bound of " +
                         std::to_string(maxAtoms));
    std::vector<Interpretation> sets =
        program.nafFree() ? enumerateNafFree(program) : enumerateGeneric(program);
    std::sort(sets.begin(), sets.end());
    return sets;
}

// ---- Completion -------------------------------------------------------------

namespace {

Clause makeClause(std::vector<SignedAtom> literals) {
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
    return Clause{std::move(literals)};
}

} // namespace

ClauseSet completion(const Program& program) {
    for (const Rule& r : program.rules) {
        if (r.head.size() > 1)
            throw ValidationError("completion requires a normal program "
                                  "(disjunctive head found)");
        for (const std::vector<Literal>* part : {&r.head, &r.positive, &r.naf})
            for (const Literal& l : *part)
                if (l.negated)
                    throw ValidationError(
                        "completion requires a program without classical negation");
    }

    std::map<std::string, std::vector<const Rule*>> byHead;
    std::vector<const Rule*> constraints;
    std::vector<std::string> atoms;
    for (const Literal& l : program.universe()) atoms.push_back(l.atom);
    for (const std::string& a : atoms) byHead[a]; // ensure every atom has an entry
    for (const Rule& r : program.rules) {
        if (r.isConstraint())
            constraints.push_back(&r);
        else
            byHead[r.head.front().atom].push_back(&r);
    }

    ClauseSet out;
    for (const auto& [atom, bodies] : byHead) {
        if (bodies.empty()) { // no rule can derive it: atom ≡ ⊥
            out.clauses.push_back(makeClause({{atom, false}}));
            continue;
        }
        for (const Rule* r : bodies) { // body → atom
            std::vector<SignedAtom> c{{atom, true}};
            for (const Literal& l : r->positive) c.push_back({l.atom, false});
            for (const Literal& l : r->naf) c.push_back({l.atom, true});
            out.clauses.push_back(makeClause(std::move(c)));
        }
        bool hasFact = std::any_of(bodies.begin(), bodies.end(),
                                   [](const Rule* r) { return r->isFact(); });
        if (hasFact) continue; // atom ≡ ⊤; the fact clause above suffices

        // atom → body_1 ∨ ... ∨ body_k, clausified by picking one conjunct
        // from every body (cross product)
        std::vector<std::vector<SignedAtom>> picks;
        for (const Rule* r : bodies) {
            std::vector<SignedAtom> options;
            for (const Literal& l : r->positive) options.push_back({l.atom, true});
            for (const Literal& l : r->naf) options.push_back({l.atom, false});
            picks.push_back(std::move(options));
        }
        std::vector<SignedAtom> chosen;
        std::function<void(std::size_t)> distribute = [&](std::size_t at) {
            if (at == picks.size()) {
                std::vector<SignedAtom> c{{atom, false}};
                c.insert(c.end(), chosen.begin(), chosen.end());
                out.clauses.push_back(makeClause(std::move(c)));
                return;
            }
            for (const SignedAtom& option : picks[at]) {
                chosen.push_back(option);
                distribute(at + 1);
                chosen.pop_back();
            }
        };
        distribute(0);
    }

    for (const Rule* r : constraints) { // ⊥ ≡ the bodies: each must fail
        std::vector<SignedAtom> c;
        for (const Literal& l : r->positive) c.push_back({l.atom, false});
        for (const Literal& l : r->naf) c.push_back({l.atom, true});
        out.clauses.push_back(makeClause(std::move(c)));
    }
    return out;
}

std::vector<std::vector<std::string>> modelsOfCompletion(const ClauseSet& clauses,
                                                         std::size_t maxAtoms) {
    std::vector<std::string> atoms = clauses.atoms();
    if (atoms.size() > maxAtoms)
        throw BoundError("clause set mentions " + std::to_string(atoms.size()) +
                         " atoms, above the model search bound of " +
                         std::to_string(maxAtoms));

    auto idOf = [&](const std::string& a) {
        return static_cast<int>(std::lower_bound(atoms.begin(), atoms.end(), a) -
                                atoms.begin());
    };
    Sat sat;
    sat.vars = static_cast<int>(atoms.size());
    for (const Clause& c : clauses.clauses) {
        CnfClause enc;
        for (const SignedAtom& s : c.literals)
            enc.push_back(s.positive ? idOf(s.atom) + 1 : -(idOf(s.atom) + 1));
        sat.clauses.push_back(std::move(enc));
    }

    std::vector<std::vector<std::string>> models;
    std::vector<int> val(static_cast<std::size_t>(sat.vars), 0);
    sat.allModels(val, [&](const std::vector<int>& assignment) {
        std::vector<std::string> trueAtoms;
        for (std::size_t v = 0; v < assignment.size(); ++v)
            if (assignment[v] == 1) trueAtoms.push_back(atoms[v]);
        models.push_back(std::move(trueAtoms));
    });
    std::sort(models.begin(), models.end());
    return models;
}

bool isTight(const Program& program) {
    std::vector<Literal> universe = program.universe();
    Index index{universe};
    std::vector<std::vector<int>> edges(universe.size());
    for (const Rule& r : program.rules)
        for (const Literal& h : r.head)
            for (const Literal& b : r.positive)
                edges[static_cast<std::size_t>(index.idOf(h))].push_back(
                    index.idOf(b));

    // 0 unvisited, 1 on stack, 2 done
    std::vector<int> state(universe.size(), 0);
    std::function<bool(int)> hasCycle = [&](int v) {
        state[static_cast<std::size_t>(v)] = 1;
        for (int w : edges[static_cast<std::size_t>(v)]) {
            if (state[static_cast<std::size_t>(w)] == 1) return true;
            if (state[static_cast<std::size_t>(w)] == 0 && hasCycle(w)) return true;
        }
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (std::size_t v = 0; v < universe.size(); ++v)
        if (state[v] == 0 && hasCycle(static_cast<int>(v))) return false;
    return true;
}

} // namespace smti::asp
