#pragma once

// Miniature propositional answer-set kernel.
//
// Programs are finite sets of ground disjunctive rules
//
//     h_1 v ... v h_k :- b_1, ..., b_m, not c_1, ..., not c_n.
//
// over *literals*: an atom or its classical negation (written with a leading
// "-"). "not" is negation as failure. An interpretation is a set of
// literals. The reduct of a program w.r.t. an interpretation I drops every
// rule whose naf body intersects I and strips the naf bodies of the rest;
// I is an answer set iff it is consistent (no atom together with its
// classical negation) and a minimal model of its reduct.
//
// The kernel is deliberately small and exhaustive: enumeration is
// exponential and guarded by explicit bounds. Large encodings are meant to
// be *emitted* (see encode) for external solvers, not solved here. All
// operations are pure; none of them mutate their inputs.
//
// Text format (one rule per line): " v " separates head literals, ":-"
// separates head from body, body items are comma-separated, "not " prefixes
// naf items, "-" prefixes classical negation, every rule ends with ".",
// "%" starts a comment. Atoms are lowercase identifiers (an optional
// trailing ' is tolerated) with optional parenthesized constant arguments,
// e.g. accept(m1,w2). Variables (uppercase identifiers) are rejected: this
// kernel is ground-only.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace smti::asp {

struct Literal {
    std::string atom;      // rendered atom, e.g. "accept(m1,w2)"
    bool negated = false;  // classical negation

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

Literal lit(std::string atom);
Literal neg(std::string atom);
std::string to_string(const Literal& l); // "-atom" when negated

struct Rule {
    // All three parts are kept sorted and duplicate-free.
    std::vector<Literal> head;     // empty = constraint
    std::vector<Literal> positive;
    std::vector<Literal> naf;

    bool isFact() const { return positive.empty() && naf.empty(); }
    bool isConstraint() const { return head.empty(); }

    friend bool operator==(const Rule&, const Rule&) = default;
};

// Canonicalizes (sorts and dedupes) the parts; rejects the empty rule.
Rule makeRule(std::vector<Literal> head, std::vector<Literal> positive = {},
              std::vector<Literal> naf = {});

struct Program {
    std::vector<Rule> rules; // order preserved for emission; irrelevant to semantics

    std::vector<Literal> universe() const; // sorted set of occurring literals
    bool nafFree() const;

    friend bool operator==(const Program&, const Program&) = default;
};

// A set of literals, sorted and duplicate-free.
using Interpretation = std::vector<Literal>;

Interpretation makeInterpretation(std::vector<Literal> literals);
// False when some atom occurs with both signs.
bool isConsistent(const Interpretation& interp);

// Propositional CNF over the atoms of a normal program.
struct SignedAtom {
    std::string atom;
    bool positive = true;

    friend bool operator==(const SignedAtom&, const SignedAtom&) = default;
    friend auto operator<=>(const SignedAtom&, const SignedAtom&) = default;
};

struct Clause {
    std::vector<SignedAtom> literals; // sorted, duplicate-free

    friend bool operator==(const Clause&, const Clause&) = default;
};

struct ClauseSet {
    std::vector<Clause> clauses;

    std::vector<std::string> atoms() const; // sorted set of occurring atoms

    friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

// ---- Parsing and emission -------------------------------------------------

// Parses the rule-per-line text format described above. Throws ParseError
// with line/column on syntax errors (including uppercase variables).
Program parseProgram(std::string_view text);

// Deterministic text in the same grammar; parseProgram(emitDlv(p))
// reproduces p rule for rule.
std::string emitDlv(const Program& program);

// Clauses rendered as rules: positive literals form the head disjunction,
// negative ones the body, e.g. (a v -b v -c) as "a :- b, c." and a purely
// negative clause as a constraint ":- b, c.".
std::string emitDlv(const ClauseSet& clauses);

// ---- Semantics ------------------------------------------------------------

// Keeps each rule whose naf body does not intersect interp, dropping the
// naf part. The result is naf-free. A naf-free program is returned as-is.
Program reduct(const Program& program, const Interpretation& interp);

inline constexpr std::size_t kDefaultInterpretationBound = 30;

// True iff interp satisfies every rule of the naf-free program and no strict
// subset does. Throws ValidationError if the program has naf bodies or
// interp strays outside the universe, BoundError if |interp| exceeds the
// bound (the subset search is exponential in it).
bool isMinimalModel(const Interpretation& interp, const Program& program,
                    std::size_t interpretationBound = kDefaultInterpretationBound);

// Consistent and a minimal model of the reduct.
bool isAnswerSet(const Program& program, const Interpretation& interp,
                 std::size_t interpretationBound = kDefaultInterpretationBound);

inline constexpr std::size_t kDefaultUniverseBound = 26;

// All answer sets, sorted by their literal lists. Throws BoundError when the
// universe exceeds maxAtoms. Naf-free programs are enumerated as consistent
// minimal models (model search, shrink to minimal, block); programs with
// naf run a three-valued search with unit and support propagation, with
// every leaf verified against the definition.
std::vector<Interpretation> enumerateAnswerSets(
    const Program& program, std::size_t maxAtoms = kDefaultUniverseBound);

// ---- Completion (normal programs) -----------------------------------------

// Clark completion of a normal program (each head at most one literal, no
// classical negation anywhere): for every atom, a ≡ body_1 v ... v body_k
// clausified (atoms without rules become -a); every constraint contributes
// its violation clause. Throws ValidationError on non-normal input.
ClauseSet completion(const Program& program);

// All satisfying assignments, each reported as its sorted set of true
// atoms, canonically sorted. Throws BoundError when the clause set mentions
// more than maxAtoms atoms.
std::vector<std::vector<std::string>> modelsOfCompletion(
    const ClauseSet& clauses, std::size_t maxAtoms = kDefaultUniverseBound);

// True iff the positive dependency graph (head literal -> positive body
// literals) is acyclic. Tight normal programs have answer sets exactly the
// models of their completion.
bool isTight(const Program& program);

} // namespace smti::asp
