#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "smti/asp.hpp"
#include "smti/errors.hpp"
#include "smti/gs.hpp"

using namespace smti;
using asp::Clause;
using asp::ClauseSet;
using asp::Interpretation;
using asp::lit;
using asp::neg;
using asp::Program;
using asp::Rule;

namespace {

Interpretation interp(std::vector<asp::Literal> lits) {
    return asp::makeInterpretation(std::move(lits));
}

// The classic guess structure: two facts, one exception fact, and a
// disjunctive guess guarded by naf. Two answer sets, differing in which
// branch the unguarded person takes.
Program guessProgram() {
    return asp::parseProgram("person(ada).\n"
                             "person(bo).\n"
                             "adult(ada).\n"
                             "junior(ada) v senior(ada) :- person(ada), not adult(ada).\n"
                             "junior(bo) v senior(bo) :- person(bo), not adult(bo).\n");
}

} // namespace

TEST_CASE("parsing builds canonical structures") {
    Program p = asp::parseProgram("a :- b, not c.");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].head == std::vector<asp::Literal>{lit("a")});
    CHECK(p.rules[0].positive == std::vector<asp::Literal>{lit("b")});
    CHECK(p.rules[0].naf == std::vector<asp::Literal>{lit("c")});

    Program guess = asp::parseProgram("a v -a.");
    CHECK(guess.rules[0].head == std::vector<asp::Literal>{lit("a"), neg("a")});
    CHECK(guess.rules[0].isFact());

    Program constraint = asp::parseProgram(":- not sat.");
    CHECK(constraint.rules[0].isConstraint());
    CHECK(constraint.rules[0].naf == std::vector<asp::Literal>{lit("sat")});

    SUBCASE("parts are sorted and deduplicated") {
        Program q = asp::parseProgram("b v a v b :- d, c, not f, not e.");
        CHECK(q.rules[0].head == std::vector<asp::Literal>{lit("a"), lit("b")});
        CHECK(q.rules[0].positive == std::vector<asp::Literal>{lit("c"), lit("d")});
        CHECK(q.rules[0].naf == std::vector<asp::Literal>{lit("e"), lit("f")});
    }

    SUBCASE("comments, blanks, arguments, primes") {
        Program q = asp::parseProgram("% header comment\n"
                                      "\n"
                                      "accept(m1,w2) :- manpropose(m1,w2). % tail\n"
                                      "mancost'(1,2).\n");
        CHECK(q.rules.size() == 2);
        CHECK(q.rules[0].head == std::vector<asp::Literal>{lit("accept(m1,w2)")});
        CHECK(q.rules[1].head == std::vector<asp::Literal>{lit("mancost'(1,2)")});
    }

    SUBCASE("atoms starting with v or not still parse") {
        Program q = asp::parseProgram("value v nothing :- notable.");
        CHECK(q.rules[0].head ==
              std::vector<asp::Literal>{lit("nothing"), lit("value")});
        CHECK(q.rules[0].positive == std::vector<asp::Literal>{lit("notable")});
    }

    SUBCASE("universe collects every occurring literal once") {
        Program q = asp::parseProgram("a v -a :- b, not c.\nb :- not c.\n");
        CHECK(q.universe() == std::vector<asp::Literal>{lit("a"), neg("a"),
                                                        lit("b"), lit("c")});
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(asp::parseProgram("a :- B."), ParseError);
    CHECK_THROWS_AS(asp::parseProgram("a(X) :- b."), ParseError);
    CHECK_THROWS_AS(asp::parseProgram("a :- b"), ParseError);  // missing dot
    CHECK_THROWS_AS(asp::parseProgram("a. b."), ParseError);   // one rule per line
    CHECK_THROWS_AS(asp::parseProgram("."), ParseError);       // empty rule
    CHECK_THROWS_AS(asp::parseProgram("a :-."), ParseError);   // missing body
    CHECK_THROWS_AS(asp::parseProgram("a()."), ParseError);    // empty arguments
    CHECK_THROWS_AS(asp::parseProgram("a(b,)."), ParseError);

    try {
        asp::parseProgram("a.\nb :- Curious.\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
}

TEST_CASE("emission is canonical and round-trips") {
    Program p = asp::parseProgram(
        "accept(m1,w2) :- manpropose(m1,w2), womanpropose(m1,w2).\n"
        ":- not sat.\n"
        "a v b.\n"
        "-accept(m1,w1) v manpropose(m1,w1).\n"
        "big v -big :- small, not tiny.\n");
    std::string text = asp::emitDlv(p);
    CHECK(text ==
          "accept(m1,w2) :- manpropose(m1,w2), womanpropose(m1,w2).\n"
          ":- not sat.\n"
          "a v b.\n"
          "-accept(m1,w1) v manpropose(m1,w1).\n"
          "big v -big :- small, not tiny.\n");
    CHECK(asp::parseProgram(text) == p);
    CHECK(asp::emitDlv(p) == text); // deterministic

    SUBCASE("body order normalizes to positives before naf") {
        Program q = asp::parseProgram("a :- not c, b.");
        CHECK(asp::emitDlv(q) == "a :- b, not c.\n");
        CHECK(asp::parseProgram(asp::emitDlv(q)) == q);
    }
}

TEST_CASE("reduct") {
    SUBCASE("naf-free programs are untouched") {
        Program p = asp::parseProgram("a v b :- c.\nc.\n");
        CHECK(asp::reduct(p, interp({lit("a")})) == p);
    }

    SUBCASE("guess rules are deleted or stripped") {
        Program p = guessProgram();
        Interpretation i = interp(
            {lit("person(ada)"), lit("person(bo)"), lit("adult(ada)"), lit("junior(bo)")});
        Program red = asp::reduct(p, i);
        // ada's guess rule is deleted (adult(ada) in I); bo's survives naf-free
        REQUIRE(red.rules.size() == 4);
        CHECK(red.rules[3].head ==
              std::vector<asp::Literal>{lit("junior(bo)"), lit("senior(bo)")});
        CHECK(red.rules[3].positive == std::vector<asp::Literal>{lit("person(bo)")});
        CHECK(red.rules[3].naf.empty());
        CHECK(red.nafFree());
    }

    SUBCASE("self-defeating rule") {
        Program p = asp::parseProgram("a :- not a.");
        CHECK(asp::reduct(p, interp({lit("a")})).rules.empty());
        Program asFact = asp::reduct(p, {});
        REQUIRE(asFact.rules.size() == 1);
        CHECK(asFact.rules[0].isFact());
        CHECK(asFact.rules[0].head == std::vector<asp::Literal>{lit("a")});
    }
}

TEST_CASE("minimal models") {
    Program p = asp::parseProgram("a v b.");
    CHECK(asp::isMinimalModel(interp({lit("a")}), p));
    CHECK(asp::isMinimalModel(interp({lit("b")}), p));
    CHECK_FALSE(asp::isMinimalModel(interp({lit("a"), lit("b")}), p)); // not minimal
    CHECK_FALSE(asp::isMinimalModel({}, p));                           // not a model

    CHECK(asp::isMinimalModel({}, Program{}));

    SUBCASE("guess reduct") {
        Interpretation i = interp({lit("person(ada)"), lit("person(bo)"),
                                   lit("adult(ada)"), lit("junior(bo)")});
        CHECK(asp::isMinimalModel(i, asp::reduct(guessProgram(), i)));
    }

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(asp::isMinimalModel({}, asp::parseProgram("a :- not b.")),
                        ValidationError);
        CHECK_THROWS_AS(asp::isMinimalModel(interp({lit("zz")}), p), ValidationError);
        CHECK_THROWS_AS(
            asp::isMinimalModel(interp({lit("a"), lit("b")}),
                                asp::parseProgram("a v b.\na :- b.\nb :- a.\n"), 1),
            BoundError);
    }
}

TEST_CASE("answer set recognition") {
    CHECK(asp::isAnswerSet(asp::parseProgram("a."), interp({lit("a")})));
    CHECK_FALSE(asp::isAnswerSet(asp::parseProgram("a."), {}));

    Program self = asp::parseProgram("a :- not a.");
    CHECK_FALSE(asp::isAnswerSet(self, {}));
    CHECK_FALSE(asp::isAnswerSet(self, interp({lit("a")})));

    Program guess = guessProgram();
    Interpretation base = interp(
        {lit("person(ada)"), lit("person(bo)"), lit("adult(ada)")});
    Interpretation asJunior = base, asSenior = base;
    asJunior.push_back(lit("junior(bo)"));
    asSenior.push_back(lit("senior(bo)"));
    CHECK(asp::isAnswerSet(guess, asp::makeInterpretation(asJunior)));
    CHECK(asp::isAnswerSet(guess, asp::makeInterpretation(asSenior)));
    CHECK_FALSE(asp::isAnswerSet(guess, base)); // bo must take a branch

    SUBCASE("inconsistent interpretations are never answer sets") {
        Program facts = asp::parseProgram("a.\n-a.\n");
        CHECK_FALSE(asp::isAnswerSet(facts, interp({lit("a"), neg("a")})));
        CHECK(asp::enumerateAnswerSets(facts).empty());
    }
}

TEST_CASE("enumeration matches the textbook cases") {
    CHECK(asp::enumerateAnswerSets(guessProgram()).size() == 2);

    CHECK(asp::enumerateAnswerSets(asp::parseProgram("a v b.")) ==
          std::vector<Interpretation>{interp({lit("a")}), interp({lit("b")})});

    CHECK(asp::enumerateAnswerSets(asp::parseProgram("a v b.\n:- a.\n")) ==
          std::vector<Interpretation>{interp({lit("b")})});

    CHECK(asp::enumerateAnswerSets(asp::parseProgram("a :- not a.")).empty());

    CHECK(asp::enumerateAnswerSets(asp::parseProgram("a v -a.")) ==
          std::vector<Interpretation>{interp({lit("a")}), interp({neg("a")})});

    CHECK(asp::enumerateAnswerSets(Program{}) == std::vector<Interpretation>{{}});

    SUBCASE("negative loops need support") {
        // b has no rule: forced out; then a :- not b fires
        Program p = asp::parseProgram("a :- not b.");
        CHECK(asp::enumerateAnswerSets(p) ==
              std::vector<Interpretation>{interp({lit("a")})});
    }

    SUBCASE("even loop yields two answer sets") {
        Program p = asp::parseProgram("a :- not b.\nb :- not a.\n");
        CHECK(asp::enumerateAnswerSets(p) ==
              std::vector<Interpretation>{interp({lit("a")}), interp({lit("b")})});
    }

    SUBCASE("positive loop yields none beyond the well-founded part") {
        // a and b only support each other: neither is in any answer set
        Program p = asp::parseProgram("a :- b.\nb :- a.\n");
        CHECK(asp::enumerateAnswerSets(p) == std::vector<Interpretation>{{}});
    }
}

TEST_CASE("universe bound guards enumeration") {
    std::string big;
    for (char c = 'a'; c <= 'z'; ++c) big += std::string(1, c) + "0.\n";
    big += "extra.\n"; // 27 atoms
    Program p = asp::parseProgram(big);
    CHECK_THROWS_AS(asp::enumerateAnswerSets(p), BoundError);
    CHECK(asp::enumerateAnswerSets(p, 27).size() == 1);

    std::vector<asp::Literal> all;
    for (const auto& l : p.universe()) all.push_back(l);
    CHECK_THROWS_AS(asp::isAnswerSet(p, interp(all), 26), BoundError);
    CHECK(asp::isAnswerSet(p, interp(all), 27));
}

TEST_CASE("exhaustive cross-check on small programs") {
    // For every subset of the universe, membership in the enumeration must
    // agree with the definitional check.
    std::vector<std::string> texts = {
        "a v b.\n:- a.\nc :- b, not d.\n",
        "a :- not b.\nb :- not a.\nc v d :- a.\n",
        "p v -p.\nq :- -p.\n:- q, not r.\nr :- q.\n",
        "x.\ny :- x, not z.\nz :- x, not y.\n",
        "a v b v c.\n:- a, b.\nb :- c.\n",
    };
    for (const std::string& text : texts) {
        CAPTURE(text);
        Program p = asp::parseProgram(text);
        std::vector<asp::Literal> universe = p.universe();
        REQUIRE(universe.size() <= 15);
        auto sets = asp::enumerateAnswerSets(p, 15);

        std::size_t count = std::size_t{1} << universe.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            Interpretation candidate;
            for (std::size_t bit = 0; bit < universe.size(); ++bit)
                if (mask & (std::size_t{1} << bit)) candidate.push_back(universe[bit]);
            bool listed = std::binary_search(sets.begin(), sets.end(), candidate);
            CHECK(asp::isAnswerSet(p, candidate) == listed);
        }

        // answer sets form an antichain under inclusion
        for (const auto& x : sets)
            for (const auto& y : sets) {
                if (x == y) continue;
                bool subset = std::includes(y.begin(), y.end(), x.begin(), x.end());
                CHECK_FALSE(subset);
            }
    }
}

TEST_CASE("completion") {
    SUBCASE("single naf rule") {
        Program p = asp::parseProgram("a :- not b.");
        ClauseSet c = asp::completion(p);
        ClauseSet expected;
        expected.clauses = {
            Clause{{{"a", true}, {"b", true}}},   // a ∨ b   (¬b → a)
            Clause{{{"a", false}, {"b", false}}}, // ¬a ∨ ¬b (a → ¬b)
            Clause{{{"b", false}}},               // b has no rules
        };
        CHECK(c == expected);
        CHECK(asp::modelsOfCompletion(c) ==
              std::vector<std::vector<std::string>>{{"a"}});
    }

    SUBCASE("two bodies disjoin") {
        Program p = asp::parseProgram("a :- b.\na :- c.\nb.\n");
        ClauseSet c = asp::completion(p);
        ClauseSet expected;
        expected.clauses = {
            Clause{{{"a", true}, {"b", false}}},             // b → a
            Clause{{{"a", true}, {"c", false}}},             // c → a
            Clause{{{"a", false}, {"b", true}, {"c", true}}}, // a → b ∨ c
            Clause{{{"b", true}}},                           // fact
            Clause{{{"c", false}}},                          // no rules
        };
        CHECK(c == expected);
        CHECK(asp::modelsOfCompletion(c) ==
              std::vector<std::vector<std::string>>{{"a", "b"}});
    }

    SUBCASE("constraints become violation clauses") {
        Program p = asp::parseProgram("a v b :- not c.");
        CHECK_THROWS_AS(asp::completion(p), ValidationError);
        CHECK_THROWS_AS(asp::completion(asp::parseProgram("-a.")), ValidationError);

        Program q = asp::parseProgram("a :- not b.\n:- a, not b.\n");
        ClauseSet c = asp::completion(q);
        // last clause: ¬a ∨ b
        CHECK(c.clauses.back() == Clause{{{"a", false}, {"b", true}}});
        CHECK(asp::modelsOfCompletion(c).empty());
    }

    SUBCASE("facts dominate the equivalence") {
        Program p = asp::parseProgram("a.\na :- b.\nb :- not c.\n");
        auto models = asp::modelsOfCompletion(asp::completion(p));
        CHECK(models == std::vector<std::vector<std::string>>{{"a", "b"}});
    }
}

TEST_CASE("models of hand-built clause sets") {
    ClauseSet xorSet;
    xorSet.clauses = {
        Clause{{{"a", true}, {"b", true}}},
        Clause{{{"a", false}, {"b", false}}},
    };
    CHECK(asp::modelsOfCompletion(xorSet) ==
          std::vector<std::vector<std::string>>{{"a"}, {"b"}});

    ClauseSet unsat;
    unsat.clauses = {Clause{{{"a", true}}}, Clause{{{"a", false}}}};
    CHECK(asp::modelsOfCompletion(unsat).empty());

    ClauseSet big;
    for (int i = 0; i < 27; ++i)
        big.clauses.push_back(Clause{{{"x" + std::to_string(i), true}}});
    CHECK_THROWS_AS(asp::modelsOfCompletion(big), BoundError);
    CHECK(asp::modelsOfCompletion(big, 27).size() == 1);
}

TEST_CASE("tightness") {
    CHECK(asp::isTight(asp::parseProgram("a :- not b.\nb :- not a.\n")));
    CHECK_FALSE(asp::isTight(asp::parseProgram("a :- b.\nb :- a.\n")));
    CHECK_FALSE(asp::isTight(asp::parseProgram("a :- a.")));
    CHECK(asp::isTight(asp::parseProgram("a :- b.\nb :- c.\nc.\n")));
    CHECK(asp::isTight(Program{}));

    SUBCASE("tight programs: completion models equal answer sets") {
        Program p = asp::parseProgram("a :- not b.\nb :- c, not a.\nc :- not d.\n");
        REQUIRE(asp::isTight(p));
        auto sets = asp::enumerateAnswerSets(p);
        std::vector<std::vector<std::string>> projected;
        for (const auto& s : sets) {
            std::vector<std::string> atoms;
            for (const auto& l : s) atoms.push_back(l.atom);
            projected.push_back(atoms);
        }
        CHECK(asp::modelsOfCompletion(asp::completion(p)) == projected);
    }
}

TEST_CASE("clause emission renders implications") {
    ClauseSet c;
    c.clauses = {
        Clause{{{"a", true}, {"b", false}, {"c", false}}},
        Clause{{{"a", false}, {"b", false}}},
        Clause{{{"a", true}, {"b", true}}},
    };
    CHECK(asp::emitDlv(c) ==
          "a :- b, c.\n"
          ":- a, b.\n"
          "a v b.\n");
}

TEST_CASE("randomized structural sweep") {
    // random tiny programs: enumeration agrees with the definitional check
    gs::SplitMix64 rng(2024);
    const char* atoms[] = {"a", "b", "c", "d", "e"};
    for (int trial = 0; trial < 60; ++trial) {
        Program p;
        int ruleCount = 1 + static_cast<int>(rng.next() % 4);
        for (int r = 0; r < ruleCount; ++r) {
            auto draw = [&](int limit) { return static_cast<int>(rng.next() % limit); };
            std::vector<asp::Literal> head, pos, naf;
            int headCount = draw(3); // may be empty = constraint
            for (int i = 0; i < headCount; ++i) {
                asp::Literal l = lit(atoms[draw(5)]);
                l.negated = draw(4) == 0;
                head.push_back(l);
            }
            int bodyCount = draw(3);
            for (int i = 0; i < bodyCount; ++i) {
                asp::Literal l = lit(atoms[draw(5)]);
                l.negated = draw(4) == 0;
                (draw(2) ? pos : naf).push_back(l);
            }
            if (head.empty() && pos.empty() && naf.empty()) head.push_back(lit("a"));
            p.rules.push_back(asp::makeRule(head, pos, naf));
        }
        std::string emitted = asp::emitDlv(p);
        CAPTURE(emitted);

        auto sets = asp::enumerateAnswerSets(p, 15);
        std::vector<asp::Literal> universe = p.universe();
        std::size_t count = std::size_t{1} << universe.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            Interpretation candidate;
            for (std::size_t bit = 0; bit < universe.size(); ++bit)
                if (mask & (std::size_t{1} << bit)) candidate.push_back(universe[bit]);
            bool listed = std::binary_search(sets.begin(), sets.end(), candidate);
            CHECK(asp::isAnswerSet(p, candidate) == listed);
        }

        CHECK(asp::parseProgram(asp::emitDlv(p)) == p);
    }
}
