#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "smti/oracle.hpp"

using namespace smti;
using fixtures::matchingOf;
using fixtures::prefs;

namespace {

Instance mutualOneByOne() {
    Instance inst;
    inst.men = {prefs({{1}, {}})};
    inst.women = {prefs({{1}, {}})};
    return inst;
}

} // namespace

TEST_CASE("allMatchings counts partial pairings") {
    CHECK(oracle::allMatchings(mutualOneByOne()).size() == 2);
    CHECK(oracle::allMatchings(fixtures::emptyLists(0, 2)).size() == 1);
    CHECK(oracle::allMatchings(fixtures::emptyLists(2, 2)).size() == 7);
    CHECK(oracle::allMatchings(fixtures::emptyLists(3, 3)).size() == 34);
}

TEST_CASE("allMatchings yields canonical order without duplicates") {
    Instance inst = fixtures::emptyLists(3, 2);
    std::vector<Matching> all = oracle::allMatchings(inst);
    for (std::size_t k = 1; k < all.size(); ++k)
        CHECK(canonicalLess(all[k - 1], all[k])); // strictly increasing = sorted + unique
}

TEST_CASE("enumerateStable finds exactly the stable set of the 2x3 instance") {
    Instance inst = fixtures::twoByThree();
    std::vector<Matching> expected = {
        matchingOf(inst, {{1, 1}}),
        matchingOf(inst, {{1, 2}, {2, 1}}),
        matchingOf(inst, {{1, 3}, {2, 1}}),
    };
    CHECK(oracle::enumerateStable(inst) == expected);
    CHECK(oracle::enumerateStable(inst, oracle::kDefaultPersonBound, oracle::Mode::Serial) ==
          expected);
}

TEST_CASE("enumerateStable edge cases") {
    // All-empty lists: the all-singles matching is the only stable one.
    Instance empty = fixtures::emptyLists(2, 2);
    std::vector<Matching> onlySingles = {Matching::allSingles(2, 2)};
    CHECK(oracle::enumerateStable(empty) == onlySingles);

    // Mutual first choice: leaving both single would be a blocking pair.
    Instance mutual = mutualOneByOne();
    std::vector<Matching> onlyPair = {matchingOf(mutual, {{1, 1}})};
    CHECK(oracle::enumerateStable(mutual) == onlyPair);

    // No men at all.
    Instance noMen = fixtures::emptyLists(0, 3);
    CHECK(oracle::enumerateStable(noMen) == std::vector<Matching>{Matching::allSingles(0, 3)});
}

TEST_CASE("serial and parallel enumeration agree") {
    std::vector<Instance> cases = {
        fixtures::twoByThree(),
        fixtures::latinThree(),
        fixtures::oneByFour(),
        fixtures::emptyLists(3, 3),
    };
    // A wider instance with ties and holes on both sides.
    Instance wide;
    wide.men = {prefs({{1, 2}, {3}, {}}), prefs({{2}, {4, 1}}), prefs({{3}, {}}),
                prefs({{4}, {2}, {}})};
    wide.women = {prefs({{2}, {1}, {}}), prefs({{1, 4}, {2}}), prefs({{3}, {1}, {}}),
                  prefs({{2, 4}, {}})};
    cases.push_back(wide);

    for (const Instance& inst : cases) {
        auto serial = oracle::enumerateStable(inst, oracle::kDefaultPersonBound,
                                              oracle::Mode::Serial);
        auto parallel = oracle::enumerateStable(inst, oracle::kDefaultPersonBound,
                                                oracle::Mode::Parallel);
        CHECK(serial == parallel);
        for (const Matching& m : serial) CHECK(isWeaklyStable(inst, m));
    }
}

TEST_CASE("optimize on the 2x3 instance, all criteria") {
    Instance inst = fixtures::twoByThree();
    Matching s3 = matchingOf(inst, {{1, 1}});
    Matching s2 = matchingOf(inst, {{1, 2}, {2, 1}});
    Matching s1 = matchingOf(inst, {{1, 3}, {2, 1}});

    auto regret = oracle::optimize(inst, Criterion::Regret);
    CHECK(regret.value == 2);
    CHECK(regret.matchings == std::vector<Matching>{s1});

    auto sexeq = oracle::optimize(inst, Criterion::SexEqual);
    CHECK(sexeq.value == 1);
    CHECK(sexeq.matchings == std::vector<Matching>{s2, s1});

    auto egal = oracle::optimize(inst, Criterion::Egalitarian);
    CHECK(egal.value == 9);
    CHECK(egal.matchings == std::vector<Matching>{s3, s2, s1});

    auto singles = oracle::optimize(inst, Criterion::Singles);
    CHECK(singles.value == 1);
    CHECK(singles.matchings == std::vector<Matching>{s2, s1});

    auto manWeight = oracle::optimize(inst, Criterion::ManWeight);
    CHECK(manWeight.value == 3);
    CHECK(manWeight.matchings == std::vector<Matching>{s3});

    auto womanWeight = oracle::optimize(inst, Criterion::WomanWeight);
    CHECK(womanWeight.value == 5);
    CHECK(womanWeight.matchings == std::vector<Matching>{s2, s1});

    auto regretMax = oracle::optimize(inst, Criterion::Regret, Direction::Maximize);
    CHECK(regretMax.value == 3);
    CHECK(regretMax.matchings == std::vector<Matching>{s3, s2});

    // Argmin sets always attain the reported value.
    for (Criterion c : {Criterion::SexEqual, Criterion::Egalitarian, Criterion::Regret,
                        Criterion::Singles, Criterion::ManWeight, Criterion::WomanWeight}) {
        auto best = oracle::optimize(inst, c);
        for (const Matching& m : best.matchings)
            CHECK(matchingCost(inst, m).value(c) == best.value);
    }
}

TEST_CASE("stablePair answers brave queries") {
    Instance inst = fixtures::twoByThree();
    CHECK(oracle::stablePair(inst, 2, 1));
    CHECK(!oracle::stablePair(inst, 2, 3));
    CHECK(oracle::stablePair(inst, 1, 1));

    // Unacceptable partners are never stable pairs.
    Instance fourWomen = fixtures::oneByFour();
    CHECK(!oracle::stablePair(fourWomen, 1, 2));
    CHECK_THROWS_AS(oracle::stablePair(inst, 3, 1), ValidationError);
}

TEST_CASE("person bound is enforced") {
    Instance big = fixtures::emptyLists(7, 6);
    CHECK_THROWS_AS(oracle::allMatchings(big), BoundError);
    CHECK_THROWS_AS(oracle::enumerateStable(big), BoundError);
    CHECK_THROWS_AS(oracle::enumerateStable(fixtures::twoByThree(), 3), BoundError);
    CHECK_NOTHROW(oracle::enumerateStable(fixtures::twoByThree(), 5));
}
