// Shared hand-built instances for the unit tests. Expected values that
// accompany them in the tests were computed by hand from the definitions.
#pragma once

#include <utility>
#include <vector>

#include "smti/model.hpp"

namespace fixtures {

inline smti::PreferenceList prefs(std::vector<std::vector<int>> groups) {
    smti::PreferenceList list;
    list.groups = std::move(groups);
    return list;
}

// The 2-men / 3-women instance used all over the suite. Lists (last group is
// the neutral group):
//   m1: (w1) (w2 w3) ()      m2: (w2) (w1)
//   w1: (m1 m2) ()           w2: (m1) ()        w3: (m2) (m1) ()
// Its three weakly stable matchings, in canonical order:
//   m1-w1, m2-m2, w2-w2, w3-w3
//   m1-w2, m2-w1, w3-w3
//   m1-w3, m2-w1, w2-w2
inline smti::Instance twoByThree() {
    smti::Instance inst;
    inst.men = {prefs({{1}, {2, 3}, {}}), prefs({{2}, {1}})};
    inst.women = {prefs({{1, 2}, {}}), prefs({{1}, {}}), prefs({{2}, {1}, {}})};
    return inst;
}

// One man, four women; m1 ranks w1,w3 (tied) above w4 (neutral) and finds w2
// unacceptable. Women all rank m1 alone.
inline smti::Instance oneByFour() {
    smti::Instance inst;
    inst.men = {prefs({{1, 3}, {4}})};
    inst.women = {prefs({{1}, {}}), prefs({{1}, {}}), prefs({{1}, {}}), prefs({{1}, {}})};
    return inst;
}

// Classical 3x3 latin-square instance (strict complete lists, three stable
// matchings; the men-proposing optimum pairs everyone with their first
// choice).
inline smti::Instance latinThree() {
    smti::Instance inst;
    inst.men = {prefs({{1}, {2}, {3}, {}}), prefs({{2}, {3}, {1}, {}}),
                prefs({{3}, {1}, {2}, {}})};
    inst.women = {prefs({{2}, {3}, {1}, {}}), prefs({{3}, {1}, {2}, {}}),
                  prefs({{1}, {2}, {3}, {}})};
    return inst;
}

// Everyone finds everyone unacceptable.
inline smti::Instance emptyLists(int n, int p) {
    smti::Instance inst;
    inst.men.assign(static_cast<std::size_t>(n), prefs({{}}));
    inst.women.assign(static_cast<std::size_t>(p), prefs({{}}));
    return inst;
}

inline smti::Matching matchingOf(const smti::Instance& inst,
                                 const std::vector<std::pair<int, int>>& pairs) {
    return smti::Matching::fromPairs(inst.menCount(), inst.womenCount(), pairs);
}

} // namespace fixtures
