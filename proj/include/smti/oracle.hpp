// Brute-force reference implementations over small instances: enumerate every
// matching, every weakly stable matching, and every criterion-optimal stable
// matching. These are the ground truth the rest of the suite is tested
// against, so they are written for obviousness, not speed — the only
// performance concession is an optional OpenMP-sharded enumeration kernel,
// which must produce output identical to the serial reference (the test suite
// and the benchmark target compare them).
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "smti/model.hpp"

namespace smti::oracle {

// Default cap on n + p; enumeration is exponential and anything bigger than
// this is a caller mistake rather than a use case.
inline constexpr std::size_t kDefaultPersonBound = 12;

enum class Mode { Serial, Parallel };

// Visits every partition of the persons into man-woman pairs and singles,
// exactly once, in canonical order (see canonicalLess): men are assigned in
// index order, each to w1, w2, ..., wp, then to themselves. Throws BoundError
// if n + p exceeds personBound.
void forEachMatching(const Instance& inst,
                     const std::function<void(const Matching&)>& visit,
                     std::size_t personBound = kDefaultPersonBound);

// forEachMatching, collected.
std::vector<Matching> allMatchings(const Instance& inst,
                                   std::size_t personBound = kDefaultPersonBound);

// Exactly the weakly stable matchings, canonically sorted. Never empty for a
// valid two-sided instance. Mode::Parallel shards the search on the first
// man's assignment; the output order is identical to Mode::Serial.
std::vector<Matching> enumerateStable(const Instance& inst,
                                      std::size_t personBound = kDefaultPersonBound,
                                      Mode mode = Mode::Parallel);

struct Optimum {
    int value = 0;                   // best criterion value over stable matchings
    std::vector<Matching> matchings; // the full argmin/argmax set, sorted
};

// Optimal stable matchings for a criterion: filters enumerateStable by best
// matchingCost value.
Optimum optimize(const Instance& inst, Criterion criterion,
                 Direction direction = Direction::Minimize,
                 std::size_t personBound = kDefaultPersonBound,
                 Mode mode = Mode::Parallel);

// Brave query: is (m_man, w_woman) contained in at least one weakly stable
// matching?
bool stablePair(const Instance& inst, int man, int woman,
                std::size_t personBound = kDefaultPersonBound);

} // namespace smti::oracle
