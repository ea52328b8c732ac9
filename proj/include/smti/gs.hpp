// Extended Gale-Shapley (deferred acceptance) for instances with ties and
// unacceptable partners. Ties are broken up front into strict lists, then the
// classical proposal rounds run on the broken instance; the result is weakly
// stable for the original instance (breaking ties never creates a blocking
// pair: strict preference in the original stays strict in the broken lists).
//
// Tie-breaking, precisely:
//   * Only non-neutral tie-groups are ordered (members of the neutral group
//     are tied with staying single; nobody ever proposes to them and
//     receivers always reject them, so their order is irrelevant).
//   * Lexicographic: each group is ordered by ascending partner index.
//   * Seeded(seed): each group (pre-sorted ascending) is shuffled with a
//     Fisher-Yates pass driven by a single splitmix64 stream seeded with
//     `seed`. Draw order is fixed and documented so results are portable:
//     men in ascending index order, then women, and for each person their
//     non-neutral groups in list order; a group of size g consumes g-1 draws
//     (for positions g-1 down to 1, swap with position next() % (i+1)).
//
// With the broken lists in hand, proposers work down their strict preferred
// list; a receiver holds the best proposer so far and rejects anyone in her
// neutral group or unacceptable to her. No proposals to neutral partners and
// no acceptances of neutral proposers means nobody ends up strictly
// preferring single, so the output has no blocking individuals by
// construction.
#pragma once

#include <cstdint>

#include "smti/model.hpp"

namespace smti::gs {

struct TieBreak {
    enum class Kind { Lexicographic, Seeded };
    Kind kind = Kind::Lexicographic;
    std::uint64_t seed = 0;

    static TieBreak lexicographic() { return {Kind::Lexicographic, 0}; }
    static TieBreak seeded(std::uint64_t seed) { return {Kind::Seeded, seed}; }
};

enum class ProposingSide { Men, Women };

// Returns a weakly stable matching of `inst`. Deterministic for a fixed
// tieBreak and side; polynomial time. In the classical special case (no
// ties, complete lists, n = p) with ProposingSide::Men the result is the
// M-optimal stable matching.
Matching solve(const Instance& inst, TieBreak tieBreak = TieBreak::lexicographic(),
               ProposingSide side = ProposingSide::Men);

// The generator behind TieBreak::Seeded, exposed for reuse by the instance
// generator: the public-domain splitmix64 sequence.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double nextUnit() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }
};

} // namespace smti::gs
