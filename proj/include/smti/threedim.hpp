// Three-sided matching: men rank (woman, child) pairs, women rank
// (man, child) pairs, children rank (man, woman) pairs; a matching is a
// partition into man-woman-child triples and singles. Tie-group mechanics
// (neutral last group, unacceptable omissions) mirror the two-sided model.
//
// A blocking triple (m, w, c) is one where all three STRICTLY prefer the pair
// formed by the other two over their current assignment (strictness mirrors
// the two-sided weak-stability convention); a blocking individual is a person
// assigned a pair unacceptable to them. Unlike the two-sided problem, a
// weakly stable matching need not exist here, so existence is a real query.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "smti/model.hpp"

namespace smti::threedim {

// A partner pair as seen from one side's list. Which sides the components
// refer to depends on the list owner (see file header).
struct PartnerPair {
    int first = 0;
    int second = 0;

    friend bool operator==(const PartnerPair&, const PartnerPair&) = default;
    friend auto operator<=>(const PartnerPair&, const PartnerPair&) = default;
};

struct PairPreferenceList {
    std::vector<std::vector<PartnerPair>> groups; // last group = neutral

    friend bool operator==(const PairPreferenceList&, const PairPreferenceList&) = default;

    int groupCount() const { return static_cast<int>(groups.size()); }
    int groupOf(PartnerPair pr) const;
    bool isAcceptable(PartnerPair pr) const { return groupOf(pr) != 0; }
    std::vector<PartnerPair> acceptable() const; // sorted
    int acceptableCount() const;
    int rankOf(PartnerPair pr) const; // groupCount()+1 when unacceptable
    int selfRank() const { return groupCount(); }
    void validate(int firstCount, int secondCount, const std::string& who) const;
};

struct Instance3 {
    std::vector<PairPreferenceList> men;      // over (woman, child)
    std::vector<PairPreferenceList> women;    // over (man, child)
    std::vector<PairPreferenceList> children; // over (man, woman)

    friend bool operator==(const Instance3&, const Instance3&) = default;

    int menCount() const { return static_cast<int>(men.size()); }
    int womenCount() const { return static_cast<int>(women.size()); }
    int childrenCount() const { return static_cast<int>(children.size()); }

    void validate() const;
};

struct Triple {
    int man = 0;
    int woman = 0;
    int child = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct Matching3 {
    // Per-man assignment; (0,0) = single. Redundant reverse maps keep the
    // stability scan simple.
    std::vector<PartnerPair> manAssign; // (woman, child)
    std::vector<int> womanMan;          // 0 = single
    std::vector<int> childMan;          // 0 = single

    static Matching3 allSingles(int n, int p, int r);
    static Matching3 fromTriples(int n, int p, int r, const std::vector<Triple>& triples);

    int menCount() const { return static_cast<int>(manAssign.size()); }
    int womenCount() const { return static_cast<int>(womanMan.size()); }
    int childrenCount() const { return static_cast<int>(childMan.size()); }

    std::vector<Triple> triples() const;     // sorted by man index
    std::vector<PersonRef> singles() const;  // sorted (men, women, children)

    friend bool operator==(const Matching3&, const Matching3&) = default;
};

// Total deterministic order: triples (sorted by man) compare before singles,
// lexicographically.
bool canonicalLess(const Matching3& a, const Matching3& b);

// "m1-w2-c1,m2-m2-m2,w1-w1-w1" style: triples first, then self-triples.
std::string to_text(const Matching3& m);
// Parses the triple syntax; singles implied; self-entries like "w1-w1-w1"
// (or the short "w1") accepted.
Matching3 matching3FromText(int n, int p, int r, std::string_view text);

struct BlockReport3 {
    std::vector<Triple> blockingTriples;    // sorted
    std::vector<PersonRef> blockingIndividuals;
    std::vector<PersonRef> unacceptablyAssigned; // same persons, kept explicit

    bool stable() const { return blockingTriples.empty() && blockingIndividuals.empty(); }
};

BlockReport3 analyzeStability3(const Instance3& inst, const Matching3& m);
bool isWeaklyStable3(const Instance3& inst, const Matching3& m);

inline constexpr std::size_t kDefaultPersonBound3 = 9;

enum class Mode { Serial, Parallel };

// All weakly stable 3D matchings in canonical order; possibly empty.
// Mode::Parallel shards on the first man's assignment with identical output.
std::vector<Matching3> enumerateStable3(const Instance3& inst,
                                        std::size_t personBound = kDefaultPersonBound3,
                                        Mode mode = Mode::Parallel);

bool existsStable3(const Instance3& inst, std::size_t personBound = kDefaultPersonBound3);

} // namespace smti::threedim
