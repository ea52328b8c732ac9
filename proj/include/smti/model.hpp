// Core domain model: two-sided matching instances whose preference lists may
// contain ties (tie-groups) and unacceptable partners (omitted indices), plus
// matchings, weak-stability analysis, and the standard optimization costs.
//
// Conventions used throughout the suite:
//   * Person indices are 1-based on both sides.
//   * A preference list is an ordered sequence of disjoint tie-groups over
//     partner indices. Earlier groups are strictly preferred to later ones;
//     members of one group are tied. The LAST group is the "neutral" group:
//     its members are tied with staying single. Every group except the last
//     must be non-empty; the last group may be empty (no neutral partners).
//   * Partners not mentioned anywhere in the list are unacceptable — worse
//     than staying single. Acceptability need not be mutual.
//   * A matching partitions the persons into man-woman pairs and singles; a
//     single is canonically written as the self-pair (x,x).
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smti/errors.hpp"

namespace smti {

enum class Side { Man, Woman, Child };

std::string sideName(Side s); // "man" / "woman" / "child"

// A person on one side of an instance; index is 1-based.
struct PersonRef {
    Side side = Side::Man;
    int index = 0;

    friend bool operator==(const PersonRef&, const PersonRef&) = default;
    // Men before women before children, then by index. This is the order
    // self-pairs are listed in within a canonical matching.
    friend auto operator<=>(const PersonRef&, const PersonRef&) = default;
};

// Renders as "m3" / "w1" / "c2".
std::string to_string(const PersonRef& p);
// Parses the rendering above; throws ValidationError on malformed input.
PersonRef parsePersonRef(std::string_view text);

// One person's preference list over the opposite side (or, in the 3D variant,
// over partner pairs — the group mechanics are identical, so the 3D code maps
// its pairs to flat indices and reuses this type's logic via templates there).
struct PreferenceList {
    std::vector<std::vector<int>> groups; // last group = neutral group

    friend bool operator==(const PreferenceList&, const PreferenceList&) = default;

    int groupCount() const { return static_cast<int>(groups.size()); }

    // 1-based group position of an acceptable partner, 0 if unacceptable.
    int groupOf(int partner) const;
    bool isAcceptable(int partner) const { return groupOf(partner) != 0; }

    // All acceptable partners, ascending by index.
    std::vector<int> acceptable() const;
    int acceptableCount() const;

    // Partners strictly preferred to staying single (acceptable minus the
    // neutral group), ascending by index.
    std::vector<int> preferred() const;

    // Rank used for comparisons: group position for acceptable partners; the
    // neutral-group position for "stay single"; one past the last group for
    // unacceptable partners (worse than anything listed and than single).
    int rankOfPartner(int partner) const;
    int selfRank() const { return groupCount(); }

    // Cost of being assigned `partner` (which must be acceptable): one plus
    // the number of acceptable partners strictly preferred to it. Tied
    // partners share a cost; the best possible cost is 1.
    int costOfPartner(int partner) const;
    // Cost of staying single: one plus the number of preferred partners.
    int selfCost() const;

    // Checks group invariants against the opposite side's size; `who` names
    // the owner in error messages (e.g. "m2").
    void validate(int partnerCount, const std::string& who) const;
};

// A two-sided instance: men[i-1] ranks women, women[j-1] ranks men.
struct Instance {
    std::vector<PreferenceList> men;
    std::vector<PreferenceList> women;

    friend bool operator==(const Instance&, const Instance&) = default;

    int menCount() const { return static_cast<int>(men.size()); }
    int womenCount() const { return static_cast<int>(women.size()); }

    const PreferenceList& listOf(PersonRef who) const;

    // Throws ValidationError if any list breaks the invariants.
    void validate() const;

    // Does `who` strictly prefer assignment `a` over assignment `b`? Each
    // assignment is either a partner on the opposite side or `who` itself
    // (= staying single).
    bool prefersStrictly(PersonRef who, PersonRef a, PersonRef b) const;

    // partner_cost for an assignment (partner or self). Throws
    // ValidationError for an unacceptable partner (the cost is undefined).
    int partnerCost(PersonRef who, PersonRef assignment) const;
};

// A matching stored as partner indices; 0 means single.
struct Matching {
    std::vector<int> manPartner;   // size n
    std::vector<int> womanPartner; // size p

    static Matching allSingles(int n, int p);
    // Builds from explicit man-woman pairs (everyone else single). Validates
    // ranges and one-partner-per-person.
    static Matching fromPairs(int n, int p, const std::vector<std::pair<int, int>>& pairs);

    int menCount() const { return static_cast<int>(manPartner.size()); }
    int womenCount() const { return static_cast<int>(womanPartner.size()); }

    // The assignment of a person: their partner, or the person itself when
    // single (the canonical self-pair encoding).
    PersonRef assignmentOf(PersonRef who) const;

    // Canonical pair list: man-woman pairs sorted by man index, then all
    // self-pairs sorted by (side, index) — i.e. singles last.
    std::vector<std::pair<PersonRef, PersonRef>> canonicalPairs() const;

    friend bool operator==(const Matching&, const Matching&) = default;
};

// Total deterministic order on matchings of one instance: lexicographic over
// canonicalPairs(), where coupled pairs order before self-pairs.
bool canonicalLess(const Matching& a, const Matching& b);

// "m1-w3,m2-w1,w2-w2" — canonical pair list, self-pairs included.
std::string to_text(const Matching& m);
// Parses the comma-separated pair syntax; singles may be omitted (any person
// not mentioned is single). Accepts both "m1-w3" and the redundant "w3-m1",
// and self-pairs like "w2-w2". Throws ValidationError on malformed input.
Matching matchingFromText(int n, int p, std::string_view text);

// Everything wrong with a matching, stability-wise.
struct BlockReport {
    // (man, woman) not matched together although both strictly prefer each
    // other to their assignments; sorted by (man, woman).
    std::vector<std::pair<PersonRef, PersonRef>> blockingPairs;
    // Persons who strictly prefer staying single to their assignment (exactly
    // the persons paired with someone unacceptable to them); sorted.
    std::vector<PersonRef> blockingIndividuals;
    // Directed (person, partner) pairs where partner is unacceptable to
    // person; sorted by person. One-sided by design.
    std::vector<std::pair<PersonRef, PersonRef>> unacceptablePairings;

    bool stable() const { return blockingPairs.empty() && blockingIndividuals.empty(); }
};

BlockReport analyzeStability(const Instance& inst, const Matching& m);
bool isWeaklyStable(const Instance& inst, const Matching& m);

// Optimization criteria over stable matchings.
enum class Criterion { SexEqual, Egalitarian, Regret, Singles, ManWeight, WomanWeight };
enum class Direction { Minimize, Maximize };

std::string criterionName(Criterion c); // "sexeq", "egal", ...

struct CostReport {
    int manWeight = 0;   // sum of partner costs over men
    int womanWeight = 0; // sum over women
    int weight = 0;      // manWeight + womanWeight (egalitarian cost)
    int sexEqual = 0;    // |manWeight - womanWeight|
    int regret = 0;      // max partner cost over all persons (0 if none)
    int singles = 0;     // number of self-paired persons

    int value(Criterion c) const;
};

// Costs of a matching. Throws ValidationError if any person is paired with an
// unacceptable partner (costs are undefined there; such matchings are never
// weakly stable anyway).
CostReport matchingCost(const Instance& inst, const Matching& m);

} // namespace smti
