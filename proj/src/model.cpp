#include "smti/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

namespace smti {

std::string sideName(Side s) {
    switch (s) {
    case Side::Man: return "man";
    case Side::Woman: return "woman";
    case Side::Child: return "child";
    }
    return "?";
}

std::string to_string(const PersonRef& p) {
    char tag = p.side == Side::Man ? 'm' : p.side == Side::Woman ? 'w' : 'c';
    return tag + std::to_string(p.index);
}

PersonRef parsePersonRef(std::string_view text) {
    if (text.size() < 2)
        throw ValidationError("bad person reference '" + std::string(text) + "'");
    Side side;
    switch (text[0]) {
    case 'm': side = Side::Man; break;
    case 'w': side = Side::Woman; break;
    case 'c': side = Side::Child; break;
    default:
        throw ValidationError("bad person reference '" + std::string(text) +
                              "': expected leading m, w or c");
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
    if (ec != std::errc{} || ptr != text.data() + text.size() || index < 1)
        throw ValidationError("bad person reference '" + std::string(text) +
                              "': expected a positive index");
    return PersonRef{side, index};
}

int PreferenceList::groupOf(int partner) const {
    for (int g = 0; g < groupCount(); ++g)
        for (int member : groups[g])
            if (member == partner) return g + 1;
    return 0;
}

std::vector<int> PreferenceList::acceptable() const {
    std::vector<int> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    std::sort(out.begin(), out.end());
    return out;
}

int PreferenceList::acceptableCount() const {
    int total = 0;
    for (const auto& g : groups) total += static_cast<int>(g.size());
    return total;
}

std::vector<int> PreferenceList::preferred() const {
    std::vector<int> out;
    for (int g = 0; g + 1 < groupCount(); ++g)
        out.insert(out.end(), groups[g].begin(), groups[g].end());
    std::sort(out.begin(), out.end());
    return out;
}

int PreferenceList::rankOfPartner(int partner) const {
    int g = groupOf(partner);
    return g != 0 ? g : groupCount() + 1;
}

int PreferenceList::costOfPartner(int partner) const {
    int g = groupOf(partner);
    if (g == 0)
        throw ValidationError("cost requested for unacceptable partner " +
                              std::to_string(partner));
    int preferredCount = 0;
    for (int i = 0; i + 1 < g; ++i) preferredCount += static_cast<int>(groups[i].size());
    return preferredCount + 1;
}

int PreferenceList::selfCost() const {
    int preferredCount = 0;
    for (int i = 0; i + 1 < groupCount(); ++i)
        preferredCount += static_cast<int>(groups[i].size());
    return preferredCount + 1;
}

void PreferenceList::validate(int partnerCount, const std::string& who) const {
    if (groups.empty())
        throw ValidationError(who + ": preference list needs at least the neutral group");
    std::set<int> seen;
    for (int g = 0; g < groupCount(); ++g) {
        if (groups[g].empty() && g + 1 != groupCount())
            throw ValidationError(who + ": tie-group " + std::to_string(g + 1) +
                                  " is empty but only the last group may be");
        for (int member : groups[g]) {
            if (member < 1 || member > partnerCount)
                throw ValidationError(who + ": partner index " + std::to_string(member) +
                                      " out of range 1.." + std::to_string(partnerCount));
            if (!seen.insert(member).second)
                throw ValidationError(who + ": partner index " + std::to_string(member) +
                                      " appears in two tie-groups");
        }
    }
}

const PreferenceList& Instance::listOf(PersonRef who) const {
    if (who.side == Side::Man) {
        if (who.index < 1 || who.index > menCount())
            throw ValidationError("no such man: " + to_string(who));
        return men[who.index - 1];
    }
    if (who.side == Side::Woman) {
        if (who.index < 1 || who.index > womenCount())
            throw ValidationError("no such woman: " + to_string(who));
        return women[who.index - 1];
    }
    throw ValidationError("two-sided instance has no children");
}

void Instance::validate() const {
    for (int i = 1; i <= menCount(); ++i)
        men[i - 1].validate(womenCount(), "m" + std::to_string(i));
    for (int j = 1; j <= womenCount(); ++j)
        women[j - 1].validate(menCount(), "w" + std::to_string(j));
}

namespace {

// Rank of an assignment (partner or self) from `who`'s point of view.
int assignmentRank(const Instance& inst, PersonRef who, PersonRef what) {
    const PreferenceList& list = inst.listOf(who);
    if (what == who) return list.selfRank();
    Side opposite = who.side == Side::Man ? Side::Woman : Side::Man;
    if (what.side != opposite)
        throw ValidationError("assignment " + to_string(what) + " is not a valid partner for " +
                              to_string(who));
    return list.rankOfPartner(what.index);
}

} // namespace

bool Instance::prefersStrictly(PersonRef who, PersonRef a, PersonRef b) const {
    return assignmentRank(*this, who, a) < assignmentRank(*this, who, b);
}

int Instance::partnerCost(PersonRef who, PersonRef assignment) const {
    const PreferenceList& list = listOf(who);
    if (assignment == who) return list.selfCost();
    return list.costOfPartner(assignment.index);
}

Matching Matching::allSingles(int n, int p) {
    Matching m;
    m.manPartner.assign(static_cast<std::size_t>(n), 0);
    m.womanPartner.assign(static_cast<std::size_t>(p), 0);
    return m;
}

Matching Matching::fromPairs(int n, int p, const std::vector<std::pair<int, int>>& pairs) {
    Matching m = allSingles(n, p);
    for (auto [i, j] : pairs) {
        if (i < 1 || i > n)
            throw ValidationError("man index " + std::to_string(i) + " out of range");
        if (j < 1 || j > p)
            throw ValidationError("woman index " + std::to_string(j) + " out of range");
        if (m.manPartner[i - 1] != 0)
            throw ValidationError("m" + std::to_string(i) + " is paired twice");
        if (m.womanPartner[j - 1] != 0)
            throw ValidationError("w" + std::to_string(j) + " is paired twice");
        m.manPartner[i - 1] = j;
        m.womanPartner[j - 1] = i;
    }
    return m;
}

PersonRef Matching::assignmentOf(PersonRef who) const {
    if (who.side == Side::Man) {
        int j = manPartner.at(static_cast<std::size_t>(who.index - 1));
        return j == 0 ? who : PersonRef{Side::Woman, j};
    }
    int i = womanPartner.at(static_cast<std::size_t>(who.index - 1));
    return i == 0 ? who : PersonRef{Side::Man, i};
}

std::vector<std::pair<PersonRef, PersonRef>> Matching::canonicalPairs() const {
    std::vector<std::pair<PersonRef, PersonRef>> out;
    for (int i = 1; i <= menCount(); ++i)
        if (int j = manPartner[i - 1]; j != 0)
            out.emplace_back(PersonRef{Side::Man, i}, PersonRef{Side::Woman, j});
    for (int i = 1; i <= menCount(); ++i)
        if (manPartner[i - 1] == 0)
            out.emplace_back(PersonRef{Side::Man, i}, PersonRef{Side::Man, i});
    for (int j = 1; j <= womenCount(); ++j)
        if (womanPartner[j - 1] == 0)
            out.emplace_back(PersonRef{Side::Woman, j}, PersonRef{Side::Woman, j});
    return out;
}

bool canonicalLess(const Matching& a, const Matching& b) {
    auto pa = a.canonicalPairs();
    auto pb = b.canonicalPairs();
    auto key = [](const std::pair<PersonRef, PersonRef>& pr) {
        return std::tuple(pr.first == pr.second ? 1 : 0, pr.first, pr.second);
    };
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                        [&](const auto& x, const auto& y) {
                                            return key(x) < key(y);
                                        });
}

std::string to_text(const Matching& m) {
    std::string out;
    for (const auto& [a, b] : m.canonicalPairs()) {
        if (!out.empty()) out += ',';
        out += to_string(a) + "-" + to_string(b);
    }
    return out;
}

Matching matchingFromText(int n, int p, std::string_view text) {
    Matching m = Matching::allSingles(n, p);
    std::vector<bool> manSeen(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> womanSeen(static_cast<std::size_t>(p) + 1, false);

    auto claim = [&](PersonRef who) {
        auto& seen = who.side == Side::Man ? manSeen : womanSeen;
        int limit = who.side == Side::Man ? n : p;
        if (who.index < 1 || who.index > limit)
            throw ValidationError("matching mentions unknown person " + to_string(who));
        if (seen[static_cast<std::size_t>(who.index)])
            throw ValidationError(to_string(who) + " appears twice in the matching");
        seen[static_cast<std::size_t>(who.index)] = true;
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        std::string_view item = text.substr(start, end == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        // Trim surrounding spaces.
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) {
            if (end == std::string_view::npos && text.find_first_not_of(' ') ==
                                                     std::string_view::npos)
                break; // wholly empty matching text = all singles
            throw ValidationError("empty pair in matching text");
        }
        std::size_t dash = item.find('-');
        if (dash == std::string_view::npos || dash == 0 || dash + 1 >= item.size())
            throw ValidationError("bad pair '" + std::string(item) + "': expected x-y");
        PersonRef a = parsePersonRef(item.substr(0, dash));
        PersonRef b = parsePersonRef(item.substr(dash + 1));
        if (a.side == Side::Child || b.side == Side::Child)
            throw ValidationError("bad pair '" + std::string(item) +
                                  "': two-sided matchings have no children");
        if (a == b) {
            claim(a); // explicit single; already defaulted
            continue;
        }
        if (a.side == b.side)
            throw ValidationError("bad pair '" + std::string(item) +
                                  "': both persons on the same side");
        PersonRef man = a.side == Side::Man ? a : b;
        PersonRef woman = a.side == Side::Man ? b : a;
        claim(man);
        claim(woman);
        m.manPartner[man.index - 1] = woman.index;
        m.womanPartner[woman.index - 1] = man.index;
    }
    return m;
}

BlockReport analyzeStability(const Instance& inst, const Matching& m) {
    if (m.menCount() != inst.menCount() || m.womenCount() != inst.womenCount())
        throw ValidationError("matching size does not fit the instance");

    BlockReport report;

    auto noteUnacceptable = [&](PersonRef who) {
        PersonRef partner = m.assignmentOf(who);
        if (partner == who) return;
        if (!inst.listOf(who).isAcceptable(partner.index)) {
            report.unacceptablePairings.emplace_back(who, partner);
            report.blockingIndividuals.push_back(who);
        }
    };
    for (int i = 1; i <= inst.menCount(); ++i) noteUnacceptable({Side::Man, i});
    for (int j = 1; j <= inst.womenCount(); ++j) noteUnacceptable({Side::Woman, j});

    for (int i = 1; i <= inst.menCount(); ++i) {
        PersonRef man{Side::Man, i};
        PersonRef manHas = m.assignmentOf(man);
        for (int j = 1; j <= inst.womenCount(); ++j) {
            PersonRef woman{Side::Woman, j};
            if (manHas == woman) continue; // already together
            if (inst.prefersStrictly(man, woman, manHas) &&
                inst.prefersStrictly(woman, man, m.assignmentOf(woman)))
                report.blockingPairs.emplace_back(man, woman);
        }
    }
    return report;
}

bool isWeaklyStable(const Instance& inst, const Matching& m) {
    return analyzeStability(inst, m).stable();
}

std::string criterionName(Criterion c) {
    switch (c) {
    case Criterion::SexEqual: return "sexeq";
    case Criterion::Egalitarian: return "egal";
    case Criterion::Regret: return "regret";
    case Criterion::Singles: return "singles";
    case Criterion::ManWeight: return "man-weight";
    case Criterion::WomanWeight: return "woman-weight";
    }
    return "?";
}

int CostReport::value(Criterion c) const {
    switch (c) {
    case Criterion::SexEqual: return sexEqual;
    case Criterion::Egalitarian: return weight;
    case Criterion::Regret: return regret;
    case Criterion::Singles: return singles;
    case Criterion::ManWeight: return manWeight;
    case Criterion::WomanWeight: return womanWeight;
    }
    return 0;
}

CostReport matchingCost(const Instance& inst, const Matching& m) {
    if (m.menCount() != inst.menCount() || m.womenCount() != inst.womenCount())
        throw ValidationError("matching size does not fit the instance");
    CostReport r;
    for (int i = 1; i <= inst.menCount(); ++i) {
        PersonRef man{Side::Man, i};
        int c = inst.partnerCost(man, m.assignmentOf(man));
        r.manWeight += c;
        r.regret = std::max(r.regret, c);
        if (m.manPartner[i - 1] == 0) ++r.singles;
    }
    for (int j = 1; j <= inst.womenCount(); ++j) {
        PersonRef woman{Side::Woman, j};
        int c = inst.partnerCost(woman, m.assignmentOf(woman));
        r.womanWeight += c;
        r.regret = std::max(r.regret, c);
        if (m.womanPartner[j - 1] == 0) ++r.singles;
    }
    r.weight = r.manWeight + r.womanWeight;
    r.sexEqual = std::abs(r.manWeight - r.womanWeight);
    return r;
}

} // namespace smti
