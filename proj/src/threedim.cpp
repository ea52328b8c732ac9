#include "smti/threedim.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smti::threedim {

int PairPreferenceList::groupOf(PartnerPair pr) const {
    for (int g = 0; g < groupCount(); ++g)
        for (const PartnerPair& member : groups[static_cast<std::size_t>(g)])
            if (member == pr) return g + 1;
    return 0;
}

std::vector<PartnerPair> PairPreferenceList::acceptable() const {
    std::vector<PartnerPair> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    std::sort(out.begin(), out.end());
    return out;
}

int PairPreferenceList::acceptableCount() const {
    int total = 0;
    for (const auto& g : groups) total += static_cast<int>(g.size());
    return total;
}

int PairPreferenceList::rankOf(PartnerPair pr) const {
    int g = groupOf(pr);
    return g != 0 ? g : groupCount() + 1;
}

void PairPreferenceList::validate(int firstCount, int secondCount,
                                  const std::string& who) const {
    if (groups.empty())
        throw ValidationError(who + ": preference list needs at least the neutral group");
    std::vector<PartnerPair> seen;
    for (int g = 0; g < groupCount(); ++g) {
        const auto& group = groups[static_cast<std::size_t>(g)];
        if (group.empty() && g + 1 != groupCount())
            throw ValidationError(who + ": tie-group " + std::to_string(g + 1) +
                                  " is empty but only the last group may be");
        for (const PartnerPair& pr : group) {
            if (pr.first < 1 || pr.first > firstCount || pr.second < 1 ||
                pr.second > secondCount)
                throw ValidationError(who + ": partner pair " + std::to_string(pr.first) +
                                      "," + std::to_string(pr.second) + " out of range");
            if (std::find(seen.begin(), seen.end(), pr) != seen.end())
                throw ValidationError(who + ": partner pair " + std::to_string(pr.first) +
                                      "," + std::to_string(pr.second) +
                                      " appears in two tie-groups");
            seen.push_back(pr);
        }
    }
}

void Instance3::validate() const {
    for (int i = 1; i <= menCount(); ++i)
        men[static_cast<std::size_t>(i - 1)].validate(womenCount(), childrenCount(),
                                                      "m" + std::to_string(i));
    for (int j = 1; j <= womenCount(); ++j)
        women[static_cast<std::size_t>(j - 1)].validate(menCount(), childrenCount(),
                                                        "w" + std::to_string(j));
    for (int k = 1; k <= childrenCount(); ++k)
        children[static_cast<std::size_t>(k - 1)].validate(menCount(), womenCount(),
                                                           "c" + std::to_string(k));
}

Matching3 Matching3::allSingles(int n, int p, int r) {
    Matching3 m;
    m.manAssign.assign(static_cast<std::size_t>(n), PartnerPair{});
    m.womanMan.assign(static_cast<std::size_t>(p), 0);
    m.childMan.assign(static_cast<std::size_t>(r), 0);
    return m;
}

Matching3 Matching3::fromTriples(int n, int p, int r, const std::vector<Triple>& triples) {
    Matching3 m = allSingles(n, p, r);
    for (const Triple& t : triples) {
        if (t.man < 1 || t.man > n || t.woman < 1 || t.woman > p || t.child < 1 ||
            t.child > r)
            throw ValidationError("triple index out of range");
        if (m.manAssign[static_cast<std::size_t>(t.man - 1)] != PartnerPair{})
            throw ValidationError("m" + std::to_string(t.man) + " appears in two triples");
        if (m.womanMan[static_cast<std::size_t>(t.woman - 1)] != 0)
            throw ValidationError("w" + std::to_string(t.woman) + " appears in two triples");
        if (m.childMan[static_cast<std::size_t>(t.child - 1)] != 0)
            throw ValidationError("c" + std::to_string(t.child) + " appears in two triples");
        m.manAssign[static_cast<std::size_t>(t.man - 1)] = PartnerPair{t.woman, t.child};
        m.womanMan[static_cast<std::size_t>(t.woman - 1)] = t.man;
        m.childMan[static_cast<std::size_t>(t.child - 1)] = t.man;
    }
    return m;
}

std::vector<Triple> Matching3::triples() const {
    std::vector<Triple> out;
    for (int i = 1; i <= menCount(); ++i) {
        PartnerPair a = manAssign[static_cast<std::size_t>(i - 1)];
        if (a != PartnerPair{}) out.push_back(Triple{i, a.first, a.second});
    }
    return out;
}

std::vector<PersonRef> Matching3::singles() const {
    std::vector<PersonRef> out;
    for (int i = 1; i <= menCount(); ++i)
        if (manAssign[static_cast<std::size_t>(i - 1)] == PartnerPair{})
            out.push_back({Side::Man, i});
    for (int j = 1; j <= womenCount(); ++j)
        if (womanMan[static_cast<std::size_t>(j - 1)] == 0) out.push_back({Side::Woman, j});
    for (int k = 1; k <= childrenCount(); ++k)
        if (childMan[static_cast<std::size_t>(k - 1)] == 0) out.push_back({Side::Child, k});
    return out;
}

bool canonicalLess(const Matching3& a, const Matching3& b) {
    auto keySequence = [](const Matching3& m) {
        std::vector<std::tuple<int, int, int, int>> keys;
        for (const Triple& t : m.triples()) keys.emplace_back(0, t.man, t.woman, t.child);
        for (const PersonRef& s : m.singles())
            keys.emplace_back(1, static_cast<int>(s.side), s.index, 0);
        return keys;
    };
    auto ka = keySequence(a);
    auto kb = keySequence(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

std::string to_text(const Matching3& m) {
    std::string out;
    auto add = [&](const std::string& item) {
        if (!out.empty()) out += ',';
        out += item;
    };
    for (const Triple& t : m.triples())
        add("m" + std::to_string(t.man) + "-w" + std::to_string(t.woman) + "-c" +
            std::to_string(t.child));
    for (const PersonRef& s : m.singles()) {
        std::string name = to_string(s);
        add(name + "-" + name + "-" + name);
    }
    return out;
}

Matching3 matching3FromText(int n, int p, int r, std::string_view text) {
    Matching3 m = Matching3::allSingles(n, p, r);
    std::vector<bool> seenMan(static_cast<std::size_t>(n) + 1, false);
    std::vector<bool> seenWoman(static_cast<std::size_t>(p) + 1, false);
    std::vector<bool> seenChild(static_cast<std::size_t>(r) + 1, false);

    auto claim = [&](PersonRef who) {
        std::vector<bool>& seen = who.side == Side::Man    ? seenMan
                                  : who.side == Side::Woman ? seenWoman
                                                            : seenChild;
        int limit = who.side == Side::Man ? n : who.side == Side::Woman ? p : r;
        if (who.index < 1 || who.index > limit)
            throw ValidationError("matching mentions unknown person " + to_string(who));
        if (seen[static_cast<std::size_t>(who.index)])
            throw ValidationError(to_string(who) + " appears twice in the matching");
        seen[static_cast<std::size_t>(who.index)] = true;
    };

    std::size_t start = 0;
    while (start < text.size() || (start == 0 && !text.empty())) {
        std::size_t end = text.find(',', start);
        std::string_view item = text.substr(start, end == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : end - start);
        start = end == std::string_view::npos ? text.size() : end + 1;
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw ValidationError("empty entry in matching text");

        std::vector<std::string_view> parts;
        std::size_t from = 0;
        while (true) {
            std::size_t dash = item.find('-', from);
            parts.push_back(item.substr(from, dash == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : dash - from));
            if (dash == std::string_view::npos) break;
            from = dash + 1;
        }
        if (parts.size() == 1) {
            claim(parsePersonRef(parts[0])); // explicit single
        } else if (parts.size() == 3) {
            PersonRef a = parsePersonRef(parts[0]);
            PersonRef b = parsePersonRef(parts[1]);
            PersonRef c = parsePersonRef(parts[2]);
            if (a == b && b == c) {
                claim(a);
            } else {
                Triple t;
                int men = 0, women = 0, childs = 0;
                for (PersonRef x : {a, b, c}) {
                    switch (x.side) {
                    case Side::Man: t.man = x.index; ++men; break;
                    case Side::Woman: t.woman = x.index; ++women; break;
                    case Side::Child: t.child = x.index; ++childs; break;
                    }
                }
                if (men != 1 || women != 1 || childs != 1)
                    throw ValidationError("bad triple '" + std::string(item) +
                                          "': need one man, one woman, one child");
                claim({Side::Man, t.man});
                claim({Side::Woman, t.woman});
                claim({Side::Child, t.child});
                m.manAssign[static_cast<std::size_t>(t.man - 1)] =
                    PartnerPair{t.woman, t.child};
                m.womanMan[static_cast<std::size_t>(t.woman - 1)] = t.man;
                m.childMan[static_cast<std::size_t>(t.child - 1)] = t.man;
            }
        } else {
            throw ValidationError("bad entry '" + std::string(item) +
                                  "': expected x or x-y-z");
        }
        if (end == std::string_view::npos) break;
    }
    return m;
}

namespace {

// Rank of a person's current assignment in their own list.
int assignmentRank3(const Instance3& inst, const Matching3& m, PersonRef who) {
    if (who.side == Side::Man) {
        const PairPreferenceList& list = inst.men[static_cast<std::size_t>(who.index - 1)];
        PartnerPair a = m.manAssign[static_cast<std::size_t>(who.index - 1)];
        return a == PartnerPair{} ? list.selfRank() : list.rankOf(a);
    }
    if (who.side == Side::Woman) {
        const PairPreferenceList& list =
            inst.women[static_cast<std::size_t>(who.index - 1)];
        int man = m.womanMan[static_cast<std::size_t>(who.index - 1)];
        if (man == 0) return list.selfRank();
        int child = m.manAssign[static_cast<std::size_t>(man - 1)].second;
        return list.rankOf(PartnerPair{man, child});
    }
    const PairPreferenceList& list =
        inst.children[static_cast<std::size_t>(who.index - 1)];
    int man = m.childMan[static_cast<std::size_t>(who.index - 1)];
    if (man == 0) return list.selfRank();
    int woman = m.manAssign[static_cast<std::size_t>(man - 1)].first;
    return list.rankOf(PartnerPair{man, woman});
}

} // namespace

BlockReport3 analyzeStability3(const Instance3& inst, const Matching3& m) {
    if (m.menCount() != inst.menCount() || m.womenCount() != inst.womenCount() ||
        m.childrenCount() != inst.childrenCount())
        throw ValidationError("matching size does not fit the instance");

    BlockReport3 report;

    auto noteUnacceptable = [&](PersonRef who, bool assigned, int rank, int groupCount) {
        if (assigned && rank == groupCount + 1) {
            report.blockingIndividuals.push_back(who);
            report.unacceptablyAssigned.push_back(who);
        }
    };
    for (int i = 1; i <= inst.menCount(); ++i) {
        PersonRef who{Side::Man, i};
        bool assigned = m.manAssign[static_cast<std::size_t>(i - 1)] != PartnerPair{};
        noteUnacceptable(who, assigned, assignmentRank3(inst, m, who),
                         inst.men[static_cast<std::size_t>(i - 1)].groupCount());
    }
    for (int j = 1; j <= inst.womenCount(); ++j) {
        PersonRef who{Side::Woman, j};
        bool assigned = m.womanMan[static_cast<std::size_t>(j - 1)] != 0;
        noteUnacceptable(who, assigned, assignmentRank3(inst, m, who),
                         inst.women[static_cast<std::size_t>(j - 1)].groupCount());
    }
    for (int k = 1; k <= inst.childrenCount(); ++k) {
        PersonRef who{Side::Child, k};
        bool assigned = m.childMan[static_cast<std::size_t>(k - 1)] != 0;
        noteUnacceptable(who, assigned, assignmentRank3(inst, m, who),
                         inst.children[static_cast<std::size_t>(k - 1)].groupCount());
    }

    for (int i = 1; i <= inst.menCount(); ++i) {
        int manRank = assignmentRank3(inst, m, {Side::Man, i});
        const PairPreferenceList& manList = inst.men[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= inst.womenCount(); ++j) {
            int womanRank = assignmentRank3(inst, m, {Side::Woman, j});
            const PairPreferenceList& womanList =
                inst.women[static_cast<std::size_t>(j - 1)];
            for (int k = 1; k <= inst.childrenCount(); ++k) {
                if (manList.rankOf(PartnerPair{j, k}) >= manRank) continue;
                if (womanList.rankOf(PartnerPair{i, k}) >= womanRank) continue;
                const PairPreferenceList& childList =
                    inst.children[static_cast<std::size_t>(k - 1)];
                if (childList.rankOf(PartnerPair{i, j}) >=
                    assignmentRank3(inst, m, {Side::Child, k}))
                    continue;
                report.blockingTriples.push_back(Triple{i, j, k});
            }
        }
    }
    return report;
}

bool isWeaklyStable3(const Instance3& inst, const Matching3& m) {
    return analyzeStability3(inst, m).stable();
}

namespace {

void assignFrom3(const Instance3& inst, int fromMan, Matching3& partial,
                 std::vector<bool>& womanTaken, std::vector<bool>& childTaken,
                 const std::function<void(const Matching3&)>& visit) {
    int n = inst.menCount();
    if (fromMan > n) {
        visit(partial);
        return;
    }
    for (int j = 1; j <= inst.womenCount(); ++j) {
        if (womanTaken[static_cast<std::size_t>(j)]) continue;
        for (int k = 1; k <= inst.childrenCount(); ++k) {
            if (childTaken[static_cast<std::size_t>(k)]) continue;
            womanTaken[static_cast<std::size_t>(j)] = true;
            childTaken[static_cast<std::size_t>(k)] = true;
            partial.manAssign[static_cast<std::size_t>(fromMan - 1)] = PartnerPair{j, k};
            partial.womanMan[static_cast<std::size_t>(j - 1)] = fromMan;
            partial.childMan[static_cast<std::size_t>(k - 1)] = fromMan;
            assignFrom3(inst, fromMan + 1, partial, womanTaken, childTaken, visit);
            partial.manAssign[static_cast<std::size_t>(fromMan - 1)] = PartnerPair{};
            partial.womanMan[static_cast<std::size_t>(j - 1)] = 0;
            partial.childMan[static_cast<std::size_t>(k - 1)] = 0;
            womanTaken[static_cast<std::size_t>(j)] = false;
            childTaken[static_cast<std::size_t>(k)] = false;
        }
    }
    assignFrom3(inst, fromMan + 1, partial, womanTaken, childTaken, visit);
}

} // namespace

std::vector<Matching3> enumerateStable3(const Instance3& inst, std::size_t personBound,
                                        Mode mode) {
    std::size_t persons = static_cast<std::size_t>(inst.menCount()) +
                          static_cast<std::size_t>(inst.womenCount()) +
                          static_cast<std::size_t>(inst.childrenCount());
    if (persons > personBound)
        throw BoundError("instance has " + std::to_string(persons) +
                         " persons, enumeration bound is " + std::to_string(personBound));

    int n = inst.menCount();
    int p = inst.womenCount();
    int r = inst.childrenCount();

    if (mode == Mode::Serial || n == 0) {
        std::vector<Matching3> out;
        Matching3 partial = Matching3::allSingles(n, p, r);
        std::vector<bool> womanTaken(static_cast<std::size_t>(p) + 1, false);
        std::vector<bool> childTaken(static_cast<std::size_t>(r) + 1, false);
        assignFrom3(inst, 1, partial, womanTaken, childTaken, [&](const Matching3& m) {
            if (isWeaklyStable3(inst, m)) out.push_back(m);
        });
        return out;
    }

    // Branch b < p*r assigns m1 the pair (b/r + 1, b%r + 1); branch p*r leaves
    // him single. Bucket concatenation reproduces the serial visit order.
    int branches = p * r;
    std::vector<std::vector<Matching3>> buckets(static_cast<std::size_t>(branches) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int b = 0; b <= branches; ++b) {
        Matching3 partial = Matching3::allSingles(n, p, r);
        std::vector<bool> womanTaken(static_cast<std::size_t>(p) + 1, false);
        std::vector<bool> childTaken(static_cast<std::size_t>(r) + 1, false);
        if (b < branches) {
            int j = b / r + 1;
            int k = b % r + 1;
            partial.manAssign[0] = PartnerPair{j, k};
            partial.womanMan[static_cast<std::size_t>(j - 1)] = 1;
            partial.childMan[static_cast<std::size_t>(k - 1)] = 1;
            womanTaken[static_cast<std::size_t>(j)] = true;
            childTaken[static_cast<std::size_t>(k)] = true;
        }
        auto& bucket = buckets[static_cast<std::size_t>(b)];
        assignFrom3(inst, 2, partial, womanTaken, childTaken, [&](const Matching3& m) {
            if (isWeaklyStable3(inst, m)) bucket.push_back(m);
        });
    }
    std::vector<Matching3> out;
    for (auto& bucket : buckets) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

bool existsStable3(const Instance3& inst, std::size_t personBound) {
    return !enumerateStable3(inst, personBound).empty();
}

} // namespace smti::threedim
