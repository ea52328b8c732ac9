#include "smti/encode.hpp"

#include <string>
#include <utility>
#include <vector>

#include "smti/errors.hpp"

namespace smti::encode {

namespace {

using asp::Literal;
using asp::Program;
using asp::lit;
using asp::neg;

std::string pairAccept(int man, int woman) {
    return "accept(" + manName(man) + "," + womanName(woman) + ")";
}

std::string selfAccept(const std::string& person) {
    return "accept(" + person + "," + person + ")";
}

std::string manPropose(int man, int woman) {
    return "manpropose(" + manName(man) + "," + womanName(woman) + ")";
}

std::string womanPropose(int man, int woman) {
    return "womanpropose(" + manName(man) + "," + womanName(woman) + ")";
}

// Alternatives ranked better than or tied with `partner` (group `g` of
// `groups`), excluding `partner` itself, as accept-atom names; staying single
// ties with the neutral (last) group, so the self-accept atom joins there.
template <typename Elem, typename AcceptOf>
std::vector<std::string> rivalAccepts(const std::vector<std::vector<Elem>>& groups, int g,
                                      const Elem& partner, const std::string& self,
                                      AcceptOf&& acceptOf) {
    std::vector<std::string> out;
    for (int b = 0; b <= g; ++b)
        for (const Elem& x : groups[b])
            if (!(b == g && x == partner)) out.push_back(acceptOf(x));
    if (g == static_cast<int>(groups.size()) - 1) out.push_back(self);
    return out;
}

// The guess rules one person contributes to the normal program: a support
// rule per acceptable partner (naf over every better-or-tied alternative) in
// preference order, then the self-accept rule (naf over all acceptable).
template <typename Elem, typename AcceptOf, typename ProposeOf>
void appendNormalBlocks(Program& out, const std::vector<std::vector<Elem>>& groups,
                        const std::string& self, AcceptOf&& acceptOf, ProposeOf&& proposeOf) {
    for (int g = 0; g < static_cast<int>(groups.size()); ++g)
        for (const Elem& partner : groups[g]) {
            std::vector<Literal> nafs;
            for (const std::string& atom : rivalAccepts(groups, g, partner, self, acceptOf))
                nafs.push_back(lit(atom));
            out.rules.push_back(asp::makeRule({lit(proposeOf(partner))}, {}, std::move(nafs)));
        }
    std::vector<Literal> nafs;
    for (const auto& group : groups)
        for (const Elem& x : group) nafs.push_back(lit(acceptOf(x)));
    out.rules.push_back(asp::makeRule({lit(self)}, {}, std::move(nafs)));
}

// The clause-form (disjunctive, classically negated) counterpart: covering
// disjunction over the person's accept alternatives, self-vs-partner
// exclusivity, per-partner proposal support clauses, and refusal facts for
// unacceptable partners.
template <typename AcceptOf, typename ProposeOf>
void appendDisjunctiveBlocks(Program& out, const std::vector<std::vector<int>>& groups,
                             const std::string& self, int partnerCount, AcceptOf&& acceptOf,
                             ProposeOf&& proposeOf) {
    std::vector<Literal> covering;
    for (const auto& group : groups)
        for (int x : group) covering.push_back(lit(acceptOf(x)));
    covering.push_back(lit(self));
    out.rules.push_back(asp::makeRule(std::move(covering)));

    for (const auto& group : groups)
        for (int x : group) out.rules.push_back(asp::makeRule({neg(self), neg(acceptOf(x))}));

    for (int g = 0; g < static_cast<int>(groups.size()); ++g)
        for (int partner : groups[g]) {
            const std::vector<std::string> rivals =
                rivalAccepts(groups, g, partner, self, acceptOf);
            for (const std::string& atom : rivals)
                out.rules.push_back(asp::makeRule({neg(proposeOf(partner)), neg(atom)}));
            std::vector<Literal> support;
            for (const std::string& atom : rivals) support.push_back(lit(atom));
            support.push_back(lit(proposeOf(partner)));
            out.rules.push_back(asp::makeRule(std::move(support)));
        }

    for (int x = 1; x <= partnerCount; ++x) {
        bool acceptable = false;
        for (const auto& group : groups)
            for (int y : group) acceptable = acceptable || y == x;
        if (!acceptable) out.rules.push_back(asp::makeRule({neg(proposeOf(x))}));
    }
}

} // namespace

std::string manName(int i) { return "m" + std::to_string(i); }
std::string womanName(int j) { return "w" + std::to_string(j); }
std::string childName(int k) { return "c" + std::to_string(k); }

asp::Program encodeSmti(const Instance& inst) {
    inst.validate();
    const int n = inst.menCount();
    const int p = inst.womenCount();
    Program out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= p; ++j)
            out.rules.push_back(asp::makeRule({lit(pairAccept(i, j))},
                                              {lit(manPropose(i, j)), lit(womanPropose(i, j))}));
    for (int i = 1; i <= n; ++i)
        appendNormalBlocks(
            out, inst.men[i - 1].groups, selfAccept(manName(i)),
            [i](int w) { return pairAccept(i, w); }, [i](int w) { return manPropose(i, w); });
    for (int j = 1; j <= p; ++j)
        appendNormalBlocks(
            out, inst.women[j - 1].groups, selfAccept(womanName(j)),
            [j](int m) { return pairAccept(m, j); }, [j](int m) { return womanPropose(m, j); });
    return out;
}

asp::Program encodeSmtiDisjunctive(const Instance& inst) {
    inst.validate();
    const int n = inst.menCount();
    const int p = inst.womenCount();
    Program out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= p; ++j) {
            out.rules.push_back(asp::makeRule({neg(pairAccept(i, j)), lit(manPropose(i, j))}));
            out.rules.push_back(asp::makeRule({neg(pairAccept(i, j)), lit(womanPropose(i, j))}));
            out.rules.push_back(asp::makeRule(
                {lit(pairAccept(i, j)), neg(manPropose(i, j)), neg(womanPropose(i, j))}));
        }
    for (int i = 1; i <= n; ++i)
        appendDisjunctiveBlocks(
            out, inst.men[i - 1].groups, selfAccept(manName(i)), p,
            [i](int w) { return pairAccept(i, w); }, [i](int w) { return manPropose(i, w); });
    for (int j = 1; j <= p; ++j)
        appendDisjunctiveBlocks(
            out, inst.women[j - 1].groups, selfAccept(womanName(j)), n,
            [j](int m) { return pairAccept(m, j); }, [j](int m) { return womanPropose(m, j); });
    return out;
}

asp::ClauseSet encodeCompletion(const Instance& inst) {
    return asp::completion(encodeSmti(inst));
}

asp::Program encodeSmti3d(const threedim::Instance3& inst) {
    inst.validate();
    const int n = inst.menCount();
    const int p = inst.womenCount();
    const int r = inst.childrenCount();
    using threedim::PartnerPair;

    auto tripleAccept = [](int m, int w, int c) {
        return "accept(" + manName(m) + "," + womanName(w) + "," + childName(c) + ")";
    };
    auto tripleSelf = [](const std::string& person) {
        return "accept(" + person + "," + person + "," + person + ")";
    };
    auto prop = [&](const char* pred, int m, int w, int c) {
        return std::string(pred) + "(" + manName(m) + "," + womanName(w) + "," + childName(c) +
               ")";
    };

    Program out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= p; ++j)
            for (int k = 1; k <= r; ++k)
                out.rules.push_back(asp::makeRule({lit(tripleAccept(i, j, k))},
                                                  {lit(prop("manprop", i, j, k)),
                                                   lit(prop("womprop", i, j, k)),
                                                   lit(prop("childprop", i, j, k))}));
    for (int i = 1; i <= n; ++i)
        appendNormalBlocks(
            out, inst.men[i - 1].groups, tripleSelf(manName(i)),
            [&, i](PartnerPair pr) { return tripleAccept(i, pr.first, pr.second); },
            [&, i](PartnerPair pr) { return prop("manprop", i, pr.first, pr.second); });
    for (int j = 1; j <= p; ++j)
        appendNormalBlocks(
            out, inst.women[j - 1].groups, tripleSelf(womanName(j)),
            [&, j](PartnerPair pr) { return tripleAccept(pr.first, j, pr.second); },
            [&, j](PartnerPair pr) { return prop("womprop", pr.first, j, pr.second); });
    for (int k = 1; k <= r; ++k)
        appendNormalBlocks(
            out, inst.children[k - 1].groups, tripleSelf(childName(k)),
            [&, k](PartnerPair pr) { return tripleAccept(pr.first, pr.second, k); },
            [&, k](PartnerPair pr) { return prop("childprop", pr.first, pr.second, k); });
    return out;
}

} // namespace smti::encode
