#include "smti/oracle.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smti::oracle {

namespace {

void checkBound(const Instance& inst, std::size_t personBound) {
    std::size_t persons =
        static_cast<std::size_t>(inst.menCount()) + static_cast<std::size_t>(inst.womenCount());
    if (persons > personBound)
        throw BoundError("instance has " + std::to_string(persons) +
                         " persons, enumeration bound is " + std::to_string(personBound));
}

// Assigns men fromMan..n in index order; women's flags mark who is taken.
// Assignment order per man — w1, w2, ..., wp, single — makes the visit order
// coincide with the canonical matching order.
void assignFrom(const Instance& inst, int fromMan, Matching& partial,
                std::vector<bool>& womanTaken,
                const std::function<void(const Matching&)>& visit) {
    int n = inst.menCount();
    int p = inst.womenCount();
    if (fromMan > n) {
        visit(partial);
        return;
    }
    for (int j = 1; j <= p; ++j) {
        if (womanTaken[static_cast<std::size_t>(j)]) continue;
        womanTaken[static_cast<std::size_t>(j)] = true;
        partial.manPartner[fromMan - 1] = j;
        partial.womanPartner[j - 1] = fromMan;
        assignFrom(inst, fromMan + 1, partial, womanTaken, visit);
        partial.manPartner[fromMan - 1] = 0;
        partial.womanPartner[j - 1] = 0;
        womanTaken[static_cast<std::size_t>(j)] = false;
    }
    // Leave the man single.
    assignFrom(inst, fromMan + 1, partial, womanTaken, visit);
}

} // namespace

void forEachMatching(const Instance& inst,
                     const std::function<void(const Matching&)>& visit,
                     std::size_t personBound) {
    checkBound(inst, personBound);
    Matching partial = Matching::allSingles(inst.menCount(), inst.womenCount());
    std::vector<bool> womanTaken(static_cast<std::size_t>(inst.womenCount()) + 1, false);
    assignFrom(inst, 1, partial, womanTaken, visit);
}

std::vector<Matching> allMatchings(const Instance& inst, std::size_t personBound) {
    std::vector<Matching> out;
    forEachMatching(inst, [&](const Matching& m) { out.push_back(m); }, personBound);
    return out;
}

std::vector<Matching> enumerateStable(const Instance& inst, std::size_t personBound,
                                      Mode mode) {
    checkBound(inst, personBound);
    int n = inst.menCount();
    int p = inst.womenCount();

    if (mode == Mode::Serial || n == 0) {
        std::vector<Matching> out;
        forEachMatching(
            inst,
            [&](const Matching& m) {
                if (isWeaklyStable(inst, m)) out.push_back(m);
            },
            personBound);
        return out;
    }

    // Shard on m1's assignment: branch b < p pairs him with woman b+1, branch
    // b == p leaves him single. Concatenating the buckets in branch order
    // reproduces the serial (canonical) order exactly.
    std::vector<std::vector<Matching>> buckets(static_cast<std::size_t>(p) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int b = 0; b <= p; ++b) {
        Matching partial = Matching::allSingles(n, p);
        std::vector<bool> womanTaken(static_cast<std::size_t>(p) + 1, false);
        if (b < p) {
            partial.manPartner[0] = b + 1;
            partial.womanPartner[b] = 1;
            womanTaken[static_cast<std::size_t>(b) + 1] = true;
        }
        auto& bucket = buckets[static_cast<std::size_t>(b)];
        assignFrom(inst, 2, partial, womanTaken, [&](const Matching& m) {
            if (isWeaklyStable(inst, m)) bucket.push_back(m);
        });
    }
    std::vector<Matching> out;
    for (auto& bucket : buckets)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

Optimum optimize(const Instance& inst, Criterion criterion, Direction direction,
                 std::size_t personBound, Mode mode) {
    std::vector<Matching> stable = enumerateStable(inst, personBound, mode);
    if (stable.empty())
        throw ValidationError("no weakly stable matching found (broken instance?)");
    Optimum best;
    bool first = true;
    for (const Matching& m : stable) {
        int v = matchingCost(inst, m).value(criterion);
        bool better = first || (direction == Direction::Minimize ? v < best.value
                                                                 : v > best.value);
        if (better) {
            best.value = v;
            best.matchings.clear();
            first = false;
        }
        if (v == best.value) best.matchings.push_back(m);
    }
    return best;
}

bool stablePair(const Instance& inst, int man, int woman, std::size_t personBound) {
    if (man < 1 || man > inst.menCount() || woman < 1 || woman > inst.womenCount())
        throw ValidationError("stablePair: person index out of range");
    for (const Matching& m : enumerateStable(inst, personBound))
        if (m.manPartner[man - 1] == woman) return true;
    return false;
}

} // namespace smti::oracle
