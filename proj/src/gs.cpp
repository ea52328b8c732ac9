#include "smti/gs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace smti::gs {

namespace {

constexpr int kRejected = std::numeric_limits<int>::max();

// Strict broken lists for one side: for each person, the preferred partners
// in proposal order, and the receiver rank of every partner (position in the
// broken order; kRejected for neutral or unacceptable partners).
struct BrokenSide {
    std::vector<std::vector<int>> order;       // proposal order per person
    std::vector<std::vector<int>> receiverRank; // [person][partner], 1-based partner
};

BrokenSide breakTies(const std::vector<PreferenceList>& lists, int partnerCount,
                     TieBreak tieBreak, SplitMix64& rng) {
    BrokenSide side;
    side.order.resize(lists.size());
    side.receiverRank.assign(lists.size(),
                             std::vector<int>(static_cast<std::size_t>(partnerCount) + 1,
                                              kRejected));
    for (std::size_t person = 0; person < lists.size(); ++person) {
        const PreferenceList& list = lists[person];
        std::vector<int>& order = side.order[person];
        for (int g = 0; g + 1 < list.groupCount(); ++g) {
            std::vector<int> group = list.groups[static_cast<std::size_t>(g)];
            std::sort(group.begin(), group.end());
            if (tieBreak.kind == TieBreak::Kind::Seeded) {
                for (std::size_t i = group.size(); i-- > 1;) {
                    std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
                    std::swap(group[i], group[j]);
                }
            }
            order.insert(order.end(), group.begin(), group.end());
        }
        for (std::size_t pos = 0; pos < order.size(); ++pos)
            side.receiverRank[person][static_cast<std::size_t>(order[pos])] =
                static_cast<int>(pos);
    }
    return side;
}

} // namespace

Matching solve(const Instance& inst, TieBreak tieBreak, ProposingSide side) {
    inst.validate();

    // The same broken instance serves both proposal directions; draws are
    // consumed men-first regardless of who proposes.
    SplitMix64 rng(tieBreak.seed);
    BrokenSide menSide = breakTies(inst.men, inst.womenCount(), tieBreak, rng);
    BrokenSide womenSide = breakTies(inst.women, inst.menCount(), tieBreak, rng);

    const BrokenSide& proposers = side == ProposingSide::Men ? menSide : womenSide;
    const BrokenSide& receivers = side == ProposingSide::Men ? womenSide : menSide;
    int proposerCount = static_cast<int>(proposers.order.size());
    int receiverCount = static_cast<int>(receivers.order.size());

    std::vector<int> nextChoice(static_cast<std::size_t>(proposerCount), 0);
    std::vector<int> holds(static_cast<std::size_t>(receiverCount) + 1, 0); // proposer held
    std::deque<int> free;
    for (int q = 1; q <= proposerCount; ++q) free.push_back(q);

    while (!free.empty()) {
        int q = free.front();
        free.pop_front();
        const std::vector<int>& order = proposers.order[static_cast<std::size_t>(q - 1)];
        bool placed = false;
        while (nextChoice[static_cast<std::size_t>(q - 1)] <
               static_cast<int>(order.size())) {
            int r = order[static_cast<std::size_t>(
                nextChoice[static_cast<std::size_t>(q - 1)]++)];
            const std::vector<int>& rank =
                receivers.receiverRank[static_cast<std::size_t>(r - 1)];
            if (rank[static_cast<std::size_t>(q)] == kRejected)
                continue; // she'd rather stay single than take q
            int current = holds[static_cast<std::size_t>(r)];
            if (current == 0 ||
                rank[static_cast<std::size_t>(q)] < rank[static_cast<std::size_t>(current)]) {
                holds[static_cast<std::size_t>(r)] = q;
                if (current != 0) free.push_back(current);
                placed = true;
                break;
            }
        }
        (void)placed; // a proposer who ran out of choices stays single
    }

    Matching m = Matching::allSingles(inst.menCount(), inst.womenCount());
    for (int r = 1; r <= receiverCount; ++r) {
        int q = holds[static_cast<std::size_t>(r)];
        if (q == 0) continue;
        int man = side == ProposingSide::Men ? q : r;
        int woman = side == ProposingSide::Men ? r : q;
        m.manPartner[man - 1] = woman;
        m.womanPartner[woman - 1] = man;
    }
    return m;
}

} // namespace smti::gs
