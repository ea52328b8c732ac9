// Encoding compiler: grounds a two-sided instance into the logic programs
// whose answer sets are exactly its weakly stable matchings, and emits the
// saturation-based optimization program text for a criterion.
//
// Four artifacts per two-sided instance:
//   - encodeSmti: normal ground program (naf guess of a matching). One answer
//     set per weakly stable matching; matched pairs appear as accept(mi,wj)
//     and singles as self-accepts accept(x,x).
//   - encodeSmtiDisjunctive: naf-free disjunctive ground program with
//     classical negation; clause form of the completion. Its answer sets'
//     atom parts coincide with encodeSmti's.
//   - encodeCompletion: the Clark completion of encodeSmti as a clause set
//     (the program is tight, so completion models = answer sets).
//   - emitOptProgram: DLV-dialect text of the guess/saturate/compare program
//     whose unique answer sets are the criterion-optimal stable matchings.
//     The text uses variables, aggregates (#sum/#max/#count/#int), successor
//     arithmetic (#succ) and a #maxint directive, so it is NOT parseable by
//     asp::parseProgram; it targets an external DLV-compatible solver.
//
// encodeSmti3d is the three-sided analogue of encodeSmti over triples.
//
// All encoders are deterministic: identical inputs produce identical rule
// sequences and byte-identical emitted text.
#pragma once

#include <cstddef>
#include <string>

#include "smti/asp.hpp"
#include "smti/model.hpp"
#include "smti/threedim.hpp"

namespace smti::encode {

// Constant names used in atoms: man 1 -> "m1", woman 2 -> "w2", child 3 -> "c3".
std::string manName(int i);
std::string womanName(int j);
std::string childName(int k);

// Normal ground program. Rule families, in emission order:
//   - accept(mi,wj) :- manpropose(mi,wj), womanpropose(mi,wj).   (all i,j)
//   - per man, per acceptable woman j (preference order):
//       manpropose(mi,wj) :- { not accept(mi,x) | x ranked better than or
//       tied with wj, x != wj } -- including not accept(mi,mi) when wj lies
//       in the neutral (last) group, since staying single ties with it;
//     then accept(mi,mi) :- { not accept(mi,wk) | k acceptable }.
//   - the symmetric woman blocks.
// A person with no acceptable partners contributes the bare fact
// accept(x,x). Throws ValidationError on an invalid instance.
asp::Program encodeSmti(const Instance& inst);

// Naf-free disjunctive ground program (classical negation). Per pair (i,j),
// the three clause schemas tying accept to the two proposals; per person,
// the covering disjunction over accept alternatives, self-vs-partner
// exclusivity clauses, proposal support clauses, and -manpropose /
// -womanpropose facts for unacceptable pairs.
asp::Program encodeSmtiDisjunctive(const Instance& inst);

// Clark completion of encodeSmti(inst); exactly
// asp::completion(encodeSmti(inst)).
asp::ClauseSet encodeCompletion(const Instance& inst);

// Three-sided normal ground program over triples accept(mi,wj,ck); singles
// are triple self-accepts accept(x,x,x). Same neutral-group convention as
// encodeSmti, applied to woman-child (resp. man-child, man-woman) pairs.
asp::Program encodeSmti3d(const threedim::Instance3& inst);

// The #maxint value emitted for a criterion: the largest integer any rule of
// the optimization program can bind, covering both criterion values and the
// intermediate running sums/maxima of the primed chains.
//   SexEqual    n*p + max(n,p)   (largest side-weight a saturated chain forms)
//   Egalitarian 2*n*p + n + p
//   Regret      max(n,p) + 1
//   Singles     n + p
//   ManWeight   n*(p+1)
//   WomanWeight p*(n+1)
int optMaxInt(const Instance& inst, Criterion criterion);

// Complete DLV-dialect text of the optimization program for a criterion.
// Structure, in emission order: #maxint directive; the normal program (the
// accept rule as one guarded schema, the rest ground); man/woman domain
// facts; unprimed cost rules and criterion aggregation; the primed
// disjunctive copy with classical negation spelled as an "n" prefix;
// sat-consistency rules; primed cost rules and the successor-arithmetic
// criterion chains; the comparison rule deriving sat (<= when minimizing,
// >= when maximizing); the ":- not sat." constraint; argument-range facts;
// and the saturation rules. Throws ValidationError on an invalid or empty
// instance (the chains need at least one person per side).
std::string emitOptProgram(const Instance& inst, Criterion criterion,
                           Direction direction = Direction::Minimize);

// Notional grounding size of emitOptProgram(inst, criterion): the sum over
// emitted lines of how many ground instances each line stands for (ground
// line = 1, schema guarded by person domains = product of the domain sizes,
// line with value variables = product of the value-range sizes; ranges are
// the argument-range facts' spans and 0..#maxint for unbounded integer
// variables). The growth-order tests pin documented constants against this
// count.
std::size_t optNotionalGroundedCount(const Instance& inst, Criterion criterion);

} // namespace smti::encode
