// Instance file format, serialization, and deterministic random generation.
//
// File grammar (two-sided):
//     smti
//     men 2
//     women 3
//     m 1 : (1) (2 3) ()
//     m 2 : (2) (1)
//     w 1 : (1 2) ()
//     w 2 : (1) ()
//     w 3 : (2) (1) ()
// Three-sided files start with "smti3", add a "children R" line, use tag "c"
// for children, and write partner pairs as "1,2" inside groups (a man's pair
// is woman,child; a woman's is man,child; a child's is man,woman).
// Groups are parenthesized, preference-ordered, space-separated inside; the
// last group is the neutral group (tied with staying single); omitted
// partners are unacceptable. "#" starts a comment anywhere on a line; blank
// lines are ignored. Every person must get exactly one line.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "smti/model.hpp"
#include "smti/threedim.hpp"

namespace smti::io {

using AnyInstance = std::variant<Instance, threedim::Instance3>;

// Parses either kind of instance file; throws ParseError (with line/column)
// on syntax errors and ValidationError on invariant violations.
AnyInstance parseInstanceText(std::string_view text);

// Canonical serialization; parseInstanceText(serialize(x)) == x.
std::string serialize(const Instance& inst);
std::string serialize(const threedim::Instance3& inst);

// Reads and parses a file; ParseError/ValidationError as above, plus
// ValidationError when the file cannot be read.
AnyInstance loadInstanceFile(const std::string& path);

// Deterministic random instance: every potential partner is dropped with
// probability `incompleteness`; the survivors are shuffled, then adjacent
// positions merge into one tie-group with probability `ties`; finally, with
// probability `ties` the last formed group becomes the neutral group
// (otherwise the neutral group is left empty). All draws come from one
// splitmix64 stream seeded with `seed` in a fixed order (men ascending, then
// women, then children), so a fixed seed reproduces the instance bit for bit.
// ties = 0 and incompleteness = 0 gives strict complete lists.
Instance generateInstance(int n, int p, double ties, double incompleteness,
                          std::uint64_t seed);
threedim::Instance3 generateInstance3(int n, int p, int r, double ties,
                                      double incompleteness, std::uint64_t seed);

} // namespace smti::io
