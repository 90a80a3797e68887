#ifndef CANTOR_WORD_HPP
#define CANTOR_WORD_HPP

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/signature.hpp"

namespace cantor {

// One descending operation: branch j of colour i.
struct Step {
  int color = 1;
  int branch = 1;
  auto operator<=>(const Step&) const = default;
};

// A normal-form descent word x_root . s1 . s2 ... reachable from the standard
// basis. Only factory functions below produce Words, so steps are always in
// the family normal form. Comparison is root first, then (colour, branch)
// lexicographically; this is the canonical storage order, not the leaf order.
struct Word {
  int root = 1;
  std::vector<Step> steps;
  auto operator<=>(const Word&) const = default;
  size_t depth() const { return steps.size(); }
};

// Family normal form. Higman: identity. Brin: stable sort by colour.
// Stein: the oriented rewrite lower-colour-first, iterated to a fixed point.
std::vector<Step> normalize_steps(const Signature&, std::vector<Step> steps);

Word make_word(const Signature&, int root, std::vector<Step> steps);

// Single child under (color, branch); already normalized.
Word child(const Signature&, const Word&, int color, int branch);

// All n_color children in branch order.
std::vector<Word> expand(const Signature&, const Word&, int color);

// True iff w is a descendant of v or w == v.
bool is_descendant(const Signature&, const Word& w, const Word& v);

// True iff w and v admit a common descendant.
bool overlaps(const Signature&, const Word& w, const Word& v);

// The unique (parent, branch) with child(parent, color, branch) == u, if u has
// a step of this colour.
std::optional<std::pair<Word, int>> parent(const Signature&, const Word& u, int color);

// Steps sigma with make_word(v.root, v.steps ++ sigma) == w; nullopt when w is
// not a descendant of v.
std::optional<std::vector<Step>> descent_witness(const Signature&, const Word& w, const Word& v);

// Exact rational in [0, 1]; denominators divide a product of arities.
struct Frac {
  long long num = 0;
  long long den = 1;
};

int frac_cmp(const Frac&, const Frac&);

struct Interval {
  Frac lo;
  Frac hi;
};

// Subinterval occupied by a word within its root (order-preserving families;
// the interval is invariant under the relation closure).
Interval word_interval(const Signature&, const Word&);
Interval subinterval(const Interval&, int arity, int branch);
bool interval_contains(const Interval& outer, const Interval& inner);
bool intervals_meet(const Interval&, const Interval&);  // interiors intersect

// Induced leaf order: roots by index, then left-to-right in the tree.
// Only defined for order-preserving signatures.
bool induced_less(const Signature&, const Word&, const Word&);

// Checks that every one-step rewrite of every word of depth <= 3 normalizes
// to the same value. Called from Signature::make; throws on failure.
void verify_depth3_confluence(const Signature&);

}  // namespace cantor

#endif
