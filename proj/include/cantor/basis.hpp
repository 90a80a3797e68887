#ifndef CANTOR_BASIS_HPP
#define CANTOR_BASIS_HPP

#include <vector>

#include "cantor/word.hpp"

namespace cantor {

// An admissible subset above the standard basis, stored as its sorted leaf
// antichain. Bases are only ever built by expansion from the root basis, so
// every Basis in play is reachable and has |leaves| == rank mod d.
class Basis {
public:
  Basis(Signature sig, std::vector<Word> leaves);

  const Signature& sig() const { return sig_; }
  const std::vector<Word>& leaves() const { return leaves_; }
  int size() const { return static_cast<int>(leaves_.size()); }
  bool contains(const Word& w) const;
  int index_of(const Word& w) const;  // -1 if absent

  bool operator==(const Basis&) const = default;

private:
  Signature sig_;
  std::vector<Word> leaves_;
};

Basis root_basis(const Signature&);

Basis expand_at(const Basis&, const Word& leaf, int color);

// a <= b in the expansion order: every leaf of b descends from a leaf of a.
bool leq(const Basis& a, const Basis& b);

struct ExpansionStep {
  Word leaf;
  int color;
};

// Least upper bound. Both arguments share the root basis as a lower bound, so
// the unique least upper bound exists for the preset families.
Basis join(const Basis&, const Basis&);

// Instructions that replay a into exactly b; requires leq(a, b).
std::vector<ExpansionStep> expansion_path(const Basis& a, const Basis& b);

Basis replay(const Basis&, const std::vector<ExpansionStep>&);

// Leaves in the induced order (order-preserving families only).
std::vector<Word> ordered_leaves(const Basis&);

}  // namespace cantor

#endif
