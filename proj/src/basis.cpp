#include "cantor/basis.hpp"

#include <algorithm>

namespace cantor {

Basis::Basis(Signature sig, std::vector<Word> leaves)
    : sig_(std::move(sig)), leaves_(std::move(leaves)) {
  std::sort(leaves_.begin(), leaves_.end());
}

bool Basis::contains(const Word& w) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), w);
}

int Basis::index_of(const Word& w) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), w);
  if (it == leaves_.end() || *it != w) return -1;
  return static_cast<int>(it - leaves_.begin());
}

Basis root_basis(const Signature& sig) {
  std::vector<Word> leaves;
  leaves.reserve(static_cast<size_t>(sig.rank()));
  for (int k = 1; k <= sig.rank(); ++k) leaves.push_back(Word{k, {}});
  return Basis(sig, std::move(leaves));
}

Basis expand_at(const Basis& b, const Word& leaf, int color) {
  if (!b.contains(leaf)) fail(errc::leaf_not_in_basis, "expansion leaf is not in the basis");
  std::vector<Word> leaves;
  leaves.reserve(b.leaves().size() + 4);
  for (const Word& w : b.leaves())
    if (w != leaf) leaves.push_back(w);
  for (Word& c : expand(b.sig(), leaf, color)) leaves.push_back(std::move(c));
  return Basis(b.sig(), std::move(leaves));
}

bool leq(const Basis& a, const Basis& b) {
  if (a.sig() != b.sig()) fail(errc::signature_mismatch, "bases over different signatures");
  for (const Word& w : b.leaves()) {
    bool covered = false;
    for (const Word& v : a.leaves())
      if (is_descendant(a.sig(), w, v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// A colour splits c cleanly when every leaf of b overlapping c meets exactly
// one of the children. Expanding by such a colour never crosses a cell of the
// common refinement, which is what makes the greedy loop land on the least
// upper bound rather than some upper bound.
static int splitting_color(const Signature& sig, const Word& c,
                           const std::vector<const Word*>& touching) {
  for (int col = 1; col <= sig.colors(); ++col) {
    std::vector<Word> children = expand(sig, c, col);
    bool ok = true;
    for (const Word* v : touching) {
      int hits = 0;
      for (const Word& z : children)
        if (overlaps(sig, z, *v)) ++hits;
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return col;
  }
  return 0;
}

Basis join(const Basis& a, const Basis& b) {
  if (a.sig() != b.sig()) fail(errc::signature_mismatch, "bases over different signatures");
  const Signature& sig = a.sig();
  Basis current = a;
  for (int guard = 0; guard < 1000; ++guard) {
    const Word* pick = nullptr;
    for (const Word& c : current.leaves()) {
      bool below = false;
      for (const Word& v : b.leaves())
        if (is_descendant(sig, c, v)) {
          below = true;
          break;
        }
      if (!below) {
        pick = &c;
        break;
      }
    }
    if (!pick) return current;

    std::vector<const Word*> touching;
    for (const Word& v : b.leaves())
      if (overlaps(sig, *pick, v)) touching.push_back(&v);
    if (touching.empty()) fail(errc::internal, "join: leaf overlaps no leaf of the other basis");
    int col = splitting_color(sig, *pick, touching);
    if (col == 0)
      fail(errc::join_diverged, "join: no colour splits the current leaf cleanly");
    current = expand_at(current, *pick, col);
  }
  fail(errc::join_diverged, "join: expansion bound of 1000 exceeded");
}

std::vector<ExpansionStep> expansion_path(const Basis& a, const Basis& b) {
  if (a.sig() != b.sig()) fail(errc::signature_mismatch, "bases over different signatures");
  const Signature& sig = a.sig();
  std::vector<ExpansionStep> path;
  Basis current = a;
  while (current != b) {
    if (current.size() > b.size()) fail(errc::not_descendant, "target is not a descendant");
    const Word* pick = nullptr;
    for (const Word& c : current.leaves())
      if (!b.contains(c)) {
        pick = &c;
        break;
      }
    if (!pick) fail(errc::not_descendant, "bases of equal support but different leaves");

    std::vector<const Word*> below;
    for (const Word& v : b.leaves())
      if (is_descendant(sig, v, *pick)) below.push_back(&v);
    if (below.empty()) fail(errc::not_descendant, "leaf region is not covered by the target");

    int chosen = 0;
    for (int col = 1; col <= sig.colors() && !chosen; ++col) {
      std::vector<Word> children = expand(sig, *pick, col);
      bool ok = true;
      for (const Word* v : below) {
        bool housed = false;
        for (const Word& z : children)
          if (is_descendant(sig, *v, z)) {
            housed = true;
            break;
          }
        if (!housed) {
          ok = false;
          break;
        }
      }
      if (ok) chosen = col;
    }
    if (!chosen) fail(errc::not_descendant, "no expansion colour keeps the target below");
    path.push_back({*pick, chosen});
    current = expand_at(current, *pick, chosen);
  }
  return path;
}

Basis replay(const Basis& start, const std::vector<ExpansionStep>& path) {
  Basis current = start;
  for (const ExpansionStep& step : path) current = expand_at(current, step.leaf, step.color);
  return current;
}

std::vector<Word> ordered_leaves(const Basis& b) {
  if (!b.sig().order_preserving())
    fail(errc::not_order_preserving, "no induced order for this signature");
  std::vector<Word> out = b.leaves();
  std::sort(out.begin(), out.end(),
            [&](const Word& x, const Word& y) { return induced_less(b.sig(), x, y); });
  return out;
}

}  // namespace cantor
