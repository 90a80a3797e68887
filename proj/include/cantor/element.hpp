#ifndef CANTOR_ELEMENT_HPP
#define CANTOR_ELEMENT_HPP

#include <utility>
#include <vector>

#include "cantor/basis.hpp"

namespace cantor {

// A group element: a bijection between two equal-size bases, stored in the
// canonical reduced form. image_index[i] is the codomain index of the image
// of the i-th domain leaf.
class Element {
public:
  Element(Basis domain, Basis codomain, std::vector<int> image_index);

  const Signature& sig() const { return domain_.sig(); }
  const Basis& domain() const { return domain_; }
  const Basis& codomain() const { return codomain_; }
  const std::vector<int>& image_index() const { return img_; }

  const Word& image(const Word& domain_leaf) const;
  const Word& image_at(int i) const { return codomain_.leaves()[static_cast<size_t>(img_[static_cast<size_t>(i)])]; }

  auto operator<=>(const Element&) const = default;

private:
  Basis domain_;
  Basis codomain_;
  std::vector<int> img_;
};

Element identity_element(const Signature&);

// Validates and canonicalizes. pairs maps each domain leaf to a codomain leaf.
Element make_element(const Basis& domain, const Basis& codomain,
                     const std::vector<std::pair<Word, Word>>& pairs);

// Greedy parallel contraction to a fixed point, sweeping in canonical order.
Element canonical_form(const Element&);

// Expand the domain to exactly `target` (requires leq(domain, target)),
// expanding images in parallel. Not canonicalized.
Element lift(const Element&, const Basis& target);

// Element with domain exactly b and the same underlying automorphism
// (lift across join(domain, b), then contract back down to b).
Element restrict_to(const Element&, const Basis& b);

// apply g then h
Element compose(const Element& g, const Element& h);

Element invert(const Element&);

bool is_identity(const Element&);

// Structural equality of canonical forms, with an extensional fallback so the
// answer stays sound even if greedy reduction is not unique for some family.
bool equals(const Element&, const Element&);

Basis apply(const Element&, const Basis&);

Word apply_word(const Element&, const Word&);

struct OrderResult {
  bool finite = false;
  long long value = 0;  // the order, or the leaf bound that was hit
};

// Iterates Z -> join(Z, Z.e) from the root; Finite(n) is exact, the infinite
// answer is a semi-decision controlled by the leaf bound.
OrderResult order_of(const Element&, long long leaf_bound = 4096);

// Smallest basis through which `w` is reachable from the root, i.e. the
// chain of expansions following w's steps.
Basis basis_through(const Signature&, const Word& w);

}  // namespace cantor

#endif
