#include "cantor/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cantor {

Element::Element(Basis domain, Basis codomain, std::vector<int> image_index)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), img_(std::move(image_index)) {
  if (domain_.sig() != codomain_.sig())
    fail(errc::signature_mismatch, "element endpoints over different signatures");
  if (domain_.size() != codomain_.size() || img_.size() != domain_.leaves().size())
    fail(errc::size_mismatch, "element endpoints of different size");
}

const Word& Element::image(const Word& domain_leaf) const {
  int i = domain_.index_of(domain_leaf);
  if (i < 0) fail(errc::leaf_not_in_basis, "word is not a domain leaf");
  return image_at(i);
}

Element identity_element(const Signature& sig) {
  Basis r = root_basis(sig);
  std::vector<int> img(static_cast<size_t>(r.size()));
  std::iota(img.begin(), img.end(), 0);
  return Element(r, std::move(r), std::move(img));
}

// Parallel (domain leaf, image leaf) rows; the working representation for
// lifting and contraction.
namespace {

struct Rows {
  Signature sig;
  std::vector<Word> dom;
  std::vector<Word> img;

  int find_dom(const Word& w) const {
    for (size_t k = 0; k < dom.size(); ++k)
      if (dom[k] == w) return static_cast<int>(k);
    return -1;
  }
};

Rows to_rows(const Element& e) {
  Rows r{e.sig(), e.domain().leaves(), {}};
  r.img.reserve(r.dom.size());
  for (size_t k = 0; k < r.dom.size(); ++k) r.img.push_back(e.image_at(static_cast<int>(k)));
  return r;
}

Element from_rows(const Rows& r) {
  Basis dom(r.sig, r.dom);
  Basis cod(r.sig, r.img);
  std::vector<int> img(r.dom.size(), -1);
  for (size_t k = 0; k < r.dom.size(); ++k) {
    int di = dom.index_of(r.dom[k]);
    int ci = cod.index_of(r.img[k]);
    if (di < 0 || ci < 0) fail(errc::internal, "inconsistent element rows");
    img[static_cast<size_t>(di)] = ci;
  }
  return Element(std::move(dom), std::move(cod), std::move(img));
}

void expand_row(Rows& r, int idx, int color) {
  Word d = r.dom[static_cast<size_t>(idx)];
  Word i = r.img[static_cast<size_t>(idx)];
  std::vector<Word> dc = expand(r.sig, d, color);
  std::vector<Word> ic = expand(r.sig, i, color);
  r.dom.erase(r.dom.begin() + idx);
  r.img.erase(r.img.begin() + idx);
  r.dom.insert(r.dom.end(), dc.begin(), dc.end());
  r.img.insert(r.img.end(), ic.begin(), ic.end());
}

// Contract the sibling family expand(w, color) in the domain, if its images
// form a sibling family of the same colour in branch order.
bool try_contract(Rows& r, const Word& w, int color) {
  std::vector<Word> children = expand(r.sig, w, color);
  std::vector<int> where;
  where.reserve(children.size());
  for (const Word& c : children) {
    int k = r.find_dom(c);
    if (k < 0) return false;
    where.push_back(k);
  }
  std::vector<Word> images;
  images.reserve(children.size());
  for (int k : where) images.push_back(r.img[static_cast<size_t>(k)]);
  auto p = parent(r.sig, images.front(), color);
  if (!p || p->second != 1) return false;
  if (expand(r.sig, p->first, color) != images) return false;

  std::sort(where.rbegin(), where.rend());
  for (int k : where) {
    r.dom.erase(r.dom.begin() + k);
    r.img.erase(r.img.begin() + k);
  }
  r.dom.push_back(w);
  r.img.push_back(p->first);
  return true;
}

}  // namespace

Element canonical_form(const Element& e) {
  Rows r = to_rows(e);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> sorted = r.dom;
    std::sort(sorted.begin(), sorted.end());
    for (int color = 1; color <= r.sig.colors() && !changed; ++color) {
      for (const Word& u : sorted) {
        auto p = parent(r.sig, u, color);
        if (!p || p->second != 1) continue;
        if (try_contract(r, p->first, color)) {
          changed = true;
          break;
        }
      }
    }
  }
  return from_rows(r);
}

Element lift(const Element& e, const Basis& target) {
  Rows r = to_rows(e);
  for (const ExpansionStep& step : expansion_path(e.domain(), target)) {
    int idx = r.find_dom(step.leaf);
    if (idx < 0) fail(errc::internal, "lift lost a leaf");
    expand_row(r, idx, step.color);
  }
  return from_rows(r);
}

Element restrict_to(const Element& e, const Basis& b) {
  Basis upper = join(e.domain(), b);
  Element lifted = lift(e, upper);
  Rows r = to_rows(lifted);
  std::vector<ExpansionStep> path = expansion_path(b, upper);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    if (!try_contract(r, it->leaf, it->color))
      fail(errc::internal, "restriction failed to contract a sibling family");
  return from_rows(r);
}

Element make_element(const Basis& domain, const Basis& codomain,
                     const std::vector<std::pair<Word, Word>>& pairs) {
  if (domain.sig() != codomain.sig())
    fail(errc::signature_mismatch, "element endpoints over different signatures");
  if (domain.size() != codomain.size())
    fail(errc::size_mismatch, "domain and codomain sizes differ");
  if (pairs.size() != domain.leaves().size())
    fail(errc::not_a_bijection, "pair count does not match the basis size");
  std::vector<int> img(pairs.size(), -1);
  std::vector<bool> hit(pairs.size(), false);
  for (const auto& [from, to] : pairs) {
    int di = domain.index_of(from);
    int ci = codomain.index_of(to);
    if (di < 0) fail(errc::not_a_bijection, "pair source is not a domain leaf");
    if (ci < 0) fail(errc::not_a_bijection, "pair target is not a codomain leaf");
    if (img[static_cast<size_t>(di)] != -1)
      fail(errc::not_a_bijection, "domain leaf mapped twice");
    if (hit[static_cast<size_t>(ci)]) fail(errc::not_a_bijection, "codomain leaf hit twice");
    img[static_cast<size_t>(di)] = ci;
    hit[static_cast<size_t>(ci)] = true;
  }
  return canonical_form(Element(domain, codomain, std::move(img)));
}

Element invert(const Element& e) {
  std::vector<int> inv(e.image_index().size());
  for (size_t k = 0; k < inv.size(); ++k)
    inv[static_cast<size_t>(e.image_index()[k])] = static_cast<int>(k);
  return Element(e.codomain(), e.domain(), std::move(inv));
}

Element compose(const Element& g, const Element& h) {
  if (g.sig() != h.sig()) fail(errc::signature_mismatch, "composing over different signatures");
  Basis middle = join(g.codomain(), h.domain());
  Element gl = invert(lift(invert(g), middle));
  Element hl = lift(h, middle);
  Rows r = to_rows(gl);
  for (Word& w : r.img) w = hl.image(w);
  return canonical_form(from_rows(r));
}

bool is_identity(const Element& e) {
  if (e.domain() != e.codomain()) return false;
  for (size_t k = 0; k < e.image_index().size(); ++k)
    if (e.image_index()[k] != static_cast<int>(k)) return false;
  return true;
}

bool equals(const Element& g, const Element& h) {
  if (g.sig() != h.sig()) fail(errc::signature_mismatch, "comparing over different signatures");
  if (g == h) return true;
  // Greedy reduction is not proven unique for every family; the extensional
  // test keeps equality sound when the canonical forms disagree.
  return is_identity(compose(g, invert(h)));
}

Basis apply(const Element& e, const Basis& b) { return restrict_to(e, b).codomain(); }

Basis basis_through(const Signature& sig, const Word& w) {
  Basis b = root_basis(sig);
  Word cur{w.root, {}};
  for (const Step& s : w.steps) {
    b = expand_at(b, cur, s.color);
    cur = child(sig, cur, s.color, s.branch);
  }
  if (!b.contains(w)) fail(errc::internal, "basis_through missed its word");
  return b;
}

Word apply_word(const Element& e, const Word& w) {
  return restrict_to(e, basis_through(e.sig(), w)).image(w);
}

OrderResult order_of(const Element& e, long long leaf_bound) {
  Basis z = root_basis(e.sig());
  while (true) {
    Basis grown = join(z, apply(e, z));
    if (grown == z) break;
    z = grown;
    if (z.size() > leaf_bound) return {false, leaf_bound};
  }
  Element p = restrict_to(e, z);
  // order of the induced permutation: lcm of cycle lengths
  std::vector<bool> seen(p.image_index().size(), false);
  long long order = 1;
  for (size_t k = 0; k < seen.size(); ++k) {
    if (seen[k]) continue;
    long long len = 0;
    for (size_t j = k; !seen[j]; j = static_cast<size_t>(p.image_index()[j])) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return {true, order};
}

}  // namespace cantor
