#ifndef CANTOR_SUBGROUP_HPP
#define CANTOR_SUBGROUP_HPP

#include <optional>
#include <vector>

#include "cantor/element.hpp"

namespace cantor {

// Isomorphism key of a transitive Q-set: per group element (in the group's
// canonical element order), the sorted cycle lengths of its action.
struct TypeKey {
  std::vector<std::vector<int>> cycles;
  auto operator<=>(const TypeKey&) const = default;
};

struct TransitiveType {
  int w = 1;  // orbit length
  TypeKey key;
  auto operator<=>(const TransitiveType&) const = default;
};

struct Orbit {
  std::vector<int> leaves;  // indices into the basis, ascending
  int type = -1;            // index into types()
};

// A finite subgroup given by its closed multiplication table, with the
// invariant basis, orbit types and the pi invariant computed on construction.
class FiniteSubgroup {
public:
  static FiniteSubgroup closure(const Signature&, const std::vector<Element>& generators,
                                int bound = 64);

  const Signature& sig() const { return sig_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int inv(int i) const { return inverse_[static_cast<size_t>(i)]; }
  int power(int i, long long k) const;
  int element_order(int i) const;
  const std::vector<int>& generators() const { return generators_; }
  int find(const Element&) const;  // -1 if absent

  const Basis& invariant_basis() const { return zbasis_; }
  // permutation of invariant_basis() leaves, one row per element
  const std::vector<std::vector<int>>& perm_rep() const { return perm_; }

  // All transitive Q-set types (absent ones included), sorted by (w, key).
  const std::vector<TransitiveType>& types() const { return types_; }
  const std::vector<int>& type_counts() const { return counts_; }  // k_j on invariant_basis
  const std::vector<int>& pi() const { return pi_; }               // r_j, 0 for absent types

  // basis used by tau/iota (a Q-expansion of invariant_basis when the anchor
  // needs it); anchor basis over the rank-r_j signature for a present type
  const Basis& tau_basis() const { return taubasis_; }
  Signature factor_signature(int type) const;
  const Basis& anchor_basis(int type) const;

private:
  friend Element tau(const FiniteSubgroup&, int, const Element&);
  friend Element iota(const FiniteSubgroup&, int, const Element&);

  struct TypeAnchor {
    int type = -1;
    std::vector<Word> marks;  // one per orbit of this type on tau_basis, ascending
    std::vector<int> stab;    // element indices fixing every mark of this type
    std::optional<Basis> anchor;
    std::optional<Signature> fsig;
  };

  FiniteSubgroup(Signature sig, std::vector<Element> elems);

  Signature sig_;
  std::vector<Element> elements_;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;

  Basis zbasis_;
  std::vector<std::vector<int>> perm_;
  std::vector<TransitiveType> types_;
  std::vector<Orbit> orbits_;
  std::vector<int> counts_;
  std::vector<int> pi_;

  Basis taubasis_;
  std::vector<TypeAnchor> anchors_;  // one per type; anchor set only when present
};

bool is_invariant(const FiniteSubgroup&, const Basis&);

// Permutations of the leaves of an invariant basis; throws NotInvariant.
std::vector<std::vector<int>> action_on(const FiniteSubgroup&, const Basis&);

std::vector<Orbit> orbit_decomposition(const FiniteSubgroup&, const Basis&);

// Simple Q-expansion: expands the whole orbit of `leaf` by `color`.
Basis q_expand(const FiniteSubgroup&, const Basis&, const Word& leaf, int color);

// r_j recomputed on an arbitrary invariant basis (for well-definedness checks).
std::vector<int> pi_from_basis(const FiniteSubgroup&, const Basis&);

bool centralizes(const FiniteSubgroup&, const Element& h);

struct ConjugacyResult {
  enum class Kind { not_isomorphic, not_conjugate, conjugate };
  Kind kind = Kind::not_isomorphic;
  std::optional<Element> conjugator;
};

ConjugacyResult are_conjugate(const FiniteSubgroup&, const FiniteSubgroup&);

struct CentralizerFactor {
  int type = -1;
  int w = 1;            // orbit length
  int r = 0;            // factor rank r_j
  long long local_order = 1;  // |C_{S_w}(phi(Q))|
};

std::vector<CentralizerFactor> centralizer_report(const FiniteSubgroup&);

// Collapse map onto the rank-r_j factor and its section.
Element tau(const FiniteSubgroup&, int type, const Element& h);
Element iota(const FiniteSubgroup&, int type, const Element& g);

// Nonnegative-combination reachability over {n_i - 1} and a deterministic
// decomposition into expansion colours.
bool delta_representable(const Signature&, int delta);
std::vector<int> delta_decomposition(const Signature&, int delta);

// Deterministic basis of exactly m leaves over sig (m == rank mod d and the
// difference representable).
Basis basis_of_size(const Signature&, int m);

}  // namespace cantor

#endif
