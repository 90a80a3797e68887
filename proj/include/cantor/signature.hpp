#ifndef CANTOR_SIGNATURE_HPP
#define CANTOR_SIGNATURE_HPP

#include <vector>

#include "cantor/errors.hpp"

namespace cantor {

// The three preset relation families. Arbitrary relation sets are not
// constructible; validity and boundedness are per-family facts.
enum class Family { higman, brin, stein };

const char* family_name(Family f);

// Algebra data: colours 1..s with arities n_i >= 2, a preset relation family,
// and the rank r of the standard basis. The modulus d = gcd{n_i - 1} controls
// which cardinalities admissible subsets can take (m == r mod d).
class Signature {
public:
  static Signature make(Family f, std::vector<int> arities, int rank);

  Family fam() const { return family_; }
  int colors() const { return static_cast<int>(arities_.size()); }
  int arity(int color) const { return arities_[static_cast<size_t>(color - 1)]; }
  const std::vector<int>& arities() const { return arities_; }
  int rank() const { return rank_; }
  int modulus() const { return modulus_; }

  // Brin relations swap leaves, so no leaf order survives them.
  bool order_preserving() const { return family_ != Family::brin; }

  bool cardinality_admissible(long long m) const;

  // { l : 1 <= l <= d, gcd(l, d) divides r }
  std::vector<int> t_levels() const;

  bool operator==(const Signature&) const = default;

  // Returns a signature over the same algebra data but a different rank.
  Signature with_rank(int rank) const { return make(family_, arities_, rank); }

private:
  Signature(Family f, std::vector<int> arities, int rank, int modulus)
      : family_(f), arities_(std::move(arities)), rank_(rank), modulus_(modulus) {}

  Family family_;
  std::vector<int> arities_;
  int rank_;
  int modulus_;
};

std::vector<int> t_levels(int d, int r);

}  // namespace cantor

#endif
