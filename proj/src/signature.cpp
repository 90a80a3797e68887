#include "cantor/signature.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cantor/word.hpp"

namespace cantor {

const char* errc_name(errc c) {
  switch (c) {
    case errc::arity_too_small: return "ArityTooSmall";
    case errc::family_constraint_violated: return "FamilyConstraintViolated";
    case errc::rank_non_positive: return "RankNonPositive";
    case errc::root_out_of_range: return "RootOutOfRange";
    case errc::branch_out_of_range: return "BranchOutOfRange";
    case errc::leaf_not_in_basis: return "LeafNotInBasis";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::not_descendant: return "NotDescendant";
    case errc::not_order_preserving: return "NotOrderPreserving";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_a_bijection: return "NotABijection";
    case errc::not_invariant: return "NotInvariant";
    case errc::not_finite_up_to_bound: return "NotFiniteUpToBound";
    case errc::not_centralizing: return "NotCentralizing";
    case errc::type_absent: return "TypeAbsent";
    case errc::not_in_t: return "NotInT";
    case errc::unsupported_size: return "UnsupportedSize";
    case errc::size_bound_too_small: return "SizeBoundTooSmall";
    case errc::join_diverged: return "JoinDiverged";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::higman: return "higman";
    case Family::brin: return "brin";
    case Family::stein: return "stein";
  }
  return "?";
}

Signature Signature::make(Family f, std::vector<int> arities, int rank) {
  if (rank < 1) fail(errc::rank_non_positive, "rank must be >= 1");
  if (arities.empty()) fail(errc::family_constraint_violated, "at least one colour required");
  for (int n : arities)
    if (n < 2) fail(errc::arity_too_small, "every arity must be >= 2");
  switch (f) {
    case Family::higman:
      if (arities.size() != 1)
        fail(errc::family_constraint_violated, "higman signatures have a single colour");
      break;
    case Family::brin:
      if (!std::all_of(arities.begin(), arities.end(),
                       [&](int n) { return n == arities.front(); }))
        fail(errc::family_constraint_violated, "brin signatures need equal arities");
      break;
    case Family::stein: {
      std::set<int> distinct(arities.begin(), arities.end());
      if (distinct.size() != arities.size())
        fail(errc::family_constraint_violated, "stein signatures need pairwise distinct arities");
      break;
    }
  }
  int d = 0;
  for (int n : arities) d = std::gcd(d, n - 1);
  Signature sig(f, std::move(arities), rank, d);
  // Rewriting must be locally confluent; checked empirically on every
  // constructed signature up to depth 3. A failure here is a hard error.
  if (sig.colors() > 1) verify_depth3_confluence(sig);
  return sig;
}

bool Signature::cardinality_admissible(long long m) const {
  if (m < 1) return false;
  return (m - rank_) % modulus_ == 0;
}

std::vector<int> t_levels(int d, int r) {
  std::vector<int> out;
  for (int l = 1; l <= d; ++l)
    if (r % std::gcd(l, d) == 0) out.push_back(l);
  return out;
}

std::vector<int> Signature::t_levels() const { return cantor::t_levels(modulus_, rank_); }

}  // namespace cantor
