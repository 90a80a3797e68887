#include "cantor/word.hpp"

#include <algorithm>
#include <numeric>

namespace cantor {

static void check_steps(const Signature& sig, const std::vector<Step>& steps) {
  for (const Step& s : steps) {
    if (s.color < 1 || s.color > sig.colors())
      fail(errc::branch_out_of_range, "colour out of range");
    if (s.branch < 1 || s.branch > sig.arity(s.color))
      fail(errc::branch_out_of_range, "branch out of range");
  }
}

std::vector<Step> normalize_steps(const Signature& sig, std::vector<Step> steps) {
  check_steps(sig, steps);
  switch (sig.fam()) {
    case Family::higman:
      return steps;
    case Family::brin:
      // Relations commute steps of different colours and keep branches, so
      // the normal form is the stable colour sort.
      std::stable_sort(steps.begin(), steps.end(),
                       [](const Step& a, const Step& b) { return a.color < b.color; });
      return steps;
    case Family::stein:
      // Adjacent (j,b)(i,a) with j > i rewrites to (i,a')(j,b') where
      // (a'-1)*n_j + b' = (b-1)*n_i + a. Iterate to a fixed point; each
      // rewrite removes one colour inversion, so this terminates.
      for (bool changed = true; changed;) {
        changed = false;
        for (size_t k = 0; k + 1 < steps.size(); ++k) {
          if (steps[k].color > steps[k + 1].color) {
            Step hi = steps[k], lo = steps[k + 1];
            int ni = sig.arity(lo.color);
            int nj = sig.arity(hi.color);
            int p = (hi.branch - 1) * ni + lo.branch;
            steps[k] = {lo.color, (p - 1) / nj + 1};
            steps[k + 1] = {hi.color, (p - 1) % nj + 1};
            changed = true;
          }
        }
      }
      return steps;
  }
  fail(errc::internal, "unknown family");
}

Word make_word(const Signature& sig, int root, std::vector<Step> steps) {
  if (root < 1 || root > sig.rank()) fail(errc::root_out_of_range, "root index out of range");
  return Word{root, normalize_steps(sig, std::move(steps))};
}

Word child(const Signature& sig, const Word& w, int color, int branch) {
  std::vector<Step> steps = w.steps;
  steps.push_back({color, branch});
  return Word{w.root, normalize_steps(sig, std::move(steps))};
}

std::vector<Word> expand(const Signature& sig, const Word& w, int color) {
  if (color < 1 || color > sig.colors()) fail(errc::branch_out_of_range, "colour out of range");
  std::vector<Word> out;
  out.reserve(static_cast<size_t>(sig.arity(color)));
  for (int j = 1; j <= sig.arity(color); ++j) out.push_back(child(sig, w, color, j));
  return out;
}

// ---- intervals -------------------------------------------------------------

static long long safe_mul(long long a, long long b) {
  if (a > (1LL << 61) / b) fail(errc::internal, "interval denominator overflow (word too deep)");
  return a * b;
}

static Frac reduce(long long num, long long den) {
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Frac{num, den};
}

int frac_cmp(const Frac& x, const Frac& y) {
  __int128 l = static_cast<__int128>(x.num) * y.den;
  __int128 r = static_cast<__int128>(y.num) * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

Interval word_interval(const Signature& sig, const Word& w) {
  long long p = 0, q = 1;
  for (const Step& s : w.steps) {
    int n = sig.arity(s.color);
    q = safe_mul(q, n);
    p = p * n + (s.branch - 1);
  }
  return Interval{reduce(p, q), reduce(p + 1, q)};
}

Interval subinterval(const Interval& iv, int arity, int branch) {
  // lo + (branch-1)/arity * (hi - lo), one slot wide
  long long den = safe_mul(safe_mul(iv.lo.den, iv.hi.den), arity);
  long long base = safe_mul(iv.lo.num, iv.hi.den) * arity;
  long long width = safe_mul(iv.hi.num, iv.lo.den) - safe_mul(iv.lo.num, iv.hi.den);
  long long lo = base + width * (branch - 1);
  return Interval{reduce(lo, den), reduce(lo + width, den)};
}

bool interval_contains(const Interval& outer, const Interval& inner) {
  return frac_cmp(outer.lo, inner.lo) <= 0 && frac_cmp(inner.hi, outer.hi) <= 0;
}

bool intervals_meet(const Interval& a, const Interval& b) {
  const Frac& lo = frac_cmp(a.lo, b.lo) >= 0 ? a.lo : b.lo;
  const Frac& hi = frac_cmp(a.hi, b.hi) <= 0 ? a.hi : b.hi;
  return frac_cmp(lo, hi) < 0;
}

bool induced_less(const Signature& sig, const Word& a, const Word& b) {
  if (!sig.order_preserving())
    fail(errc::not_order_preserving, "no induced order for this signature");
  if (a.root != b.root) return a.root < b.root;
  Interval ia = word_interval(sig, a), ib = word_interval(sig, b);
  int c = frac_cmp(ia.lo, ib.lo);
  if (c != 0) return c < 0;
  c = frac_cmp(ia.hi, ib.hi);
  if (c != 0) return c < 0;
  return a < b;
}

// ---- descendant / overlap --------------------------------------------------

// Per-colour subsequences of a Brin normal form are contiguous blocks.
static bool brin_blocks_prefix(const Signature& sig, const Word& w, const Word& v) {
  // is v's block a prefix of w's block, for every colour
  size_t wi = 0, vi = 0;
  for (int c = 1; c <= sig.colors(); ++c) {
    size_t wb = wi, vb = vi;
    while (wi < w.steps.size() && w.steps[wi].color == c) ++wi;
    while (vi < v.steps.size() && v.steps[vi].color == c) ++vi;
    if (vi - vb > wi - wb) return false;
    if (!std::equal(v.steps.begin() + vb, v.steps.begin() + vi, w.steps.begin() + wb))
      return false;
  }
  return true;
}

static bool stein_desc_rec(const Signature& sig, const Word& w, const Interval& wi, const Word& v,
                           const Interval& vi) {
  if (v == w) return true;
  if (v.steps.size() >= w.steps.size()) return false;
  for (int c = 1; c <= sig.colors(); ++c) {
    int n = sig.arity(c);
    for (int j = 1; j <= n; ++j) {
      Interval zi = subinterval(vi, n, j);
      if (!interval_contains(zi, wi)) continue;
      if (stein_desc_rec(sig, w, wi, child(sig, v, c, j), zi)) return true;
    }
  }
  return false;
}

bool is_descendant(const Signature& sig, const Word& w, const Word& v) {
  if (w.root != v.root) return false;
  if (w.steps.size() < v.steps.size()) return false;
  switch (sig.fam()) {
    case Family::higman:
      return std::equal(v.steps.begin(), v.steps.end(), w.steps.begin());
    case Family::brin:
      return brin_blocks_prefix(sig, w, v);
    case Family::stein: {
      Interval wi = word_interval(sig, w), vi = word_interval(sig, v);
      if (!interval_contains(vi, wi)) return false;
      return stein_desc_rec(sig, w, wi, v, vi);
    }
  }
  fail(errc::internal, "unknown family");
}

static bool brin_blocks_comparable(const Signature& sig, const Word& w, const Word& v) {
  size_t wi = 0, vi = 0;
  for (int c = 1; c <= sig.colors(); ++c) {
    size_t wb = wi, vb = vi;
    while (wi < w.steps.size() && w.steps[wi].color == c) ++wi;
    while (vi < v.steps.size() && v.steps[vi].color == c) ++vi;
    size_t n = std::min(wi - wb, vi - vb);
    if (!std::equal(w.steps.begin() + wb, w.steps.begin() + wb + n, v.steps.begin() + vb))
      return false;
  }
  return true;
}

static bool stein_overlap_rec(const Signature& sig, const Word& w, const Interval& wi,
                              const Word& v, const Interval& vi, size_t max_len) {
  if (is_descendant(sig, w, v)) return true;
  if (!intervals_meet(wi, vi)) return false;
  if (w.steps.size() >= max_len) return false;
  for (int c = 1; c <= sig.colors(); ++c) {
    int n = sig.arity(c);
    for (int j = 1; j <= n; ++j) {
      Interval zi = subinterval(wi, n, j);
      if (!intervals_meet(zi, vi)) continue;
      if (stein_overlap_rec(sig, child(sig, w, c, j), zi, v, vi, max_len)) return true;
    }
  }
  return false;
}

bool overlaps(const Signature& sig, const Word& w, const Word& v) {
  if (w.root != v.root) return false;
  switch (sig.fam()) {
    case Family::higman: {
      size_t n = std::min(w.steps.size(), v.steps.size());
      return std::equal(w.steps.begin(), w.steps.begin() + n, v.steps.begin());
    }
    case Family::brin:
      return brin_blocks_comparable(sig, w, v);
    case Family::stein: {
      if (is_descendant(sig, v, w)) return true;
      Interval wi = word_interval(sig, w), vi = word_interval(sig, v);
      // bounded search to combined depth
      return stein_overlap_rec(sig, w, wi, v, vi, w.steps.size() + v.steps.size() + 2);
    }
  }
  fail(errc::internal, "unknown family");
}

// ---- parent / witness ------------------------------------------------------

std::optional<std::pair<Word, int>> parent(const Signature& sig, const Word& u, int color) {
  // locate the last step of this colour (end of the colour block)
  int idx = -1;
  for (size_t k = 0; k < u.steps.size(); ++k)
    if (u.steps[k].color == color) idx = static_cast<int>(k);
  if (idx < 0) return std::nullopt;

  std::vector<Step> s = u.steps;
  if (sig.fam() == Family::stein) {
    // Bubble the step back past higher colours with the inverse rewrite:
    // (i,a')(j,b') -> (j,b)(i,a) with (b-1)*n_i + a = (a'-1)*n_j + b'.
    for (size_t k = static_cast<size_t>(idx); k + 1 < s.size(); ++k) {
      Step lo = s[k], hi = s[k + 1];
      int ni = sig.arity(lo.color);
      int nj = sig.arity(hi.color);
      int p = (lo.branch - 1) * nj + hi.branch;
      s[k] = {hi.color, (p - 1) / ni + 1};
      s[k + 1] = {lo.color, (p - 1) % ni + 1};
    }
    int j = s.back().branch;
    s.pop_back();
    return std::make_pair(Word{u.root, std::move(s)}, j);
  }
  int j = s[static_cast<size_t>(idx)].branch;
  s.erase(s.begin() + idx);
  return std::make_pair(Word{u.root, std::move(s)}, j);
}

static std::optional<std::vector<Step>> stein_witness_rec(const Signature& sig, const Word& w,
                                                          const Interval& wi, const Word& v,
                                                          const Interval& vi) {
  if (v == w) return std::vector<Step>{};
  if (v.steps.size() >= w.steps.size()) return std::nullopt;
  for (int c = 1; c <= sig.colors(); ++c) {
    int n = sig.arity(c);
    for (int j = 1; j <= n; ++j) {
      Interval zi = subinterval(vi, n, j);
      if (!interval_contains(zi, wi)) continue;
      if (auto tail = stein_witness_rec(sig, w, wi, child(sig, v, c, j), zi)) {
        tail->insert(tail->begin(), Step{c, j});
        return tail;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Step>> descent_witness(const Signature& sig, const Word& w,
                                                 const Word& v) {
  if (!is_descendant(sig, w, v)) return std::nullopt;
  switch (sig.fam()) {
    case Family::higman:
      return std::vector<Step>(w.steps.begin() + static_cast<long>(v.steps.size()),
                               w.steps.end());
    case Family::brin: {
      // per-colour suffixes, concatenated in ascending colour order
      std::vector<Step> sigma;
      size_t wi = 0, vi = 0;
      for (int c = 1; c <= sig.colors(); ++c) {
        size_t wb = wi, vb = vi;
        while (wi < w.steps.size() && w.steps[wi].color == c) ++wi;
        while (vi < v.steps.size() && v.steps[vi].color == c) ++vi;
        sigma.insert(sigma.end(), w.steps.begin() + wb + (vi - vb), w.steps.begin() + wi);
      }
      return sigma;
    }
    case Family::stein:
      return stein_witness_rec(sig, w, word_interval(sig, w), v, word_interval(sig, v));
  }
  fail(errc::internal, "unknown family");
}

// ---- construction-time confluence check ------------------------------------

static std::vector<std::vector<Step>> one_step_rewrites(const Signature& sig,
                                                        const std::vector<Step>& s) {
  std::vector<std::vector<Step>> out;
  for (size_t k = 0; k + 1 < s.size(); ++k) {
    if (s[k].color == s[k + 1].color) continue;
    std::vector<Step> t = s;
    if (sig.fam() == Family::brin) {
      std::swap(t[k], t[k + 1]);
      out.push_back(std::move(t));
    } else if (sig.fam() == Family::stein) {
      if (s[k].color > s[k + 1].color) {
        Step hi = s[k], lo = s[k + 1];
        int ni = sig.arity(lo.color);
        int nj = sig.arity(hi.color);
        int p = (hi.branch - 1) * ni + lo.branch;
        t[k] = {lo.color, (p - 1) / nj + 1};
        t[k + 1] = {hi.color, (p - 1) % nj + 1};
      } else {
        Step lo = s[k], hi = s[k + 1];
        int ni = sig.arity(lo.color);
        int nj = sig.arity(hi.color);
        int p = (lo.branch - 1) * nj + hi.branch;
        t[k] = {hi.color, (p - 1) / ni + 1};
        t[k + 1] = {lo.color, (p - 1) % ni + 1};
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

void verify_depth3_confluence(const Signature& sig) {
  if (sig.fam() == Family::higman) return;
  std::vector<std::vector<Step>> frontier{{}};
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<std::vector<Step>> next;
    for (const auto& s : frontier)
      for (int c = 1; c <= sig.colors(); ++c)
        for (int j = 1; j <= sig.arity(c); ++j) {
          auto t = s;
          t.push_back({c, j});
          next.push_back(std::move(t));
        }
    for (const auto& s : next) {
      auto nf = normalize_steps(sig, s);
      for (const auto& rewritten : one_step_rewrites(sig, s))
        if (normalize_steps(sig, rewritten) != nf)
          fail(errc::family_constraint_violated,
               "relation rewriting is not confluent at depth <= 3");
      if (normalize_steps(sig, nf) != nf)
        fail(errc::family_constraint_violated, "normal form is not a rewrite fixed point");
    }
    frontier = std::move(next);
  }
}

}  // namespace cantor
