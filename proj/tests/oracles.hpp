#pragma once

// Brute-force references kept apart from the engine: they share only the
// linear algebra layer.

#include <random>
#include <set>
#include <vector>

#include "hopfimage/builtins.hpp"
#include "hopfimage/hopf_algebra.hpp"
#include "hopfimage/subspace.hpp"

namespace hopfimage::testing {

/// Copy of h with one structure constant changed by +1. Entries are drawn
/// uniformly over unit, multiplication, comultiplication, counit and antipode.
inline HopfAlgebra mutate(const HopfAlgebra& h, std::mt19937_64& rng) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  Vector unit = h.algebra().unit();
  Vector mult = h.algebra().dense_mult();
  Vector comult = h.dense_comult();
  Vector counit = h.counit();
  Matrix antipode = h.antipode();
  const std::size_t total = n + 2 * n * n * n + n + n * n;
  std::size_t k = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  const Scalar one(f, 1);
  if (k < n) {
    unit[k] += one;
  } else if ((k -= n) < n * n * n) {
    mult[k] += one;
  } else if ((k -= n * n * n) < n * n * n) {
    comult[k] += one;
  } else if ((k -= n * n * n) < n) {
    counit[k] += one;
  } else {
    k -= n;
    antipode(k / n, k % n) += one;
  }
  return HopfAlgebra::from_dense(Algebra::from_dense(f, n, mult, unit), comult, counit,
                                 antipode);
}

/// Independent Hopf ideal test: Delta(J) inside the span of e_a (x) j and
/// j (x) e_a, built as a subspace of H (x) H.
inline bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& j) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  const auto gens = j.basis_vectors();
  for (const Vector& v : gens) {
    if (!h.apply_counit(v).is_zero()) return false;
    if (!j.contains(h.antipode().apply(v))) return false;
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ea = unit_vector(f, n, a);
      if (!j.contains(h.algebra().multiply(ea, v))) return false;
      if (!j.contains(h.algebra().multiply(v, ea))) return false;
    }
  }
  std::vector<Vector> left, right;
  for (const Vector& v : gens) {
    for (std::size_t a = 0; a < n; ++a) {
      const Vector ea = unit_vector(f, n, a);
      left.push_back(kron(v, ea));
      right.push_back(kron(ea, v));
    }
  }
  const Subspace w = subspace_sum(Subspace::span(f, n * n, left), Subspace::span(f, n * n, right));
  for (const Vector& v : gens) {
    if (!w.contains(to_dense(h.comultiply(v), f, n * n))) return false;
  }
  return true;
}

/// Every subspace of v, by spans of all tuples of dim(v) coefficient vectors.
/// Only for tiny prime fields.
inline std::vector<Subspace> all_subspaces(const Subspace& v) {
  const FieldSpec f = v.field();
  const std::size_t d = v.dim();
  const std::size_t p = f.p;
  const auto basis = v.basis_vectors();
  std::vector<Vector> points;
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    Vector x = zero_vector(f, v.ambient_dim());
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= p) {
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += Scalar(f, long(c % p)) * basis[i][k];
    }
    points.push_back(x);
  }
  std::vector<Subspace> out;
  std::vector<std::size_t> pick(d, 0);
  for (;;) {
    std::vector<Vector> gens;
    for (std::size_t i : pick) gens.push_back(points[i]);
    Subspace s = Subspace::span(f, v.ambient_dim(), gens);
    bool seen = false;
    for (const auto& t : out) seen = seen || t == s;
    if (!seen) out.push_back(s);
    std::size_t i = 0;
    while (i < d && ++pick[i] == points.size()) pick[i++] = 0;
    if (i == d) break;
  }
  return out;
}

/// Largest Hopf ideal inside v by exhaustive search.
inline Subspace brute_force_largest_hopf_ideal(const HopfAlgebra& h, const Subspace& v) {
  Subspace best = Subspace::zero(h.field(), h.dim());
  for (const Subspace& s : all_subspaces(v)) {
    if (s.dim() > best.dim() && is_hopf_ideal(h, s)) best = s;
  }
  return best;
}

/// Subgroups as sorted element lists.
inline std::vector<std::vector<std::size_t>> subgroups(const GroupTable& g, bool normal_only) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    auto in = [&](std::size_t x) { return (mask >> x) & 1; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (in(b) && !in(g.mult[a][b])) ok = false;
      }
      for (std::size_t x = 0; x < n && ok && normal_only; ++x) {
        if (!in(g.mult[g.mult[x][a]][g.inverse(x)])) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x) if (in(x)) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

/// Kernel of kG -> k[G/N]: span of g - gm for m in N.
inline Subspace group_ideal(FieldSpec f, const GroupTable& g, const std::vector<std::size_t>& normal) {
  std::vector<Vector> gens;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t m : normal) {
      Vector v = unit_vector(f, g.order(), x);
      v[g.mult[x][m]] -= Scalar(f, 1);
      gens.push_back(v);
    }
  }
  return Subspace::span(f, g.order(), gens);
}

/// Kernel of k^G -> k^K: point masses off K.
inline Subspace function_ideal(FieldSpec f, const GroupTable& g, const std::vector<std::size_t>& sub) {
  std::vector<Vector> gens;
  const std::set<std::size_t> in(sub.begin(), sub.end());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!in.count(x)) gens.push_back(unit_vector(f, g.order(), x));
  }
  return Subspace::span(f, g.order(), gens);
}

/// Largest Hopf ideal of kG inside v via the normal subgroup correspondence.
inline Subspace group_oracle(FieldSpec f, const GroupTable& g, const Subspace& v) {
  Subspace best = Subspace::zero(f, g.order());
  for (const auto& n : subgroups(g, true)) {
    Subspace j = group_ideal(f, g, n);
    if (v.contains(j) && j.dim() > best.dim()) best = j;
  }
  return best;
}

/// Same for k^G via subgroups.
inline Subspace function_oracle(FieldSpec f, const GroupTable& g, const Subspace& v) {
  Subspace best = Subspace::zero(f, g.order());
  for (const auto& k : subgroups(g, false)) {
    Subspace j = function_ideal(f, g, k);
    if (v.contains(j) && j.dim() > best.dim()) best = j;
  }
  return best;
}

}  // namespace hopfimage::testing
