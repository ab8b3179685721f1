#include "hopfimage/inner_faithful.hpp"

#include <algorithm>

#include "hopfimage/error.hpp"

namespace hopfimage {

namespace {

Subspace counit_kernel(const HopfAlgebra& h) {
  return kernel(Matrix::from_rows(h.field(), h.dim(), {h.counit()}));
}

// y = P x for sparse columns of P.
Vector apply_leg(const LegMap& p, std::span<const Scalar> x) {
  Vector out = zero_vector(x.empty() ? FieldSpec{} : x[0].field(), p.target_dim);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [r, v] : p.columns[c]) out[r].add_product(x[c], v);
  }
  return out;
}

Vector apply_leg(const LegMap& p, const SparseVector& x, FieldSpec field) {
  Vector out = zero_vector(field, p.target_dim);
  for (const auto& [c, xc] : x) {
    for (const auto& [r, v] : p.columns[c]) out[r].add_product(xc, v);
  }
  return out;
}

// (P (x) P) applied to a sparse vector of H (x) H.
Vector apply_square(const LegMap& p, const SparseVector& x, std::size_t n, FieldSpec field) {
  const std::size_t q = p.target_dim;
  Vector out = zero_vector(field, q * q);
  for (const auto& [idx, c] : x) {
    const auto& left = p.columns[idx / n];
    const auto& right = p.columns[idx % n];
    for (const auto& [a, u] : left) {
      const Scalar cu = c * u;
      for (const auto& [b, v] : right) out[a * q + b].add_product(cu, v);
    }
  }
  return out;
}

SparseVector sparse_product(const Algebra& alg, std::size_t a, const Vector& x, bool left) {
  Vector out = zero_vector(alg.field(), alg.dim());
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c].is_zero()) continue;
    for (const auto& [k, m] : left ? alg.product(a, c) : alg.product(c, a)) {
      out[k].add_product(x[c], m);
    }
  }
  return to_sparse(out);
}

// One refinement step: the x in J whose Delta, S and products with basis
// elements all vanish modulo J.
Subspace refine(const HopfAlgebra& h, const Subspace& j) {
  const std::size_t n = h.dim();
  const FieldSpec field = h.field();
  const QuotientBasis qb = quotient_basis(j);
  const LegMap p = make_leg_map(qb.projection);
  const std::vector<Vector> basis = j.basis_vectors();
  const std::size_t d = basis.size();

  // constraints[k] holds the constraint values of basis vector k
  std::vector<Vector> constraints(d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector& out = constraints[k];
    const Vector sq = apply_square(p, h.comultiply(basis[k]), n, field);
    out.insert(out.end(), sq.begin(), sq.end());
    const Vector s = apply_leg(p, h.antipode().apply(basis[k]));
    out.insert(out.end(), s.begin(), s.end());
    for (std::size_t a = 0; a < n; ++a) {
      for (bool left : {true, false}) {
        const Vector v = apply_leg(p, sparse_product(h.algebra(), a, basis[k], left), field);
        out.insert(out.end(), v.begin(), v.end());
      }
    }
  }
  RowEchelon rows(field, d);
  const std::size_t total = d == 0 ? 0 : constraints[0].size();
  Vector row(d, Scalar(field));
  for (std::size_t r = 0; r < total && !rows.full_rank(); ++r) {
    bool nonzero = false;
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = constraints[k][r];
      nonzero = nonzero || !row[k].is_zero();
    }
    if (nonzero) rows.add(row);
  }
  std::vector<Vector> kept;
  for (const auto& c : rows.kernel().basis_vectors()) {
    Vector x = zero_vector(field, n);
    for (std::size_t k = 0; k < d; ++k) {
      if (c[k].is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (!basis[k][i].is_zero()) x[i].add_product(c[k], basis[k][i]);
      }
    }
    kept.push_back(std::move(x));
  }
  return Subspace::span(field, n, kept);
}

}  // namespace

HopfIdealCertificate certify_hopf_ideal(const HopfAlgebra& h, const Subspace& j) {
  if (j.ambient_dim() != h.dim()) {
    throw HopfError(ErrorCode::AmbientMismatch, "ideal candidate lives in another space");
  }
  const std::size_t n = h.dim();
  const FieldSpec field = h.field();
  const std::vector<Vector> basis = j.basis_vectors();
  HopfIdealCertificate cert;
  cert.subspace = j;

  cert.contained_in_ker_eps = std::all_of(basis.begin(), basis.end(), [&](const Vector& b) {
    return h.apply_counit(b).is_zero();
  });

  cert.two_sided_ideal = true;
  for (std::size_t a = 0; a < n && cert.two_sided_ideal; ++a) {
    for (const auto& b : basis) {
      if (!j.contains(to_dense(sparse_product(h.algebra(), a, b, true), field, n)) ||
          !j.contains(to_dense(sparse_product(h.algebra(), a, b, false), field, n))) {
        cert.two_sided_ideal = false;
        break;
      }
    }
  }

  cert.antipode_stable = std::all_of(basis.begin(), basis.end(), [&](const Vector& b) {
    return j.contains(h.antipode().apply(b));
  });

  // Delta x lies in J (x) H + H (x) J iff every f (x) g with f, g vanishing on J
  // kills it.
  const std::vector<Vector> annihilator = kernel(j.basis().rows() == 0 ? Matrix(field, 0, n) : j.basis())
                                              .basis_vectors();
  cert.coideal = true;
  for (const auto& b : basis) {
    const SparseVector delta = h.comultiply(b);
    for (const auto& f : annihilator) {
      for (const auto& g : annihilator) {
        Scalar value(field);
        for (const auto& [idx, c] : delta) {
          const Scalar& fu = f[idx / n];
          const Scalar& gv = g[idx % n];
          if (!fu.is_zero() && !gv.is_zero()) value.add_product(c, fu * gv);
        }
        if (!value.is_zero()) {
          cert.coideal = false;
          break;
        }
      }
      if (!cert.coideal) break;
    }
    if (!cert.coideal) break;
  }
  return cert;
}

HopfIdealCertificate largest_hopf_ideal(const HopfAlgebra& h, const Subspace& v) {
  if (v.ambient_dim() != h.dim()) {
    throw HopfError(ErrorCode::AmbientMismatch, "subspace lives in another space");
  }
  Subspace j = intersect(v, counit_kernel(h));
  std::size_t iterations = 0;
  while (j.dim() > 0) {
    Subspace next = refine(h, j);
    ++iterations;
    if (next.dim() == j.dim()) break;
    j = std::move(next);
  }
  HopfIdealCertificate cert = certify_hopf_ideal(h, j);
  cert.iterations = iterations;
  if (!cert.valid()) {
    throw HopfError(ErrorCode::AxiomViolation, "refinement ended on a subspace that is not a Hopf ideal");
  }
  return cert;
}

KernelChain kernel_chain(const MorphismFamily& fam, std::size_t max_len, std::size_t cap_entries) {
  const HopfAlgebra& h = fam.domain();
  const FieldSpec field = h.field();
  const std::size_t n = h.dim();
  WordEvaluator eval(fam, cap_entries);
  KernelChain chain;
  chain.levels.push_back(counit_kernel(h));
  ++chain.words_evaluated;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Subspace current = chain.levels.back();
    if (current.dim() > 0 && fam.size() > 0) {
      Word w(len, Letter{0, false});
      do {
        const std::vector<Vector> basis = current.basis_vectors();
        const Matrix images = eval.images(w, basis);
        ++chain.words_evaluated;
        const Subspace coeffs = kernel(images);
        if (coeffs.dim() == basis.size()) continue;
        std::vector<Vector> kept;
        for (const auto& c : coeffs.basis_vectors()) {
          Vector x = zero_vector(field, n);
          for (std::size_t k = 0; k < basis.size(); ++k) {
            if (c[k].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
              if (!basis[k][i].is_zero()) x[i].add_product(c[k], basis[k][i]);
            }
          }
          kept.push_back(std::move(x));
        }
        current = Subspace::span(field, n, kept);
      } while (current.dim() > 0 && next_word(w, fam.size()));
    }
    chain.levels.push_back(std::move(current));
  }
  for (std::size_t i = 0; i + 1 < chain.levels.size(); ++i) {
    if (chain.levels[i] == chain.levels[i + 1]) {
      chain.stabilized_at = i;
      break;
    }
  }
  return chain;
}

IFVerdict decide_jointly_if(const MorphismFamily& fam, std::size_t scan_len, std::size_t cap_entries) {
  if (fam.size() == 0) throw HopfError(ErrorCode::InvalidArgument, "empty morphism family");
  IFVerdict verdict;
  verdict.common_kernel = common_kernel(fam);
  verdict.witness = largest_hopf_ideal(fam.domain(), verdict.common_kernel);
  verdict.jointly_inner_faithful = verdict.witness.subspace.dim() == 0;
  const KernelChain chain = kernel_chain(fam, scan_len, cap_entries);
  for (std::size_t len = 0; len < chain.levels.size(); ++len) {
    verdict.word_scan.push_back({len, chain.levels[len].dim()});
    verdict.sandwich_holds =
        verdict.sandwich_holds && chain.levels[len].contains(verdict.witness.subspace);
  }
  verdict.stabilized_at = chain.stabilized_at;
  verdict.warn = !(chain.levels.back() == verdict.witness.subspace);
  return verdict;
}

HopfImage hopf_image(const MorphismFamily& fam) {
  return hopf_image(fam, largest_hopf_ideal(fam.domain(), common_kernel(fam)));
}

HopfImage hopf_image(const MorphismFamily& fam, const HopfIdealCertificate& witness) {
  const HopfAlgebra& h = fam.domain();
  const FieldSpec field = h.field();
  const std::size_t n = h.dim();
  const QuotientBasis qb = quotient_basis(witness.subspace);
  const LegMap p = make_leg_map(qb.projection);
  const auto& coords = qb.complement_coordinates;
  const std::size_t q = coords.size();

  std::vector<SparseVector> products(q * q);
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t l = 0; l < q; ++l) {
      products[k * q + l] = to_sparse(apply_leg(p, h.algebra().product(coords[k], coords[l]), field));
    }
  }
  Algebra alg(field, q, std::move(products), apply_leg(p, h.algebra().unit()));
  std::vector<SparseVector> coproducts(q);
  Vector counit(q, Scalar(field));
  for (std::size_t k = 0; k < q; ++k) {
    coproducts[k] = to_sparse(apply_square(p, h.coproduct(coords[k]), n, field));
    counit[k] = h.counit()[coords[k]];
  }
  Matrix antipode = qb.projection * h.antipode() * qb.complement;
  auto image = share(HopfAlgebra(std::move(alg), std::move(coproducts), std::move(counit),
                                 std::move(antipode)));
  AlgebraMorphism quotient(fam.domain_ptr(), image, qb.projection, true);
  std::vector<AlgebraMorphism> factored;
  for (const auto& m : fam.maps()) {
    factored.emplace_back(image, m.target(), m.matrix() * qb.complement, m.is_hopf());
  }
  return HopfImage{image, std::move(quotient), MorphismFamily(image, std::move(factored), fam.labels()),
                   witness};
}

MorphismFamily tensor_family(const MorphismFamily& fam_i, const MorphismFamily& fam_j) {
  if (!(fam_i.field() == fam_j.field())) {
    throw HopfError(ErrorCode::FieldMismatch, "tensor_family: fields differ");
  }
  auto domain = share(tensor_hopf(fam_i.domain(), fam_j.domain()));
  std::vector<AlgebraMorphism> maps;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < fam_i.size(); ++i) {
    for (std::size_t j = 0; j < fam_j.size(); ++j) {
      const AlgebraMorphism& f = fam_i.map(i);
      const AlgebraMorphism& g = fam_j.map(j);
      Endpoint target = f.target().is_hopf() && g.target().is_hopf()
                            ? Endpoint(share(tensor_hopf(f.target().hopf(), g.target().hopf())))
                            : Endpoint(share(tensor_algebra(f.target().algebra(), g.target().algebra())));
      maps.emplace_back(domain, std::move(target), kronecker(f.matrix(), g.matrix()),
                        f.is_hopf() && g.is_hopf());
      labels.push_back(fam_i.label(i) + "(x)" + fam_j.label(j));
    }
  }
  return MorphismFamily(domain, std::move(maps), std::move(labels));
}

std::optional<Word> separating_word(const MorphismFamily& fam, const std::vector<Vector>& vectors,
                                    std::size_t max_len, std::size_t cap_entries) {
  const std::size_t n = fam.domain().dim();
  for (const auto& v : vectors) {
    if (v.size() != n) throw HopfError(ErrorCode::AmbientMismatch, "vector of the wrong length");
  }
  if (!vectors.empty() && rank(Matrix::from_rows(fam.field(), n, vectors)) != vectors.size()) {
    throw HopfError(ErrorCode::NotIndependent, "separating_word needs linearly independent vectors");
  }
  WordEvaluator eval(fam, cap_entries);
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len > 0 && fam.size() == 0) break;
    Word w(len, Letter{0, false});
    do {
      if (rank(eval.images(w, vectors)) == vectors.size()) return w;
    } while (len > 0 && next_word(w, fam.size()));
  }
  return std::nullopt;
}

MorphismFamily close_under_products(const MorphismFamily& fam, std::size_t max_subset) {
  std::vector<AlgebraMorphism> maps = fam.maps();
  std::vector<std::string> labels = fam.labels();
  const std::size_t m = fam.size();
  for (std::size_t size = 2; size <= std::min(max_subset, m); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<std::shared_ptr<const Algebra>> targets;
      Matrix stacked = fam.map(pick[0]).matrix();
      std::string label = fam.label(pick[0]);
      targets.push_back(fam.map(pick[0]).target().algebra_ptr());
      for (std::size_t i = 1; i < size; ++i) {
        targets.push_back(fam.map(pick[i]).target().algebra_ptr());
        stacked = vstack(stacked, fam.map(pick[i]).matrix());
        label += "x" + fam.label(pick[i]);
      }
      maps.emplace_back(fam.domain_ptr(), share(direct_product(targets)), std::move(stacked));
      labels.push_back(std::move(label));
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return MorphismFamily(fam.domain_ptr(), std::move(maps), std::move(labels));
}

MorphismFamily close_under_products(const MorphismFamily& fam) {
  return close_under_products(fam, fam.size());
}

bool is_jointly_faithful(const MorphismFamily& fam) { return common_kernel(fam).dim() == 0; }

bool antipode_injective(const HopfAlgebra& h) { return rank(h.antipode()) == h.dim(); }

namespace {

// Span of the leg-t tensorands: the column space of the leg-t flattening.
Subspace leg_span(const std::vector<TensorTerms>& tensors, std::size_t t, std::size_t n,
                  FieldSpec field) {
  std::vector<Vector> vectors;
  for (const auto& terms : tensors) {
    std::map<std::vector<std::uint32_t>, Vector> slices;
    for (const auto& [key, c] : terms) {
      std::vector<std::uint32_t> rest = key;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      auto it = slices.try_emplace(std::move(rest), zero_vector(field, n)).first;
      it->second[key[t]] += c;
    }
    for (auto& [rest, v] : slices) vectors.push_back(std::move(v));
  }
  return Subspace::span(field, n, vectors);
}

}  // namespace

MixedSeparation mixed_tensor_separation(const MorphismFamily& fam_i, const MorphismFamily& fam_j,
                                        std::span<const Scalar> x, const MixedBounds& bounds) {
  const HopfAlgebra& h = fam_i.domain();
  const HopfAlgebra& k = fam_j.domain();
  const std::size_t n = h.dim();
  const std::size_t m = k.dim();
  const FieldSpec field = h.field();
  if (x.size() != n * m) throw HopfError(ErrorCode::AmbientMismatch, "x is not in H (x) K");
  if (is_zero(x)) throw HopfError(ErrorCode::InvalidArgument, "x must be non-zero");
  if (!is_jointly_faithful(fam_i)) {
    throw HopfError(ErrorCode::InvalidArgument, "the H family is not jointly faithful");
  }
  if (!antipode_injective(h)) throw HopfError(ErrorCode::InvalidArgument, "antipode of H is not injective");
  if (!decide_jointly_if(fam_j, 0).jointly_inner_faithful) {
    throw HopfError(ErrorCode::InvalidArgument, "the K family is not jointly inner faithful");
  }

  // x = sum_s e_s (x) f_s over the basis rows of x
  std::vector<std::size_t> rows;
  std::vector<Vector> f;
  for (std::size_t s = 0; s < n; ++s) {
    const auto row = x.subspan(s * m, m);
    if (is_zero(row)) continue;
    rows.push_back(s);
    f.emplace_back(row.begin(), row.end());
  }

  WordEvaluator eval_j(fam_j, bounds.cap_entries);
  std::optional<Word> j_word;
  for (std::size_t len = 1; len <= bounds.max_j_length && !j_word && fam_j.size() > 0; ++len) {
    Word w(len, Letter{0, false});
    do {
      if (!eval_j.images(w, f).is_zero()) {
        j_word = w;
        break;
      }
    } while (next_word(w, fam_j.size()));
  }
  if (!j_word) {
    throw HopfError(ErrorCode::BoundExceeded, "no word over the K family of length <= " +
                                                  std::to_string(bounds.max_j_length) + " sees x");
  }

  const std::vector<bool> pattern = star_pattern(*j_word);
  std::vector<TensorTerms> tensors;
  for (std::size_t s : rows) {
    tensors.push_back(twisted_coproduct_terms(h, unit_vector(field, n, s), pattern));
  }
  Word i_word;
  for (std::size_t t = 0; t < pattern.size(); ++t) {
    const Subspace v = leg_span(tensors, t, n, field);
    std::optional<std::size_t> chosen;
    for (std::size_t i = 0; i < fam_i.size() && !chosen; ++i) {
      if (v.dim() == 0 || rank(fam_i.map(i).matrix() * v.basis().transpose()) == v.dim()) chosen = i;
    }
    if (!chosen) {
      throw HopfError(ErrorCode::BoundExceeded,
                      "no member of the H family is injective on leg " + std::to_string(t) +
                          "; close the family under products first");
    }
    i_word.push_back(Letter{*chosen, pattern[t]});
  }

  MixedSeparation out;
  out.i_word = i_word;
  out.j_word = *j_word;
  for (std::size_t t = 0; t < pattern.size(); ++t) {
    out.word.push_back(Letter{i_word[t].index * fam_j.size() + (*j_word)[t].index, pattern[t]});
  }
  const MorphismFamily combined = tensor_family(fam_i, fam_j);
  out.image = word_images(combined, out.word, {Vector(x.begin(), x.end())}, bounds.cap_entries).column(0);
  if (is_zero(out.image)) {
    throw HopfError(ErrorCode::BoundExceeded, "combined word " + format_word(out.word) +
                                                  " annihilates x");
  }
  return out;
}

}  // namespace hopfimage
