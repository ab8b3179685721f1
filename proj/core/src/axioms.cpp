#include "hopfimage/axioms.hpp"

#include <sstream>

#include "hopfimage/error.hpp"
#include "hopfimage/subspace.hpp"

namespace hopfimage {

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed && !r.informational) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::string AxiomReport::first_failure() const {
  for (const auto& r : results) {
    if (r.passed || r.informational) continue;
    std::ostringstream out;
    out << r.name << " fails at basis tuple (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << r.witness[i];
    out << ")";
    if (!r.detail.empty()) out << ": " << r.detail;
    return out.str();
  }
  return {};
}

void require_valid(const AxiomReport& report, std::string_view what) {
  if (!report.all_passed()) {
    throw HopfError(ErrorCode::AxiomViolation, std::string(what) + ": " + report.first_failure());
  }
}

namespace {

// Runs one axiom; the predicate returns false at a failing tuple.
class Checker {
 public:
  Checker(AxiomReport& report, CheckMode mode) : report_(report), mode_(mode) {}

  bool stopped() const { return stopped_; }

  template <typename Body>
  void run(std::string name, Body body, bool informational = false) {
    if (stopped_) return;
    AxiomResult result;
    result.name = std::move(name);
    result.informational = informational;
    body(result);
    if (!result.passed && !informational && mode_ == CheckMode::StopAtFirstFailure) {
      stopped_ = true;
    }
    report_.results.push_back(std::move(result));
  }

 private:
  AxiomReport& report_;
  CheckMode mode_;
  bool stopped_ = false;
};

void fail(AxiomResult& r, std::vector<std::size_t> witness, std::string detail = {}) {
  r.passed = false;
  r.witness = std::move(witness);
  r.detail = std::move(detail);
}

// Sum of coeff * (e_c * e_l) over the sparse left factor.
Vector multiply_sparse_by_basis(const Algebra& a, const SparseVector& left, std::size_t l,
                                bool left_is_sparse_side) {
  Vector out = zero_vector(a.field(), a.dim());
  for (const auto& [c, x] : left) {
    const SparseVector& p = left_is_sparse_side ? a.product(c, l) : a.product(l, c);
    for (const auto& [k, y] : p) out[k].add_product(x, y);
  }
  return out;
}

void check_algebra_into(const Algebra& a, Checker& checker) {
  const std::size_t n = a.dim();
  const FieldSpec field = a.field();
  checker.run("unit_left", [&](AxiomResult& r) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.multiply(a.unit(), unit_vector(field, n, j)) != unit_vector(field, n, j)) {
        return fail(r, {j});
      }
    }
  });
  checker.run("unit_right", [&](AxiomResult& r) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.multiply(unit_vector(field, n, j), a.unit()) != unit_vector(field, n, j)) {
        return fail(r, {j});
      }
    }
  });
  checker.run("associativity", [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          const Vector left = multiply_sparse_by_basis(a, a.product(i, j), l, true);
          const Vector right = multiply_sparse_by_basis(a, a.product(j, l), i, false);
          if (left != right) return fail(r, {i, j, l});
        }
      }
    }
  });
}

// Delta(x) Delta(y) in H (x) H for sparse coproducts.
Vector multiply_in_square(const HopfAlgebra& h, const SparseVector& x, const SparseVector& y) {
  const std::size_t n = h.dim();
  const Algebra& a = h.algebra();
  Vector out = zero_vector(h.field(), n * n);
  for (const auto& [ix, cx] : x) {
    const std::size_t xa = ix / n, xb = ix % n;
    for (const auto& [iy, cy] : y) {
      const std::size_t ya = iy / n, yb = iy % n;
      const SparseVector& left = a.product(xa, ya);
      const SparseVector& right = a.product(xb, yb);
      if (left.empty() || right.empty()) continue;
      const Scalar c = cx * cy;
      for (const auto& [p, u] : left) {
        const Scalar cu = c * u;
        for (const auto& [q, v] : right) out[p * n + q].add_product(cu, v);
      }
    }
  }
  return out;
}

}  // namespace

AxiomReport check_algebra(const Algebra& a, CheckMode mode) {
  AxiomReport report;
  Checker checker(report, mode);
  check_algebra_into(a, checker);
  return report;
}

AxiomReport check_hopf(const HopfAlgebra& h, CheckMode mode) {
  AxiomReport report;
  Checker checker(report, mode);
  const std::size_t n = h.dim();
  const FieldSpec field = h.field();
  const Algebra& a = h.algebra();
  check_algebra_into(a, checker);

  checker.run("coassociativity", [&](AxiomResult& r) {
    for (std::size_t c = 0; c < n; ++c) {
      Vector left = zero_vector(field, n * n * n);
      Vector right = zero_vector(field, n * n * n);
      for (const auto& [idx, x] : h.coproduct(c)) {
        const std::size_t p = idx / n, q = idx % n;
        for (const auto& [jdx, y] : h.coproduct(p)) left[jdx * n + q].add_product(x, y);
        for (const auto& [jdx, y] : h.coproduct(q)) right[p * n * n + jdx].add_product(x, y);
      }
      if (left != right) return fail(r, {c});
    }
  });
  checker.run("counit_left", [&](AxiomResult& r) {
    for (std::size_t c = 0; c < n; ++c) {
      Vector v = zero_vector(field, n);
      for (const auto& [idx, x] : h.coproduct(c)) v[idx % n].add_product(h.counit()[idx / n], x);
      if (v != unit_vector(field, n, c)) return fail(r, {c});
    }
  });
  checker.run("counit_right", [&](AxiomResult& r) {
    for (std::size_t c = 0; c < n; ++c) {
      Vector v = zero_vector(field, n);
      for (const auto& [idx, x] : h.coproduct(c)) v[idx / n].add_product(h.counit()[idx % n], x);
      if (v != unit_vector(field, n, c)) return fail(r, {c});
    }
  });
  checker.run("comult_unital", [&](AxiomResult& r) {
    if (to_dense(h.comultiply(a.unit()), field, n * n) != kron(a.unit(), a.unit())) fail(r, {});
  });
  checker.run("comult_multiplicative", [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector left = zero_vector(field, n * n);
        for (const auto& [k, m] : a.product(i, j)) {
          for (const auto& [idx, x] : h.coproduct(k)) left[idx].add_product(m, x);
        }
        if (left != multiply_in_square(h, h.coproduct(i), h.coproduct(j))) return fail(r, {i, j});
      }
    }
  });
  checker.run("counit_unital", [&](AxiomResult& r) {
    if (!h.apply_counit(a.unit()).is_one()) fail(r, {});
  });
  checker.run("counit_multiplicative", [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar left(field);
        for (const auto& [k, m] : a.product(i, j)) left.add_product(m, h.counit()[k]);
        if (left != h.counit()[i] * h.counit()[j]) return fail(r, {i, j});
      }
    }
  });
  auto antipode_side = [&](bool left_side) {
    return [&, left_side](AxiomResult& r) {
      const Matrix& s = h.antipode();
      for (std::size_t c = 0; c < n; ++c) {
        Vector v = zero_vector(field, n);
        for (const auto& [idx, x] : h.coproduct(c)) {
          const std::size_t p = idx / n, q = idx % n;
          const std::size_t twisted = left_side ? p : q;
          const std::size_t plain = left_side ? q : p;
          for (std::size_t t = 0; t < n; ++t) {
            const Scalar& st = s(t, twisted);
            if (st.is_zero()) continue;
            const Scalar coeff = x * st;
            const SparseVector& prod = left_side ? a.product(t, plain) : a.product(plain, t);
            for (const auto& [k, m] : prod) v[k].add_product(coeff, m);
          }
        }
        Vector expected = a.unit();
        for (auto& e : expected) e *= h.counit()[c];
        if (v != expected) return fail(r, {c});
      }
    };
  };
  checker.run("antipode_left", antipode_side(true));
  checker.run("antipode_right", antipode_side(false));
  checker.run("antipode_invertible", [&](AxiomResult& r) {
    const std::size_t rk = rank(h.antipode());
    if (rk != n) fail(r, {}, "rank " + std::to_string(rk) + " < " + std::to_string(n));
  });
  checker.run(
      "antipode_involutive",
      [&](AxiomResult& r) {
        if (h.antipode() * h.antipode() != Matrix::identity(field, n)) {
          fail(r, {}, "S^2 != id");
        }
      },
      true);
  return report;
}

AxiomReport check_morphism(const AlgebraMorphism& f, CheckMode mode) {
  AxiomReport report;
  Checker checker(report, mode);
  const Algebra& src = f.source().algebra();
  const Algebra& tgt = f.target().algebra();
  const std::size_t n = src.dim();
  const Matrix& m = f.matrix();
  std::vector<Vector> images;
  images.reserve(n);
  for (std::size_t c = 0; c < n; ++c) images.push_back(m.column(c));

  checker.run("unital", [&](AxiomResult& r) {
    if (m.apply(src.unit()) != tgt.unit()) fail(r, {});
  });
  checker.run("multiplicative", [&](AxiomResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector left = zero_vector(src.field(), tgt.dim());
        for (const auto& [k, c] : src.product(i, j)) {
          for (std::size_t t = 0; t < tgt.dim(); ++t) {
            if (!images[k][t].is_zero()) left[t].add_product(c, images[k][t]);
          }
        }
        if (left != tgt.multiply(images[i], images[j])) return fail(r, {i, j});
      }
    }
  });
  if (!f.is_hopf()) return report;

  const HopfAlgebra& hs = f.source().hopf();
  const HopfAlgebra& ht = f.target().hopf();
  const std::size_t nt = ht.dim();
  checker.run("comultiplicative", [&](AxiomResult& r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Vector left = to_dense(ht.comultiply(images[c]), ht.field(), nt * nt);
      Vector right = zero_vector(ht.field(), nt * nt);
      for (const auto& [idx, x] : hs.coproduct(c)) {
        const Vector term = kron(images[idx / n], images[idx % n]);
        for (std::size_t t = 0; t < term.size(); ++t) {
          if (!term[t].is_zero()) right[t].add_product(x, term[t]);
        }
      }
      if (left != right) return fail(r, {c});
    }
  });
  checker.run("counital", [&](AxiomResult& r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (ht.apply_counit(images[c]) != hs.counit()[c]) return fail(r, {c});
    }
  });
  checker.run("antipode_compatible", [&](AxiomResult& r) {
    const Matrix left = ht.antipode() * m;
    const Matrix right = m * hs.antipode();
    for (std::size_t c = 0; c < n; ++c) {
      if (left.column(c) != right.column(c)) return fail(r, {c});
    }
  });
  return report;
}

}  // namespace hopfimage
