#include "hopfimage/free_product.hpp"

#include <sstream>

#include "hopfimage/error.hpp"

namespace hopfimage {

void add_term(FPElement& x, const FPWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

void add_term(FPTensor& x, const std::vector<FPWord>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

FPElement scaled(const FPElement& x, const Scalar& c) {
  FPElement out;
  for (const auto& [w, v] : x) add_term(out, w, v * c);
  return out;
}

FPElement operator+(const FPElement& a, const FPElement& b) {
  FPElement out = a;
  for (const auto& [w, v] : b) add_term(out, w, v);
  return out;
}

FPElement operator-(const FPElement& a, const FPElement& b) {
  FPElement out = a;
  for (const auto& [w, v] : b) add_term(out, w, -v);
  return out;
}

std::size_t support_length(const FPElement& x) {
  return x.empty() ? 0 : x.rbegin()->first.size();
}

std::size_t support_length(const FPTensor& x) {
  std::size_t out = 0;
  for (const auto& [legs, c] : x) {
    for (const auto& w : legs) out = std::max(out, w.size());
  }
  return out;
}

TruncatedFreeProduct::TruncatedFreeProduct(std::vector<Endpoint> factors, std::size_t bound)
    : factors_(std::move(factors)), bound_(bound) {
  if (factors_.empty()) throw HopfError(ErrorCode::InvalidArgument, "free product of no factors");
  field_ = factors_[0].field();
  for (const auto& f : factors_) {
    if (!(f.field() == field_)) throw HopfError(ErrorCode::FieldMismatch, "free product factors differ in field");
    const Vector& unit = f.algebra().unit();
    std::size_t u = 0;
    while (u < unit.size() && unit[u].is_zero()) ++u;
    if (u == unit.size()) throw HopfError(ErrorCode::InvalidArgument, "factor with zero unit");
    unit_coordinate_.push_back(u);
    std::vector<std::size_t> letters;
    for (std::size_t c = 0; c < unit.size(); ++c) {
      if (c != u) letters.push_back(c);
    }
    letters_.push_back(std::move(letters));
  }
}

bool TruncatedFreeProduct::hopf_factors() const {
  for (const auto& f : factors_) {
    if (!f.is_hopf()) return false;
  }
  return true;
}

void TruncatedFreeProduct::require_factor(std::size_t f) const {
  if (f >= factors_.size()) {
    throw HopfError(ErrorCode::UnknownIndex, "free product has no factor " + std::to_string(f));
  }
}

FPElement TruncatedFreeProduct::one() const {
  return FPElement{{FPWord{}, Scalar(field_, 1)}};
}

FPElement TruncatedFreeProduct::embed(std::size_t f, std::span<const Scalar> v) const {
  require_factor(f);
  const Vector& unit = factors_[f].algebra().unit();
  if (v.size() != unit.size()) throw HopfError(ErrorCode::AmbientMismatch, "factor element of wrong size");
  const std::size_t u = unit_coordinate_[f];
  const Scalar lambda = v[u] / unit[u];
  FPElement out;
  add_term(out, {}, lambda);
  for (std::size_t c : letters_[f]) {
    add_term(out, {FPLetter{static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(c)}},
             v[c] - lambda * unit[c]);
  }
  return out;
}

FPElement TruncatedFreeProduct::basis_element(std::size_t f, std::size_t index) const {
  require_factor(f);
  return embed(f, unit_vector(field_, factors_[f].dim(), index));
}

bool TruncatedFreeProduct::is_reduced(const FPWord& w) const {
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t].factor >= factors_.size() || w[t].index == unit_coordinate_[w[t].factor] ||
        w[t].index >= factors_[w[t].factor].dim()) {
      return false;
    }
    if (t > 0 && w[t].factor == w[t - 1].factor) return false;
  }
  return true;
}

// Adds coeff * (a[0..a_len) * b[b_start..)) to out.
void TruncatedFreeProduct::multiply_words(const FPWord& a, std::size_t a_len, const FPWord& b,
                                          std::size_t b_start, const Scalar& coeff,
                                          FPElement& out) const {
  auto concat = [&](std::size_t left_len, const FPLetter* middle, std::size_t right_start) {
    FPWord w(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(left_len));
    if (middle) w.push_back(*middle);
    w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(right_start), b.end());
    return w;
  };
  if (a_len == 0 || b_start == b.size() || a[a_len - 1].factor != b[b_start].factor) {
    add_term(out, concat(a_len, nullptr, b_start), coeff);
    return;
  }
  const std::size_t f = b[b_start].factor;
  const Algebra& alg = factors_[f].algebra();
  const SparseVector& p = alg.product(a[a_len - 1].index, b[b_start].index);
  const Vector& unit = alg.unit();
  const std::size_t u = unit_coordinate_[f];
  Scalar lambda(field_);
  for (const auto& [k, v] : p) {
    if (k == u) lambda = v / unit[u];
  }
  Vector rest = to_dense(p, field_, alg.dim());
  if (!lambda.is_zero()) {
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= lambda * unit[c];
  }
  for (std::size_t c : letters_[f]) {
    if (rest[c].is_zero()) continue;
    const FPLetter mid{static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(c)};
    add_term(out, concat(a_len - 1, &mid, b_start + 1), coeff * rest[c]);
  }
  if (!lambda.is_zero()) multiply_words(a, a_len - 1, b, b_start + 1, coeff * lambda, out);
}

FPElement TruncatedFreeProduct::multiply_unbounded(const FPElement& a, const FPElement& b) const {
  FPElement out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) multiply_words(wa, wa.size(), wb, 0, ca * cb, out);
  }
  return out;
}

void TruncatedFreeProduct::check_bound(const FPElement& x) const {
  if (support_length(x) > bound_) {
    throw HopfError(ErrorCode::TruncationOverflow,
                    "result has a word of length " + std::to_string(support_length(x)) +
                        " beyond the truncation bound " + std::to_string(bound_));
  }
}

FPElement TruncatedFreeProduct::multiply(const FPElement& a, const FPElement& b) const {
  FPElement out = multiply_unbounded(a, b);
  check_bound(out);
  return out;
}

std::size_t TruncatedFreeProduct::basis_size() const {
  // ending[f] = number of reduced words of the current length ending in factor f
  const std::size_t m = factors_.size();
  std::vector<std::size_t> ending(m, 0);
  std::size_t total = 1;
  for (std::size_t len = 1; len <= bound_; ++len) {
    std::vector<std::size_t> next(m, 0);
    std::size_t all = 0;
    for (std::size_t f = 0; f < m; ++f) all += ending[f];
    for (std::size_t f = 0; f < m; ++f) {
      next[f] = letters_[f].size() * (len == 1 ? 1 : all - ending[f]);
      total += next[f];
    }
    ending = std::move(next);
  }
  return total;
}

std::vector<FPWord> TruncatedFreeProduct::basis(std::size_t cap) const {
  if (basis_size() > cap) {
    throw HopfError(ErrorCode::ResourceCap, "truncated free product basis of " +
                                                std::to_string(basis_size()) + " words exceeds the cap");
  }
  std::vector<FPWord> out{FPWord{}};
  std::vector<FPWord> layer{FPWord{}};
  for (std::size_t len = 1; len <= bound_; ++len) {
    std::vector<FPWord> next;
    for (const auto& w : layer) {
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (!w.empty() && w.back().factor == f) continue;
        for (std::size_t c : letters_[f]) {
          FPWord v = w;
          v.push_back(FPLetter{static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(c)});
          next.push_back(std::move(v));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Vector TruncatedFreeProduct::coordinates(const FPElement& x, const std::vector<FPWord>& basis) const {
  Vector out = zero_vector(field_, basis.size());
  for (const auto& [w, c] : x) {
    auto it = std::lower_bound(basis.begin(), basis.end(), w, ShortLex{});
    if (it == basis.end() || *it != w) {
      throw HopfError(ErrorCode::InvalidArgument, "word " + format(w) + " is not in the basis");
    }
    out[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return out;
}

std::string TruncatedFreeProduct::format(const FPWord& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    out << (t ? " " : "") << w[t].factor << ":e" << w[t].index;
  }
  return out.str();
}

namespace {

void expand(const std::vector<FPElement>& legs, std::size_t t, std::vector<FPWord>& key,
            const Scalar& coeff, FPTensor& out) {
  if (t == legs.size()) {
    add_term(out, key, coeff);
    return;
  }
  for (const auto& [w, v] : legs[t]) {
    key.push_back(w);
    expand(legs, t + 1, key, coeff * v, out);
    key.pop_back();
  }
}

}  // namespace

FPTensor tensor_of(const std::vector<FPElement>& legs) {
  FPTensor out;
  if (legs.empty() || legs[0].empty()) return out;
  std::vector<FPWord> key;
  expand(legs, 0, key, Scalar(legs[0].begin()->second.field(), 1), out);
  return out;
}

FPTensor multiply_tensors(const std::vector<LegTarget>& legs, const FPTensor& a, const FPTensor& b) {
  FPTensor out;
  std::vector<FPElement> products(legs.size());
  std::vector<FPWord> key;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      bool zero = false;
      for (std::size_t t = 0; t < legs.size() && !zero; ++t) {
        const FPElement x{{ka[t], Scalar(ca.field(), 1)}};
        const FPElement y{{kb[t], Scalar(ca.field(), 1)}};
        products[t] = legs[t].opposite ? legs[t].product->multiply_unbounded(y, x)
                                       : legs[t].product->multiply_unbounded(x, y);
        zero = products[t].empty();
      }
      if (zero) continue;
      key.clear();
      expand(products, 0, key, ca * cb, out);
    }
  }
  return out;
}

FPTensor apply_letter_map(const std::vector<LegTarget>& legs, const LetterImage& image,
                          const FPElement& x) {
  std::map<FPLetter, FPTensor> cache;
  FPTensor out;
  for (const auto& [w, c] : x) {
    FPTensor acc;
    {
      std::vector<FPWord> empty_key(legs.size());
      acc.emplace(std::move(empty_key), c);
    }
    for (const auto& letter : w) {
      auto it = cache.find(letter);
      if (it == cache.end()) it = cache.emplace(letter, image(letter)).first;
      acc = multiply_tensors(legs, acc, it->second);
      if (acc.empty()) break;
    }
    for (const auto& [k, v] : acc) add_term(out, k, v);
  }
  for (const auto& [k, v] : out) {
    for (std::size_t t = 0; t < legs.size(); ++t) {
      if (k[t].size() > legs[t].product->bound()) {
        throw HopfError(ErrorCode::TruncationOverflow,
                        "leg " + std::to_string(t) + " reaches length " + std::to_string(k[t].size()) +
                            " beyond its bound " + std::to_string(legs[t].product->bound()));
      }
    }
  }
  return out;
}

namespace {

const HopfAlgebra& hopf_factor(const TruncatedFreeProduct& fp, std::size_t f) {
  if (!fp.factor(f).is_hopf()) {
    throw HopfError(ErrorCode::InvalidArgument, "free product factor " + std::to_string(f) +
                                                    " carries no Hopf structure");
  }
  return fp.factor(f).hopf();
}

}  // namespace

FPTensor free_coproduct(const TruncatedFreeProduct& fp, const FPElement& x) {
  const std::vector<LegTarget> legs{{&fp, false}, {&fp, false}};
  return apply_letter_map(legs, [&](const FPLetter& l) {
    const HopfAlgebra& h = hopf_factor(fp, l.factor);
    const std::size_t n = h.dim();
    FPTensor out;
    for (const auto& [idx, c] : h.coproduct(l.index)) {
      const FPTensor t = tensor_of({fp.basis_element(l.factor, idx / n),
                                    fp.basis_element(l.factor, idx % n)});
      for (const auto& [k, v] : t) add_term(out, k, c * v);
    }
    return out;
  }, x);
}

Scalar free_counit(const TruncatedFreeProduct& fp, const FPElement& x) {
  const FPTensor t = apply_letter_map({}, [&](const FPLetter& l) {
    return FPTensor{{std::vector<FPWord>{}, hopf_factor(fp, l.factor).counit()[l.index]}};
  }, x);
  return t.empty() ? Scalar(fp.field()) : t.begin()->second;
}

FPElement free_antipode(const TruncatedFreeProduct& fp, const FPElement& x) {
  const std::vector<LegTarget> legs{{&fp, true}};
  const FPTensor t = apply_letter_map(legs, [&](const FPLetter& l) {
    const HopfAlgebra& h = hopf_factor(fp, l.factor);
    return tensor_of({fp.embed(l.factor, h.antipode().column(l.index))});
  }, x);
  FPElement out;
  for (const auto& [k, v] : t) add_term(out, k[0], v);
  return out;
}

FPElement multiply_legs(const TruncatedFreeProduct& fp, const FPTensor& t, bool twist_left,
                        bool twist_right) {
  FPElement out;
  for (const auto& [k, c] : t) {
    FPElement left{{k.at(0), Scalar(fp.field(), 1)}};
    FPElement right{{k.at(1), Scalar(fp.field(), 1)}};
    if (twist_left) left = free_antipode(fp, left);
    if (twist_right) right = free_antipode(fp, right);
    for (const auto& [w, v] : fp.multiply_unbounded(left, right)) add_term(out, w, c * v);
  }
  return out;
}

FPElement random_element(const TruncatedFreeProduct& fp, std::size_t max_len, std::size_t terms,
                         std::mt19937_64& rng, bool augmented) {
  if (max_len == 0) throw HopfError(ErrorCode::InvalidArgument, "random elements need max_len >= 1");
  const std::size_t m = fp.factor_count();
  for (;;) {
    FPElement x;
    for (std::size_t i = 0; i < terms; ++i) {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
      FPWord w;
      std::size_t prev = m;
      while (w.size() < len) {
        std::size_t f = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
        if (f == prev || fp.letters(f).empty()) {
          bool other = false;
          for (std::size_t g = 0; g < m; ++g) other = other || (g != prev && !fp.letters(g).empty());
          if (!other) break;
          continue;
        }
        const auto& letters = fp.letters(f);
        const std::size_t c = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
        w.push_back(FPLetter{static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(c)});
        prev = f;
      }
      long coeff = 0;
      while (coeff == 0) coeff = std::uniform_int_distribution<long>(-3, 3)(rng);
      add_term(x, w, Scalar(fp.field(), coeff));
    }
    if (augmented) x = x - scaled(fp.one(), free_counit(fp, x));
    if (!x.empty()) return x;
  }
}

}  // namespace hopfimage
