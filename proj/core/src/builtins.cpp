#include "hopfimage/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hopfimage/error.hpp"
#include "hopfimage/inner_faithful.hpp"

namespace hopfimage {

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = mult[e][g] == g && mult[g][e] == g;
    if (ok) return e;
  }
  throw HopfError(ErrorCode::NotAGroup, "group table has no identity element");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h) {
    if (mult[g][h] == e && mult[h][g] == e) return h;
  }
  throw HopfError(ErrorCode::NotAGroup, "element " + std::to_string(g) + " has no inverse");
}

void validate_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0) throw HopfError(ErrorCode::NotAGroup, "empty group table");
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mult[a].size() != n) {
      throw HopfError(ErrorCode::NotAGroup, "row " + std::to_string(a) + " has the wrong length");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mult[a][b] >= n) {
        throw HopfError(ErrorCode::NotAGroup, "entry (" + std::to_string(a) + ", " +
                                                  std::to_string(b) + ") is out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]]) {
          throw HopfError(ErrorCode::NotAGroup, "associativity fails at (" + std::to_string(a) +
                                                    ", " + std::to_string(b) + ", " +
                                                    std::to_string(c) + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) g.inverse(a);
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw HopfError(ErrorCode::InvalidArgument, "cyclic group of order 0");
  GroupTable g;
  g.mult.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    g.names.push_back(a == 0 ? "1" : a == 1 ? "t" : "t^" + std::to_string(a));
  }
  return g;
}

GroupTable klein_four() {
  GroupTable g;
  g.mult.assign(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) g.mult[a][b] = a ^ b;
  }
  g.names = {"1", "a", "b", "ab"};
  return g;
}

namespace {

const std::vector<std::vector<std::size_t>>& s3_elements() {
  static const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return perms;
}

}  // namespace

std::vector<std::size_t> s3_permutation(std::size_t g) { return s3_elements().at(g); }

GroupTable symmetric_group_s3() {
  const auto& perms = s3_elements();
  GroupTable g;
  g.mult.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> ab(3);
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      g.mult[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  }
  g.names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  return g;
}

HopfAlgebra group_algebra(FieldSpec field, const GroupTable& table) {
  validate_group(table);
  const std::size_t n = table.order();
  // relabel so that the identity is element 0
  std::vector<std::size_t> to_new(n), to_old(n);
  std::iota(to_new.begin(), to_new.end(), 0);
  std::swap(to_new[0], to_new[table.identity()]);
  for (std::size_t g = 0; g < n; ++g) to_old[to_new[g]] = g;

  const Scalar one(field, 1);
  std::vector<SparseVector> products(n * n);
  std::vector<SparseVector> coproducts(n);
  Matrix antipode(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      products[a * n + b] = {{to_new[table.mult[to_old[a]][to_old[b]]], one}};
    }
    coproducts[a] = {{a * n + a, one}};
    antipode(to_new[table.inverse(to_old[a])], a) = one;
  }
  Algebra alg(field, n, std::move(products), unit_vector(field, n, 0));
  return HopfAlgebra(std::move(alg), std::move(coproducts), Vector(n, one), std::move(antipode));
}

HopfAlgebra function_algebra(FieldSpec field, const GroupTable& g) {
  return dual_hopf(group_algebra(field, g));
}

namespace {

Scalar power(const Scalar& q, std::size_t k) {
  Scalar out(q.field(), 1);
  for (std::size_t i = 0; i < k; ++i) out *= q;
  return out;
}

}  // namespace

HopfAlgebra taft(FieldSpec field, std::size_t n, const Scalar& q) {
  if (n < 2) throw HopfError(ErrorCode::InvalidArgument, "Taft algebras need n >= 2");
  if (!(q.field() == field)) throw HopfError(ErrorCode::FieldMismatch, "q lies in another field");
  if (!power(q, n).is_one()) {
    throw HopfError(ErrorCode::NotPrimitiveRoot, "q = " + q.to_string() + " does not satisfy q^" +
                                                     std::to_string(n) + " = 1 in " + field.to_string());
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (power(q, k).is_one()) {
      throw HopfError(ErrorCode::NotPrimitiveRoot,
                      q.to_string() + " has order " + std::to_string(k) + ", not " +
                          std::to_string(n) + ", in " + field.to_string());
    }
  }
  const std::size_t dim = n * n;
  auto idx = [n](std::size_t a, std::size_t b) { return (a % n) * n + b; };
  std::vector<SparseVector> products(dim * dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (b + d >= n) continue;
          products[idx(a, b) * dim + idx(c, d)] = {{idx(a + c, b + d), power(q, b * c)}};
        }
      }
    }
  }
  Algebra alg(field, dim, std::move(products), unit_vector(field, dim, 0));
  const Algebra square = tensor_algebra(alg, alg);

  const Scalar one(field, 1);
  const Vector g = unit_vector(field, dim, idx(1, 0));
  const Vector x = unit_vector(field, dim, idx(0, 1));
  const Vector unit = alg.unit();
  const Vector delta_g = kron(g, g);
  Vector delta_x = kron(x, unit);
  {
    const Vector gx = kron(g, x);
    for (std::size_t i = 0; i < delta_x.size(); ++i) delta_x[i] += gx[i];
  }
  const Vector g_inv = unit_vector(field, dim, idx(n - 1, 0));
  Vector s_x = alg.multiply(g_inv, x);
  for (auto& v : s_x) v = -v;

  std::vector<SparseVector> coproducts(dim);
  Matrix antipode(field, dim, dim);
  Vector counit = zero_vector(field, dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector d = kron(unit, unit);
      Vector s = unit;
      for (std::size_t i = 0; i < a; ++i) {
        d = square.multiply(d, delta_g);
        s = alg.multiply(g_inv, s);
      }
      for (std::size_t i = 0; i < b; ++i) {
        d = square.multiply(d, delta_x);
        s = alg.multiply(s_x, s);
      }
      coproducts[idx(a, b)] = to_sparse(d);
      for (std::size_t r = 0; r < dim; ++r) antipode(r, idx(a, b)) = s[r];
      if (b == 0) counit[idx(a, b)] = one;
    }
  }
  return HopfAlgebra(std::move(alg), std::move(coproducts), std::move(counit), std::move(antipode));
}

HopfAlgebra sweedler(FieldSpec field) { return taft(field, 2, Scalar(field, -1)); }

// ---------------------------------------------------------------------------
// Name resolution

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw HopfError(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// "tensor(a,b)" -> {a, b}, splitting at the top-level comma.
std::optional<std::pair<std::string_view, std::string_view>> tensor_args(std::string_view s) {
  if (!starts_with(s, "tensor(") || s.back() != ')') return std::nullopt;
  const std::string_view inner = s.substr(7, s.size() - 8);
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return std::make_pair(inner.substr(0, i), inner.substr(i + 1));
  }
  throw HopfError(ErrorCode::InvalidArgument, "tensor(...) needs two arguments: " + std::string(s));
}

// Splits "name@F7" into the name and F_7.
std::pair<std::string_view, FieldSpec> field_suffix(std::string_view s) {
  const auto at = s.rfind('@');
  if (at == std::string_view::npos) return {s, FieldSpec::rationals()};
  const std::string_view f = s.substr(at + 1);
  if (f == "Q") return {s.substr(0, at), FieldSpec::rationals()};
  if (f.size() < 2 || f[0] != 'F') {
    throw HopfError(ErrorCode::InvalidArgument, "bad field suffix '" + std::string(f) + "'");
  }
  return {s.substr(0, at),
          FieldSpec::prime_field(static_cast<std::uint32_t>(parse_count(f.substr(1), "prime")))};
}

[[noreturn]] void unknown(std::string_view kind, std::string_view name) {
  throw HopfError(ErrorCode::InvalidArgument, "unknown builtin " + std::string(kind) + " '" +
                                                  std::string(name) + "'");
}

}  // namespace

std::shared_ptr<const HopfAlgebra> builtin_hopf(std::string_view name) {
  if (auto args = tensor_args(name)) {
    const auto a = builtin_hopf(args->first);
    const auto b = builtin_hopf(args->second);
    if (!(a->field() == b->field())) {
      throw HopfError(ErrorCode::FieldMismatch, "tensor of Hopf algebras over different fields");
    }
    return share(tensor_hopf(*a, *b));
  }
  if (starts_with(name, "dual:")) return share(dual_hopf(*builtin_hopf(name.substr(5))));
  if (starts_with(name, "taft:")) {
    const auto parts = split(name.substr(5), ':');
    if (parts.size() != 2 && parts.size() != 3) unknown("Hopf algebra", name);
    const FieldSpec field =
        parts.size() == 3
            ? FieldSpec::prime_field(static_cast<std::uint32_t>(parse_count(parts[2], "prime")))
            : FieldSpec::rationals();
    return share(taft(field, parse_count(parts[0], "Taft order"), Scalar::parse(field, parts[1])));
  }
  const auto [base, field] = field_suffix(name);
  if (base == "sweedler") return share(sweedler(field));
  if (base == "group:Z2xZ2") return share(group_algebra(field, klein_four()));
  if (base == "group:S3") return share(group_algebra(field, symmetric_group_s3()));
  if (starts_with(base, "group:Z")) {
    return share(group_algebra(field, cyclic_group(parse_count(base.substr(7), "group order"))));
  }
  if (base == "ground") return share(HopfAlgebra::ground_field(field));
  unknown("Hopf algebra", name);
}

namespace {

using Domain = std::shared_ptr<const HopfAlgebra>;

AlgebraMorphism character(const Domain& h, const std::vector<long>& values) {
  const FieldSpec f = h->field();
  Matrix m(f, 1, h->dim());
  for (std::size_t c = 0; c < values.size(); ++c) m(0, c) = Scalar(f, values[c]);
  return AlgebraMorphism(h, share(Algebra::ground_field(f)), std::move(m));
}

// Representation given by one d x d integer matrix per basis element.
AlgebraMorphism representation(const Domain& h, std::size_t d,
                               const std::vector<std::vector<std::vector<long>>>& images) {
  const FieldSpec f = h->field();
  Matrix m(f, d * d, h->dim());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) m(r * d + s, c) = Scalar(f, images[c][r][s]);
    }
  }
  return AlgebraMorphism(h, share(Algebra::matrix_algebra(f, d)), std::move(m));
}

// Hopf map sending basis element c to basis element targets[c] (or 0 for npos).
AlgebraMorphism basis_hopf_map(const Domain& h, const Domain& target,
                               const std::vector<std::size_t>& targets) {
  const FieldSpec f = h->field();
  Matrix m(f, target->dim(), h->dim());
  for (std::size_t c = 0; c < targets.size(); ++c) {
    if (targets[c] != static_cast<std::size_t>(-1)) m(targets[c], c) = Scalar(f, 1);
  }
  return AlgebraMorphism(h, target, std::move(m), true);
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

long s3_sign(std::size_t g) { return g == 1 || g == 2 || g == 5 ? -1 : 1; }

// The 2-dim irreducible representation of S3 on the sum-zero plane, basis
// e0 - e1, e1 - e2; w = (w0, w1, w2) has coordinates (w0, -w2).
std::vector<std::vector<std::vector<long>>> s3_standard_rep() {
  std::vector<std::vector<std::vector<long>>> out;
  for (std::size_t g = 0; g < 6; ++g) {
    const auto p = s3_permutation(g);
    std::vector<std::vector<long>> m(2, std::vector<long>(2));
    const std::vector<std::vector<long>> basis = {{1, -1, 0}, {0, 1, -1}};
    for (std::size_t col = 0; col < 2; ++col) {
      std::vector<long> w(3, 0);
      for (std::size_t i = 0; i < 3; ++i) w[p[i]] += basis[col][i];
      m[0][col] = w[0];
      m[1][col] = -w[2];
    }
    out.push_back(m);
  }
  return out;
}

struct MorphismDef {
  std::string name;
  std::string domain;
  std::function<AlgebraMorphism(const Domain&)> build;
};

const std::vector<MorphismDef>& morphism_defs() {
  static const std::vector<MorphismDef> defs = {
      {"chi1", "group:Z2xZ2", [](const Domain& h) { return character(h, {1, -1, 1, -1}); }},
      {"chi2", "group:Z2xZ2", [](const Domain& h) { return character(h, {1, 1, -1, -1}); }},
      {"q1", "group:Z2xZ2",
       [](const Domain& h) { return basis_hopf_map(h, builtin_hopf("group:Z2"), {0, 1, 0, 1}); }},
      {"q2", "group:Z2xZ2",
       [](const Domain& h) { return basis_hopf_map(h, builtin_hopf("group:Z2"), {0, 0, 1, 1}); }},
      {"trivial", "group:S3", [](const Domain& h) { return character(h, {1, 1, 1, 1, 1, 1}); }},
      {"sign", "group:S3",
       [](const Domain& h) {
         std::vector<long> v;
         for (std::size_t g = 0; g < 6; ++g) v.push_back(s3_sign(g));
         return character(h, v);
       }},
      {"rho", "group:S3", [](const Domain& h) { return representation(h, 2, s3_standard_rep()); }},
      {"sign-quot", "group:S3",
       [](const Domain& h) {
         std::vector<std::size_t> t;
         for (std::size_t g = 0; g < 6; ++g) t.push_back(s3_sign(g) == 1 ? 0 : 1);
         return basis_hopf_map(h, builtin_hopf("group:Z2"), t);
       }},
      {"sweedler-rep", "sweedler",
       [](const Domain& h) {
         return representation(h, 2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}, {{1, 0}, {0, -1}},
                                      {{0, 1}, {0, 0}}});
       }},
      {"sweedler-quot", "sweedler",
       [](const Domain& h) {
         return basis_hopf_map(h, builtin_hopf("group:Z2"), {0, kNone, 1, kNone});
       }},
      {"res-Z2", "dual:group:S3",
       [](const Domain& h) {
         return basis_hopf_map(h, builtin_hopf("dual:group:Z2"), {0, kNone, 1, kNone, kNone, kNone});
       }},
      {"res-Z3", "dual:group:S3",
       [](const Domain& h) {
         return basis_hopf_map(h, builtin_hopf("dual:group:Z3"), {0, kNone, kNone, 1, 2, kNone});
       }},
  };
  return defs;
}

const MorphismDef& find_morphism(std::string_view name) {
  for (const auto& d : morphism_defs()) {
    if (d.name == name) return d;
  }
  unknown("morphism", "morph:" + std::string(name));
}

struct FamilyDef {
  std::string name;
  std::string domain;
  std::vector<std::string> members;
};

const std::vector<FamilyDef>& family_defs() {
  static const std::vector<FamilyDef> defs = {
      {"chi", "group:Z2xZ2", {"chi1", "chi2"}},
      {"chi1", "group:Z2xZ2", {"chi1"}},
      {"chi2", "group:Z2xZ2", {"chi2"}},
      {"quot-Z2xZ2", "group:Z2xZ2", {"q1", "q2"}},
      {"sign", "group:S3", {"sign"}},
      {"rho", "group:S3", {"rho"}},
      {"reps-S3", "group:S3", {"trivial", "sign", "rho"}},
      {"sign-quot", "group:S3", {"sign-quot"}},
      {"sweedler-rep", "sweedler", {"sweedler-rep"}},
      {"sweedler-quot", "sweedler", {"sweedler-quot"}},
      {"res-S3", "dual:group:S3", {"res-Z2", "res-Z3"}},
  };
  return defs;
}

}  // namespace

AlgebraMorphism builtin_morphism(std::string_view name) {
  if (!starts_with(name, "morph:")) unknown("morphism", name);
  const std::string_view rest = name.substr(6);
  if (starts_with(rest, "id:")) return identity_morphism(builtin_hopf(rest.substr(3)));
  if (starts_with(rest, "eps:")) return counit_morphism(builtin_hopf(rest.substr(4)));
  const MorphismDef& def = find_morphism(rest);
  return def.build(builtin_hopf(def.domain));
}

MorphismFamily builtin_family(std::string_view name) {
  if (!starts_with(name, "fam:")) unknown("family", name);
  const std::string_view rest = name.substr(4);
  if (auto args = tensor_args(rest)) {
    return tensor_family(builtin_family(args->first), builtin_family(args->second));
  }
  if (starts_with(rest, "id:")) {
    const auto h = builtin_hopf(rest.substr(3));
    return MorphismFamily(h, {identity_morphism(h)}, {"id"});
  }
  if (starts_with(rest, "eps:")) {
    const auto h = builtin_hopf(rest.substr(4));
    return MorphismFamily(h, {counit_morphism(h)}, {"eps"});
  }
  for (const auto& def : family_defs()) {
    if (def.name != rest) continue;
    const auto h = builtin_hopf(def.domain);
    std::vector<AlgebraMorphism> maps;
    for (const auto& m : def.members) maps.push_back(find_morphism(m).build(h));
    return MorphismFamily(h, std::move(maps), def.members);
  }
  unknown("family", name);
}

bool is_builtin_name(std::string_view name) {
  for (std::string_view prefix : {"group:", "sweedler", "taft:", "dual:", "tensor(", "ground", "morph:", "fam:"}) {
    if (starts_with(name, prefix)) return true;
  }
  return false;
}

std::vector<std::string> builtin_hopf_names() {
  return {"group:Z2", "group:Z2xZ2", "group:S3", "dual:group:S3", "sweedler", "taft:3:2:7"};
}

std::vector<std::string> builtin_morphism_names() {
  std::vector<std::string> out;
  for (const auto& d : morphism_defs()) out.push_back("morph:" + d.name);
  return out;
}

std::vector<std::string> builtin_family_names() {
  std::vector<std::string> out;
  for (const auto& d : family_defs()) out.push_back("fam:" + d.name);
  for (const auto& h : {"group:Z2", "group:Z2xZ2", "group:S3", "sweedler", "dual:group:S3"}) {
    out.push_back(std::string("fam:id:") + h);
    out.push_back(std::string("fam:eps:") + h);
  }
  return out;
}

}  // namespace hopfimage
