#include "hopfimage/io.hpp"

#include <fstream>

#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"

namespace hopfimage {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw HopfError(ErrorCode::ParseError, (where.empty() ? "/" : where) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parse_error(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array");
  if (j.size() != size) {
    parse_error(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  }
  return j;
}

Vector vector_from_json(FieldSpec field, const Json& j, std::size_t size, const std::string& where) {
  array_of(j, size, where);
  Vector out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    out.push_back(scalar_from_json(field, j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

Matrix matrix_from_json(FieldSpec field, const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  array_of(j, rows, where);
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(field, j[r], cols, where + "/" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

}  // namespace

Json to_json(FieldSpec field) {
  Json j;
  if (field.is_prime_field()) {
    j["kind"] = "Fp";
    j["p"] = field.p;
  } else {
    j["kind"] = "Q";
  }
  return j;
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(std::span<const Scalar> v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json j;
  j["field"] = to_json(a.field());
  j["dim"] = n;
  j["unit"] = to_json(a.unit());
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(to_json(to_dense(a.product(i, k), a.field(), n)));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  return j;
}

Json to_json(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Json j = to_json(h.algebra());
  Json comult = Json::array();
  for (std::size_t c = 0; c < n; ++c) comult.push_back(to_json(to_dense(h.coproduct(c), h.field(), n * n)));
  j["comult"] = std::move(comult);
  j["counit"] = to_json(h.counit());
  j["antipode"] = to_json(h.antipode());
  return j;
}

namespace {

Json endpoint_json(const Endpoint& e) {
  return e.is_hopf() ? to_json(e.hopf()) : to_json(e.algebra());
}

}  // namespace

Json to_json(const AlgebraMorphism& f) {
  Json j;
  j["source"] = endpoint_json(f.source());
  j["target"] = endpoint_json(f.target());
  j["matrix"] = to_json(f.matrix());
  j["hopf"] = f.is_hopf();
  return j;
}

Json to_json(const MorphismFamily& fam) {
  Json j;
  j["domain"] = to_json(fam.domain());
  Json maps = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Json m;
    m["label"] = fam.label(i);
    m["source"] = "domain";
    m["target"] = endpoint_json(fam.map(i).target());
    m["matrix"] = to_json(fam.map(i).matrix());
    m["hopf"] = fam.map(i).is_hopf();
    maps.push_back(std::move(m));
  }
  j["maps"] = std::move(maps);
  return j;
}

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = to_json(s.basis());
  return j;
}

Json to_json(const AxiomReport& report) {
  Json j = Json::array();
  for (const auto& r : report.results) {
    Json e;
    e["axiom"] = r.name;
    e["passed"] = r.passed;
    if (r.informational) e["informational"] = true;
    if (!r.passed) {
      e["witness"] = r.witness;
      if (!r.detail.empty()) e["detail"] = r.detail;
    }
    j.push_back(std::move(e));
  }
  return j;
}

Json to_json(const HopfIdealCertificate& cert) {
  Json j;
  j["subspace"] = to_json(cert.subspace);
  j["contained_in_ker_eps"] = cert.contained_in_ker_eps;
  j["two_sided_ideal"] = cert.two_sided_ideal;
  j["coideal"] = cert.coideal;
  j["antipode_stable"] = cert.antipode_stable;
  j["iterations"] = cert.iterations;
  return j;
}

Json to_json(const TruncatedFreeProduct& fp, const FPElement& x) {
  Json j = Json::array();
  for (const auto& [w, c] : x) j.push_back(Json::array({fp.format(w), c.to_string()}));
  return j;
}

Json to_json(const std::vector<const TruncatedFreeProduct*>& legs, const FPTensor& x) {
  Json j = Json::array();
  for (const auto& [key, c] : x) {
    Json words = Json::array();
    for (std::size_t t = 0; t < key.size(); ++t) words.push_back(legs.at(t)->format(key[t]));
    j.push_back(Json::array({std::move(words), c.to_string()}));
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  const std::string where = "/field";
  const Json& kind = member(j, "kind", where);
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    const std::size_t p = count_from_json(member(j, "p", where), where + "/p");
    try {
      return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
    } catch (const HopfError& e) {
      parse_error(where + "/p", e.what());
    }
  }
  parse_error(where + "/kind", "expected \"Q\" or \"Fp\"");
}

Scalar scalar_from_json(FieldSpec field, const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(field, static_cast<long>(j.get<long long>()));
  } catch (const HopfError& e) {
    parse_error(where, e.what());
  }
  parse_error(where, "expected a scalar string such as \"-3/2\" or an integer");
}

Algebra algebra_from_json(const Json& j, const LoadOptions& opts) {
  const FieldSpec field = field_from_json(member(j, "field", ""));
  const std::size_t n = count_from_json(member(j, "dim", ""), "/dim");
  const Vector unit = vector_from_json(field, member(j, "unit", ""), n, "/unit");
  const Json& mult = array_of(member(j, "mult", ""), n, "/mult");
  std::vector<SparseVector> products(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string row_where = "/mult/" + std::to_string(a);
    array_of(mult[a], n, row_where);
    for (std::size_t b = 0; b < n; ++b) {
      products[a * n + b] =
          to_sparse(vector_from_json(field, mult[a][b], n, row_where + "/" + std::to_string(b)));
    }
  }
  Algebra alg(field, n, std::move(products), unit);
  if (opts.verify) require_valid(check_algebra(alg, CheckMode::StopAtFirstFailure), "algebra");
  return alg;
}

HopfAlgebra hopf_from_json(const Json& j, const LoadOptions& opts) {
  Algebra alg = algebra_from_json(j, LoadOptions{false});
  const FieldSpec field = alg.field();
  const std::size_t n = alg.dim();
  const Json& comult = array_of(member(j, "comult", ""), n, "/comult");
  std::vector<SparseVector> coproducts;
  for (std::size_t c = 0; c < n; ++c) {
    coproducts.push_back(to_sparse(vector_from_json(field, comult[c], n * n, "/comult/" + std::to_string(c))));
  }
  Vector counit = vector_from_json(field, member(j, "counit", ""), n, "/counit");
  Matrix antipode = matrix_from_json(field, member(j, "antipode", ""), n, n, "/antipode");
  HopfAlgebra h(std::move(alg), std::move(coproducts), std::move(counit), std::move(antipode));
  if (opts.verify) require_valid(check_hopf(h, CheckMode::StopAtFirstFailure), "Hopf algebra");
  return h;
}

Endpoint endpoint_from_json(const Json& j, const LoadOptions& opts) {
  if (j.is_object() && j.contains("comult")) return share(hopf_from_json(j, opts));
  return share(algebra_from_json(j, opts));
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw HopfError(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw HopfError(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

namespace {

template <typename T, typename Builtin, typename FromJson>
T resolve(const Json& ref, const LoadOptions& opts, Builtin builtin, FromJson from_json) {
  if (ref.is_string()) {
    const std::string name = ref.get<std::string>();
    if (is_builtin_name(name)) return builtin(name);
    std::error_code ec;
    if (!std::filesystem::exists(name, ec)) {
      throw HopfError(ErrorCode::ParseError, "'" + name + "' is neither a builtin nor a file");
    }
    try {
      return from_json(load_json_file(name), opts);
    } catch (const HopfError& e) {
      throw HopfError(e.code(), name + ": " + e.what());
    }
  }
  return from_json(ref, opts);
}

}  // namespace

std::shared_ptr<const HopfAlgebra> resolve_hopf(const Json& ref, const LoadOptions& opts) {
  return resolve<std::shared_ptr<const HopfAlgebra>>(
      ref, opts, [](const std::string& n) { return builtin_hopf(n); },
      [](const Json& j, const LoadOptions& o) { return share(hopf_from_json(j, o)); });
}

Endpoint resolve_endpoint(const Json& ref, const LoadOptions& opts) {
  return resolve<Endpoint>(
      ref, opts, [](const std::string& n) -> Endpoint { return builtin_hopf(n); },
      [](const Json& j, const LoadOptions& o) { return endpoint_from_json(j, o); });
}

namespace {

AlgebraMorphism morphism_on(const Json& j, const LoadOptions& opts,
                            const std::shared_ptr<const HopfAlgebra>* domain) {
  if (!j.is_object()) parse_error("", "expected a morphism object");
  const Json& src = member(j, "source", "");
  Endpoint source = (domain && (src == "domain" || (j.contains("source") && src.is_null())))
                        ? Endpoint(*domain)
                        : resolve_endpoint(src, opts);
  if (domain && !(src == "domain") && source.algebra() == (*domain)->algebra()) source = Endpoint(*domain);
  Endpoint target = resolve_endpoint(member(j, "target", ""), opts);
  const Matrix m = matrix_from_json(source.field(), member(j, "matrix", ""), target.dim(), source.dim(),
                                    "/matrix");
  bool hopf = false;
  if (j.contains("hopf")) {
    if (!j["hopf"].is_boolean()) parse_error("/hopf", "expected a boolean");
    hopf = j["hopf"].get<bool>();
  }
  AlgebraMorphism f(std::move(source), std::move(target), m, hopf);
  if (opts.verify) require_valid(check_morphism(f, CheckMode::StopAtFirstFailure), "morphism");
  return f;
}

}  // namespace

AlgebraMorphism morphism_from_json(const Json& j, const LoadOptions& opts) {
  return morphism_on(j, opts, nullptr);
}

AlgebraMorphism resolve_morphism(const Json& ref, const LoadOptions& opts) {
  return resolve<AlgebraMorphism>(
      ref, opts, [](const std::string& n) { return builtin_morphism(n); },
      [](const Json& j, const LoadOptions& o) { return morphism_from_json(j, o); });
}

MorphismFamily family_from_json(const Json& j, const LoadOptions& opts) {
  auto domain = resolve_hopf(member(j, "domain", ""), opts);
  const Json& maps = member(j, "maps", "");
  if (!maps.is_array()) parse_error("/maps", "expected an array");
  std::vector<AlgebraMorphism> members;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string where = "/maps/" + std::to_string(i);
    try {
      if (maps[i].is_string()) {
        AlgebraMorphism f = resolve_morphism(maps[i], opts);
        if (!(f.source().algebra() == domain->algebra())) {
          parse_error(where, "morphism is not defined on the family domain");
        }
        members.emplace_back(domain, f.target(), f.matrix(), f.is_hopf());
        labels.push_back(maps[i].get<std::string>());
      } else {
        members.push_back(morphism_on(maps[i], opts, &domain));
        labels.push_back(maps[i].contains("label") && maps[i]["label"].is_string()
                             ? maps[i]["label"].get<std::string>()
                             : "pi" + std::to_string(i));
      }
    } catch (const HopfError& e) {
      if (e.code() == ErrorCode::ParseError && std::string(e.what()).rfind(where, 0) == 0) throw;
      throw HopfError(e.code(), where + ": " + e.what());
    }
  }
  return MorphismFamily(domain, std::move(members), std::move(labels));
}

MorphismFamily resolve_family(const Json& ref, const LoadOptions& opts) {
  return resolve<MorphismFamily>(
      ref, opts, [](const std::string& n) { return builtin_family(n); },
      [](const Json& j, const LoadOptions& o) { return family_from_json(j, o); });
}

Json reference_from_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{')) {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw HopfError(ErrorCode::ParseError, std::string("inline JSON: ") + e.what());
    }
  }
  return arg;
}

}  // namespace hopfimage
