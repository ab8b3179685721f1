#include "hopfimage/jobs.hpp"

#include <chrono>
#include <random>

#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"
#include "hopfimage/free_maps.hpp"

namespace hopfimage {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TruncationOverflow:
    case ErrorCode::ResourceCap:
    case ErrorCode::BoundExceeded:
      return 3;
    default:
      return 2;
  }
}

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> commands = {
      "check-hopf", "hopf-image", "is-inner-faithful", "word-scan",
      "tensor-permanence", "free-permanence", "separate"};
  return commands;
}

namespace {

struct Outcome {
  int exit_code = 0;
  Json result;
};

void require_inputs(const JobSpec& job, std::size_t low, std::size_t high) {
  if (job.inputs.size() < low || job.inputs.size() > high) {
    throw HopfError(ErrorCode::InvalidArgument,
                    job.command + " takes " + std::to_string(low) +
                        (low == high ? "" : " to " + std::to_string(high)) + " input(s)");
  }
}

LoadOptions load_options(const JobSpec& job) { return LoadOptions{!job.skip_verify}; }

MorphismFamily load_family(const JobSpec& job, std::size_t i) {
  MorphismFamily fam = resolve_family(reference_from_argument(job.inputs.at(i)), load_options(job));
  if (!job.skip_verify) verify_family(fam);
  return fam;
}

Json word_json(const Word& w) { return format_word(w); }

Json scan_json(const std::vector<ScanEntry>& scan) {
  Json out = Json::array();
  for (const auto& e : scan) out.push_back(Json{{"length", e.length}, {"dim", e.dim}});
  return out;
}

Json verdict_json(const IFVerdict& v) {
  Json j;
  j["jointly_inner_faithful"] = v.jointly_inner_faithful;
  j["common_kernel_dim"] = v.common_kernel.dim();
  j["witness_dim"] = v.witness.subspace.dim();
  j["witness"] = to_json(v.witness);
  j["word_scan"] = scan_json(v.word_scan);
  j["stabilized_at"] = v.stabilized_at ? Json(*v.stabilized_at) : Json(nullptr);
  j["sandwich_holds"] = v.sandwich_holds;
  j["warn"] = v.warn;
  return j;
}

Outcome check_hopf_job(const JobSpec& job) {
  require_inputs(job, 1, 1);
  const Json ref = reference_from_argument(job.inputs[0]);
  const LoadOptions raw{false};
  Outcome out;
  AxiomReport report;
  std::string kind;
  auto is_kind = [&](const char* prefix, const char* key) {
    if (ref.is_string()) {
      const std::string s = ref.get<std::string>();
      if (s.rfind(prefix, 0) == 0) return true;
      if (is_builtin_name(s)) return false;
      const Json file = load_json_file(s);
      return file.is_object() && file.contains(key);
    }
    return ref.is_object() && ref.contains(key);
  };
  if (is_kind("fam:", "maps")) {
    kind = "family";
    const MorphismFamily fam = resolve_family(ref, raw);
    Json members = Json::array();
    bool passed = true;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const AxiomReport r = check_morphism(fam.map(i));
      passed = passed && r.all_passed();
      members.push_back(Json{{"label", fam.label(i)}, {"passed", r.all_passed()}, {"axioms", to_json(r)}});
    }
    const AxiomReport domain = check_hopf(fam.domain());
    passed = passed && domain.all_passed();
    out.result["kind"] = kind;
    out.result["passed"] = passed;
    out.result["domain_axioms"] = to_json(domain);
    out.result["members"] = std::move(members);
    out.exit_code = passed ? 0 : 1;
    return out;
  }
  if (is_kind("morph:", "matrix")) {
    kind = "morphism";
    report = check_morphism(resolve_morphism(ref, raw));
  } else {
    const Endpoint e = resolve_endpoint(ref, raw);
    kind = e.is_hopf() ? "hopf_algebra" : "algebra";
    report = e.is_hopf() ? check_hopf(e.hopf()) : check_algebra(e.algebra());
    out.result["dim"] = e.dim();
    out.result["field"] = e.field().to_string();
  }
  out.result["kind"] = kind;
  out.result["passed"] = report.all_passed();
  if (!report.all_passed()) out.result["first_failure"] = report.first_failure();
  out.result["axioms"] = to_json(report);
  out.exit_code = report.all_passed() ? 0 : 1;
  return out;
}

Outcome hopf_image_job(const JobSpec& job) {
  require_inputs(job, 1, 1);
  const MorphismFamily fam = load_family(job, 0);
  const HopfImage img = hopf_image(fam);
  Outcome out;
  out.result["domain_dim"] = fam.domain().dim();
  out.result["image_dim"] = img.image->dim();
  out.result["kernel"] = to_json(img.kernel);
  out.result["image"] = to_json(*img.image);
  out.result["image_passes_check_hopf"] = check_hopf(*img.image).all_passed();
  out.result["quotient"] = to_json(img.quotient.matrix());
  Json factored = Json::array();
  for (std::size_t i = 0; i < img.factored.size(); ++i) {
    factored.push_back(Json{{"label", img.factored.label(i)}, {"matrix", to_json(img.factored.map(i).matrix())}});
  }
  out.result["factored"] = std::move(factored);
  return out;
}

Outcome is_if_job(const JobSpec& job) {
  require_inputs(job, 1, 1);
  const MorphismFamily fam = load_family(job, 0);
  const IFVerdict v = decide_jointly_if(fam, job.scan_len, job.cap_entries);
  Outcome out;
  out.result = verdict_json(v);
  out.exit_code = v.jointly_inner_faithful ? 0 : 1;
  return out;
}

Outcome word_scan_job(const JobSpec& job) {
  require_inputs(job, 1, 1);
  const MorphismFamily fam = load_family(job, 0);
  const KernelChain chain = kernel_chain(fam, job.scan_len, job.cap_entries);
  Outcome out;
  Json dims = Json::array();
  for (std::size_t n = 0; n < chain.levels.size(); ++n) {
    dims.push_back(Json{{"length", n}, {"dim", chain.levels[n].dim()}});
  }
  out.result["scan"] = std::move(dims);
  out.result["stabilized"] = chain.stabilized_at.has_value();
  out.result["stabilized_at"] = chain.stabilized_at ? Json(*chain.stabilized_at) : Json(nullptr);
  out.result["words_evaluated"] = chain.words_evaluated;
  out.result["final_intersection"] = to_json(chain.levels.back());
  return out;
}

Outcome tensor_job(const JobSpec& job) {
  require_inputs(job, 2, 2);
  const MorphismFamily a = load_family(job, 0);
  const MorphismFamily b = load_family(job, 1);
  const IFVerdict va = decide_jointly_if(a, 0);
  const IFVerdict vb = decide_jointly_if(b, 0);
  const MorphismFamily t = tensor_family(a, b);
  const IFVerdict vt = decide_jointly_if(t, job.scan_len, job.cap_entries);
  Outcome out;
  out.result["left"] = Json{{"jointly_inner_faithful", va.jointly_inner_faithful},
                            {"witness_dim", va.witness.subspace.dim()}};
  out.result["right"] = Json{{"jointly_inner_faithful", vb.jointly_inner_faithful},
                             {"witness_dim", vb.witness.subspace.dim()}};
  out.result["hopf_families"] = a.hopf_family() && b.hopf_family();
  out.result["tensor"] = verdict_json(vt);
  out.exit_code = vt.jointly_inner_faithful ? 0 : 1;
  return out;
}

Outcome free_job(const JobSpec& job) {
  std::mt19937_64 rng(job.seed);
  Outcome out;
  Json samples = Json::array();
  std::size_t separated = 0;
  auto record = [&](const TruncatedFreeProduct& fp, const FPElement& x,
                    const std::optional<FreeSeparation>& sep) {
    Json s;
    s["x"] = to_json(fp, x);
    s["separated"] = sep.has_value();
    if (sep) {
      ++separated;
      s["word"] = word_json(sep->word);
      s["image_terms"] = sep->image.size();
      s["words_tried"] = sep->words_tried;
    }
    samples.push_back(std::move(s));
  };
  if (job.mode == "free") {
    require_inputs(job, 2, 2);
    const MorphismFamily a = load_family(job, 0);
    const MorphismFamily b = load_family(job, 1);
    const TruncatedFreeProduct hk({a.domain_ptr(), b.domain_ptr()}, job.trunc);
    for (std::size_t i = 0; i < job.samples; ++i) {
      const FPElement x = random_element(hk, job.support, 3, rng);
      record(hk, x, free_separation_test(a, b, hk, x, job.word_bound));
    }
  } else if (job.mode == "z2") {
    require_inputs(job, 1, 1);
    const Z2Extension ext(load_family(job, 0), job.trunc);
    for (std::size_t i = 0; i < job.samples; ++i) {
      const FPElement x = random_element(ext.source(), job.support, 3, rng);
      record(ext.source(), x, z2_separation(ext, x, job.word_bound));
    }
  } else if (job.mode == "square") {
    require_inputs(job, 1, 1);
    const MorphismFamily a = load_family(job, 0);
    const TruncatedFreeProduct hh({a.domain_ptr(), a.domain_ptr()}, job.trunc);
    for (std::size_t i = 0; i < job.samples; ++i) {
      const FPElement x = random_element(hh, job.support, 3, rng);
      record(hh, x, square_separation(a, hh, x, job.word_bound));
    }
  } else {
    throw HopfError(ErrorCode::InvalidArgument, "unknown free-permanence mode '" + job.mode + "'");
  }
  out.result["mode"] = job.mode;
  out.result["samples"] = std::move(samples);
  out.result["separated"] = separated;
  out.result["all_separated"] = separated == job.samples;
  out.exit_code = separated == job.samples ? 0 : 3;
  return out;
}

Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) {
    v.emplace_back(field, std::uniform_int_distribution<long>(-3, 3)(rng));
  }
  return v;
}

Outcome separate_job(const JobSpec& job) {
  require_inputs(job, 1, 2);
  std::mt19937_64 rng(job.seed);
  Outcome out;
  const MorphismFamily a = load_family(job, 0);
  const FieldSpec field = a.field();
  const std::size_t n = a.domain().dim();
  if (job.inputs.size() == 2) {
    const MorphismFamily closed = close_under_products(a);
    const MorphismFamily b = load_family(job, 1);
    const std::size_t total = n * b.domain().dim();
    Json samples = Json::array();
    std::size_t separated = 0;
    for (std::size_t i = 0; i < job.samples; ++i) {
      Vector x;
      do {
        x = random_vector(field, total, rng);
      } while (is_zero(x));
      Json s;
      s["x"] = to_json(x);
      try {
        const MixedSeparation sep =
            mixed_tensor_separation(closed, b, x, MixedBounds{job.word_bound, job.cap_entries});
        s["separated"] = true;
        s["word"] = word_json(sep.word);
        s["i_word"] = word_json(sep.i_word);
        s["j_word"] = word_json(sep.j_word);
        s["image_nonzero"] = !is_zero(sep.image);
        ++separated;
      } catch (const HopfError& e) {
        if (e.code() != ErrorCode::BoundExceeded) throw;
        s["separated"] = false;
        s["reason"] = e.what();
      }
      samples.push_back(std::move(s));
    }
    out.result["closed_family_size"] = closed.size();
    out.result["samples"] = std::move(samples);
    out.result["separated"] = separated;
    out.exit_code = separated == job.samples ? 0 : 3;
    return out;
  }
  std::vector<Vector> vectors;
  if (!job.vectors.empty()) {
    Json parsed;
    try {
      parsed = Json::parse(job.vectors);
    } catch (const Json::parse_error& e) {
      throw HopfError(ErrorCode::ParseError, std::string("--vectors: ") + e.what());
    }
    if (!parsed.is_array()) throw HopfError(ErrorCode::ParseError, "--vectors: expected an array");
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      const std::string where = "--vectors/" + std::to_string(i);
      if (!parsed[i].is_array() || parsed[i].size() != n) {
        throw HopfError(ErrorCode::ParseError, where + ": expected " + std::to_string(n) + " scalars");
      }
      Vector v;
      for (std::size_t c = 0; c < n; ++c) {
        v.push_back(scalar_from_json(field, parsed[i][c], where + "/" + std::to_string(c)));
      }
      vectors.push_back(std::move(v));
    }
  } else {
    const std::size_t count = job.count == 0 ? std::min<std::size_t>(n, 2) : job.count;
    if (count > n) throw HopfError(ErrorCode::InvalidArgument, "--count exceeds the dimension");
    RowEchelon rows(field, n);
    while (vectors.size() < count) {
      Vector v = random_vector(field, n, rng);
      if (rows.add(v)) vectors.push_back(std::move(v));
    }
  }
  Json vs = Json::array();
  for (const auto& v : vectors) vs.push_back(to_json(v));
  out.result["vectors"] = std::move(vs);
  const auto word = separating_word(a, vectors, job.word_bound, job.cap_entries);
  out.result["found"] = word.has_value();
  out.result["word"] = word ? word_json(*word) : Json(nullptr);
  out.exit_code = word ? 0 : 3;
  return out;
}

Json parameters_json(const JobSpec& job) {
  Json p;
  p["scan_len"] = job.scan_len;
  p["word_bound"] = job.word_bound;
  p["trunc"] = job.trunc;
  p["seed"] = job.seed;
  p["samples"] = job.samples;
  p["support"] = job.support;
  p["mode"] = job.mode;
  p["count"] = job.count;
  p["skip_verify"] = job.skip_verify;
  p["cap_entries"] = job.cap_entries;
  return p;
}

}  // namespace

JobResult run(const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  JobResult res;
  res.report["command"] = job.command;
  res.report["engine"] = Json{{"name", "hopfimage"}, {"version", kEngineVersion}};
  res.report["inputs"] = job.inputs;
  res.report["parameters"] = parameters_json(job);
  try {
    Outcome out;
    if (job.command == "check-hopf") {
      out = check_hopf_job(job);
    } else if (job.command == "hopf-image") {
      out = hopf_image_job(job);
    } else if (job.command == "is-inner-faithful") {
      out = is_if_job(job);
    } else if (job.command == "word-scan") {
      out = word_scan_job(job);
    } else if (job.command == "tensor-permanence") {
      out = tensor_job(job);
    } else if (job.command == "free-permanence") {
      out = free_job(job);
    } else if (job.command == "separate") {
      out = separate_job(job);
    } else {
      throw HopfError(ErrorCode::InvalidArgument, "unknown command '" + job.command + "'");
    }
    res.exit_code = out.exit_code;
    res.report["status"] = out.exit_code == 0 ? "ok" : out.exit_code == 1 ? "negative" : "bound_exceeded";
    res.report["result"] = std::move(out.result);
  } catch (const HopfError& e) {
    res.exit_code = exit_code_for(e.code());
    res.report["status"] = res.exit_code == 3 ? "bound_exceeded" : "input_error";
    res.report["error"] = Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (job.timing) res.report["timing_ms"] = res.elapsed_ms;
  return res;
}

}  // namespace hopfimage
