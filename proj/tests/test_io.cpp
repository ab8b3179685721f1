#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"
#include "hopfimage/io.hpp"
#include "hopfimage/jobs.hpp"

using namespace hopfimage;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const HopfError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no HopfError thrown";
  return ErrorCode::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const HopfError& e) {
    return e.what();
  }
  return {};
}

JobSpec job(std::string command, std::vector<std::string> inputs) {
  JobSpec j;
  j.command = std::move(command);
  j.inputs = std::move(inputs);
  return j;
}

}  // namespace

TEST(Io, ScalarsAndFields) {
  const FieldSpec f7 = FieldSpec::prime_field(7);
  EXPECT_EQ(field_from_json(to_json(f7)), f7);
  EXPECT_EQ(field_from_json(to_json(FieldSpec::rationals())), FieldSpec::rationals());
  EXPECT_EQ(scalar_from_json(FieldSpec::rationals(), Json("-3/9"), "/x"), Scalar::parse(FieldSpec::rationals(), "-1/3"));
  EXPECT_EQ(scalar_from_json(f7, Json(9), "/x"), Scalar(f7, 2));
  EXPECT_EQ(code_of([] { (void)field_from_json(Json::parse(R"({"kind":"Fp","p":6})")); }),
            ErrorCode::ParseError);
}

TEST(Io, HopfRoundTrip) {
  for (const auto& name : builtin_hopf_names()) {
    auto h = builtin_hopf(name);
    Json j = to_json(*h);
    EXPECT_EQ(hopf_from_json(j), *h) << name;
    EXPECT_EQ(hopf_from_json(Json::parse(j.dump())), *h) << name;
  }
}

TEST(Io, MorphismAndFamilyRoundTrip) {
  for (const auto& name : builtin_morphism_names()) {
    AlgebraMorphism f = builtin_morphism(name);
    AlgebraMorphism g = morphism_from_json(to_json(f));
    EXPECT_EQ(g.matrix(), f.matrix()) << name;
    EXPECT_EQ(g.is_hopf(), f.is_hopf());
    EXPECT_EQ(g.target().algebra(), f.target().algebra());
  }
  for (const auto& name : builtin_family_names()) {
    MorphismFamily fam = builtin_family(name);
    MorphismFamily back = family_from_json(to_json(fam));
    ASSERT_EQ(back.size(), fam.size());
    EXPECT_EQ(back.domain(), fam.domain());
    EXPECT_EQ(back.labels(), fam.labels());
    EXPECT_EQ(to_json(back).dump(), to_json(fam).dump()) << name;
  }
}

TEST(Io, ParseErrorsCarryJsonPaths) {
  Json j = to_json(*builtin_hopf("group:Z2"));
  j["counit"][1] = "x";
  EXPECT_EQ(code_of([&] { (void)hopf_from_json(j); }), ErrorCode::ParseError);
  EXPECT_NE(message_of([&] { (void)hopf_from_json(j); }).find("/counit/1"), std::string::npos);

  Json k = to_json(*builtin_hopf("group:Z2"));
  k["mult"][0].erase(1);
  EXPECT_EQ(code_of([&] { (void)hopf_from_json(k); }), ErrorCode::ParseError);
  EXPECT_NE(message_of([&] { (void)hopf_from_json(k); }).find("/mult/0"), std::string::npos);

  Json m = to_json(builtin_morphism("morph:chi1"));
  m.erase("matrix");
  EXPECT_EQ(code_of([&] { (void)morphism_from_json(m); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { (void)reference_from_argument("{not json"); }), ErrorCode::ParseError);
}

TEST(Io, InvalidStructuresAreRejectedUnlessVerificationIsOff) {
  Json j = to_json(*builtin_hopf("group:Z2"));
  j["counit"][1] = "2";
  EXPECT_EQ(code_of([&] { (void)hopf_from_json(j); }), ErrorCode::AxiomViolation);
  EXPECT_NE(message_of([&] { (void)hopf_from_json(j); }).find("counit"), std::string::npos);
  EXPECT_NO_THROW((void)hopf_from_json(j, LoadOptions{false}));

  Json f = to_json(builtin_morphism("morph:q1"));
  f["matrix"][0][0] = "2";
  EXPECT_EQ(code_of([&] { (void)morphism_from_json(f); }), ErrorCode::AxiomViolation);
}

TEST(Io, ReferencesResolveNamesFilesAndInlineObjects) {
  auto dir = std::filesystem::temp_directory_path() / "hopfimage_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "rho.json";
  std::ofstream(path) << to_json(builtin_family("fam:rho")).dump(2);
  MorphismFamily a = resolve_family(reference_from_argument(path.string()));
  MorphismFamily b = resolve_family(reference_from_argument("fam:rho"));
  MorphismFamily c = resolve_family(reference_from_argument(to_json(builtin_family("fam:rho")).dump()));
  EXPECT_EQ(a.map(0).matrix(), b.map(0).matrix());
  EXPECT_EQ(c.map(0).matrix(), b.map(0).matrix());
  EXPECT_EQ(*resolve_hopf(reference_from_argument("sweedler")), sweedler());
  EXPECT_EQ(code_of([&] { (void)load_json_file(dir / "missing.json"); }), ErrorCode::ParseError);
  std::filesystem::remove_all(dir);
}

TEST(Io, FreeProductElements) {
  auto z2 = builtin_hopf("group:Z2");
  TruncatedFreeProduct fp({z2, z2}, 3);
  FPElement x = fp.multiply(fp.basis_element(0, 1), fp.basis_element(1, 1)) - fp.one();
  Json j = to_json(fp, x);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0][0], "1");
  EXPECT_EQ(j[1][0], "0:e1 1:e1");
}

TEST(Jobs, VerdictsAndExitCodes) {
  JobResult r = run(job("is-inner-faithful", {"fam:rho"}));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["status"], "ok");
  EXPECT_EQ(r.report["result"]["jointly_inner_faithful"], true);
  EXPECT_EQ(r.report["result"]["common_kernel_dim"], 2);

  JobResult neg = run(job("is-inner-faithful", {"fam:sign"}));
  EXPECT_EQ(neg.exit_code, 1);
  EXPECT_EQ(neg.report["status"], "negative");
  EXPECT_EQ(neg.report["result"]["witness_dim"], 4);

  JobResult img = run(job("hopf-image", {"fam:sign"}));
  EXPECT_EQ(img.exit_code, 0);

  JobResult bad = run(job("check-hopf", {"taft:3:2"}));
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(bad.report["error"]["code"], "NotPrimitiveRoot");

  JobResult missing = run(job("is-inner-faithful", {"no-such-file.json"}));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_EQ(missing.report["status"], "input_error");

  JobSpec chi = job("separate", {"fam:chi"});
  chi.count = 2;
  JobResult sep = run(chi);
  EXPECT_EQ(sep.exit_code, 3);
  EXPECT_EQ(sep.report["status"], "bound_exceeded");

  EXPECT_EQ(exit_code_for(ErrorCode::TruncationOverflow), 3);
  EXPECT_EQ(exit_code_for(ErrorCode::ResourceCap), 3);
  EXPECT_EQ(exit_code_for(ErrorCode::AxiomViolation), 2);
}

TEST(Jobs, EveryCommandRuns) {
  for (const auto& [cmd, inputs] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"check-hopf", {"sweedler"}},
           {"check-hopf", {"fam:reps-S3"}},
           {"hopf-image", {"fam:chi1"}},
           {"is-inner-faithful", {"fam:res-S3"}},
           {"word-scan", {"fam:quot-Z2xZ2"}},
           {"tensor-permanence", {"fam:id:group:Z2", "fam:quot-Z2xZ2"}},
           {"free-permanence", {"fam:id:group:Z2", "fam:id:sweedler"}},
           {"separate", {"fam:id:group:S3"}},
           {"separate", {"fam:reps-S3", "fam:chi"}}}) {
    JobSpec j = job(cmd, inputs);
    j.samples = 3;
    JobResult r = run(j);
    EXPECT_EQ(r.exit_code, 0) << cmd << " " << r.report.dump();
    EXPECT_EQ(r.report["command"], cmd);
    EXPECT_FALSE(r.report.contains("timing_ms"));
  }
}

TEST(Jobs, ReportsAreDeterministic) {
  for (const char* mode : {"free", "z2", "square"}) {
    JobSpec j = job("free-permanence", {"fam:sweedler-rep", "fam:chi"});
    j.mode = mode;
    j.samples = 5;
    j.seed = 7;
    EXPECT_EQ(run(j).report.dump(), run(j).report.dump()) << mode;
  }
  JobSpec s = job("separate", {"fam:reps-S3", "fam:chi"});
  s.samples = 4;
  EXPECT_EQ(run(s).report.dump(), run(s).report.dump());
  JobSpec t = s;
  t.timing = true;
  EXPECT_TRUE(run(t).report.contains("timing_ms"));
}
