// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
//   acceptance <path-to-hopfimage-cli>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hopfimage/axioms.hpp"
#include "hopfimage/builtins.hpp"
#include "hopfimage/error.hpp"
#include "hopfimage/inner_faithful.hpp"
#include "hopfimage/jobs.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hopfimage;
namespace ht = hopfimage::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note.str(what);
    if (!ok) pass = false;
  }
};

Matrix counit_row(const HopfAlgebra& a) {
  Matrix m(a.field(), 1, a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) m(0, c) = a.counit()[c];
  return m;
}

std::vector<std::string> hopf_family_names() {
  std::vector<std::string> out;
  for (const auto& n : builtin_family_names()) {
    if (builtin_family(n).hopf_family()) out.push_back(n);
  }
  return out;
}

// 1. Axiom suite and mutation detection.
void axioms(Outcome& o) {
  const std::vector<std::string> fixtures = {
      "group:Z2", "group:Z2xZ2", "group:S3", "dual:group:S3", "sweedler", "taft:3:2:7",
      "tensor(group:Z2,sweedler)", "tensor(group:Z2xZ2,group:S3)", "tensor(sweedler,dual:group:S3)",
      "tensor(sweedler,sweedler)", "tensor(taft:3:2:7,group:Z2@F7)"};
  std::mt19937_64 rng(2024);
  std::size_t detected = 0, total = 0;
  for (const auto& name : fixtures) {
    auto h = builtin_hopf(name);
    AxiomReport r = check_hopf(*h);
    o.require(r.all_passed(), name + " fails " + r.first_failure());
    for (int t = 0; t < 100; ++t) {
      ++total;
      if (!check_hopf(ht::mutate(*h, rng), CheckMode::StopAtFirstFailure).all_passed()) {
        ++detected;
      } else {
        o.require(false, "undetected mutation of " + name);
      }
    }
  }
  if (o.pass) o.note << fixtures.size() << " fixtures valid, " << detected << "/" << total << " mutations detected";
}

// 2. Kernel chain at scan length 4 against the largest Hopf ideal.
void oracle_equivalence(Outcome& o) {
  std::size_t warns = 0;
  const auto names = builtin_family_names();
  for (const auto& name : names) {
    MorphismFamily fam = builtin_family(name);
    IFVerdict v = decide_jointly_if(fam, 4);
    KernelChain chain = kernel_chain(fam, 4);
    for (std::size_t n = 0; n < chain.levels.size(); ++n) {
      o.require(chain.levels[n].contains(v.witness.subspace), name + ": witness not inside I_" + std::to_string(n));
    }
    if (v.warn) {
      ++warns;
      std::cout << "WARN " << name << ": scan dim " << chain.levels.back().dim() << ", witness dim "
                << v.witness.subspace.dim() << "\n";
    }
    o.require(chain.levels.back() == v.witness.subspace, name + ": I_4 differs from the witness");
  }
  if (o.pass) o.note << names.size() << " families, I_4 = witness, " << warns << " WARN";
}

// 3. Known images against subgroup-correspondence oracles.
void known_images(Outcome& o) {
  const GroupTable s3 = symmetric_group_s3();
  MorphismFamily sign = builtin_family("fam:sign");
  IFVerdict vs = decide_jointly_if(sign);
  o.require(vs.witness.subspace.dim() == 4, "sign: witness dim " + std::to_string(vs.witness.subspace.dim()));
  o.require(vs.witness.subspace == ht::group_oracle(Q, s3, common_kernel(sign)), "sign: oracle disagrees");
  HopfImage img = hopf_image(sign);
  o.require(img.image->dim() == 2, "sign: image dim " + std::to_string(img.image->dim()));
  std::vector<Vector> grouplikes;
  for (std::size_t g = 0; g < 6; ++g) {
    Vector x = img.quotient.apply(unit_vector(Q, 6, g));
    bool gl = to_dense(img.image->comultiply(x), Q, x.size() * x.size()) == kron(x, x) &&
              img.image->apply_counit(x).is_one();
    o.require(gl, "sign: image of a group element is not grouplike");
    bool dup = false;
    for (const auto& y : grouplikes) dup = dup || y == x;
    if (!dup) grouplikes.push_back(x);
  }
  // Distinct grouplikes are independent, so two in a 2-dim algebra are all of them.
  o.require(grouplikes.size() == 2 && Subspace::span(Q, 2, grouplikes).dim() == 2,
            "sign: expected exactly 2 grouplikes");

  MorphismFamily rho = builtin_family("fam:rho");
  o.require(decide_jointly_if(rho).jointly_inner_faithful, "rho: not inner faithful");
  o.require(common_kernel(rho).dim() == 2, "rho: ker dim " + std::to_string(common_kernel(rho).dim()));
  o.require(ht::group_oracle(Q, s3, common_kernel(rho)).dim() == 0, "rho: oracle finds a Hopf ideal");

  for (const char* name : {"fam:chi1", "fam:chi2"}) {
    MorphismFamily chi = builtin_family(name);
    Subspace w = decide_jointly_if(chi).witness.subspace;
    o.require(w.dim() == 2, std::string(name) + ": witness dim " + std::to_string(w.dim()));
    o.require(w == ht::group_oracle(Q, klein_four(), common_kernel(chi)), std::string(name) + ": oracle disagrees");
  }
  MorphismFamily both = builtin_family("fam:chi");
  o.require(decide_jointly_if(both).jointly_inner_faithful, "{chi1,chi2}: not jointly IF");
  o.require(ht::group_oracle(Q, klein_four(), common_kernel(both)).dim() == 0, "{chi1,chi2}: oracle disagrees");
  if (o.pass) o.note << "sign 4/2 with 2 grouplikes, rho IF with ker 2, chi_i witness 2, {chi1,chi2} IF";
}

// 4. Order reversal of word kernels and the counit insertion identity.
void order_reversal(Outcome& o) {
  std::mt19937_64 rng(4);
  const auto names = hopf_family_names();
  std::size_t pairs = 0, identities = 0;
  while (pairs < 200) {
    MorphismFamily fam = builtin_family(names[pairs % names.size()]);
    const std::size_t m = fam.size();
    Word a = ht::random_word(m, std::uniform_int_distribution<std::size_t>(0, 3)(rng), rng);
    Word b = ht::random_superword(a, m, std::uniform_int_distribution<std::size_t>(1, 4 - a.size())(rng), rng);
    ++pairs;
    o.require(word_kernel(fam, a).contains(word_kernel(fam, b)),
              names[(pairs - 1) % names.size()] + ": ker " + format_word(b) + " not inside ker " + format_word(a));

    // Insert a single letter and contract it with the counit of its target.
    std::size_t pos = std::uniform_int_distribution<std::size_t>(0, a.size())(rng);
    Word one = ht::random_word(m, 1, rng);
    Word c = a;
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(pos), one.front());
    std::size_t left = 1, right = 1;
    for (std::size_t u = 0; u < a.size(); ++u) (u < pos ? left : right) *= fam.map(a[u].index).target().dim();
    Matrix e = kronecker(kronecker(Matrix::identity(Q, left), counit_row(fam.map(one.front().index).target().hopf())),
                         Matrix::identity(Q, right));
    o.require(e * word_matrix(fam, c) == word_matrix(fam, a), "counit insertion identity fails for " + format_word(c));
    ++identities;
  }
  if (o.pass) o.note << pairs << " subword pairs over " << names.size() << " Hopf families, " << identities << " insertion identities";
}

// 5. Separating words for independent sets.
void filtration(Outcome& o) {
  std::mt19937_64 rng(5);
  std::size_t runs = 0, families = 0;
  for (const auto& name : hopf_family_names()) {
    MorphismFamily fam = builtin_family(name);
    if (!decide_jointly_if(fam).jointly_inner_faithful) continue;
    ++families;
    const std::size_t n = fam.domain().dim();
    for (int t = 0; t < 50; ++t) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, n))(rng);
      std::vector<Vector> vs;
      while (vs.size() < k) {
        vs.push_back(ht::random_nonzero_vector(Q, n, rng));
        if (Subspace::span(Q, n, vs).dim() < vs.size()) vs.pop_back();
      }
      auto w = separating_word(fam, vs, 4);
      ++runs;
      o.require(w.has_value(), name + ": no separating word within length 4");
      if (w) o.require(rank(word_images(fam, *w, vs, default_cap_entries())) == k, name + ": word does not separate");
    }
  }
  if (o.pass) o.note << runs << " independent sets over " << families << " jointly IF Hopf families";
}

// 6. Tensor permanence and its converse.
void tensor_permanence(Outcome& o) {
  const std::vector<std::string> ifs = {"fam:id:group:Z2", "fam:quot-Z2xZ2", "fam:id:group:Z2xZ2",
                                        "fam:id:group:S3", "fam:id:sweedler"};
  std::size_t pairs = 0;
  for (const auto& a : ifs) {
    for (const auto& b : ifs) {
      ++pairs;
      o.require(decide_jointly_if(tensor_family(builtin_family(a), builtin_family(b))).jointly_inner_faithful,
                a + " (x) " + b + " not jointly IF");
    }
  }
  std::size_t converse = 0;
  for (const char* bad : {"fam:sign-quot", "fam:sweedler-quot", "fam:eps:group:Z2xZ2"}) {
    for (const auto& good : ifs) {
      MorphismFamily f = builtin_family(bad), g = builtin_family(good);
      Subspace j = decide_jointly_if(f).witness.subspace;
      IFVerdict v = decide_jointly_if(tensor_family(f, g));
      const std::size_t nk = g.domain().dim();
      std::vector<Vector> jk;
      for (const auto& x : j.basis_vectors())
        for (std::size_t b = 0; b < nk; ++b) jk.push_back(kron(x, unit_vector(Q, nk, b)));
      o.require(!v.jointly_inner_faithful, std::string(bad) + " (x) " + good + " reported IF");
      o.require(v.witness.subspace.contains(Subspace::span(Q, f.domain().dim() * nk, jk)),
                std::string(bad) + " (x) " + good + ": witness misses J (x) K");
      ++converse;
    }
  }
  if (o.pass) o.note << pairs << " IF pairs stay IF, " << converse << " non-IF pairs keep J (x) K";
}

// 7. Free product permanence at L = 6, word bound 4.
void free_permanence(Outcome& o) {
  struct Run {
    std::string mode;
    std::vector<std::string> inputs;
  };
  const std::vector<Run> runs = {
      {"free", {"fam:id:group:Z2", "fam:id:group:Z2"}},
      {"free", {"fam:quot-Z2xZ2", "fam:id:sweedler"}},
      {"free", {"fam:id:group:S3", "fam:quot-Z2xZ2"}},
      {"free", {"fam:res-S3", "fam:id:group:Z2"}},
      {"free", {"fam:sweedler-rep", "fam:chi"}},
      {"z2", {"fam:id:group:S3"}},
      {"z2", {"fam:quot-Z2xZ2"}},
      {"z2", {"fam:res-S3"}},
      {"z2", {"fam:id:sweedler"}},
      {"z2", {"fam:rho"}},
      {"square", {"fam:quot-Z2xZ2"}},
      {"square", {"fam:id:sweedler"}},
      {"square", {"fam:id:group:S3"}},
      {"square", {"fam:rho"}},
  };
  std::size_t samples = 0;
  for (const auto& r : runs) {
    JobSpec job;
    job.command = "free-permanence";
    job.inputs = r.inputs;
    job.mode = r.mode;
    job.trunc = 6;
    job.word_bound = 4;
    job.support = 3;
    job.samples = 20;
    job.seed = 7;
    JobResult res = run(job);
    std::string what = r.mode;
    for (const auto& i : r.inputs) what += " " + i;
    o.require(res.exit_code == 0, what + ": exit " + std::to_string(res.exit_code) + " " +
                                      (res.report.contains("error") ? res.report["error"].dump() : ""));
    if (res.exit_code == 0) samples += res.report["result"]["separated"].get<std::size_t>();
  }
  if (o.pass) o.note << samples << " samples separated across " << runs.size() << " runs";
}

// 8. Mixed separation: plain faithful family against a jointly IF one.
void mixed(Outcome& o) {
  MorphismFamily fi = close_under_products(builtin_family("fam:reps-S3"));
  MorphismFamily fj = builtin_family("fam:chi");
  o.require(is_jointly_faithful(fi), "product-closed reps of S3 not faithful");
  o.require(antipode_injective(fi.domain()), "antipode of kS3 not injective");
  o.require(decide_jointly_if(fj).jointly_inner_faithful, "{chi1,chi2} not jointly IF");
  MorphismFamily t = tensor_family(fi, fj);
  std::mt19937_64 rng(8);
  std::size_t found = 0;
  for (int s = 0; s < 20; ++s) {
    Vector x = ht::random_nonzero_vector(Q, 24, rng);
    try {
      MixedSeparation m = mixed_tensor_separation(fi, fj, x);
      Vector direct = word_images(t, m.word, {x}, default_cap_entries()).column(0);
      o.require(!is_zero(direct) && direct == m.image, "direct evaluation disagrees");
      ++found;
    } catch (const HopfError& e) {
      o.require(false, std::string("sample ") + std::to_string(s) + ": " + e.what());
    }
  }
  if (o.pass) o.note << found << "/20 elements of kS3 (x) k[Z2xZ2] separated, closed family of " << fi.size();
}

// 9. Hopf image idempotence and factorisation.
void idempotence(Outcome& o) {
  const auto names = builtin_family_names();
  for (const auto& name : names) {
    MorphismFamily fam = builtin_family(name);
    HopfImage img = hopf_image(fam);
    o.require(decide_jointly_if(img.factored).jointly_inner_faithful, name + ": factored family not IF");
    for (std::size_t i = 0; i < fam.size(); ++i) {
      o.require(img.factored.map(i).matrix() * img.quotient.matrix() == fam.map(i).matrix(),
                name + ": factored o quotient differs");
    }
  }
  if (o.pass) o.note << names.size() << " families";
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

// 10. Byte-identical CLI reports.
void determinism(Outcome& o, const std::string& cli) {
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return;
  }
  const std::vector<std::string> commands = {
      "is-inner-faithful fam:reps-S3",
      "hopf-image fam:sign",
      "free-permanence fam:sweedler-rep fam:chi --seed 11 --samples 10",
      "free-permanence fam:rho --mode square --seed 3 --samples 5",
      "separate fam:reps-S3 fam:chi --seed 5 --samples 10",
      "separate fam:id:group:S3 --seed 9 --count 4",
  };
  for (const auto& c : commands) {
    const std::string full = "'" + cli + "' " + c + " 2>/dev/null";
    const std::string a = capture(full), b = capture(full);
    o.require(!a.empty(), c + ": empty report");
    o.require(a == b, c + ": reports differ");
  }
  if (o.pass) o.note << commands.size() << " commands, identical bytes on repeat";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::function<void(Outcome&)>> criteria = {
      axioms, oracle_equivalence, known_images, order_reversal, filtration, tensor_permanence,
      free_permanence, mixed, idempotence, [&](Outcome& o) { determinism(o, cli); }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.note.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
