#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hopfimage/builtins.hpp"
#include "hopfimage/jobs.hpp"

namespace {

void list_builtins() {
  std::cout << "Hopf algebras:\n";
  for (const auto& n : hopfimage::builtin_hopf_names()) std::cout << "  " << n << '\n';
  std::cout << "  (also group:Z<n>, taft:n:q[:p], dual:<name>, tensor(<a>,<b>), <name>@F<p>)\n";
  std::cout << "Morphisms:\n";
  for (const auto& n : hopfimage::builtin_morphism_names()) std::cout << "  " << n << '\n';
  std::cout << "  (also morph:id:<hopf>, morph:eps:<hopf>)\n";
  std::cout << "Families:\n";
  for (const auto& n : hopfimage::builtin_family_names()) std::cout << "  " << n << '\n';
  std::cout << "  (also fam:tensor(<a>,<b>))\n";
}

}  // namespace

int main(int argc, char** argv) {
  hopfimage::JobSpec job;
  std::string out_path;
  bool list = false;

  CLI::App app{"Exact Hopf images and joint inner faithfulness"};
  app.add_option("command", job.command, "check-hopf | hopf-image | is-inner-faithful | word-scan | "
                                         "tensor-permanence | free-permanence | separate");
  app.add_option("inputs", job.inputs, "builtin names, JSON files or inline JSON objects");
  app.add_option("--scan-len", job.scan_len, "longest word in kernel scans")->capture_default_str();
  app.add_option("--word-bound", job.word_bound, "longest word in separation searches")
      ->capture_default_str();
  app.add_option("--trunc", job.trunc, "free product truncation length L")->capture_default_str();
  app.add_option("--seed", job.seed, "seed for random elements")->capture_default_str();
  app.add_option("--samples", job.samples, "random elements per run")->capture_default_str();
  app.add_option("--support", job.support, "longest word in random free product elements")
      ->capture_default_str();
  app.add_option("--mode", job.mode, "free-permanence: free, z2 or square")
      ->check(CLI::IsMember({"free", "z2", "square"}))
      ->capture_default_str();
  app.add_option("--vectors", job.vectors, "separate: JSON array of vectors");
  app.add_option("--count", job.count, "separate: size of the random independent set");
  app.add_option("--cap-entries", job.cap_entries, "largest dense word-map matrix (entries)")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--skip-verify", job.skip_verify, "do not axiom-check loaded inputs");
  app.add_flag("--timing", job.timing, "include wall time in the report");
  app.add_flag("--list", list, "list builtin names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (list) {
    list_builtins();
    return 0;
  }
  if (job.command.empty()) {
    std::cerr << app.help();
    return 2;
  }

  const hopfimage::JobResult res = hopfimage::run(job);
  const std::string text = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << '\n';
      return 2;
    }
    out << text;
  }
  if (res.report.contains("error")) {
    std::cerr << "error: " << res.report["error"]["message"].get<std::string>() << '\n';
  }
  if (!job.timing) std::cerr << "elapsed " << res.elapsed_ms << " ms\n";
  return res.exit_code;
}
