// scissors: polytope reports, congruence verdicts and the verification suites.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

#include "scissors/exact/error.hpp"
#include "scissors/report/commands.hpp"
#include "scissors/report/suites.hpp"

using namespace scissors;
using namespace scissors::report;

namespace {

constexpr int kInputError = 2;
constexpr int kInternal = 5;

void diagnose(const std::string& kind, const std::string& msg, const std::string& format) {
  if (format == "json")
    std::cerr << nlohmann::json{{"error", kind}, {"message", msg}}.dump() << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact scissors-congruence invariants and homological checks"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Options opt;
  std::string format = "json";
  long seed = 0;
  std::optional<int> cases, max_degree;
  app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed of the randomized suites");
  app.add_option("--cases", cases, "number of randomized cases");
  app.add_option("--max-degree", max_degree, "top homology degree");
  app.add_option("--height-bound", opt.height_bound, "coefficient bound of the angle-relation search");
  app.add_flag("--exact-strict", opt.exact_strict, "full exact validation of 3-d polytopes");
  app.add_flag("--recheck", opt.recheck, "re-verify embedded certificates (or a certificate file)");
  std::string cert_file;
  app.add_option("certificate", cert_file, "certificate or report to recheck with --recheck");

  std::function<Report()> run;

  std::string info_file;
  auto* info = app.add_subcommand("polytope-info", "volume, edge table and Dehn invariant");
  info->add_option("file", info_file)->required();
  info->callback([&] { run = [&] { return cmd_polytope_info(info_file, opt); }; });

  std::string fa, fb;
  auto* cmp = app.add_subcommand("compare", "scissors-congruence verdict");
  cmp->add_option("a", fa)->required();
  cmp->add_option("b", fb)->required();
  cmp->callback([&] { run = [&] { return cmd_compare(fa, fb, opt); }; });

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "one of: " + [] {
         std::string s;
         for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
         return s;
       }())->required();
  ver->callback([&] { run = [&] { return cmd_verify(suite, opt); }; });

  std::string algebra, presentation;
  auto* hoch = app.add_subcommand("hochschild", "Hochschild homology of a finite-dimensional algebra");
  auto* alg_opt = hoch->add_option("--algebra", algebra, "Q, QI, quat, mat2, mat4 or an algebra JSON file");
  hoch->add_option("--presentation", presentation, "commutative Q[x,..]/(..): Omega^1 and HH_1")->excludes(alg_opt);
  hoch->callback([&] {
    if (!presentation.empty())
      run = [&] { return cmd_kahler(presentation, opt); };
    else if (!algebra.empty())
      run = [&] { return cmd_hochschild(algebra, opt); };
    else
      throw CLI::RequiredError("--algebra or --presentation");
  });

  std::string complex_file, group, module = "trivialZ";
  auto* hom = app.add_subcommand("homology", "homology of a chain complex or a finite group");
  auto* cx = hom->add_option("--complex", complex_file, "chain complex JSON");
  hom->add_option("--group", group, "Z/m, S3, 1 or a group JSON file")->excludes(cx);
  hom->add_option("--module", module, "trivialZ or signZ");
  hom->callback([&] {
    if (!complex_file.empty())
      run = [&] { return cmd_homology_complex(complex_file, opt); };
    else if (!group.empty())
      run = [&] { return cmd_homology_group(group, module, opt); };
    else
      throw CLI::RequiredError("--complex or --group");
  });

  std::string tensor_file, tower;
  auto* phi = app.add_subcommand("phi", "the map to Kähler differentials of a field tower");
  phi->add_option("--tensor", tensor_file, "phi terms or Dehn tensor JSON")->required();
  phi->add_option("--tower", tower, "e.g. \"t; s: s^2 = 1 - t^2\"")->required();
  phi->callback([&] { run = [&] { return cmd_phi(tensor_file, tower, opt); }; });

  std::string recheck_file;
  auto* rc = app.add_subcommand("recheck", "re-verify certificates with exact arithmetic only");
  rc->add_option("file", recheck_file)->required();
  rc->callback([&] { run = [&] { return cmd_recheck(recheck_file, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (!run) {
    if (opt.recheck && !cert_file.empty()) {
      run = [&] { return cmd_recheck(cert_file, opt); };
    } else {
      std::cerr << app.help();
      return kInputError;
    }
  }
  if (seed < 0) {
    diagnose("ParseError", "--seed must be non-negative", format);
    return kInputError;
  }
  opt.seed = static_cast<uint64_t>(seed);
  opt.cases = cases;
  opt.max_degree = max_degree;

  try {
    auto t0 = std::chrono::steady_clock::now();
    Report r = run();
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (format == "json")
      std::cout << report_json(r).dump(2) << "\n";
    else
      std::cout << render_text(r);
    return r.status;
  } catch (const Error& e) {
    diagnose(kind_name(e.kind()), e.what(), format);
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    diagnose("ParseError", e.what(), format);
    return kInputError;
  } catch (const std::exception& e) {
    diagnose("InternalError", e.what(), format);
    return kInternal;
  }
}
