#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orbitframe/instance.hpp"
#include "orbitframe/invariants.hpp"
#include "orbitframe/report.hpp"

namespace of = orbitframe;

namespace {

struct Flags {
  std::string input;
  std::string out;
  std::string format = "json";
  std::size_t m = 0;
  double eta = 1.0 / 20.0;
  std::optional<std::uint64_t> seed;
  std::size_t n0 = 1;
  std::optional<std::size_t> trunc;
  bool timing = false;
  std::string generator;
  std::size_t size = 16;
};

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty() || f.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os) throw of::Error("cannot write " + f.out);
  os << text;
}

of::ReportOptions options(const Flags& f) {
  of::ReportOptions o;
  if (f.m) o.m = f.m;
  o.eta_fraction = f.eta;
  o.seed = f.seed;
  o.n0 = f.n0;
  o.trunc = f.trunc;
  o.timing = f.timing;
  return o;
}

of::Instance load(const Flags& f) {
  if (f.input.empty()) throw of::ParseError("--input is required");
  return of::read_instance(f.input);
}

int run(const std::string& cmd, const Flags& f) {
  if (cmd == "gen") {
    const std::size_t m = f.m ? f.m : 1;
    emit(f, of::emit_instance(of::generate_instance(f.generator, f.size, m, f.seed.value_or(0))));
    return 0;
  }
  if (cmd == "check-all") {
    const auto results = of::run_invariant_suite(f.seed.value_or(0));
    std::size_t passed = 0;
    std::string text;
    for (const auto& r : results) {
      passed += r.pass;
      text += (r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    }
    text += std::to_string(passed) + " passed, " + std::to_string(results.size() - passed) + " failed\n";
    emit(f, text);
    return passed == results.size() ? 0 : 1;
  }

  const of::Instance inst = load(f);
  const of::ReportOptions opt = options(f);
  if (f.format == "svg") {
    if (cmd != "decompose" && cmd != "analyze" && cmd != "certify")
      throw CLI::ValidationError("--format svg needs analyze, certify or decompose");
    const auto& pts = inst.system.eigenvalues;
    of::DecomposeConfig dc;
    dc.eta_fraction = f.eta;
    emit(f, of::render_svg(pts, of::decompose(pts, f.m ? f.m : inst.system.orbits(), dc)));
    return 0;
  }
  of::Json report;
  if (cmd == "analyze") report = of::analyze_report(inst, opt);
  else if (cmd == "certify") report = of::certify_report(inst, opt);
  else if (cmd == "oracle") report = of::oracle_report(inst, opt);
  else report = of::decompose_report(inst, opt);
  emit(f, of::dump(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame certification for multi-orbital systems of diagonal operators"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", f.out, "Output path (default stdout)");
    sub->add_option("--seed", f.seed, "Random seed");
    sub->add_option("--m", f.m, "Orbit count for gen, separation multiplicity otherwise");
  };
  auto add_instance = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--input", f.input, "Instance JSON")->required();
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "svg"}));
    sub->add_option("--eta", f.eta, "eta_p as a fraction of gamma_p")->check(CLI::Range(1e-12, 0.0999999));
    sub->add_option("--n0", f.n0, "Tail offset")->check(CLI::PositiveNumber);
    sub->add_option("--trunc", f.trunc, "Also report orbit sums truncated at N");
    sub->add_flag("--timing", f.timing, "Include wall-clock timing in the report");
  };

  for (const char* name : {"analyze", "certify", "oracle", "decompose"}) {
    static const std::map<std::string, std::string> help{
        {"analyze", "Full report"},
        {"certify", "Frame certificate"},
        {"oracle", "Exact frame bounds and standard basis profile"},
        {"decompose", "Layered decomposition"}};
    add_instance(app.add_subcommand(name, help.at(name)));
  }
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  add_common(gen);
  gen->add_option("name", f.generator, "Generator")->required()->check(CLI::IsMember(of::generator_names()));
  gen->add_option("--size", f.size, "Number of eigenvalues")->check(CLI::PositiveNumber);
  auto* all = app.add_subcommand("check-all", "Run the invariant suite");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, f);
  } catch (const of::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const of::EigenvalueOutsideDisk& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
