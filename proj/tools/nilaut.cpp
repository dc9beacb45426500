// nilaut: construct groups, analyze them, enumerate automorphism sets and
// run the classification suite.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilaut/autos.hpp"
#include "nilaut/corpus.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/group_io.hpp"
#include "nilaut/invariants.hpp"
#include "nilaut/report.hpp"
#include "nilaut/theorems.hpp"

namespace fs = std::filesystem;
using namespace nilaut;

namespace {

struct RunConfig {
  std::string format = "text";
  std::string out;
  std::size_t cap = kDefaultGroupCap;
  std::size_t full_scan_cap = kDefaultFullScanCap;
  std::size_t oracle_cap = 128;
  std::size_t sample_limit = 64;
  std::uint64_t seed = 0;
  bool serial = false;

  bool json() const { return format == "json"; }
  AutOptions autos() const {
    AutOptions o;
    o.oracle_cap = oracle_cap;
    o.policy = serial ? kernels::Policy::Serial : kernels::Policy::Parallel;
    return o;
  }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error("cannot write '" + cfg.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

FiniteGroup builtin(const std::string& name) {
  for (auto& g : default_corpus())
    if (g.name() == name) return g;
  throw Error("no built-in group named '" + name + "' (see `nilaut list`)");
}

// A .grp file, a .pc presentation, or `builtin:NAME`.
FiniteGroup load_group(const std::string& spec, const RunConfig& cfg) {
  if (spec.rfind("builtin:", 0) == 0) return builtin(spec.substr(8));
  const std::string text = read_text_file(spec);
  if (text.rfind("nilaut-group", 0) == 0) return parse_group(text, cfg.full_scan_cap);
  PresentationFile pf = parse_presentation(text);
  BuildOptions bo;
  bo.cap = cfg.cap;
  bo.full_scan_cap = cfg.full_scan_cap;
  std::string name = pf.name.empty() ? fs::path(spec).stem().string() : pf.name;
  return build_group(pf.presentation, bo, name, "presentation");
}

struct ConstructArgs {
  std::string family;
  std::string presentation;
  std::string descriptor;
  std::string type = "plus";
  unsigned n = 0, p = 0, k = 1, m = 1, e = 1;
  std::vector<unsigned> pairs;
};

FiniteGroup construct(const ConstructArgs& a, const RunConfig& cfg) {
  if (!a.presentation.empty()) return load_group(a.presentation, cfg);
  const std::string& f = a.family;
  if (f == "cyclic") return cyclic(a.n);
  if (f == "abelian") return abelian_from(FgAbelian::parse(a.descriptor));
  if (f == "dihedral") return dihedral(a.n);
  if (f == "quaternion") return quaternion(a.n);
  if (f == "extraspecial")
    return extraspecial(a.p, a.m, a.type == "minus" ? ExtraspecialType::Minus : ExtraspecialType::Plus);
  if (f == "heisenberg") return heisenberg(a.p, a.k);
  if (f == "central-heisenberg") return central_heisenberg(a.p, a.e, a.pairs);
  if (f == "paper-example-32") return paper_example_32();
  throw Error("unknown family '" + f + "'");
}

std::vector<FiniteGroup> load_corpus_dir(const std::string& dir, const RunConfig& cfg) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && (ext == ".grp" || ext == ".pc")) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<FiniteGroup> out;
  for (const auto& p : paths) {
    FiniteGroup g = load_group(p, cfg);
    if (g.name().empty()) g.set_name(fs::path(p).stem().string());
    out.push_back(std::move(g));
  }
  return out;
}

AutSet compute_autos(const FiniteGroup& g, const std::string& which, const RunConfig& cfg) {
  const AutOptions o = cfg.autos();
  if (which == "inner") return inner(g);
  if (which == "ia") return ia(g, o);
  if (which == "ia-class2") return ia_class2(g);
  if (which == "ia-brute") return ia_bruteforce(g, o);
  if (which == "ia-star") return ia_star(g, o);
  if (which == "aut-c") return aut_c(g, o);
  if (which == "aut") return aut_bruteforce(g, o);
  throw Error("unknown automorphism set '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism sets and classification checks for finite nilpotent groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--cap", cfg.cap, "Largest group order built from a presentation")->check(CLI::PositiveNumber);
  app.add_option("--full-scan-cap", cfg.full_scan_cap, "Largest order verified by the full associativity scan");
  app.add_option("--oracle-cap", cfg.oracle_cap, "Largest order for brute-force automorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--sample-limit", cfg.sample_limit, "Generating tuples per group in the Schur chain")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for tuple sampling");
  app.add_flag("--serial", cfg.serial, "Use the serial kernels");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Build a group and write it as a .grp file");
  construct_cmd->add_option("--family", ca.family, "cyclic, abelian, dihedral, quaternion, extraspecial, heisenberg, "
                                                   "central-heisenberg, paper-example-32");
  construct_cmd->add_option("--presentation", ca.presentation, "A .pc presentation file");
  construct_cmd->add_option("--n", ca.n, "Order (cyclic, dihedral, quaternion)");
  construct_cmd->add_option("--p", ca.p, "Prime");
  construct_cmd->add_option("--k", ca.k, "Heisenberg group over Z/p^k");
  construct_cmd->add_option("--m", ca.m, "Extraspecial of order p^(1+2m)");
  construct_cmd->add_option("--e", ca.e, "Central exponent for central-heisenberg");
  construct_cmd->add_option("--pairs", ca.pairs, "Pair exponents for central-heisenberg")->delimiter(',');
  construct_cmd->add_option("--type", ca.type, "Extraspecial type")->check(CLI::IsMember({"plus", "minus"}));
  construct_cmd->add_option("--descriptor", ca.descriptor, "Abelian descriptor, e.g. 'C_4 x C_2'");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structural invariants of a group");
  analyze_cmd->add_option("group", input, "Group file (.grp, .pc or builtin:NAME)")->required();

  std::string which = "ia";
  auto* autos_cmd = app.add_subcommand("autos", "Enumerate an automorphism set");
  autos_cmd->add_option("group", input, "Group file (.grp, .pc or builtin:NAME)")->required();
  autos_cmd->add_option("--which", which, "inner, ia, ia-class2, ia-brute, ia-star, aut-c, aut")
      ->check(CLI::IsMember({"inner", "ia", "ia-class2", "ia-brute", "ia-star", "aut-c", "aut"}));

  std::string triple;
  bool iii = false;
  auto* classify_cmd = app.add_subcommand("classify", "Evaluate the IA = Inn classification");
  classify_cmd->add_option("group", input, "Group file (.grp, .pc or builtin:NAME)");
  classify_cmd->add_option("--triple", triple, "Descriptor triple 'G/Z | G/G' | G''");
  classify_cmd->add_flag("--iii", iii, "Classify IA* = Inn instead");

  std::string hom_u, hom_v;
  auto* hom_cmd = app.add_subcommand("hom", "Hom(U, V) of finitely generated abelian groups");
  hom_cmd->add_option("U", hom_u, "Descriptor, e.g. 'Z^1 x C_4'")->required();
  hom_cmd->add_option("V", hom_v, "Descriptor")->required();

  bool use_builtin = false, all_checks = false, timings = false, sequential = false;
  std::string corpus_dir;
  std::vector<std::string> checks;
  auto* verify_cmd = app.add_subcommand("verify", "Run the classification suite on a corpus");
  verify_cmd->add_flag("--builtin", use_builtin, "Use the built-in corpus");
  verify_cmd->add_option("--corpus", corpus_dir, "Directory of .grp / .pc files");
  verify_cmd->add_flag("--all", all_checks, "Run every check");
  verify_cmd->add_option("--check", checks, "Run only these checks (repeatable)");
  verify_cmd->add_flag("--timings", timings, "Include per-check timings in JSON output");
  verify_cmd->add_flag("--sequential", sequential, "Do not run groups concurrently");

  auto* example_cmd = app.add_subcommand("example32", "Check every stated fact of the order-32 example");
  auto* list_cmd = app.add_subcommand("list", "Names of the built-in groups and suite checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct_cmd->parsed()) {
      if (ca.family.empty() == ca.presentation.empty())
        throw Error("construct needs exactly one of --family and --presentation");
      const FiniteGroup g = construct(ca, cfg);
      const std::string text = serialize_group(g);
      const std::string status = "order " + std::to_string(g.order()) + ", consistency " +
                                 (g.verification() == Verification::Full ? "verified" : "partially verified") +
                                 "\n";
      if (cfg.out.empty()) {
        std::cout << text;
        std::cerr << status;
      } else {
        emit(cfg, text);
        std::cout << status;
      }
      return 0;
    }
    if (analyze_cmd->parsed()) {
      const FiniteGroup g = load_group(input, cfg);
      const StructureSummary s = structure_summary(g);
      emit(cfg, cfg.json() ? dump(analysis_json(g, s)) : analysis_text(g, s));
      return 0;
    }
    if (autos_cmd->parsed()) {
      const FiniteGroup g = load_group(input, cfg);
      const AutSet s = compute_autos(g, which, cfg);
      emit(cfg, cfg.json() ? dump(autset_json(g, s)) : autset_text(g, s));
      return 0;
    }
    if (classify_cmd->parsed()) {
      if (triple.empty() == input.empty()) throw Error("classify needs a group file or --triple");
      ClassificationVerdict v;
      if (!triple.empty()) {
        const StructureTriple t = StructureTriple::parse(triple);
        v = iii ? classify_thm21_iii_symbolic(t) : classify_thm21_symbolic(t);
      } else {
        const FiniteGroup g = load_group(input, cfg);
        v = iii ? check_thm21_iii(g) : classify_thm21_finite(g);
      }
      emit(cfg, cfg.json() ? dump(verdict_json(v)) : verdict_text(v));
      return v.consistent ? 0 : 1;
    }
    if (hom_cmd->parsed()) {
      const FgAbelian h = hom_structure(FgAbelian::parse(hom_u), FgAbelian::parse(hom_v));
      if (cfg.json()) {
        Json j{{"schema", kReportSchemaVersion}, {"kind", "hom"}, {"U", FgAbelian::parse(hom_u).to_string()},
               {"V", FgAbelian::parse(hom_v).to_string()}, {"hom", h.to_string()}};
        emit(cfg, dump(j));
      } else {
        emit(cfg, h.to_string() + "\n");
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (use_builtin == !corpus_dir.empty()) throw Error("verify needs exactly one of --builtin and --corpus");
      const std::vector<FiniteGroup> corpus = use_builtin ? default_corpus() : load_corpus_dir(corpus_dir, cfg);
      SuiteOptions so;
      so.selectors = (all_checks || checks.empty()) ? std::vector<std::string>{"all"} : checks;
      so.sample_limit = cfg.sample_limit;
      so.seed = cfg.seed;
      so.autos = cfg.autos();
      so.parallel = !sequential;
      const SuiteReport r = run_suite(corpus, so);
      emit(cfg, cfg.json() ? dump(suite_json(r, timings)) : suite_text(r));
      return r.ok() ? 0 : 1;
    }
    if (example_cmd->parsed()) {
      const TheoremReport r = verify_example32(paper_example_32(), cfg.autos());
      emit(cfg, cfg.json() ? dump(theorem_report_json(r)) : theorem_report_text(r));
      return r.ok() ? 0 : 1;
    }
    if (list_cmd->parsed()) {
      std::ostringstream os;
      os << "groups:\n";
      for (const auto& g : default_corpus()) os << "  " << g.name() << " (order " << g.order() << ")\n";
      os << "checks:\n";
      for (const auto& c : suite_checks()) os << "  " << c << "\n";
      emit(cfg, os.str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "nilaut: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
