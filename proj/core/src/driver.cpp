#include "oddjacobi/driver.hpp"

#include <CLI11.hpp>

#include "oddjacobi/axioms.hpp"
#include "oddjacobi/constructions.hpp"
#include "oddjacobi/structure_file.hpp"
#include "oddjacobi/text.hpp"

namespace oddjacobi {

namespace {

void print_entries(std::ostream& out, const CheckReport& report) {
  for (const CheckEntry& e : report.entries())
    out << e.name << ' ' << (e.passed ? "PASS" : "FAIL") << ' '
        << print_expression(e.residual) << '\n';
}

int finish_report(std::ostream& out, bool passed) {
  out << "# result: " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? 0 : 1;
}

Rational rational_argument(const std::string& text, const char* name) {
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    throw Error(std::string(name) + " must be a rational number like -3/2");
  if (sgn(r.get_den()) == 0)
    throw Error(std::string(name) + " has a zero denominator");
  r.canonicalize();
  return r;
}

SchoutenStructure schouten_of(const StructureFile& file) {
  switch (file.kind) {
    case StructureKind::schouten: return as_schouten(file);
    case StructureKind::qs: return as_qs(file).schouten();
    case StructureKind::exact_qs: return as_exact_qs(file).qs().schouten();
    default:
      throw Error("the schouten bracket needs a schouten, qs or exact-qs structure");
  }
}

int cmd_check(const std::string& path, std::ostream& out) {
  const StructureFile file = load_structure_file(path);
  CheckReport report;
  switch (file.kind) {
    case StructureKind::none:
      throw Error("file declares no structure to check");
    case StructureKind::schouten: {
      const SchoutenStructure st = as_schouten(file);
      report.add("schouten", canonical_poisson(st.s_hat(), st.s_hat()));
      break;
    }
    case StructureKind::qs:
      report = check_qs(as_qs(file));
      break;
    case StructureKind::odd_jacobi:
      report = check_odd_jacobi(as_odd_jacobi(file));
      break;
    case StructureKind::exact_qs:
      report = check_exact_qs(as_exact_qs(file));
      break;
  }
  out << "# oddjacobi check\n# file: " << path
      << "\n# structure: " << to_string(file.kind) << '\n';
  print_entries(out, report);
  return finish_report(out, report.all_passed());
}

int cmd_bracket(const std::string& path, const std::string& kind,
                const std::string& f_text, const std::string& g_text,
                std::ostream& out) {
  const StructureFile file = load_structure_file(path);
  const SuperPoly f = parse_expression(f_text, file.space);
  const SuperPoly g = parse_expression(g_text, file.space);
  SuperPoly result = file.space.zero();
  if (kind == "canonical") {
    result = canonical_poisson(f, g);
  } else if (kind == "schouten") {
    result = schouten_bracket(schouten_of(file), f, g);
  } else {
    if (file.kind != StructureKind::odd_jacobi &&
        file.kind != StructureKind::schouten)
      throw Error("the jacobi bracket needs an odd-jacobi (or schouten) structure");
    result = odd_jacobi_bracket(as_odd_jacobi(file), f, g);
  }
  out << "# oddjacobi bracket\n# file: " << path << "\n# kind: " << kind << '\n';
  out << print_expression(result) << '\n';
  return 0;
}

int cmd_theorem1(const std::string& path, const std::string& a_text,
                 const std::string& b_text, std::ostream& out) {
  const StructureFile file = load_structure_file(path);
  const ExactQSStructure ex = as_exact_qs(file);
  const Rational a = rational_argument(a_text, "--a");
  const Rational b = rational_argument(b_text, "--b");
  const OddJacobiStructure oj =
      (cmp(a, 1) == 0 && cmp(b, 1) == 0) ? associate(ex)
                                         : pencil(ex, PencilParams{a, b});
  out << "# oddjacobi theorem1\n# file: " << path << "\n# a: " << to_string(a)
      << "\n# b: " << to_string(b) << '\n';
  out << format_structure(oj);
  return 0;
}

int cmd_schoutenise(const std::string& path, std::ostream& out) {
  const StructureFile file = load_structure_file(path);
  if (file.kind != StructureKind::odd_jacobi &&
      file.kind != StructureKind::schouten)
    throw Error("schoutenise needs an odd-jacobi (or schouten) structure");
  const SchoutenStructure result = schoutenise(as_odd_jacobi(file));
  out << "# oddjacobi schoutenise\n# file: " << path << '\n';
  out << format_structure(result);
  return 0;
}

int cmd_axioms(const std::string& path, const SampleSpec& spec, std::ostream& out) {
  const StructureFile file = load_structure_file(path);
  out << "# oddjacobi axioms\n# file: " << path
      << "\n# structure: " << to_string(file.kind) << '\n';
  out << "# samples: " << spec.samples << "  max-degree: " << spec.max_degree
      << "  seed: " << spec.seed << '\n';
  bool passed = true;
  out << "# bracket: canonical\n";
  const CheckReport canonical = check_canonical_axioms(file.space, spec);
  print_entries(out, canonical);
  passed = passed && canonical.all_passed();
  switch (file.kind) {
    case StructureKind::none:
      break;
    case StructureKind::schouten: {
      out << "# bracket: schouten\n";
      const CheckReport r = check_schouten_axioms(as_schouten(file), spec);
      print_entries(out, r);
      passed = passed && r.all_passed();
      break;
    }
    case StructureKind::qs:
    case StructureKind::exact_qs: {
      out << "# bracket: schouten\n";
      const QSStructure qs = file.kind == StructureKind::qs
                                 ? as_qs(file)
                                 : as_exact_qs(file).qs();
      const CheckReport r = check_schouten_axioms(qs, spec);
      print_entries(out, r);
      passed = passed && r.all_passed();
      break;
    }
    case StructureKind::odd_jacobi: {
      out << "# bracket: jacobi\n";
      const CheckReport r = check_jacobi_axioms(as_odd_jacobi(file), spec);
      print_entries(out, r);
      passed = passed && r.all_passed();
      break;
    }
  }
  return finish_report(out, passed);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact checker for odd brackets over cotangent bundles"};
  app.name("oddjacobi");
  app.require_subcommand(1);

  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check", "verify the declared structure's defining conditions");
  check->add_option("file", check_path, "structure definition file")->required();

  std::string bracket_path, bracket_kind, f_text, g_text;
  CLI::App* bracket =
      app.add_subcommand("bracket", "evaluate a bracket of two expressions");
  bracket->add_option("file", bracket_path, "structure definition file")->required();
  bracket->add_option("--kind", bracket_kind, "canonical, schouten or jacobi")
      ->required()
      ->check(CLI::IsMember({"canonical", "schouten", "jacobi"}));
  bracket->add_option("-f", f_text, "first argument")->required();
  bracket->add_option("-g", g_text, "second argument")->required();

  std::string t1_path, a_text = "1", b_text = "1";
  CLI::App* theorem1 = app.add_subcommand(
      "theorem1", "derive the associated odd Jacobi structure of an exact QS input");
  theorem1->add_option("file", t1_path, "exact-qs structure definition file")
      ->required();
  theorem1->add_option("--a", a_text, "generator coefficient (default 1)");
  theorem1->add_option("--b", b_text, "homothety-term coefficient (default 1)");

  std::string sch_path;
  CLI::App* schout = app.add_subcommand(
      "schoutenise", "turn an odd Jacobi structure into a Schouten structure on M x R");
  schout->add_option("file", sch_path, "odd-jacobi structure definition file")
      ->required();

  std::string ax_path;
  SampleSpec spec;
  CLI::App* axioms =
      app.add_subcommand("axioms", "sampled bracket-axiom suites with exact residuals");
  axioms->add_option("file", ax_path, "structure definition file")->required();
  axioms->add_option("--samples", spec.samples, "sample count (default 100)")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--max-degree", spec.max_degree, "sample degree bound (default 3)")
      ->check(CLI::NonNegativeNumber);
  axioms->add_option("--seed", spec.seed, "generator seed (default 0)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, out);
    if (bracket->parsed())
      return cmd_bracket(bracket_path, bracket_kind, f_text, g_text, out);
    if (theorem1->parsed()) return cmd_theorem1(t1_path, a_text, b_text, out);
    if (schout->parsed()) return cmd_schoutenise(sch_path, out);
    if (axioms->parsed()) return cmd_axioms(ax_path, spec, out);
  } catch (const ParseError& e) {
    err << "parse error (line " << e.line() << ", column " << e.column()
        << "): " << e.what() << '\n';
    return 2;
  } catch (const StructureConditionError& e) {
    print_entries(out, e.report());
    out << "# error: " << e.what() << '\n';
    finish_report(out, false);
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace oddjacobi
