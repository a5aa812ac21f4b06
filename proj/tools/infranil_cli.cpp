#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <infranil/infranil.hpp>

using namespace infranil;

namespace {

std::string render_ascending(const RatPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational a = negative ? Rational(-c) : c;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string holonomy_name(int index) { return "F" + std::to_string(index); }

std::string member_list(const std::vector<int>& members) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << holonomy_name(members[i]);
  os << "}";
  return os.str();
}

void run_validate(const std::string& path) {
  const ParsedInput in = parse_input_file(path);
  std::cout << "dimension: " << in.group.dimension << "\n";
  std::cout << "holonomy order: " << in.group.order() << "\n";
  std::cout << "lattice basis: " << in.group.lattice_basis.str() << "\n";
  std::cout << "map linear part invertible: " << (in.map.invertible ? "yes" : "no") << "\n";
  std::cout << "phi:";
  for (std::size_t i = 0; i < in.group.order(); ++i)
    std::cout << " " << holonomy_name(static_cast<int>(i)) << "->" << holonomy_name(in.map.phi[i]);
  std::cout << "\n";
  std::cout << "f#(Id): " << member_list(in.map.image_subgroup) << "\n";
  const MapDiagnostics diag = validate_map_induces(in.group, in.map);
  if (!diag.ok) {
    std::cout << "map validation: FAILED\n";
    for (const std::string& v : diag.violations) std::cout << "  " << v << "\n";
    throw ValidationError("map does not induce a self-map of the quotient");
  }
  std::cout << "map validation: ok\n";
}

void run_nielsen(const std::string& path, unsigned long max_n) {
  const ParsedInput in = parse_input_file(path);
  std::cout << std::setw(3) << "n" << std::setw(16) << "L(f^n)" << std::setw(16) << "N(f^n)"
            << std::setw(10) << "R-finite" << std::setw(14) << "weakly-Jiang" << "\n";
  for (unsigned long n = 1; n <= max_n; ++n) {
    std::cout << std::setw(3) << n << std::setw(16) << lefschetz(in.group, in.map, n).get_str()
              << std::setw(16) << nielsen_number(in.group, in.map, n).get_str() << std::setw(10)
              << (reidemeister_finite(in.group, in.map, n) ? "yes" : "no") << std::setw(14)
              << (is_weakly_jiang(in.group, in.map, n) ? "yes" : "no") << "\n";
  }
}

void run_classes(const std::string& path, unsigned long level) {
  const ParsedInput in = parse_input_file(path);
  const LevelClassTable table = equivalence_classes(in.group, in.map, level);
  std::cout << "level " << level << ": " << table.size() << " classes, holonomy order "
            << in.group.order() << "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const EquivClass& cls = table[i];
    std::cout << "class " << i << ": rep=" << holonomy_name(cls.representative)
              << " members=" << member_list(cls.members)
              << " essential=" << (cls.essential ? "yes" : "no") << " det=" << cls.det.get_str()
              << " N_A=" << cls.class_count.get_str() << "\n";
  }
}

void run_boost_graph(const std::string& path, unsigned long n, const std::string& format,
                     const std::string& out_path) {
  const ParsedInput in = parse_input_file(path);
  GraphFormat fmt;
  if (format == "dot")
    fmt = GraphFormat::dot;
  else if (format == "json")
    fmt = GraphFormat::json;
  else
    throw ValidationError("unknown graph format: " + format);
  const std::string graph = export_boost_graph(in.group, in.map, n, fmt);
  if (out_path.empty()) {
    std::cout << graph;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot open output file: " + out_path);
    out << graph;
  }
}

void run_nf(const std::string& path, unsigned long max_n) {
  const ParsedInput in = parse_input_file(path);
  std::cout << std::setw(3) << "n" << std::setw(16) << "N(f^n)" << std::setw(12) << "IIB_n"
            << std::setw(16) << "NF_n" << std::setw(16) << "NP_n" << "\n";
  for (unsigned long n = 1; n <= max_n; ++n) {
    const PeriodicReport report = analyze_periodic(in.group, in.map, n);
    std::cout << std::setw(3) << n << std::setw(16) << report.nielsen.at(n).get_str()
              << std::setw(12) << report.iib.at(n).get_str() << std::setw(16)
              << report.nf.at(n).get_str() << std::setw(16) << report.np.at(n).get_str() << "\n";
  }
}

void run_classify(const std::string& path, unsigned long max_n) {
  const ParsedInput in = parse_input_file(path);
  const SemiHyperbolicity sh = is_semi_hyperbolic(in.group, in.map);
  if (sh.semi_hyperbolic) {
    std::cout << "semi-hyperbolic: yes\n";
  } else {
    std::cout << "semi-hyperbolic: no (witness order " << sh.witness_order << ": "
              << sh.witness.str() << ")\n";
  }
  const NfProfile profile = nf_equals_n_profile(in.group, in.map, max_n);
  std::cout << "NF=N profile (n <= " << max_n << "): ";
  switch (profile.verdict) {
    case NfProfile::Verdict::always_equal:
      std::cout << "always equal (" << profile.reason << ")\n";
      break;
    case NfProfile::Verdict::differs_at:
      std::cout << "differs at n=" << profile.first_n << " (" << profile.reason << ")\n";
      break;
    case NfProfile::Verdict::differs_beyond_bound:
      std::cout << profile.reason << "\n";
      break;
  }
  switch (wecken_prediction(in.group, in.map, max_n)) {
    case WeckenVerdict::wecken_every_level:
      std::cout << "wecken prediction: wecken-at-every-level\n";
      break;
    case WeckenVerdict::not_wecken_somewhere:
      std::cout << "wecken prediction: not-wecken-somewhere\n";
      break;
    case WeckenVerdict::all_nielsen_zero:
      std::cout << "wecken prediction: all-nielsen-zero\n";
      break;
  }
}

void run_zeta(const std::string& path, unsigned long terms, const std::string& which,
              long probe_degree) {
  const ParsedInput in = parse_input_file(path);
  RatSeries series;
  if (which == "nielsen")
    series = nielsen_zeta(in.group, in.map, terms);
  else if (which == "minimal")
    series = minimal_zeta(in.group, in.map, terms);
  else
    throw ValidationError("unknown zeta kind: " + which);
  std::cout << which << " zeta coefficients (order " << terms << "):";
  for (const Rational& c : series.coeffs) std::cout << " " << c.get_str();
  std::cout << "\n";
  if (probe_degree >= 0) {
    const auto fit = probe_rationality(series, static_cast<std::size_t>(probe_degree));
    if (fit) {
      std::cout << "rational fit: (" << render_ascending(fit->numerator, "z") << ")/("
                << render_ascending(fit->denominator, "z") << "), consistent to order " << terms
                << "\n";
    } else {
      std::cout << "no rational fit with degree <= " << probe_degree << "\n";
    }
  }
}

void run_oracle(const std::string& path, unsigned long n, long window) {
  const ParsedInput in = parse_input_file(path);
  const Integer predicted = nielsen_number(in.group, in.map, n);
  std::cout << "predicted N(f^" << n << "): " << predicted.get_str() << "\n";
  if (in.group.order() == 1) {
    const RatMatrix in_lattice =
        in.group.lattice_basis_inv * in.map.lift.linear * in.group.lattice_basis;
    if (is_integral(in_lattice)) {
      const std::vector<Rational> shifted = in.group.lattice_basis_inv * in.map.lift.translation;
      const TorusFixCount count = torus_fix_count(to_integer(in_lattice), shifted, n);
      if (count.finite)
        std::cout << "exact torus count: " << count.count.get_str() << "\n";
      else
        std::cout << "exact torus count: infinite\n";
    }
  }
  const FlatEnumeration enumeration = flat_fix_enumerate(in.group, in.map, n, window);
  std::cout << "enumerated fixed points (window " << window << "): " << enumeration.points.size()
            << "\n";
  for (const FixedPointRecord& p : enumeration.points) {
    std::cout << "  point (";
    for (std::size_t i = 0; i < p.point.size(); ++i)
      std::cout << (i ? "," : "") << p.point[i].get_str();
    std::cout << ") holonomy " << holonomy_name(p.holonomy) << "\n";
  }
  std::cout << "infinite cosets encountered: " << enumeration.infinite_cosets.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fixed-point and periodic-point invariants for affine self-maps of "
               "compact flat manifolds given by crystallographic presentations"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json", json_errors, "print errors as JSON");

  std::string input;
  unsigned long max_n = 6, level = 1, graph_n = 1, terms = 6, oracle_n = 1;
  long probe_degree = -1, window = 3;
  std::string format = "dot", out_path, which = "nielsen";

  CLI::App* validate = app.add_subcommand("validate", "parse and validate an input file");
  validate->add_option("input", input, "input JSON file")->required();

  CLI::App* nielsen = app.add_subcommand("nielsen", "Lefschetz/Nielsen table per iterate");
  nielsen->add_option("input", input)->required();
  nielsen->add_option("--max-n", max_n, "largest iterate")->default_val(6);

  CLI::App* classes = app.add_subcommand("classes", "equivalence classes at one level");
  classes->add_option("input", input)->required();
  classes->add_option("--level", level, "iterate level")->default_val(1);

  CLI::App* boost_graph = app.add_subcommand("boost-graph", "export the boosting graph");
  boost_graph->add_option("input", input)->required();
  boost_graph->add_option("--n", graph_n, "top level")->required();
  boost_graph->add_option("--format", format, "dot or json")->default_val("dot");
  boost_graph->add_option("--out", out_path, "output file (stdout when omitted)");

  CLI::App* nf_cmd = app.add_subcommand("nf", "full and prime periodic point counts");
  nf_cmd->add_option("input", input)->required();
  nf_cmd->add_option("--max-n", max_n, "largest level")->default_val(6);

  CLI::App* classify = app.add_subcommand("classify", "semi-hyperbolicity, NF=N profile, Wecken");
  classify->add_option("input", input)->required();
  classify->add_option("--max-n", max_n, "profile bound")->default_val(12);

  CLI::App* zeta = app.add_subcommand("zeta", "truncated dynamical zeta series");
  zeta->add_option("input", input)->required();
  zeta->add_option("--terms", terms, "truncation order")->required();
  zeta->add_option("--which", which, "nielsen or minimal")->default_val("nielsen");
  zeta->add_option("--probe-rational", probe_degree, "max numerator/denominator degree");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force counts vs predicted");
  oracle->add_option("input", input)->required();
  oracle->add_option("--n", oracle_n, "iterate")->required();
  oracle->add_option("--window", window, "lattice search window")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    if (json_errors) {
      nlohmann::json err{{"error", {{"kind", "usage"}, {"message", e.what()}}}};
      std::cout << err.dump() << "\n";
      return 1;
    }
    std::cerr << e.what() << "\n";
    return 1;
  }

  auto report_error = [&](const char* kind, const std::exception& e, int code) {
    if (json_errors) {
      nlohmann::json err{{"error", {{"kind", kind}, {"message", e.what()}}}};
      std::cout << err.dump() << "\n";
    } else {
      std::cerr << "error (" << kind << "): " << e.what() << "\n";
    }
    return code;
  };

  try {
    if (validate->parsed()) run_validate(input);
    if (nielsen->parsed()) run_nielsen(input, max_n);
    if (classes->parsed()) run_classes(input, level);
    if (boost_graph->parsed()) run_boost_graph(input, graph_n, format, out_path);
    if (nf_cmd->parsed()) run_nf(input, max_n);
    if (classify->parsed()) run_classify(input, max_n);
    if (zeta->parsed()) run_zeta(input, terms, which, probe_degree);
    if (oracle->parsed()) run_oracle(input, oracle_n, window);
  } catch (const StructureError& e) {
    return report_error("structure", e, 2);
  } catch (const ValidationError& e) {
    return report_error("validation", e, 1);
  } catch (const std::exception& e) {
    return report_error("error", e, 1);
  }
  return 0;
}
