#include "picmod/cli.hpp"

#include <CLI11.hpp>

#include "picmod/report_json.hpp"

namespace picmod::cli {

namespace {

struct FormatOpt {
  std::string format = "text";
};

void add_format(CLI::App* cmd, FormatOpt& f) {
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_max_dim(CLI::App* cmd, long long& cap) {
  cmd->add_option("--max-dim", cap,
                  "cap on intermediate weight-multiset dimensions")
      ->envname("PICMOD_MAX_DIM");
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " ";
    s += p;
  }
  return s;
}

std::string exponent_text(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "unknown";
}

void print_report_text(const PicardReport& rep, std::ostream& out) {
  out << "group: " << rep.spec.name() << "\n";
  out << "degree: " << rep.degree.to_string() << "\n";
  out << "genus: " << rep.genus << "\n";
  std::vector<std::string> comps;
  for (const auto& c : rep.components) comps.push_back(c.to_string());
  out << "components: " << join(comps) << "\n";
  out << "stack.torsion:";
  if (rep.stack.torsion_invariants.empty()) out << " (none)";
  for (long long t : rep.stack.torsion_invariants) out << " " << t;
  out << "\n";
  out << "stack.det_generator_exponent: "
      << exponent_text(rep.stack.det_generator_exponent) << "\n";
  for (const auto& n : rep.stack.notes) out << "stack.note: " << n << "\n";
  out << "coarse.structure: " << structure_name(rep.coarse.structure) << "\n";
  out << "coarse.theta_unit_exponent: "
      << exponent_text(rep.coarse.theta_unit_exponent) << "\n";
  out << "coarse.det_unit_exponent: "
      << exponent_text(rep.coarse.det_unit_exponent) << "\n";
  for (const auto& n : rep.coarse.notes) out << "coarse.note: " << n << "\n";
  out << "caveats: " << (rep.caveats.empty() ? "(none)" : join(rep.caveats))
      << "\n";
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "key=value" pairs of the --weil option.
long long parse_weil_kv(const std::vector<std::string>& kv, const std::string& key) {
  for (const auto& item : kv) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("--weil expects key=value, got '" + item + "'");
    if (item.substr(0, eq) == key) {
      const std::string value = item.substr(eq + 1);
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        throw UsageError("--weil " + key + " must be an integer, got '" +
                         value + "'");
      }
    }
  }
  throw UsageError("--weil is missing '" + key + "=...'");
}

struct OracleArgs {
  std::string suite;
  std::string group;
  int param = 0;
  int s = 0;
  long long r = 0;
  long long rho_s = 0;
  int genus = 2;
};

int run_oracle(const OracleArgs& a, const std::string& format, std::ostream& out) {
  json all = json::object();
  bool text = format == "text";

  auto want = [&](const std::string& name) {
    return a.suite == "all" || a.suite == name;
  };

  if (want("descent-dichotomy")) {
    auto rep = oracles::verify_descent_dichotomy();
    if (text) {
      out << "suite: descent-dichotomy\n"
          << "triples_checked: " << rep.triples_checked << "\n"
          << "cocycles_checked: " << rep.cocycles_checked << "\n"
          << "failures: " << rep.failures.size() << "\n";
      for (const auto& f : rep.failures) out << "failure: " << f << "\n";
    } else {
      all["descent_dichotomy"] = to_json(rep);
    }
  }
  if (want("gcd-generator")) {
    std::vector<GroupSpec> specs;
    if (!a.group.empty()) {
      specs.push_back(GroupSpec::parse(a.group, a.param, a.s));
    } else {
      for (int r = 3; r <= 9; ++r) specs.push_back(GroupSpec::pgl(r));
      for (int l = 2; l <= 6; ++l) specs.push_back(GroupSpec::psp(2 * l));
      for (int l = 2; l <= 6; ++l) specs.push_back(GroupSpec::pso(2 * l));
      specs.push_back(GroupSpec::slmod(6, 3));
      specs.push_back(GroupSpec::slmod(4, 2));
    }
    json arr = json::array();
    if (text) out << "suite: gcd-generator\n";
    for (const auto& spec : specs) {
      auto rep = oracles::verify_gcd_generator(spec);
      if (text) {
        out << rep.group << ": gcd/d_sigma=" << rep.gcd_over_d_sigma
            << " table=" << rep.table_det_unit
            << (rep.match ? " match" : " MISMATCH") << "\n";
      } else {
        arr.push_back(to_json(rep));
      }
    }
    if (!text) all["gcd_generator"] = arr;
  }
  if (want("rho-p-sum")) {
    std::vector<std::pair<long long, long long>> cases;
    if (a.r > 0) {
      cases.push_back({a.r, a.rho_s});
    } else {
      cases = {{2, 1}, {4, 2}, {3, 3}, {6, 3}};
    }
    json arr = json::array();
    if (text) out << "suite: rho-p-sum\n";
    for (auto [r, s] : cases) {
      auto rep = oracles::rho_p_sum_report(r, s);
      if (text) {
        out << "(r=" << r << ", s=" << s << ") indices:";
        for (long long d : rep.indices) out << " " << d;
        out << " weighted_sum=" << rep.weighted_sum
            << " gcd=" << rep.gcd_with_adjoint
            << " bound=" << rep.divisibility_bound
            << (rep.gcd_divides_bound ? " ok" : " VIOLATION") << "\n";
      } else {
        arr.push_back(to_json(rep));
      }
    }
    if (!text) all["rho_p_sum"] = arr;
  }
  if (want("g2-parity")) {
    auto rep = oracles::g2_parity_exhaustive(a.genus);
    if (text) {
      out << "suite: g2-parity\n"
          << "refinements: " << rep.refinements << "\n"
          << "embeddings: " << rep.embeddings << "\n"
          << "equivalence_checks: " << rep.equivalence_checks << "\n"
          << "failures: " << rep.failures.size() << "\n";
      for (const auto& f : rep.failures) out << "failure: " << f << "\n";
    } else {
      all["g2_parity"] = to_json(rep);
    }
  }
  if (want("f4")) {
    auto rep = oracles::f4_branching_constant();
    if (text) {
      out << "suite: f4\n"
          << "restriction_index: " << rep.restriction_index << "\n"
          << "spin8_std_index: " << rep.spin8_std_index << "\n"
          << "ratio: " << rep.ratio << "\n"
          << "det_not_divisible_by_2: "
          << (rep.det_not_divisible_by_2 ? "true" : "false") << "\n";
    } else {
      all["f4"] = to_json(rep);
    }
  }
  if (!text) out << dump_canonical(all) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"picmod: Picard groups of moduli of semi-simple G-bundles, "
               "Dynkin-index arithmetic and finite-descent checks"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "Picard report for a group, degree and genus");
  std::string group, degree;
  int param = 0, mod_s = 0, genus = 2;
  FormatOpt cls_fmt;
  classify_cmd->add_option("--group", group, "group family")->required();
  classify_cmd->add_option("--param", param, "r or 2l");
  classify_cmd->add_option("--s", mod_s, "s for SLmod(r,s)");
  classify_cmd->add_option("--degree", degree, "degree label");
  classify_cmd->add_option("--genus", genus, "genus of the curve")
      ->capture_default_str();
  add_format(classify_cmd, cls_fmt);

  // index / dim
  auto* index_cmd =
      app.add_subcommand("index", "Dynkin index of a representation expression");
  auto* dim_cmd =
      app.add_subcommand("dim", "dimension of a representation expression");
  std::string family, rep_text;
  int rank = 0;
  long long max_dim = kDefaultDimCap;
  FormatOpt idx_fmt, dim_fmt;
  for (auto* cmd : {index_cmd, dim_cmd}) {
    cmd->add_option("--family", family, "A, B, C, D or G2")->required();
    cmd->add_option("--rank", rank, "Lie rank")->required();
    cmd->add_option("--rep", rep_text, "representation expression")->required();
    add_max_dim(cmd, max_dim);
  }
  add_format(index_cmd, idx_fmt);
  add_format(dim_cmd, dim_fmt);

  // descent
  auto* descent_cmd = app.add_subcommand(
      "descent", "descent dichotomy for a power of the Weil form");
  std::vector<std::string> weil_kv;
  long long power_of_form = 1, at_r = 0;
  bool brute = false;
  FormatOpt desc_fmt;
  descent_cmd->add_option("--weil", weil_kv, "r=<int> genus=<int>")
      ->expected(2)
      ->required();
  descent_cmd->add_option("--power-of-form", power_of_form,
                          "replace e by e^k")
      ->capture_default_str();
  descent_cmd->add_option("--at", at_r, "power r of the line bundle to test")
      ->required();
  descent_cmd->add_flag("--brute", brute,
                        "also run the exhaustive brute-force check");
  add_format(descent_cmd, desc_fmt);

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "independent brute-force verification suites");
  OracleArgs oargs;
  FormatOpt orc_fmt;
  oracle_cmd
      ->add_option("--suite", oargs.suite,
                   "descent-dichotomy, gcd-generator, rho-p-sum, g2-parity, f4 or all")
      ->required()
      ->check(CLI::IsMember({"descent-dichotomy", "gcd-generator", "rho-p-sum",
                             "g2-parity", "f4", "all"}));
  oracle_cmd->add_option("--group", oargs.group, "restrict gcd-generator to one spec");
  oracle_cmd->add_option("--param", oargs.param, "r or 2l for --group");
  oracle_cmd->add_option("--s", oargs.s, "s for SLmod");
  oracle_cmd->add_option("--r", oargs.r, "r for rho-p-sum");
  oracle_cmd->add_option("--rho-s", oargs.rho_s, "s for rho-p-sum");
  oracle_cmd->add_option("--genus", oargs.genus, "genus for g2-parity")
      ->capture_default_str();
  add_format(oracle_cmd, orc_fmt);

  // components
  auto* comp_cmd =
      app.add_subcommand("components", "valid degree labels of a group");
  std::string cgroup;
  int cparam = 0, cs = 0;
  FormatOpt comp_fmt;
  comp_cmd->add_option("--group", cgroup, "group family")->required();
  comp_cmd->add_option("--param", cparam, "r or 2l");
  comp_cmd->add_option("--s", cs, "s for SLmod(r,s)");
  add_format(comp_cmd, comp_fmt);

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargv;
    cargv.push_back("picmod");
    for (const auto& a : argv) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      GroupSpec spec = GroupSpec::parse(group, param, mod_s);
      DegreeLabel deg = parse_degree(spec, degree);
      PicardReport rep = classify(spec, deg, genus);
      if (cls_fmt.format == "json")
        out << dump_canonical(to_json(rep)) << "\n";
      else
        print_report_text(rep, out);
      return 0;
    }
    if (index_cmd->parsed() || dim_cmd->parsed()) {
      bool is_index = index_cmd->parsed();
      RootSystem rs = build_root_system(parse_family(family), rank);
      RepExpr e = parse_rep(rep_text);
      const FormatOpt& fmt = is_index ? idx_fmt : dim_fmt;
      Int value = is_index ? dynkin_index(rs, e, max_dim) : rep_dim(rs, e, max_dim);
      if (fmt.format == "json") {
        json j{{"family", family_name(rs.family)},
               {"rank", rank},
               {"rep", rep_text},
               {is_index ? "index" : "dim", std::stoll(value.str())}};
        if (is_index) j["dim"] = std::stoll(rep_dim(rs, e, max_dim).str());
        out << dump_canonical(j) << "\n";
      } else {
        out << value.str() << "\n";
      }
      return 0;
    }
    if (descent_cmd->parsed()) {
      long long r = parse_weil_kv(weil_kv, "r");
      long long g = parse_weil_kv(weil_kv, "genus");
      AlternatingForm e = form_power(weil_form(r, static_cast<int>(g)),
                                     power_of_form);
      DescentResult res = descent_at_power(e, at_r);
      std::string form_desc = "weil(" + std::to_string(r) + "," +
                              std::to_string(g) + ")^" +
                              std::to_string(power_of_form);
      if (desc_fmt.format == "json") {
        json j{{"group", e.group.name()},
               {"form", form_desc},
               {"form_order", form_order(e)},
               {"at", at_r},
               {"descends_at_r", res.descends_at_r},
               {"descends_at_2r", res.descends_at_2r}};
        if (brute)
          j["bruteforce"] = descent_bruteforce(upper_triangular_cocycle(e), at_r);
        out << dump_canonical(j) << "\n";
      } else {
        out << "group: " << e.group.name() << "\n"
            << "form: " << form_desc << "\n"
            << "form_order: " << form_order(e) << "\n"
            << "at: " << at_r << "\n"
            << "descends_at_r: " << (res.descends_at_r ? "true" : "false") << "\n"
            << "descends_at_2r: " << (res.descends_at_2r ? "true" : "false")
            << "\n";
        if (brute)
          out << "bruteforce: "
              << (descent_bruteforce(upper_triangular_cocycle(e), at_r) ? "true"
                                                                        : "false")
              << "\n";
      }
      return 0;
    }
    if (oracle_cmd->parsed()) {
      return run_oracle(oargs, orc_fmt.format, out);
    }
    if (comp_cmd->parsed()) {
      GroupSpec spec = GroupSpec::parse(cgroup, cparam, cs);
      auto degrees = valid_degrees(spec);
      std::vector<std::string> names;
      for (const auto& d : degrees) names.push_back(d.to_string());
      if (comp_fmt.format == "json") {
        json j{{"group", spec.name()}, {"components", names}};
        out << dump_canonical(j) << "\n";
      } else {
        out << join(names) << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "usage error: ParseError in --rep: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace picmod::cli
