#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "picmod/report_json.hpp"

namespace py = pybind11;
using namespace picmod;

namespace {

GroupSpec make_spec(const std::string& group, int param, int s) {
  return GroupSpec::parse(group, param, s);
}

RootSystem make_rs(const std::string& family, int rank) {
  return build_root_system(parse_family(family), rank);
}

}  // namespace

PYBIND11_MODULE(_picmod, m) {
  m.doc() = "Exact computations around Picard groups of moduli of G-bundles: "
            "root systems, Dynkin indices, finite-group descent, classifier "
            "tables and brute-force oracles.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, (e.name() + ": " + e.what()).c_str());
    }
  });

  m.def(
      "dynkin_index",
      [](const std::string& family, int rank, const std::string& rep,
         long long max_dim) {
        RootSystem rs = make_rs(family, rank);
        return std::stoll(dynkin_index(rs, parse_rep(rep), max_dim).str());
      },
      py::arg("family"), py::arg("rank"), py::arg("rep"),
      py::arg("max_dim") = kDefaultDimCap,
      "Dynkin index of a representation expression (std of SL_r = 1).");

  m.def(
      "rep_dim",
      [](const std::string& family, int rank, const std::string& rep,
         long long max_dim) {
        RootSystem rs = make_rs(family, rank);
        return std::stoll(rep_dim(rs, parse_rep(rep), max_dim).str());
      },
      py::arg("family"), py::arg("rank"), py::arg("rep"),
      py::arg("max_dim") = kDefaultDimCap);

  m.def(
      "weyl_dim",
      [](const std::string& family, int rank,
         const std::vector<long long>& fw_coeffs) {
        RootSystem rs = make_rs(family, rank);
        if (fw_coeffs.size() != rs.fundamental_weights.size())
          throw NotDominant("need one coefficient per fundamental weight");
        Vec lambda(rs.ambient_dim, Rat(0));
        for (std::size_t i = 0; i < fw_coeffs.size(); ++i)
          lambda = add(lambda, scale(Rat(fw_coeffs[i]), rs.fundamental_weights[i]));
        return std::stoll(weyl_dim(rs, lambda).str());
      },
      py::arg("family"), py::arg("rank"), py::arg("fundamental_coeffs"),
      "Dimension of the irreducible with the given fundamental-weight "
      "coordinates.");

  m.def(
      "dual_coxeter",
      [](const std::string& family, int rank) {
        return dual_coxeter(make_rs(family, rank));
      },
      py::arg("family"), py::arg("rank"));

  m.def(
      "center_character",
      [](const std::string& family, int rank, const std::string& rep) {
        auto c = center_character(make_rs(family, rank), parse_rep(rep));
        return py::make_tuple(c.orders, c.residues);
      },
      py::arg("family"), py::arg("rank"), py::arg("rep"),
      "(orders, residues) of the center character on an isotypic rep.");

  m.def(
      "classify_json",
      [](const std::string& group, int param, int s, const std::string& degree,
         int genus) {
        GroupSpec spec = make_spec(group, param, s);
        DegreeLabel deg = parse_degree(spec, degree);
        return dump_canonical(to_json(classify(spec, deg, genus)));
      },
      py::arg("group"), py::arg("param") = 0, py::arg("s") = 0,
      py::arg("degree") = "", py::arg("genus") = 2);

  m.def(
      "components",
      [](const std::string& group, int param, int s) {
        std::vector<std::string> names;
        for (const auto& d : valid_degrees(make_spec(group, param, s)))
          names.push_back(d.to_string());
        return names;
      },
      py::arg("group"), py::arg("param") = 0, py::arg("s") = 0);

  m.def(
      "epsilon_g",
      [](const std::string& group, int param, int s) {
        return epsilon_G(make_spec(group, param, s));
      },
      py::arg("group"), py::arg("param") = 0, py::arg("s") = 0);

  m.def(
      "descent_weil",
      [](long long r, int genus, long long form_power_k, long long at) {
        AlternatingForm e = form_power(weil_form(r, genus), form_power_k);
        DescentResult res = descent_at_power(e, at);
        return py::make_tuple(res.descends_at_r, res.descends_at_2r);
      },
      py::arg("r"), py::arg("genus"), py::arg("form_power") = 1, py::arg("at"),
      "(descends_at_r, descends_at_2r) for the k-th power of the Weil form.");

  m.def(
      "descent_bruteforce_weil",
      [](long long r, int genus, long long form_power_k, long long at) {
        AlternatingForm e = form_power(weil_form(r, genus), form_power_k);
        return descent_bruteforce(upper_triangular_cocycle(e), at);
      },
      py::arg("r"), py::arg("genus"), py::arg("form_power") = 1, py::arg("at"));

  m.def(
      "weil_form_order",
      [](long long r, int genus, long long k) {
        return form_order(form_power(weil_form(r, genus), k));
      },
      py::arg("r"), py::arg("genus"), py::arg("power") = 1);

  m.def("hecke_det_character", &hecke_det_character, py::arg("r"), py::arg("s"),
        py::arg("h"));
  m.def("canonical_descends", &canonical_descends, py::arg("r"), py::arg("s"),
        py::arg("h"));

  m.def("verify_descent_dichotomy_json", [] {
    return dump_canonical(to_json(oracles::verify_descent_dichotomy()));
  });
  m.def(
      "verify_gcd_generator_json",
      [](const std::string& group, int param, int s) {
        return dump_canonical(
            to_json(oracles::verify_gcd_generator(make_spec(group, param, s))));
      },
      py::arg("group"), py::arg("param") = 0, py::arg("s") = 0);
  m.def(
      "rho_p_sum_json",
      [](long long r, long long s) {
        return dump_canonical(to_json(oracles::rho_p_sum_report(r, s)));
      },
      py::arg("r"), py::arg("s"));
  m.def("f4_branching_json", [] {
    return dump_canonical(to_json(oracles::f4_branching_constant()));
  });
  m.def(
      "g2_parity_exhaustive_json",
      [](int genus) {
        return dump_canonical(to_json(oracles::g2_parity_exhaustive(genus)));
      },
      py::arg("genus") = 2);
}
