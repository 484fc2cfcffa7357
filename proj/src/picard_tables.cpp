#include "picmod/picard_tables.hpp"

#include <numeric>

namespace picmod {

GroupSpec GroupSpec::sl(int r) { return {GroupFamily::SL, r, 0}; }
GroupSpec GroupSpec::slmod(int r, int s) { return {GroupFamily::SLmod, r, s}; }
GroupSpec GroupSpec::pgl(int r) { return slmod(r, r); }
GroupSpec GroupSpec::sp(int n) { return {GroupFamily::Sp, n, 0}; }
GroupSpec GroupSpec::psp(int n) { return {GroupFamily::PSp, n, 0}; }
GroupSpec GroupSpec::spin(int r) { return {GroupFamily::Spin, r, 0}; }
GroupSpec GroupSpec::so(int r) { return {GroupFamily::SO, r, 0}; }
GroupSpec GroupSpec::pso(int n) { return {GroupFamily::PSO, n, 0}; }
GroupSpec GroupSpec::half_spin(int n) { return {GroupFamily::HalfSpin, n, 0}; }
GroupSpec GroupSpec::g2() { return {GroupFamily::G2, 0, 0}; }

void GroupSpec::validate() const {
  switch (family) {
    case GroupFamily::SL:
      if (param < 2) throw InvalidSpec("SL(r) requires r >= 2");
      return;
    case GroupFamily::SLmod:
      if (param < 2) throw InvalidSpec("SLmod(r,s) requires r >= 2");
      if (mod_s <= 1 || param % mod_s != 0)
        throw InvalidSpec("SLmod(r,s) requires s | r and s > 1");
      return;
    case GroupFamily::Sp:
    case GroupFamily::PSp:
      if (param < 2 || param % 2 != 0)
        throw InvalidSpec("Sp/PSp take an even rank input 2l >= 2");
      return;
    case GroupFamily::Spin:
    case GroupFamily::SO:
      if (param < 3) throw InvalidSpec("Spin/SO require r >= 3");
      return;
    case GroupFamily::PSO:
      if (param < 4 || param % 2 != 0)
        throw InvalidSpec("PSO takes an even rank input 2l with l >= 2");
      return;
    case GroupFamily::HalfSpin:
      if (param < 4 || param % 2 != 0 || (param / 2) % 2 != 0)
        throw InvalidSpec("HalfSpin takes 2l with l even");
      return;
    case GroupFamily::G2:
      return;
  }
}

int GroupSpec::rank() const {
  switch (family) {
    case GroupFamily::SL:
    case GroupFamily::SLmod:
      return param - 1;
    case GroupFamily::Sp:
    case GroupFamily::PSp:
    case GroupFamily::PSO:
    case GroupFamily::HalfSpin:
      return param / 2;
    case GroupFamily::Spin:
    case GroupFamily::SO:
      return param / 2;  // floor, B_l for odd r, D_l for even r
    case GroupFamily::G2:
      return 2;
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::SL: return "SL(" + std::to_string(param) + ")";
    case GroupFamily::SLmod:
      if (is_pgl()) return "PGL(" + std::to_string(param) + ")";
      return "SL(" + std::to_string(param) + ")/mu_" + std::to_string(mod_s);
    case GroupFamily::Sp: return "Sp(" + std::to_string(param) + ")";
    case GroupFamily::PSp: return "PSp(" + std::to_string(param) + ")";
    case GroupFamily::Spin: return "Spin(" + std::to_string(param) + ")";
    case GroupFamily::SO: return "SO(" + std::to_string(param) + ")";
    case GroupFamily::PSO: return "PSO(" + std::to_string(param) + ")";
    case GroupFamily::HalfSpin: return "HalfSpin(" + std::to_string(param) + ")";
    case GroupFamily::G2: return "G2";
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& family, int param, int s) {
  GroupSpec spec;
  if (family == "SL") spec = sl(param);
  else if (family == "SLmod") spec = slmod(param, s);
  else if (family == "PGL") spec = pgl(param);
  else if (family == "Sp") spec = sp(param);
  else if (family == "PSp") spec = psp(param);
  else if (family == "Spin") spec = spin(param);
  else if (family == "SO") spec = so(param);
  else if (family == "PSO") spec = pso(param);
  else if (family == "HalfSpin") spec = half_spin(param);
  else if (family == "G2") spec = g2();
  else throw InvalidSpec("unknown group family '" + family + "'");
  spec.validate();
  return spec;
}

DegreeLabel DegreeLabel::residue(int d) { return {Kind::Residue, d}; }
DegreeLabel DegreeLabel::sign(int w) { return {Kind::Sign, w}; }
DegreeLabel DegreeLabel::trivial() { return {Kind::Trivial, 0}; }

DegreeLabel DegreeLabel::pso_center(const std::string& z) {
  if (z == "1") return {Kind::PsoCenter, 0};
  if (z == "-1") return {Kind::PsoCenter, 1};
  if (z == "eps") return {Kind::PsoCenter, 2};
  if (z == "-eps") return {Kind::PsoCenter, 3};
  throw InvalidDegree("PSO degree must be one of 1, -1, eps, -eps");
}

std::string DegreeLabel::to_string() const {
  switch (kind) {
    case Kind::Residue: return std::to_string(value);
    case Kind::Sign: return value > 0 ? "+1" : "-1";
    case Kind::PsoCenter: {
      static const char* names[] = {"1", "-1", "eps", "-eps"};
      return names[value];
    }
    case Kind::Trivial: return "0";
  }
  return "?";
}

std::vector<DegreeLabel> valid_degrees(const GroupSpec& spec) {
  spec.validate();
  std::vector<DegreeLabel> out;
  switch (spec.family) {
    case GroupFamily::SL:
      for (int d = 0; d < spec.param; ++d) out.push_back(DegreeLabel::residue(d));
      break;
    case GroupFamily::SLmod: {
      // Degree-label validity rule: d must be a multiple of r/s mod r.
      int step = spec.param / spec.mod_s;
      for (int d = 0; d < spec.param; d += step)
        out.push_back(DegreeLabel::residue(d));
      break;
    }
    case GroupFamily::Sp:
    case GroupFamily::PSp:
    case GroupFamily::HalfSpin:
      out.push_back(DegreeLabel::residue(0));
      out.push_back(DegreeLabel::residue(1));
      break;
    case GroupFamily::Spin:
    case GroupFamily::SO:
      out.push_back(DegreeLabel::sign(+1));
      out.push_back(DegreeLabel::sign(-1));
      break;
    case GroupFamily::PSO:
      for (int i = 0; i < 4; ++i) out.push_back(DegreeLabel{DegreeLabel::Kind::PsoCenter, i});
      break;
    case GroupFamily::G2:
      out.push_back(DegreeLabel::trivial());
      break;
  }
  return out;
}

void validate_degree(const GroupSpec& spec, const DegreeLabel& degree) {
  for (const auto& d : valid_degrees(spec))
    if (d == degree) return;
  throw InvalidDegree("degree " + degree.to_string() + " is not valid for " +
                      spec.name());
}

DegreeLabel parse_degree(const GroupSpec& spec, const std::string& text) {
  auto degrees = valid_degrees(spec);
  if (text.empty()) return degrees.front();
  std::string t = text;
  if (t == "ε") t = "eps";
  if (t == "-ε") t = "-eps";
  for (const auto& d : degrees) {
    if (d.to_string() == t) return d;
    if (d.kind == DegreeLabel::Kind::Sign && d.value > 0 && t == "1") return d;
  }
  throw InvalidDegree("cannot parse degree '" + text + "' for " + spec.name());
}

FinAbGroup fundamental_group(const GroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case GroupFamily::SL:
    case GroupFamily::Sp:
    case GroupFamily::Spin:
    case GroupFamily::G2:
      return FinAbGroup{{}};
    case GroupFamily::SLmod:
      return FinAbGroup{{spec.mod_s}};
    case GroupFamily::PSp:
    case GroupFamily::SO:
    case GroupFamily::HalfSpin:
      return FinAbGroup{{2}};
    case GroupFamily::PSO:
      // Center of Spin_2l: eps^2 = (-1)^l, so Z/4 for l odd, (Z/2)^2 for l even.
      if ((spec.param / 2) % 2 == 0) return FinAbGroup{{2, 2}};
      return FinAbGroup{{4}};
  }
  return FinAbGroup{{}};
}

int epsilon_G(const GroupSpec& spec) {
  spec.validate();
  bool adjoint = spec.is_pgl() || spec.family == GroupFamily::PSp ||
                 spec.family == GroupFamily::PSO;
  if (!adjoint)
    throw NotAdjointFamily("epsilon_G is defined for PGL, PSp and PSO only");
  return spec.rank() % 2 == 0 ? 1 : 2;
}

namespace {

const char* kNotePfaffian =
    "free part generated by the pfaffian square root P_kappa; D = P_kappa^2";
const char* kNoteNotDetermined = "not determined by the known results";
const char* kNoteGenus1 =
    "tables proven for coarse spaces assume stability theory; use with care";
const char* kNoteThetaIsDetSquared =
    "det exponent equals twice the theta exponent (theta bundle = D^2)";
const char* kNotePSpConversion =
    "theta exponent from the twisted symplectic rule; det exponent from the "
    "determinantal-subgroup rule; the theta-to-determinant conversion does "
    "not reconcile the two and is left unresolved";

// Type-A1 image test: these groups surject onto PGL_2.
bool maps_onto_pgl2(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::SL:
    case GroupFamily::SLmod:
      return spec.param == 2;
    case GroupFamily::Sp:
    case GroupFamily::PSp:
      return spec.param == 2;
    case GroupFamily::Spin:
    case GroupFamily::SO:
      return spec.param == 3 || spec.param == 4;
    case GroupFamily::PSO:
    case GroupFamily::HalfSpin:
      return spec.param == 4;
    case GroupFamily::G2:
      return false;
  }
  return false;
}

}  // namespace

StackPicard stack_picard(const GroupSpec& spec, const DegreeLabel& degree,
                         int genus) {
  spec.validate();
  validate_degree(spec, degree);
  if (genus < 1) throw PreconditionViolated("genus must be >= 1");

  StackPicard out;
  for (long long o : fundamental_group(spec).orders)
    for (int i = 0; i < 2 * genus; ++i) out.torsion_invariants.push_back(o);

  switch (spec.family) {
    case GroupFamily::SL:
    case GroupFamily::Sp:
    case GroupFamily::Spin:
    case GroupFamily::G2:
      out.det_generator_exponent = 1;
      break;
    case GroupFamily::SO:
      out.det_generator_exponent = 1;
      out.notes.push_back(kNotePfaffian);
      break;
    case GroupFamily::SLmod: {
      long long s = spec.mod_s;
      long long q = spec.param / spec.mod_s;
      out.det_generator_exponent = s / std::gcd(s, q);
      break;
    }
    case GroupFamily::PSp:
    case GroupFamily::PSO:
      out.det_generator_exponent = epsilon_G(spec);
      break;
    case GroupFamily::HalfSpin:
      out.det_generator_exponent = std::nullopt;
      out.notes.push_back(kNoteNotDetermined);
      break;
  }
  return out;
}

CoarsePicard coarse_picard(const GroupSpec& spec, const DegreeLabel& degree,
                           int genus) {
  spec.validate();
  validate_degree(spec, degree);
  if (genus < 1) throw PreconditionViolated("genus must be >= 1");

  CoarsePicard out;
  out.structure = CoarsePicard::Structure::Cyclic;

  switch (spec.family) {
    case GroupFamily::SL: {
      long long r = spec.param;
      long long d = degree.value;
      out.theta_unit_exponent = 1;
      out.det_unit_exponent = r / std::gcd(r, d);
      break;
    }
    case GroupFamily::SLmod: {
      long long r = spec.param;
      long long s = spec.mod_s;
      long long d = degree.value;
      if (spec.is_pgl()) {
        long long delta = std::gcd(r, d);
        long long eps = epsilon_G(spec);
        out.theta_unit_exponent = (r % 2 == 1) ? delta : 2 * delta;
        out.det_unit_exponent = r * eps;
      } else if (d == 0) {
        bool small = (s % 2 == 1) || ((r / s) % 2 == 0);
        out.det_unit_exponent = small ? s : 2 * s;
      } else if (s == 2 && d == r / 2) {
        long long l = r / 2;
        out.theta_unit_exponent = (l % 2 == 0) ? 1 : 2;
        out.det_unit_exponent = 2 * *out.theta_unit_exponent;
        out.notes.push_back(kNoteThetaIsDetSquared);
      } else {
        out.structure = CoarsePicard::Structure::Unknown;
        out.notes.push_back(kNoteNotDetermined);
      }
      break;
    }
    case GroupFamily::Sp:
      if (degree.value == 0) {
        out.det_unit_exponent = 1;
      } else {
        out.theta_unit_exponent = 1;
      }
      break;
    case GroupFamily::PSp: {
      int eps = epsilon_G(spec);
      if (degree.value == 0) {
        out.det_unit_exponent = 2 * eps;
      } else {
        out.theta_unit_exponent = eps;
        out.det_unit_exponent = 2 * eps;
        out.notes.push_back(kNotePSpConversion);
      }
      break;
    }
    case GroupFamily::Spin: {
      int r = spec.param;
      if (r >= 7) {
        out.det_unit_exponent = 1;
      } else if (r == 5 || r == 6) {
        out.notes.push_back("generated by a square root of the determinant bundle");
      } else if (r == 3) {
        out.notes.push_back("generated by a fourth root of the determinant bundle");
      } else {  // r == 4
        out.structure = CoarsePicard::Structure::Rank2Free;
        out.notes.push_back("Picard group is free of rank 2");
      }
      break;
    }
    case GroupFamily::SO:
      out.det_unit_exponent = 1;
      break;
    case GroupFamily::PSO: {
      int eps = epsilon_G(spec);
      if (degree.value <= 1) {  // z = 1 or z = -1
        out.det_unit_exponent = 2 * eps;
      } else {  // z = +-eps
        out.theta_unit_exponent = eps;
        out.det_unit_exponent = 2 * eps;
        out.notes.push_back(kNoteThetaIsDetSquared);
      }
      break;
    }
    case GroupFamily::HalfSpin: {
      int l = spec.param / 2;
      if (l % 4 != 0) {
        out.det_unit_exponent = 2;
      } else if (l == 4) {
        out.det_unit_exponent = 1;
        out.notes.push_back("D descends by the triality automorphism");
      } else {
        out.structure = CoarsePicard::Structure::Unknown;
        out.notes.push_back(kNoteNotDetermined);
      }
      break;
    }
    case GroupFamily::G2:
      out.det_unit_exponent = 1;
      break;
  }

  if (genus == 1) out.notes.push_back(kNoteGenus1);
  return out;
}

std::string structure_name(CoarsePicard::Structure s) {
  switch (s) {
    case CoarsePicard::Structure::Cyclic: return "cyclic";
    case CoarsePicard::Structure::Rank2Free: return "rank2_free";
    case CoarsePicard::Structure::Unknown: return "unknown";
  }
  return "?";
}

PicardReport classify(const GroupSpec& spec, const DegreeLabel& degree,
                      int genus) {
  PicardReport rep;
  rep.spec = spec;
  rep.degree = degree;
  rep.genus = genus;
  rep.components = valid_degrees(spec);
  rep.stack = stack_picard(spec, degree, genus);
  rep.coarse = coarse_picard(spec, degree, genus);
  if (genus == 2 && maps_onto_pgl2(spec))
    rep.caveats.push_back(kCaveatGenus2Pgl2);
  if (spec.family == GroupFamily::Spin && spec.param <= 6)
    rep.caveats.push_back(kCaveatSmallSpin);
  if (spec.family == GroupFamily::PSp && degree.value == 1)
    rep.caveats.push_back(kCaveatPSpTwistedConversion);
  return rep;
}

DescentData descent_form_for(const GroupSpec& spec, const DegreeLabel& degree,
                             int genus) {
  spec.validate();
  validate_degree(spec, degree);
  if (genus < 1) throw PreconditionViolated("genus must be >= 1");

  switch (spec.family) {
    case GroupFamily::SLmod: {
      // E(J_r, L) has form e_r^{-r/gcd(r,d)}; restricted to J_s this is
      // e_s^{-(r/s) (r/gcd(r,d))}.
      long long r = spec.param;
      long long s = spec.mod_s;
      long long delta = std::gcd(r, static_cast<long long>(degree.value));
      long long k = -(r / s) * (r / delta);
      AlternatingForm f = form_power(weil_form(s, genus), k);
      return DescentData{f.group, f, s};
    }
    case GroupFamily::PSp:
      if (degree.value == 0) {
        long long l = spec.param / 2;
        AlternatingForm f = form_power(weil_form(2, genus), l);
        return DescentData{f.group, f, 2};
      }
      throw NoFormKnown(
          "twisted PSp minimality is not governed by a descent form");
    case GroupFamily::PSO:
      if (degree.value <= 1) {
        long long l = spec.param / 2;
        AlternatingForm f = form_power(weil_form(2, genus), l);
        return DescentData{f.group, f, 2};
      }
      throw NoFormKnown("PSO z = +-eps is not governed by a descent form");
    default:
      throw NoFormKnown("no descent form is attached to " + spec.name());
  }
}

}  // namespace picmod
