#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picmod/finite_descent.hpp"

namespace picmod {

// Which quotient of which simply connected group.  PGL_r is SLmod(r, r).
enum class GroupFamily { SL, SLmod, Sp, PSp, Spin, SO, PSO, HalfSpin, G2 };

struct GroupSpec {
  GroupFamily family = GroupFamily::SL;
  int param = 0;  // r for SL/SLmod/Spin/SO; 2l for Sp/PSp/PSO/HalfSpin
  int mod_s = 0;  // SLmod only: s | r, s > 1

  static GroupSpec sl(int r);
  static GroupSpec slmod(int r, int s);
  static GroupSpec pgl(int r);  // = slmod(r, r)
  static GroupSpec sp(int two_l);
  static GroupSpec psp(int two_l);
  static GroupSpec spin(int r);
  static GroupSpec so(int r);
  static GroupSpec pso(int two_l);
  static GroupSpec half_spin(int two_l);  // l even
  static GroupSpec g2();

  void validate() const;  // InvalidSpec
  bool is_pgl() const { return family == GroupFamily::SLmod && mod_s == param; }
  int rank() const;  // Lie rank of the group
  std::string name() const;

  // Parses "SL", "SLmod", "PGL", "Sp", "PSp", "Spin", "SO", "PSO",
  // "HalfSpin", "G2" together with param (and s for SLmod).
  static GroupSpec parse(const std::string& family, int param, int s);
};

// Degree label delta in pi_1(G) (for quotient groups: a genuine connected
// component; for simply connected groups: the label of the twisted stack).
struct DegreeLabel {
  enum class Kind { Residue, Sign, PsoCenter, Trivial };
  Kind kind = Kind::Trivial;
  int value = 0;  // Residue: d; Sign: +1/-1; PsoCenter: 0..3 = {1,-1,eps,-eps}

  std::string to_string() const;
  bool operator==(const DegreeLabel& o) const {
    return kind == o.kind && value == o.value;
  }

  static DegreeLabel residue(int d);
  static DegreeLabel sign(int w);
  static DegreeLabel pso_center(const std::string& z);  // "1","-1","eps","-eps"
  static DegreeLabel trivial();
};

// All valid degree labels for the spec, in canonical order.
std::vector<DegreeLabel> valid_degrees(const GroupSpec& spec);

// Throws InvalidDegree unless the label is valid for the spec.
void validate_degree(const GroupSpec& spec, const DegreeLabel& degree);

// Parses a CLI degree string ("0", "3", "+1", "-1", "1", "eps", "-eps", "");
// empty selects the first valid label.
DegreeLabel parse_degree(const GroupSpec& spec, const std::string& text);

// pi_1(G) as an abstract finite abelian group.
FinAbGroup fundamental_group(const GroupSpec& spec);

// 1 if the rank of the adjoint group is even, 2 if odd; only for
// PGL/PSp/PSO (NotAdjointFamily otherwise).
int epsilon_G(const GroupSpec& spec);

struct StackPicard {
  std::vector<long long> torsion_invariants;  // pi_1 orders, each 2g times
  std::optional<long long> det_generator_exponent;
  std::vector<std::string> notes;
};

struct CoarsePicard {
  enum class Structure { Cyclic, Rank2Free, Unknown };
  Structure structure = Structure::Cyclic;
  std::optional<long long> theta_unit_exponent;
  std::optional<long long> det_unit_exponent;
  std::vector<std::string> notes;
};

std::string structure_name(CoarsePicard::Structure s);

struct PicardReport {
  GroupSpec spec;
  DegreeLabel degree;
  int genus = 2;
  std::vector<DegreeLabel> components;
  StackPicard stack;
  CoarsePicard coarse;
  std::vector<std::string> caveats;
};

// Caveat flag ids.
inline constexpr const char* kCaveatGenus2Pgl2 = "genus2_pgl2";
inline constexpr const char* kCaveatSmallSpin = "small_spin";
inline constexpr const char* kCaveatPSpTwistedConversion = "psp_twisted_conversion";

StackPicard stack_picard(const GroupSpec& spec, const DegreeLabel& degree,
                         int genus);
CoarsePicard coarse_picard(const GroupSpec& spec, const DegreeLabel& degree,
                           int genus);
PicardReport classify(const GroupSpec& spec, const DegreeLabel& degree,
                      int genus);

// The finite group acting on the simply connected moduli space and the
// alternating form of the corresponding extension, for the cases governed
// by the form calculus (SLmod/PGL any degree; PSp degree 0; PSO z = +-1).
// `test_exponent` is the exponent of the acting group, the natural level at
// which to run descent_at_power.
struct DescentData {
  FinAbGroup group;
  AlternatingForm form;
  long long test_exponent;
};

DescentData descent_form_for(const GroupSpec& spec, const DegreeLabel& degree,
                             int genus);  // NoFormKnown when unavailable

// The one exceptional-group datum used here: Dynkin index of the restriction
// to Spin_8 of the 26-dimensional standard representation of F4.
inline constexpr long long kF4RestrictionToSpin8Index = 6;

}  // namespace picmod
