#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picmod/picard_tables.hpp"
#include "picmod/rep_algebra.hpp"

namespace picmod::oracles {

// Deterministic RNG seed used by every randomized grid below.
inline constexpr std::uint64_t kOracleSeed = 0x9e3779b97f4a7c15ULL;

// Uniformly random alternating form / symmetric bilinear perturbation on a
// group, entries drawn from the full set of admissible values.
AlternatingForm random_alternating_form(const FinAbGroup& g, std::uint64_t& state);
// A random bilinear cocycle with the same commutator form as `e`.
BilinearCocycle random_cocycle_for(const AlternatingForm& e, std::uint64_t& state);

// All alternating forms on a group (matrix entries enumerated exhaustively).
std::vector<AlternatingForm> all_alternating_forms(const FinAbGroup& g);

struct DescentDichotomyReport {
  long long triples_checked = 0;
  long long cocycles_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks descent_at_power == descent_bruteforce over the grid
//   all forms on (Z/2)^2 and (Z/2)^4; all forms on (Z/3)^2 and (Z/4)^2 plus
//   random draws; random forms on (Z/3)^4, (Z/4)^4 and (Z/2)^2 x (Z/4)^2;
//   r in {exponent, 2 exponent}; five re-randomized cocycles per triple.
DescentDichotomyReport verify_descent_dichotomy();

struct GcdGeneratorReport {
  std::string group;
  std::vector<std::string> witness_names;
  std::vector<long long> witness_indices;
  long long d_sigma = 1;
  long long gcd_over_d_sigma = 0;
  long long table_det_unit = 0;
  bool match = false;
};

// Computes the Dynkin indices of the witness representations behind the
// determinantal-subgroup rule (filtered by center-character triviality on
// the quotienting subgroup), forms gcd(d_rho)/d_sigma and compares with the
// degree-0 coarse table entry.  Accepts PGL(r), PSp(2l), PSO(2l), SLmod(r,s).
GcdGeneratorReport verify_gcd_generator(const GroupSpec& spec);

struct RhoPSumReport {
  long long r = 0, s = 0;
  std::vector<long long> indices;  // d_{rho_p}, p = 1..s
  long long weighted_sum = 0;      // sum p * d_{rho_p}
  long long gcd_with_adjoint = 0;  // gcd(2r, d_{rho_1..s})
  long long divisibility_bound = 0;  // s * gcd(2r/s, s)
  bool gcd_divides_bound = false;
};

// rho_p = S^p (x) Lambda^{s-p} of the standard representation of SL_r.
// The weighted sum is reported, not asserted against any closed form; only
// the gcd-divisibility consequence is checked.
RhoPSumReport rho_p_sum_report(long long r, long long s);

struct G2ParityResult {
  int parity = 0;      // h mod 2
  bool isotropic = false;
};

// The parity criterion from the G2 coarse-generator proof: for a
// homomorphism L : (F_2)^3 -> J_2 = (F_2)^{2g}, a quadratic refinement q of
// the mod-2 Weil form and a nontrivial character chi of (F_2)^3,
//   parity = sum_{chi(v) = -1} q(L(v)) mod 2,
//   isotropic = (the Weil form vanishes on L(ker chi)).
// `embedding` maps bitmask v in 0..7 to a 0/1 vector of length 2g (checked
// to be a homomorphism); `q` is the table of q on bitmasks 0..2^{2g}-1
// (checked to refine the symplectic form); `chi_mask` in 1..7 defines
// chi(v) = (-1)^{mask . v}.
G2ParityResult g2_parity_oracle(int genus,
                                const std::vector<std::vector<int>>& embedding,
                                const std::vector<int>& q,
                                int chi_mask);

// Mod-2 symplectic form on (F_2)^{2g} bitmasks (hyperbolic pairs (2i, 2i+1)).
int mod2_symplectic(int x, int y, int genus);

// Builds the quadratic refinement with prescribed values on the basis.
std::vector<int> quadratic_refinement_from_basis(const std::vector<int>& basis_values);

struct G2ParityGridReport {
  long long refinements = 0;
  long long embeddings = 0;
  long long equivalence_checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustive check of (parity even <=> image of ker chi totally isotropic)
// over all quadratic refinements of the mod-2 Weil form on (F_2)^{2g}, all
// homomorphisms (F_2)^3 -> (F_2)^{2g} injective on ker chi, all nontrivial
// characters chi.  Feasible for genus 2 (16 refinements x 4096 maps x 7).
G2ParityGridReport g2_parity_exhaustive(int genus);

struct F4BranchingReport {
  long long restriction_index = 0;   // index of (std F4)|Spin_8
  long long spin8_std_index = 0;     // computed from the D_4 weight system
  long long ratio = 0;               // restriction_index / spin8_std_index
  bool ratio_odd = false;
  bool det_not_divisible_by_2 = false;  // the section-13 conclusion
};

F4BranchingReport f4_branching_constant();

}  // namespace picmod::oracles
