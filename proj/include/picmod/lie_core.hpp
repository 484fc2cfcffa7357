#pragma once

#include <string>
#include <vector>

#include "picmod/errors.hpp"
#include "picmod/rational.hpp"

namespace picmod {

enum class Family { A, B, C, D, G2 };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws InvalidSpec

// Exact root-system datum for the classical families and G2.  The invariant
// form kappa is form_scale * (ambient dot product), normalized so that the
// highest root has kappa-square-length 2.  All coordinates are exact
// rationals.
//
// Ambient realizations: A_l lives in the sum-zero hyperplane of Q^{l+1}
// (roots e_i - e_j), B/C/D_l in Q^l, G2 in the sum-zero plane of Q^3.
struct RootSystem {
  Family family;
  int rank;
  int ambient_dim;
  std::vector<Vec> simple_roots;
  std::vector<Vec> positive_roots;       // sorted by height, simple roots first
  std::vector<Vec> fundamental_weights;  // dual basis to the simple coroots
  Vec highest_root;
  Vec weyl_vector;  // half-sum of positive roots == sum of fundamental weights
  Rat form_scale;

  Rat form(const Vec& x, const Vec& y) const { return form_scale * dot(x, y); }
  // <x, alpha^vee> = 2 kappa(x, alpha) / kappa(alpha, alpha)
  Rat coroot_pairing(const Vec& x, const Vec& alpha) const;

  long long dim_g() const;  // rank + number of roots
  std::string name() const;
};

// Valid ranks: A >= 1, B >= 2, C >= 2, D >= 3, G2 == 2.
// Positive roots are generated by string closure from the simple roots.
RootSystem build_root_system(Family family, int rank);

// <rho, theta^vee> + 1.
long long dual_coxeter(const RootSystem& rs);

// Weyl dimension formula, exact: prod_{alpha>0} kappa(lambda+rho, alpha) /
// kappa(rho, alpha).  `lambda` must be dominant.
Int weyl_dim(const RootSystem& rs, const Vec& lambda);

}  // namespace picmod
