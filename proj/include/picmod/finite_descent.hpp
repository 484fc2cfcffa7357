#pragma once

#include <string>
#include <vector>

#include "picmod/errors.hpp"

namespace picmod {

// Root of unity exp(2 pi i num/den), stored additively as a reduced rational
// in [0,1).  {+1,-1} = {0, 1/2}.
struct QZ {
  long long num = 0;
  long long den = 1;

  static QZ make(long long n, long long d);
  QZ operator+(const QZ& o) const;
  QZ operator-() const;
  QZ scaled(long long k) const;  // k-fold sum, k may be negative
  bool is_zero() const { return num == 0; }
  long long order() const { return den; }
  bool operator==(const QZ& o) const { return num == o.num && den == o.den; }
  bool operator!=(const QZ& o) const { return !(*this == o); }
  std::string to_string() const;
};

// prod_j Z/orders[j]; elements are residue tuples.
struct FinAbGroup {
  std::vector<long long> orders;

  using Elem = std::vector<long long>;

  std::size_t num_generators() const { return orders.size(); }
  long long size() const;
  long long exponent() const;  // lcm of the orders; 1 for the trivial group
  Elem zero() const { return Elem(orders.size(), 0); }
  Elem generator(std::size_t i) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scaled(long long k, const Elem& a) const;
  bool is_zero(const Elem& a) const;
  Elem element_at(long long index) const;  // mixed-radix decoding
  bool operator==(const FinAbGroup& o) const { return orders == o.orders; }
  std::string name() const;  // e.g. "(Z/2)^2 x (Z/4)^2"
};

// Q/Z-valued bilinear form given by its generator matrix; entry (i,j) must be
// killed by gcd(orders[i], orders[j]).
struct BilinearCocycle {
  FinAbGroup group;
  std::vector<std::vector<QZ>> entries;

  static BilinearCocycle zero(const FinAbGroup& g);
  void validate() const;  // PreconditionViolated on malformed matrices
  QZ eval(const FinAbGroup::Elem& x, const FinAbGroup::Elem& y) const;
};

// Alternating form: zero diagonal, antisymmetric matrix.
struct AlternatingForm {
  FinAbGroup group;
  std::vector<std::vector<QZ>> entries;

  static AlternatingForm zero(const FinAbGroup& g);
  // Builds from the strictly-upper-triangular part; fills the rest.
  static AlternatingForm from_upper(const FinAbGroup& g,
                                    const std::vector<std::vector<QZ>>& upper);
  void validate() const;
  QZ eval(const FinAbGroup::Elem& x, const FinAbGroup::Elem& y) const;
  bool operator==(const AlternatingForm& o) const;
};

// Standard symplectic (Weil) pairing on (Z/r)^{2g}:
// e(x,y) = sum_i (x_{2i-1} y_{2i} - x_{2i} y_{2i-1}) / r  mod 1.
AlternatingForm weil_form(long long r, int genus);

AlternatingForm form_power(const AlternatingForm& e, long long k);
long long form_order(const AlternatingForm& e);
bool is_trivial(const AlternatingForm& e);

// Pullback of a form on (Z/r)^{2g} along the inclusion of the s-torsion,
// x -> (r/s) x.  For the Weil form this realizes the restriction law
// restrict(e_r, s) = e_s^{r/s}.
AlternatingForm restrict_to_torsion(const AlternatingForm& e, long long s);

struct HeisenbergElement {
  FinAbGroup::Elem g;
  QZ t;
};

// (a,t)(b,u) = (a+b, t+u+phi(a,b)); the central extension of phi.group
// attached to the bilinear cocycle phi.
HeisenbergElement heisenberg_multiply(const BilinearCocycle& phi,
                                      const HeisenbergElement& x,
                                      const HeisenbergElement& y);
HeisenbergElement heisenberg_inverse(const BilinearCocycle& phi,
                                     const HeisenbergElement& x);
HeisenbergElement heisenberg_power(const BilinearCocycle& phi,
                                   const HeisenbergElement& x, long long n);

// phi with phi(g_i,g_j) = e(g_i,g_j) for i < j, zero otherwise; its
// commutator form is e.
BilinearCocycle upper_triangular_cocycle(const AlternatingForm& e);
AlternatingForm commutator_form(const BilinearCocycle& phi);

// sigma(alpha)^r for the tautological section sigma(alpha) = (alpha, 0):
// equals C(r,2) phi(alpha,alpha); requires r alpha = 0.  Also evaluates the
// literal r-fold product and checks the two agree.
QZ section_power(const BilinearCocycle& phi, const FinAbGroup::Elem& alpha,
                 long long r);

// For even r with r H = 0: checks eps(a+b) = eps(a) + eps(b) + (r/2) e(a,b)
// exhaustively, where eps(a) = sigma(a)^r and e = commutator form.
bool epsilon_quadratic_check(const BilinearCocycle& phi, long long r);

struct DescentResult {
  bool descends_at_r;
  bool descends_at_2r;  // always true
};

// The descent dichotomy for L^r along the quotient by H, in terms of the
// alternating form of the extension: L^{2r} always descends; L^r descends
// unless r is even and e^{r/2} is nontrivial.  Requires r H = 0 and r e = 0.
DescentResult descent_at_power(const AlternatingForm& e, long long r);

// Independent brute force: builds sigma(alpha)^r by literal multiplication
// for every alpha and reports whether alpha -> sigma(alpha)^r is a group
// homomorphism into Q/Z.  Groups above `enum_cap` elements are rejected.
inline constexpr long long kDefaultEnumCap = 1LL << 16;
bool descent_bruteforce(const BilinearCocycle& phi, long long r,
                        long long enum_cap = kDefaultEnumCap);

// Determinant character of the order-s Hecke fixed-point action: the
// eigenvalues of alpha-tilde are the s-th roots of unity, each with
// multiplicity r/s; returns the sign of (det alpha-tilde)^h as +1/-1.
int hecke_det_character(long long r, long long s, long long h);

// Lemma on the canonical bundle of the Hecke correspondence: K descends to
// the J_s-quotient except if s is even and both h and r/s are odd.
bool canonical_descends(long long r, long long s, long long h);

}  // namespace picmod
