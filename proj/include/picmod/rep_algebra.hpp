#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "picmod/lie_core.hpp"

namespace picmod {

// Symbolic representation expression.  Index convention is the one fixed
// throughout this project: the standard representation of SL_r has Dynkin
// index 1 and the adjoint representation has index 2 h^vee.  (Some texts
// differ from this normalization by a factor of 2.)
class RepExpr {
 public:
  enum class Kind { Std, Adj, Triv, Dual, Ext, Sym, Tensor, Sum };

  static RepExpr std_rep();
  static RepExpr adj();
  static RepExpr triv();
  static RepExpr dual(RepExpr e);
  static RepExpr ext(long long p, RepExpr e);  // p >= 0; p > dim gives the zero rep
  static RepExpr sym(long long p, RepExpr e);
  static RepExpr tensor(RepExpr l, RepExpr r);
  static RepExpr sum(RepExpr l, RepExpr r);

  Kind kind() const { return kind_; }
  long long power() const { return power_; }
  const RepExpr& lhs() const { return *lhs_; }
  const RepExpr& rhs() const { return *rhs_; }

  std::string to_string() const;

 private:
  RepExpr(Kind k, long long p, std::shared_ptr<const RepExpr> l,
          std::shared_ptr<const RepExpr> r)
      : kind_(k), power_(p), lhs_(std::move(l)), rhs_(std::move(r)) {}

  Kind kind_;
  long long power_ = 0;
  std::shared_ptr<const RepExpr> lhs_, rhs_;
};

// Grammar:  expr := term ('+' term)* ; term := atom ('*' atom)* ;
//           atom := 'std' | 'adj' | 'triv' | 'dual(' expr ')'
//                 | 'ext(' INT ',' expr ')' | 'sym(' INT ',' expr ')'
//                 | '(' expr ')'
// Whitespace-insensitive.  Throws ParseError with position and expected set.
RepExpr parse_rep(const std::string& text);

// Weight multiset: weight vector -> multiplicity.  Total multiplicity is the
// dimension of the representation.
using WeightMultiset = std::map<Vec, Int>;

inline constexpr long long kDefaultDimCap = 1000000;

// Weight multiset of `e` over `rs`.  Every intermediate multiset is kept
// under `dim_cap` (DimensionCapExceeded otherwise).
WeightMultiset weights(const RootSystem& rs, const RepExpr& e,
                       long long dim_cap = kDefaultDimCap);

Int total_multiplicity(const WeightMultiset& w);

Int rep_dim(const RootSystem& rs, const RepExpr& e,
            long long dim_cap = kDefaultDimCap);

// d_rho = (1/2) sum_mu mult(mu) <mu, theta^vee>^2, an exact nonnegative
// integer; additive over Sum, and d(rho (x) rho') = d dim' + dim d'.
Int dynkin_index(const RootSystem& rs, const RepExpr& e,
                 long long dim_cap = kDefaultDimCap);

// Character of the center of the simply connected group on an isotypic
// representation.  residues[i] is the exponent mod orders[i]: generator i
// acts on every weight space by exp(2 pi i residues[i] / orders[i]).
// Center: A_l -> Z/(l+1); B_l, C_l -> Z/2; D_l -> Z/4 (l odd, generated by
// eps) or (Z/2)^2 (l even, generators eps and -1); G2 -> trivial.
struct CenterCharacter {
  std::vector<long long> orders;
  std::vector<long long> residues;
  bool trivial() const;
};

CenterCharacter center_character(const RootSystem& rs, const RepExpr& e,
                                 long long dim_cap = kDefaultDimCap);

}  // namespace picmod
