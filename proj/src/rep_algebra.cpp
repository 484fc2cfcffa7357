#include "picmod/rep_algebra.hpp"

#include <algorithm>

namespace picmod {

RepExpr RepExpr::std_rep() { return RepExpr(Kind::Std, 0, nullptr, nullptr); }
RepExpr RepExpr::adj() { return RepExpr(Kind::Adj, 0, nullptr, nullptr); }
RepExpr RepExpr::triv() { return RepExpr(Kind::Triv, 0, nullptr, nullptr); }

RepExpr RepExpr::dual(RepExpr e) {
  return RepExpr(Kind::Dual, 0, std::make_shared<RepExpr>(std::move(e)), nullptr);
}

RepExpr RepExpr::ext(long long p, RepExpr e) {
  if (p < 0) throw InvalidSpec("ext power must be >= 0");
  return RepExpr(Kind::Ext, p, std::make_shared<RepExpr>(std::move(e)), nullptr);
}

RepExpr RepExpr::sym(long long p, RepExpr e) {
  if (p < 0) throw InvalidSpec("sym power must be >= 0");
  return RepExpr(Kind::Sym, p, std::make_shared<RepExpr>(std::move(e)), nullptr);
}

RepExpr RepExpr::tensor(RepExpr l, RepExpr r) {
  return RepExpr(Kind::Tensor, 0, std::make_shared<RepExpr>(std::move(l)),
                 std::make_shared<RepExpr>(std::move(r)));
}

RepExpr RepExpr::sum(RepExpr l, RepExpr r) {
  return RepExpr(Kind::Sum, 0, std::make_shared<RepExpr>(std::move(l)),
                 std::make_shared<RepExpr>(std::move(r)));
}

std::string RepExpr::to_string() const {
  switch (kind_) {
    case Kind::Std: return "std";
    case Kind::Adj: return "adj";
    case Kind::Triv: return "triv";
    case Kind::Dual: return "dual(" + lhs_->to_string() + ")";
    case Kind::Ext:
      return "ext(" + std::to_string(power_) + "," + lhs_->to_string() + ")";
    case Kind::Sym:
      return "sym(" + std::to_string(power_) + "," + lhs_->to_string() + ")";
    case Kind::Tensor: return lhs_->to_string() + "*" + rhs_->to_string();
    case Kind::Sum: return lhs_->to_string() + "+" + rhs_->to_string();
  }
  return "?";
}

namespace {

void check_cap(const Int& dim, long long cap) {
  if (dim > cap)
    throw DimensionCapExceeded("intermediate dimension " + dim.str() +
                               " exceeds cap " + std::to_string(cap));
}

WeightMultiset std_weights(const RootSystem& rs) {
  WeightMultiset w;
  switch (rs.family) {
    case Family::A: {
      // Weights of the (l+1)-dimensional representation, projected to the
      // sum-zero hyperplane.
      int n = rs.rank + 1;
      for (int i = 0; i < n; ++i) {
        Vec v(n, Rat(-1) / Rat(n));
        v[i] += 1;
        w[v] += 1;
      }
      break;
    }
    case Family::B: {
      int l = rs.rank;
      for (int i = 0; i < l; ++i) {
        Vec v(l, Rat(0));
        v[i] = 1;
        w[v] += 1;
        v[i] = -1;
        w[v] += 1;
      }
      w[Vec(l, Rat(0))] += 1;
      break;
    }
    case Family::C:
    case Family::D: {
      int l = rs.rank;
      for (int i = 0; i < l; ++i) {
        Vec v(l, Rat(0));
        v[i] = 1;
        w[v] += 1;
        v[i] = -1;
        w[v] += 1;
      }
      break;
    }
    case Family::G2: {
      // 7-dimensional representation: the six short roots and zero.
      for (const auto& a : rs.positive_roots) {
        if (rs.form(a, a) != 2) {
          w[a] += 1;
          w[negate(a)] += 1;
        }
      }
      w[Vec(rs.ambient_dim, Rat(0))] += 1;
      break;
    }
  }
  return w;
}

WeightMultiset adj_weights(const RootSystem& rs) {
  WeightMultiset w;
  for (const auto& a : rs.positive_roots) {
    w[a] += 1;
    w[negate(a)] += 1;
  }
  w[Vec(rs.ambient_dim, Rat(0))] += rs.rank;
  return w;
}

// Lambda^p / S^p of a multiset via item-by-item DP.  For each distinct weight
// of multiplicity m we may take j copies; ext allows j <= m with C(m, j)
// ways, sym allows any j with C(m+j-1, j) ways.
WeightMultiset power_weights(const WeightMultiset& base, long long p, bool ext,
                             int ambient, long long cap) {
  std::vector<WeightMultiset> dp(p + 1);
  dp[0][Vec(ambient, Rat(0))] = 1;
  for (const auto& [wt, mult] : base) {
    long long m = static_cast<long long>(mult);
    for (long long k = p; k >= 1; --k) {
      WeightMultiset updated = dp[k];
      long long jmax = ext ? std::min(k, m) : k;
      for (long long j = 1; j <= jmax; ++j) {
        Int ways = ext ? binomial(m, j) : binomial(m + j - 1, j);
        for (const auto& [w0, c0] : dp[k - j]) {
          Vec shifted = add(w0, scale(Rat(j), wt));
          updated[shifted] += c0 * ways;
        }
      }
      dp[k] = std::move(updated);
      check_cap(total_multiplicity(dp[k]), cap);
    }
  }
  return dp[p];
}

}  // namespace

Int total_multiplicity(const WeightMultiset& w) {
  Int t = 0;
  for (const auto& [_, m] : w) t += m;
  return t;
}

WeightMultiset weights(const RootSystem& rs, const RepExpr& e, long long dim_cap) {
  switch (e.kind()) {
    case RepExpr::Kind::Std:
      return std_weights(rs);
    case RepExpr::Kind::Adj:
      return adj_weights(rs);
    case RepExpr::Kind::Triv: {
      WeightMultiset w;
      w[Vec(rs.ambient_dim, Rat(0))] = 1;
      return w;
    }
    case RepExpr::Kind::Dual: {
      WeightMultiset in = weights(rs, e.lhs(), dim_cap);
      WeightMultiset out;
      for (const auto& [wt, m] : in) out[negate(wt)] += m;
      return out;
    }
    case RepExpr::Kind::Ext:
    case RepExpr::Kind::Sym: {
      if (e.power() == 0) {
        WeightMultiset w;
        w[Vec(rs.ambient_dim, Rat(0))] = 1;
        return w;
      }
      bool ext = e.kind() == RepExpr::Kind::Ext;
      WeightMultiset base = weights(rs, e.lhs(), dim_cap);
      long long n = static_cast<long long>(total_multiplicity(base));
      Int expected = ext ? binomial(n, e.power()) : binomial(n + e.power() - 1, e.power());
      check_cap(expected, dim_cap);
      WeightMultiset out = power_weights(base, e.power(), ext, rs.ambient_dim, dim_cap);
      if (total_multiplicity(out) != expected)
        throw NonIntegralIndex("internal error: power dimension mismatch");
      return out;
    }
    case RepExpr::Kind::Tensor: {
      WeightMultiset a = weights(rs, e.lhs(), dim_cap);
      WeightMultiset b = weights(rs, e.rhs(), dim_cap);
      check_cap(total_multiplicity(a) * total_multiplicity(b), dim_cap);
      WeightMultiset out;
      for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) out[add(wa, wb)] += ma * mb;
      return out;
    }
    case RepExpr::Kind::Sum: {
      WeightMultiset out = weights(rs, e.lhs(), dim_cap);
      WeightMultiset b = weights(rs, e.rhs(), dim_cap);
      for (const auto& [wb, mb] : b) out[wb] += mb;
      check_cap(total_multiplicity(out), dim_cap);
      return out;
    }
  }
  throw InvalidSpec("unreachable rep kind");
}

Int rep_dim(const RootSystem& rs, const RepExpr& e, long long dim_cap) {
  return total_multiplicity(weights(rs, e, dim_cap));
}

Int dynkin_index(const RootSystem& rs, const RepExpr& e, long long dim_cap) {
  WeightMultiset w = weights(rs, e, dim_cap);
  // <mu, theta^vee> = kappa(mu, theta) since kappa(theta, theta) = 2.
  Rat sum = 0;
  for (const auto& [wt, m] : w) {
    Rat c = rs.form(wt, rs.highest_root);
    sum += Rat(m) * c * c;
  }
  Rat d = sum / 2;
  if (!is_integer(d))
    throw NonIntegralIndex("half coroot trace is not an integer: " +
                           d.str());
  return numerator(d);
}

bool CenterCharacter::trivial() const {
  for (auto r : residues)
    if (r != 0) return false;
  return true;
}

namespace {

// Center generators as rational coweight vectors x: the generator acts on a
// weight mu by exp(2 pi i (mu . x)), ambient dot product.
struct CenterGen {
  long long order;
  Vec x;
};

std::vector<CenterGen> center_generators(const RootSystem& rs) {
  std::vector<CenterGen> gens;
  switch (rs.family) {
    case Family::A: {
      int n = rs.rank + 1;
      Vec x(n, Rat(1) / Rat(n));
      x[0] = Rat(-(n - 1)) / Rat(n);
      gens.push_back({n, x});
      break;
    }
    case Family::B:
      gens.push_back({2, [&] {
                        Vec x(rs.rank, Rat(0));
                        x[0] = 1;
                        return x;
                      }()});
      break;
    case Family::C:
      gens.push_back({2, Vec(rs.rank, Rat(1) / 2)});
      break;
    case Family::D: {
      // eps = exp(2 pi i (1/2,...,1/2)); -1 = exp(2 pi i e_1) = eps^2 if l odd.
      if (rs.rank % 2 == 0) {
        gens.push_back({2, Vec(rs.rank, Rat(1) / 2)});
        gens.push_back({2, [&] {
                          Vec x(rs.rank, Rat(0));
                          x[0] = 1;
                          return x;
                        }()});
      } else {
        gens.push_back({4, Vec(rs.rank, Rat(1) / 2)});
      }
      break;
    }
    case Family::G2:
      break;
  }
  return gens;
}

}  // namespace

CenterCharacter center_character(const RootSystem& rs, const RepExpr& e,
                                 long long dim_cap) {
  WeightMultiset w = weights(rs, e, dim_cap);
  CenterCharacter out;
  for (const auto& gen : center_generators(rs)) {
    out.orders.push_back(gen.order);
    bool have = false;
    Rat common;
    for (const auto& [wt, m] : w) {
      (void)m;
      Rat v = dot(wt, gen.x);
      // reduce mod 1
      Int fl = numerator(v) / denominator(v);
      if (v < 0 && fl * denominator(v) != numerator(v)) fl -= 1;
      v -= Rat(fl);
      if (!have) {
        common = v;
        have = true;
      } else if (v != common) {
        throw NotIsotypic("weights transform differently under the center of " +
                          rs.name());
      }
    }
    Rat res = have ? Rat(gen.order) * common : Rat(0);
    if (!is_integer(res))
      throw NotIsotypic("center value of unexpected order on " + rs.name());
    out.residues.push_back(static_cast<long long>(numerator(res)) % gen.order);
  }
  return out;
}

}  // namespace picmod
