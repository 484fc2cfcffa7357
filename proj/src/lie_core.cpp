#include "picmod/lie_core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace picmod {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2" || s == "G") return Family::G2;
  throw InvalidSpec("unknown family '" + s + "' (expected A, B, C, D or G2)");
}

Rat RootSystem::coroot_pairing(const Vec& x, const Vec& alpha) const {
  return 2 * form(x, alpha) / form(alpha, alpha);
}

long long RootSystem::dim_g() const {
  return rank + 2 * static_cast<long long>(positive_roots.size());
}

std::string RootSystem::name() const {
  if (family == Family::G2) return "G2";
  return family_name(family) + std::to_string(rank);
}

namespace {

Vec basis_vec(int n, int i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<Vec> simple_roots_for(Family f, int l) {
  std::vector<Vec> s;
  switch (f) {
    case Family::A: {
      for (int i = 0; i < l; ++i) {
        Vec v(l + 1, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case Family::B: {
      for (int i = 0; i + 1 < l; ++i) {
        Vec v(l, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(basis_vec(l, l - 1));
      break;
    }
    case Family::C: {
      for (int i = 0; i + 1 < l; ++i) {
        Vec v(l, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      Vec v(l, Rat(0));
      v[l - 1] = 2;
      s.push_back(v);
      break;
    }
    case Family::D: {
      for (int i = 0; i + 1 < l; ++i) {
        Vec v(l, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      Vec v(l, Rat(0));
      v[l - 2] = 1;
      v[l - 1] = 1;
      s.push_back(v);
      break;
    }
    case Family::G2: {
      // Sum-zero plane of Q^3; alpha_1 short, alpha_2 long.
      s.push_back(Vec{Rat(1), Rat(-1), Rat(0)});
      s.push_back(Vec{Rat(-2), Rat(1), Rat(1)});
      break;
    }
  }
  return s;
}

std::vector<Vec> fundamental_weights_for(Family f, int l) {
  std::vector<Vec> w;
  switch (f) {
    case Family::A: {
      // omega_k = sum_{i<=k} e_i - (k/(l+1)) * (e_1+...+e_{l+1})
      for (int k = 1; k <= l; ++k) {
        Vec v(l + 1, Rat(-k) / Rat(l + 1));
        for (int i = 0; i < k; ++i) v[i] += 1;
        w.push_back(v);
      }
      break;
    }
    case Family::B: {
      for (int k = 1; k < l; ++k) {
        Vec v(l, Rat(0));
        for (int i = 0; i < k; ++i) v[i] = 1;
        w.push_back(v);
      }
      w.push_back(Vec(l, Rat(1) / 2));  // spin weight
      break;
    }
    case Family::C: {
      for (int k = 1; k <= l; ++k) {
        Vec v(l, Rat(0));
        for (int i = 0; i < k; ++i) v[i] = 1;
        w.push_back(v);
      }
      break;
    }
    case Family::D: {
      for (int k = 1; k <= l - 2; ++k) {
        Vec v(l, Rat(0));
        for (int i = 0; i < k; ++i) v[i] = 1;
        w.push_back(v);
      }
      Vec vm(l, Rat(1) / 2);
      vm[l - 1] = Rat(-1) / 2;
      w.push_back(vm);                  // omega_{l-1}
      w.push_back(Vec(l, Rat(1) / 2));  // omega_l
      break;
    }
    case Family::G2: {
      w.push_back(Vec{Rat(0), Rat(-1), Rat(1)});   // short fundamental (7-dim rep)
      w.push_back(Vec{Rat(-1), Rat(-1), Rat(2)});  // long fundamental = highest root
      break;
    }
  }
  return w;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw UnsupportedRank("A requires rank >= 1");
      break;
    case Family::B:
      if (rank < 2) throw UnsupportedRank("B requires rank >= 2");
      break;
    case Family::C:
      if (rank < 2) throw UnsupportedRank("C requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw UnsupportedRank("D requires rank >= 3");
      break;
    case Family::G2:
      if (rank != 2) throw UnsupportedRank("G2 requires rank = 2");
      break;
  }

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.simple_roots = simple_roots_for(family, rank);
  rs.ambient_dim = static_cast<int>(rs.simple_roots[0].size());

  // Normalize so the longest root has kappa-square-length 2.
  Rat max_sq = 0;
  for (const auto& a : rs.simple_roots) max_sq = std::max(max_sq, dot(a, a));
  rs.form_scale = Rat(2) / max_sq;

  // Positive roots by string closure: alpha + alpha_i is a root iff
  // p - <alpha, alpha_i^vee> >= 1, where p is the depth of the alpha_i-string
  // below alpha.
  std::set<Vec> pos(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<Vec> layer = rs.simple_roots;
  while (!layer.empty()) {
    std::vector<Vec> next;
    for (const auto& alpha : layer) {
      for (const auto& ai : rs.simple_roots) {
        if (alpha == ai) continue;
        int p = 0;
        Vec down = sub(alpha, ai);
        while (pos.count(down)) {
          ++p;
          down = sub(down, ai);
        }
        Rat n = rs.coroot_pairing(alpha, ai);
        if (Rat(p) - n >= 1) {
          Vec up = add(alpha, ai);
          if (!pos.count(up)) {
            pos.insert(up);
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }

  rs.positive_roots.assign(pos.begin(), pos.end());
  // Sort by height (sum of simple-root coefficients ~ kappa(rho, .) works,
  // but coordinate-sum against the dual of rho is overkill; use the pairing
  // with the Weyl vector once available).  Height via coefficient sum:
  // cheaper to sort by kappa(weyl, alpha) after computing weyl below, so we
  // first compute weyl from the raw set (order does not matter for the sum).
  Vec half_sum(rs.ambient_dim, Rat(0));
  for (const auto& a : rs.positive_roots) half_sum = add(half_sum, a);
  half_sum = scale(Rat(1) / 2, half_sum);
  rs.weyl_vector = half_sum;
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const Vec& x, const Vec& y) {
              Rat hx = rs.form(rs.weyl_vector, x);
              Rat hy = rs.form(rs.weyl_vector, y);
              if (hx != hy) return hx < hy;
              return x < y;
            });

  rs.fundamental_weights = fundamental_weights_for(family, rank);

  // Highest root: the unique dominant long root.
  for (const auto& a : rs.positive_roots) {
    if (rs.form(a, a) != 2) continue;
    bool dominant = true;
    for (const auto& s : rs.simple_roots) {
      if (rs.coroot_pairing(a, s) < 0) {
        dominant = false;
        break;
      }
    }
    if (dominant) rs.highest_root = a;
  }

  return rs;
}

long long dual_coxeter(const RootSystem& rs) {
  Rat h = rs.coroot_pairing(rs.weyl_vector, rs.highest_root) + 1;
  return static_cast<long long>(numerator(h));
}

Int weyl_dim(const RootSystem& rs, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != rs.ambient_dim)
    throw NotDominant("weight has wrong ambient dimension");
  for (const auto& s : rs.simple_roots) {
    if (rs.coroot_pairing(lambda, s) < 0)
      throw NotDominant("weight pairs negatively with a simple coroot");
  }
  Rat prod = 1;
  Vec shifted = add(lambda, rs.weyl_vector);
  for (const auto& a : rs.positive_roots)
    prod *= rs.form(shifted, a) / rs.form(rs.weyl_vector, a);
  if (!is_integer(prod))
    throw NotDominant("Weyl dimension is not an integer for this weight");
  return numerator(prod);
}

}  // namespace picmod
