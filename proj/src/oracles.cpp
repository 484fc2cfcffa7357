#include "picmod/oracles.hpp"

#include <numeric>

namespace picmod::oracles {

namespace {

// splitmix64; deterministic and dependency-free.
std::uint64_t next_rand(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long rand_below(std::uint64_t& state, long long n) {
  return static_cast<long long>(next_rand(state) % static_cast<std::uint64_t>(n));
}

}  // namespace

AlternatingForm random_alternating_form(const FinAbGroup& g, std::uint64_t& state) {
  std::size_t n = g.num_generators();
  std::vector<std::vector<QZ>> upper(n, std::vector<QZ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long long m = std::gcd(g.orders[i], g.orders[j]);
      upper[i][j] = QZ::make(rand_below(state, m), m);
    }
  return AlternatingForm::from_upper(g, upper);
}

BilinearCocycle random_cocycle_for(const AlternatingForm& e, std::uint64_t& state) {
  // upper-triangular representative plus a random symmetric bilinear form,
  // which leaves the commutator form unchanged.
  BilinearCocycle phi = upper_triangular_cocycle(e);
  const auto& g = e.group;
  std::size_t n = g.num_generators();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long long m = std::gcd(g.orders[i], g.orders[j]);
      QZ sym = QZ::make(rand_below(state, m), m);
      phi.entries[i][j] = phi.entries[i][j] + sym;
      if (j != i) phi.entries[j][i] = phi.entries[j][i] + sym;
    }
  phi.validate();
  return phi;
}

std::vector<AlternatingForm> all_alternating_forms(const FinAbGroup& g) {
  std::size_t n = g.num_generators();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<long long> moduli;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      slots.push_back({i, j});
      moduli.push_back(std::gcd(g.orders[i], g.orders[j]));
    }
  long long total = 1;
  for (long long m : moduli) total *= m;
  std::vector<AlternatingForm> out;
  out.reserve(total);
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<std::vector<QZ>> upper(n, std::vector<QZ>(n));
    long long rest = idx;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      upper[slots[k].first][slots[k].second] = QZ::make(rest % moduli[k], moduli[k]);
      rest /= moduli[k];
    }
    out.push_back(AlternatingForm::from_upper(g, upper));
  }
  return out;
}

namespace {

void check_triple(const AlternatingForm& e, long long r, std::uint64_t& state,
                  DescentDichotomyReport& rep) {
  bool expected = descent_at_power(e, r).descends_at_r;
  auto record = [&](bool actual, const std::string& what) {
    ++rep.cocycles_checked;
    if (actual != expected)
      rep.failures.push_back(e.group.name() + ", r=" + std::to_string(r) + ": " + what);
  };
  record(descent_bruteforce(upper_triangular_cocycle(e), r), "upper-triangular cocycle");
  for (int k = 0; k < 5; ++k)
    record(descent_bruteforce(random_cocycle_for(e, state), r),
           "re-randomized cocycle " + std::to_string(k));
  // L^{2r} must always descend.
  if (!descent_bruteforce(upper_triangular_cocycle(e), 2 * r))
    rep.failures.push_back(e.group.name() + ": L^{2r} failed to descend at r=" +
                           std::to_string(r));
  ++rep.triples_checked;
}

}  // namespace

DescentDichotomyReport verify_descent_dichotomy() {
  DescentDichotomyReport rep;
  std::uint64_t state = kOracleSeed;

  auto run_all = [&](const FinAbGroup& g) {
    for (const auto& e : all_alternating_forms(g)) {
      long long ex = g.exponent();
      check_triple(e, ex, state, rep);
      check_triple(e, 2 * ex, state, rep);
    }
  };
  auto run_random = [&](const FinAbGroup& g, int count) {
    for (int i = 0; i < count; ++i) {
      AlternatingForm e = random_alternating_form(g, state);
      long long ex = g.exponent();
      check_triple(e, ex, state, rep);
      check_triple(e, 2 * ex, state, rep);
    }
  };

  run_all(FinAbGroup{{2, 2}});           // 2 forms
  run_all(FinAbGroup{{2, 2, 2, 2}});     // 64 forms
  run_all(FinAbGroup{{3, 3}});           // 3 forms
  run_all(FinAbGroup{{4, 4}});           // 4 forms
  run_random(FinAbGroup{{4, 4}}, 50);
  run_random(FinAbGroup{{3, 3, 3, 3}}, 40);
  run_random(FinAbGroup{{4, 4, 4, 4}}, 25);
  run_random(FinAbGroup{{2, 2, 4, 4}}, 50);
  return rep;
}

namespace {

struct Witness {
  std::string name;
  RepExpr expr;
};

// Character triviality of the center residue tuple on the quotienting
// subgroup A: for A-type, A = mu_s inside mu_r, trivial iff s | residue;
// for the full center, trivial iff every residue vanishes.
bool trivial_on_subgroup_mu_s(const CenterCharacter& c, long long s) {
  return c.residues.size() == 1 && c.residues[0] % s == 0;
}

}  // namespace

GcdGeneratorReport verify_gcd_generator(const GroupSpec& spec) {
  spec.validate();
  GcdGeneratorReport rep;
  rep.group = spec.name();

  Family fam;
  int rank;
  long long quotient_s = 0;  // mu_s for type A; 0 means "full center"
  std::vector<Witness> witnesses;
  switch (spec.family) {
    case GroupFamily::SLmod: {
      fam = Family::A;
      rank = spec.param - 1;
      quotient_s = spec.mod_s;
      witnesses.push_back({"adj", RepExpr::adj()});
      if (spec.is_pgl()) {
        witnesses.push_back(
            {"sym(2,std)*ext(" + std::to_string(spec.param - 2) + ",std)",
             RepExpr::tensor(RepExpr::sym(2, RepExpr::std_rep()),
                             RepExpr::ext(spec.param - 2, RepExpr::std_rep()))});
      } else {
        for (int p = 1; p <= spec.mod_s; ++p)
          witnesses.push_back(
              {"sym(" + std::to_string(p) + ",std)*ext(" +
                   std::to_string(spec.mod_s - p) + ",std)",
               RepExpr::tensor(RepExpr::sym(p, RepExpr::std_rep()),
                               RepExpr::ext(spec.mod_s - p, RepExpr::std_rep()))});
      }
      rep.d_sigma = 1;
      break;
    }
    case GroupFamily::PSp:
      fam = Family::C;
      rank = spec.param / 2;
      witnesses.push_back({"adj", RepExpr::adj()});
      witnesses.push_back({"ext(2,std)", RepExpr::ext(2, RepExpr::std_rep())});
      rep.d_sigma = 1;
      break;
    case GroupFamily::PSO:
      if (spec.param == 4) {
        // D_2 = A_1 x A_1 is not a simple root system; compute the witness
        // indices by restricting to one SL_2 factor: std(SO_4) = (2,2)
        // restricts to std + std, Ad = (3,1)+(1,3) to adj + 3 triv,
        // S^2(std) = (3,3)+(1,1) to S^2 + S^2 + std (x) std.
        fam = Family::A;
        rank = 1;
        auto triv3 = RepExpr::sum(RepExpr::triv(),
                                  RepExpr::sum(RepExpr::triv(), RepExpr::triv()));
        witnesses.push_back({"adj", RepExpr::sum(RepExpr::adj(), triv3)});
        witnesses.push_back(
            {"sym(2,std)",
             RepExpr::sum(RepExpr::sym(2, RepExpr::std_rep()),
                          RepExpr::sum(RepExpr::sym(2, RepExpr::std_rep()),
                                       RepExpr::tensor(RepExpr::std_rep(),
                                                       RepExpr::std_rep())))});
        rep.d_sigma = 2;
        break;
      }
      fam = Family::D;
      rank = spec.param / 2;
      witnesses.push_back({"adj", RepExpr::adj()});
      witnesses.push_back({"sym(2,std)", RepExpr::sym(2, RepExpr::std_rep())});
      rep.d_sigma = 2;  // Dynkin index of the standard representation of SO_2l
      break;
    default:
      throw InvalidSpec(
          "verify_gcd_generator accepts PGL, PSp, PSO and SLmod specs");
  }

  RootSystem rs = build_root_system(fam, rank);
  long long g = 0;
  for (const auto& w : witnesses) {
    CenterCharacter c = center_character(rs, w.expr);
    bool trivial = quotient_s > 0 ? trivial_on_subgroup_mu_s(c, quotient_s)
                                  : c.trivial();
    if (!trivial) continue;  // witness does not factor through the quotient
    long long d = static_cast<long long>(dynkin_index(rs, w.expr));
    rep.witness_names.push_back(w.name);
    rep.witness_indices.push_back(d);
    g = std::gcd(g, d);
  }
  rep.gcd_over_d_sigma = g / rep.d_sigma;

  DegreeLabel zero = spec.family == GroupFamily::PSO
                         ? DegreeLabel::pso_center("1")
                         : DegreeLabel::residue(0);
  CoarsePicard table = coarse_picard(spec, zero, 2);
  rep.table_det_unit = table.det_unit_exponent.value_or(0);
  rep.match = rep.gcd_over_d_sigma == rep.table_det_unit;
  return rep;
}

RhoPSumReport rho_p_sum_report(long long r, long long s) {
  if (r < 2 || s < 1 || r % s != 0)
    throw InvalidSpec("rho_p sum needs s | r, r >= 2");
  RhoPSumReport rep;
  rep.r = r;
  rep.s = s;
  RootSystem rs = build_root_system(Family::A, static_cast<int>(r - 1));
  long long g = 2 * r;  // adjoint index
  for (long long p = 1; p <= s; ++p) {
    RepExpr rho_p = RepExpr::tensor(RepExpr::sym(p, RepExpr::std_rep()),
                                    RepExpr::ext(s - p, RepExpr::std_rep()));
    long long d = static_cast<long long>(dynkin_index(rs, rho_p));
    rep.indices.push_back(d);
    rep.weighted_sum += p * d;
    g = std::gcd(g, d);
  }
  rep.gcd_with_adjoint = g;
  rep.divisibility_bound = s * std::gcd(2 * r / s, s);
  rep.gcd_divides_bound = rep.divisibility_bound % g == 0;
  return rep;
}

int mod2_symplectic(int x, int y, int genus) {
  int v = 0;
  for (int i = 0; i < genus; ++i) {
    int x1 = (x >> (2 * i)) & 1, x2 = (x >> (2 * i + 1)) & 1;
    int y1 = (y >> (2 * i)) & 1, y2 = (y >> (2 * i + 1)) & 1;
    v ^= (x1 & y2) ^ (x2 & y1);
  }
  return v;
}

std::vector<int> quadratic_refinement_from_basis(const std::vector<int>& basis_values) {
  int dim = static_cast<int>(basis_values.size());
  int genus = dim / 2;
  if (dim % 2 != 0)
    throw NotQuadraticRefinement("basis value table must have even length");
  std::vector<int> q(1 << dim, 0);
  for (int x = 1; x < (1 << dim); ++x) {
    int low = x & (-x);
    int bit = 0;
    while (!((low >> bit) & 1)) ++bit;
    int rest = x ^ low;
    q[x] = (q[rest] ^ basis_values[bit] ^ mod2_symplectic(rest, low, genus)) & 1;
  }
  return q;
}

G2ParityResult g2_parity_oracle(int genus,
                                const std::vector<std::vector<int>>& embedding,
                                const std::vector<int>& q, int chi_mask) {
  int dim = 2 * genus;
  if (embedding.size() != 8)
    throw NotHomomorphism("embedding table must list all 8 elements of (F_2)^3");
  for (const auto& img : embedding)
    if (static_cast<int>(img.size()) != dim)
      throw NotHomomorphism("embedding image has wrong length");
  auto img_mask = [&](int v) {
    int m = 0;
    for (int b = 0; b < dim; ++b)
      if (embedding[v][b] & 1) m |= 1 << b;
    return m;
  };
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      if (img_mask(u ^ v) != (img_mask(u) ^ img_mask(v)))
        throw NotHomomorphism("embedding is not a homomorphism");

  if (static_cast<int>(q.size()) != (1 << dim))
    throw NotQuadraticRefinement("q table must have 2^{2g} entries");
  for (int x = 0; x < (1 << dim); ++x)
    for (int y = 0; y < (1 << dim); ++y)
      if (((q[x ^ y] ^ q[x] ^ q[y]) & 1) != mod2_symplectic(x, y, genus))
        throw NotQuadraticRefinement("q does not refine the mod-2 Weil form");

  if (chi_mask < 1 || chi_mask > 7)
    throw PreconditionViolated("chi must be a nontrivial character of (F_2)^3");

  G2ParityResult res;
  int parity = 0;
  for (int v = 0; v < 8; ++v)
    if (__builtin_popcount(chi_mask & v) % 2 == 1) parity ^= q[img_mask(v)] & 1;
  res.parity = parity;

  res.isotropic = true;
  for (int u = 0; u < 8; ++u) {
    if (__builtin_popcount(chi_mask & u) % 2 != 0) continue;
    for (int v = 0; v < 8; ++v) {
      if (__builtin_popcount(chi_mask & v) % 2 != 0) continue;
      if (mod2_symplectic(img_mask(u), img_mask(v), genus)) res.isotropic = false;
    }
  }
  return res;
}

G2ParityGridReport g2_parity_exhaustive(int genus) {
  if (genus < 1 || genus > 3)
    throw PreconditionViolated("exhaustive G2 parity grid supports genus 1..3");
  int dim = 2 * genus;
  G2ParityGridReport rep;

  // all quadratic refinements, parameterized by their basis values
  std::vector<std::vector<int>> refinements;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    std::vector<int> basis(dim);
    for (int b = 0; b < dim; ++b) basis[b] = (mask >> b) & 1;
    refinements.push_back(quadratic_refinement_from_basis(basis));
  }
  rep.refinements = static_cast<long long>(refinements.size());

  // all homomorphisms, given by the images of the three generators
  for (int i0 = 0; i0 < (1 << dim); ++i0)
    for (int i1 = 0; i1 < (1 << dim); ++i1)
      for (int i2 = 0; i2 < (1 << dim); ++i2) {
        ++rep.embeddings;
        std::vector<std::vector<int>> emb(8, std::vector<int>(dim));
        for (int v = 0; v < 8; ++v) {
          int m = 0;
          if (v & 1) m ^= i0;
          if (v & 2) m ^= i1;
          if (v & 4) m ^= i2;
          for (int b = 0; b < dim; ++b) emb[v][b] = (m >> b) & 1;
        }
        for (int chi = 1; chi < 8; ++chi) {
          // injectivity on ker chi
          bool injective = true;
          for (int u = 0; u < 8; ++u) {
            if (u == 0 || __builtin_popcount(chi & u) % 2 != 0) continue;
            bool zero = true;
            for (int b = 0; b < dim; ++b)
              if (emb[u][b]) zero = false;
            if (zero) injective = false;
          }
          if (!injective) continue;
          for (const auto& q : refinements) {
            auto res = g2_parity_oracle(genus, emb, q, chi);
            ++rep.equivalence_checks;
            if ((res.parity == 0) != res.isotropic)
              rep.failures.push_back("gens (" + std::to_string(i0) + "," +
                                     std::to_string(i1) + "," + std::to_string(i2) +
                                     "), chi=" + std::to_string(chi));
          }
        }
      }
  return rep;
}

F4BranchingReport f4_branching_constant() {
  F4BranchingReport rep;
  rep.restriction_index = kF4RestrictionToSpin8Index;
  RootSystem d4 = build_root_system(Family::D, 4);
  rep.spin8_std_index = static_cast<long long>(dynkin_index(d4, RepExpr::std_rep()));
  rep.ratio = rep.restriction_index / rep.spin8_std_index;
  rep.ratio_odd = rep.ratio % 2 != 0;
  rep.det_not_divisible_by_2 = rep.ratio_odd;
  return rep;
}

}  // namespace picmod::oracles
