#include <doctest.h>

#include <cstdint>

#include "picmod/rep_algebra.hpp"

using namespace picmod;

namespace {

RepExpr rp(const std::string& s) { return parse_rep(s); }

long long index_of(const RootSystem& rs, const std::string& s) {
  return static_cast<long long>(dynkin_index(rs, rp(s)));
}

long long dim_of(const RootSystem& rs, const std::string& s) {
  return static_cast<long long>(rep_dim(rs, rp(s)));
}

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("standard weight multisets") {
  RootSystem c2 = build_root_system(Family::C, 2);
  WeightMultiset w = weights(c2, rp("std"));
  CHECK(w.size() == 4);
  CHECK(total_multiplicity(w) == 4);
  CHECK(w.count(Vec{Rat(1), Rat(0)}) == 1);
  CHECK(w.count(Vec{Rat(-1), Rat(0)}) == 1);
  CHECK(w.count(Vec{Rat(0), Rat(1)}) == 1);
  CHECK(w.count(Vec{Rat(0), Rat(-1)}) == 1);

  RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(dim_of(b3, "std") == 7);
  CHECK(weights(b3, rp("std")).count(Vec{Rat(0), Rat(0), Rat(0)}) == 1);

  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(dim_of(g2, "std") == 7);

  RootSystem a3 = build_root_system(Family::A, 3);
  CHECK(dim_of(a3, "ext(2,std)") == 6);
  CHECK(Int(6) == weyl_dim(a3, a3.fundamental_weights[1]));
}

TEST_CASE("dimensions agree with the Weyl dimension formula for irreducibles") {
  for (int l = 1; l <= 6; ++l) {
    RootSystem rs = build_root_system(Family::A, l);
    CHECK(rep_dim(rs, rp("std")) == weyl_dim(rs, rs.fundamental_weights[0]));
    CHECK(rep_dim(rs, rp("adj")) == weyl_dim(rs, rs.highest_root));
    for (int p = 1; p <= l; ++p)
      CHECK(rep_dim(rs, RepExpr::ext(p, RepExpr::std_rep())) ==
            weyl_dim(rs, rs.fundamental_weights[p - 1]));
    CHECK(rep_dim(rs, rp("sym(2,std)")) ==
          weyl_dim(rs, scale(Rat(2), rs.fundamental_weights[0])));
  }
  for (int l = 2; l <= 5; ++l) {
    RootSystem rs = build_root_system(Family::C, l);
    CHECK(rep_dim(rs, rp("std")) == weyl_dim(rs, rs.fundamental_weights[0]));
    // adjoint of C_l is Sym^2 of the standard representation
    CHECK(rep_dim(rs, rp("adj")) == weyl_dim(rs, rs.highest_root));
    CHECK(rep_dim(rs, rp("sym(2,std)")) == weyl_dim(rs, rs.highest_root));
  }
}

TEST_CASE("Dynkin indices: values quoted for the classical families") {
  for (int r = 2; r <= 8; ++r) {
    RootSystem rs = build_root_system(Family::A, r - 1);
    CHECK(index_of(rs, "std") == 1);
    CHECK(index_of(rs, "adj") == 2 * r);
  }
  for (int l = 2; l <= 6; ++l) {
    RootSystem rs = build_root_system(Family::C, l);
    CHECK(index_of(rs, "std") == 1);
    CHECK(index_of(rs, "ext(2,std)") == 2 * l - 2);
    CHECK(index_of(rs, "adj") == 2 * l + 2);
  }
  for (int l = 3; l <= 6; ++l) {
    RootSystem rs = build_root_system(Family::D, l);
    CHECK(index_of(rs, "std") == 2);
    CHECK(index_of(rs, "adj") == 2 * (2 * l - 2));
    CHECK(index_of(rs, "sym(2,std)") == 2 * (2 * l + 2));
  }
  for (int r = 3; r <= 7; ++r) {
    RootSystem rs = build_root_system(Family::A, r - 1);
    RepExpr rho = RepExpr::tensor(RepExpr::sym(2, RepExpr::std_rep()),
                                  RepExpr::ext(r - 2, RepExpr::std_rep()));
    CHECK(dynkin_index(rs, rho) == Int(r) * r * r - 2 * r);
  }
  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(index_of(g2, "std") == 2);
  CHECK(index_of(g2, "adj") == 8);
}

TEST_CASE("A5 Sym^3(std): independent monomial-weight enumeration gives 36") {
  // Oracle: the 56 weights of S^3(C^6) are e_i+e_j+e_k with i<=j<=k; the
  // coroot trace against theta = e_1 - e_6 only sees coordinates 1 and 6
  // (the sum-zero projection drops out of the pairing with a root).
  long long trace = 0, count = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      for (int k = j; k < 6; ++k) {
        long long c = 0;
        for (int x : {i, j, k}) {
          if (x == 0) ++c;
          if (x == 5) --c;
        }
        trace += c * c;
        ++count;
      }
  CHECK(count == 56);
  CHECK(trace == 72);
  RootSystem a5 = build_root_system(Family::A, 5);
  CHECK(index_of(a5, "sym(3,std)") == trace / 2);
  CHECK(index_of(a5, "sym(3,std)") == 36);
}

TEST_CASE("index bilinearity on random pairs") {
  std::vector<std::string> pool = {"std",        "adj",        "triv",
                                   "ext(2,std)", "sym(2,std)", "dual(std)",
                                   "std+triv",   "sym(3,std)"};
  std::uint64_t state = 12345;
  for (Family f : {Family::A, Family::C}) {
    RootSystem rs = build_root_system(f, 3);
    for (int it = 0; it < 12; ++it) {
      const auto& a = pool[splitmix(state) % pool.size()];
      const auto& b = pool[splitmix(state) % pool.size()];
      Int da = dynkin_index(rs, rp(a)), db = dynkin_index(rs, rp(b));
      Int na = rep_dim(rs, rp(a)), nb = rep_dim(rs, rp(b));
      CHECK(dynkin_index(rs, rp(a + "+" + b)) == da + db);
      CHECK(dynkin_index(rs, rp("(" + a + ")*(" + b + ")")) == da * nb + na * db);
    }
  }
}

TEST_CASE("Casimir cross-check: d = dim * kappa(lambda, lambda+2 rho) / dim g") {
  struct Point {
    Family f;
    int l;
  };
  std::vector<Point> grid;
  for (int l = 1; l <= 8; ++l) grid.push_back({Family::A, l});
  for (int l = 2; l <= 6; ++l) grid.push_back({Family::B, l});
  for (int l = 2; l <= 6; ++l) grid.push_back({Family::C, l});
  for (int l = 3; l <= 6; ++l) grid.push_back({Family::D, l});
  grid.push_back({Family::G2, 2});
  for (auto [f, l] : grid) {
    RootSystem rs = build_root_system(f, l);
    auto casimir = [&](const Vec& lambda) {
      Vec shifted = add(lambda, scale(Rat(2), rs.weyl_vector));
      Rat d = Rat(weyl_dim(rs, lambda)) * rs.form(lambda, shifted) / rs.dim_g();
      REQUIRE(is_integer(d));
      return numerator(d);
    };
    CHECK(casimir(rs.fundamental_weights[0]) == dynkin_index(rs, rp("std")));
    CHECK(casimir(rs.highest_root) == dynkin_index(rs, rp("adj")));
  }
}

TEST_CASE("center characters") {
  for (int r = 3; r <= 6; ++r) {
    RootSystem rs = build_root_system(Family::A, r - 1);
    auto adj = center_character(rs, rp("adj"));
    CHECK(adj.orders == std::vector<long long>{r});
    CHECK(adj.residues == std::vector<long long>{0});
    CHECK(center_character(rs, rp("std")).residues == std::vector<long long>{1});
    for (int s = 2; s <= r; ++s) {
      if (r % s != 0) continue;
      for (int p = 1; p <= s; ++p) {
        RepExpr rho = RepExpr::tensor(RepExpr::sym(p, RepExpr::std_rep()),
                                      RepExpr::ext(s - p, RepExpr::std_rep()));
        auto c = center_character(rs, rho);
        CHECK(c.residues[0] == s % r);
      }
    }
  }
  RootSystem c3 = build_root_system(Family::C, 3);
  CHECK(center_character(c3, rp("std")).residues == std::vector<long long>{1});
  CHECK(center_character(c3, rp("ext(2,std)")).residues ==
        std::vector<long long>{0});
  CHECK(center_character(c3, rp("ext(2,std)")).trivial());

  // D_l: eps acts by -1 on the vector representation, -1 acts trivially
  RootSystem d4 = build_root_system(Family::D, 4);
  auto d4std = center_character(d4, rp("std"));
  CHECK(d4std.orders == std::vector<long long>{2, 2});
  CHECK(d4std.residues == std::vector<long long>{1, 0});
  CHECK(center_character(d4, rp("sym(2,std)")).trivial());
  CHECK(center_character(d4, rp("adj")).trivial());
  RootSystem d3 = build_root_system(Family::D, 3);
  auto d3std = center_character(d3, rp("std"));
  CHECK(d3std.orders == std::vector<long long>{4});
  CHECK(d3std.residues == std::vector<long long>{2});

  RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(center_character(b3, rp("std")).trivial());

  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(center_character(g2, rp("std")).orders.empty());

  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK_THROWS_AS(center_character(a2, rp("std+dual(std)")), NotIsotypic);
}

TEST_CASE("self-dual families: weight multisets closed under negation") {
  std::vector<std::string> exprs = {"std", "adj", "ext(2,std)", "sym(2,std)",
                                    "std*std", "std+adj", "sym(3,std)"};
  for (Family f : {Family::B, Family::C, Family::D, Family::G2}) {
    int rank = f == Family::D ? 4 : (f == Family::G2 ? 2 : 3);
    RootSystem rs = build_root_system(f, rank);
    for (const auto& s : exprs) {
      WeightMultiset w = weights(rs, rp(s));
      for (const auto& [wt, m] : w) {
        auto it = w.find(negate(wt));
        REQUIRE(it != w.end());
        CHECK(it->second == m);
      }
    }
  }
}

TEST_CASE("zero representation and power edge cases") {
  RootSystem a1 = build_root_system(Family::A, 1);
  CHECK(rep_dim(a1, rp("ext(5,std)")) == 0);
  CHECK(rep_dim(a1, rp("ext(0,std)")) == 1);
  CHECK(rep_dim(a1, rp("sym(0,adj)")) == 1);
  CHECK(dynkin_index(a1, rp("ext(5,std)")) == 0);
  CHECK(dynkin_index(a1, rp("triv")) == 0);
  CHECK(rep_dim(a1, rp("dual(sym(2,std))")) == 3);
}

TEST_CASE("dimension cap") {
  RootSystem a5 = build_root_system(Family::A, 5);
  CHECK_THROWS_AS(weights(a5, rp("sym(3,std)"), 10), DimensionCapExceeded);
  CHECK_NOTHROW(weights(a5, rp("sym(3,std)"), 56));
}

TEST_CASE("rep expression grammar") {
  CHECK(rp("sym(2,std)*ext(5,std)").to_string() == "sym(2,std)*ext(5,std)");
  CHECK(rp("  std +  adj ").to_string() == "std+adj");
  CHECK(rp("dual( ( std ) )").to_string() == "dual(std)");
  // precedence: a+b*c parses as a+(b*c)
  RepExpr e = rp("std+adj*triv");
  CHECK(e.kind() == RepExpr::Kind::Sum);
  CHECK(e.rhs().kind() == RepExpr::Kind::Tensor);

  CHECK_THROWS_AS(rp(""), ParseError);
  CHECK_THROWS_AS(rp("std+"), ParseError);
  CHECK_THROWS_AS(rp("ext(2 std)"), ParseError);
  CHECK_THROWS_AS(rp("foo"), ParseError);
  CHECK_THROWS_AS(rp("std)"), ParseError);
  try {
    rp("std + bogus");
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.position() == 6);
    CHECK(std::string(err.what()).find("position 6") != std::string::npos);
    CHECK(std::string(err.what()).find("'std'") != std::string::npos);
  }
}
