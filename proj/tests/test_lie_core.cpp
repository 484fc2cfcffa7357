#include <doctest.h>

#include "picmod/lie_core.hpp"

using namespace picmod;

namespace {

struct GridPoint {
  Family family;
  int rank;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> g;
  for (int l = 1; l <= 8; ++l) g.push_back({Family::A, l});
  for (int l = 2; l <= 6; ++l) g.push_back({Family::B, l});
  for (int l = 2; l <= 6; ++l) g.push_back({Family::C, l});
  for (int l = 3; l <= 6; ++l) g.push_back({Family::D, l});
  g.push_back({Family::G2, 2});
  return g;
}

long long expected_dim_g(Family f, int l) {
  switch (f) {
    case Family::A: return l * l + 2 * l;
    case Family::B:
    case Family::C: return 2 * l * l + l;
    case Family::D: return 2 * l * l - l;
    case Family::G2: return 14;
  }
  return 0;
}

long long expected_dual_coxeter(Family f, int l) {
  switch (f) {
    case Family::A: return l + 1;
    case Family::B: return 2 * l - 1;
    case Family::C: return l + 1;
    case Family::D: return 2 * l - 2;
    case Family::G2: return 4;
  }
  return 0;
}

// Standard Cartan matrices, C[i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<long long>> expected_cartan(Family f, int l) {
  std::vector<std::vector<long long>> c(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  switch (f) {
    case Family::A:
      chain(l);
      break;
    case Family::B:
      chain(l);
      c[l - 1][l - 2] = -2;  // short simple root row
      break;
    case Family::C:
      chain(l);
      c[l - 2][l - 1] = -2;  // long simple root column
      break;
    case Family::D:
      chain(l - 1);
      c[l - 3][l - 1] = -1;
      c[l - 1][l - 3] = -1;
      break;
    case Family::G2:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace

TEST_CASE("root counts and dim g across the grid") {
  CHECK(build_root_system(Family::A, 2).positive_roots.size() == 3);
  CHECK(build_root_system(Family::A, 2).dim_g() == 8);
  CHECK(build_root_system(Family::D, 4).positive_roots.size() == 12);
  CHECK(build_root_system(Family::D, 4).dim_g() == 28);
  for (auto [f, l] : grid()) {
    RootSystem rs = build_root_system(f, l);
    long long dim = expected_dim_g(f, l);
    CHECK(rs.dim_g() == dim);
    CHECK(2 * static_cast<long long>(rs.positive_roots.size()) == dim - l);
  }
}

TEST_CASE("Cartan matrices match the standard ones") {
  for (auto [f, l] : grid()) {
    RootSystem rs = build_root_system(f, l);
    auto expected = expected_cartan(f, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        CHECK(rs.coroot_pairing(rs.simple_roots[j], rs.simple_roots[i]) ==
              Rat(expected[i][j]));
  }
}

TEST_CASE("normalization: highest root kappa-length 2, lengths per family") {
  for (auto [f, l] : grid()) {
    RootSystem rs = build_root_system(f, l);
    CHECK(rs.form(rs.highest_root, rs.highest_root) == 2);
    for (const auto& a : rs.positive_roots) {
      Rat len = rs.form(a, a);
      switch (f) {
        case Family::A:
        case Family::D:
          CHECK(len == 2);
          break;
        case Family::B:
        case Family::C:
          CHECK((len == 2 || len == 1));
          break;
        case Family::G2:
          CHECK((len == 2 || len == Rat(2) / 3));
          break;
      }
    }
  }
}

TEST_CASE("G2: six positive roots, long/short length ratio 3") {
  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(g2.positive_roots.size() == 6);
  int longs = 0, shorts = 0;
  for (const auto& a : g2.positive_roots) {
    if (g2.form(a, a) == 2) ++longs;
    if (g2.form(a, a) == Rat(2) / 3) ++shorts;
  }
  CHECK(longs == 3);
  CHECK(shorts == 3);
}

TEST_CASE("Weyl vector both ways; fundamental weights dual to simple coroots") {
  for (auto [f, l] : grid()) {
    RootSystem rs = build_root_system(f, l);
    Vec sum_fw(rs.ambient_dim, Rat(0));
    for (const auto& w : rs.fundamental_weights) sum_fw = add(sum_fw, w);
    CHECK(rs.weyl_vector == sum_fw);
    for (std::size_t i = 0; i < rs.fundamental_weights.size(); ++i)
      for (std::size_t j = 0; j < rs.simple_roots.size(); ++j)
        CHECK(rs.coroot_pairing(rs.fundamental_weights[i], rs.simple_roots[j]) ==
              (i == j ? 1 : 0));
  }
}

TEST_CASE("dual Coxeter numbers") {
  for (auto [f, l] : grid())
    CHECK(dual_coxeter(build_root_system(f, l)) == expected_dual_coxeter(f, l));
}

TEST_CASE("weyl_dim named examples") {
  RootSystem a3 = build_root_system(Family::A, 3);
  CHECK(weyl_dim(a3, a3.fundamental_weights[1]) == 6);
  for (int l = 2; l <= 6; ++l) {
    RootSystem cl = build_root_system(Family::C, l);
    CHECK(weyl_dim(cl, cl.fundamental_weights[0]) == 2 * l);
  }
  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(weyl_dim(g2, g2.fundamental_weights[0]) == 7);
}

TEST_CASE("weyl_dim of the adjoint highest weight is dim g") {
  for (auto [f, l] : grid()) {
    RootSystem rs = build_root_system(f, l);
    CHECK(weyl_dim(rs, rs.highest_root) == expected_dim_g(f, l));
  }
}

TEST_CASE("rank constraints and dominance errors") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system(Family::C, 1), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system(Family::D, 2), UnsupportedRank);
  CHECK_THROWS_AS(build_root_system(Family::G2, 3), UnsupportedRank);
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK_THROWS_AS(weyl_dim(a2, negate(a2.fundamental_weights[0])), NotDominant);
}
