#include "oracles.hpp"
#include "weylk/finitegroup.hpp"
#include "weylk/rootdata.hpp"

#include <gtest/gtest.h>

using namespace weylk;

namespace {

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n)
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
      CartanType t{s, n};
      try {
        t.validate();
        out.push_back(t);
      } catch (const InvalidArgument&) {
      }
    }
  return out;
}

char letter(const CartanType& t) { return series_letter(t.series); }

}  // namespace

TEST(RootData, CartanMatrixExamples) {
  EXPECT_EQ(cartan_matrix({Series::A, 2}), (IntMatrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_matrix({Series::A, 1}), (IntMatrix{{2}}));
  EXPECT_EQ(determinant(cartan_matrix({Series::G, 2})), 1);
}

TEST(RootData, RejectsInvalidRanks) {
  EXPECT_THROW(cartan_matrix({Series::A, 0}), InvalidArgument);
  EXPECT_THROW(cartan_matrix({Series::B, 1}), InvalidArgument);
  EXPECT_THROW(cartan_matrix({Series::D, 2}), InvalidArgument);
  EXPECT_THROW(cartan_matrix({Series::E, 5}), InvalidArgument);
  EXPECT_THROW(cartan_matrix({Series::F, 3}), InvalidArgument);
  EXPECT_THROW(cartan_matrix({Series::G, 3}), InvalidArgument);
  EXPECT_THROW(parse_series("H"), InvalidArgument);
}

// Euclidean Gram matrices of the simple roots give <alpha_j, h_i> = 2 (a_i, a_j) / (a_i, a_i).
TEST(RootData, CartanMatchesEuclideanRealization) {
  auto from_roots = [](const std::vector<std::vector<int>>& r) {
    const std::size_t n = r.size();
    IntMatrix a(n, n);
    auto dot = [](const std::vector<int>& x, const std::vector<int>& y) {
      int s = 0;
      for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
      return s;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = 2 * dot(r[i], r[j]) / dot(r[i], r[i]);
    return a;
  };
  EXPECT_EQ(cartan_matrix({Series::B, 3}), from_roots({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}));
  EXPECT_EQ(cartan_matrix({Series::C, 3}), from_roots({{1, -1, 0}, {0, 1, -1}, {0, 0, 2}}));
  EXPECT_EQ(cartan_matrix({Series::D, 4}), from_roots({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}));
  // G2 inside the plane x+y+z=0 of R^3.
  EXPECT_EQ(cartan_matrix({Series::G, 2}), from_roots({{1, -1, 0}, {-2, 1, 1}}));
  // F4 in R^4 with the half-integral root doubled.
  EXPECT_EQ(cartan_matrix({Series::F, 4}),
            from_roots({{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}}));
}

TEST(RootData, RootCountsAndWeylOrders) {
  for (auto& t : all_types(8)) {
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    EXPECT_EQ(rd.roots.size(), oracle::root_count(letter(t), t.rank)) << t.str();
    if (oracle::weyl_order(letter(t), t.rank) <= 60000)
      EXPECT_EQ(static_cast<std::int64_t>(weyl_group(rd).order()), oracle::weyl_order(letter(t), t.rank)) << t.str();
  }
}

TEST(RootData, WeylGroupCapIsEnforced) {
  RootDatum e7 = build_root_datum({Series::E, 7}, Isogeny::sc());
  EXPECT_THROW(weyl_group(e7, 1000), ResourceLimit);
}

TEST(RootData, A2Examples) {
  RootDatum sc = build_root_datum({Series::A, 2}, Isogeny::sc());
  EXPECT_EQ(sc.roots.size(), 6u);
  EXPECT_EQ(sc.cochar_lattice, sc.coroot_lattice());
  RootDatum adj = build_root_datum({Series::A, 2}, Isogeny::adj());
  EXPECT_EQ(fundamental_group_and_center(adj).pi1.str(), "Z/3");
  EXPECT_TRUE(fundamental_group_and_center(adj).center.trivial());
  EXPECT_TRUE(fundamental_group_and_center(sc).pi1.trivial());
  EXPECT_EQ(fundamental_group_and_center(sc).center.str(), "Z/3");
  auto tl = translation_lattices(adj);
  EXPECT_EQ(tl.nodal.index_of(tl.coroot), 3);
  auto tl_sc = translation_lattices(sc);
  EXPECT_EQ(tl_sc.nodal, tl_sc.coroot);
}

TEST(RootData, A1AdjointIndexTwo) {
  RootDatum adj = build_root_datum({Series::A, 1}, Isogeny::adj());
  EXPECT_EQ(adj.cochar_lattice, adj.coweight_lattice());
  EXPECT_EQ(adj.cochar_lattice.index_of(adj.coroot_lattice()), 2);
}

TEST(RootData, AxiomsHoldForEveryIsogenyForm) {
  for (auto& t : all_types(8)) {
    const std::int64_t f = connection_index(t);
    for (auto& rd : all_isogeny_forms(t)) {
      EXPECT_NO_THROW(validate(rd)) << t.str() << " " << rd.isogeny.str();
      auto fc = fundamental_group_and_center(rd);
      EXPECT_EQ(fc.pi1.order() * fc.center.order(), f) << t.str() << " " << rd.isogeny.str();
    }
  }
}

TEST(RootData, ConnectionIndices) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(connection_index({Series::A, n}), n + 1);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(connection_index({Series::D, n}), 4);
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(connection_index({Series::B, n}), 2);
    EXPECT_EQ(connection_index({Series::C, n}), 2);
  }
  EXPECT_EQ(connection_index({Series::E, 6}), 3);
  EXPECT_EQ(connection_index({Series::E, 7}), 2);
  EXPECT_EQ(connection_index({Series::E, 8}), 1);
  EXPECT_EQ(connection_index({Series::F, 4}), 1);
  EXPECT_EQ(connection_index({Series::G, 2}), 1);
}

TEST(RootData, IsogenyFormCounts) {
  // Subgroups of Z/4 (D odd) and Z/2 x Z/2 (D even).
  EXPECT_EQ(all_isogeny_forms({Series::D, 5}).size(), 3u);
  EXPECT_EQ(all_isogeny_forms({Series::D, 4}).size(), 5u);
  EXPECT_EQ(all_isogeny_forms({Series::A, 5}).size(), 4u);  // divisors of 6
  EXPECT_EQ(all_isogeny_forms({Series::E, 8}).size(), 1u);
}

TEST(RootData, LanglandsDualExamples) {
  for (int n = 1; n <= 6; ++n) {
    RootDatum d = langlands_dual(build_root_datum({Series::A, n}, Isogeny::sc()));
    EXPECT_EQ(d.type, (CartanType{Series::A, n}));
    EXPECT_EQ(d.isogeny.kind, IsogenyKind::adjoint);
  }
  for (int n = 2; n <= 5; ++n) {
    RootDatum d = langlands_dual(build_root_datum({Series::B, n}, Isogeny::adj()));
    EXPECT_EQ(d.type, (CartanType{Series::C, n}));
    EXPECT_EQ(d.isogeny.kind, IsogenyKind::simply_connected);
  }
  RootDatum g2 = build_root_datum({Series::G, 2}, Isogeny::sc());
  EXPECT_TRUE(isomorphic(langlands_dual(langlands_dual(g2)), g2));
  EXPECT_TRUE(isomorphic(langlands_dual(g2), g2));
}

TEST(RootData, DualIsAnInvolutionAndSwapsPi1WithCenter) {
  for (auto& t : all_types(6))
    for (auto& rd : all_isogeny_forms(t)) {
      RootDatum d = langlands_dual(rd);
      EXPECT_NO_THROW(validate(d));
      EXPECT_TRUE(isomorphic(langlands_dual(d), rd)) << t.str() << " " << rd.isogeny.str();
      auto a = fundamental_group_and_center(rd);
      auto b = fundamental_group_and_center(d);
      EXPECT_EQ(a.pi1, b.center) << t.str();
      EXPECT_EQ(a.center, b.pi1) << t.str();
    }
}

TEST(RootData, DualitySwapsRootsAndCoroots) {
  // coroot heights of G are root heights of the dual
  RootDatum b3 = build_root_datum({Series::B, 3}, Isogeny::sc());
  RootDatum c3 = langlands_dual(b3);
  auto heights = [](const std::vector<IntVec>& v) {
    std::vector<std::int64_t> h;
    for (auto& x : v) h.push_back(std::accumulate(x.begin(), x.end(), std::int64_t{0}));
    std::sort(h.begin(), h.end());
    return h;
  };
  EXPECT_EQ(heights(b3.coroots), heights(c3.roots_simple));
}

TEST(RootData, IntermediateIsogenies) {
  CartanType d4{Series::D, 4};
  Isogeny so8 = parse_isogeny("custom:1/2,0,1/2,0");
  RootDatum rd = build_root_datum(d4, so8);
  EXPECT_EQ(rd.isogeny.kind, IsogenyKind::intermediate);
  EXPECT_EQ(fundamental_group_and_center(rd).pi1.str(), "Z/2");
  EXPECT_EQ(fundamental_group_and_center(rd).center.str(), "Z/2");
  EXPECT_THROW(build_root_datum(d4, parse_isogeny("custom:1/3,0,0,0")), InvalidArgument);
  EXPECT_THROW(build_root_datum(d4, parse_isogeny("custom:1/2,0")), InvalidArgument);
  EXPECT_THROW(parse_isogeny("half"), InvalidArgument);
  // A generator in Q^v gives back the simply connected form.
  EXPECT_EQ(build_root_datum(d4, parse_isogeny("custom:1,0,0,0")).isogeny.kind, IsogenyKind::simply_connected);
  // SO(8) is self-dual.
  EXPECT_TRUE(isomorphic(langlands_dual(rd), rd));
}
