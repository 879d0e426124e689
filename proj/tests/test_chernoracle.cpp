#include "oracles.hpp"
#include "weylk/chernoracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace weylk;

namespace {

// Fixed points of B on (Q/Z)^n with denominators dividing q, counted by brute force.
std::size_t brute_fixed_points(const IntMatrix& b, std::int64_t q) {
  const std::size_t n = b.rows();
  std::size_t count = 0;
  std::vector<std::int64_t> x(n, 0);
  for (;;) {
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += b(i, j) * x[j];
      fixed = ((s - x[i]) % q + q) % q == 0;
    }
    count += fixed;
    std::size_t i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace

TEST(ChernOracle, IdentityHasOneComponent) {
  FixedSetData fs = fixed_subgroup(IntMatrix::identity(3));
  EXPECT_EQ(fs.fixed_dim, 3u);
  EXPECT_EQ(fs.component_count, 1);
}

TEST(ChernOracle, MinusIdentityOnTwoTorus) {
  FixedSetData fs = fixed_subgroup(IntMatrix{{-1, 0}, {0, -1}});
  EXPECT_EQ(fs.fixed_dim, 0u);
  EXPECT_EQ(fs.component_count, 4);
  EXPECT_EQ(fs.components.size(), 4u);
  EXPECT_EQ(brute_fixed_points(IntMatrix{{-1, 0}, {0, -1}}, 2), 4u);
}

TEST(ChernOracle, IsolatedFixedPointsMatchDeterminant) {
  for (CartanType t : {CartanType{Series::A, 2}, CartanType{Series::B, 2}, CartanType{Series::G, 2},
                       CartanType{Series::A, 3}}) {
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    MatrixGroup w = weyl_group(rd);
    for (auto& m : dual_torus_action(w, rd.coroot_lattice())) {
      FixedSetData fs = fixed_subgroup(m);
      if (fs.fixed_dim != 0) continue;
      BigMatrix d = to_big(m - IntMatrix::identity(m.rows()));
      Integer det = oracle::det(d);
      EXPECT_EQ(fs.component_count, det < 0 ? Integer(-det) : det) << t.str();
      // every fixed point has denominator dividing |det|
      EXPECT_EQ(Integer(brute_fixed_points(m, static_cast<std::int64_t>(fs.component_count))), fs.component_count);
    }
  }
}

TEST(ChernOracle, ComponentsAreFixedAndDistinct) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = static_cast<std::int64_t>(rng() % 5) - 2;
    FixedSetData fs = fixed_subgroup(b);
    if (fs.component_count > 50) continue;
    EXPECT_EQ(Integer(fs.components.size()), fs.component_count);
    for (auto& x : fs.components) {
      RatVec bx = weylk::apply(b, x);
      EXPECT_TRUE(is_integral(subtract(bx, x)));
    }
    if (fs.fixed_dim == 0) EXPECT_EQ(Integer(brute_fixed_points(b, static_cast<std::int64_t>(fs.component_count))),
                                     fs.component_count);
  }
}

TEST(ChernOracle, WeylFixedPointsOnTori) {
  // W-fixed points of T = t / X_*(T): the center for SU(3), trivial for PSU(3)
  RootDatum sc = build_root_datum({Series::A, 2}, Isogeny::sc());
  RootDatum adj = build_root_datum({Series::A, 2}, Isogeny::adj());
  EXPECT_EQ(weyl_fixed_points_on_torus(sc), 3);
  EXPECT_EQ(weyl_fixed_points_on_torus(adj), 1);
  // W = {+-1} on the circle: both SU(2) and SO(3) have two fixed points
  EXPECT_EQ(weyl_fixed_points_on_torus(build_root_datum({Series::A, 1}, Isogeny::sc())), 2);
  EXPECT_EQ(weyl_fixed_points_on_torus(build_root_datum({Series::A, 1}, Isogeny::adj())), 2);
  EXPECT_EQ(weyl_fixed_points_on_torus(build_root_datum({Series::G, 2}, Isogeny::sc())), 1);
}

TEST(ChernOracle, RankExamples) {
  RationalKRanks a1 = rational_k_ranks(build_root_datum({Series::A, 1}, Isogeny::sc()), Variant::affine);
  EXPECT_EQ(a1.even, 3);
  EXPECT_EQ(a1.odd, 0);
  RationalKRanks su3 = rational_k_ranks(build_root_datum({Series::A, 2}, Isogeny::sc()), Variant::affine);
  EXPECT_EQ(su3.even, 5);
  EXPECT_EQ(su3.odd, 1);
  EXPECT_EQ(su3.per_class.size(), 3u);
}

TEST(ChernOracle, IdentityClassContributesTorusCohomology) {
  // the identity class contributes the W-invariants of H^*(torus)
  RootDatum rd = build_root_datum({Series::A, 2}, Isogeny::sc());
  RationalKRanks r = rational_k_ranks(rd, Variant::affine);
  const ClassContribution& id = r.per_class.front();
  EXPECT_EQ(id.class_size, 1u);
  EXPECT_EQ(id.fixed_dim, 2u);
  // Lambda^0 trivial, Lambda^1 the reflection representation, Lambda^2 the sign
  EXPECT_EQ(id.even, 1);
  EXPECT_EQ(id.odd, 0);
}

TEST(ChernOracle, ClassContributionOfTrivialCentralizer) {
  FixedSetData fs = fixed_subgroup(IntMatrix::identity(2));
  auto [e, o] = class_contribution({IntMatrix::identity(2)}, fs);
  EXPECT_EQ(e, 2);  // 1 + x1 x2
  EXPECT_EQ(o, 2);
  auto [e2, o2] = class_contribution({IntMatrix::identity(2), IntMatrix{{-1, 0}, {0, -1}}}, fs);
  EXPECT_EQ(e2, 2);
  EXPECT_EQ(o2, 0);
}

TEST(ChernOracle, DualityHolds) {
  for (auto& t : {CartanType{Series::A, 1}, CartanType{Series::A, 2}, CartanType{Series::A, 3}, CartanType{Series::B, 2},
                  CartanType{Series::B, 3}, CartanType{Series::C, 3}, CartanType{Series::G, 2},
                  CartanType{Series::D, 4}})
    for (auto& rd : all_isogeny_forms(t)) {
      DualityReport r = verify_duality(rd);
      EXPECT_TRUE(r.duality_holds) << r.group << " vs " << r.dual_group;
      EXPECT_TRUE(r.all_hold()) << r.group;
      if (rd.cochar_lattice == rd.coweight_lattice()) EXPECT_FALSE(r.affine_checks.empty());
    }
}

TEST(ChernOracle, ParallelMatchesSerial) {
  RootDatum rd = build_root_datum({Series::B, 3}, Isogeny::adj());
  RationalKRanks a = rational_k_ranks(rd, Variant::extended, false);
  RationalKRanks b = rational_k_ranks(rd, Variant::extended, true);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.per_class.size(), b.per_class.size());
  for (std::size_t k = 0; k < a.per_class.size(); ++k) EXPECT_EQ(a.per_class[k].even, b.per_class[k].even);
}
