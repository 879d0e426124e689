#include "weylk/alcove.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace weylk;

namespace {

Rational dot(const IntVec& a, const RatVec& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

std::vector<CartanType> small_types() {
  return {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::C, 2}, {Series::G, 2},
          {Series::B, 3}, {Series::C, 3}, {Series::A, 4}, {Series::D, 4}, {Series::B, 4}, {Series::C, 4},
          {Series::F, 4}};
}

// Chains S_0 < S_1 < ... < S_k of nonempty vertex subsets of {0..n}.
void chains(std::size_t n, std::size_t k, std::vector<std::uint32_t>& cur,
            std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == k + 1) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t full = (1u << (n + 1)) - 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    if (!cur.empty() && ((m & cur.back()) != cur.back() || m == cur.back())) continue;
    cur.push_back(m);
    chains(n, k, cur, out);
    cur.pop_back();
  }
}

std::uint32_t permuted(std::uint32_t m, const std::vector<std::size_t>& perm) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (m & (1u << i)) r |= 1u << perm[i];
  return r;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Alcove, A2VerticesInEuclideanSpace) {
  RootDatum rd = build_root_datum({Series::A, 2}, Isogeny::sc());
  Alcove a = fundamental_alcove(rd);
  ASSERT_EQ(a.vertices.size(), 3u);
  // x = c1 (e1 - e2) + c2 (e2 - e3)
  auto euclid = [](const RatVec& c) { return RatVec{c[0], c[1] - c[0], -c[1]}; };
  std::set<RatVec> got;
  for (auto& v : a.vertices) got.insert(euclid(v));
  std::set<RatVec> expected{{0, 0, 0},
                            {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)},
                            {Rational(1, 3), Rational(1, 3), Rational(-2, 3)}};
  EXPECT_EQ(got, expected);
}

TEST(Alcove, VerticesLieOnTheRightWalls) {
  for (auto& t : small_types()) {
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    Alcove a = fundamental_alcove(rd);
    ASSERT_EQ(a.walls.size(), rd.rank() + 1);
    for (std::size_t j = 0; j < a.walls.size(); ++j)
      for (std::size_t k = 0; k < a.vertices.size(); ++k) {
        Rational v = dot(a.walls[j].root, a.vertices[k]);
        if (k == a.walls[j].opposite_vertex)
          EXPECT_NE(v, a.walls[j].level) << t.str();
        else
          EXPECT_EQ(v, a.walls[j].level) << t.str();
        EXPECT_TRUE(a.contains(a.vertices[k]));
      }
    // reflections are involutions fixing their wall
    for (std::size_t j = 0; j < a.walls.size(); ++j) {
      const auto& r = a.reflections[j];
      EXPECT_EQ(r * r, AffineIsometry::identity(rd.rank()));
      for (std::size_t k = 0; k < a.vertices.size(); ++k)
        if (k != a.walls[j].opposite_vertex) EXPECT_EQ(r.apply(a.vertices[k]), a.vertices[k]);
    }
  }
}

TEST(Alcove, G2Marks) {
  RootDatum rd = build_root_datum({Series::G, 2}, Isogeny::sc());
  IntVec m = rd.marks();
  std::multiset<std::int64_t> ms(m.begin(), m.end());
  EXPECT_EQ(ms, (std::multiset<std::int64_t>{2, 3}));
  // the alcove of G2 has angles pi/2, pi/3, pi/6: vertex stabilizers of orders 12, 4, 6
  MatrixGroup w = weyl_group(rd);
  Alcove a = fundamental_alcove(rd);
  std::multiset<std::size_t> orders;
  for (auto& v : a.vertices) orders.insert(point_stabilizer(w, rd.coroot_lattice(), v).order());
  EXPECT_EQ(orders, (std::multiset<std::size_t>{12, 4, 6}));
}

TEST(Alcove, PointStabilizers) {
  RootDatum sc = build_root_datum({Series::A, 2}, Isogeny::sc());
  RootDatum adj = build_root_datum({Series::A, 2}, Isogeny::adj());
  MatrixGroup w = weyl_group(sc);
  Alcove a = fundamental_alcove(sc);
  RatVec bary{Rational(1, 3), Rational(1, 3)};
  EXPECT_EQ(point_stabilizer(w, sc.coroot_lattice(), RatVec{0, 0}).order(), 6u);
  EXPECT_EQ(point_stabilizer(w, sc.coroot_lattice(), bary).order(), 1u);
  EXPECT_EQ(point_stabilizer(w, adj.cochar_lattice, bary).order(), 3u);
  for (std::size_t k = 1; k < 3; ++k) {
    EXPECT_EQ(point_stabilizer(w, sc.coroot_lattice(), a.vertices[k]).order(), 6u);
    EXPECT_EQ(point_stabilizer(w, adj.cochar_lattice, a.vertices[k]).order(), 6u);
  }
}

TEST(Alcove, OmegaOrderIsFundamentalGroup) {
  for (auto& t : small_types())
    for (auto& rd : all_isogeny_forms(t)) {
      auto omega = omega_action(rd);
      EXPECT_EQ(Integer(omega.size()), fundamental_group_and_center(rd).pi1.order()) << t.str() << " "
                                                                                      << rd.isogeny.str();
      EXPECT_EQ(omega.front().perm[0], 0u);
      std::set<std::vector<std::size_t>> perms;
      for (auto& o : omega) perms.insert(o.perm);
      EXPECT_EQ(perms.size(), omega.size());
      // closed under composition
      for (auto& p : omega)
        for (auto& q : omega) {
          std::vector<std::size_t> pq(p.perm.size());
          for (std::size_t i = 0; i < pq.size(); ++i) pq[i] = p.perm[q.perm[i]];
          EXPECT_TRUE(perms.count(pq));
        }
    }
}

TEST(Alcove, ReductionCoversSpace) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-700, 700);
  for (CartanType t : {CartanType{Series::A, 2}, CartanType{Series::B, 2}, CartanType{Series::G, 2},
                       CartanType{Series::A, 3}, CartanType{Series::C, 3}}) {
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    MatrixGroup w = weyl_group(rd);
    Alcove a = fundamental_alcove(rd);
    for (int trial = 0; trial < 60; ++trial) {
      RatVec x;
      for (std::size_t i = 0; i < rd.rank(); ++i) x.push_back(Rational(num(rng), 97));
      AffineIsometry g = reduce_to_alcove(a, x);
      RatVec y = g.apply(x);
      EXPECT_TRUE(a.contains(y)) << t.str();
      EXPECT_TRUE(w.contains(g.linear));
      EXPECT_TRUE(rd.coroot_lattice().contains(g.translation));
    }
  }
}

TEST(Alcove, TranslatesHaveDisjointInteriors) {
  std::mt19937_64 rng(9);
  for (CartanType t : {CartanType{Series::A, 2}, CartanType{Series::B, 2}, CartanType{Series::G, 2}}) {
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    MatrixGroup w = weyl_group(rd);
    Alcove a = fundamental_alcove(rd);
    // interior point: weighted average of vertices with distinct positive weights
    RatVec y(rd.rank(), Rational(0));
    for (std::size_t k = 0; k < a.vertices.size(); ++k)
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += a.vertices[k][i] * Rational(k + 1, 6);
    auto strictly_inside = [&](const RatVec& p) {
      for (auto& wall : a.walls) {
        Rational v = dot(wall.root, p);
        if (wall.opposite_vertex == 0 ? v >= wall.level : v <= wall.level) return false;
      }
      return true;
    };
    ASSERT_TRUE(strictly_inside(y));
    for (auto& m : w.elements())
      for (int l0 = -2; l0 <= 2; ++l0)
        for (int l1 = -2; l1 <= 2; ++l1) {
          AffineIsometry g{m, RatVec{l0, l1}};
          if (g == AffineIsometry::identity(2)) continue;
          EXPECT_FALSE(strictly_inside(g.apply(y))) << t.str();
        }
  }
}

TEST(Alcove, AffineCellCountsAreSimplexFaces) {
  for (auto& t : small_types()) {
    if (t.rank > 3) continue;
    RootDatum rd = build_root_datum(t, Isogeny::sc());
    EquivariantComplex x = build_equivariant_complex(rd, Variant::affine);
    const std::size_t n = rd.rank();
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(x.cells[k].size(), binom(n + 1, k + 1)) << t.str();
    EXPECT_TRUE(is_rigid(x));
  }
}

TEST(Alcove, ExtendedCellCountsByBurnside) {
  for (auto& t : small_types()) {
    if (t.rank > 3) continue;
    for (auto& rd : all_isogeny_forms(t)) {
      auto omega = omega_action(rd);
      if (omega.size() == 1) continue;
      EquivariantComplex x = build_equivariant_complex(rd, Variant::extended);
      const std::size_t n = rd.rank();
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::vector<std::uint32_t>> all;
        std::vector<std::uint32_t> cur;
        chains(n, k, cur, all);
        std::size_t fixed = 0;
        for (auto& o : omega)
          for (auto& c : all) {
            bool f = true;
            for (auto m : c) f = f && permuted(m, o.perm) == m;
            fixed += f;
          }
        EXPECT_EQ(x.cells[k].size(), fixed / omega.size()) << t.str() << " " << rd.isogeny.str() << " k=" << k;
      }
      EXPECT_TRUE(is_rigid(x));
    }
  }
}

TEST(Alcove, A2Examples) {
  RootDatum sc = build_root_datum({Series::A, 2}, Isogeny::sc());
  RootDatum adj = build_root_datum({Series::A, 2}, Isogeny::adj());
  EXPECT_EQ(build_equivariant_complex(sc, Variant::affine).cell_counts(), (std::vector<std::size_t>{3, 3, 1}));
  EquivariantComplex x = build_equivariant_complex(adj, Variant::extended);
  EXPECT_EQ(x.omega_order, 3u);
  EXPECT_EQ(x.cell_counts(), (std::vector<std::size_t>{3, 4, 2}));
}

TEST(Alcove, EulerCharacteristics) {
  // t / (Gamma x| W) is a flat compact orbifold, so its orbifold Euler
  // characteristic vanishes; the underlying space is contractible.
  for (auto& t : small_types()) {
    if (t.rank > 3) continue;
    for (auto& rd : all_isogeny_forms(t))
      for (Variant v : {Variant::affine, Variant::extended}) {
        EquivariantComplex x = build_equivariant_complex(rd, v);
        EXPECT_EQ(x.orbifold_euler(), 0) << t.str();
        EXPECT_EQ(alcove_orbifold_euler(rd, v), 0) << t.str();
        EXPECT_EQ(x.cell_euler(), 1) << t.str();
      }
  }
}

TEST(Alcove, StabilizersMatchPointStabilizers) {
  for (auto& rd : all_isogeny_forms({Series::A, 3}))
    for (Variant v : {Variant::affine, Variant::extended}) {
      EquivariantComplex x = build_equivariant_complex(rd, v);
      MatrixGroup w = weyl_group(rd);
      for (auto& level : x.cells)
        for (auto& c : level)
          EXPECT_TRUE(c.stabilizer->group.same_elements(point_stabilizer(w, x.translations, c.barycenter)));
    }
}

TEST(Alcove, RankCap) {
  RootDatum a5 = build_root_datum({Series::A, 5}, Isogeny::sc());
  EXPECT_THROW(build_equivariant_complex(a5, Variant::affine), ResourceLimit);
  ComplexOptions opt;
  opt.rank_cap = 1;
  EXPECT_THROW(build_equivariant_complex(build_root_datum({Series::A, 2}, Isogeny::sc()), Variant::affine, opt),
               ResourceLimit);
  EXPECT_THROW(parse_variant("both"), InvalidArgument);
}
