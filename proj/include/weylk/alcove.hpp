#pragma once

// Affine Weyl groups acting on t, the fundamental alcove, its symmetry group
// Omega, and rigid equivariant cell structures on t.

#include "weylk/character.hpp"
#include "weylk/rootdata.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace weylk {

/// x -> linear * x + translation on t (simple-coroot coordinates).
struct AffineIsometry {
  IntMatrix linear;
  RatVec translation;

  static AffineIsometry identity(std::size_t n) { return {IntMatrix::identity(n), RatVec(n, Rational(0))}; }

  RatVec apply(const RatVec& x) const { return add(weylk::apply(linear, x), translation); }

  /// (g1 * g2)(x) = g1(g2(x)): (t1 + L1 t2, L1 L2).
  friend AffineIsometry operator*(const AffineIsometry& a, const AffineIsometry& b) {
    return {a.linear * b.linear, add(a.translation, weylk::apply(a.linear, b.translation))};
  }

  AffineIsometry inverse() const {
    IntMatrix li = to_int(weylk::inverse(to_rational(linear)));
    RatVec t = weylk::apply(li, translation);
    for (auto& x : t) x = -x;
    return {li, t};
  }

  friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
  friend bool operator!=(const AffineIsometry& a, const AffineIsometry& b) { return !(a == b); }
};

/// The element of Gamma x| W with linear part l fixing x.
inline AffineIsometry fixing_element(const IntMatrix& l, const RatVec& x) {
  return {l, subtract(x, apply(l, x))};
}

struct Wall {
  IntVec root;      // fundamental-weight coordinates
  Rational level;   // wall is <root, x> = level
  std::size_t opposite_vertex;
};

struct Alcove {
  std::vector<RatVec> vertices;  // v_0 = 0, v_i = coweight_i / mark_i
  std::vector<Wall> walls;       // wall j is opposite vertex j
  std::vector<AffineIsometry> reflections;  // reflection in wall j

  std::size_t rank() const { return vertices.size() - 1; }

  bool contains(const RatVec& x) const {
    for (auto& w : walls) {
      Rational v = 0;
      for (std::size_t i = 0; i < x.size(); ++i) v += Rational(w.root[i]) * x[i];
      if (w.opposite_vertex == 0 ? v > w.level : v < w.level) return false;
    }
    return true;
  }
};

inline Alcove fundamental_alcove(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  Alcove a;
  const std::size_t top = rd.highest_root();
  const IntVec marks = rd.marks();
  const RatMatrix coweights = rd.coweight_lattice().basis();
  a.vertices.push_back(RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v = coweights.column(i);
    for (auto& x : v) x /= marks[i];
    a.vertices.push_back(std::move(v));
  }
  a.walls.push_back({rd.roots[top], Rational(1), 0});
  {
    RatVec theta_co = to_rational(rd.coroots[top]);
    a.reflections.push_back({rd.reflection(top), theta_co});
  }
  for (std::size_t i = 0; i < n; ++i) {
    a.walls.push_back({rd.cartan.column(i), Rational(0), i + 1});
    a.reflections.push_back({rd.simple_reflection(i), RatVec(n, Rational(0))});
  }
  return a;
}

/// Stabilizer of x in Gamma x| W. The linear parts determine the elements,
/// so the group is returned as a group of linear parts.
inline MatrixGroup point_stabilizer(const MatrixGroup& w, const Lattice& gamma, const RatVec& x) {
  std::vector<IntMatrix> fix;
  for (auto& m : w.elements())
    if (gamma.contains(subtract(x, apply(m, x)))) fix.push_back(m);
  return MatrixGroup::from_elements(fix, w.dim());
}

/// Walks x into the closed fundamental alcove by wall reflections; returns the
/// element g of the affine Weyl group with g(x) in the alcove.
inline AffineIsometry reduce_to_alcove(const Alcove& a, const RatVec& x) {
  AffineIsometry g = AffineIsometry::identity(x.size());
  RatVec y = x;
  for (std::size_t guard = 0; guard < 100000; ++guard) {
    bool moved = false;
    for (std::size_t j = 0; j < a.walls.size(); ++j) {
      const Wall& w = a.walls[j];
      Rational v = 0;
      for (std::size_t i = 0; i < y.size(); ++i) v += Rational(w.root[i]) * y[i];
      bool outside = w.opposite_vertex == 0 ? v > w.level : v < w.level;
      if (!outside) continue;
      g = a.reflections[j] * g;
      y = a.reflections[j].apply(y);
      moved = true;
    }
    if (!moved) return g;
  }
  throw InternalError("alcove reduction did not terminate");
}

/// An element of Gamma x| W mapping the alcove onto itself, with its vertex
/// permutation: map(v_i) = v_{perm[i]}.
struct AlcoveSymmetry {
  AffineIsometry map;
  std::vector<std::size_t> perm;
};

/// Representatives of Omega = W'_a / W_a, the identity first.
inline std::vector<AlcoveSymmetry> omega_action(const RootDatum& rd, const MatrixGroup& w, const Alcove& a) {
  std::vector<AlcoveSymmetry> out;
  const std::size_t n = rd.rank();
  for (std::size_t k = 0; k <= n; ++k) {
    const RatVec& shift = a.vertices[k];
    if (!rd.cochar_lattice.contains(shift)) continue;
    for (auto& m : w.elements()) {
      AffineIsometry g{m, shift};
      std::vector<std::size_t> perm;
      for (auto& v : a.vertices) {
        RatVec image = g.apply(v);
        auto it = std::find(a.vertices.begin(), a.vertices.end(), image);
        if (it == a.vertices.end()) break;
        perm.push_back(static_cast<std::size_t>(it - a.vertices.begin()));
      }
      if (perm.size() == a.vertices.size()) {
        out.push_back({g, perm});
        break;
      }
    }
  }
  return out;
}

inline std::vector<AlcoveSymmetry> omega_action(const RootDatum& rd) {
  return omega_action(rd, weyl_group(rd), fundamental_alcove(rd));
}

enum class Variant { affine, extended };

inline std::string variant_name(Variant v) { return v == Variant::affine ? "affine" : "extended"; }

inline Variant parse_variant(const std::string& s) {
  if (s == "affine") return Variant::affine;
  if (s == "extended") return Variant::extended;
  throw InvalidArgument("unknown variant '" + s + "' (expected affine or extended)");
}

struct CellFace {
  std::size_t target;       // index among cells of dimension dim-1
  AffineIsometry carrier;   // maps the target's representative onto this face
  int sign;
};

struct OrbitCell {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;  // ordered; the order is the orientation
  std::vector<std::uint32_t> label;  // vertex subset (affine) or chain of subsets (extended)
  RatVec barycenter;
  FiniteGroupPtr stabilizer;  // linear parts of the stabilizer
  std::vector<CellFace> faces;

  AffineIsometry stabilizer_element(std::size_t k) const {
    return fixing_element(stabilizer->group.element(k), barycenter);
  }
};

struct EquivariantComplex {
  Variant variant = Variant::affine;
  std::size_t dim = 0;
  std::vector<std::vector<OrbitCell>> cells;  // by dimension
  Lattice translations;
  std::size_t omega_order = 1;

  /// Sum over cells of (-1)^dim / |stabilizer|.
  Rational orbifold_euler() const {
    Rational s = 0;
    for (auto& level : cells)
      for (auto& c : level) s += Rational(c.dim % 2 ? -1 : 1, static_cast<std::int64_t>(c.stabilizer->order()));
    return s;
  }

  std::int64_t cell_euler() const {
    std::int64_t s = 0;
    for (std::size_t p = 0; p < cells.size(); ++p) s += (p % 2 ? -1 : 1) * static_cast<std::int64_t>(cells[p].size());
    return s;
  }

  std::vector<std::size_t> cell_counts() const {
    std::vector<std::size_t> c;
    for (auto& level : cells) c.push_back(level.size());
    return c;
  }
};

inline constexpr std::size_t kDefaultGeometricRankCap = 4;

namespace detail {

inline std::vector<std::size_t> mask_members(std::uint32_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (m >> i & 1u) out.push_back(i);
  return out;
}

inline RatVec barycenter(const std::vector<RatVec>& pts) {
  RatVec b(pts.front().size(), Rational(0));
  for (auto& p : pts) b = add(b, p);
  for (auto& x : b) x /= static_cast<std::int64_t>(pts.size());
  return b;
}

inline std::uint32_t permute_mask(std::uint32_t m, const std::vector<std::size_t>& perm) {
  std::uint32_t out = 0;
  for (auto i : mask_members(m)) out |= 1u << perm[i];
  return out;
}

// Character tables shared between cells with the same stabilizer.
class StabilizerCache {
 public:
  FiniteGroupPtr get(const MatrixGroup& g) {
    std::vector<IntMatrix> key = g.elements();
    std::sort(key.begin(), key.end());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto fg = FiniteGroup::make(g);
    cache_.emplace(std::move(key), fg);
    return fg;
  }

 private:
  std::map<std::vector<IntMatrix>, FiniteGroupPtr> cache_;
};

// Sign of the permutation taking `from` onto `to` (both lists of points);
// 0 if they are not the same set.
inline int matching_sign(const std::vector<RatVec>& from, const std::vector<RatVec>& to) {
  if (from.size() != to.size()) return 0;
  std::vector<std::size_t> perm;
  for (auto& p : from) {
    auto it = std::find(to.begin(), to.end(), p);
    if (it == to.end()) return 0;
    perm.push_back(static_cast<std::size_t>(it - to.begin()));
  }
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
  return sign;
}

inline std::vector<RatVec> omit(const std::vector<RatVec>& v, std::size_t i) {
  std::vector<RatVec> out = v;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

}  // namespace detail

/// Sign of face i of `cell` computed from a carrier: (-1)^i times the
/// orientation comparison of carrier(target vertices) with the face.
inline int incidence_sign(const OrbitCell& cell, std::size_t face_index, const OrbitCell& target,
                          const AffineIsometry& carrier) {
  if (face_index >= cell.vertices.size()) throw InvalidArgument("face index out of range");
  std::vector<RatVec> carried;
  for (auto& v : target.vertices) carried.push_back(carrier.apply(v));
  int s = detail::matching_sign(carried, detail::omit(cell.vertices, face_index));
  if (s == 0) throw InternalError("carrier does not map the representative onto the face");
  return face_index % 2 ? -s : s;
}

inline int incidence_sign(const EquivariantComplex& x, const OrbitCell& cell, std::size_t face_index) {
  const CellFace& f = cell.faces.at(face_index);
  return incidence_sign(cell, face_index, x.cells[cell.dim - 1][f.target], f.carrier);
}

/// Every stabilizer element fixes every vertex of its cell.
inline bool is_rigid(const EquivariantComplex& x) {
  for (auto& level : x.cells)
    for (auto& c : level)
      for (std::size_t k = 0; k < c.stabilizer->order(); ++k) {
        AffineIsometry h = c.stabilizer_element(k);
        if (!x.translations.contains(h.translation)) return false;
        for (auto& v : c.vertices)
          if (h.apply(v) != v) return false;
      }
  return true;
}

struct ComplexOptions {
  std::size_t rank_cap = kDefaultGeometricRankCap;
  std::size_t group_cap = kDefaultGroupCap;
};

namespace detail {

inline EquivariantComplex affine_complex(const RootDatum& rd, const MatrixGroup& w, const Alcove& a, Variant variant,
                                         const Lattice& gamma, StabilizerCache& cache) {
  const std::size_t n = rd.rank();
  EquivariantComplex x;
  x.variant = variant;
  x.dim = n;
  x.translations = gamma;
  x.cells.resize(n + 1);
  const std::uint32_t full = (1u << (n + 1)) - 1;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m <= full; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t p, std::uint32_t q) {
    auto mp = mask_members(p), mq = mask_members(q);
    if (mp.size() != mq.size()) return mp.size() < mq.size();
    return mp < mq;
  });
  std::map<std::uint32_t, std::size_t> index;
  for (auto m : masks) {
    auto members = mask_members(m);
    OrbitCell c;
    c.dim = members.size() - 1;
    c.label = {m};
    for (auto i : members) c.vertices.push_back(a.vertices[i]);
    c.barycenter = barycenter(c.vertices);
    std::vector<IntMatrix> gens;
    for (std::size_t j = 0; j <= n; ++j)
      if (!(m >> j & 1u)) gens.push_back(a.reflections[j].linear);
    MatrixGroup parabolic = MatrixGroup::generate(gens, n);
    MatrixGroup geometric = point_stabilizer(w, gamma, c.barycenter);
    if (!parabolic.same_elements(geometric))
      throw InternalError("parabolic subgroup differs from the geometric stabilizer");
    c.stabilizer = cache.get(parabolic);
    if (c.dim > 0)
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::uint32_t face = m & ~(1u << members[i]);
        c.faces.push_back({index.at(face), AffineIsometry::identity(n), i % 2 ? -1 : 1});
      }
    index[m] = x.cells[c.dim].size();
    x.cells[c.dim].push_back(std::move(c));
  }
  return x;
}

inline EquivariantComplex subdivided_complex(const RootDatum& rd, const MatrixGroup& w, const Alcove& a,
                                             const std::vector<AlcoveSymmetry>& omega, StabilizerCache& cache) {
  using Chain = std::vector<std::uint32_t>;
  const std::size_t n = rd.rank();
  const std::uint32_t full = (1u << (n + 1)) - 1;
  auto act = [&](const AlcoveSymmetry& g, const Chain& c) {
    Chain out;
    for (auto m : c) out.push_back(permute_mask(m, g.perm));
    return out;
  };
  auto canonical = [&](const Chain& c) {
    Chain best = c;
    for (auto& g : omega) best = std::min(best, act(g, c));
    return best;
  };
  // All strictly increasing chains of nonempty vertex subsets.
  std::vector<Chain> chains;
  std::vector<Chain> stack;
  for (std::uint32_t m = 1; m <= full; ++m) stack.push_back({m});
  while (!stack.empty()) {
    Chain c = stack.back();
    stack.pop_back();
    chains.push_back(c);
    for (std::uint32_t m = c.back() + 1; m <= full; ++m)
      if ((m & c.back()) == c.back() && m != c.back()) {
        Chain d = c;
        d.push_back(m);
        stack.push_back(std::move(d));
      }
  }
  std::vector<std::vector<Chain>> reps(n + 1);
  for (auto& c : chains)
    if (canonical(c) == c) reps[c.size() - 1].push_back(c);
  for (auto& level : reps) std::sort(level.begin(), level.end());

  auto point = [&](std::uint32_t m) {
    std::vector<RatVec> pts;
    for (auto i : mask_members(m)) pts.push_back(a.vertices[i]);
    return barycenter(pts);
  };

  EquivariantComplex x;
  x.variant = Variant::extended;
  x.dim = n;
  x.translations = rd.cochar_lattice;
  x.omega_order = omega.size();
  x.cells.resize(n + 1);
  std::vector<std::map<Chain, std::size_t>> index(n + 1);
  for (std::size_t p = 0; p <= n; ++p)
    for (auto& c : reps[p]) {
      OrbitCell cell;
      cell.dim = p;
      cell.label = c;
      for (auto m : c) cell.vertices.push_back(point(m));
      cell.barycenter = barycenter(cell.vertices);
      cell.stabilizer = cache.get(point_stabilizer(w, rd.cochar_lattice, cell.barycenter));
      if (p > 0)
        for (std::size_t i = 0; i <= p; ++i) {
          Chain face = c;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          Chain target = canonical(face);
          const AlcoveSymmetry* carrier = nullptr;
          for (auto& g : omega)
            if (act(g, target) == face) {
              carrier = &g;
              break;
            }
          if (!carrier) throw InternalError("no alcove symmetry carries the face representative");
          cell.faces.push_back({index[p - 1].at(target), carrier->map, i % 2 ? -1 : 1});
        }
      index[p][c] = x.cells[p].size();
      x.cells[p].push_back(std::move(cell));
    }
  return x;
}

}  // namespace detail

/// Rigid cell structure on t for W_a (affine) or W'_a (extended). The affine
/// version uses the faces of the alcove; the extended one, when Omega is
/// nontrivial, the barycentric subdivision of the alcove modulo Omega.
inline EquivariantComplex build_equivariant_complex(const RootDatum& rd, Variant variant,
                                                    const ComplexOptions& opt = {}) {
  if (rd.rank() > opt.rank_cap)
    throw ResourceLimit("rank " + std::to_string(rd.rank()) + " exceeds the geometric rank cap of " +
                        std::to_string(opt.rank_cap));
  MatrixGroup w = weyl_group(rd, opt.group_cap);
  Alcove a = fundamental_alcove(rd);
  detail::StabilizerCache cache;
  EquivariantComplex x;
  if (variant == Variant::affine) {
    x = detail::affine_complex(rd, w, a, Variant::affine, rd.coroot_lattice(), cache);
  } else {
    auto omega = omega_action(rd, w, a);
    if (omega.size() == 1)
      x = detail::affine_complex(rd, w, a, Variant::extended, rd.cochar_lattice, cache);
    else
      x = detail::subdivided_complex(rd, w, a, omega, cache);
  }
  for (auto& level : x.cells)
    for (auto& c : level)
      for (std::size_t i = 0; i < c.faces.size(); ++i)
        if (incidence_sign(x, c, i) != c.faces[i].sign) throw InternalError("inconsistent incidence sign");
  return x;
}

/// Orbifold Euler characteristic of the quotient computed from the unsubdivided
/// alcove: faces F weighted by (-1)^dim F / |W_F|, divided by |Omega|.
inline Rational alcove_orbifold_euler(const RootDatum& rd, Variant variant) {
  MatrixGroup w = weyl_group(rd);
  Alcove a = fundamental_alcove(rd);
  const std::size_t n = rd.rank();
  Rational s = 0;
  for (std::uint32_t m = 1; m < (1u << (n + 1)); ++m) {
    std::vector<RatVec> pts;
    for (auto i : detail::mask_members(m)) pts.push_back(a.vertices[i]);
    auto stab = point_stabilizer(w, rd.coroot_lattice(), detail::barycenter(pts));
    s += Rational(pts.size() % 2 ? 1 : -1, static_cast<std::int64_t>(stab.order()));
  }
  if (variant == Variant::extended) s /= static_cast<std::int64_t>(omega_action(rd, w, a).size());
  return s;
}

}  // namespace weylk
