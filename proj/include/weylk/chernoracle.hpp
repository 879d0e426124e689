#pragma once

// Rational K-theory of C(dual torus) x| W by the delocalized decomposition:
// a sum over conjugacy classes [w] of the centralizer invariants of the
// cohomology of the fixed set of w.

#include "weylk/alcove.hpp"
#include "weylk/smith.hpp"

#include <future>
#include <string>
#include <vector>

namespace weylk {

/// Fixed set of an integer matrix B on the torus R^n / Z^n.
struct FixedSetData {
  std::size_t w_class = 0;
  std::size_t fixed_dim = 0;
  Integer component_count = 1;
  std::vector<RatVec> components;  // one point on each component
  // internal data for locating components
  BigMatrix v_inverse;
  std::vector<Integer> divisors;  // nonzero diagonal of the Smith form of B - I
  RatMatrix kernel;                // columns span ker(B - I) over Q
};

inline FixedSetData fixed_subgroup(const IntMatrix& b) {
  const std::size_t n = b.rows();
  FixedSetData fs;
  IntMatrix m = b - IntMatrix::identity(n);
  SmithForm snf = smith_normal_form(m);
  fs.divisors = snf.diagonal();
  fs.fixed_dim = n - snf.rank;
  fs.v_inverse = to_big(inverse(snf.V.cast<Rational>()));
  for (auto& d : fs.divisors) fs.component_count *= d;
  fs.kernel = kernel_basis(to_rational(m));
  // x = V y with y_i = k_i / d_i on the torsion coordinates, 0 elsewhere.
  RatMatrix v = snf.V.cast<Rational>();
  std::vector<std::int64_t> k(fs.divisors.size(), 0);
  for (;;) {
    RatVec y(n, Rational(0));
    for (std::size_t i = 0; i < k.size(); ++i) y[i] = Rational(k[i]) / Rational(fs.divisors[i]);
    fs.components.push_back(v * y);
    std::size_t i = 0;
    while (i < k.size()) {
      if (++k[i] < fs.divisors[i]) break;
      k[i] = 0;
      ++i;
    }
    if (i == k.size()) break;
  }
  return fs;
}

/// Whether c maps the component through components[j] to itself.
inline bool fixes_component(const FixedSetData& fs, const IntMatrix& c, std::size_t j) {
  const RatVec& x = fs.components[j];
  RatMatrix vinv = fs.v_inverse.cast<Rational>();
  RatVec y = vinv * x;
  RatVec cy = vinv * apply(c, x);
  for (std::size_t i = 0; i < fs.divisors.size(); ++i)
    if (!is_integer(cy[i] - y[i])) return false;
  return true;
}

/// Matrix of c restricted to ker(B - I), in the stored kernel basis.
inline RatMatrix restrict_to_fixed_space(const FixedSetData& fs, const IntMatrix& c) {
  const std::size_t f = fs.fixed_dim;
  if (f == 0) return RatMatrix(0, 0);
  RatMatrix image = to_rational(c) * fs.kernel;
  // kernel has independent columns, so kernel * R = image has the unique
  // solution R = (K^T K)^{-1} K^T image when it is solvable at all.
  RatMatrix kt = fs.kernel.transpose();
  RatMatrix r = inverse(kt * fs.kernel) * (kt * image);
  if (fs.kernel * r != image) throw InternalError("centralizer element does not preserve the fixed space");
  return r;
}

struct ClassContribution {
  std::size_t w_class = 0;
  std::size_t class_size = 0;
  std::vector<int> rep_word;
  std::size_t fixed_dim = 0;
  Integer components = 1;
  std::int64_t even = 0;
  std::int64_t odd = 0;
};

/// (1/|C|) sum_c #fixed components * (1/2)(det(I+R_c) +- det(I-R_c)).
inline std::pair<std::int64_t, std::int64_t> class_contribution(const std::vector<IntMatrix>& centralizer,
                                                                const FixedSetData& fs) {
  Rational even = 0, odd = 0;
  const std::size_t f = fs.fixed_dim;
  for (auto& c : centralizer) {
    std::int64_t fixed = 0;
    for (std::size_t j = 0; j < fs.components.size(); ++j)
      if (fixes_component(fs, c, j)) ++fixed;
    if (!fixed) continue;
    Rational plus = 1, minus = 1;
    if (f > 0) {
      RatMatrix r = restrict_to_fixed_space(fs, c);
      RatMatrix id = RatMatrix::identity(f);
      plus = determinant(id + r);
      minus = determinant(id - r);
    }
    even += Rational(fixed) * (plus + minus) / 2;
    odd += Rational(fixed) * (plus - minus) / 2;
  }
  even /= static_cast<std::int64_t>(centralizer.size());
  odd /= static_cast<std::int64_t>(centralizer.size());
  if (!is_integer(even) || !is_integer(odd) || even < 0 || odd < 0)
    throw InternalError("class contribution is not a nonnegative integer");
  return {static_cast<std::int64_t>(numerator(even)), static_cast<std::int64_t>(numerator(odd))};
}

struct RationalKRanks {
  std::int64_t even = 0;
  std::int64_t odd = 0;
  std::vector<ClassContribution> per_class;

  friend bool operator==(const RationalKRanks& a, const RationalKRanks& b) {
    return a.even == b.even && a.odd == b.odd;
  }
};

/// Translation lattice of the chosen group: Q^v (affine) or X_*(T) (extended).
inline Lattice translation_lattice(const RootDatum& rd, Variant variant) {
  return variant == Variant::affine ? rd.coroot_lattice() : rd.cochar_lattice;
}

/// Action of W on the torus dual to the translation lattice, as integer
/// matrices on R^n / Z^n, one per element of w.
inline std::vector<IntMatrix> dual_torus_action(const MatrixGroup& w, const Lattice& gamma) {
  std::vector<IntMatrix> out;
  for (auto& m : w.elements()) {
    IntMatrix ml = gamma.in_lattice_basis(m);
    out.push_back(to_int(inverse(to_rational(ml))).transpose());
  }
  return out;
}

inline RationalKRanks rational_k_ranks(const RootDatum& rd, Variant variant, bool parallel = false) {
  MatrixGroup w = weyl_group(rd);
  ConjugacyClasses cc = conjugacy_classes(w);
  Lattice gamma = translation_lattice(rd, variant);
  auto action = dual_torus_action(w, gamma);
  auto one = [&](std::size_t k) {
    ClassContribution cc_out;
    const std::size_t rep = cc.reps[k];
    FixedSetData fs = fixed_subgroup(action[rep]);
    fs.w_class = k;
    std::vector<IntMatrix> cent;
    for (auto i : centralizer(w, rep)) cent.push_back(action[i]);
    auto [e, o] = class_contribution(cent, fs);
    cc_out.w_class = k;
    cc_out.class_size = cc.sizes[k];
    cc_out.rep_word = w.word(rep);
    cc_out.fixed_dim = fs.fixed_dim;
    cc_out.components = fs.component_count;
    cc_out.even = e;
    cc_out.odd = o;
    return cc_out;
  };
  RationalKRanks r;
  if (parallel) {
    std::vector<std::future<ClassContribution>> jobs;
    for (std::size_t k = 0; k < cc.count(); ++k) jobs.push_back(std::async(std::launch::async, one, k));
    for (auto& j : jobs) r.per_class.push_back(j.get());
  } else {
    for (std::size_t k = 0; k < cc.count(); ++k) r.per_class.push_back(one(k));
  }
  for (auto& c : r.per_class) {
    r.even += c.even;
    r.odd += c.odd;
  }
  return r;
}

/// Number of points of R^n / Z^n fixed by every matrix in the list
/// (0 if the common fixed set has positive dimension).
inline Integer common_fixed_point_count(const std::vector<IntMatrix>& mats) {
  if (mats.empty()) return 0;
  const std::size_t n = mats.front().rows();
  IntMatrix stacked(n * mats.size(), n);
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = mats[k](i, j) - (i == j ? 1 : 0);
  auto d = invariant_factors(stacked);
  if (d.size() < n) return 0;
  Integer c = 1;
  for (auto& x : d) c *= x;
  return c;
}

/// Points of the torus t / X_*(T) fixed by all of W.
inline Integer weyl_fixed_points_on_torus(const RootDatum& rd) {
  MatrixGroup w = weyl_group(rd);
  std::vector<IntMatrix> mats;
  for (auto& g : w.generators()) mats.push_back(rd.cochar_lattice.in_lattice_basis(g));
  return common_fixed_point_count(mats);
}

inline std::string group_label(const RootDatum& rd, Variant variant) {
  return rd.type.str() + " " + rd.isogeny.str() + " " + variant_name(variant);
}

struct DualityCheck {
  std::string lhs, rhs;
  RationalKRanks lhs_ranks, rhs_ranks;
  bool holds = false;
};

struct DualityReport {
  std::string group, dual_group;
  RationalKRanks ranks, dual_ranks;
  bool duality_holds = false;
  std::vector<DualityCheck> affine_checks;

  bool all_hold() const {
    bool ok = duality_holds;
    for (auto& c : affine_checks) ok = ok && c.holds;
    return ok;
  }
};

/// Compares W'_a(G) with W'_a(G^v); for adjoint G also with W_a(G^v), and for
/// simply laced, F4 and G2 adjoint G with W_a(G).
inline DualityReport verify_duality(const RootDatum& rd, bool parallel = false) {
  DualityReport r;
  RootDatum dual = langlands_dual(rd);
  r.group = group_label(rd, Variant::extended);
  r.dual_group = group_label(dual, Variant::extended);
  r.ranks = rational_k_ranks(rd, Variant::extended, parallel);
  r.dual_ranks = rational_k_ranks(dual, Variant::extended, parallel);
  r.duality_holds = r.ranks == r.dual_ranks;
  if (rd.cochar_lattice == rd.coweight_lattice()) {
    DualityCheck c{r.group, group_label(dual, Variant::affine), r.ranks, rational_k_ranks(dual, Variant::affine, parallel), false};
    c.holds = c.lhs_ranks == c.rhs_ranks;
    r.affine_checks.push_back(std::move(c));
    Series s = rd.type.series;
    if (s != Series::B && s != Series::C) {
      DualityCheck d{r.group, group_label(rd, Variant::affine), r.ranks, rational_k_ranks(rd, Variant::affine, parallel), false};
      d.holds = d.lhs_ranks == d.rhs_ranks;
      r.affine_checks.push_back(std::move(d));
    }
  }
  return r;
}

}  // namespace weylk
