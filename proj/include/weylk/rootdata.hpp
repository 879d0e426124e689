#pragma once

// Root data of compact semisimple types, their isogeny forms and Langlands
// duals.
//
// Coordinates: the Lie algebra t is written in the basis of simple coroots
// (so the coroot lattice is Z^n) and its dual t* in the basis of fundamental
// weights (so the weight lattice is Z^n). These bases are dual to each other,
// hence the ambient pairing is the identity matrix.

#include "weylk/arith.hpp"
#include "weylk/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace weylk {

enum class Series { A, B, C, D, E, F, G };

inline char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

inline Series parse_series(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
  }
  throw InvalidArgument("unknown series '" + s + "' (expected one of A..G)");
}

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  void validate() const {
    const int n = rank;
    bool ok = false;
    switch (series) {
      case Series::A: ok = n >= 1; break;
      case Series::B: ok = n >= 2; break;
      case Series::C: ok = n >= 2; break;
      case Series::D: ok = n >= 3; break;
      case Series::E: ok = n >= 6 && n <= 8; break;
      case Series::F: ok = n == 4; break;
      case Series::G: ok = n == 2; break;
    }
    if (!ok)
      throw InvalidArgument("invalid rank " + std::to_string(n) + " for series " +
                            std::string(1, series_letter(series)) +
                            " (A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2)");
  }

  std::string str() const { return std::string(1, series_letter(series)) + std::to_string(rank); }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
};

/// A_ij = <alpha_j, h_i>, Bourbaki numbering.
inline IntMatrix cartan_matrix(const CartanType& t) {
  t.validate();
  const std::size_t n = static_cast<std::size_t>(t.rank);
  IntMatrix a(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  switch (t.series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      bond(0, 2);
      bond(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      a(2, 1) = -2;
      bond(2, 3);
      break;
    case Series::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

/// Finite abelian group by its invariant factors (all >= 2).
struct FiniteAbelianGroup {
  std::vector<Integer> divisors;

  Integer order() const {
    Integer o = 1;
    for (auto& d : divisors) o *= d;
    return o;
  }
  bool trivial() const { return divisors.empty(); }
  std::string str() const {
    if (divisors.empty()) return "1";
    std::string s;
    for (auto& d : divisors) s += (s.empty() ? "" : " x ") + ("Z/" + d.str());
    return s;
  }
  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.divisors == b.divisors;
  }
};

/// Full-rank lattice in Q^n given by the columns of a basis matrix.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(RatMatrix basis) : basis_(std::move(basis)) {
    if (!basis_.square() || basis_.rows() == 0) throw InvalidArgument("lattice basis must be square");
    if (determinant(basis_) == 0) throw InvalidArgument("lattice basis is singular");
    inverse_ = inverse(basis_);
  }

  static Lattice standard(std::size_t n) { return Lattice(RatMatrix::identity(n)); }

  /// Lattice spanned by the given vectors; they must span Q^n.
  static Lattice from_generators(const std::vector<RatVec>& gens, std::size_t n) {
    if (gens.empty()) throw InvalidArgument("no lattice generators");
    Integer den = 1;
    for (auto& g : gens) {
      if (g.size() != n) throw InvalidArgument("generator dimension mismatch");
      for (auto& x : g) den = boost::multiprecision::lcm(den, denominator(x));
    }
    BigMatrix m(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = numerator(gens[j][i] * den);
    auto snf = smith_normal_form(m);
    if (snf.rank != n) throw InvalidArgument("generators do not span a full-rank lattice");
    RatMatrix uinv = inverse(snf.U.template cast<Rational>());
    RatMatrix b(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) b(i, j) = uinv(i, j) * Rational(snf.D(j, j)) / Rational(den);
    return Lattice(std::move(b));
  }

  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  RatVec basis_vector(std::size_t j) const { return basis_.column(j); }

  RatVec coordinates(const RatVec& v) const { return inverse_ * v; }
  bool contains(const RatVec& v) const { return is_integral(coordinates(v)); }
  bool contains(const Lattice& sub) const { return is_integral(inverse_ * sub.basis_); }

  /// [this : sub] for a sublattice.
  Integer index_of(const Lattice& sub) const {
    if (!contains(sub)) throw InvalidArgument("not a sublattice");
    Rational d = determinant(inverse_ * sub.basis_);
    return numerator(d < 0 ? Rational(-d) : d);
  }

  /// this / sub as a finite abelian group.
  FiniteAbelianGroup quotient(const Lattice& sub) const {
    if (!contains(sub)) throw InvalidArgument("not a sublattice");
    FiniteAbelianGroup g;
    for (auto& d : invariant_factors(to_big(inverse_ * sub.basis_)))
      if (d > 1) g.divisors.push_back(d);
    return g;
  }

  /// Dual lattice under the standard pairing.
  Lattice dual() const { return Lattice(inverse_.transpose()); }

  Lattice transformed(const RatMatrix& m) const { return Lattice(m * basis_); }

  /// Matrix of an ambient linear map preserving the lattice, in lattice coordinates.
  IntMatrix in_lattice_basis(const IntMatrix& ambient) const {
    return to_int(inverse_ * to_rational(ambient) * basis_);
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.contains(b) && b.contains(a); }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  RatMatrix basis_;
  RatMatrix inverse_;
};

enum class IsogenyKind { simply_connected, adjoint, intermediate };

struct Isogeny {
  IsogenyKind kind = IsogenyKind::simply_connected;
  // For intermediate forms: generators of the subgroup of P^v/Q^v, as vectors
  // of t in simple-coroot coordinates.
  std::vector<RatVec> subgroup_gens;

  static Isogeny sc() { return {IsogenyKind::simply_connected, {}}; }
  static Isogeny adj() { return {IsogenyKind::adjoint, {}}; }

  std::string str() const {
    switch (kind) {
      case IsogenyKind::simply_connected: return "sc";
      case IsogenyKind::adjoint: return "adj";
      case IsogenyKind::intermediate: break;
    }
    std::string s = "custom:";
    for (std::size_t g = 0; g < subgroup_gens.size(); ++g) {
      if (g) s += ";";
      for (std::size_t i = 0; i < subgroup_gens[g].size(); ++i) {
        if (i) s += ",";
        s += to_string(subgroup_gens[g][i]);
      }
    }
    return s;
  }

  std::string name() const {
    switch (kind) {
      case IsogenyKind::simply_connected: return "simply_connected";
      case IsogenyKind::adjoint: return "adjoint";
      case IsogenyKind::intermediate: return "intermediate";
    }
    return "";
  }
};

/// Parses "sc", "adj" or "custom:<v1>;<v2>..." with comma-separated rationals.
inline Isogeny parse_isogeny(const std::string& s) {
  if (s == "sc" || s == "simply_connected") return Isogeny::sc();
  if (s == "adj" || s == "adjoint") return Isogeny::adj();
  const std::string prefix = "custom:";
  if (s.rfind(prefix, 0) != 0) throw InvalidArgument("unknown isogeny '" + s + "'");
  Isogeny iso{IsogenyKind::intermediate, {}};
  std::string rest = s.substr(prefix.size());
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto semi = rest.find(';', pos);
    std::string vec = rest.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    RatVec v;
    std::size_t p = 0;
    while (p <= vec.size()) {
      auto comma = vec.find(',', p);
      v.push_back(parse_rational(vec.substr(p, comma == std::string::npos ? std::string::npos : comma - p)));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    iso.subgroup_gens.push_back(std::move(v));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return iso;
}

struct RootDatum {
  CartanType type;
  Isogeny isogeny;
  IntMatrix cartan;
  Lattice char_lattice;    // X*(T) in t*, fundamental-weight coordinates
  Lattice cochar_lattice;  // X_*(T) in t, simple-coroot coordinates
  std::vector<IntVec> roots;         // fundamental-weight coordinates
  std::vector<IntVec> coroots;       // simple-coroot coordinates; coroots[k] pairs with roots[k]
  std::vector<IntVec> roots_simple;  // simple-root coordinates
  RatMatrix pairing;                 // ambient pairing t* x t

  std::size_t rank() const { return cartan.rows(); }

  /// <lambda, mu> for lambda in t* and mu in t (ambient coordinates).
  Rational pair(const RatVec& lambda, const RatVec& mu) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (pairing(i, j) != 0) s += lambda[i] * pairing(i, j) * mu[j];
    return s;
  }

  Lattice coroot_lattice() const { return Lattice::standard(rank()); }
  Lattice coweight_lattice() const { return Lattice(to_rational(cartan)).dual(); }
  Lattice weight_lattice() const { return Lattice::standard(rank()); }
  Lattice root_lattice() const { return Lattice(to_rational(cartan)); }

  /// Index of the highest root (maximal height).
  std::size_t highest_root() const {
    std::size_t best = 0;
    std::int64_t h = -1;
    for (std::size_t k = 0; k < roots_simple.size(); ++k) {
      auto s = std::accumulate(roots_simple[k].begin(), roots_simple[k].end(), std::int64_t{0});
      if (s > h) {
        h = s;
        best = k;
      }
    }
    return best;
  }

  /// Coefficients of the highest root in simple roots.
  IntVec marks() const { return roots_simple[highest_root()]; }

  /// Simple reflection s_i acting on t in simple-coroot coordinates.
  IntMatrix simple_reflection(std::size_t i) const {
    const std::size_t n = rank();
    IntMatrix s = IntMatrix::identity(n);
    // s_i(mu) = mu - <alpha_i, mu> h_i, with <alpha_i, mu> = sum_k A_ki mu_k.
    for (std::size_t k = 0; k < n; ++k) s(i, k) -= cartan(k, i);
    return s;
  }

  /// Reflection in a root (by index) acting on t.
  IntMatrix reflection(std::size_t root_index) const {
    const std::size_t n = rank();
    IntMatrix s = IntMatrix::identity(n);
    const auto& a = roots[root_index];
    const auto& h = coroots[root_index];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) s(i, k) -= h[i] * a[k];
    return s;
  }
};

namespace detail {

inline IntVec mat_cols_times(const IntMatrix& a, const IntVec& c) {
  IntVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * c[j];
  return out;
}

// Enumerates roots (simple-root coordinates) and coroots (simple-coroot
// coordinates) together by closing the simple pairs under simple reflections.
inline void enumerate_roots(const IntMatrix& a, std::vector<IntVec>& roots_simple, std::vector<IntVec>& coroots) {
  const std::size_t n = a.rows();
  std::map<IntVec, IntVec> found;  // root -> coroot
  std::vector<std::pair<IntVec, IntVec>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.emplace_back(e, e);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto [beta, cobeta] = queue[q];
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t b_hi = 0, a_cobeta = 0;
      for (std::size_t j = 0; j < n; ++j) b_hi += beta[j] * a(i, j);
      for (std::size_t k = 0; k < n; ++k) a_cobeta += cobeta[k] * a(k, i);
      IntVec nb = beta, nc = cobeta;
      nb[i] -= b_hi;
      nc[i] -= a_cobeta;
      if (found.emplace(nb, nc).second) queue.emplace_back(nb, nc);
    }
  }
  std::vector<std::pair<IntVec, IntVec>> pos, neg;
  for (auto& [r, c] : found) {
    bool positive = std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; });
    (positive ? pos : neg).emplace_back(r, c);
  }
  auto key_less = [](const std::pair<IntVec, IntVec>& x, const std::pair<IntVec, IntVec>& y) {
    auto hx = std::accumulate(x.first.begin(), x.first.end(), std::int64_t{0});
    auto hy = std::accumulate(y.first.begin(), y.first.end(), std::int64_t{0});
    hx = hx < 0 ? -hx : hx;
    hy = hy < 0 ? -hy : hy;
    if (hx != hy) return hx < hy;
    IntVec ax = x.first, ay = y.first;
    for (auto& v : ax) v = v < 0 ? -v : v;
    for (auto& v : ay) v = v < 0 ? -v : v;
    return ax > ay;
  };
  std::sort(pos.begin(), pos.end(), key_less);
  std::sort(neg.begin(), neg.end(), key_less);
  roots_simple.clear();
  coroots.clear();
  for (auto* part : {&pos, &neg})
    for (auto& [r, c] : *part) {
      roots_simple.push_back(r);
      coroots.push_back(c);
    }
}

inline bool is_valid_type(const CartanType& t) {
  try {
    t.validate();
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace detail

using detail::is_valid_type;

namespace detail {

// Sets the lattices and isogeny label of a datum whose roots are already filled in.
inline void assign_cochar(RootDatum& rd, const Lattice& cochar) {
  const std::size_t n = rd.rank();
  if (cochar.dim() != n) throw InvalidArgument("cocharacter lattice has wrong dimension");
  if (!cochar.contains(rd.coroot_lattice()))
    throw InvalidArgument("cocharacter lattice does not contain the coroot lattice");
  if (!rd.coweight_lattice().contains(cochar))
    throw InvalidArgument("cocharacter lattice is not contained in the coweight lattice");
  rd.cochar_lattice = cochar;
  rd.char_lattice = cochar.dual();
  if (cochar == rd.coroot_lattice()) {
    rd.isogeny = Isogeny::sc();
  } else if (cochar == rd.coweight_lattice()) {
    rd.isogeny = Isogeny::adj();
  } else {
    rd.isogeny.kind = IsogenyKind::intermediate;
    rd.isogeny.subgroup_gens.clear();
    for (std::size_t j = 0; j < n; ++j) {
      auto v = cochar.basis_vector(j);
      if (!is_integral(v)) rd.isogeny.subgroup_gens.push_back(v);
    }
  }
}

}  // namespace detail

/// Builds the datum of type t whose cocharacter lattice is the given lattice
/// (simple-coroot coordinates). Requires Q^v <= cochar <= P^v.
inline RootDatum root_datum_from_cochar(const CartanType& t, const Lattice& cochar) {
  RootDatum rd;
  rd.type = t;
  rd.cartan = cartan_matrix(t);
  detail::enumerate_roots(rd.cartan, rd.roots_simple, rd.coroots);
  rd.roots.clear();
  for (auto& c : rd.roots_simple) rd.roots.push_back(detail::mat_cols_times(rd.cartan, c));
  rd.pairing = RatMatrix::identity(rd.rank());
  detail::assign_cochar(rd, cochar);
  return rd;
}

/// Root datum of type t in the isogeny class iso.
inline RootDatum build_root_datum(const CartanType& t, const Isogeny& iso) {
  t.validate();
  const std::size_t n = static_cast<std::size_t>(t.rank);
  IntMatrix a = cartan_matrix(t);
  Lattice coroot = Lattice::standard(n);
  Lattice coweight = Lattice(to_rational(a)).dual();
  switch (iso.kind) {
    case IsogenyKind::simply_connected: return root_datum_from_cochar(t, coroot);
    case IsogenyKind::adjoint: return root_datum_from_cochar(t, coweight);
    case IsogenyKind::intermediate: break;
  }
  std::vector<RatVec> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(coroot.basis_vector(j));
  for (auto& g : iso.subgroup_gens) {
    if (g.size() != n)
      throw InvalidArgument("isogeny generator has " + std::to_string(g.size()) + " entries, expected " +
                            std::to_string(n));
    if (!coweight.contains(g))
      throw InvalidArgument("isogeny generator is not in the coweight lattice, so it does not define a subgroup of P^v/Q^v");
    gens.push_back(g);
  }
  return root_datum_from_cochar(t, Lattice::from_generators(gens, n));
}

/// Permutations p of {0..n-1} with a(p[i], p[j]) == b(i, j), in lexicographic order.
inline std::vector<std::vector<std::size_t>> cartan_isomorphisms(const IntMatrix& a, const IntMatrix& b) {
  std::vector<std::vector<std::size_t>> out;
  if (a.rows() != b.rows()) return out;
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a(p[i], p[j]) == b(i, j);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Series dual_series(Series s) {
  if (s == Series::B) return Series::C;
  if (s == Series::C) return Series::B;
  return s;
}

/// Swaps roots with coroots and characters with cocharacters.
/// The result is re-expressed in the standard coordinates of the dual type.
inline RootDatum langlands_dual(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  CartanType dual_type{dual_series(rd.type.series), rd.type.rank};
  IntMatrix target = cartan_matrix(dual_type);
  auto perms = cartan_isomorphisms(rd.cartan.transpose(), target);
  if (perms.empty()) throw InternalError("could not identify the type of the dual Cartan matrix");
  const auto& p = perms.front();
  // Dual simple coroot i is the simple root p[i]. A character v (fundamental-
  // weight coordinates) has simple-root coordinates A^{-1} v.
  RatMatrix ainv = inverse(to_rational(rd.cartan));
  RatMatrix change(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) change(i, j) = ainv(p[i], j);
  return root_datum_from_cochar(dual_type, rd.char_lattice.transformed(change));
}

/// Isomorphism of root data: same type and cocharacter lattices related by a
/// diagram automorphism.
inline bool isomorphic(const RootDatum& a, const RootDatum& b) {
  if (a.type != b.type) return false;
  const std::size_t n = a.rank();
  for (auto& p : cartan_isomorphisms(a.cartan, b.cartan)) {
    RatMatrix perm(n, n);
    for (std::size_t i = 0; i < n; ++i) perm(i, p[i]) = 1;
    if (a.cochar_lattice.transformed(perm) == b.cochar_lattice) return true;
  }
  return false;
}

inline std::int64_t connection_index(const CartanType& t) {
  Rational d = determinant(cartan_matrix(t));
  return static_cast<std::int64_t>(numerator(d));
}

struct FundamentalGroupAndCenter {
  FiniteAbelianGroup pi1;
  FiniteAbelianGroup center;
};

inline FundamentalGroupAndCenter fundamental_group_and_center(const RootDatum& rd) {
  return {rd.cochar_lattice.quotient(rd.coroot_lattice()), rd.coweight_lattice().quotient(rd.cochar_lattice)};
}

inline FundamentalGroupAndCenter fundamental_group_and_center(const CartanType& t, const Isogeny& iso) {
  return fundamental_group_and_center(build_root_datum(t, iso));
}

struct TranslationLattices {
  Lattice coroot;  // N: translations of the affine Weyl group
  Lattice nodal;   // Gamma: translations of the extended affine Weyl group
};

inline TranslationLattices translation_lattices(const RootDatum& rd) {
  return {rd.coroot_lattice(), rd.cochar_lattice};
}

inline TranslationLattices translation_lattices(const CartanType& t, const Isogeny& iso) {
  return translation_lattices(build_root_datum(t, iso));
}

/// Elements of P^v/Q^v as coset representatives with coordinates in [0,1).
inline std::vector<RatVec> coweight_quotient_elements(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  auto reduce = [](RatVec v) {
    for (auto& x : v) {
      Integer fl = numerator(x) / denominator(x);
      if (x < 0 && Rational(fl) != x) fl -= 1;
      x -= Rational(fl);
    }
    return v;
  };
  Lattice pv = rd.coweight_lattice();
  std::set<RatVec> seen;
  std::vector<RatVec> out{RatVec(n, Rational(0))};
  seen.insert(out.front());
  for (std::size_t q = 0; q < out.size(); ++q)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = reduce(add(out[q], pv.basis_vector(j)));
      if (seen.insert(v).second) out.push_back(v);
    }
  return out;
}

/// Every isogeny form of type t (one datum per lattice Q^v <= L <= P^v).
/// P^v/Q^v has at most two generators, so pairs of elements reach every
/// subgroup (single elements when it is cyclic).
inline std::vector<RootDatum> all_isogeny_forms(const CartanType& t) {
  RootDatum sc = build_root_datum(t, Isogeny::sc());
  auto elems = coweight_quotient_elements(sc);
  const std::size_t n = sc.rank();
  const bool cyclic = sc.coweight_lattice().quotient(sc.coroot_lattice()).divisors.size() <= 1;
  std::vector<RootDatum> out;
  std::vector<Lattice> seen;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < (cyclic ? i + 1 : elems.size()); ++j) {
      std::vector<RatVec> gens{elems[i], elems[j]};
      for (std::size_t k = 0; k < n; ++k) gens.push_back(sc.coroot_lattice().basis_vector(k));
      Lattice l = Lattice::from_generators(gens, n);
      if (std::any_of(seen.begin(), seen.end(), [&](const Lattice& s) { return s == l; })) continue;
      seen.push_back(l);
      RootDatum rd = sc;
      detail::assign_cochar(rd, l);
      out.push_back(std::move(rd));
    }
  std::stable_sort(out.begin(), out.end(), [](const RootDatum& a, const RootDatum& b) {
    return a.cochar_lattice.index_of(a.coroot_lattice()) < b.cochar_lattice.index_of(b.coroot_lattice());
  });
  return out;
}

/// Checks the root-datum axioms; throws InternalError on violation.
inline void validate(const RootDatum& rd) {
  const std::size_t n = rd.rank();
  if (rd.roots.size() != rd.coroots.size()) throw InternalError("root/coroot count mismatch");
  for (std::size_t k = 0; k < rd.roots.size(); ++k)
    if (rd.pair(to_rational(rd.roots[k]), to_rational(rd.coroots[k])) != 2)
      throw InternalError("<alpha, h_alpha> != 2");
  RatMatrix gram = rd.char_lattice.basis().transpose() * rd.pairing * rd.cochar_lattice.basis();
  if (!is_integral(gram)) throw InternalError("pairing is not integral on the lattices");
  Rational det = determinant(gram);
  if (det != 1 && det != -1) throw InternalError("pairing is not perfect");
  if (!rd.cochar_lattice.contains(rd.coroot_lattice()) || !rd.coweight_lattice().contains(rd.cochar_lattice))
    throw InternalError("cocharacter lattice not between Q^v and P^v");
  if (!rd.char_lattice.contains(rd.root_lattice()) || !rd.weight_lattice().contains(rd.char_lattice))
    throw InternalError("character lattice not between Q and P");
  for (auto& a : rd.roots)
    if (!rd.char_lattice.contains(to_rational(a))) throw InternalError("root outside the character lattice");
  for (auto& h : rd.coroots)
    if (!rd.cochar_lattice.contains(to_rational(h))) throw InternalError("coroot outside the cocharacter lattice");
  (void)n;
}

}  // namespace weylk
