#pragma once

// Exact model of the Clifford algebra of t x t* with 2n anticommuting
// generators e_1..e_n, eps^1..eps^n, each squaring to +1.

#include "weylk/arith.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace weylk {

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(int x) : re(x) {}  // NOLINT
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static GaussianRational i() { return {0, 1}; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw InvalidArgument("division by zero");
    GaussianRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const {
    if (im == 0) return to_string(re);
    if (re == 0) return to_string(im) + "i";
    return to_string(re) + (im < 0 ? "" : "+") + to_string(im) + "i";
  }
};

/// a + b sqrt(D) over a base field not containing sqrt(D).
template <class Base, int D>
struct QuadraticExtension {
  Base a, b;

  QuadraticExtension() = default;
  QuadraticExtension(int x) : a(x), b(0) {}  // NOLINT
  QuadraticExtension(Base x, Base y = Base(0)) : a(std::move(x)), b(std::move(y)) {}  // NOLINT

  static QuadraticExtension root() { return {Base(0), Base(1)}; }

  QuadraticExtension conj() const { return {a.conj(), b.conj()}; }

  friend QuadraticExtension operator+(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadraticExtension operator-(const QuadraticExtension& x) { return {-x.a, -x.b}; }
  friend QuadraticExtension operator*(const QuadraticExtension& x, const QuadraticExtension& y) {
    return {x.a * y.a + Base(D) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QuadraticExtension operator/(const QuadraticExtension& x, const QuadraticExtension& y) {
    Base n = y.a * y.a - Base(D) * y.b * y.b;
    if (n == Base(0)) throw InvalidArgument("division by zero");
    QuadraticExtension p = x * QuadraticExtension{y.a, -y.b};
    return {p.a / n, p.b / n};
  }
  QuadraticExtension& operator+=(const QuadraticExtension& o) { return *this = *this + o; }
  QuadraticExtension& operator-=(const QuadraticExtension& o) { return *this = *this - o; }
  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuadraticExtension& x, const QuadraticExtension& y) { return !(x == y); }
};

using GaussianSqrt3 = QuadraticExtension<GaussianRational, 3>;

/// Element of the Clifford algebra on 2n generators: coefficient of the
/// monomial g_{i1} ... g_{ik} (i1 < ... < ik) is stored at the bitmask.
/// Generator j < n is e_{j+1}, generator n + j is eps^{j+1}.
template <class Scalar>
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(std::size_t n, Scalar c = Scalar(0)) : n_(n), coeffs_(std::size_t{1} << (2 * n), Scalar(0)) {
    coeffs_[0] = c;
  }

  static CliffordElement generator(std::size_t n, std::size_t g) {
    CliffordElement x(n);
    x.coeffs_[std::size_t{1} << g] = Scalar(1);
    return x;
  }
  static CliffordElement e(std::size_t n, std::size_t j) { return generator(n, j); }
  static CliffordElement eps(std::size_t n, std::size_t j) { return generator(n, n + j); }

  std::size_t n() const { return n_; }
  std::size_t dim() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t m) const { return coeffs_[m]; }
  Scalar& operator[](std::size_t m) { return coeffs_[m]; }

  /// Sign of g_a g_b reordered to increasing generator order (squares are +1).
  static int monomial_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t rest = a >> 1; rest; rest >>= 1) swaps += __builtin_popcount(rest & b);
    return swaps % 2 ? -1 : 1;
  }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    check(x, y);
    CliffordElement z(x.n_);
    const Scalar zero(0);
    for (std::uint32_t a = 0; a < x.dim(); ++a) {
      if (x.coeffs_[a] == zero) continue;
      for (std::uint32_t b = 0; b < y.dim(); ++b) {
        if (y.coeffs_[b] == zero) continue;
        Scalar p = x.coeffs_[a] * y.coeffs_[b];
        if (monomial_sign(a, b) < 0)
          z.coeffs_[a ^ b] -= p;
        else
          z.coeffs_[a ^ b] += p;
      }
    }
    return z;
  }
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) {
    check(x, y);
    for (std::size_t m = 0; m < x.dim(); ++m) x.coeffs_[m] += y.coeffs_[m];
    return x;
  }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) {
    check(x, y);
    for (std::size_t m = 0; m < x.dim(); ++m) x.coeffs_[m] -= y.coeffs_[m];
    return x;
  }
  friend CliffordElement operator*(const Scalar& s, CliffordElement x) {
    for (auto& c : x.coeffs_) c = s * c;
    return x;
  }
  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.n_ == y.n_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const CliffordElement& x, const CliffordElement& y) { return !(x == y); }

  /// Antilinear anti-involution with self-adjoint generators.
  CliffordElement star() const {
    CliffordElement s(n_);
    for (std::uint32_t m = 0; m < dim(); ++m) {
      int k = __builtin_popcount(m);
      Scalar c = coeffs_[m].conj();
      s.coeffs_[m] = (k * (k - 1) / 2) % 2 ? Scalar(0) - c : c;
    }
    return s;
  }

 private:
  static void check(const CliffordElement& x, const CliffordElement& y) {
    if (x.n_ != y.n_) throw InvalidArgument("Clifford elements of different algebras");
  }

  std::size_t n_ = 0;
  std::vector<Scalar> coeffs_;
};

using Clifford = CliffordElement<GaussianRational>;

inline constexpr std::size_t kCliffordMaxN = 3;

/// P = prod_j (1/2)(1 - i e_j eps^j).
template <class Scalar = GaussianRational>
CliffordElement<Scalar> projection_P(std::size_t n) {
  using E = CliffordElement<Scalar>;
  E p(n, Scalar(1));
  const Scalar half = Scalar(1) / Scalar(2);
  const Scalar i = Scalar(GaussianRational::i());
  for (std::size_t j = 0; j < n; ++j) p = p * (half * (E(n, Scalar(1)) - i * (E::e(n, j) * E::eps(n, j))));
  return p;
}

/// P^v = prod_j (1/2)(1 - i eps^j e_j).
template <class Scalar = GaussianRational>
CliffordElement<Scalar> projection_P_dual(std::size_t n) {
  using E = CliffordElement<Scalar>;
  E p(n, Scalar(1));
  const Scalar half = Scalar(1) / Scalar(2);
  const Scalar i = Scalar(GaussianRational::i());
  for (std::size_t j = 0; j < n; ++j) p = p * (half * (E(n, Scalar(1)) - i * (E::eps(n, j) * E::e(n, j))));
  return p;
}

/// Matrix (in the monomial basis) of the linear map x -> f(monomial).
template <class Scalar, class F>
Matrix<Scalar> linear_map_matrix(std::size_t n, F f) {
  const std::size_t d = std::size_t{1} << (2 * n);
  Matrix<Scalar> m(d, d, Scalar(0));
  for (std::uint32_t b = 0; b < d; ++b) {
    CliffordElement<Scalar> x(n);
    x[b] = Scalar(1);
    CliffordElement<Scalar> y = f(x);
    for (std::size_t a = 0; a < d; ++a) m(a, b) = y[a];
  }
  return m;
}

/// dim of Cl * P (the spinor space).
inline std::size_t spinor_dimension(std::size_t n) {
  auto p = projection_P(n);
  return rank(linear_map_matrix<GaussianRational>(n, [&](const Clifford& x) { return x * p; }));
}

/// dim of P * Cl.
inline std::size_t left_ideal_dimension(std::size_t n) {
  auto p = projection_P(n);
  return rank(linear_map_matrix<GaussianRational>(n, [&](const Clifford& x) { return p * x; }));
}

/// dim of P * Cl * P; must be 1.
inline std::size_t corner_dimension(std::size_t n) {
  auto p = projection_P(n);
  std::size_t d = rank(linear_map_matrix<GaussianRational>(n, [&](const Clifford& x) { return p * x * p; }));
  if (d != 1) throw InternalError("corner algebra has dimension " + std::to_string(d) + ", expected 1");
  return d;
}

/// u = eps^1 ... eps^n for even n, e_1 ... e_n for odd n.
inline Clifford u_element(std::size_t n) {
  Clifford u(n, GaussianRational(1));
  for (std::size_t j = 0; j < n; ++j) u = u * (n % 2 == 0 ? Clifford::eps(n, j) : Clifford::e(n, j));
  return u;
}

struct UConjugationReport {
  bool e_fixed = true;
  bool eps_negated = true;
  bool p_to_p_dual = true;
  bool unitary = true;
  bool all() const { return e_fixed && eps_negated && p_to_p_dual && unitary; }
};

inline UConjugationReport u_conjugation_report(std::size_t n) {
  UConjugationReport r;
  Clifford u = u_element(n), us = u.star();
  Clifford one(n, GaussianRational(1));
  r.unitary = u * us == one && us * u == one;
  for (std::size_t j = 0; j < n; ++j) {
    if (u * Clifford::e(n, j) * us != Clifford::e(n, j)) r.e_fixed = false;
    if (u * Clifford::eps(n, j) * us != GaussianRational(-1) * Clifford::eps(n, j)) r.eps_negated = false;
  }
  r.p_to_p_dual = u * projection_P(n) * us == projection_P_dual(n);
  return r;
}

inline bool u_conjugation_check(std::size_t n) { return u_conjugation_report(n).all(); }

/// Symmetric polynomial in x_1..x_n as a sum of coeff * p_{l1} p_{l2} ...
/// with power sums p_k = sum_j x_j^k.
struct PowerSumTerm {
  Rational coeff;
  std::vector<int> partition;
};
using PowerSumPolynomial = std::vector<PowerSumTerm>;

template <class Scalar>
CliffordElement<Scalar> evaluate_power_sums(const PowerSumPolynomial& poly, const std::vector<CliffordElement<Scalar>>& x) {
  const std::size_t n = x.front().n();
  CliffordElement<Scalar> total(n);
  for (auto& term : poly) {
    CliffordElement<Scalar> prod(n, Scalar(GaussianRational(term.coeff)));
    for (int k : term.partition) {
      if (k < 1) throw InvalidArgument("power sum index must be positive");
      CliffordElement<Scalar> pk(n);
      for (auto& xj : x) {
        CliffordElement<Scalar> power(n, Scalar(1));
        for (int t = 0; t < k; ++t) power = power * xj;
        pk = pk + power;
      }
      prod = prod * pk;
    }
    total = total + prod;
  }
  return total;
}

/// Evaluates p(e_1 eps^1, ..., e_n eps^n), applies w diagonally to t x t*
/// and reports whether the element is unchanged. w must be orthogonal.
template <class Scalar>
bool symmetric_invariance_check(std::size_t n, const Matrix<Scalar>& w, const PowerSumPolynomial& p) {
  using E = CliffordElement<Scalar>;
  if (w.rows() != n || w.cols() != n) throw InvalidArgument("matrix size does not match n");
  Matrix<Scalar> wt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) wt(i, j) = w(j, i).conj();
  if (wt * w != Matrix<Scalar>::identity(n)) throw InvalidArgument("matrix is not orthogonal");
  std::vector<E> x, wx;
  for (std::size_t j = 0; j < n; ++j) {
    x.push_back(E::e(n, j) * E::eps(n, j));
    E we(n), weps(n);
    for (std::size_t i = 0; i < n; ++i) {
      we = we + w(i, j) * E::e(n, i);
      weps = weps + w(i, j) * E::eps(n, i);
    }
    wx.push_back(we * weps);
  }
  return evaluate_power_sums(p, x) == evaluate_power_sums(p, wx);
}

using RealMatrix3 = Matrix<GaussianSqrt3>;

/// Generators of W(A_2) acting orthogonally on R^2 (entries in Q(sqrt 3)).
inline std::vector<RealMatrix3> orthogonal_weyl_a2() {
  const GaussianSqrt3 half = GaussianSqrt3(GaussianRational(Rational(1, 2)));
  const GaussianSqrt3 r3half{GaussianRational(0), GaussianRational(Rational(1, 2))};
  RealMatrix3 s1{{GaussianSqrt3(-1), GaussianSqrt3(0)}, {GaussianSqrt3(0), GaussianSqrt3(1)}};
  RealMatrix3 s2{{half, r3half}, {r3half, GaussianSqrt3(0) - half}};
  return {s1, s2};
}

/// Generators of W(G_2) acting orthogonally on R^2.
inline std::vector<RealMatrix3> orthogonal_weyl_g2() {
  const GaussianSqrt3 half = GaussianSqrt3(GaussianRational(Rational(1, 2)));
  const GaussianSqrt3 r3half{GaussianRational(0), GaussianRational(Rational(1, 2))};
  RealMatrix3 s1{{GaussianSqrt3(-1), GaussianSqrt3(0)}, {GaussianSqrt3(0), GaussianSqrt3(1)}};
  RealMatrix3 s2{{GaussianSqrt3(0) - half, r3half}, {r3half, half}};
  return {s1, s2};
}

/// Integer orthogonal generators: W(A_1) on R, W(A_2) permuting R^3,
/// W(B_n) = W(C_n) as signed permutations of R^n.
inline std::vector<RealMatrix3> orthogonal_weyl_integral(const std::string& name) {
  auto from_int = [](const IntMatrix& m) {
    RealMatrix3 r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = GaussianSqrt3(static_cast<int>(m(i, j)));
    return r;
  };
  if (name == "A1") return {from_int(IntMatrix{{-1}})};
  if (name == "A2") return {from_int(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), from_int(IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})};
  if (name == "B2") return {from_int(IntMatrix{{0, 1}, {1, 0}}), from_int(IntMatrix{{1, 0}, {0, -1}})};
  if (name == "B3")
    return {from_int(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), from_int(IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
            from_int(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})};
  throw InvalidArgument("no integral orthogonal realization for " + name);
}

/// All elements of the group generated by the given matrices.
template <class Scalar>
std::vector<Matrix<Scalar>> matrix_closure(const std::vector<Matrix<Scalar>>& gens, std::size_t cap = 10000) {
  const std::size_t n = gens.front().rows();
  std::vector<Matrix<Scalar>> out{Matrix<Scalar>::identity(n)};
  for (std::size_t q = 0; q < out.size(); ++q)
    for (auto& g : gens) {
      Matrix<Scalar> m = out[q] * g;
      if (std::find(out.begin(), out.end(), m) != out.end()) continue;
      if (out.size() >= cap) throw ResourceLimit("matrix group exceeds the cap");
      out.push_back(std::move(m));
    }
  return out;
}

struct CliffordCheckResult {
  std::string name;
  bool passed;
};

/// Every algebraic identity checked for a given n (1 <= n <= 3).
inline std::vector<CliffordCheckResult> clifford_check(std::size_t n) {
  if (n < 1 || n > kCliffordMaxN)
    throw InvalidArgument("clifford-check supports 1 <= n <= " + std::to_string(kCliffordMaxN));
  std::vector<CliffordCheckResult> out;
  auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  Clifford p = projection_P(n);
  Clifford one(n, GaussianRational(1));
  add("P*P == P", p * p == p);
  add("star(P) == P", p.star() == p);
  bool sq = true;
  for (std::size_t j = 0; j < n; ++j) {
    Clifford x = Clifford::e(n, j) * Clifford::eps(n, j);
    if (x * x != GaussianRational(-1) * one) sq = false;
  }
  add("(e_j eps^j)^2 == -1", sq);
  const std::size_t expected = std::size_t{1} << n;
  add("dim Cl*P == 2^n", spinor_dimension(n) == expected);
  add("dim P*Cl == 2^n", left_ideal_dimension(n) == expected);
  std::size_t corner = 0;
  try {
    corner = corner_dimension(n);
  } catch (const InternalError&) {
  }
  add("dim P*Cl*P == 1", corner == 1);
  auto u = u_conjugation_report(n);
  add("u unitary", u.unitary);
  add("u e_j u* == e_j", u.e_fixed);
  add("u eps^j u* == -eps^j", u.eps_negated);
  add("u P u* == P^v", u.p_to_p_dual);
  std::vector<RealMatrix3> gens;
  if (n == 1) gens = orthogonal_weyl_integral("A1");
  if (n == 2) gens = orthogonal_weyl_a2();
  if (n == 3) gens = orthogonal_weyl_integral("A2");
  auto group = matrix_closure(gens);
  for (int k = 1; k <= 4; ++k) {
    bool ok = true;
    for (auto& w : group) ok = ok && symmetric_invariance_check(n, w, PowerSumPolynomial{{Rational(1), {k}}});
    add("W-invariance of p_" + std::to_string(k), ok);
  }
  return out;
}

}  // namespace weylk
