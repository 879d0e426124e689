#pragma once

// Smith normal form over the integers and finitely generated abelian groups
// in invariant-factor form.

#include "weylk/arith.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace weylk {

struct SmithForm {
  BigMatrix U;  // unimodular, rows x rows
  BigMatrix D;  // diagonal with d1 | d2 | ... , nonnegative
  BigMatrix V;  // unimodular, cols x cols
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <bool Track>
class SmithReducer {
 public:
  explicit SmithReducer(BigMatrix m) : a_(std::move(m)) {
    if constexpr (Track) {
      u_ = BigMatrix::identity(a_.rows());
      v_ = BigMatrix::identity(a_.cols());
    }
  }

  void run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a_(i, t) == 0) continue;
          Integer q = a_(i, t) / a_(t, t);
          add_row(i, t, -q);
          if (a_(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a_(t, j) == 0) continue;
          Integer q = a_(t, j) / a_(t, t);
          add_col(j, t, -q);
          if (a_(t, j) != 0) dirty = true;
        }
        if (dirty) {
          move_min_to(t);
          continue;
        }
        // Pivot row and column are clear; enforce divisibility on the rest.
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_(i, j) % a_(t, t) != 0) {
              add_row(t, i, 1);
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (a_(t, t) < 0) negate_row(t);
      rank_ = t + 1;
    }
  }

  BigMatrix& a() { return a_; }
  BigMatrix& u() { return u_; }
  BigMatrix& v() { return v_; }
  std::size_t rank() const { return rank_; }

 private:
  // Moves the smallest nonzero |entry| of the trailing block to (t,t).
  bool move_min_to(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        Integer mag = abs(a_(i, j));
        if (!found || mag < best) {
          best = mag;
          bi = i;
          bj = j;
          found = true;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if constexpr (Track)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if constexpr (Track)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
  }
  // row_i += f * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& f) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_(k, j) != 0) a_(i, j) += f * a_(k, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_(k, j) != 0) u_(i, j) += f * u_(k, j);
  }
  // col_j += f * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& f) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_(i, k) != 0) a_(i, j) += f * a_(i, k);
    if constexpr (Track)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_(i, k) != 0) v_(i, j) += f * v_(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
  }

  BigMatrix a_, u_, v_;
  std::size_t rank_ = 0;
};

}  // namespace detail

/// Returns U, D, V with U * m * V = D in Smith normal form.
inline SmithForm smith_normal_form(const BigMatrix& m) {
  detail::SmithReducer<true> r(m);
  r.run();
  return SmithForm{std::move(r.u()), std::move(r.a()), std::move(r.v()), r.rank()};
}

inline SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

/// Nonzero invariant factors of m (including 1s), without transforms.
inline std::vector<Integer> invariant_factors(const BigMatrix& m) {
  detail::SmithReducer<false> r(m);
  r.run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < r.rank(); ++i) d.push_back(r.a()(i, i));
  return d;
}

inline std::vector<Integer> invariant_factors(const IntMatrix& m) { return invariant_factors(to_big(m)); }

/// Finitely generated abelian group Z^rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// Canonical form of Z^rank + sum of Z/c for arbitrary positive orders c.
  static AbelianGroup from_cyclic(std::size_t rank, const std::vector<Integer>& orders) {
    std::vector<Integer> nontrivial;
    for (const auto& c : orders) {
      if (c <= 0) throw InvalidArgument("cyclic order must be positive");
      if (c > 1) nontrivial.push_back(c);
    }
    AbelianGroup g;
    g.rank = rank;
    if (nontrivial.empty()) return g;
    BigMatrix d(nontrivial.size(), nontrivial.size());
    for (std::size_t i = 0; i < nontrivial.size(); ++i) d(i, i) = nontrivial[i];
    for (auto& x : invariant_factors(d))
      if (x > 1) g.torsion.push_back(x);
    return g;
  }

  /// Cokernel of an integer matrix m : Z^cols -> Z^rows.
  static AbelianGroup cokernel(const BigMatrix& m) {
    auto d = invariant_factors(m);
    AbelianGroup g;
    g.rank = m.rows() - d.size();
    for (auto& x : d)
      if (x > 1) g.torsion.push_back(x);
    return g;
  }

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool free() const { return torsion.empty(); }

  Integer torsion_order() const {
    Integer o = 1;
    for (auto& t : torsion) o *= t;
    return o;
  }

  friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> t = a.torsion;
    t.insert(t.end(), b.torsion.begin(), b.torsion.end());
    return from_cyclic(a.rank + b.rank, t);
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (auto& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
  }

  friend std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.str(); }
};

}  // namespace weylk
