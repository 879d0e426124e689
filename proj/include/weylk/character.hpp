#pragma once

// Character tables of finite matrix groups by the Burnside-Dixon method over
// a prime field, lifted to exact cyclotomic values, and the induction /
// restriction maps between representation rings.

#include "weylk/finitegroup.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace weylk {

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InternalError("inverse of zero modulo p");
  return pow(a, p - 2, p);
}

inline std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime p > lower with p = 1 mod m.
inline std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower) {
  std::uint64_t p = (lower / m + 1) * m + 1;
  while (!is_prime(p)) p += m;
  return p;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

/// A primitive m-th root of unity modulo p (requires m | p-1).
inline std::uint64_t root_of_unity(std::uint64_t m, std::uint64_t p) {
  if ((p - 1) % m != 0) throw InternalError("order does not divide p-1");
  return pow(primitive_root(p), (p - 1) / m, p);
}

// Basis (columns) of the kernel of an r x d matrix over F_p.
inline std::vector<std::vector<std::uint64_t>> kernel(std::vector<std::vector<std::uint64_t>> m, std::size_t cols,
                                                      std::uint64_t p) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t iv = inv(m[rank][c], p);
    for (auto& x : m[rank]) x = mul(x, iv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - mul(f, m[rank][j], p)) % p;
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace modp

/// Exact character value: sum_k mult[k] * exp(2 pi i k / order), i.e. the
/// trace of a matrix of finite order given by its eigenvalue multiplicities.
struct CyclotomicValue {
  std::uint64_t order = 1;
  std::vector<std::int64_t> mult{0};

  static CyclotomicValue integer(std::int64_t v) { return {1, {v}}; }

  std::uint64_t reduce(std::uint64_t p, std::uint64_t zeta, std::uint64_t zeta_order) const {
    if (zeta_order % order != 0) throw InternalError("root of unity has incompatible order");
    std::uint64_t z = modp::pow(zeta, zeta_order / order, p), acc = 0, zk = 1;
    for (std::size_t k = 0; k < mult.size(); ++k) {
      acc = (acc + modp::mul(modp::reduce(mult[k], p), zk, p)) % p;
      zk = modp::mul(zk, z, p);
    }
    return acc;
  }

  CyclotomicValue conj() const {
    CyclotomicValue c{order, std::vector<std::int64_t>(mult.size(), 0)};
    for (std::size_t k = 0; k < mult.size(); ++k) c.mult[(order - k) % order] = mult[k];
    return c;
  }

  /// Rational iff the multiplicities are constant on Galois orbits, i.e.
  /// depend only on gcd(k, order).
  bool is_rational() const {
    for (std::size_t k = 0; k < order; ++k)
      for (std::size_t u = 2; u < order; ++u)
        if (std::gcd(u, static_cast<std::size_t>(order)) == 1 && mult[(k * u) % order] != mult[k]) return false;
    return true;
  }

  std::int64_t as_integer() const {
    if (!is_rational()) throw InternalError("non-rational character");
    // Primitive d-th roots of unity sum to mu(d).
    Rational v = 0;
    for (std::size_t k = 0; k < order; ++k) {
      if (!mult[k]) continue;
      std::uint64_t d = order / std::gcd(static_cast<std::uint64_t>(k), order);
      v += Rational(mult[k] * mobius(d), static_cast<std::int64_t>(euler_phi(d)));
    }
    if (!is_integer(v)) throw InternalError("rational character value is not an integer");
    return static_cast<std::int64_t>(numerator(v));
  }

  std::complex<double> numeric() const {
    std::complex<double> s = 0;
    const double two_pi = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < mult.size(); ++k)
      s += static_cast<double>(mult[k]) * std::polar(1.0, two_pi * static_cast<double>(k) / static_cast<double>(order));
    return s;
  }

  /// Integer text for rational values; otherwise a sum of E(order)^k terms.
  std::string str() const {
    if (is_rational()) return std::to_string(as_integer());
    std::string s;
    for (std::size_t k = 0; k < mult.size(); ++k) {
      if (!mult[k]) continue;
      std::string term = k == 0 ? "1" : "E(" + std::to_string(order) + ")" + (k == 1 ? "" : "^" + std::to_string(k));
      if (mult[k] != 1) term = std::to_string(mult[k]) + "*" + term;
      s += (s.empty() ? "" : "+") + term;
    }
    return s;
  }

 private:
  static std::int64_t mobius(std::uint64_t n) {
    std::int64_t m = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) return 0;
        m = -m;
      }
    if (n > 1) m = -m;
    return m;
  }
  static std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        while (n % d == 0) n /= d;
        r -= r / d;
      }
    if (n > 1) r -= r / n;
    return r;
  }
};

struct CharacterTable {
  std::size_t order = 0;
  std::uint64_t exponent = 1;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> class_reps;
  std::vector<std::size_t> class_orders;
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<int>> class_rep_words;
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<CyclotomicValue>> values;  // [irrep][class]

  std::size_t num_classes() const { return class_sizes.size(); }
  std::size_t num_irreps() const { return degrees.size(); }

  bool rational() const {
    for (auto& row : values)
      for (auto& v : row)
        if (!v.is_rational()) return false;
    return true;
  }

  /// Integer table; throws "non-rational character" otherwise.
  IntMatrix integer_table() const {
    IntMatrix t(num_irreps(), num_classes());
    for (std::size_t i = 0; i < num_irreps(); ++i)
      for (std::size_t c = 0; c < num_classes(); ++c) t(i, c) = values[i][c].as_integer();
    return t;
  }
};

namespace detail {

struct DixonField {
  std::uint64_t p, zeta;
};

inline std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace detail

/// Complete character table. Irreducibles are sorted by degree, then by
/// eigenvalue data (the trivial character first).
inline CharacterTable character_table(const MatrixGroup& g, const ConjugacyClasses& cc) {
  using u64 = std::uint64_t;
  CharacterTable t;
  const std::size_t n = g.order(), r = cc.count();
  t.order = n;
  t.class_sizes = cc.sizes;
  t.class_reps = cc.reps;
  for (auto rep : cc.reps) {
    t.class_orders.push_back(g.element_order(rep));
    t.class_rep_words.push_back(g.word(rep));
    t.inverse_class.push_back(cc.class_of[g.inverse(rep)]);
  }
  for (auto o : t.class_orders) t.exponent = std::lcm(t.exponent, static_cast<u64>(o));

  const std::size_t root_n = detail::isqrt(n);
  const u64 p = modp::prime_one_mod(t.exponent, 2 * root_n + 2);
  const u64 zeta = modp::root_of_unity(t.exponent, p);

  // Class multiplication coefficients: a[j][i][k] = #{x in C_j : x^{-1} g_k in C_i}.
  std::vector<std::vector<std::vector<u64>>> a(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const IntMatrix& z = g.element(cc.reps[k]);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t j = cc.class_of[x];
      std::size_t i = cc.class_of[g.at(g.element(g.inverse(x)) * z)];
      ++a[j][i][k];
    }
  }

  // Split F_p^r into common eigenspaces of the class matrices M_j.
  using Vec = std::vector<u64>;
  std::vector<std::vector<Vec>> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    spaces[0].push_back(e);
  }
  for (std::size_t j = 1; j < r; ++j) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](auto& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const std::size_t d = basis.size();
      // Image of the basis under M_j, as r x d columns.
      std::vector<Vec> mb(d, Vec(r, 0));
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t i = 0; i < r; ++i) {
          u64 s = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (a[j][i][k]) s = (s + modp::mul(a[j][i][k] % p, basis[c][k], p)) % p;
          mb[c][i] = s;
        }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        std::vector<Vec> rows(r, Vec(d, 0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t c = 0; c < d; ++c)
            rows[i][c] = (mb[c][i] + p - modp::mul(lambda, basis[c][i], p)) % p;
        auto ker = modp::kernel(rows, d, p);
        if (ker.empty()) continue;
        std::vector<Vec> sub;
        for (auto& coeff : ker) {
          Vec v(r, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + modp::mul(coeff[c], basis[c][i], p)) % p;
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != d) throw InternalError("class matrix is not diagonalizable modulo p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InternalError("class algebra eigenspaces did not split completely");

  // Power maps: class of rep^s for s < order.
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    IntMatrix acc = IntMatrix::identity(g.dim());
    for (std::size_t s = 0; s < t.class_orders[k]; ++s) {
      power_class[k].push_back(cc.class_of[g.at(acc)]);
      acc = acc * g.element(cc.reps[k]);
    }
  }

  struct Irrep {
    std::int64_t degree;
    std::vector<CyclotomicValue> values;
  };
  std::vector<Irrep> irreps;
  const u64 n_mod = n % p;
  for (auto& space : spaces) {
    Vec v = space.front();
    if (v[0] == 0) throw InternalError("central character vanishes at the identity");
    u64 s = modp::inv(v[0], p);
    for (auto& x : v) x = modp::mul(x, s, p);
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = (sum + modp::mul(modp::mul(v[k], v[t.inverse_class[k]], p), modp::inv(cc.sizes[k] % p, p), p)) % p;
    u64 deg_sq = modp::mul(n_mod, modp::inv(sum, p), p);
    std::int64_t degree = 0;
    for (std::size_t d = 1; d <= root_n; ++d)
      if ((d * d) % p == deg_sq) {
        degree = static_cast<std::int64_t>(d);
        break;
      }
    if (degree == 0) throw InternalError("could not lift a character degree");
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = modp::mul(modp::mul(v[k], static_cast<u64>(degree), p), modp::inv(cc.sizes[k] % p, p), p);
    Irrep irrep{degree, {}};
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = t.class_orders[k];
      const u64 zo = modp::pow(zeta, t.exponent / o, p);
      const u64 zo_inv = modp::inv(zo, p);
      CyclotomicValue val{o, std::vector<std::int64_t>(o, 0)};
      std::int64_t total = 0;
      for (u64 jj = 0; jj < o; ++jj) {
        u64 acc = 0;
        const u64 step = modp::pow(zo_inv, jj, p);
        u64 w = 1;
        for (u64 s2 = 0; s2 < o; ++s2) {
          acc = (acc + modp::mul(chi[power_class[k][s2]], w, p)) % p;
          w = modp::mul(w, step, p);
        }
        acc = modp::mul(acc, modp::inv(o % p, p), p);
        if (acc > static_cast<u64>(degree)) throw InternalError("eigenvalue multiplicity failed to lift");
        val.mult[jj] = static_cast<std::int64_t>(acc);
        total += val.mult[jj];
      }
      if (total != degree) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      irrep.values.push_back(std::move(val));
    }
    irreps.push_back(std::move(irrep));
  }

  std::sort(irreps.begin(), irreps.end(), [](const Irrep& x, const Irrep& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    for (std::size_t k = 0; k < x.values.size(); ++k)
      if (x.values[k].mult != y.values[k].mult) return x.values[k].mult > y.values[k].mult;
    return false;
  });
  for (auto& ir : irreps) {
    t.degrees.push_back(ir.degree);
    t.values.push_back(std::move(ir.values));
  }
  return t;
}

inline CharacterTable character_table(const MatrixGroup& g) { return character_table(g, conjugacy_classes(g)); }

/// A finite group with its classes and character table.
struct FiniteGroup {
  MatrixGroup group;
  ConjugacyClasses classes;
  CharacterTable table;

  static std::shared_ptr<const FiniteGroup> make(MatrixGroup g) {
    auto fg = std::make_shared<FiniteGroup>();
    fg->group = std::move(g);
    fg->classes = conjugacy_classes(fg->group);
    fg->table = character_table(fg->group, fg->classes);
    return fg;
  }

  std::size_t order() const { return group.order(); }
  std::size_t num_irreps() const { return table.num_irreps(); }
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Homomorphism of representation rings in irreducible bases:
/// column j is the image of the j-th source irreducible.
struct RepRingMap {
  IntMatrix matrix;  // target irreps x source irreps
};

/// Restriction from `big` to `small`, where `embedding[h]` is the index in
/// `big` of the image of element h of `small` (an injective homomorphism).
inline RepRingMap restriction_map(const FiniteGroup& big, const FiniteGroup& small,
                                  const std::vector<std::size_t>& embedding) {
  using u64 = std::uint64_t;
  if (embedding.size() != small.order()) throw InvalidArgument("embedding size mismatch");
  const u64 e = std::lcm(big.table.exponent, small.table.exponent);
  std::int64_t max_degree = *std::max_element(big.table.degrees.begin(), big.table.degrees.end());
  const u64 p = modp::prime_one_mod(e, 2 * static_cast<u64>(max_degree) + 2);
  const u64 zeta = modp::root_of_unity(e, p);
  const auto& st = small.table;
  const auto& bt = big.table;
  std::vector<std::size_t> big_class(st.num_classes());
  for (std::size_t c = 0; c < st.num_classes(); ++c) big_class[c] = big.classes.class_of[embedding[st.class_reps[c]]];
  const u64 inv_order = modp::inv(small.order() % p, p);
  RepRingMap m{IntMatrix(st.num_irreps(), bt.num_irreps(), 0)};
  for (std::size_t j = 0; j < bt.num_irreps(); ++j)
    for (std::size_t i = 0; i < st.num_irreps(); ++i) {
      u64 acc = 0;
      for (std::size_t c = 0; c < st.num_classes(); ++c) {
        u64 psi = bt.values[j][big_class[c]].reduce(p, zeta, e);
        u64 chi_bar = st.values[i][c].conj().reduce(p, zeta, e);
        acc = (acc + modp::mul(modp::mul(st.class_sizes[c] % p, psi, p), chi_bar, p)) % p;
      }
      acc = modp::mul(acc, inv_order, p);
      if (acc > static_cast<u64>(bt.degrees[j])) throw InternalError("restriction multiplicity failed to lift");
      m.matrix(i, j) = static_cast<std::int64_t>(acc);
    }
  return m;
}

/// Restriction to a subgroup given by the same matrices.
inline RepRingMap restriction_map(const FiniteGroup& big, const FiniteGroup& small) {
  std::vector<std::size_t> emb;
  for (auto& m : small.group.elements()) {
    auto idx = big.group.index_of(m);
    if (!idx) throw InvalidArgument("subgroup containment check failed");
    emb.push_back(*idx);
  }
  return restriction_map(big, small, emb);
}

/// Induction is the transpose of restriction (Frobenius reciprocity).
inline RepRingMap induction_map(const FiniteGroup& small, const FiniteGroup& big,
                                const std::vector<std::size_t>& embedding) {
  return {restriction_map(big, small, embedding).matrix.transpose()};
}

inline RepRingMap induction_map(const FiniteGroup& small, const FiniteGroup& big) {
  return {restriction_map(big, small).matrix.transpose()};
}

}  // namespace weylk
