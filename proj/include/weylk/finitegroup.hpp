#pragma once

// Finite groups of integer matrices: enumeration by closure, conjugacy
// classes and centralizers.

#include "weylk/arith.hpp"
#include "weylk/rootdata.hpp"

#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace weylk {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

class MatrixGroup {
 public:
  MatrixGroup() = default;

  /// Closure of the generators under multiplication (BFS from the identity,
  /// right-multiplying by generators). Element 0 is the identity.
  static MatrixGroup generate(const std::vector<IntMatrix>& gens, std::size_t dim,
                              std::size_t cap = kDefaultGroupCap) {
    MatrixGroup g;
    g.dim_ = dim;
    g.generators_ = gens;
    for (auto& m : gens) {
      if (m.rows() != dim || m.cols() != dim) throw InvalidArgument("generator has wrong shape");
      Rational d = determinant(m);
      if (d != 1 && d != -1) throw InvalidArgument("generator is not invertible over the integers");
    }
    g.add(IntMatrix::identity(dim), {});
    for (std::size_t q = 0; q < g.elements_.size(); ++q) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        IntMatrix next = g.elements_[q] * gens[k];
        if (g.index_.count(next)) continue;
        if (g.elements_.size() >= cap)
          throw ResourceLimit("group enumeration exceeded the cap of " + std::to_string(cap) + " elements");
        auto word = g.words_[q];
        word.push_back(static_cast<int>(k));
        g.add(std::move(next), std::move(word));
      }
    }
    return g;
  }

  /// Subgroup generated by a list of its elements; generators are chosen
  /// greedily in the given order.
  static MatrixGroup from_elements(const std::vector<IntMatrix>& elems, std::size_t dim) {
    std::vector<IntMatrix> gens;
    MatrixGroup current = generate({}, dim);
    for (auto& e : elems) {
      if (current.contains(e)) continue;
      gens.push_back(e);
      current = generate(gens, dim);
    }
    return current;
  }

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<IntMatrix>& generators() const { return generators_; }
  const std::vector<IntMatrix>& elements() const { return elements_; }
  const IntMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }

  std::optional<std::size_t> index_of(const IntMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const IntMatrix& m) const { return index_.count(m) > 0; }

  std::size_t at(const IntMatrix& m) const {
    auto i = index_of(m);
    if (!i) throw InternalError("matrix is not a group element");
    return *i;
  }

  std::size_t multiply(std::size_t a, std::size_t b) const { return at(elements_[a] * elements_[b]); }

  std::size_t inverse(std::size_t a) const {
    if (inverses_.empty()) compute_inverses();
    return inverses_[a];
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    IntMatrix p = elements_[a];
    const IntMatrix id = IntMatrix::identity(dim_);
    while (p != id) {
      p = p * elements_[a];
      ++k;
    }
    return k;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (std::size_t i = 0; i < order(); ++i) e = std::lcm(e, element_order(i));
    return e;
  }

  bool is_subset_of(const MatrixGroup& other) const {
    for (auto& m : elements_)
      if (!other.contains(m)) return false;
    return true;
  }

  bool same_elements(const MatrixGroup& other) const {
    return order() == other.order() && is_subset_of(other);
  }

 private:
  void add(IntMatrix m, std::vector<int> word) {
    index_.emplace(m, elements_.size());
    elements_.push_back(std::move(m));
    words_.push_back(std::move(word));
  }

  void compute_inverses() const {
    inverses_.assign(order(), 0);
    std::vector<bool> done(order(), false);
    const IntMatrix id = IntMatrix::identity(dim_);
    for (std::size_t a = 0; a < order(); ++a) {
      if (done[a]) continue;
      // a^{-1} = a^{k-1} where k is the order of a.
      IntMatrix p = elements_[a], prev = id;
      while (p != id) {
        prev = p;
        p = p * elements_[a];
      }
      std::size_t b = at(prev);
      inverses_[a] = b;
      inverses_[b] = a;
      done[a] = done[b] = true;
    }
  }

  std::size_t dim_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<IntMatrix> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> index_;
  mutable std::vector<std::size_t> inverses_;
};

struct ConjugacyClasses {
  std::vector<std::size_t> reps;      // element index of each class representative
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t count() const { return reps.size(); }
};

/// Classes ordered by their minimal element index; the representative is
/// that minimal element.
inline ConjugacyClasses conjugacy_classes(const MatrixGroup& g) {
  ConjugacyClasses cc;
  const std::size_t none = static_cast<std::size_t>(-1);
  cc.class_of.assign(g.order(), none);
  std::vector<IntMatrix> gen_inv;
  for (auto& s : g.generators()) gen_inv.push_back(to_int(inverse(to_rational(s))));
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (cc.class_of[start] != none) continue;
    const std::size_t cls = cc.reps.size();
    std::vector<std::size_t> orbit{start};
    cc.class_of[start] = cls;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        std::size_t c = g.at(gen_inv[k] * g.element(orbit[q]) * g.generators()[k]);
        if (cc.class_of[c] == none) {
          cc.class_of[c] = cls;
          orbit.push_back(c);
        }
      }
    cc.reps.push_back(start);
    cc.sizes.push_back(orbit.size());
  }
  return cc;
}

/// Indices of the elements commuting with element w.
inline std::vector<std::size_t> centralizer(const MatrixGroup& g, std::size_t w) {
  std::vector<std::size_t> out;
  const IntMatrix& m = g.element(w);
  for (std::size_t c = 0; c < g.order(); ++c)
    if (g.element(c) * m == m * g.element(c)) out.push_back(c);
  return out;
}

/// Weyl group generated by the simple reflections acting on t (simple-coroot
/// coordinates). The same matrices act on every cocharacter lattice of the type.
inline MatrixGroup weyl_group(const RootDatum& rd, std::size_t cap = kDefaultGroupCap) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rd.rank(); ++i) gens.push_back(rd.simple_reflection(i));
  return MatrixGroup::generate(gens, rd.rank(), cap);
}

}  // namespace weylk
