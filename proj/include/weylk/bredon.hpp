#pragma once

// Bredon chain complexes with representation-ring coefficients, their integral
// homology, and the resulting K-groups.

#include "weylk/alcove.hpp"
#include "weylk/smith.hpp"

#include <future>
#include <string>
#include <vector>

namespace weylk {

struct BasisLabel {
  std::size_t cell;
  std::size_t irrep;
};

struct ChainComplex {
  std::vector<std::size_t> ranks;
  // differentials[p] : C_p -> C_{p-1}; differentials[0] is the 0 x ranks[0] map.
  std::vector<BigMatrix> differentials;
  std::vector<std::vector<BasisLabel>> labels;

  std::size_t top() const { return ranks.empty() ? 0 : ranks.size() - 1; }

  void check() const {
    if (differentials.size() != ranks.size()) throw InternalError("differential count mismatch");
    for (std::size_t p = 0; p < ranks.size(); ++p) {
      const auto& d = differentials[p];
      std::size_t rows = p == 0 ? 0 : ranks[p - 1];
      if (d.rows() != rows || d.cols() != ranks[p]) throw InternalError("differential has wrong shape");
    }
    for (std::size_t p = 2; p < ranks.size(); ++p)
      if (!(differentials[p - 1] * differentials[p]).is_zero()) throw InternalError("boundary squared is not zero");
  }

  /// Builds a complex from d_1, ..., d_top (d_p : C_p -> C_{p-1}).
  static ChainComplex from_differentials(const std::vector<BigMatrix>& ds, std::size_t rank0) {
    ChainComplex c;
    c.ranks.push_back(rank0);
    c.differentials.push_back(BigMatrix(0, rank0));
    for (auto& d : ds) {
      c.ranks.push_back(d.cols());
      c.differentials.push_back(d);
    }
    c.labels.resize(c.ranks.size());
    c.check();
    return c;
  }
};

namespace detail {

// Block of d_p for a cell and one of its faces: sign * induction from the
// cell's stabilizer to the target's, through conjugation by the carrier.
inline IntMatrix face_block(const OrbitCell& cell, const CellFace& face, const OrbitCell& target) {
  const FiniteGroup& small = *cell.stabilizer;
  const FiniteGroup& big = *target.stabilizer;
  const IntMatrix& l = face.carrier.linear;
  const IntMatrix linv = to_int(inverse(to_rational(l)));
  std::vector<std::size_t> emb;
  emb.reserve(small.order());
  for (auto& h : small.group.elements()) {
    auto idx = big.group.index_of(linv * h * l);
    if (!idx) throw InternalError("stabilizer of a cell is not contained in the stabilizer of its face");
    emb.push_back(*idx);
  }
  IntMatrix m = induction_map(small, big, emb).matrix;
  if (face.sign < 0)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return m;
}

inline BigMatrix bredon_differential(const EquivariantComplex& x, std::size_t p,
                                     const std::vector<std::vector<std::size_t>>& offsets,
                                     const std::vector<std::size_t>& ranks) {
  BigMatrix d(ranks[p - 1], ranks[p]);
  for (std::size_t k = 0; k < x.cells[p].size(); ++k) {
    const OrbitCell& cell = x.cells[p][k];
    for (auto& f : cell.faces) {
      const OrbitCell& target = x.cells[p - 1][f.target];
      IntMatrix block = face_block(cell, f, target);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          d(offsets[p - 1][f.target] + i, offsets[p][k] + j) += block(i, j);
    }
  }
  return d;
}

}  // namespace detail

/// C_p = sum over p-cells of R(stabilizer), with induction differentials.
inline ChainComplex bredon_chain_complex(const EquivariantComplex& x, bool parallel = false) {
  if (!is_rigid(x)) throw InvalidArgument("equivariant complex is not rigid");
  ChainComplex c;
  const std::size_t top = x.cells.size();
  std::vector<std::vector<std::size_t>> offsets(top);
  c.ranks.assign(top, 0);
  c.labels.resize(top);
  for (std::size_t p = 0; p < top; ++p)
    for (std::size_t k = 0; k < x.cells[p].size(); ++k) {
      offsets[p].push_back(c.ranks[p]);
      const auto& stab = x.cells[p][k].stabilizer;
      if (!stab) throw InvalidArgument("cell without a stabilizer character table");
      for (std::size_t i = 0; i < stab->num_irreps(); ++i) c.labels[p].push_back({k, i});
      c.ranks[p] += stab->num_irreps();
    }
  c.differentials.resize(top);
  c.differentials[0] = BigMatrix(0, c.ranks[0]);
  if (parallel) {
    std::vector<std::future<BigMatrix>> jobs;
    for (std::size_t p = 1; p < top; ++p)
      jobs.push_back(std::async(std::launch::async, [&, p] { return detail::bredon_differential(x, p, offsets, c.ranks); }));
    for (std::size_t p = 1; p < top; ++p) c.differentials[p] = jobs[p - 1].get();
  } else {
    for (std::size_t p = 1; p < top; ++p) c.differentials[p] = detail::bredon_differential(x, p, offsets, c.ranks);
  }
  c.check();
  return c;
}

/// Integer simplicial boundary of the cell complex, ignoring stabilizers.
inline ChainComplex plain_chain_complex(const EquivariantComplex& x) {
  std::vector<BigMatrix> ds;
  for (std::size_t p = 1; p < x.cells.size(); ++p) {
    BigMatrix d(x.cells[p - 1].size(), x.cells[p].size());
    for (std::size_t k = 0; k < x.cells[p].size(); ++k)
      for (auto& f : x.cells[p][k].faces) d(f.target, k) += f.sign;
    ds.push_back(std::move(d));
  }
  return ChainComplex::from_differentials(ds, x.cells.empty() ? 0 : x.cells[0].size());
}

/// H_p = ker d_p / im d_{p+1}.
inline std::vector<AbelianGroup> homology(const ChainComplex& c, bool parallel = false) {
  const std::size_t top = c.ranks.size();
  std::vector<std::vector<Integer>> factors(top + 1);
  auto job = [&](std::size_t p) { return p < top ? invariant_factors(c.differentials[p]) : std::vector<Integer>{}; };
  if (parallel) {
    std::vector<std::future<std::vector<Integer>>> jobs;
    for (std::size_t p = 0; p <= top; ++p) jobs.push_back(std::async(std::launch::async, job, p));
    for (std::size_t p = 0; p <= top; ++p) factors[p] = jobs[p].get();
  } else {
    for (std::size_t p = 0; p <= top; ++p) factors[p] = job(p);
  }
  std::vector<AbelianGroup> h;
  for (std::size_t p = 0; p < top; ++p) {
    std::size_t kernel_rank = c.ranks[p] - factors[p].size();
    std::size_t image_rank = factors[p + 1].size();
    std::vector<Integer> torsion;
    for (auto& d : factors[p + 1])
      if (d > 1) torsion.push_back(d);
    h.push_back(AbelianGroup::from_cyclic(kernel_rank - image_rank, torsion));
  }
  return h;
}

struct KGroups {
  AbelianGroup k0, k1;
  bool integral = true;
  std::vector<AbelianGroup> bredon_homology;
};

/// K_0 = even homology, K_1 = odd homology; integral only when dim <= 2.
inline KGroups assemble_k_groups(const std::vector<AbelianGroup>& h, std::size_t dim) {
  KGroups k;
  k.bredon_homology = h;
  for (std::size_t p = 0; p < h.size(); ++p) (p % 2 ? k.k1 : k.k0) = (p % 2 ? k.k1 : k.k0) + h[p];
  k.integral = dim <= 2;
  return k;
}

/// Complex, Bredon homology and K-groups for a root datum.
inline KGroups k_theory(const RootDatum& rd, Variant variant, bool parallel = false, const ComplexOptions& opt = {}) {
  EquivariantComplex x = build_equivariant_complex(rd, variant, opt);
  return assemble_k_groups(homology(bredon_chain_complex(x, parallel), parallel), x.dim);
}

}  // namespace weylk
