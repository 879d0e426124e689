#pragma once

// JSON forms of root data, character tables, complexes and K-theory results.
// nlohmann::json keeps object keys sorted, so output is deterministic.

#include "weylk/bredon.hpp"
#include "weylk/chernoracle.hpp"
#include "weylk/character.hpp"
#include "weylk/rootdata.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace weylk {

using Json = nlohmann::json;

namespace detail {

inline Json integer_json(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) return z.str();
  return static_cast<std::int64_t>(z);
}

inline Json rational_json(const Rational& q) {
  if (is_integer(q)) return integer_json(numerator(q));
  return to_string(q);
}

inline Json columns_json(const RatMatrix& m) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Json col = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(rational_json(m(i, j)));
    cols.push_back(col);
  }
  return cols;
}

inline Json rows_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json rat_vec_json(const RatVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rational_json(x));
  return a;
}

inline IntVec lattice_coords(const Lattice& l, const IntVec& v) {
  RatVec c = l.coordinates(to_rational(v));
  if (!is_integral(c)) throw InternalError("vector is not in the lattice");
  IntVec out;
  for (auto& x : c) out.push_back(static_cast<std::int64_t>(numerator(x)));
  return out;
}

}  // namespace detail

/// {series, rank, isogeny, char_basis, cochar_basis, roots, coroots, pairing}.
/// Character basis vectors are in fundamental-weight coordinates, cocharacter
/// basis vectors in fundamental-coweight coordinates (both integral); roots
/// and coroots are in the lattice bases; pairing is the Gram matrix of the
/// two bases.
inline Json to_json(const RootDatum& rd) {
  Json j;
  j["series"] = std::string(1, series_letter(rd.type.series));
  j["rank"] = rd.type.rank;
  j["isogeny"] = rd.isogeny.str();
  j["char_basis"] = detail::columns_json(rd.char_lattice.basis());
  RatMatrix at = to_rational(rd.cartan).transpose();
  j["cochar_basis"] = detail::columns_json(at * rd.cochar_lattice.basis());
  Json roots = Json::array(), coroots = Json::array();
  for (auto& a : rd.roots) roots.push_back(detail::lattice_coords(rd.char_lattice, a));
  for (auto& h : rd.coroots) coroots.push_back(detail::lattice_coords(rd.cochar_lattice, h));
  j["roots"] = roots;
  j["coroots"] = coroots;
  j["pairing"] = detail::rows_json(rd.char_lattice.basis().transpose() * rd.pairing * rd.cochar_lattice.basis());
  return j;
}

/// Rebuilds a datum from its JSON form and checks every stored field.
inline RootDatum root_datum_from_json(const Json& j) {
  try {
    CartanType t{parse_series(j.at("series").get<std::string>()), j.at("rank").get<int>()};
    t.validate();
    const std::size_t n = static_cast<std::size_t>(t.rank);
    auto parse_cols = [&](const Json& cols) {
      if (!cols.is_array() || cols.size() != n) throw InvalidArgument("basis must have rank columns");
      RatMatrix m(n, n);
      for (std::size_t c = 0; c < n; ++c) {
        if (cols[c].size() != n) throw InvalidArgument("basis column has wrong length");
        for (std::size_t r = 0; r < n; ++r)
          m(r, c) = cols[c][r].is_string() ? parse_rational(cols[c][r].get<std::string>())
                                           : Rational(cols[c][r].get<std::int64_t>());
      }
      return m;
    };
    RatMatrix at_inv = inverse(to_rational(cartan_matrix(t)).transpose());
    Lattice cochar(at_inv * parse_cols(j.at("cochar_basis")));
    RootDatum rd = root_datum_from_cochar(t, cochar);
    Json again = to_json(rd);
    if (Lattice(parse_cols(j.at("char_basis"))) != rd.char_lattice)
      throw InvalidArgument("char_basis is not the dual of cochar_basis");
    // Roots and coroots are in the given bases, so they must match exactly.
    for (const char* key : {"roots", "coroots", "pairing"})
      if (j.contains(key) && j.at(key) != again.at(key))
        throw InvalidArgument(std::string("field '") + key + "' does not match the datum");
    validate(rd);
    return rd;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed root datum JSON: ") + e.what());
  }
}

inline Json to_json(const FiniteAbelianGroup& g) {
  Json d = Json::array();
  for (auto& x : g.divisors) d.push_back(detail::integer_json(x));
  return d;
}

inline Json to_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (auto& x : g.torsion) t.push_back(detail::integer_json(x));
  return Json{{"rank", g.rank}, {"torsion", t}};
}

/// {order, class_sizes, class_rep_words, table}; non-rational values are
/// written as sums of E(n)^k terms.
inline Json to_json(const CharacterTable& t) {
  Json j;
  j["order"] = t.order;
  j["class_sizes"] = t.class_sizes;
  j["class_rep_words"] = t.class_rep_words;
  Json table = Json::array();
  for (auto& row : t.values) {
    Json r = Json::array();
    for (auto& v : row) {
      if (v.is_rational())
        r.push_back(v.as_integer());
      else
        r.push_back(v.str());
    }
    table.push_back(r);
  }
  j["table"] = table;
  return j;
}

inline Json to_json(const EquivariantComplex& x) {
  Json cells = Json::array();
  for (auto& level : x.cells)
    for (std::size_t k = 0; k < level.size(); ++k) {
      const OrbitCell& c = level[k];
      Json verts = Json::array();
      for (auto& v : c.vertices) verts.push_back(detail::rat_vec_json(v));
      Json faces = Json::array();
      for (auto& f : c.faces) faces.push_back(Json{{"target", f.target}, {"sign", f.sign}});
      cells.push_back(Json{{"dim", c.dim}, {"index", k}, {"vertices", verts}, {"stab_order", c.stabilizer->order()},
                           {"faces", faces}});
    }
  return Json{{"group_variant", variant_name(x.variant)}, {"cells", cells}};
}

inline Json to_json(const KGroups& k) {
  Json h = Json::array();
  for (auto& g : k.bredon_homology) h.push_back(to_json(g));
  return Json{{"k0", to_json(k.k0)}, {"k1", to_json(k.k1)}, {"integral", k.integral}, {"homology", h}};
}

inline Json to_json(const RationalKRanks& r) {
  Json per = Json::array();
  for (auto& c : r.per_class)
    per.push_back(Json{{"class", c.w_class},
                       {"class_size", c.class_size},
                       {"rep_word", c.rep_word},
                       {"fixed_dim", c.fixed_dim},
                       {"components", detail::integer_json(c.components)},
                       {"even", c.even},
                       {"odd", c.odd}});
  return Json{{"even", r.even}, {"odd", r.odd}, {"per_class", per}};
}

inline Json ranks_json(const RationalKRanks& r) { return Json{{"even", r.even}, {"odd", r.odd}}; }

inline Json to_json(const DualityReport& r) {
  Json checks = Json::array();
  for (auto& c : r.affine_checks)
    checks.push_back(Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"lhs_ranks", ranks_json(c.lhs_ranks)},
                          {"rhs_ranks", ranks_json(c.rhs_ranks)}, {"holds", c.holds}});
  return Json{{"group", r.group},
              {"dual_group", r.dual_group},
              {"ranks", ranks_json(r.ranks)},
              {"dual_ranks", ranks_json(r.dual_ranks)},
              {"per_class", to_json(r.ranks).at("per_class")},
              {"dual_per_class", to_json(r.dual_ranks).at("per_class")},
              {"duality_holds", r.duality_holds},
              {"affine_checks", checks}};
}

}  // namespace weylk
