#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct {

/// Disjoint nonempty blocks covering the points, each with an identifier.
struct Partition {
  std::vector<std::string> ids;
  std::vector<IndexSet> blocks;
};

/// Throws ShapeError unless `p` partitions `n` points.
inline void check_partition(const Partition& p, std::size_t n) {
  if (p.ids.size() != p.blocks.size()) {
    throw ShapeError("partition needs one identifier per block");
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) {
      throw ShapeError("partition block " + p.ids[b] + " is empty");
    }
    for (std::size_t x : p.blocks[b]) {
      if (x >= n) {
        throw UnknownPoint("partition refers to point index " + std::to_string(x));
      }
      if (seen[x]) {
        throw ShapeError("partition blocks overlap");
      }
      seen[x] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) {
      throw ShapeError("partition does not cover every point");
    }
  }
}

/// The C_{d,m} partition: one block per occurring (dim, mu at dim) pair,
/// in order of first occurrence. Block ids are "(d|m)".
inline Partition class_partition(const DimensionStructure& D) {
  Partition p;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    const MuD key = mu_D(D, x);
    const std::string id = tuple_name(to_string(D.poset(), key.dim), key.value.str());
    std::size_t b = 0;
    while (b < p.ids.size() && p.ids[b] != id) {
      ++b;
    }
    if (b == p.ids.size()) {
      p.ids.push_back(id);
      p.blocks.emplace_back();
    }
    p.blocks[b].push_back(x);
  }
  return p;
}

/// Restriction to points Y and elements P (sorted index sets).
inline DimensionStructure substructure(const DimensionStructure& D, const IndexSet& Y, const IndexSet& P) {
  if (P.empty()) {
    throw ShapeError("substructure needs at least one element");
  }
  for (std::size_t s : P) {
    if (s >= D.num_elements()) {
      throw UnknownElement("element index out of range");
    }
  }
  return DimensionStructure::validate(restrict_table(D.table(), Y, P));
}

inline DimensionStructure substructure(const DimensionStructure& D, const std::vector<std::string>& points,
                                       const std::vector<std::string>& elements) {
  IndexSet Y, P;
  for (const auto& n : points) {
    Y.push_back(D.point_index(n));
  }
  for (const auto& n : elements) {
    P.push_back(D.element_index(n));
  }
  std::sort(Y.begin(), Y.end());
  std::sort(P.begin(), P.end());
  return substructure(D, Y, P);
}

/// Dim-points restricted to the elements that carry some s-point. On
/// non-lattice posets the restriction can lose an infimum, in which case
/// ValidationError reports the (ax3) witness.
inline DimensionStructure normalization(const DimensionStructure& D) {
  IndexSet X, S;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    if (is_dim_point(D, x)) {
      X.push_back(x);
    }
  }
  for (std::size_t s = 0; s < D.num_elements(); ++s) {
    for (std::size_t x = 0; x < D.num_points(); ++x) {
      if (D.mu(x, s).is_fin()) {
        S.push_back(s);
        break;
      }
    }
  }
  DimensionStructure out = DimensionStructure::validate(restrict_table(D.table(), X, S));
  if (out.num_points() > 0 && !classify(out).normal.value) {
    throw VerificationError("normalization is not normal");
  }
  return out;
}

/// nu_s(i) = sup of mu_s over block i. Checks sup{dim x : x in X_i} <= dim i
/// wherever that supremum exists.
inline DimensionStructure quotient(const DimensionStructure& D, const Partition& partition) {
  check_partition(partition, D.num_points());
  const auto& P = D.poset();
  Table t(P, partition.ids);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (std::size_t s = 0; s < P.size(); ++s) {
      std::vector<ExtVal> vals;
      for (std::size_t x : partition.blocks[b]) {
        vals.push_back(D.mu(x, s));
      }
      t.at(b, s) = ext_sup(vals);
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    std::vector<DimValue> dims;
    for (std::size_t x : partition.blocks[b]) {
      dims.push_back(D.dim(x));
    }
    auto sd = sbar_supremum(P, dims);
    if (sd && !sbar_leq(P, *sd, out.dim(b))) {
      throw VerificationError("quotient block " + partition.ids[b] + ": sup of member dims " +
                              to_string(P, *sd) + " exceeds block dim " + to_string(P, out.dim(b)));
    }
  }
  return out;
}

namespace detail {

inline void require_disjoint_names(std::vector<std::string> names, const char* what) {
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) {
    throw DisjointnessError(std::string(what) + " \"" + *dup + "\" appears in two structures");
  }
}

/// Expected dim in the sum for a point of block p, or nullopt where the
/// relocation rule says nothing (block without min/max, or the next block
/// up without a minimum).
inline std::optional<DimValue> relocated_dim(const FinitePoset& index, std::span<const DimensionStructure> family,
                                             const std::vector<std::size_t>& offset, std::size_t p,
                                             std::size_t x) {
  const DimensionStructure& Dp = family[p];
  const auto lo = Dp.poset().minimum();
  const auto hi = Dp.poset().maximum();
  if (!lo || !hi) {
    return std::nullopt;
  }
  const DimValue d = Dp.dim(x);
  if (!d.is_element() || d.index() != *hi || Dp.mu(x, *hi).bounded()) {
    return DimValue::element(offset[p] + d.index());
  }
  IndexSet ups = index.strict_up_set(p);
  if (ups.empty()) {
    return DimValue::top();
  }
  auto r = infimum(index, ups);
  if (r && r->is_element() && std::find(ups.begin(), ups.end(), r->index()) != ups.end()) {
    auto rmin = family[r->index()].poset().minimum();
    if (!rmin) {
      return std::nullopt;
    }
    return DimValue::element(offset[r->index()] + *rmin);
  }
  return DimValue::element(offset[p] + *hi);
}

} // namespace detail

/// Sum over an index poset. Blocks must have disjoint points and elements.
/// When every S_p has a minimum and maximum, the dimension relocation rule
/// is checked for each point.
inline DimensionStructure sum(const FinitePoset& index, std::span<const DimensionStructure> family) {
  if (family.size() != index.size()) {
    throw ShapeError("sum needs one structure per index element");
  }
  std::vector<FinitePoset> blocks;
  std::vector<std::string> points;
  std::vector<std::size_t> offset, block_of_point, local_point;
  std::size_t total = 0;
  for (std::size_t p = 0; p < family.size(); ++p) {
    blocks.push_back(family[p].poset());
    offset.push_back(total);
    total += family[p].num_elements();
    for (std::size_t x = 0; x < family[p].num_points(); ++x) {
      points.push_back(family[p].point_name(x));
      block_of_point.push_back(p);
      local_point.push_back(x);
    }
  }
  detail::require_disjoint_names(points, "point");
  FinitePoset S = indexed_sum_order(index, blocks);

  Table t(S, points);
  for (std::size_t x = 0; x < points.size(); ++x) {
    const std::size_t p = block_of_point[x];
    for (std::size_t q = 0; q < family.size(); ++q) {
      for (std::size_t s = 0; s < family[q].num_elements(); ++s) {
        ExtVal v = ExtVal::infinity();
        if (p == q) {
          v = family[p].mu(local_point[x], s);
        } else if (index.less(p, q)) {
          v = ExtVal::zero();
        }
        t.at(x, offset[q] + s) = v;
      }
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  for (std::size_t x = 0; x < points.size(); ++x) {
    auto expected = detail::relocated_dim(index, family, offset, block_of_point[x], local_point[x]);
    if (expected && !sbar_equal(S, *expected, out.dim(x))) {
      throw VerificationError("sum: dim of " + points[x] + " is " + to_string(S, out.dim(x)) +
                              ", relocation rule gives " + to_string(S, *expected));
    }
  }
  return out;
}

namespace detail {

inline void require_same_shape(std::span<const DimensionStructure> list) {
  if (list.empty()) {
    throw PreconditionError("need at least one structure");
  }
  for (const auto& D : list) {
    if (!(D.poset() == list[0].poset()) || D.table().points() != list[0].table().points()) {
      throw PreconditionError("structures must share points and poset");
    }
  }
}

inline Table pointwise(std::span<const DimensionStructure> list,
                       const std::function<ExtVal(const ExtVal&, const ExtVal&)>& op) {
  Table t = list[0].table();
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t x = 0; x < t.num_points(); ++x) {
      for (std::size_t s = 0; s < t.num_elements(); ++s) {
        t.at(x, s) = op(t.at(x, s), list[i].mu(x, s));
      }
    }
  }
  return t;
}

} // namespace detail

/// Pointwise sum of measures. S must be a complete lattice, or a lattice with
/// every input principal. Checks sup_i dim_i(x) <= dim(x), and on chains that
/// a strict gap is exactly one successor step.
inline DimensionStructure measure_sum(std::span<const DimensionStructure> list) {
  detail::require_same_shape(list);
  const auto& P = list[0].poset();
  const PosetProperties props = poset_properties(P);
  bool all_principal = true;
  for (const auto& D : list) {
    all_principal = all_principal && classify(D).principal.value;
  }
  if (!props.complete && !(props.lattice && all_principal)) {
    throw PreconditionError("measure sum needs S complete, or S a lattice and all inputs principal");
  }
  DimensionStructure out = DimensionStructure::validate(detail::pointwise(list, ext_add));
  for (std::size_t x = 0; x < out.num_points(); ++x) {
    std::vector<DimValue> dims;
    for (const auto& D : list) {
      dims.push_back(D.dim(x));
    }
    auto sd = sbar_supremum(P, dims);
    if (!sd) {
      continue;
    }
    const DimValue d = out.dim(x);
    if (!sbar_leq(P, *sd, d)) {
      throw VerificationError("measure sum: sup of dims exceeds dim at " + out.point_name(x));
    }
    if (props.ordered && sbar_less(P, *sd, d)) {
      const DimValue c = canonical(P, *sd);
      std::optional<DimValue> next;
      if (c.is_element()) {
        auto s = successor(P, c.index());
        next = s ? DimValue::element(*s) : DimValue::top();
      } else if (c.is_bottom()) {
        if (auto m = P.minimum()) {
          next = DimValue::element(*m);
        }
      }
      if (!next || !sbar_equal(P, *next, d)) {
        throw VerificationError("measure sum: dim at " + out.point_name(x) + " is not the successor of " +
                                to_string(P, c));
      }
    }
  }
  return out;
}

/// Pointwise supremum of measures; S must be complete.
inline DimensionStructure sup_combine(std::span<const DimensionStructure> list) {
  detail::require_same_shape(list);
  if (!poset_properties(list[0].poset()).complete) {
    throw PreconditionError("sup-combination needs S complete");
  }
  return DimensionStructure::validate(detail::pointwise(list, ext_max));
}

/// Replaces the product of two bounded values. Must send (0, v) and (v, 0)
/// to 0 and two positive values to a positive value.
using Combiner = std::function<ExtVal(const ExtVal&, const ExtVal&)>;

namespace detail {

/// Mixed-radix n-ary product order with flat tuple names "(a|b|c)".
inline FinitePoset product_order_n(std::span<const FinitePoset> factors) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
  }
  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(factors.size()));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    std::vector<std::string> parts(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[i][k] = r % factors[k].size();
      r /= factors[k].size();
      parts[k] = factors[k].name(coords[i][k]);
    }
    names[i] = tuple_name(parts);
  }
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k) {
        le = factors[k].leq(coords[a][k], coords[b][k]);
      }
      m[a * n + b] = le;
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

/// Tuple points "(x|y|...)" in mixed-radix order.
inline std::vector<std::vector<std::size_t>> point_tuples(std::span<const DimensionStructure> family,
                                                          std::vector<std::string>& names) {
  std::size_t n = 1;
  for (const auto& D : family) {
    n *= D.num_points();
  }
  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(family.size()));
  names.assign(n, "");
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    std::vector<std::string> parts(family.size());
    for (std::size_t k = family.size(); k-- > 0;) {
      coords[i][k] = r % family[k].num_points();
      r /= family[k].num_points();
      parts[k] = family[k].point_name(coords[i][k]);
    }
    names[i] = tuple_name(parts);
  }
  return coords;
}

/// The dim a tuple point must have in a product of the barred posets: +inf
/// if some coordinate has empty S_x, -inf if some coordinate infimum is the
/// formal -inf, otherwise the tuple of coordinate dims.
inline DimValue expected_tuple_dim(std::span<const DimensionStructure> family,
                                   const std::vector<std::size_t>& point, const std::vector<std::size_t>& radix) {
  bool bottom = false;
  std::size_t idx = 0;
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (finite_set(family[k].table(), point[k]).empty()) {
      return DimValue::top();
    }
    const DimValue d = family[k].dim(point[k]);
    if (d.is_bottom()) {
      bottom = true;
    } else {
      idx = idx * radix[k] + d.index();
    }
  }
  return bottom ? DimValue::bottom() : DimValue::element(idx);
}

inline void check_pairing(const DimensionStructure& out, std::span<const DimensionStructure> family,
                          const std::vector<std::vector<std::size_t>>& coords, const char* what) {
  std::vector<std::size_t> radix;
  for (const auto& D : family) {
    radix.push_back(D.num_elements());
  }
  for (std::size_t z = 0; z < out.num_points(); ++z) {
    const DimValue e = expected_tuple_dim(family, coords[z], radix);
    if (!sbar_equal(out.poset(), e, out.dim(z))) {
      throw VerificationError(std::string(what) + ": dim of " + out.point_name(z) + " is " +
                              to_string(out.poset(), out.dim(z)) + ", expected " + to_string(out.poset(), e));
    }
  }
}

} // namespace detail

/// Direct product. eta = +inf if either coordinate is +inf, otherwise the
/// combiner (default: product) of the two values.
inline DimensionStructure direct_product(const DimensionStructure& D1, const DimensionStructure& D2,
                                         const Combiner& combiner = nullptr) {
  const DimensionStructure fam[] = {D1, D2};
  std::vector<std::string> names;
  auto coords = detail::point_tuples(fam, names);
  FinitePoset S = product_order(D1.poset(), D2.poset());
  Table t(S, names);
  const std::size_t n2 = D2.num_elements();
  for (std::size_t z = 0; z < names.size(); ++z) {
    for (std::size_t s = 0; s < S.size(); ++s) {
      const ExtVal& a = D1.mu(coords[z][0], s / n2);
      const ExtVal& b = D2.mu(coords[z][1], s % n2);
      if (a.is_inf() || b.is_inf()) {
        continue;
      }
      if (!combiner) {
        t.at(z, s) = ext_mul(a, b);
        continue;
      }
      ExtVal v = combiner(a, b);
      const bool want_zero = a.is_zero() || b.is_zero();
      if (want_zero ? !v.is_zero() : !v.is_fin()) {
        throw CombinerLawError("combiner maps (" + a.str() + ", " + b.str() + ") to " + v.str());
      }
      t.at(z, s) = v;
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  detail::check_pairing(out, fam, coords, "direct product");
  return out;
}

/// Product of a finite family with eta = min of the coordinates unless one
/// of them is +inf.
inline DimensionStructure i_direct_product(std::span<const DimensionStructure> family) {
  if (family.empty()) {
    throw ShapeError("i-direct product needs at least one structure");
  }
  std::vector<FinitePoset> posets;
  for (const auto& D : family) {
    posets.push_back(D.poset());
  }
  std::vector<std::string> names;
  auto coords = detail::point_tuples(family, names);
  FinitePoset S = detail::product_order_n(posets);
  Table t(S, names);
  for (std::size_t z = 0; z < names.size(); ++z) {
    for (std::size_t q = 0; q < S.size(); ++q) {
      std::size_t r = q;
      std::vector<std::size_t> qc(family.size());
      for (std::size_t k = family.size(); k-- > 0;) {
        qc[k] = r % family[k].num_elements();
        r /= family[k].num_elements();
      }
      std::optional<ExtVal> v;
      bool inf = false;
      for (std::size_t k = 0; k < family.size() && !inf; ++k) {
        const ExtVal& m = family[k].mu(coords[z][k], qc[k]);
        inf = m.is_inf();
        v = v ? ext_min(*v, m) : m;
      }
      t.at(z, q) = inf ? ExtVal::infinity() : *v;
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  detail::check_pairing(out, family, coords, "i-direct product");
  return out;
}

/// Lexicographic product; D1 must be small. mu = +inf where mu1 is +inf,
/// otherwise mu1 * mu2. Principality is checked when both inputs are
/// principal (D1 is then p-small by smallness).
inline DimensionStructure l_direct_product(const DimensionStructure& D1, const DimensionStructure& D2) {
  const PropertyReport r1 = classify(D1);
  if (!r1.small.value) {
    std::string where;
    if (r1.small.witness && r1.small.witness->point) {
      where = " (point " + D1.point_name(*r1.small.witness->point) + ")";
    }
    throw PreconditionError("l-direct product needs the first factor small" + where);
  }
  const DimensionStructure fam[] = {D1, D2};
  std::vector<std::string> names;
  auto coords = detail::point_tuples(fam, names);
  FinitePoset S = lexicographic_order(D1.poset(), D2.poset());
  Table t(S, names);
  const std::size_t n2 = D2.num_elements();
  for (std::size_t z = 0; z < names.size(); ++z) {
    for (std::size_t s = 0; s < S.size(); ++s) {
      const ExtVal& a = D1.mu(coords[z][0], s / n2);
      if (!a.is_inf()) {
        t.at(z, s) = ext_mul(a, D2.mu(coords[z][1], s % n2));
      }
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  // Smallness makes dim x1 an element. When S_x2 is empty, dim x2 is the
  // formal +inf even if S2 has a maximum, and the lexicographic slot
  // (dim x1, +inf) is not an element; pairing is checked elsewhere.
  for (std::size_t z = 0; z < out.num_points(); ++z) {
    const DimValue d1 = D1.dim(coords[z][0]);
    const DimValue d2 = D2.dim(coords[z][1]);
    if (d1.is_element() && d2.is_element() && !finite_set(D2.table(), coords[z][1]).empty()) {
      const DimValue e = DimValue::element(d1.index() * n2 + d2.index());
      if (!sbar_equal(S, e, out.dim(z))) {
        throw VerificationError("l-direct product: dim of " + out.point_name(z) + " is " +
                                to_string(S, out.dim(z)) + ", expected " + to_string(S, e));
      }
    }
  }
  if (r1.principal.value && r1.p_small.value && classify(D2).principal.value && !classify(out).principal.value) {
    throw VerificationError("l-direct product of principal structures is not principal");
  }
  return out;
}

} // namespace dimstruct
