#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct {

/// A point and/or element showing why a property fails.
struct Witness {
  std::optional<std::size_t> point;
  std::optional<std::size_t> element;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Flag {
  bool value = true;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (value) {
      value = false;
      witness = w;
    }
  }
};

struct PropertyReport {
  Flag fully_normal, normal, quasi_normal;
  Flag p_strong, m_strong, strong;
  Flag principal;
  Flag p_small, m_small, small;
};

namespace detail {

/// Elements other than the minimum and maximum of S (those stand for -inf/+inf).
inline bool is_extreme(const FinitePoset& P, std::size_t s) {
  auto lo = P.minimum();
  auto hi = P.maximum();
  return (lo && *lo == s) || (hi && *hi == s);
}

/// First (x, s) with s > dim x and mu_s(x) = +inf, i.e. S_x minus its inf
/// is not the strict up-set of the inf.
inline std::optional<Witness> principal_filter_witness(const DimensionStructure& D, std::size_t x) {
  const auto& P = D.poset();
  const DimValue d = D.dim(x);
  const SpectrumSets sp = spectrum(D, x);
  std::vector<std::uint8_t> in_sx(P.size(), 0);
  for (std::size_t s : sp.finite) {
    in_sx[s] = 1;
  }
  for (std::size_t s = 0; s < P.size(); ++s) {
    const bool above = sbar_less(P, d, DimValue::element(s));
    const bool member = in_sx[s] && !sbar_equal(P, d, DimValue::element(s));
    if (above != member) {
      return Witness{x, s};
    }
  }
  return std::nullopt;
}

/// First (x, s) with s > dim x and mu_s(x) != 0.
inline std::optional<Witness> principal_zero_witness(const DimensionStructure& D, std::size_t x) {
  const auto& P = D.poset();
  for (std::size_t s = 0; s < P.size(); ++s) {
    if (sbar_less(P, D.dim(x), DimValue::element(s)) && !D.mu(x, s).is_zero()) {
      return Witness{x, s};
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Per-point principality, computed both from the filter definition and from
/// the vanishing-above-dim characterisation. Throws if the two disagree.
inline std::optional<Witness> principal_witness(const DimensionStructure& D, std::size_t x) {
  auto a = detail::principal_filter_witness(D, x);
  auto b = detail::principal_zero_witness(D, x);
  if (a.has_value() != b.has_value()) {
    throw Error("internal inconsistency: principality routes disagree at point " + D.point_name(x));
  }
  return a;
}

inline PropertyReport classify(const DimensionStructure& D) {
  const auto& P = D.poset();
  PropertyReport r;

  for (std::size_t s = 0; s < P.size(); ++s) {
    bool has_s_point = false;
    bool has_dim = false;
    for (std::size_t x = 0; x < D.num_points(); ++x) {
      has_s_point = has_s_point || D.mu(x, s).is_fin();
      has_dim = has_dim || sbar_equal(P, D.dim(x), DimValue::element(s));
    }
    if (!has_s_point) {
      r.fully_normal.fail({std::nullopt, s});
    }
    if (!detail::is_extreme(P, s)) {
      if (!has_s_point) {
        r.normal.fail({std::nullopt, s});
      }
      if (!has_dim) {
        r.quasi_normal.fail({std::nullopt, s});
      }
    }
  }

  for (std::size_t x = 0; x < D.num_points(); ++x) {
    bool some_finite = false;
    bool some_positive = false;
    for (std::size_t s = 0; s < P.size(); ++s) {
      some_finite = some_finite || D.mu(x, s).bounded();
      some_positive = some_positive || !D.mu(x, s).is_zero();
    }
    if (!some_finite) {
      r.p_strong.fail({x, std::nullopt});
      r.strong.fail({x, std::nullopt});
    }
    if (!some_positive) {
      r.m_strong.fail({x, std::nullopt});
      r.strong.fail({x, std::nullopt});
    }
    const ExtVal at_dim = mu_extended(D, x, D.dim(x));
    std::optional<std::size_t> dim_elem;
    if (D.dim(x).is_element()) {
      dim_elem = D.dim(x).index();
    }
    // A formal -inf/+inf dimension is not a position of S, so it counts as
    // neither p-small nor m-small.
    if (!dim_elem || at_dim.is_inf()) {
      r.p_small.fail({x, dim_elem});
      r.small.fail({x, dim_elem});
    }
    if (!dim_elem || at_dim.is_zero()) {
      r.m_small.fail({x, dim_elem});
      r.small.fail({x, dim_elem});
    }
    if (auto w = principal_witness(D, x)) {
      r.principal.fail(*w);
    }
  }
  return r;
}

inline std::vector<std::pair<const char*, const Flag*>> flags(const PropertyReport& r) {
  return {{"fully_normal", &r.fully_normal}, {"normal", &r.normal},     {"quasi_normal", &r.quasi_normal},
          {"p_strong", &r.p_strong},         {"m_strong", &r.m_strong}, {"strong", &r.strong},
          {"principal", &r.principal},       {"p_small", &r.p_small},   {"m_small", &r.m_small},
          {"small", &r.small}};
}

/// The order x <= y iff x <=_D y. Points sharing a (dim, mu) pair make this
/// a preorder only, which is rejected.
inline FinitePoset induced_point_order(const DimensionStructure& D) {
  const std::size_t n = D.num_points();
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const DOrder o = leq_D(D, x, y);
      if (x != y && o == DOrder::equal_class) {
        throw NotAPartialOrder("points " + D.point_name(x) + " and " + D.point_name(y) +
                               " share dim and measure");
      }
      m[x * n + y] = o == DOrder::less_or_equal || o == DOrder::equal_class;
    }
  }
  return FinitePoset::from_matrix(D.table().points(), std::move(m));
}

/// Builds a point order; a cyclic relation is reported as NotAPartialOrder.
inline FinitePoset make_point_order(const DimensionStructure& D,
                                    const std::vector<std::pair<std::string, std::string>>& pairs) {
  for (const auto& [a, b] : pairs) {
    D.point_index(a);
    D.point_index(b);
  }
  try {
    return FinitePoset::build(D.table().points(), pairs);
  } catch (const CycleError& e) {
    throw NotAPartialOrder(std::string("point order: ") + e.what());
  }
}

struct SyncReport {
  bool condition1 = true;
  std::optional<std::pair<std::size_t, std::size_t>> condition1_witness;
  bool condition1_prime = true;
  std::optional<std::pair<std::size_t, std::size_t>> condition1_prime_witness;
  bool condition2 = true;
  IndexSet condition2_witness; // the violating Y
  std::optional<std::size_t> witness_sup;
  std::optional<DimValue> witness_dim_sup;
  std::optional<DimValue> witness_sup_dims; // nullopt = sup of dims undefined

  bool synchronized() const noexcept { return condition1 && condition2; }
};

/// alpha = nullopt means "finite": every subset of X.
inline SyncReport check_synchronization(const DimensionStructure& D, const FinitePoset& order,
                                        std::optional<std::size_t> alpha) {
  const std::size_t n = D.num_points();
  if (order.size() != n) {
    throw NotAPartialOrder("point order must range over exactly the points of the structure");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (order.name(x) != D.point_name(x)) {
      throw NotAPartialOrder("point order must list the points in structure order");
    }
  }
  if (n > 24) {
    throw ShapeError("synchronization check is limited to 24 points");
  }
  const auto& P = D.poset();
  SyncReport r;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!order.leq(x, y)) {
        continue;
      }
      if (r.condition1 && !leq_D_holds(D, x, y)) {
        r.condition1 = false;
        r.condition1_witness = {x, y};
      }
      if (r.condition1_prime && !sbar_leq(P, D.dim(x), D.dim(y))) {
        r.condition1_prime = false;
        r.condition1_prime_witness = {x, y};
      }
    }
  }

  const std::size_t limit = alpha.value_or(n);
  // Subsets by increasing size, each size in lexicographic order of indices.
  for (std::size_t k = 1; k <= std::min(limit, n) && r.condition2; ++k) {
    IndexSet Y(k);
    for (std::size_t i = 0; i < k; ++i) {
      Y[i] = i;
    }
    while (true) {
      auto sup = supremum(order, Y);
      if (sup && sup->is_element()) {
        std::vector<DimValue> dims;
        for (std::size_t y : Y) {
          dims.push_back(D.dim(y));
        }
        auto sd = sbar_supremum(P, dims);
        const DimValue dsup = D.dim(sup->index());
        if (!sd || !sbar_equal(P, *sd, dsup)) {
          r.condition2 = false;
          r.condition2_witness = Y;
          r.witness_sup = sup->index();
          r.witness_dim_sup = dsup;
          if (sd) {
            r.witness_sup_dims = canonical(P, *sd);
          }
          break;
        }
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && Y[i - 1] == n - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++Y[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        Y[j] = Y[j - 1] + 1;
      }
    }
  }
  return r;
}

struct Ax1PrimeReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness; // (x, s)
};

/// mu_s(x) < +inf implies mu_{s+}(x) = 0, for every non-maximal s. Works on
/// raw tables; S must be a chain.
inline Ax1PrimeReport check_ax1prime(const Table& t) {
  const auto& P = t.poset();
  if (!P.is_chain()) {
    throw ShapeError("ax1' needs a totally ordered S");
  }
  Ax1PrimeReport r;
  for (std::size_t x = 0; x < t.num_points() && r.holds; ++x) {
    for (std::size_t s = 0; s < P.size(); ++s) {
      auto next = successor(P, s);
      if (next && t.at(x, s).bounded() && !t.at(x, *next).is_zero()) {
        r.holds = false;
        r.witness = {x, s};
        break;
      }
    }
  }
  return r;
}

struct DiscreteBoundsReport {
  bool holds = true;
  std::optional<std::size_t> witness_point;
  bool p_strong_implies_p_small = true;
};

/// (sup Sinf_x)+ <= dim x <= inf S0_x on a chain. The successor of sup of
/// the empty set is min S, the successor of max S is +inf.
inline DiscreteBoundsReport discrete_bounds_check(const DimensionStructure& D) {
  const auto& P = D.poset();
  if (!P.is_chain()) {
    throw ShapeError("discrete bounds need a totally ordered S");
  }
  DiscreteBoundsReport r;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    const SpectrumSets sp = spectrum(D, x);
    DimValue lower = DimValue::bottom();
    if (sp.infinite.empty()) {
      if (auto m = P.minimum()) {
        lower = DimValue::element(*m);
      }
    } else {
      auto top_inf = supremum(P, sp.infinite);
      auto next = successor(P, top_inf->index());
      lower = next ? DimValue::element(*next) : DimValue::top();
    }
    const DimValue upper = *infimum(P, sp.zero);
    if (!sbar_leq(P, lower, D.dim(x)) || !sbar_leq(P, D.dim(x), upper)) {
      r.holds = false;
      r.witness_point = x;
      break;
    }
  }
  const PropertyReport pr = classify(D);
  r.p_strong_implies_p_small = !pr.p_strong.value || pr.p_small.value;
  r.holds = r.holds && r.p_strong_implies_p_small;
  return r;
}

} // namespace dimstruct
