#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct {

/// f: X1 -> X2 and g: S1 -> S2 as index vectors.
struct StructureMap {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;
};

enum class MapKind { morphism, isomorphism, semi_isomorphism };

inline const char* to_string(MapKind k) {
  switch (k) {
  case MapKind::morphism:
    return "morphism";
  case MapKind::isomorphism:
    return "isomorphism";
  case MapKind::semi_isomorphism:
    break;
  }
  return "semi_isomorphism";
}

/// Builds a map from name pairs; every point and element of D1 must appear
/// exactly once.
inline StructureMap make_map(const DimensionStructure& D1, const DimensionStructure& D2,
                             const std::vector<std::pair<std::string, std::string>>& f,
                             const std::vector<std::pair<std::string, std::string>>& g) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  StructureMap m{std::vector<std::size_t>(D1.num_points(), unset),
                 std::vector<std::size_t>(D1.num_elements(), unset)};
  for (const auto& [a, b] : f) {
    auto& slot = m.f[D1.point_index(a)];
    if (slot != unset) {
      throw ShapeError("point " + a + " is mapped twice");
    }
    slot = D2.point_index(b);
  }
  for (const auto& [a, b] : g) {
    auto& slot = m.g[D1.element_index(a)];
    if (slot != unset) {
      throw ShapeError("element " + a + " is mapped twice");
    }
    slot = D2.element_index(b);
  }
  for (std::size_t x = 0; x < m.f.size(); ++x) {
    if (m.f[x] == unset) {
      throw ShapeError("point " + D1.point_name(x) + " is not mapped");
    }
  }
  for (std::size_t s = 0; s < m.g.size(); ++s) {
    if (m.g[s] == unset) {
      throw ShapeError("element " + D1.element_name(s) + " is not mapped");
    }
  }
  return m;
}

struct MapReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> order_witness; // s <= p with g(s) !<= g(p)
  std::optional<std::pair<std::size_t, std::size_t>> value_witness; // (x, s)
};

namespace detail {

inline void check_shape(const DimensionStructure& D1, const DimensionStructure& D2, const StructureMap& m) {
  if (m.f.size() != D1.num_points() || m.g.size() != D1.num_elements()) {
    throw ShapeError("map must be total on the points and elements of the source");
  }
  for (std::size_t y : m.f) {
    if (y >= D2.num_points()) {
      throw UnknownPoint("map target point out of range");
    }
  }
  for (std::size_t t : m.g) {
    if (t >= D2.num_elements()) {
      throw UnknownElement("map target element out of range");
    }
  }
}

inline bool is_bijection(const std::vector<std::size_t>& v, std::size_t n) {
  if (v.size() != n) {
    return false;
  }
  std::vector<std::uint8_t> hit(n, 0);
  for (std::size_t i : v) {
    if (hit[i]) {
      return false;
    }
    hit[i] = 1;
  }
  return true;
}

} // namespace detail

/// Order preservation of g is checked over all pairs, then the value
/// condition of the kind at every (x, s). Bijectivity for the iso kinds is a
/// shape requirement (ShapeError).
inline MapReport verify_map(const DimensionStructure& D1, const DimensionStructure& D2, const StructureMap& m,
                            MapKind kind) {
  detail::check_shape(D1, D2, m);
  if (kind != MapKind::morphism) {
    if (!detail::is_bijection(m.f, D2.num_points())) {
      throw ShapeError("f is not a bijection");
    }
    if (!detail::is_bijection(m.g, D2.num_elements())) {
      throw ShapeError("g is not a bijection");
    }
  }
  MapReport r;
  const auto& P1 = D1.poset();
  const auto& P2 = D2.poset();
  for (std::size_t s = 0; s < P1.size() && r.holds; ++s) {
    for (std::size_t p = 0; p < P1.size(); ++p) {
      if (P1.leq(s, p) && !P2.leq(m.g[s], m.g[p])) {
        r.holds = false;
        r.order_witness = {s, p};
        break;
      }
    }
  }
  if (!r.holds) {
    return r;
  }
  for (std::size_t x = 0; x < D1.num_points() && r.holds; ++x) {
    for (std::size_t s = 0; s < P1.size(); ++s) {
      const ExtVal& a = D1.mu(x, s);
      const ExtVal& b = D2.mu(m.f[x], m.g[s]);
      bool ok = true;
      switch (kind) {
      case MapKind::morphism:
        ok = a <= b;
        break;
      case MapKind::isomorphism:
        ok = a == b;
        break;
      case MapKind::semi_isomorphism:
        ok = a.bounded() == b.bounded();
        if (ok && a.is_inf() != b.is_inf()) {
          throw Error("internal inconsistency: semi-isomorphism does not match +inf entries");
        }
        break;
      }
      if (!ok) {
        r.holds = false;
        r.value_witness = {x, s};
        break;
      }
    }
  }
  return r;
}

/// g extended to the barred posets: -inf and +inf go to themselves.
inline DimValue transport(const StructureMap& m, DimValue d) {
  return d.is_element() ? DimValue::element(m.g[d.index()]) : d;
}

struct TransportReport {
  bool holds = true;
  std::vector<std::size_t> failures; // points breaking the transported relation
  std::vector<std::size_t> exempt;   // morphism points outside the guard
};

/// semi-iso: g(dim x) = dim f(x). iso: additionally mu at dim is carried
/// over. morphism: g(dim x) <= dim f(x) where mu_{dim x}(x) > 0 and the two
/// dims are comparable.
inline TransportReport dim_transport_check(const DimensionStructure& D1, const DimensionStructure& D2,
                                           const StructureMap& m, MapKind kind) {
  detail::check_shape(D1, D2, m);
  const auto& P2 = D2.poset();
  TransportReport r;
  for (std::size_t x = 0; x < D1.num_points(); ++x) {
    const DimValue gd = transport(m, D1.dim(x));
    const DimValue df = D2.dim(m.f[x]);
    bool ok = true;
    if (kind == MapKind::morphism) {
      if (mu_extended(D1, x, D1.dim(x)).is_zero() || !sbar_comparable(P2, gd, df)) {
        r.exempt.push_back(x);
        continue;
      }
      ok = sbar_leq(P2, gd, df);
    } else {
      ok = sbar_equal(P2, gd, df);
      if (ok && kind == MapKind::isomorphism) {
        ok = mu_extended(D1, x, D1.dim(x)) == mu_extended(D2, m.f[x], gd);
      }
    }
    if (!ok) {
      r.holds = false;
      r.failures.push_back(x);
    }
  }
  return r;
}

inline StructureMap identity_map(const DimensionStructure& D) {
  StructureMap m;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    m.f.push_back(x);
  }
  for (std::size_t s = 0; s < D.num_elements(); ++s) {
    m.g.push_back(s);
  }
  return m;
}

/// mu replaced by its sign. The result is semi-isomorphic to D through the
/// identities, with the same dims.
inline DimensionStructure sign_collapse(const DimensionStructure& D) {
  Table t = D.table();
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    for (std::size_t s = 0; s < t.num_elements(); ++s) {
      t.at(x, s) = ext_sign(t.at(x, s));
    }
  }
  DimensionStructure out = DimensionStructure::validate(std::move(t));
  const StructureMap id = identity_map(D);
  if (!verify_map(D, out, id, MapKind::semi_isomorphism).holds ||
      !dim_transport_check(D, out, id, MapKind::semi_isomorphism).holds) {
    throw VerificationError("sign collapse is not semi-isomorphic to its input");
  }
  return out;
}

enum class PushMode { leq, sign };

struct PushforwardReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> condition1_witness; // (x in X1, s)
  std::optional<std::pair<std::size_t, std::size_t>> condition2_witness; // (y in X2, s)
};

namespace detail {

inline void check_pushforward_shape(const DimensionStructure& D1, const std::vector<std::size_t>& f,
                                    const Table& mu2) {
  if (!D1.poset().is_chain()) {
    throw ShapeError("pushforward criterion needs a totally ordered S");
  }
  if (!(mu2.poset() == D1.poset())) {
    throw ShapeError("candidate must use the same poset");
  }
  if (f.size() != D1.num_points()) {
    throw ShapeError("f must be total on the points");
  }
  std::vector<std::uint8_t> hit(mu2.num_points(), 0);
  for (std::size_t y : f) {
    if (y >= mu2.num_points()) {
      throw UnknownPoint("f target out of range");
    }
    hit[y] = 1;
  }
  for (std::size_t y = 0; y < hit.size(); ++y) {
    if (!hit[y]) {
      throw NotSurjective("no point maps to " + mu2.point_name(y));
    }
  }
}

} // namespace detail

/// Checks the two conditions under which a candidate table over a
/// surjective image is again a dimension structure. When they hold, the
/// candidate is validated too.
inline PushforwardReport pushforward_check(const DimensionStructure& D1, const std::vector<std::size_t>& f,
                                           const Table& mu2, PushMode mode = PushMode::leq) {
  detail::check_pushforward_shape(D1, f, mu2);
  PushforwardReport r;
  const std::size_t n = D1.num_elements();
  for (std::size_t x = 0; x < D1.num_points() && r.holds; ++x) {
    for (std::size_t s = 0; s < n; ++s) {
      const ExtVal& a = D1.mu(x, s);
      const ExtVal& b = mu2.at(f[x], s);
      const bool ok = mode == PushMode::leq ? a <= b : ext_sign(a) == ext_sign(b);
      if (!ok) {
        r.holds = false;
        r.condition1_witness = {x, s};
        break;
      }
    }
  }
  for (std::size_t y = 0; y < mu2.num_points() && r.holds; ++y) {
    for (std::size_t s = 0; s < n; ++s) {
      bool all_zero = true;
      for (std::size_t x = 0; x < f.size(); ++x) {
        all_zero = all_zero && (f[x] != y || D1.mu(x, s).is_zero());
      }
      if (all_zero && !mu2.at(y, s).is_zero()) {
        r.holds = false;
        r.condition2_witness = {y, s};
        break;
      }
    }
  }
  if (r.holds && !check_axioms(mu2).ok()) {
    throw VerificationError("pushforward conditions hold but the candidate is not a dimension structure");
  }
  return r;
}

/// mu2(y, s) = sup of mu1(x, s) over the fiber of y.
inline Table fiber_sup(const DimensionStructure& D1, const std::vector<std::string>& points2,
                       const std::vector<std::size_t>& f) {
  Table t(D1.poset(), points2);
  for (std::size_t y = 0; y < points2.size(); ++y) {
    for (std::size_t s = 0; s < D1.num_elements(); ++s) {
      std::vector<ExtVal> vals;
      for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] == y) {
          vals.push_back(D1.mu(x, s));
        }
      }
      t.at(y, s) = ext_sup(vals);
    }
  }
  return t;
}

} // namespace dimstruct
