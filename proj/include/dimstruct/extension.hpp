#pragma once

#include <algorithm>
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

/// The completed table fails (ax1)-(ax3). Only possible off the lattice
/// hypothesis.
class PostValidationError : public Violation {
public:
  PostValidationError(std::string what, ValidationReport report)
      : Violation(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

struct AdjoinedElement {
  std::string name;
  IndexSet completes; // the S_x class, as original element indices
};

struct ExtensionResult {
  DimensionStructure extended;
  std::vector<AdjoinedElement> new_elements;
  /// Old element index -> index in the extended poset.
  std::vector<std::size_t> embedding_of_S;
};

namespace detail {

inline bool subset_of(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// "inf{p,q}" from the sorted names of the class; primes avoid clashes.
inline std::string adjoined_name(const FinitePoset& P, const IndexSet& cls,
                                 const std::vector<std::string>& taken) {
  std::vector<std::string> names;
  for (std::size_t s : cls) {
    names.push_back(P.name(s));
  }
  std::sort(names.begin(), names.end());
  std::string out = "inf{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? "," : "") + names[i];
  }
  out += "}";
  while (std::find(taken.begin(), taken.end(), out) != taken.end()) {
    out += "'";
  }
  return out;
}

} // namespace detail

/// Adjoins one element per distinct nonempty S_x without an infimum in S-bar.
/// New elements sit below exactly the members of their class, above the
/// common lower bounds of the class, and below each other by reverse
/// inclusion; their measures are suprema over the class.
inline ExtensionResult extend(const PreDimensionStructure& pre) {
  const Table& t = pre.table();
  const FinitePoset& P = t.poset();
  const std::size_t n = P.size();

  std::vector<IndexSet> classes;
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    IndexSet sx = finite_set(t, x);
    if (sx.empty() || infimum(P, sx)) {
      continue;
    }
    if (std::find(classes.begin(), classes.end(), sx) == classes.end()) {
      classes.push_back(std::move(sx));
    }
  }

  std::vector<std::string> names = P.names();
  std::vector<AdjoinedElement> adjoined;
  for (const auto& c : classes) {
    adjoined.push_back({detail::adjoined_name(P, c, names), c});
    names.push_back(adjoined.back().name);
  }

  const std::size_t m = n + classes.size();
  std::vector<std::uint8_t> le(m * m, 0);
  auto member = [](const IndexSet& c, std::size_t s) { return std::binary_search(c.begin(), c.end(), s); };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      bool v;
      if (a < n && b < n) {
        v = P.leq(a, b);
      } else if (a >= n && b < n) {
        v = member(classes[a - n], b);
      } else if (a < n) {
        const auto& c = classes[b - n];
        v = std::all_of(c.begin(), c.end(), [&](std::size_t p) { return P.leq(a, p); });
      } else {
        v = detail::subset_of(classes[b - n], classes[a - n]);
      }
      le[a * m + b] = v;
    }
  }
  // The four-case relation must already be a partial order.
  for (std::size_t a = 0; a < m; ++a) {
    if (!le[a * m + a]) {
      throw Error("internal inconsistency: extended order is not reflexive");
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && le[a * m + b] && le[b * m + a]) {
        throw Error("internal inconsistency: extended order is not antisymmetric at " + names[a] + ", " +
                    names[b]);
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (le[a * m + b] && le[b * m + c] && !le[a * m + c]) {
          throw Error("internal inconsistency: extended order is not transitive");
        }
      }
    }
  }
  FinitePoset S = FinitePoset::from_matrix(names, le);

  Table out(S, t.points());
  for (std::size_t y = 0; y < t.num_points(); ++y) {
    for (std::size_t s = 0; s < n; ++s) {
      out.at(y, s) = t.at(y, s);
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::vector<ExtVal> vals;
      for (std::size_t s : classes[k]) {
        vals.push_back(t.at(y, s));
      }
      out.at(y, n + k) = ext_sup(vals);
    }
  }

  ValidationReport r = check_axioms(out);
  if (!r.ok()) {
    std::string what = "extension does not validate: " + describe(out, r.violations.front());
    throw PostValidationError(std::move(what), std::move(r));
  }
  if (classes.empty() && !(out == t)) {
    throw Error("internal inconsistency: extension without new elements changed the input");
  }
  ExtensionResult res{DimensionStructure::validate(std::move(out)), std::move(adjoined), {}};
  for (std::size_t s = 0; s < n; ++s) {
    res.embedding_of_S.push_back(s);
  }

  // Each adjoined element is exactly the infimum of the extended S_x.
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    auto it = std::find(classes.begin(), classes.end(), finite_set(t, x));
    if (it == classes.end()) {
      continue;
    }
    const std::size_t k = n + static_cast<std::size_t>(it - classes.begin());
    if (!sbar_equal(S, res.extended.dim(x), DimValue::element(k))) {
      throw Error("internal inconsistency: adjoined element is not inf of the extended S_x");
    }
  }
  return res;
}

/// Principality of a pre-structure: mu vanishes strictly above inf S_x. When
/// that infimum is missing in S, the adjoined element plays its role, so
/// every member of S_x must be zero.
inline std::optional<Witness> pre_principal_witness(const PreDimensionStructure& pre) {
  const Table& t = pre.table();
  const FinitePoset& P = t.poset();
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    IndexSet sx = finite_set(t, x);
    auto d = infimum(P, sx);
    for (std::size_t s = 0; s < P.size(); ++s) {
      const bool above = d ? sbar_less(P, *d, DimValue::element(s)) : std::binary_search(sx.begin(), sx.end(), s);
      if (above && !t.at(x, s).is_zero()) {
        return Witness{x, s};
      }
    }
  }
  return std::nullopt;
}

inline bool pre_principal(const PreDimensionStructure& pre) { return !pre_principal_witness(pre).has_value(); }

/// If the pre-structure is principal, the extension must be too.
inline bool check_principality_preserved(const PreDimensionStructure& pre, const ExtensionResult& result) {
  return !pre_principal(pre) || classify(result.extended).principal.value;
}

struct EmbedReport {
  /// Extended element index -> target element index.
  std::vector<std::size_t> f;
  bool injective = true;
  bool order_preserving = true;
  bool values_on_S = true;
  bool sup_inequality = true;

  bool ok() const noexcept { return injective && order_preserving && values_on_S && sup_inequality; }
};

/// Embeds the extended poset into a target that contains the pre-structure
/// as a substructure: S is fixed pointwise and each adjoined element goes to
/// the target infimum of its class.
inline EmbedReport embed_into(const PreDimensionStructure& pre, const ExtensionResult& result,
                              const DimensionStructure& target) {
  const Table& t = pre.table();
  const FinitePoset& P = t.poset();
  const FinitePoset& T = target.poset();
  if (auto w = pre_principal_witness(pre)) {
    throw PreconditionError("pre-structure is not principal at point " + t.point_name(*w->point));
  }
  if (target.num_points() != t.num_points()) {
    throw NotASubstructure("target has a different point set");
  }
  std::vector<std::size_t> xmap(t.num_points());
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    auto y = target.table().find_point(t.point_name(x));
    if (!y) {
      throw NotASubstructure("point " + t.point_name(x) + " is missing from the target");
    }
    xmap[x] = *y;
  }
  std::vector<std::size_t> smap(P.size());
  for (std::size_t s = 0; s < P.size(); ++s) {
    auto u = T.find(P.name(s));
    if (!u) {
      throw NotASubstructure("element " + P.name(s) + " is missing from the target");
    }
    smap[s] = *u;
  }
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (P.leq(a, b) != T.leq(smap[a], smap[b])) {
        throw NotASubstructure("order between " + P.name(a) + " and " + P.name(b) + " differs in the target");
      }
    }
  }
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    for (std::size_t s = 0; s < P.size(); ++s) {
      if (!(t.at(x, s) == target.mu(xmap[x], smap[s]))) {
        throw NotASubstructure("mu differs at point " + t.point_name(x) + ", element " + P.name(s));
      }
    }
  }

  const DimensionStructure& H = result.extended;
  const FinitePoset& E = H.poset();
  const std::size_t n = P.size();
  EmbedReport r;
  r.f.resize(E.size());
  for (std::size_t s = 0; s < n; ++s) {
    r.f[result.embedding_of_S[s]] = smap[s];
  }
  for (std::size_t k = 0; k < result.new_elements.size(); ++k) {
    IndexSet cls;
    for (std::size_t s : result.new_elements[k].completes) {
      cls.push_back(smap[s]);
    }
    std::sort(cls.begin(), cls.end());
    auto inf = infimum(T, cls);
    if (!inf || !canonical(T, *inf).is_element()) {
      throw MissingInfimum("target has no infimum for " + result.new_elements[k].name);
    }
    r.f[n + k] = canonical(T, *inf).index();
  }

  std::string witness;
  for (std::size_t a = 0; a < E.size(); ++a) {
    for (std::size_t b = 0; b < E.size(); ++b) {
      if (a != b && r.f[a] == r.f[b] && r.injective) {
        r.injective = false;
        witness = "f(" + E.name(a) + ") = f(" + E.name(b) + ")";
      }
      if (E.less(a, b) && !T.less(r.f[a], r.f[b]) && r.order_preserving) {
        r.order_preserving = false;
        witness = E.name(a) + " < " + E.name(b) + " is not preserved";
      }
    }
  }
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!(target.mu(xmap[x], r.f[s]) == H.mu(x, s)) && r.values_on_S) {
        r.values_on_S = false;
        witness = "mu differs at " + t.point_name(x) + ", " + E.name(s);
      }
    }
    IndexSet sx = finite_set(t, x);
    for (std::size_t k = 0; k < result.new_elements.size(); ++k) {
      if (result.new_elements[k].completes != sx) {
        continue;
      }
      std::vector<ExtVal> vals;
      for (std::size_t s : sx) {
        vals.push_back(H.mu(x, s));
      }
      if (target.mu(xmap[x], r.f[n + k]) < ext_sup(vals) && r.sup_inequality) {
        r.sup_inequality = false;
        witness = "sup inequality fails at " + t.point_name(x);
      }
    }
  }
  if (!r.ok()) {
    throw VerificationError("embedding check failed: " + witness);
  }
  return r;
}

} // namespace dimstruct
