#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"

namespace dimstruct {

/// Candidate data: a poset, named points and a total mu table (row per point).
class Table {
public:
  Table() = default;

  /// Every entry starts at +inf.
  Table(FinitePoset poset, std::vector<std::string> points)
      : poset_(std::move(poset)), points_(std::move(points)),
        mu_(points_.size() * poset_.size(), ExtVal::infinity()) {
    index_points();
  }

  Table(FinitePoset poset, std::vector<std::string> points, std::vector<ExtVal> mu)
      : poset_(std::move(poset)), points_(std::move(points)), mu_(std::move(mu)) {
    if (mu_.size() != points_.size() * poset_.size()) {
      throw TotalityError("mu table has " + std::to_string(mu_.size()) + " entries, expected " +
                          std::to_string(points_.size() * poset_.size()));
    }
    index_points();
  }

  const FinitePoset& poset() const noexcept { return poset_; }
  const std::vector<std::string>& points() const noexcept { return points_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_elements() const noexcept { return poset_.size(); }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }

  std::optional<std::size_t> find_point(std::string_view name) const {
    auto it = point_index_.find(std::string(name));
    if (it == point_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  std::size_t point_index(std::string_view name) const {
    if (auto x = find_point(name)) {
      return *x;
    }
    throw UnknownPoint("unknown point \"" + std::string(name) + "\"");
  }

  const ExtVal& at(std::size_t x, std::size_t s) const { return mu_[x * poset_.size() + s]; }
  ExtVal& at(std::size_t x, std::size_t s) { return mu_[x * poset_.size() + s]; }
  const std::vector<ExtVal>& values() const noexcept { return mu_; }

  friend bool operator==(const Table& a, const Table& b) {
    return a.poset_ == b.poset_ && a.points_ == b.points_ && a.mu_ == b.mu_;
  }

private:
  void index_points() {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!point_index_.emplace(points_[i], i).second) {
        throw InputError("duplicate point \"" + points_[i] + "\"");
      }
    }
  }

  FinitePoset poset_;
  std::vector<std::string> points_;
  std::vector<ExtVal> mu_;
  std::unordered_map<std::string, std::size_t> point_index_;
};

/// Deletes a point from a table.
inline Table drop_point(const Table& t, std::size_t x) {
  std::vector<std::string> points;
  std::vector<ExtVal> mu;
  for (std::size_t y = 0; y < t.num_points(); ++y) {
    if (y == x) {
      continue;
    }
    points.push_back(t.point_name(y));
    for (std::size_t s = 0; s < t.num_elements(); ++s) {
      mu.push_back(t.at(y, s));
    }
  }
  return Table(t.poset(), std::move(points), std::move(mu));
}

/// Restricts a table to the given points and elements (both sorted index sets).
inline Table restrict_table(const Table& t, const IndexSet& points, const IndexSet& elements) {
  std::vector<std::string> names;
  std::vector<ExtVal> mu;
  for (std::size_t x : points) {
    if (x >= t.num_points()) {
      throw UnknownPoint("point index out of range");
    }
    names.push_back(t.point_name(x));
    for (std::size_t s : elements) {
      mu.push_back(t.at(x, s));
    }
  }
  return Table(t.poset().induced(elements), std::move(names), std::move(mu));
}

/// Deletes an element from a table.
inline Table drop_element(const Table& t, std::size_t s) {
  IndexSet pts(t.num_points());
  for (std::size_t x = 0; x < pts.size(); ++x) {
    pts[x] = x;
  }
  IndexSet els;
  for (std::size_t e = 0; e < t.num_elements(); ++e) {
    if (e != s) {
      els.push_back(e);
    }
  }
  return restrict_table(t, pts, els);
}

enum class Axiom { ax1, ax2, ax3 };

inline const char* axiom_name(Axiom a) {
  switch (a) {
  case Axiom::ax1:
    return "ax1";
  case Axiom::ax2:
    return "ax2";
  case Axiom::ax3:
    break;
  }
  return "ax3";
}

/// One failed axiom instance. ax1/ax2 use (point, s, p); ax3 uses (point, zero_set).
struct AxiomViolation {
  Axiom axiom;
  std::size_t point;
  std::size_t s = 0;
  std::size_t p = 0;
  IndexSet zero_set;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  /// Only meaningful for pre-structure checks, where ax3 is informational.
  bool ax3 = true;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Axiom a) const {
    return std::any_of(violations.begin(), violations.end(),
                       [a](const AxiomViolation& v) { return v.axiom == a; });
  }
};

inline std::string describe(const Table& t, const AxiomViolation& v) {
  const auto& P = t.poset();
  std::string out = std::string(axiom_name(v.axiom)) + " at point " + t.point_name(v.point) + ": ";
  switch (v.axiom) {
  case Axiom::ax1:
    return out + P.name(v.s) + " < " + P.name(v.p) + ", mu_" + P.name(v.s) + " = " +
           t.at(v.point, v.s).str() + " but mu_" + P.name(v.p) + " = " + t.at(v.point, v.p).str();
  case Axiom::ax2:
    return out + P.name(v.s) + " and " + P.name(v.p) + " are incomparable with mu_" + P.name(v.s) +
           " = " + t.at(v.point, v.s).str() + " and mu_" + P.name(v.p) + " = " +
           t.at(v.point, v.p).str();
  case Axiom::ax3:
    break;
  }
  out += "inf of {";
  for (std::size_t i = 0; i < v.zero_set.size(); ++i) {
    out += (i ? "," : "") + P.name(v.zero_set[i]);
  }
  return out + "} does not exist";
}

class ValidationError : public Violation {
public:
  ValidationError(std::string what, ValidationReport report)
      : Violation(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

/// A pre-structure candidate failing ax1 or ax2.
class PreInvalid : public Violation {
public:
  PreInvalid(std::string what, ValidationReport report)
      : Violation(std::move(what)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

inline IndexSet zero_set(const Table& t, std::size_t x) {
  IndexSet out;
  for (std::size_t s = 0; s < t.num_elements(); ++s) {
    if (t.at(x, s).is_zero()) {
      out.push_back(s);
    }
  }
  return out;
}

inline IndexSet finite_set(const Table& t, std::size_t x) {
  IndexSet out;
  for (std::size_t s = 0; s < t.num_elements(); ++s) {
    if (t.at(x, s).bounded()) {
      out.push_back(s);
    }
  }
  return out;
}

namespace detail {

inline void check_ax12(const Table& t, std::size_t x, ValidationReport& r) {
  const auto& P = t.poset();
  for (std::size_t s = 0; s < P.size(); ++s) {
    for (std::size_t p = 0; p < P.size(); ++p) {
      if (P.less(s, p) && t.at(x, s).bounded() && !t.at(x, p).is_zero()) {
        r.violations.push_back({Axiom::ax1, x, s, p, {}});
      }
    }
  }
  for (std::size_t s = 0; s < P.size(); ++s) {
    if (!t.at(x, s).is_fin()) {
      continue;
    }
    for (std::size_t p = 0; p < P.size(); ++p) {
      if (t.at(x, p).bounded() && !P.comparable(s, p)) {
        r.violations.push_back({Axiom::ax2, x, s, p, {}});
      }
    }
  }
}

inline bool ax3_holds(const Table& t, std::size_t x, IndexSet& zeros) {
  zeros = zero_set(t, x);
  return infimum(t.poset(), zeros).has_value();
}

} // namespace detail

/// Checks (ax1)-(ax3) and lists every violation, ordered by point.
inline ValidationReport check_axioms(const Table& t) {
  ValidationReport r;
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    detail::check_ax12(t, x, r);
    IndexSet zeros;
    if (!detail::ax3_holds(t, x, zeros)) {
      r.violations.push_back({Axiom::ax3, x, 0, 0, std::move(zeros)});
      r.ax3 = false;
    }
  }
  return r;
}

/// Checks (ax1)-(ax2); the ax3 status is recorded in `ax3` but never listed
/// as a violation.
inline ValidationReport check_pre_axioms(const Table& t) {
  ValidationReport r;
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    detail::check_ax12(t, x, r);
    IndexSet zeros;
    if (!detail::ax3_holds(t, x, zeros)) {
      r.ax3 = false;
    }
  }
  return r;
}

/// A validated dimension structure. Dimensions are computed once, as the
/// canonical infimum of S_x.
class DimensionStructure {
public:
  static DimensionStructure validate(Table t) {
    ValidationReport r = check_axioms(t);
    if (!r.ok()) {
      std::string what = describe(t, r.violations.front());
      throw ValidationError(std::move(what), std::move(r));
    }
    return DimensionStructure(std::move(t));
  }

  const Table& table() const noexcept { return t_; }
  const FinitePoset& poset() const noexcept { return t_.poset(); }
  std::size_t num_points() const noexcept { return t_.num_points(); }
  std::size_t num_elements() const noexcept { return t_.num_elements(); }
  const std::string& point_name(std::size_t x) const { return t_.point_name(x); }
  const std::string& element_name(std::size_t s) const { return t_.poset().name(s); }
  std::size_t point_index(std::string_view n) const { return t_.point_index(n); }
  std::size_t element_index(std::string_view n) const { return t_.poset().index(n); }

  const ExtVal& mu(std::size_t x, std::size_t s) const { return t_.at(x, s); }
  DimValue dim(std::size_t x) const { return dims_.at(x); }

  friend bool operator==(const DimensionStructure& a, const DimensionStructure& b) {
    return a.t_ == b.t_;
  }

private:
  explicit DimensionStructure(Table t) : t_(std::move(t)) {
    dims_.reserve(t_.num_points());
    for (std::size_t x = 0; x < t_.num_points(); ++x) {
      IndexSet fin = finite_set(t_, x);
      auto d = infimum(t_.poset(), fin);
      if (!d) {
        throw Error("internal inconsistency: inf S_x undefined for point " + t_.point_name(x) +
                    " of a structure satisfying ax3");
      }
      dims_.push_back(canonical(t_.poset(), *d));
    }
  }

  Table t_;
  std::vector<DimValue> dims_;
};

/// A table satisfying (ax1) and (ax2); (ax3) may fail.
class PreDimensionStructure {
public:
  static PreDimensionStructure validate(Table t) {
    ValidationReport r = check_pre_axioms(t);
    if (!r.ok()) {
      std::string what = describe(t, r.violations.front());
      throw PreInvalid(std::move(what), std::move(r));
    }
    return PreDimensionStructure(std::move(t), r.ax3);
  }

  const Table& table() const noexcept { return t_; }
  const FinitePoset& poset() const noexcept { return t_.poset(); }
  std::size_t num_points() const noexcept { return t_.num_points(); }
  bool satisfies_ax3() const noexcept { return ax3_; }

private:
  PreDimensionStructure(Table t, bool ax3) : t_(std::move(t)), ax3_(ax3) {}
  Table t_;
  bool ax3_;
};

inline ExtVal mu_extended(const DimensionStructure& D, std::size_t x, DimValue d) {
  if (x >= D.num_points()) {
    throw UnknownPoint("point index out of range");
  }
  d = canonical(D.poset(), d);
  if (d.is_bottom()) {
    return ExtVal::infinity();
  }
  if (d.is_top()) {
    return ExtVal::zero();
  }
  return D.mu(x, d.index());
}

inline DimValue dim(const DimensionStructure& D, std::size_t x) {
  if (x >= D.num_points()) {
    throw UnknownPoint("point index out of range");
  }
  return D.dim(x);
}

struct MuD {
  DimValue dim;
  ExtVal value;
  friend bool operator==(const MuD&, const MuD&) = default;
};

inline MuD mu_D(const DimensionStructure& D, std::size_t x) {
  DimValue d = dim(D, x);
  return {d, mu_extended(D, x, d)};
}

struct SpectrumSets {
  IndexSet finite;   // S_x
  IndexSet zero;     // S0_x
  IndexSet infinite; // Sinf_x
};

inline SpectrumSets spectrum(const Table& t, std::size_t x) {
  if (x >= t.num_points()) {
    throw UnknownPoint("point index out of range");
  }
  SpectrumSets r;
  for (std::size_t s = 0; s < t.num_elements(); ++s) {
    const ExtVal& v = t.at(x, s);
    if (v.is_inf()) {
      r.infinite.push_back(s);
    } else {
      r.finite.push_back(s);
      if (v.is_zero()) {
        r.zero.push_back(s);
      }
    }
  }
  return r;
}
inline SpectrumSets spectrum(const DimensionStructure& D, std::size_t x) {
  return spectrum(D.table(), x);
}

inline bool is_s_point(const DimensionStructure& D, std::size_t x, std::size_t s) {
  if (x >= D.num_points()) {
    throw UnknownPoint("point index out of range");
  }
  if (s >= D.num_elements()) {
    throw UnknownElement("element index out of range");
  }
  return D.mu(x, s).is_fin();
}

/// The element at which x is an s-point, if any.
inline std::optional<std::size_t> s_point_position(const DimensionStructure& D, std::size_t x) {
  for (std::size_t s = 0; s < D.num_elements(); ++s) {
    if (is_s_point(D, x, s)) {
      return s;
    }
  }
  return std::nullopt;
}

inline bool is_dim_point(const DimensionStructure& D, std::size_t x) {
  return s_point_position(D, x).has_value();
}

/// C_{d,m}: points with dim x = d and mu_d(x) = m.
inline IndexSet class_C(const DimensionStructure& D, DimValue d, const ExtVal& m) {
  IndexSet out;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    if (sbar_equal(D.poset(), D.dim(x), d) && mu_extended(D, x, d) == m) {
      out.push_back(x);
    }
  }
  return out;
}

enum class DOrder { less_or_equal, greater, incomparable, equal_class };

inline const char* to_string(DOrder o) {
  switch (o) {
  case DOrder::less_or_equal:
    return "less_or_equal";
  case DOrder::greater:
    return "greater";
  case DOrder::incomparable:
    return "incomparable";
  case DOrder::equal_class:
    break;
  }
  return "equal_class";
}

/// x <=_D y: dim x < dim y, or equal dims d with mu_d(x) <= mu_d(y).
inline bool leq_D_holds(const DimensionStructure& D, std::size_t x, std::size_t y) {
  const DimValue dx = dim(D, x);
  const DimValue dy = dim(D, y);
  if (sbar_less(D.poset(), dx, dy)) {
    return true;
  }
  return sbar_equal(D.poset(), dx, dy) && mu_extended(D, x, dx) <= mu_extended(D, y, dy);
}

inline DOrder leq_D(const DimensionStructure& D, std::size_t x, std::size_t y) {
  const bool le = leq_D_holds(D, x, y);
  const bool ge = leq_D_holds(D, y, x);
  if (le && ge) {
    return DOrder::equal_class;
  }
  if (le) {
    return DOrder::less_or_equal;
  }
  return ge ? DOrder::greater : DOrder::incomparable;
}

} // namespace dimstruct
