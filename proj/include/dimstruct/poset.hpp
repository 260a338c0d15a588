#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"

namespace dimstruct {

/// Sorted, duplicate-free list of element (or point) indices.
using IndexSet = std::vector<std::size_t>;

/// A finite partial order over named elements. The relation is stored fully
/// closed as a dense matrix, so every order query is a lookup.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `pairs` (a <= b).
  static FinitePoset build(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    FinitePoset p(std::move(elements));
    for (const auto& [a, b] : pairs) {
      p.leq_[p.index(a) * p.size() + p.index(b)] = 1;
    }
    p.close();
    return p;
  }

  /// Index-based variant of build().
  static FinitePoset from_indices(std::vector<std::string> elements,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    FinitePoset p(std::move(elements));
    for (const auto& [a, b] : pairs) {
      if (a >= p.size() || b >= p.size()) {
        throw UnknownElement("relation index out of range");
      }
      p.leq_[a * p.size() + b] = 1;
    }
    p.close();
    return p;
  }

  /// Builds from a full n*n relation matrix; closes it first.
  static FinitePoset from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
    FinitePoset p(std::move(elements));
    if (leq.size() != p.size() * p.size()) {
      throw ShapeError("relation matrix has wrong size");
    }
    p.leq_ = std::move(leq);
    p.close();
    return p;
  }

  /// Chain e0 < e1 < ... in the given order.
  static FinitePoset chain(std::vector<std::string> elements) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < elements.size(); ++i) {
      pairs.emplace_back(i - 1, i);
    }
    return from_indices(std::move(elements), pairs);
  }

  static FinitePoset antichain(std::vector<std::string> elements) {
    return from_indices(std::move(elements), {});
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }
  std::size_t index(std::string_view name) const {
    if (auto i = find(name)) {
      return *i;
    }
    throw UnknownElement("unknown element \"" + std::string(name) + "\"");
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// All strict pairs a < b, ordered by (a, b).
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (less(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::optional<std::size_t> minimum() const {
    for (std::size_t m = 0; m < size(); ++m) {
      bool all = true;
      for (std::size_t s = 0; s < size() && all; ++s) {
        all = leq(m, s);
      }
      if (all) {
        return m;
      }
    }
    return std::nullopt;
  }
  std::optional<std::size_t> maximum() const {
    for (std::size_t m = 0; m < size(); ++m) {
      bool all = true;
      for (std::size_t s = 0; s < size() && all; ++s) {
        all = leq(s, m);
      }
      if (all) {
        return m;
      }
    }
    return std::nullopt;
  }

  bool is_chain() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (!comparable(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  IndexSet up_set(std::size_t s) const {
    IndexSet out;
    for (std::size_t t = 0; t < size(); ++t) {
      if (leq(s, t)) {
        out.push_back(t);
      }
    }
    return out;
  }
  IndexSet strict_up_set(std::size_t s) const {
    IndexSet out;
    for (std::size_t t = 0; t < size(); ++t) {
      if (less(s, t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  /// The order induced on `subset` (indices into this poset); element order
  /// follows `subset`.
  FinitePoset induced(std::span<const std::size_t> subset) const {
    std::vector<std::string> names;
    names.reserve(subset.size());
    for (std::size_t s : subset) {
      names.push_back(name(s));
    }
    std::vector<std::uint8_t> m(subset.size() * subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = 0; j < subset.size(); ++j) {
        m[i * subset.size() + j] = leq(subset[i], subset[j]) ? 1 : 0;
      }
    }
    return from_matrix(std::move(names), std::move(m));
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

  const std::vector<std::uint8_t>& matrix() const noexcept { return leq_; }

private:
  explicit FinitePoset(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) {
        throw InputError("duplicate element \"" + names_[i] + "\"");
      }
    }
    leq_.assign(names_.size() * names_.size(), 0);
  }

  void close() {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      leq_[i * n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) {
            leq_[i * n + j] = 1;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq_[i * n + j] && leq_[j * n + i]) {
          throw CycleError("\"" + names_[i] + "\" and \"" + names_[j] +
                           "\" are mutually below each other");
        }
      }
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> leq_;
};

/// An element of S-bar = S + {-inf, +inf}.
///
/// Bottom and Top stand for the adjoined -inf/+inf. When the poset has a
/// minimum (maximum) those symbols denote that element instead; canonical()
/// rewrites them so equal dimensions compare equal structurally.
class DimValue {
public:
  enum class Kind : std::uint8_t { bottom, element, top };

  DimValue() : DimValue(Kind::bottom, 0) {}

  static DimValue bottom() { return DimValue(Kind::bottom, 0); }
  static DimValue top() { return DimValue(Kind::top, 0); }
  static DimValue element(std::size_t s) { return DimValue(Kind::element, s); }

  Kind kind() const noexcept { return kind_; }
  bool is_bottom() const noexcept { return kind_ == Kind::bottom; }
  bool is_top() const noexcept { return kind_ == Kind::top; }
  bool is_element() const noexcept { return kind_ == Kind::element; }
  std::size_t index() const noexcept { return index_; }

  friend bool operator==(const DimValue&, const DimValue&) = default;

private:
  DimValue(Kind k, std::size_t i) : kind_(k), index_(i) {}
  Kind kind_;
  std::size_t index_;
};

inline DimValue canonical(const FinitePoset& p, DimValue d) {
  if (d.is_bottom()) {
    if (auto m = p.minimum()) {
      return DimValue::element(*m);
    }
  } else if (d.is_top()) {
    if (auto m = p.maximum()) {
      return DimValue::element(*m);
    }
  }
  return d;
}

/// a <= b in S-bar (after canonicalisation).
inline bool sbar_leq(const FinitePoset& p, DimValue a, DimValue b) {
  a = canonical(p, a);
  b = canonical(p, b);
  if (a.is_bottom() || b.is_top()) {
    return true;
  }
  if (a.is_top() || b.is_bottom()) {
    return false;
  }
  return p.leq(a.index(), b.index());
}
inline bool sbar_less(const FinitePoset& p, DimValue a, DimValue b) {
  return sbar_leq(p, a, b) && canonical(p, a) != canonical(p, b);
}
inline bool sbar_equal(const FinitePoset& p, DimValue a, DimValue b) {
  return canonical(p, a) == canonical(p, b);
}
inline bool sbar_comparable(const FinitePoset& p, DimValue a, DimValue b) {
  return sbar_leq(p, a, b) || sbar_leq(p, b, a);
}

inline std::string to_string(const FinitePoset& p, DimValue d) {
  switch (d.kind()) {
  case DimValue::Kind::bottom:
    return "-inf";
  case DimValue::Kind::top:
    return "+inf";
  case DimValue::Kind::element:
    break;
  }
  return p.name(d.index());
}

/// Parses an element name, "-inf" or "+inf".
inline DimValue parse_dim_value(const FinitePoset& p, std::string_view text) {
  if (text == "-inf") {
    return DimValue::bottom();
  }
  if (text == "+inf" || text == "inf") {
    return DimValue::top();
  }
  return DimValue::element(p.index(text));
}

enum class BoundDirection { inf, sup };

/// Infimum (or supremum) of `subset` taken in S-bar.
///
/// Returns Top for inf of the empty set, Bottom when a nonempty set has no
/// lower bound in S, the greatest lower bound when one exists, and nullopt
/// ("undefined") when lower bounds exist but none is greatest. Dual for sup.
/// The result is not canonicalised.
inline std::optional<DimValue> bound_in_sbar(const FinitePoset& p, std::span<const std::size_t> subset,
                                             BoundDirection dir) {
  for (std::size_t s : subset) {
    if (s >= p.size()) {
      throw UnknownElement("element index out of range");
    }
  }
  const bool inf = dir == BoundDirection::inf;
  if (subset.empty()) {
    return inf ? DimValue::top() : DimValue::bottom();
  }
  // below(a, b): a is on the "bound side" of b.
  auto below = [&](std::size_t a, std::size_t b) { return inf ? p.leq(a, b) : p.leq(b, a); };
  IndexSet bounds;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (std::all_of(subset.begin(), subset.end(), [&](std::size_t s) { return below(t, s); })) {
      bounds.push_back(t);
    }
  }
  if (bounds.empty()) {
    return inf ? DimValue::bottom() : DimValue::top();
  }
  for (std::size_t g : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](std::size_t t) { return below(t, g); })) {
      return DimValue::element(g);
    }
  }
  return std::nullopt;
}

inline std::optional<DimValue> infimum(const FinitePoset& p, std::span<const std::size_t> subset) {
  return bound_in_sbar(p, subset, BoundDirection::inf);
}
inline std::optional<DimValue> supremum(const FinitePoset& p, std::span<const std::size_t> subset) {
  return bound_in_sbar(p, subset, BoundDirection::sup);
}

/// Supremum in S-bar of a collection of S-bar values.
inline std::optional<DimValue> sbar_supremum(const FinitePoset& p, std::span<const DimValue> values) {
  IndexSet elems;
  for (DimValue v : values) {
    v = canonical(p, v);
    if (v.is_top()) {
      return DimValue::top();
    }
    if (v.is_element()) {
      elems.push_back(v.index());
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return supremum(p, elems);
}

/// Infimum in S-bar of a collection of S-bar values.
inline std::optional<DimValue> sbar_infimum(const FinitePoset& p, std::span<const DimValue> values) {
  IndexSet elems;
  for (DimValue v : values) {
    v = canonical(p, v);
    if (v.is_bottom()) {
      return DimValue::bottom();
    }
    if (v.is_element()) {
      elems.push_back(v.index());
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return infimum(p, elems);
}

struct PosetProperties {
  bool ordered = false;
  bool dense = false;
  bool discrete = true;
  bool lattice = false;
  bool complete = false;
  bool has_min = false;
  bool has_max = false;
  std::vector<std::optional<std::size_t>> successor;
  std::vector<std::optional<std::size_t>> predecessor;
};

/// s+ = min{p : p > s}, if that minimum exists.
inline std::optional<std::size_t> successor(const FinitePoset& p, std::size_t s) {
  IndexSet above = p.strict_up_set(s);
  if (above.empty()) {
    return std::nullopt;
  }
  for (std::size_t c : above) {
    if (std::all_of(above.begin(), above.end(), [&](std::size_t t) { return p.leq(c, t); })) {
      return c;
    }
  }
  return std::nullopt;
}

/// s- = max{p : p < s}, if that maximum exists.
inline std::optional<std::size_t> predecessor(const FinitePoset& p, std::size_t s) {
  IndexSet below;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (p.less(t, s)) {
      below.push_back(t);
    }
  }
  for (std::size_t c : below) {
    if (std::all_of(below.begin(), below.end(), [&](std::size_t t) { return p.leq(t, c); })) {
      return c;
    }
  }
  return std::nullopt;
}

inline PosetProperties poset_properties(const FinitePoset& p) {
  PosetProperties r;
  const std::size_t n = p.size();
  r.ordered = p.is_chain();
  r.has_min = p.minimum().has_value();
  r.has_max = p.maximum().has_value();

  // Dense: every x < y has some z strictly between. A finite poset is dense
  // only when it has no strict pair at all, since any strict pair contains a
  // covering pair.
  r.dense = true;
  for (std::size_t a = 0; a < n && r.dense; ++a) {
    for (std::size_t b = 0; b < n && r.dense; ++b) {
      if (!p.less(a, b)) {
        continue;
      }
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) {
        between = p.less(a, c) && p.less(c, b);
      }
      r.dense = between;
    }
  }

  r.lattice = true;
  for (std::size_t a = 0; a < n && r.lattice; ++a) {
    for (std::size_t b = a + 1; b < n && r.lattice; ++b) {
      const std::size_t pair[] = {a, b};
      auto m = infimum(p, pair);
      auto j = supremum(p, pair);
      r.lattice = m && m->is_element() && j && j->is_element();
    }
  }
  r.complete = r.lattice && r.has_min && r.has_max;

  r.successor.resize(n);
  r.predecessor.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    r.successor[s] = successor(p, s);
    r.predecessor[s] = predecessor(p, s);
  }
  return r;
}

struct ConvexityFlags {
  bool convex = false;
  bool up_convex = false;
  bool down_convex = false;
  bool principal_filter = false;
};

inline ConvexityFlags convexity_check(const FinitePoset& p, std::span<const std::size_t> subset) {
  std::vector<std::uint8_t> in(p.size(), 0);
  for (std::size_t s : subset) {
    if (s >= p.size()) {
      throw UnknownElement("element index out of range");
    }
    in[s] = 1;
  }
  ConvexityFlags f{true, true, true, false};
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) {
        continue;
      }
      if (in[a] && !in[b]) {
        f.up_convex = false;
      }
      if (in[b] && !in[a]) {
        f.down_convex = false;
      }
      if (in[a] && !in[b]) {
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (in[c] && p.less(b, c)) {
            f.convex = false;
          }
        }
      }
    }
  }
  auto lo = infimum(p, subset);
  if (lo && lo->is_element() && in[lo->index()]) {
    f.principal_filter = p.up_set(lo->index()) == IndexSet(subset.begin(), subset.end());
  }
  return f;
}

/// "(a|b|...)" with '\\', '|', '(' and ')' inside names escaped by a backslash.
inline std::string tuple_name(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) {
      out += '|';
    }
    for (char c : parts[i]) {
      if (c == '\\' || c == '|' || c == '(' || c == ')') {
        out += '\\';
      }
      out += c;
    }
  }
  out += ')';
  return out;
}
inline std::string tuple_name(const std::string& a, const std::string& b) {
  const std::string parts[] = {a, b};
  return tuple_name(parts);
}

/// Product order; element (i, j) has index i * |q| + j.
inline FinitePoset product_order(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      names.push_back(tuple_name(p.name(i), q.name(j)));
    }
  }
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t a1 = a / q.size(), a2 = a % q.size();
      const std::size_t b1 = b / q.size(), b2 = b % q.size();
      m[a * n + b] = p.leq(a1, b1) && q.leq(a2, b2);
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

/// Lexicographic order: (s1,s2) <= (t1,t2) iff s1 < t1, or s1 = t1 and s2 <= t2.
inline FinitePoset lexicographic_order(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t n = p.size() * q.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      names.push_back(tuple_name(p.name(i), q.name(j)));
    }
  }
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t a1 = a / q.size(), a2 = a % q.size();
      const std::size_t b1 = b / q.size(), b2 = b % q.size();
      m[a * n + b] = p.less(a1, b1) || (a1 == b1 && q.leq(a2, b2));
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

/// Ordinal-style sum over an index poset: inside a block the block order,
/// across blocks s < t iff block(s) < block(t). Elements are listed block by
/// block in index order.
inline FinitePoset indexed_sum_order(const FinitePoset& index, std::span<const FinitePoset> blocks) {
  if (blocks.size() != index.size()) {
    throw ShapeError("indexed sum needs one block per index element");
  }
  std::vector<std::string> names;
  std::vector<std::size_t> block_of, local;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      names.push_back(blocks[b].name(i));
      block_of.push_back(b);
      local.push_back(i);
    }
  }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw DisjointnessError("element \"" + *dup + "\" appears in two blocks");
    }
  }
  const std::size_t n = names.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (block_of[a] == block_of[b]) {
        m[a * n + b] = blocks[block_of[a]].leq(local[a], local[b]);
      } else {
        m[a * n + b] = index.less(block_of[a], block_of[b]);
      }
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

enum class PosetCombination { product, lexicographic, indexed_sum };

/// Dispatching form of the three combinators. product/lexicographic use
/// blocks[0] and blocks[1]; indexed_sum needs `index`.
inline FinitePoset combine_posets(PosetCombination kind, std::span<const FinitePoset> blocks,
                                  const FinitePoset* index = nullptr) {
  switch (kind) {
  case PosetCombination::product:
  case PosetCombination::lexicographic:
    if (blocks.size() != 2) {
      throw ShapeError("binary poset combination needs exactly two posets");
    }
    return kind == PosetCombination::product ? product_order(blocks[0], blocks[1])
                                             : lexicographic_order(blocks[0], blocks[1]);
  case PosetCombination::indexed_sum:
    break;
  }
  if (index == nullptr) {
    throw ShapeError("indexed sum needs an index poset");
  }
  return indexed_sum_order(*index, blocks);
}

} // namespace dimstruct
