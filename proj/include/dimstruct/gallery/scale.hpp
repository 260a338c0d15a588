#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/gallery/sample.hpp"
#include "dimstruct/poset.hpp"

namespace dimstruct::gallery {

/// A Z-indexed real sequence with finitely many nonzero entries, all below
/// the index `bound`.
struct ScaleVector {
  std::map<long, Rational> entries;
  long bound = 0;

  static ScaleVector make(std::map<long, Rational> e, long bound) {
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    if (!e.empty() && e.rbegin()->first >= bound) {
      throw ShapeError("entry at index " + std::to_string(e.rbegin()->first) + " is not below the bound " +
                       std::to_string(bound));
    }
    return ScaleVector{std::move(e), bound};
  }
  Rational at(long n) const {
    auto it = entries.find(n);
    return it == entries.end() ? Rational(0) : it->second;
  }
};

inline bool same_point(const ScaleVector& a, const ScaleVector& b) { return a.entries == b.entries; }

inline std::string to_string(const ScaleVector& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& [n, q] : v.entries) {
    out += (first ? "" : ",") + std::to_string(n) + ":" + q.str();
    first = false;
  }
  return out + "]";
}

namespace detail {

/// Largest index where the two differ, if any.
inline std::optional<long> top_difference(const ScaleVector& x, const ScaleVector& y) {
  std::optional<long> top;
  for (const auto* v : {&x, &y}) {
    for (const auto& [n, q] : v->entries) {
      if (x.at(n) != y.at(n) && (!top || n > *top)) {
        top = n;
      }
    }
  }
  return top;
}

} // namespace detail

/// |x_n - y_n| when x and y agree above n, +inf otherwise.
inline ExtVal scale_rho(const ScaleVector& x, const ScaleVector& y, long n) {
  const auto top = detail::top_difference(x, y);
  if (top && *top > n) {
    return ExtVal::infinity();
  }
  return ExtVal::of(abs(x.at(n) - y.at(n)));
}

/// The largest index where x and y differ. rho there is finite and positive,
/// so every pair is a dim-point.
inline long scale_dim(const ScaleVector& x, const ScaleVector& y) {
  const auto top = detail::top_difference(x, y);
  if (!top) {
    throw EqualPoints("scale dim needs two different points");
  }
  if (!scale_rho(x, y, *top).is_fin()) {
    throw VerificationError("rho at the dim of a pair is not finite and positive");
  }
  return *top;
}

/// All unordered pairs of distinct named vectors over the window lo..hi.
inline Sample sample_scale(const std::vector<std::pair<std::string, ScaleVector>>& vectors, long lo, long hi) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (same_point(vectors[i].second, vectors[j].second)) {
        throw EqualPoints(vectors[i].first + " and " + vectors[j].first + " are the same point");
      }
      pairs.emplace_back(i, j);
      names.push_back(tuple_name(vectors[i].first, vectors[j].first));
    }
  }
  return make_sample(
      integer_window(lo, hi), std::move(names),
      [&](std::size_t x, std::size_t s) {
        return scale_rho(vectors[pairs[x].first].second, vectors[pairs[x].second].second, lo + static_cast<long>(s));
      },
      [&](std::size_t x) {
        const long d = scale_dim(vectors[pairs[x].first].second, vectors[pairs[x].second].second);
        AnalyticDim a{std::to_string(d), std::nullopt};
        if (lo <= d && d <= hi) {
          a.index = static_cast<std::size_t>(d - lo);
        }
        return a;
      });
}

} // namespace dimstruct::gallery
