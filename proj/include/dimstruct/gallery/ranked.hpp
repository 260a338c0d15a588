#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/gallery/sample.hpp"

namespace dimstruct::gallery {

/// A subset of the line up to homeomorphism type: counts[r] disjoint copies
/// of the compact set whose r-th derived set is one point. Zero counts are
/// dropped.
struct RankedSet {
  std::map<std::size_t, std::size_t> counts;

  static RankedSet of(std::map<std::size_t, std::size_t> c) {
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    return RankedSet{std::move(c)};
  }
  bool empty() const { return counts.empty(); }
  friend bool operator==(const RankedSet&, const RankedSet&) = default;
};

inline std::string to_string(const RankedSet& h) {
  std::string out = "{";
  bool first = true;
  for (const auto& [r, c] : h.counts) {
    out += (first ? "" : ",") + std::to_string(r) + ":" + std::to_string(c);
    first = false;
  }
  return out + "}";
}

/// Largest rank present; EmptySet for the empty set.
inline std::size_t top_rank(const RankedSet& h) {
  if (h.empty()) {
    throw EmptySet("the empty set has no top rank");
  }
  return h.counts.rbegin()->first;
}

/// |H^(n)| when finite, +inf otherwise.
inline ExtVal ranked_mu(const RankedSet& h, std::size_t n) {
  if (h.empty() || n > top_rank(h)) {
    return ExtVal::zero();
  }
  if (n < top_rank(h)) {
    return ExtVal::infinity();
  }
  return ExtVal::of(static_cast<long long>(h.counts.rbegin()->second));
}

/// The top rank; the empty set has every mu zero, so its dim is 0.
inline std::size_t ranked_dim(const RankedSet& h) { return h.empty() ? 0 : top_rank(h); }

/// Union of separated sets. The finite synchronization law is checked on
/// the result.
inline RankedSet ranked_union(const RankedSet& a, const RankedSet& b) {
  RankedSet out = a;
  for (const auto& [r, c] : b.counts) {
    out.counts[r] += c;
  }
  const std::size_t d = ranked_dim(out);
  if (d != std::max(ranked_dim(a), ranked_dim(b))) {
    throw VerificationError("dim of a union is not the larger dim");
  }
  if (!out.empty() && ranked_dim(a) == ranked_dim(b) && !a.empty() && !b.empty() &&
      !(ranked_mu(out, d) == ext_add(ranked_mu(a, d), ranked_mu(b, d)))) {
    throw VerificationError("mu at a shared top rank does not add");
  }
  return out;
}

/// Window of ranks 0..max_rank. mu at the top rank is finite, so every dim
/// inside the window is attained.
inline Sample sample_ranked(const std::vector<RankedSet>& sets, std::size_t max_rank) {
  std::vector<std::string> names;
  for (const auto& h : sets) {
    names.push_back(to_string(h));
  }
  return make_sample(
      integer_window(0, static_cast<long>(max_rank)), std::move(names),
      [&](std::size_t x, std::size_t s) { return ranked_mu(sets[x], s); },
      [&](std::size_t x) {
        const std::size_t d = ranked_dim(sets[x]);
        AnalyticDim a{std::to_string(d), std::nullopt};
        if (d <= max_rank) {
          a.index = d;
        }
        return a;
      });
}

} // namespace dimstruct::gallery
