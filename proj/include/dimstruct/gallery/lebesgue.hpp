#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/gallery/sample.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"

namespace dimstruct::gallery {

inline Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) {
    f -= 1;
  }
  return f;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

struct Interval {
  Rational lo;
  Rational hi; // half-open [lo, hi)
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of half-open rational intervals, kept sorted, disjoint and
/// with touching pieces merged.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& i) { return !(i.lo < i.hi); });
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (auto& p : parts) {
      if (!parts_.empty() && p.lo <= parts_.back().hi) {
        parts_.back().hi = std::max(parts_.back().hi, p.hi);
      } else {
        parts_.push_back(std::move(p));
      }
    }
  }
  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Measure of the part inside [from, to); a missing bound is unbounded.
  Rational measure(const std::optional<Rational>& from = {}, const std::optional<Rational>& to = {}) const {
    Rational total = 0;
    for (const auto& p : parts_) {
      const Rational a = from ? std::max(p.lo, *from) : p.lo;
      const Rational b = to ? std::min(p.hi, *to) : p.hi;
      if (a < b) {
        total += b - a;
      }
    }
    return total;
  }
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  std::vector<Interval> parts_;
};

inline std::string to_string(const IntervalSet& h) {
  if (h.empty()) {
    return "{}";
  }
  std::string out;
  for (const auto& p : h.parts()) {
    out += (out.empty() ? "" : "u") + ("[" + p.lo.str() + "," + p.hi.str() + ")");
  }
  return out;
}

/// +inf if H has positive measure beyond n+1, else the measure in [n, n+1).
inline ExtVal leb_mu(const IntervalSet& h, long n) {
  if (h.measure(Rational(n + 1)) > 0) {
    return ExtVal::infinity();
  }
  return ExtVal::of(h.measure(Rational(n), Rational(n + 1)));
}

/// The unit cell holding the right end of H; empty H has every mu zero and
/// dim -inf.
inline std::optional<long> leb_dim(const IntervalSet& h) {
  if (h.empty()) {
    return std::nullopt;
  }
  return static_cast<long>(ceil_of(h.parts().back().hi)) - 1;
}

struct Rect {
  Rational x0, x1, y0, y1; // [x0, x1) x [y0, y1)
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A finite union of half-open rational rectangles in the normal form of
/// vertical strips: breakpoints of x, merged y-intervals per strip, equal
/// neighbouring strips joined.
class RectSet {
public:
  RectSet() = default;
  explicit RectSet(const std::vector<Rect>& rects) {
    std::vector<Rational> xs;
    for (const auto& r : rects) {
      if (r.x0 < r.x1 && r.y0 < r.y1) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
      }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Interval, IntervalSet>> strips;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      std::vector<Interval> ys;
      for (const auto& r : rects) {
        if (r.x0 <= xs[i] && xs[i + 1] <= r.x1 && r.y0 < r.y1) {
          ys.push_back({r.y0, r.y1});
        }
      }
      IntervalSet col(std::move(ys));
      if (col.empty()) {
        continue;
      }
      if (!strips.empty() && strips.back().first.hi == xs[i] && strips.back().second == col) {
        strips.back().first.hi = xs[i + 1];
      } else {
        strips.push_back({{xs[i], xs[i + 1]}, std::move(col)});
      }
    }
    for (const auto& [x, col] : strips) {
      for (const auto& y : col.parts()) {
        rects_.push_back({x.lo, x.hi, y.lo, y.hi});
      }
    }
  }
  const std::vector<Rect>& rects() const noexcept { return rects_; }
  bool empty() const noexcept { return rects_.empty(); }

  /// Measure of the part with x < x_to and y < y_to (missing bound:
  /// unbounded).
  Rational measure_below(const std::optional<Rational>& x_to = {}, const std::optional<Rational>& y_to = {}) const {
    return measure({}, x_to, {}, y_to);
  }
  Rational measure(const std::optional<Rational>& x_from, const std::optional<Rational>& x_to,
                   const std::optional<Rational>& y_from, const std::optional<Rational>& y_to) const {
    Rational total = 0;
    for (const auto& r : rects_) {
      const Rational a = x_from ? std::max(r.x0, *x_from) : r.x0;
      const Rational b = x_to ? std::min(r.x1, *x_to) : r.x1;
      const Rational c = y_from ? std::max(r.y0, *y_from) : r.y0;
      const Rational d = y_to ? std::min(r.y1, *y_to) : r.y1;
      if (a < b && c < d) {
        total += (b - a) * (d - c);
      }
    }
    return total;
  }
  friend bool operator==(const RectSet&, const RectSet&) = default;

private:
  std::vector<Rect> rects_;
};

inline std::string to_string(const RectSet& h) {
  if (h.empty()) {
    return "{}";
  }
  std::string out;
  for (const auto& r : h.rects()) {
    out += (out.empty() ? "" : "u") +
           ("[" + r.x0.str() + "," + r.x1.str() + ")x[" + r.y0.str() + "," + r.y1.str() + ")");
  }
  return out;
}

/// +inf if H has positive measure where x >= n+1 or y >= m+1, else the
/// measure of the unit cell at (n, m).
inline ExtVal pleb_mu(const RectSet& h, long n, long m) {
  const Rational outside = h.measure_below() - h.measure_below(Rational(n + 1), Rational(m + 1));
  if (outside > 0) {
    return ExtVal::infinity();
  }
  return ExtVal::of(h.measure(Rational(n), Rational(n + 1), Rational(m), Rational(m + 1)));
}

/// The cells holding the right and upper ends of H, or -inf when empty.
inline std::optional<std::pair<long, long>> pleb_dim(const RectSet& h) {
  if (h.empty()) {
    return std::nullopt;
  }
  Rational xm = h.rects().front().x1;
  Rational ym = h.rects().front().y1;
  for (const auto& r : h.rects()) {
    xm = std::max(xm, r.x1);
    ym = std::max(ym, r.y1);
  }
  return std::make_pair(static_cast<long>(ceil_of(xm)) - 1, static_cast<long>(ceil_of(ym)) - 1);
}

/// Interval sets over the window lo..hi.
inline Sample sample_leb(const std::vector<IntervalSet>& sets, long lo, long hi) {
  std::vector<std::string> names;
  for (const auto& h : sets) {
    names.push_back(to_string(h));
  }
  return make_sample(
      integer_window(lo, hi), std::move(names),
      [&](std::size_t x, std::size_t s) { return leb_mu(sets[x], lo + static_cast<long>(s)); },
      [&](std::size_t x) {
        const auto d = leb_dim(sets[x]);
        AnalyticDim a{d ? std::to_string(*d) : "-inf", std::nullopt};
        if (d && lo <= *d && *d <= hi) {
          a.index = static_cast<std::size_t>(*d - lo);
        }
        return a;
      });
}

/// Rectangle sets over the window [lo, hi]^2 with the product order. The
/// sampled structure must be principal.
inline Sample sample_pleb(const std::vector<RectSet>& sets, long lo, long hi) {
  const FinitePoset w = integer_window(lo, hi);
  const std::size_t q = w.size();
  std::vector<std::string> names;
  for (const auto& h : sets) {
    names.push_back(to_string(h));
  }
  Sample out = make_sample(
      product_order(w, w), std::move(names),
      [&](std::size_t x, std::size_t s) {
        return pleb_mu(sets[x], lo + static_cast<long>(s / q), lo + static_cast<long>(s % q));
      },
      [&](std::size_t x) {
        const auto d = pleb_dim(sets[x]);
        AnalyticDim a{d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : "-inf",
                      std::nullopt};
        if (d && lo <= d->first && d->first <= hi && lo <= d->second && d->second <= hi) {
          a.index = static_cast<std::size_t>(d->first - lo) * q + static_cast<std::size_t>(d->second - lo);
        }
        return a;
      });
  if (!classify(out.structure).principal.value) {
    throw VerificationError("sampled planar structure is not principal");
  }
  return out;
}

} // namespace dimstruct::gallery
