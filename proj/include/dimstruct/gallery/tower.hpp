#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/gallery/sample.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"

namespace dimstruct::gallery {

/// 50 decimal digits; the inversion needs far more than double.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

inline Real parse_real(const std::string& text) {
  Real r;
  try {
    r = Real(text);
  } catch (const std::exception&) {
    throw ParseError("not a decimal number: \"" + text + "\"");
  }
  if (text.empty() || !isfinite(r)) {
    throw ParseError("not a decimal number: \"" + text + "\"");
  }
  return r;
}

/// g_0(y) = y / (y + 1), g_n = exp(g_{n-1}).
inline Real tower_g(unsigned n, const Real& y) {
  Real v = y / (y + 1);
  for (unsigned i = 0; i < n; ++i) {
    v = exp(v);
  }
  return v;
}

/// g_n(0), the left end of the range of g_n.
inline Real tower_floor(unsigned n) { return tower_g(n, Real(0)); }

struct TowerDecomposition {
  unsigned height = 0;
  ExtVal mu;
};

/// The height n with z in the range of g_n, and mu = g_n^{-1}(z). mu is
/// the first continued-fraction convergent of the inverse for which g_n(mu)
/// is within `precision` of z.
inline TowerDecomposition tower_decompose(const Real& z, const Rational& precision = Rational(1, 1000000000)) {
  if (z < 0) {
    throw NegativeInput("tower expansion needs z >= 0");
  }
  if (precision <= 0) {
    throw NegativeInput("precision must be positive");
  }
  TowerDecomposition out;
  Real t = z;
  while (t >= 1) {
    t = log(t);
    ++out.height;
  }
  if (t < 0) {
    throw PrecisionError("iterated logarithm left [0, 1)");
  }
  const Real y = t / (1 - t);
  const Real tol = to_real(precision);
  // Convergents of the continued fraction of y, simplest first.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real rest = y;
  for (int i = 0; i < 80; ++i) {
    const Real a = floor(rest);
    const Integer ai = static_cast<Integer>(a);
    const Integer p2 = ai * p1 + p0;
    const Integer q2 = ai * q1 + q0;
    const Rational q(p2, q2);
    if (abs(tower_g(out.height, to_real(q)) - z) <= tol) {
      out.mu = ExtVal::of(q);
      return out;
    }
    if (rest == a) {
      break;
    }
    rest = 1 / (rest - a);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  throw PrecisionError("no rational mu within the requested precision");
}

inline TowerDecomposition tower_decompose(const std::string& z, const Rational& precision = Rational(1, 1000000000)) {
  return tower_decompose(parse_real(z), precision);
}

/// mu_k(z): +inf below the height, the inverse at it, zero above.
inline ExtVal tower_mu(const TowerDecomposition& d, unsigned k) {
  if (k < d.height) {
    return ExtVal::infinity();
  }
  return k == d.height ? d.mu : ExtVal::zero();
}

/// Decimal inputs over heights 0..max_height. The points are ordered as
/// numbers; mu is monotone along that order and pairwise synchronization is
/// checked.
inline Sample sample_tower(const std::vector<std::string>& values, unsigned max_height,
                           const Rational& precision = Rational(1, 1000000000)) {
  std::vector<Real> zs;
  std::vector<TowerDecomposition> ds;
  for (const auto& v : values) {
    zs.push_back(parse_real(v));
    ds.push_back(tower_decompose(zs.back(), precision));
  }
  Sample out = make_sample(
      integer_window(0, static_cast<long>(max_height)), values,
      [&](std::size_t x, std::size_t s) { return tower_mu(ds[x], static_cast<unsigned>(s)); },
      [&](std::size_t x) {
        AnalyticDim a{std::to_string(ds[x].height), std::nullopt};
        if (ds[x].height <= max_height) {
          a.index = ds[x].height;
        }
        return a;
      });
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t x = 0; x < zs.size(); ++x) {
    for (std::size_t y = 0; y < zs.size(); ++y) {
      if (zs[x] < zs[y]) {
        less.emplace_back(x, y);
        for (std::size_t s = 0; s <= max_height; ++s) {
          if (out.structure.mu(y, s) < out.structure.mu(x, s)) {
            throw VerificationError("mu is not monotone between " + values[x] + " and " + values[y]);
          }
        }
      }
    }
  }
  const FinitePoset order = FinitePoset::from_indices(values, less);
  if (!check_synchronization(out.structure, order, 2).synchronized()) {
    throw VerificationError("sampled tower structure is not synchronized");
  }
  return out;
}

} // namespace dimstruct::gallery
