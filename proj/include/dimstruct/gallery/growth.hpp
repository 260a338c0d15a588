#pragma once

#include <compare>
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

/// x_n = c * f_m(n) * n^beta * (log n)^gamma with f_0 = 1, f_1 = e^n,
/// f_{m+1} = e^{f_m}.
struct GrowthSeq {
  unsigned tower = 0;
  Rational pow = 0;
  long logexp = 0;
  Rational coeff = 1;

  /// Checks c > 0 and that the sequence tends to +inf.
  static GrowthSeq make(unsigned m, Rational beta, long gamma, Rational c = 1) {
    if (c <= 0) {
      throw UnsupportedForm("coefficient must be positive");
    }
    GrowthSeq x{m, std::move(beta), gamma, std::move(c)};
    if (x.shape() <= std::make_tuple(0u, Rational(0), 0L)) {
      throw UnsupportedForm("sequence does not tend to +inf");
    }
    return x;
  }
  std::tuple<unsigned, Rational, long> shape() const { return {tower, pow, logexp}; }
  friend bool operator==(const GrowthSeq&, const GrowthSeq&) = default;
};

inline std::string to_string(const GrowthSeq& x) {
  std::string out = x.coeff.str();
  if (x.tower > 0) {
    out += "*f" + std::to_string(x.tower) + "(n)";
  }
  if (x.pow != 0) {
    out += "*n^" + x.pow.str();
  }
  if (x.logexp != 0) {
    out += "*log(n)^" + std::to_string(x.logexp);
  }
  return out;
}

/// Index (k, alpha): divide by f_k(n) * n^alpha.
struct Probe {
  unsigned tower = 0;
  Rational alpha = 0;
};

enum class LimitKind { liminf, limsup };

/// The limit of x_n / (f_k(n) n^alpha), decided by comparing
/// (m, beta, gamma) with (k, alpha, 0) lexicographically. The terms are
/// eventually monotone, so liminf and limsup agree.
inline ExtVal growth_measure(const GrowthSeq& x, const Probe& p, LimitKind = LimitKind::liminf) {
  if (p.alpha < 0) {
    throw NegativeInput("probe exponent must be nonnegative");
  }
  const auto c = x.shape() <=> std::make_tuple(p.tower, p.alpha, 0L);
  if (c > 0) {
    return ExtVal::infinity();
  }
  if (c < 0) {
    return ExtVal::zero();
  }
  return ExtVal::of(x.coeff);
}

/// A dim in one of the growth index sets: -inf (not attained), a point, or
/// +inf. `mu` is the measure at the point.
struct GrowthDim {
  DimValue::Kind kind = DimValue::Kind::element;
  unsigned tower = 0;
  Rational alpha = 0;
  ExtVal mu;
  friend bool operator==(const GrowthDim&, const GrowthDim&) = default;
};

inline std::string to_string(const GrowthDim& d, bool with_tower) {
  if (d.kind == DimValue::Kind::bottom) {
    return "-inf";
  }
  if (d.kind == DimValue::Kind::top) {
    return "+inf";
  }
  return with_tower ? "(" + std::to_string(d.tower) + "," + d.alpha.str() + ")" : d.alpha.str();
}

enum class GrowthFamily { alpha_only, tower_alpha };

/// alpha_only indexes by alpha > 0 with k = 0; tower_alpha by (k, alpha) with
/// alpha >= 0 in lexicographic order.
inline GrowthDim growth_dim(const GrowthSeq& x, GrowthFamily family) {
  GrowthDim d;
  if (family == GrowthFamily::alpha_only) {
    if (x.tower > 0) {
      d.kind = DimValue::Kind::top;
      return d;
    }
    if (x.pow <= 0) {
      d.kind = DimValue::Kind::bottom; // every alpha > 0 is finite, inf is 0
      return d;
    }
    d.alpha = x.pow;
    d.mu = growth_measure(x, {0, x.pow});
    return d;
  }
  d.tower = x.tower;
  d.alpha = x.pow > 0 ? x.pow : Rational(0);
  d.mu = growth_measure(x, {d.tower, d.alpha});
  return d;
}

/// Terms indexed by the full sequence index: x_{2n} follows `even` and
/// x_{2n+1} follows `odd`.
struct EvenOddSeq {
  GrowthSeq even;
  GrowthSeq odd;
};

enum class EvenOddMode { product, min };

/// liminf of the even part at alpha combined with limsup of the odd part at
/// beta; +inf if either is +inf.
inline ExtVal evenodd_measure(const EvenOddSeq& x, const Rational& alpha, const Rational& beta,
                              EvenOddMode mode = EvenOddMode::product) {
  if (alpha <= 0 || beta <= 0) {
    throw NegativeInput("even/odd probes must be positive");
  }
  const ExtVal a = growth_measure(x.even, {0, alpha}, LimitKind::liminf);
  const ExtVal b = growth_measure(x.odd, {0, beta}, LimitKind::limsup);
  if (a.is_inf() || b.is_inf()) {
    return ExtVal::infinity();
  }
  return mode == EvenOddMode::product ? ext_mul(a, b) : ext_min(a, b);
}

/// Coordinatewise alpha_only dims under the product order.
inline std::pair<GrowthDim, GrowthDim> evenodd_dim(const EvenOddSeq& x) {
  return {growth_dim(x.even, GrowthFamily::alpha_only), growth_dim(x.odd, GrowthFamily::alpha_only)};
}

namespace detail {

inline std::vector<std::string> rational_names(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) {
    out.push_back(q.str());
  }
  return out;
}

inline void require_increasing(const std::vector<Rational>& v, bool positive) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((positive && v[i] <= 0) || (!positive && v[i] < 0)) {
      throw NegativeInput("probe " + v[i].str() + " is out of range");
    }
    if (i > 0 && !(v[i - 1] < v[i])) {
      throw ShapeError("probes must be strictly increasing");
    }
  }
}

/// Position of an attained dim among the probes. The model's S_x is an
/// up-set, so such a dim is also the least finite probe of the window.
inline std::optional<std::size_t> probe_index(const std::vector<Rational>& probes, const GrowthDim& d) {
  if (d.kind != DimValue::Kind::element || d.mu.is_inf()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i] == d.alpha) {
      return i;
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Sequences sampled at (k, alpha) for k <= max_tower and the given alphas,
/// ordered lexicographically.
inline Sample sample_growth(const std::vector<GrowthSeq>& seqs, unsigned max_tower, const std::vector<Rational>& alphas) {
  detail::require_increasing(alphas, false);
  const FinitePoset window =
      lexicographic_order(integer_window(0, static_cast<long>(max_tower)),
                          FinitePoset::chain(detail::rational_names(alphas)));
  const std::size_t q = alphas.size();
  std::vector<std::string> names;
  for (const auto& x : seqs) {
    names.push_back(to_string(x));
  }
  return make_sample(
      window, std::move(names),
      [&](std::size_t x, std::size_t s) { return growth_measure(seqs[x], {static_cast<unsigned>(s / q), alphas[s % q]}); },
      [&](std::size_t x) {
        const GrowthDim d = growth_dim(seqs[x], GrowthFamily::tower_alpha);
        AnalyticDim a{to_string(d, true), std::nullopt};
        if (auto i = detail::probe_index(alphas, d); i && d.tower <= max_tower) {
          a.index = d.tower * q + *i;
        }
        return a;
      });
}

/// Even/odd sequences on a grid alphas x betas under the product order.
inline Sample sample_evenodd(const std::vector<EvenOddSeq>& seqs, const std::vector<Rational>& alphas,
                             const std::vector<Rational>& betas, EvenOddMode mode = EvenOddMode::product) {
  detail::require_increasing(alphas, true);
  detail::require_increasing(betas, true);
  const FinitePoset window = product_order(FinitePoset::chain(detail::rational_names(alphas)),
                                           FinitePoset::chain(detail::rational_names(betas)));
  const std::size_t q = betas.size();
  std::vector<std::string> names;
  for (const auto& x : seqs) {
    names.push_back("[" + to_string(x.even) + ";" + to_string(x.odd) + "]");
  }
  return make_sample(
      window, std::move(names),
      [&](std::size_t x, std::size_t s) { return evenodd_measure(seqs[x], alphas[s / q], betas[s % q], mode); },
      [&](std::size_t x) {
        const auto [de, dodd] = evenodd_dim(seqs[x]);
        AnalyticDim a{"(" + to_string(de, false) + "," + to_string(dodd, false) + ")", std::nullopt};
        auto i = detail::probe_index(alphas, de);
        auto j = detail::probe_index(betas, dodd);
        if (i && j) {
          a.index = *i * q + *j;
        }
        return a;
      });
}

/// Grid elements strictly above the model dim where mu is not zero: the
/// model is not principal at x when this is nonempty.
inline std::vector<std::pair<Rational, Rational>> evenodd_principal_breaches(const EvenOddSeq& x,
                                                                            const std::vector<Rational>& alphas,
                                                                            const std::vector<Rational>& betas,
                                                                            EvenOddMode mode = EvenOddMode::product) {
  const auto [de, dodd] = evenodd_dim(x);
  std::vector<std::pair<Rational, Rational>> out;
  if (de.kind == DimValue::Kind::top || dodd.kind == DimValue::Kind::top) {
    return out;
  }
  auto at_least = [](const GrowthDim& d, const Rational& a) {
    return d.kind == DimValue::Kind::bottom || d.alpha <= a;
  };
  for (const auto& a : alphas) {
    for (const auto& b : betas) {
      const bool above = at_least(de, a) && at_least(dodd, b) &&
                         !(de.kind == DimValue::Kind::element && dodd.kind == DimValue::Kind::element &&
                           de.alpha == a && dodd.alpha == b);
      if (above && !evenodd_measure(x, a, b, mode).is_zero()) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

} // namespace dimstruct::gallery
