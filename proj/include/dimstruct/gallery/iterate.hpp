#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/gallery/sample.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct::gallery {

/// mu_n(x) is 0 once f_n(x) is a fixed point, 1 one step before that, +inf
/// earlier (f_0 = f). The index set is the window 0..window-1, which
/// defaults to |X|.
inline DimensionStructure iterate_structure(const std::vector<std::string>& X,
                                            const std::vector<std::pair<std::string, std::string>>& order,
                                            const std::vector<std::pair<std::string, std::string>>& f,
                                            std::optional<std::size_t> window = std::nullopt) {
  const FinitePoset P = FinitePoset::build(X, order);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fx(P.size(), unset);
  for (const auto& [a, b] : f) {
    auto i = P.find(a);
    auto j = P.find(b);
    if (!i || !j) {
      throw UnknownPoint("f mentions unknown point \"" + (i ? b : a) + "\"");
    }
    if (fx[*i] != unset) {
      throw ShapeError("f(" + a + ") is given twice");
    }
    fx[*i] = *j;
  }
  for (std::size_t x = 0; x < P.size(); ++x) {
    if (fx[x] == unset) {
      throw ShapeError("f(" + P.name(x) + ") is missing");
    }
    if (!P.leq(fx[x], x)) {
      throw NotDecreasing("f(" + P.name(x) + ") = " + P.name(fx[x]) + " is not below " + P.name(x));
    }
  }

  // Orbit of f starting at f(x); it is constant from the first repeat on.
  auto orbit = [&](std::size_t x, std::size_t len) {
    std::vector<std::size_t> o{fx[x]};
    while (o.size() < len) {
      o.push_back(fx[o.back()]);
    }
    return o;
  };
  std::size_t needed = 1;
  for (std::size_t x = 0; x < P.size(); ++x) {
    const auto o = orbit(x, P.size() + 1);
    std::size_t s = 0;
    while (o[s] != o[s + 1]) {
      ++s;
    }
    needed = std::max(needed, s == 0 ? std::size_t{1} : s);
  }
  const std::size_t w = window.value_or(std::max<std::size_t>(P.size(), 1));
  if (w < needed) {
    throw WindowTooSmall("window of " + std::to_string(w) + " indices is shorter than a stabilization chain of " +
                         std::to_string(needed));
  }

  Table t(integer_window(0, static_cast<long>(w) - 1), X);
  for (std::size_t x = 0; x < P.size(); ++x) {
    const auto o = orbit(x, w + 2);
    for (std::size_t n = 0; n < w; ++n) {
      if (o[n] == o[n + 1]) {
        t.at(x, n) = ExtVal::zero();
      } else if (o[n + 1] == o[n + 2]) {
        t.at(x, n) = ExtVal::of(1);
      }
    }
  }
  return DimensionStructure::validate(std::move(t));
}

} // namespace dimstruct::gallery
