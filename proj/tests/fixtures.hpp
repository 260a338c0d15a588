#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/structure.hpp"

namespace fixtures {

using namespace dimstruct;

using Rows = std::map<std::string, std::map<std::string, std::string>>;

/// Table with every entry +inf except the listed ones.
inline Table make_table(const FinitePoset& P, std::vector<std::string> points, const Rows& rows) {
  Table t(P, std::move(points));
  for (const auto& [x, row] : rows) {
    for (const auto& [s, v] : row) {
      t.at(t.point_index(x), P.index(s)) = ExtVal::parse(v);
    }
  }
  return t;
}

inline FinitePoset five_lattice() {
  return FinitePoset::build({"a", "b", "c", "d", "e"},
                            {{"a", "c"}, {"c", "d"}, {"d", "e"}, {"a", "b"}, {"b", "d"}});
}

/// The 5-element lattice example with points x, y, z, w.
inline Table worked_example() {
  return make_table(five_lattice(), {"x", "y", "z", "w"},
                    {{"x", {{"a", "0"}, {"b", "0"}, {"c", "0"}, {"d", "0"}, {"e", "0"}}},
                     {"y", {{"b", "0"}, {"d", "0"}, {"e", "0"}}},
                     {"z", {{"c", "0"}, {"d", "0"}, {"e", "0"}}},
                     {"w", {{"e", "0"}}}});
}

inline FinitePoset bowtie() {
  return FinitePoset::build({"a", "b", "p", "q"}, {{"a", "p"}, {"a", "q"}, {"b", "p"}, {"b", "q"}});
}

/// a, b < p, q with mu_p = mu_q = 0: inf{p, q} is missing.
inline Table ax3_failure() { return make_table(bowtie(), {"x"}, {{"x", {{"p", "0"}, {"q", "0"}}}}); }

/// bot < a, c, d < top; mu is zero on c, d, top and +inf on bot, a.
inline Table nonprincipal() {
  auto P = FinitePoset::build({"bot", "a", "c", "d", "top"}, {{"bot", "a"},
                                                              {"bot", "c"},
                                                              {"bot", "d"},
                                                              {"a", "top"},
                                                              {"c", "top"},
                                                              {"d", "top"}});
  return make_table(P, {"x"}, {{"x", {{"c", "0"}, {"d", "0"}, {"top", "0"}}}});
}

/// bowtie plus a genuine meet m with a, b < m < p, q.
inline Table embed_target() {
  auto P = FinitePoset::build({"a", "b", "p", "q", "m"},
                              {{"a", "m"}, {"b", "m"}, {"m", "p"}, {"m", "q"}});
  return make_table(P, {"x"}, {{"x", {{"p", "0"}, {"q", "0"}, {"m", "0"}}}});
}

/// s, t < m < a, b with one s-point at each of s, t, a, b. Dropping m (which
/// carries no s-point) leaves inf{a, b} undefined.
inline Table normalization_counterexample() {
  auto P = FinitePoset::build({"s", "t", "m", "a", "b"}, {{"s", "m"}, {"t", "m"}, {"m", "a"}, {"m", "b"}});
  return make_table(P, {"x", "y", "u", "v"},
                    {{"x", {{"s", "1"}, {"m", "0"}, {"a", "0"}, {"b", "0"}}},
                     {"y", {{"t", "1"}, {"m", "0"}, {"a", "0"}, {"b", "0"}}},
                     {"u", {{"a", "1"}}},
                     {"v", {{"b", "1"}}}});
}

/// s0 < s1 < t, s2 < t; valid, but sup Sinf_x = t lies above inf S0_x = s1.
inline Table csic_counterexample() {
  auto P = FinitePoset::build({"s0", "s1", "s2", "t"}, {{"s0", "s1"}, {"s1", "t"}, {"s2", "t"}});
  return make_table(P, {"x"}, {{"x", {{"s1", "0"}, {"t", "0"}}}});
}

/// s, e < c1, c2 with mu_s = 1, mu_e = +inf: inf S_x = s exists, but the
/// zero set {c1, c2} has no infimum.
inline Table extension_failure() {
  auto P = FinitePoset::build({"s", "e", "c1", "c2"}, {{"s", "c1"}, {"s", "c2"}, {"e", "c1"}, {"e", "c2"}});
  return make_table(P, {"x"}, {{"x", {{"s", "1"}, {"c1", "0"}, {"c2", "0"}}}});
}

inline Table chain_table(std::vector<std::string> elements, const Rows& rows,
                         std::vector<std::string> points) {
  return make_table(FinitePoset::chain(std::move(elements)), std::move(points), rows);
}

} // namespace fixtures
