#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct {

/// Portable deterministic generator. std::uniform_int_distribution is not
/// specified bit-for-bit, so ranges are drawn by rejection sampling here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return static_cast<std::size_t>(v % bound);
  }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

private:
  std::mt19937_64 eng_;
};

struct Limits {
  std::size_t max_elements = 6;
  std::size_t max_points = 6;
};

enum class GenMode { valid_principal, valid_general, raw };

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

/// A small positive rational p/q with p in 1..6, q in 1..4.
inline ExtVal random_positive(Rng& rng) {
  const long long p = static_cast<long long>(rng.between(1, 6));
  const long long q = static_cast<long long>(rng.between(1, 4));
  return ExtVal::of(p, q);
}

/// One of: chain, product of two chains, M_k, N5, or the 5-element lattice
/// a<c<d<e, a<b<d. Never more than `max_elements` elements (at least 1).
inline FinitePoset random_lattice(Rng& rng, std::size_t max_elements) {
  const std::size_t n = std::max<std::size_t>(1, rng.between(1, std::max<std::size_t>(1, max_elements)));
  const std::size_t kind = rng.below(5);
  if (kind == 1 && max_elements >= 4) {
    std::size_t a = rng.between(2, max_elements / 2);
    std::size_t b = std::max<std::size_t>(1, max_elements / a);
    b = rng.between(1, b);
    auto prod = product_order(FinitePoset::chain(numbered("a", a)), FinitePoset::chain(numbered("b", b)));
    // Rename to plain labels so generated files stay readable.
    return FinitePoset::from_matrix(numbered("s", prod.size()), prod.matrix());
  }
  if (kind == 2 && max_elements >= 3) {
    const std::size_t k = rng.between(1, max_elements - 2);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i <= k; ++i) {
      pairs.emplace_back(0, i);
      pairs.emplace_back(i, k + 1);
    }
    return FinitePoset::from_indices(numbered("s", k + 2), pairs);
  }
  if (kind == 3 && max_elements >= 5) {
    // N5: 0 < a < b < 1, 0 < c < 1
    return FinitePoset::from_indices(numbered("s", 5), {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  }
  if (kind == 4 && max_elements >= 5) {
    return FinitePoset::from_indices(numbered("s", 5), {{0, 2}, {2, 3}, {3, 4}, {0, 1}, {1, 3}});
  }
  return FinitePoset::chain(numbered("s", n));
}

/// Chains, antichains, random DAGs and small lattices, roughly a quarter each.
inline FinitePoset random_poset(Rng& rng, std::size_t max_elements) {
  const std::size_t n = rng.between(1, std::max<std::size_t>(1, max_elements));
  switch (rng.below(4)) {
  case 0: {
    auto names = numbered("s", n);
    rng.shuffle(names);
    return FinitePoset::chain(std::move(names));
  }
  case 1:
    return random_lattice(rng, max_elements);
  default:
    break;
  }
  // Random DAG over a hidden topological order; edge density varies.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i;
  }
  rng.shuffle(perm);
  const std::size_t density = rng.between(0, 4);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(density, 5)) {
        pairs.emplace_back(perm[i], perm[j]);
      }
    }
  }
  return FinitePoset::from_indices(numbered("s", n), pairs);
}

namespace detail {

/// Up-closure of `seed` as a membership vector.
inline std::vector<std::uint8_t> up_closure(const FinitePoset& P, const IndexSet& seed) {
  std::vector<std::uint8_t> in(P.size(), 0);
  for (std::size_t s : seed) {
    for (std::size_t t = 0; t < P.size(); ++t) {
      if (P.leq(s, t)) {
        in[t] = 1;
      }
    }
  }
  return in;
}

inline IndexSet members(const std::vector<std::uint8_t>& in) {
  IndexSet out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) {
      out.push_back(i);
    }
  }
  return out;
}

inline IndexSet random_subset(Rng& rng, std::size_t n, std::size_t num, std::size_t den) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(num, den)) {
      out.push_back(i);
    }
  }
  return out;
}

/// Writes a row that is zero on the up-set `up`, +inf elsewhere, optionally
/// with a finite positive value at the minimum of `up`.
inline void write_row(Table& t, std::size_t x, const std::vector<std::uint8_t>& up,
                      std::optional<std::size_t> s_point, Rng& rng) {
  for (std::size_t s = 0; s < t.num_elements(); ++s) {
    t.at(x, s) = up[s] ? ExtVal::zero() : ExtVal::infinity();
  }
  if (s_point) {
    t.at(x, *s_point) = random_positive(rng);
  }
}

inline bool row_ok(const Table& t, std::size_t x) {
  ValidationReport r;
  check_ax12(t, x, r);
  IndexSet zeros;
  return r.ok() && ax3_holds(t, x, zeros);
}

/// Principal row: S_x is the up-set of a target d (or empty / everything).
inline void principal_row(Table& t, std::size_t x, Rng& rng) {
  const FinitePoset& P = t.poset();
  const std::size_t n = P.size();
  const std::size_t pick = rng.below(n + 2);
  if (pick == n) { // dim = +inf: all infinite
    write_row(t, x, std::vector<std::uint8_t>(n, 0), std::nullopt, rng);
    return;
  }
  if (pick == n + 1) { // all zero
    write_row(t, x, std::vector<std::uint8_t>(n, 1), std::nullopt, rng);
    return;
  }
  const std::size_t d = pick;
  auto up = up_closure(P, {d});
  write_row(t, x, up, rng.chance(1, 2) ? std::optional<std::size_t>(d) : std::nullopt, rng);
  if (!row_ok(t, x)) {
    t.at(x, d) = ExtVal::zero(); // repair: inf of the strict up-set was missing
  }
}

/// Up-closed S_x from a random seed set; may be non-principal.
inline void general_row(Table& t, std::size_t x, Rng& rng) {
  const FinitePoset& P = t.poset();
  auto up = up_closure(P, random_subset(rng, P.size(), 1, 3));
  auto lo = infimum(P, members(up));
  std::optional<std::size_t> q;
  if (lo && lo->is_element() && up[lo->index()] && rng.chance(1, 2)) {
    q = lo->index();
  }
  write_row(t, x, up, q, rng);
  if (!row_ok(t, x)) {
    principal_row(t, x, rng);
  }
}

inline void raw_row(Table& t, std::size_t x, Rng& rng) {
  for (std::size_t s = 0; s < t.num_elements(); ++s) {
    switch (rng.below(3)) {
    case 0:
      t.at(x, s) = ExtVal::zero();
      break;
    case 1:
      t.at(x, s) = random_positive(rng);
      break;
    default:
      t.at(x, s) = ExtVal::infinity();
    }
  }
}

} // namespace detail

/// Deterministic in (seed, limits, mode).
inline Table generate_random(std::uint64_t seed, Limits limits, GenMode mode) {
  Rng rng(seed);
  FinitePoset P = random_poset(rng, limits.max_elements);
  const std::size_t m = rng.between(1, std::max<std::size_t>(1, limits.max_points));
  Table t(std::move(P), numbered("x", m));
  for (std::size_t x = 0; x < m; ++x) {
    switch (mode) {
    case GenMode::valid_principal:
      detail::principal_row(t, x, rng);
      break;
    case GenMode::valid_general:
      if (rng.chance(1, 2)) {
        detail::general_row(t, x, rng);
      } else {
        detail::principal_row(t, x, rng);
      }
      break;
    case GenMode::raw:
      detail::raw_row(t, x, rng);
      break;
    }
  }
  return t;
}

/// A table satisfying (ax1) and (ax2) whose rows are up-sets; (ax3) often
/// fails on non-lattice posets. Principal in the pre-structure sense:
/// wherever inf S_x exists, S_x is the filter it generates. An s-point is
/// only placed where the zero set keeps an infimum, since otherwise adjoining
/// inf S_x cannot repair (ax3).
/// Q glued to a bowtie l0, l1 < t0, t1: the l's sit below a random part of
/// Q and the t's above another, so {t0, t1} usually has no meet.
inline FinitePoset with_bowtie(Rng& rng, const FinitePoset& Q) {
  const std::size_t n = Q.size();
  std::vector<std::string> names = Q.names();
  for (const char* e : {"l0", "l1", "t0", "t1"}) {
    names.push_back(e);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{n, n + 2}, {n, n + 3}, {n + 1, n + 2}, {n + 1, n + 3}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (Q.less(a, b)) {
        pairs.emplace_back(a, b);
      }
    }
    if (rng.chance(1, 3)) {
      pairs.emplace_back(n + rng.below(2), a);
    }
    if (rng.chance(1, 3)) {
      pairs.emplace_back(a, n + 2 + rng.below(2));
    }
  }
  return FinitePoset::from_indices(std::move(names), pairs);
}

inline Table generate_pre(std::uint64_t seed, Limits limits) {
  Rng rng(seed);
  FinitePoset P = random_poset(rng, limits.max_elements);
  if (limits.max_elements >= 5 && rng.chance(1, 2)) {
    P = with_bowtie(rng, random_poset(rng, limits.max_elements - 4));
  }
  const std::size_t m = rng.between(1, std::max<std::size_t>(1, limits.max_points));
  Table t(P, numbered("x", m));
  // Pairs without a meet; rows built on them exercise the extension.
  std::vector<IndexSet> meetless;
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = a + 1; b < P.size(); ++b) {
      if (!infimum(P, IndexSet{a, b})) {
        meetless.push_back({a, b});
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    auto seeds = !meetless.empty() && rng.chance(1, 2) ? meetless[rng.below(meetless.size())]
                                                        : detail::random_subset(rng, P.size(), 1, 3);
    auto up = detail::up_closure(P, seeds);
    IndexSet members = detail::members(up);
    auto lo = infimum(P, members);
    if (lo && lo->is_element()) {
      // Principal needs S_x to be the up-set of its infimum.
      up = detail::up_closure(P, {lo->index()});
    } else if (lo && lo->is_bottom() && !members.empty()) {
      up.assign(P.size(), 1);
    }
    std::optional<std::size_t> q;
    if (lo && lo->is_element() && rng.chance(1, 2)) {
      IndexSet rest;
      for (std::size_t s : detail::members(up)) {
        if (s != lo->index()) {
          rest.push_back(s);
        }
      }
      if (infimum(P, rest)) {
        q = lo->index();
      }
    }
    detail::write_row(t, x, up, q, rng);
  }
  return t;
}

/// A random partial order on the points. Half the time it is a sub-order of
/// <=_D (so condition 1 holds), otherwise an arbitrary random DAG; sometimes
/// a chain.
inline FinitePoset random_point_order(Rng& rng, const DimensionStructure& D) {
  const std::size_t n = D.num_points();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t style = rng.below(3);
  if (style == 0) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && leq_D(D, x, y) == DOrder::less_or_equal && rng.chance(3, 4)) {
          pairs.emplace_back(x, y);
        }
      }
    }
  } else {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    rng.shuffle(perm);
    const bool chain = style == 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (chain ? j == i + 1 : rng.chance(1, 3)) {
          pairs.emplace_back(perm[i], perm[j]);
        }
      }
    }
  }
  return FinitePoset::from_indices(D.table().points(), pairs);
}

} // namespace dimstruct
