#pragma once

// Randomized law checks shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dimstruct/constructions.hpp"
#include "dimstruct/extension.hpp"
#include "dimstruct/morphisms.hpp"
#include "dimstruct/random.hpp"

namespace campaigns {

using namespace dimstruct;

struct Result {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  // Instances that hit a documented gap in the theory rather than a law violation.
  std::size_t documented = 0;
  // Instances where the construction had real work to do.
  std::size_t exercised = 0;

  bool ok() const { return failures == 0; }
};

using Check = std::function<std::optional<std::string>(std::uint64_t seed, Result& r)>;

inline Result run(const std::string& name, std::uint64_t base, std::size_t count, const Check& check) {
  Result r;
  r.name = name;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = base + i;
    std::optional<std::string> bad;
    try {
      bad = check(seed, r);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    ++r.instances;
    if (bad) {
      if (r.failures == 0) {
        r.first_failure = "seed " + std::to_string(seed) + ": " + *bad;
      }
      ++r.failures;
    }
  }
  return r;
}

/// Rows over a given poset: principal or up-closed general rows.
inline Table rows_over(Rng& rng, FinitePoset P, std::vector<std::string> points, bool general) {
  Table t(std::move(P), std::move(points));
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    if (general && rng.chance(1, 2)) {
      detail::general_row(t, x, rng);
    } else {
      detail::principal_row(t, x, rng);
    }
  }
  return t;
}

inline FinitePoset prefixed(const FinitePoset& P, const std::string& prefix) {
  std::vector<std::string> names;
  for (const auto& n : P.names()) {
    names.push_back(prefix + n);
  }
  return FinitePoset::from_matrix(std::move(names), P.matrix());
}

/// P with a new least element "lo" and greatest element "hi".
inline FinitePoset bounded(const FinitePoset& P) {
  std::vector<std::string> names{"lo"};
  for (const auto& n : P.names()) {
    names.push_back(n);
  }
  names.push_back("hi");
  const std::size_t n = names.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == 0 || b == n - 1 || a == b) {
        m[a * n + b] = 1;
      } else if (b != 0 && a != n - 1) {
        m[a * n + b] = P.leq(a - 1, b - 1);
      }
    }
  }
  return FinitePoset::from_matrix(std::move(names), std::move(m));
}

/// Every point an s-point at its dim; retries elements until the row validates.
inline Table small_table(Rng& rng, const FinitePoset& P, std::size_t m) {
  Table t(P, numbered("x", m));
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<std::size_t> order(P.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    rng.shuffle(order);
    for (std::size_t d : order) {
      detail::write_row(t, x, detail::up_closure(P, {d}), d, rng);
      if (detail::row_ok(t, x)) {
        break;
      }
    }
  }
  return t;
}

/// Either a valid structure or a ValidationError listing only (ax3) failures.
inline std::optional<std::string> only_ax3(const std::function<void()>& f, Result& r) {
  try {
    f();
  } catch (const ValidationError& e) {
    for (const auto& v : e.report().violations) {
      if (v.axiom != Axiom::ax3) {
        return std::string("non-ax3 violation: ") + e.what();
      }
    }
    ++r.documented;
  }
  return std::nullopt;
}

inline Result substructure_laws(std::uint64_t base, std::size_t count) {
  return run("substructure", base, count, [](std::uint64_t seed, Result& r) -> std::optional<std::string> {
    auto D = DimensionStructure::validate(generate_random(seed, {5, 5}, GenMode::valid_general));
    Rng rng(seed ^ 0x5bu);
    IndexSet all_x, all_s;
    for (std::size_t x = 0; x < D.num_points(); ++x) {
      all_x.push_back(x);
    }
    for (std::size_t s = 0; s < D.num_elements(); ++s) {
      all_s.push_back(s);
    }
    if (!(substructure(D, all_x, all_s) == D)) {
      return "identity restriction changed the structure";
    }
    IndexSet Y = detail::random_subset(rng, D.num_points(), 2, 3);
    IndexSet P = detail::random_subset(rng, D.num_elements(), 2, 3);
    if (P.empty()) {
      P.push_back(rng.below(D.num_elements()));
    }
    const bool complete = poset_properties(D.poset().induced(P)).complete;
    std::optional<std::string> bad;
    auto ax3 = only_ax3(
        [&] {
          auto sub = substructure(D, Y, P);
          for (std::size_t i = 0; i < Y.size() && !bad; ++i) {
            auto s = s_point_position(D, Y[i]);
            if (!s) {
              continue;
            }
            auto at = std::find(P.begin(), P.end(), *s);
            if (at != P.end() && !sbar_equal(sub.poset(), sub.dim(i),
                                             DimValue::element(static_cast<std::size_t>(at - P.begin())))) {
              bad = "s-point lost its dim in the substructure";
            }
          }
        },
        r);
    if (ax3 && complete) {
      return "complete restriction failed: " + *ax3;
    }
    return bad ? bad : ax3;
  });
}

inline Result normalization_laws(std::uint64_t base, std::size_t count) {
  return run("normalization", base, count, [](std::uint64_t seed, Result& r) -> std::optional<std::string> {
    auto D = DimensionStructure::validate(generate_random(seed, {5, 5}, GenMode::valid_general));
    std::optional<std::string> bad;
    auto ax3 = only_ax3(
        [&] {
          auto N = normalization(D);
          if (!(normalization(N) == N)) {
            bad = "normalization is not idempotent";
          }
        },
        r);
    return bad ? bad : ax3;
  });
}

inline Result quotient_laws(std::uint64_t base, std::size_t count) {
  return run("quotient", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    const std::size_t m = rng.between(1, 5);
    auto D = DimensionStructure::validate(rows_over(rng, random_lattice(rng, 6), numbered("x", m), true));
    const std::size_t k = rng.between(1, m);
    Partition p;
    std::vector<IndexSet> blocks(k);
    for (std::size_t x = 0; x < m; ++x) {
      blocks[x < k ? x : rng.below(k)].push_back(x);
    }
    for (std::size_t b = 0; b < k; ++b) {
      std::sort(blocks[b].begin(), blocks[b].end());
      p.ids.push_back("B" + std::to_string(b));
      p.blocks.push_back(blocks[b]);
    }
    quotient(D, p);
    auto C = quotient(D, class_partition(D));
    for (std::size_t b = 0; b < C.num_points(); ++b) {
      const DimValue d = D.dim(class_partition(D).blocks[b].front());
      if (!(mu_extended(C, b, d) == mu_extended(D, class_partition(D).blocks[b].front(), d))) {
        return "C_{d,m} quotient does not keep the class value at d";
      }
    }
    return std::nullopt;
  });
}

inline Result sum_laws(std::uint64_t base, std::size_t count) {
  return run("sum", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    FinitePoset index = random_lattice(rng, 4);
    std::vector<DimensionStructure> family;
    for (std::size_t p = 0; p < index.size(); ++p) {
      const std::string pre = "b" + std::to_string(p) + "_";
      FinitePoset S = prefixed(random_lattice(rng, 4), pre);
      std::vector<std::string> pts;
      for (std::size_t x = 0, m = rng.between(1, 3); x < m; ++x) {
        pts.push_back(pre + "x" + std::to_string(x));
      }
      family.push_back(DimensionStructure::validate(rows_over(rng, S, pts, true)));
    }
    sum(index, family);
    return std::nullopt;
  });
}

inline std::vector<DimensionStructure> shared_family(Rng& rng, bool general) {
  FinitePoset P = random_lattice(rng, 6);
  const std::size_t m = rng.between(1, 5);
  std::vector<DimensionStructure> list;
  for (std::size_t i = 0, k = rng.between(1, 3); i < k; ++i) {
    list.push_back(DimensionStructure::validate(rows_over(rng, P, numbered("x", m), general)));
  }
  return list;
}

inline Result measure_sum_laws(std::uint64_t base, std::size_t count) {
  return run("measure_sum", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    auto list = shared_family(rng, rng.chance(1, 2));
    auto D = measure_sum(list);
    std::vector<DimensionStructure> doubled{list[0], list[0]};
    auto E = measure_sum(doubled);
    for (std::size_t x = 0; x < E.num_points(); ++x) {
      if (is_dim_point(list[0], x) && !is_dim_point(E, x)) {
        return "doubling lost an s-point";
      }
    }
    (void)D;
    return std::nullopt;
  });
}

inline Result sup_combine_laws(std::uint64_t base, std::size_t count) {
  return run("sup_combine", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    auto list = shared_family(rng, true);
    sup_combine(list);
    std::vector<DimensionStructure> twice{list[0], list[0]};
    if (!(sup_combine(twice) == list[0])) {
      return "sup-combination is not idempotent";
    }
    return std::nullopt;
  });
}

inline Result direct_product_laws(std::uint64_t base, std::size_t count) {
  return run("direct_product", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    auto D1 = DimensionStructure::validate(generate_random(seed, {4, 3}, GenMode::valid_general));
    auto D2 = DimensionStructure::validate(generate_random(seed + 7777777, {4, 3}, GenMode::valid_general));
    direct_product(D1, D2);
    direct_product(D1, D2, ext_min);
    return std::nullopt;
  });
}

inline Result i_direct_product_laws(std::uint64_t base, std::size_t count) {
  return run("i_direct_product", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    std::vector<DimensionStructure> family;
    for (std::size_t i = 0, k = rng.between(1, 3); i < k; ++i) {
      family.push_back(DimensionStructure::validate(generate_random(rng.next(), {3, 2}, GenMode::valid_general)));
    }
    i_direct_product(family);
    return std::nullopt;
  });
}

inline Result l_direct_product_laws(std::uint64_t base, std::size_t count) {
  return run("l_direct_product", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    auto D1 = DimensionStructure::validate(small_table(rng, random_poset(rng, 4), rng.between(1, 3)));
    if (!classify(D1).small.value) {
      return "generator produced a non-small first factor";
    }
    // Second factor over a poset with a minimum and a maximum.
    auto D2 = DimensionStructure::validate(
        rows_over(rng, bounded(random_poset(rng, 3)), numbered("y", rng.between(1, 3)), rng.chance(1, 2)));
    auto L = l_direct_product(D1, D2);
    if (classify(D1).principal.value && classify(D2).principal.value && !classify(L).principal.value) {
      return "principality not preserved";
    }
    return std::nullopt;
  });
}

inline std::vector<Result> construction_laws(std::uint64_t base, std::size_t count) {
  return {substructure_laws(base, count),     normalization_laws(base, count), quotient_laws(base, count),
          sum_laws(base, count),              measure_sum_laws(base, count),   sup_combine_laws(base, count),
          direct_product_laws(base, count),   i_direct_product_laws(base, count),
          l_direct_product_laws(base, count)};
}

inline Result sign_collapse_laws(std::uint64_t base, std::size_t count) {
  return run("sign_collapse", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    auto D = DimensionStructure::validate(generate_random(seed, {6, 6}, GenMode::valid_general));
    auto C = sign_collapse(D);
    const auto id = identity_map(D);
    if (!dim_transport_check(D, C, id, MapKind::semi_isomorphism).holds) {
      return "dims moved under sign collapse";
    }
    if (!(sign_collapse(C) == C)) {
      return "sign collapse is not idempotent";
    }
    return std::nullopt;
  });
}

/// Random relabelling of points and elements: an isomorphism by construction.
inline Result relabel_laws(std::uint64_t base, std::size_t count) {
  return run("isomorphism", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    auto D = DimensionStructure::validate(generate_random(seed, {6, 6}, GenMode::valid_general));
    Rng rng(seed);
    std::vector<std::size_t> pf(D.num_points()), pg(D.num_elements());
    for (std::size_t i = 0; i < pf.size(); ++i) {
      pf[i] = i;
    }
    for (std::size_t i = 0; i < pg.size(); ++i) {
      pg[i] = i;
    }
    rng.shuffle(pf);
    rng.shuffle(pg);
    std::vector<std::string> en(pg.size()), pn(pf.size());
    std::vector<std::pair<std::size_t, std::size_t>> le;
    for (std::size_t s = 0; s < pg.size(); ++s) {
      en[pg[s]] = "e" + D.element_name(s);
      for (std::size_t p = 0; p < pg.size(); ++p) {
        if (D.poset().leq(s, p)) {
          le.emplace_back(pg[s], pg[p]);
        }
      }
    }
    for (std::size_t x = 0; x < pf.size(); ++x) {
      pn[pf[x]] = "p" + D.point_name(x);
    }
    Table t(FinitePoset::from_indices(en, le), pn);
    for (std::size_t x = 0; x < pf.size(); ++x) {
      for (std::size_t s = 0; s < pg.size(); ++s) {
        t.at(pf[x], pg[s]) = D.mu(x, s);
      }
    }
    auto D2 = DimensionStructure::validate(std::move(t));
    const StructureMap m{pf, pg};
    if (!verify_map(D, D2, m, MapKind::isomorphism).holds || !verify_map(D, D2, m, MapKind::semi_isomorphism).holds) {
      return "relabelling is not an isomorphism";
    }
    if (!dim_transport_check(D, D2, m, MapKind::isomorphism).holds) {
      return "isomorphism does not transport dims";
    }
    return std::nullopt;
  });
}

/// Morphisms into a principal target: the source keeps the target's zero /
/// +inf pattern along a random f and shrinks finite values.
inline Result morphism_laws(std::uint64_t base, std::size_t count) {
  return run("morphism", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    auto D2 = DimensionStructure::validate(generate_random(seed, {6, 6}, GenMode::valid_principal));
    Rng rng(seed);
    const std::size_t m = rng.between(1, 6);
    std::vector<std::size_t> f(m);
    Table t(D2.poset(), numbered("z", m));
    for (std::size_t x = 0; x < m; ++x) {
      f[x] = rng.below(D2.num_points());
      for (std::size_t s = 0; s < D2.num_elements(); ++s) {
        const ExtVal& v = D2.mu(f[x], s);
        t.at(x, s) = v.is_fin() ? ExtVal::of(v.rational() / 2) : v;
      }
    }
    auto D1 = DimensionStructure::validate(std::move(t));
    StructureMap map{f, identity_map(D2).g};
    if (!verify_map(D1, D2, map, MapKind::morphism).holds) {
      return "constructed morphism rejected";
    }
    if (!dim_transport_check(D1, D2, map, MapKind::morphism).holds) {
      return "morphism lemma fails on a principal target";
    }
    return std::nullopt;
  });
}

/// Collapse pairs of points of a chain structure; the fiber-sup candidate
/// passes both conditions and validates.
inline Result pushforward_laws(std::uint64_t base, std::size_t count) {
  return run("pushforward", base, count, [](std::uint64_t seed, Result&) -> std::optional<std::string> {
    Rng rng(seed);
    const std::size_t m = rng.between(1, 6);
    auto D = DimensionStructure::validate(
        rows_over(rng, FinitePoset::chain(numbered("s", rng.between(1, 6))), numbered("x", m), true));
    const std::size_t k = (m + 1) / 2;
    std::vector<std::size_t> f(m);
    for (std::size_t x = 0; x < m; ++x) {
      f[x] = x < k ? x : rng.below(k);
    }
    Table mu2 = fiber_sup(D, numbered("y", k), f);
    if (!pushforward_check(D, f, mu2).holds) {
      return "fiber sup rejected";
    }
    return std::nullopt;
  });
}

/// Principal pre-structures: the extension validates, keeps S and mu on S,
/// stays principal and embeds into itself by the identity.
inline Result extension_laws(std::uint64_t base, std::size_t count) {
  return run("extension_principality", base, count, [](std::uint64_t seed, Result& r) -> std::optional<std::string> {
    auto pre = PreDimensionStructure::validate(generate_pre(seed, Limits{}));
    if (!pre_principal(pre)) {
      return "generator produced a non-principal pre-structure";
    }
    auto res = extend(pre);
    r.exercised += !res.new_elements.empty();
    const Table& t = pre.table();
    const auto& E = res.extended.poset();
    for (std::size_t a = 0; a < t.num_elements(); ++a) {
      for (std::size_t b = 0; b < t.num_elements(); ++b) {
        if (t.poset().leq(a, b) != E.leq(res.embedding_of_S[a], res.embedding_of_S[b])) {
          return std::string("order on S changed");
        }
      }
      for (std::size_t x = 0; x < t.num_points(); ++x) {
        if (!(t.at(x, a) == res.extended.mu(x, res.embedding_of_S[a]))) {
          return std::string("mu on S changed");
        }
      }
    }
    if (poset_properties(t.poset()).lattice && !res.new_elements.empty()) {
      return std::string("lattice input gained elements");
    }
    if (!check_principality_preserved(pre, res)) {
      return std::string("extension is not principal");
    }
    auto emb = embed_into(pre, res, res.extended);
    for (std::size_t s = 0; s < emb.f.size(); ++s) {
      if (emb.f[s] != s) {
        return std::string("self-embedding is not the identity");
      }
    }
    return std::nullopt;
  });
}

inline std::vector<Result> morphism_campaigns(std::uint64_t base, std::size_t count) {
  return {sign_collapse_laws(base, count), relabel_laws(base, count), morphism_laws(base, count),
          pushforward_laws(base, count)};
}

} // namespace campaigns
