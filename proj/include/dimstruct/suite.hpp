#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimstruct/properties.hpp"
#include "dimstruct/propositions.hpp"
#include "dimstruct/random.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct {

struct SuiteFailure {
  std::uint64_t seed = 0;
  std::string check; // "axioms" or a proposition id
  std::string witness;
  std::optional<Table> shrunk;
};

struct SuiteTally {
  std::size_t applicable = 0;
  std::size_t failed = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t chains = 0; // instances whose S is totally ordered
  std::map<std::string, SuiteTally> tallies;
  std::vector<SuiteFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

/// The point order restricted to the points still present in `t`.
inline FinitePoset restrict_order(const FinitePoset& order, const Table& t) {
  IndexSet keep;
  for (const auto& name : t.points()) {
    keep.push_back(order.index(name));
  }
  return order.induced(keep);
}

inline std::optional<PropositionResult> failing(const DimensionStructure& D, const FinitePoset& order,
                                                const std::string& id) {
  for (auto& r : proposition_suite(D, &order)) {
    if (!r.passed && (id.empty() || r.id == id)) {
      return r;
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Instance i uses the i-th draw of a generator seeded with `seed`, alternates
/// principal and general rows, and is checked against the axioms and the
/// proposition suite under a random point order. With `shrink`, failing
/// tables are reduced by greedy deletion.
inline SuiteReport run_suite(std::uint64_t seed, std::size_t count, bool shrink_failures = false,
                             Limits limits = {}) {
  SuiteReport rep;
  rep.seed = seed;
  Rng master(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = master.next();
    const GenMode mode = i % 2 ? GenMode::valid_general : GenMode::valid_principal;
    Table t = generate_random(s, limits, mode);
    ++rep.instances;
    rep.chains += t.poset().is_chain();
    const ValidationReport vr = check_axioms(t);
    if (!vr.ok()) {
      SuiteFailure f{s, "axioms", describe(t, vr.violations.front()), std::nullopt};
      if (shrink_failures) {
        f.shrunk = shrink(t, [](const Table& c) { return !check_axioms(c).ok(); });
      }
      rep.failures.push_back(std::move(f));
      continue;
    }
    const DimensionStructure D = DimensionStructure::validate(t);
    Rng rng(s ^ 0x9e3779b97f4a7c15ULL);
    const FinitePoset order = random_point_order(rng, D);
    for (const auto& r : proposition_suite(D, &order)) {
      auto& tally = rep.tallies[r.id];
      ++tally.applicable;
      if (r.passed) {
        continue;
      }
      ++tally.failed;
      SuiteFailure f{s, r.id, r.witness, std::nullopt};
      if (shrink_failures) {
        f.shrunk = shrink(t, [&](const Table& c) {
          if (!check_axioms(c).ok()) {
            return false;
          }
          return detail::failing(DimensionStructure::validate(c), detail::restrict_order(order, c), r.id)
              .has_value();
        });
      }
      rep.failures.push_back(std::move(f));
    }
  }
  return rep;
}

} // namespace dimstruct
