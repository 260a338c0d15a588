#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct::gallery {

enum class Agreement { agree, disagree, outside };

inline const char* to_string(Agreement a) {
  switch (a) {
  case Agreement::agree:
    return "agree";
  case Agreement::disagree:
    return "disagree";
  case Agreement::outside:
    break;
  }
  return "outside";
}

struct SampleRow {
  std::string analytic; // the model's dim, printed in model terms
  std::string core;     // the finite structure's dim
  Agreement status = Agreement::outside;
};

/// A finite window of a model as a core structure, with the model's dims
/// compared against the computed ones.
struct Sample {
  DimensionStructure structure;
  std::vector<SampleRow> rows;

  bool ok() const {
    for (const auto& r : rows) {
      if (r.status == Agreement::disagree) {
        return false;
      }
    }
    return true;
  }
  std::size_t count(Agreement a) const {
    std::size_t n = 0;
    for (const auto& r : rows) {
      n += r.status == a;
    }
    return n;
  }
};

/// Where the model's dim sits in the window. `index` is set only when the
/// comparison is meaningful: the dim is a window element and mu at it is
/// finite. Dims beyond the window or not attained are clipped to some other
/// element, and those rows are reported as outside.
struct AnalyticDim {
  std::string text;
  std::optional<std::size_t> index;
};

/// Fills a table over `window` from `mu(x, s)`, validates it and compares
/// dims point by point.
inline Sample make_sample(const FinitePoset& window, std::vector<std::string> points,
                          const std::function<ExtVal(std::size_t, std::size_t)>& mu,
                          const std::function<AnalyticDim(std::size_t)>& analytic) {
  if (window.size() == 0) {
    throw WindowTooSmall("sample window is empty");
  }
  Table t(window, std::move(points));
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    for (std::size_t s = 0; s < window.size(); ++s) {
      t.at(x, s) = mu(x, s);
    }
  }
  Sample out{DimensionStructure::validate(std::move(t)), {}};
  const DimensionStructure& D = out.structure;
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    AnalyticDim a = analytic(x);
    SampleRow row{a.text, to_string(window, D.dim(x)), Agreement::outside};
    if (a.index) {
      row.status = sbar_equal(window, D.dim(x), DimValue::element(*a.index)) ? Agreement::agree
                                                                              : Agreement::disagree;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// Throws WindowTooSmall when some point could not be compared.
inline void require_assessable(const Sample& s) {
  for (std::size_t x = 0; x < s.rows.size(); ++x) {
    if (s.rows[x].status == Agreement::outside) {
      throw WindowTooSmall("dim of " + s.structure.point_name(x) + " (" + s.rows[x].analytic +
                           ") is outside the window");
    }
  }
}

/// Integer labels lo..hi as a chain.
inline FinitePoset integer_window(long lo, long hi) {
  std::vector<std::string> names;
  for (long k = lo; k <= hi; ++k) {
    names.push_back(std::to_string(k));
  }
  return FinitePoset::chain(std::move(names));
}

} // namespace dimstruct::gallery
