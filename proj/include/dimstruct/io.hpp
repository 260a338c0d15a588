#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dimstruct/error.hpp"
#include "dimstruct/extval.hpp"
#include "dimstruct/poset.hpp"
#include "dimstruct/properties.hpp"
#include "dimstruct/structure.hpp"

namespace dimstruct::io {

using Json = nlohmann::json;

/// Parsed contents of a structure file. Nothing is validated beyond shape
/// and totality; check_axioms decides the rest.
struct StructureFile {
  Table table;
  std::optional<FinitePoset> point_order;
  std::string kind = "structure";
};

using NamePairs = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline Json member(const Json& obj, const char* key, const char* where) {
  if (!obj.is_object()) {
    throw ParseError(std::string(where) + " must be an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string(where) + " has no \"" + key + "\" member");
  }
  return *it;
}

inline void only_members(const Json& obj, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) {
      known = known || it.key() == a;
    }
    if (!known) {
      throw ParseError(std::string(where) + " has unexpected member \"" + it.key() + "\"");
    }
  }
}

inline std::vector<std::string> strings(const Json& j, const char* where) {
  if (!j.is_array()) {
    throw ParseError(std::string(where) + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw ParseError(std::string(where) + " must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline NamePairs pairs(const Json& j, const char* where) {
  if (!j.is_array()) {
    throw ParseError(std::string(where) + " must be an array of [a, b] pairs");
  }
  NamePairs out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw ParseError(std::string(where) + " must be an array of [a, b] pairs");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

inline void require_known(const std::set<std::string>& names, const NamePairs& ps, const char* what) {
  for (const auto& [a, b] : ps) {
    for (const auto* n : {&a, &b}) {
      if (!names.count(*n)) {
        throw UnknownName(std::string(what) + " mentions unknown name \"" + *n + "\"");
      }
    }
  }
}

inline FinitePoset order_from(const std::vector<std::string>& names, const NamePairs& ps, const char* what) {
  require_known({names.begin(), names.end()}, ps, what);
  return FinitePoset::build(names, ps);
}

} // namespace detail

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// Exact parse. Missing rows or entries raise TotalityError, names that are
/// not declared raise UnknownName.
inline StructureFile parse_structure_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ParseError("structure file must be a JSON object");
  }
  detail::only_members(doc, {"poset", "points", "mu", "point_order", "kind"}, "structure file");
  const Json pj = detail::member(doc, "poset", "structure file");
  detail::only_members(pj, {"elements", "le"}, "poset");
  const auto elements = detail::strings(detail::member(pj, "elements", "poset"), "poset.elements");
  const auto le = detail::pairs(detail::member(pj, "le", "poset"), "poset.le");
  FinitePoset P = detail::order_from(elements, le, "poset.le");
  const auto points = detail::strings(detail::member(doc, "points", "structure file"), "points");

  Table t(P, points);
  const Json mj = detail::member(doc, "mu", "structure file");
  if (!mj.is_object()) {
    throw ParseError("mu must be an object keyed by point");
  }
  for (auto it = mj.begin(); it != mj.end(); ++it) {
    if (!t.find_point(it.key())) {
      throw UnknownName("mu has a row for unknown point \"" + it.key() + "\"");
    }
    if (!it->is_object()) {
      throw ParseError("mu row of " + it.key() + " must be an object keyed by element");
    }
    for (auto e = it->begin(); e != it->end(); ++e) {
      if (!P.find(e.key())) {
        throw UnknownName("mu row of " + it.key() + " names unknown element \"" + e.key() + "\"");
      }
      if (!e->is_string()) {
        throw ParseError("mu value at (" + it.key() + ", " + e.key() + ") must be a string");
      }
    }
  }
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    const std::string& xn = t.point_name(x);
    auto row = mj.find(xn);
    if (row == mj.end()) {
      throw TotalityError("mu has no row for point " + xn);
    }
    for (std::size_t s = 0; s < P.size(); ++s) {
      auto v = row->find(P.name(s));
      if (v == row->end()) {
        throw TotalityError("mu row of " + xn + " has no entry for element " + P.name(s));
      }
      t.at(x, s) = ExtVal::parse(v->get<std::string>());
    }
  }

  StructureFile out{std::move(t), std::nullopt, "structure"};
  if (auto it = doc.find("point_order"); it != doc.end()) {
    out.point_order = detail::order_from(points, detail::pairs(*it, "point_order"), "point_order");
  }
  if (auto it = doc.find("kind"); it != doc.end()) {
    if (!it->is_string() || (*it != "structure" && *it != "pre")) {
      throw ParseError("kind must be \"structure\" or \"pre\"");
    }
    out.kind = it->get<std::string>();
  }
  return out;
}

/// The covering pairs of an order, in index order. Together with the element
/// list this determines the poset, so it is the canonical "le".
inline Json cover_pairs(const FinitePoset& P) {
  Json out = Json::array();
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (!P.less(a, b)) {
        continue;
      }
      bool cover = true;
      for (std::size_t c = 0; c < P.size() && cover; ++c) {
        cover = !(P.less(a, c) && P.less(c, b));
      }
      if (cover) {
        out.push_back({P.name(a), P.name(b)});
      }
    }
  }
  return out;
}

inline Json structure_json(const StructureFile& f) {
  const Table& t = f.table;
  const FinitePoset& P = t.poset();
  Json mu = Json::object();
  for (std::size_t x = 0; x < t.num_points(); ++x) {
    Json row = Json::object();
    for (std::size_t s = 0; s < P.size(); ++s) {
      row[P.name(s)] = t.at(x, s).str();
    }
    mu[t.point_name(x)] = std::move(row);
  }
  Json doc = {{"poset", {{"elements", P.names()}, {"le", cover_pairs(P)}}},
              {"points", t.points()},
              {"mu", std::move(mu)},
              {"kind", f.kind}};
  if (f.point_order) {
    doc["point_order"] = cover_pairs(*f.point_order);
  }
  return doc;
}

/// Canonical text: sorted keys, two-space indent, reduced fractions, covering
/// pairs only, trailing newline.
inline std::string emit_structure_file(const StructureFile& f) { return structure_json(f).dump(2) + "\n"; }

inline std::string emit_structure(const DimensionStructure& D) {
  return emit_structure_file({D.table(), std::nullopt, "structure"});
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw InputError("cannot write " + path);
  }
}

inline StructureFile read_structure_file(const std::string& path) { return parse_structure_file(read_text(path)); }

/// {"f": [[x, y], ...], "g": [[s, t], ...]}
struct MapFile {
  NamePairs f;
  NamePairs g;
};

inline MapFile parse_map_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) {
    throw ParseError("map file must be a JSON object");
  }
  detail::only_members(doc, {"f", "g"}, "map file");
  return {detail::pairs(detail::member(doc, "f", "map file"), "f"),
          detail::pairs(detail::member(doc, "g", "map file"), "g")};
}

// Reports. Field names are stable; witnesses name points and elements.

inline Json violation_json(const Table& t, const AxiomViolation& v) {
  const auto& P = t.poset();
  Json j = {{"axiom", axiom_name(v.axiom)}, {"point", t.point_name(v.point)}};
  if (v.axiom == Axiom::ax3) {
    Json zs = Json::array();
    for (std::size_t s : v.zero_set) {
      zs.push_back(P.name(s));
    }
    j["zero_set"] = std::move(zs);
  } else {
    j["s"] = P.name(v.s);
    j["p"] = P.name(v.p);
    j["mu_s"] = t.at(v.point, v.s).str();
    j["mu_p"] = t.at(v.point, v.p).str();
  }
  return j;
}

inline Json validation_json(const Table& t, const ValidationReport& r, bool quiet) {
  Json j = {{"ok", r.ok()}};
  if (!quiet) {
    Json vs = Json::array();
    for (const auto& v : r.violations) {
      vs.push_back(violation_json(t, v));
    }
    j["violations"] = std::move(vs);
  }
  return j;
}

inline Json witness_json(const DimensionStructure& D, const Witness& w) {
  Json j = Json::object();
  if (w.point) {
    j["point"] = D.point_name(*w.point);
  }
  if (w.element) {
    j["element"] = D.element_name(*w.element);
  }
  return j;
}

inline Json classification_json(const DimensionStructure& D, const PropertyReport& r, bool quiet) {
  Json j = Json::object();
  for (const auto& [name, flag] : flags(r)) {
    Json f = {{"holds", flag->value}};
    if (!quiet && flag->witness) {
      f["witness"] = witness_json(D, *flag->witness);
    }
    j[name] = std::move(f);
  }
  return j;
}

inline Json point_list(const DimensionStructure& D, const IndexSet& xs) {
  Json j = Json::array();
  for (std::size_t x : xs) {
    j.push_back(D.point_name(x));
  }
  return j;
}

inline Json sync_json(const DimensionStructure& D, const SyncReport& r, bool quiet) {
  const auto& P = D.poset();
  auto pair = [&](const std::optional<std::pair<std::size_t, std::size_t>>& w) {
    return Json::array({D.point_name(w->first), D.point_name(w->second)});
  };
  Json j = {{"synchronized", r.synchronized()},
            {"condition1", r.condition1},
            {"condition1_prime", r.condition1_prime},
            {"condition2", r.condition2}};
  if (quiet) {
    return j;
  }
  if (r.condition1_witness) {
    j["condition1_witness"] = pair(r.condition1_witness);
  }
  if (r.condition1_prime_witness) {
    j["condition1_prime_witness"] = pair(r.condition1_prime_witness);
  }
  if (!r.condition2) {
    j["condition2_witness"] = {
        {"set", point_list(D, r.condition2_witness)},
        {"sup", D.point_name(*r.witness_sup)},
        {"dim_of_sup", to_string(P, *r.witness_dim_sup)},
        {"sup_of_dims", r.witness_sup_dims ? Json(to_string(P, *r.witness_sup_dims)) : Json(nullptr)}};
  }
  return j;
}

} // namespace dimstruct::io
