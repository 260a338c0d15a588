#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dimstruct/constructions.hpp"
#include "dimstruct/extension.hpp"
#include "dimstruct/gallery.hpp"
#include "dimstruct/io.hpp"
#include "dimstruct/morphisms.hpp"
#include "dimstruct/properties.hpp"
#include "dimstruct/structure.hpp"
#include "dimstruct/suite.hpp"

namespace dimstruct::cli {

using io::Json;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// A failed validation of an input file, with the report already in JSON.
class FileViolation : public Violation {
public:
  FileViolation(std::string what, Json report) : Violation(std::move(what)), report_(std::move(report)) {}
  const Json& report() const noexcept { return report_; }

private:
  Json report_;
};

inline DimensionStructure validated(const std::string& path, Table t) {
  try {
    return DimensionStructure::validate(t);
  } catch (const ValidationError& e) {
    Json r = io::validation_json(t, e.report(), false);
    r["file"] = path;
    throw FileViolation(e.what(), std::move(r));
  }
}

inline DimensionStructure load_structure(const std::string& path) {
  return validated(path, io::read_structure_file(path).table);
}

/// Where a structure goes: a file when a path is given, standard output
/// otherwise.
inline void put(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Gallery parameter files.

inline Rational rational_of(const Json& j, const char* where) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (!j.is_string()) {
    throw ParseError(std::string(where) + " must be an integer or a \"p/q\" string");
  }
  std::string s = j.get<std::string>();
  const bool neg = !s.empty() && s[0] == '-';
  const ExtVal v = ExtVal::parse(neg ? s.substr(1) : s);
  if (v.is_inf()) {
    throw ParseError(std::string(where) + " must be finite");
  }
  return neg ? Rational(-v.rational()) : v.rational();
}

inline std::vector<Rational> rationals_of(const Json& j, const char* where) {
  if (!j.is_array()) {
    throw ParseError(std::string(where) + " must be an array");
  }
  std::vector<Rational> out;
  for (const auto& v : j) {
    out.push_back(rational_of(v, where));
  }
  return out;
}

inline long integer_of(const Json& j, const char* where) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(where) + " must be an integer");
  }
  return j.get<long>();
}

inline std::size_t count_of(const Json& j, const char* where) {
  const long v = integer_of(j, where);
  if (v < 0) {
    throw NegativeInput(std::string(where) + " must be nonnegative");
  }
  return static_cast<std::size_t>(v);
}

inline std::pair<long, long> window_of(const Json& p) {
  const Json w = io::detail::member(p, "window", "parameters");
  if (!w.is_array() || w.size() != 2) {
    throw ParseError("window must be [lo, hi]");
  }
  return {integer_of(w[0], "window"), integer_of(w[1], "window")};
}

inline gallery::GrowthSeq growth_of(const Json& j) {
  io::detail::only_members(j, {"tower", "pow", "log", "coeff"}, "sequence");
  auto get = [&](const char* k, Json dflt) { return j.contains(k) ? j.at(k) : dflt; };
  return gallery::GrowthSeq::make(static_cast<unsigned>(count_of(get("tower", 0), "tower")),
                                  rational_of(get("pow", 0), "pow"), integer_of(get("log", 0), "log"),
                                  rational_of(get("coeff", 1), "coeff"));
}

struct GalleryRun {
  gallery::Sample sample;
  Json extras = Json::object();
};

inline GalleryRun run_ranked(const Json& p) {
  io::detail::only_members(p, {"sets", "max_rank"}, "ranked parameters");
  std::vector<gallery::RankedSet> sets;
  for (const auto& s : io::detail::member(p, "sets", "ranked parameters")) {
    if (!s.is_object()) {
      throw ParseError("a ranked set is an object {rank: count}");
    }
    std::map<std::size_t, std::size_t> counts;
    for (auto it = s.begin(); it != s.end(); ++it) {
      std::size_t pos = 0;
      std::size_t r = 0;
      try {
        r = std::stoul(it.key(), &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != it.key().size()) {
        throw ParseError("rank \"" + it.key() + "\" is not a nonnegative integer");
      }
      counts[r] = count_of(*it, "count");
    }
    sets.push_back(gallery::RankedSet::of(std::move(counts)));
  }
  return {gallery::sample_ranked(sets, count_of(io::detail::member(p, "max_rank", "ranked parameters"), "max_rank")),
          Json::object()};
}

inline GalleryRun run_growth(const Json& p) {
  io::detail::only_members(p, {"seqs", "max_tower", "alphas"}, "growth parameters");
  std::vector<gallery::GrowthSeq> seqs;
  for (const auto& s : io::detail::member(p, "seqs", "growth parameters")) {
    seqs.push_back(growth_of(s));
  }
  const auto alphas = rationals_of(io::detail::member(p, "alphas", "growth parameters"), "alphas");
  const auto m = static_cast<unsigned>(count_of(io::detail::member(p, "max_tower", "growth parameters"), "max_tower"));
  GalleryRun run{gallery::sample_growth(seqs, m, alphas), Json::object()};
  Json alpha_only = Json::object();
  for (const auto& x : seqs) {
    alpha_only[gallery::to_string(x)] = gallery::to_string(gallery::growth_dim(x, gallery::GrowthFamily::alpha_only), false);
  }
  run.extras["alpha_only_dims"] = std::move(alpha_only);
  return run;
}

inline GalleryRun run_evenodd(const Json& p) {
  io::detail::only_members(p, {"seqs", "alphas", "betas", "mode"}, "evenodd parameters");
  std::vector<gallery::EvenOddSeq> seqs;
  for (const auto& s : io::detail::member(p, "seqs", "evenodd parameters")) {
    io::detail::only_members(s, {"even", "odd"}, "even/odd sequence");
    seqs.push_back({growth_of(io::detail::member(s, "even", "even/odd sequence")),
                    growth_of(io::detail::member(s, "odd", "even/odd sequence"))});
  }
  const auto alphas = rationals_of(io::detail::member(p, "alphas", "evenodd parameters"), "alphas");
  const auto betas = rationals_of(io::detail::member(p, "betas", "evenodd parameters"), "betas");
  gallery::EvenOddMode mode = gallery::EvenOddMode::product;
  if (p.contains("mode")) {
    if (p["mode"] == "min") {
      mode = gallery::EvenOddMode::min;
    } else if (p["mode"] != "product") {
      throw ParseError("mode must be \"product\" or \"min\"");
    }
  }
  GalleryRun run{gallery::sample_evenodd(seqs, alphas, betas, mode), Json::object()};
  Json breaches = Json::object();
  for (std::size_t x = 0; x < seqs.size(); ++x) {
    Json b = Json::array();
    for (const auto& [a, c] : gallery::evenodd_principal_breaches(seqs[x], alphas, betas, mode)) {
      b.push_back({a.str(), c.str()});
    }
    breaches[run.sample.structure.point_name(x)] = std::move(b);
  }
  run.extras["principal_breaches"] = std::move(breaches);
  return run;
}

inline GalleryRun run_scale(const Json& p) {
  io::detail::only_members(p, {"vectors", "window"}, "scale parameters");
  std::vector<std::pair<std::string, gallery::ScaleVector>> vs;
  for (const auto& v : io::detail::member(p, "vectors", "scale parameters")) {
    io::detail::only_members(v, {"name", "entries", "bound"}, "scale vector");
    std::map<long, Rational> e;
    for (const auto& kv : io::detail::member(v, "entries", "scale vector")) {
      if (!kv.is_array() || kv.size() != 2) {
        throw ParseError("scale entries are [index, value] pairs");
      }
      e[integer_of(kv[0], "index")] = rational_of(kv[1], "value");
    }
    const Json name = io::detail::member(v, "name", "scale vector");
    if (!name.is_string()) {
      throw ParseError("scale vector name must be a string");
    }
    vs.emplace_back(name.get<std::string>(),
                    gallery::ScaleVector::make(std::move(e), integer_of(io::detail::member(v, "bound", "scale vector"), "bound")));
  }
  const auto [lo, hi] = window_of(p);
  return {gallery::sample_scale(vs, lo, hi), Json::object()};
}

inline GalleryRun run_leb(const Json& p) {
  io::detail::only_members(p, {"sets", "window"}, "leb parameters");
  std::vector<gallery::IntervalSet> sets;
  for (const auto& s : io::detail::member(p, "sets", "leb parameters")) {
    std::vector<gallery::Interval> parts;
    for (const auto& iv : s) {
      if (!iv.is_array() || iv.size() != 2) {
        throw ParseError("an interval is [lo, hi]");
      }
      parts.push_back({rational_of(iv[0], "lo"), rational_of(iv[1], "hi")});
    }
    sets.emplace_back(std::move(parts));
  }
  const auto [lo, hi] = window_of(p);
  return {gallery::sample_leb(sets, lo, hi), Json::object()};
}

inline GalleryRun run_pleb(const Json& p) {
  io::detail::only_members(p, {"sets", "window"}, "pleb parameters");
  std::vector<gallery::RectSet> sets;
  for (const auto& s : io::detail::member(p, "sets", "pleb parameters")) {
    std::vector<gallery::Rect> rs;
    for (const auto& r : s) {
      if (!r.is_array() || r.size() != 4) {
        throw ParseError("a rectangle is [x0, x1, y0, y1]");
      }
      rs.push_back({rational_of(r[0], "x0"), rational_of(r[1], "x1"), rational_of(r[2], "y0"), rational_of(r[3], "y1")});
    }
    sets.emplace_back(rs);
  }
  const auto [lo, hi] = window_of(p);
  return {gallery::sample_pleb(sets, lo, hi), Json::object()};
}

inline GalleryRun run_tower(const Json& p) {
  io::detail::only_members(p, {"values", "max_height", "precision"}, "tower parameters");
  const auto values = io::detail::strings(io::detail::member(p, "values", "tower parameters"), "values");
  const Rational precision =
      p.contains("precision") ? rational_of(p["precision"], "precision") : Rational(1, 1000000000);
  const auto h = static_cast<unsigned>(count_of(io::detail::member(p, "max_height", "tower parameters"), "max_height"));
  GalleryRun run{gallery::sample_tower(values, h, precision), Json::object()};
  Json d = Json::object();
  for (const auto& v : values) {
    const auto t = gallery::tower_decompose(v, precision);
    d[v] = {{"height", t.height}, {"mu", t.mu.str()}};
  }
  run.extras["decompositions"] = std::move(d);
  return run;
}

inline GalleryRun run_iterate(const Json& p) {
  io::detail::only_members(p, {"points", "order", "f", "window"}, "iterate parameters");
  std::optional<std::size_t> window;
  if (p.contains("window")) {
    window = count_of(p["window"], "window");
  }
  DimensionStructure D = gallery::iterate_structure(
      io::detail::strings(io::detail::member(p, "points", "iterate parameters"), "points"),
      io::detail::pairs(io::detail::member(p, "order", "iterate parameters"), "order"),
      io::detail::pairs(io::detail::member(p, "f", "iterate parameters"), "f"), window);
  gallery::Sample s{D, {}};
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    s.rows.push_back({"", to_string(D.poset(), D.dim(x)), gallery::Agreement::outside});
  }
  return {std::move(s), Json::object()};
}

inline const std::map<std::string, std::function<GalleryRun(const Json&)>>& gallery_families() {
  static const std::map<std::string, std::function<GalleryRun(const Json&)>> m{
      {"ranked", run_ranked}, {"growth", run_growth}, {"evenodd", run_evenodd}, {"scale", run_scale},
      {"leb", run_leb},       {"pleb", run_pleb},     {"tower", run_tower},     {"iterate", run_iterate}};
  return m;
}

inline Json gallery_json(const std::string& family, const GalleryRun& run) {
  const DimensionStructure& D = run.sample.structure;
  Json rows = Json::array();
  for (std::size_t x = 0; x < D.num_points(); ++x) {
    const auto& r = run.sample.rows[x];
    Json mu = Json::object();
    for (std::size_t s = 0; s < D.num_elements(); ++s) {
      mu[D.element_name(s)] = D.mu(x, s).str();
    }
    Json row = {{"point", D.point_name(x)}, {"core_dim", r.core}, {"mu", std::move(mu)}};
    if (family != "iterate") {
      row["analytic_dim"] = r.analytic;
      row["status"] = gallery::to_string(r.status);
    }
    rows.push_back(std::move(row));
  }
  Json j = {{"family", family},
            {"rows", std::move(rows)},
            {"principal", classify(D).principal.value},
            {"agree", run.sample.count(gallery::Agreement::agree)},
            {"disagree", run.sample.count(gallery::Agreement::disagree)}};
  if (family != "iterate") {
    j["outside"] = run.sample.count(gallery::Agreement::outside);
  }
  for (auto it = run.extras.begin(); it != run.extras.end(); ++it) {
    j[it.key()] = it.value();
  }
  return j;
}

// combine

inline Partition partition_of(const DimensionStructure& D, const std::string& spec) {
  if (spec.empty()) {
    return class_partition(D);
  }
  Partition p;
  for (const auto& block : split(spec, ';')) {
    const auto colon = block.find(':');
    const std::string members = colon == std::string::npos ? block : block.substr(colon + 1);
    IndexSet b;
    for (const auto& name : split(members, ',')) {
      b.push_back(D.point_index(name));
    }
    std::sort(b.begin(), b.end());
    p.ids.push_back(colon == std::string::npos ? "{" + members + "}" : block.substr(0, colon));
    p.blocks.push_back(std::move(b));
  }
  return p;
}

struct CombineOptions {
  std::string op;
  std::vector<std::string> files;
  std::string points, elements, partition, index = "chain";
};

inline DimensionStructure combine(const CombineOptions& o) {
  std::vector<DimensionStructure> in;
  for (const auto& f : o.files) {
    in.push_back(load_structure(f));
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (in.size() < lo || in.size() > hi) {
      throw ShapeError("--op " + o.op + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
                       " structure files, got " + std::to_string(in.size()));
    }
  };
  const std::size_t many = static_cast<std::size_t>(-1);
  if (o.op == "sub") {
    need(1, 1);
    const auto& D = in[0];
    std::vector<std::string> pts = o.points.empty() ? D.table().points() : split(o.points, ',');
    std::vector<std::string> els = o.elements.empty() ? D.poset().names() : split(o.elements, ',');
    return substructure(D, pts, els);
  }
  if (o.op == "normalize") {
    need(1, 1);
    return normalization(in[0]);
  }
  if (o.op == "quotient") {
    need(1, 1);
    return quotient(in[0], partition_of(in[0], o.partition));
  }
  if (o.op == "sum") {
    need(1, many);
    auto names = numbered("i", in.size());
    FinitePoset index = o.index == "antichain" ? FinitePoset::antichain(names) : FinitePoset::chain(names);
    if (o.index != "chain" && o.index != "antichain") {
      throw ShapeError("--index must be chain or antichain");
    }
    return sum(index, in);
  }
  if (o.op == "msum") {
    need(1, many);
    return measure_sum(in);
  }
  if (o.op == "supc") {
    need(1, many);
    return sup_combine(in);
  }
  if (o.op == "product") {
    need(2, 2);
    return direct_product(in[0], in[1]);
  }
  if (o.op == "iproduct") {
    need(1, many);
    return i_direct_product(in);
  }
  if (o.op == "lproduct") {
    need(2, 2);
    return l_direct_product(in[0], in[1]);
  }
  throw ShapeError("unknown --op " + o.op);
}

inline Json names_of(const FinitePoset& P, const IndexSet& s) {
  Json j = Json::array();
  for (std::size_t i : s) {
    j.push_back(P.name(i));
  }
  return j;
}

inline Json extension_json(const PreDimensionStructure& pre, const ExtensionResult& res) {
  const auto& P = pre.poset();
  Json added = Json::array();
  for (const auto& a : res.new_elements) {
    added.push_back({{"name", a.name}, {"completes", names_of(P, a.completes)}});
  }
  return {{"new_elements", std::move(added)},
          {"input_principal", pre_principal(pre)},
          {"principality_preserved", check_principality_preserved(pre, res)}};
}

/// Report for an exception escaping a subcommand.
inline Json violation_json(const char* kind, const std::string& what) { return {{"violation", kind}, {"message", what}}; }

} // namespace detail

/// Runs one CLI invocation; `args` excludes the program name. Returns 0 on
/// success, 1 when a mathematical violation was found (its witness is written
/// to `out`), 2 on usage or input errors.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification tool for dimension structures", "dimstruct"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress witnesses");

  std::string file, file2, file3, out_path, report_path, point, at, points_arg;
  std::string family, kind = "morphism";
  std::optional<std::size_t> alpha;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  bool do_shrink = false;
  detail::CombineOptions comb;

  auto* c_check = app.add_subcommand("check", "Check the axioms (or pre-axioms for kind \"pre\")");
  c_check->add_option("FILE", file)->required();
  auto* c_format = app.add_subcommand("format", "Print a structure file in canonical form");
  c_format->add_option("FILE", file)->required();
  auto* c_classify = app.add_subcommand("classify", "Normality, strength, principality, smallness");
  c_classify->add_option("FILE", file)->required();
  auto* c_dim = app.add_subcommand("dim", "dim x and mu at it");
  c_dim->add_option("FILE", file)->required();
  c_dim->add_option("--point", point)->required();
  auto* c_mu = app.add_subcommand("mu", "mu_s(x)");
  c_mu->add_option("FILE", file)->required();
  c_mu->add_option("--point", point)->required();
  c_mu->add_option("--at", at, "Element name, -inf or +inf")->required();
  auto* c_order = app.add_subcommand("order", "Compare two points under <=_D");
  c_order->add_option("FILE", file)->required();
  c_order->add_option("--points", points_arg, "x,y")->required();
  auto* c_sync = app.add_subcommand("sync", "Synchronization against the file's point_order");
  c_sync->add_option("FILE", file)->required();
  c_sync->add_option("--alpha", alpha, "Largest subset size (default: all)");
  auto* c_combine = app.add_subcommand("combine", "Build a structure from others");
  c_combine->add_option("--op", comb.op)
      ->required()
      ->check(CLI::IsMember({"sub", "normalize", "quotient", "sum", "msum", "supc", "product", "iproduct", "lproduct"}));
  c_combine->add_option("FILES", comb.files)->required();
  c_combine->add_option("-o,--output", out_path);
  c_combine->add_option("--points", comb.points, "sub: points to keep");
  c_combine->add_option("--elements", comb.elements, "sub: elements to keep");
  c_combine->add_option("--partition", comb.partition, "quotient: id:x,y;id2:z (default: dim/mu classes)");
  c_combine->add_option("--index", comb.index, "sum: chain or antichain over the files in order");
  auto* c_extend = app.add_subcommand("extend", "Adjoin missing infima to a pre-structure");
  c_extend->add_option("FILE", file)->required();
  c_extend->add_option("-o,--output", out_path);
  c_extend->add_option("--report", report_path);
  auto* c_embed = app.add_subcommand("embed", "Embed an extension into a target structure");
  c_embed->add_option("PRE", file)->required();
  c_embed->add_option("EXT", file2)->required();
  c_embed->add_option("TARGET", file3)->required();
  auto* c_map = app.add_subcommand("map-verify", "Verify a structure map");
  c_map->add_option("--kind", kind)->check(CLI::IsMember({"morphism", "iso", "semiiso"}));
  c_map->add_option("A", file)->required();
  c_map->add_option("B", file2)->required();
  c_map->add_option("MAPFILE", file3)->required();
  auto* c_suite = app.add_subcommand("suite", "Fuzz the axioms and propositions");
  c_suite->add_option("--seed", seed)->required();
  c_suite->add_option("--count", count)->required();
  c_suite->add_flag("--shrink", do_shrink);
  auto* c_gallery = app.add_subcommand("gallery", "Sample a model family from a parameter file");
  c_gallery->add_option("FAMILY", family)->required()->check(CLI::IsMember({"ranked", "growth", "evenodd", "scale",
                                                                              "leb", "pleb", "tower", "iterate"}));
  c_gallery->add_option("PARAMS", file)->required();
  c_gallery->add_option("-o,--output", out_path, "Write the sampled structure file here");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) {
      io::StructureFile f = io::read_structure_file(file);
      const bool pre = f.kind == "pre";
      const ValidationReport r = pre ? check_pre_axioms(f.table) : check_axioms(f.table);
      Json j = io::validation_json(f.table, r, quiet);
      j["kind"] = f.kind;
      if (pre) {
        j["ax3"] = r.ax3;
      }
      detail::emit(out, j);
      return r.ok() ? 0 : 1;
    }
    if (c_format->parsed()) {
      out << io::emit_structure_file(io::read_structure_file(file));
      return 0;
    }
    if (c_classify->parsed()) {
      const auto D = detail::load_structure(file);
      detail::emit(out, io::classification_json(D, classify(D), quiet));
      return 0;
    }
    if (c_dim->parsed()) {
      const auto D = detail::load_structure(file);
      const MuD m = mu_D(D, D.point_index(point));
      detail::emit(out, {{"point", point}, {"dim", to_string(D.poset(), m.dim)}, {"mu", m.value.str()}});
      return 0;
    }
    if (c_mu->parsed()) {
      const auto D = detail::load_structure(file);
      const ExtVal v = mu_extended(D, D.point_index(point), parse_dim_value(D.poset(), at));
      detail::emit(out, {{"point", point}, {"at", at}, {"mu", v.str()}});
      return 0;
    }
    if (c_order->parsed()) {
      const auto D = detail::load_structure(file);
      const auto xy = detail::split(points_arg, ',');
      if (xy.size() != 2) {
        throw ShapeError("--points takes exactly two names, x,y");
      }
      const DOrder o = leq_D(D, D.point_index(xy[0]), D.point_index(xy[1]));
      detail::emit(out, {{"x", xy[0]}, {"y", xy[1]}, {"verdict", to_string(o)}});
      return 0;
    }
    if (c_sync->parsed()) {
      io::StructureFile f = io::read_structure_file(file);
      if (!f.point_order) {
        throw ShapeError("sync needs a point_order in the structure file");
      }
      const auto D = detail::validated(file, f.table);
      const SyncReport r = check_synchronization(D, *f.point_order, alpha);
      detail::emit(out, io::sync_json(D, r, quiet));
      return r.synchronized() ? 0 : 1;
    }
    if (c_combine->parsed()) {
      detail::put(out, out_path, io::emit_structure(detail::combine(comb)));
      return 0;
    }
    if (c_extend->parsed()) {
      io::StructureFile f = io::read_structure_file(file);
      const auto pre = PreDimensionStructure::validate(std::move(f.table));
      const ExtensionResult res = extend(pre);
      detail::put(out, out_path, io::emit_structure(res.extended));
      if (!report_path.empty()) {
        io::write_text(report_path, detail::extension_json(pre, res).dump(2) + "\n");
      } else if (!out_path.empty()) {
        detail::emit(out, detail::extension_json(pre, res));
      }
      return 0;
    }
    if (c_embed->parsed()) {
      const auto pre = PreDimensionStructure::validate(io::read_structure_file(file).table);
      const ExtensionResult res = extend(pre);
      if (!(io::read_structure_file(file2).table == res.extended.table())) {
        throw ShapeError(file2 + " is not the extension of " + file);
      }
      const auto target = detail::load_structure(file3);
      const EmbedReport r = embed_into(pre, res, target);
      Json f = Json::object();
      for (std::size_t e = 0; e < r.f.size(); ++e) {
        f[res.extended.element_name(e)] = target.element_name(r.f[e]);
      }
      Json j = {{"ok", r.ok()},
                {"injective", r.injective},
                {"order_preserving", r.order_preserving},
                {"values_on_S", r.values_on_S},
                {"sup_inequality", r.sup_inequality}};
      if (!quiet) {
        j["f"] = std::move(f);
      }
      detail::emit(out, j);
      return r.ok() ? 0 : 1;
    }
    if (c_map->parsed()) {
      const auto A = detail::load_structure(file);
      const auto B = detail::load_structure(file2);
      const io::MapFile mf = io::parse_map_file(io::read_text(file3));
      const MapKind k = kind == "iso" ? MapKind::isomorphism
                        : kind == "semiiso" ? MapKind::semi_isomorphism
                                            : MapKind::morphism;
      const StructureMap m = make_map(A, B, mf.f, mf.g);
      const MapReport r = verify_map(A, B, m, k);
      const TransportReport tr = dim_transport_check(A, B, m, k);
      Json j = {{"kind", to_string(k)}, {"holds", r.holds}, {"dim_transport", tr.holds}};
      if (!quiet) {
        if (r.order_witness) {
          j["order_witness"] = {A.element_name(r.order_witness->first), A.element_name(r.order_witness->second)};
        }
        if (r.value_witness) {
          j["value_witness"] = {{"point", A.point_name(r.value_witness->first)},
                                {"element", A.element_name(r.value_witness->second)}};
        }
        j["transport_failures"] = io::point_list(A, tr.failures);
        j["transport_exempt"] = io::point_list(A, tr.exempt);
      }
      detail::emit(out, j);
      return r.holds && tr.holds ? 0 : 1;
    }
    if (c_suite->parsed()) {
      const SuiteReport r = run_suite(seed, count, do_shrink);
      Json props = Json::object();
      for (const auto& [id, t] : r.tallies) {
        props[id] = {{"applicable", t.applicable}, {"failed", t.failed}};
      }
      Json fails = Json::array();
      for (const auto& f : r.failures) {
        Json fj = {{"seed", f.seed}, {"check", f.check}};
        if (!quiet) {
          fj["witness"] = f.witness;
          if (f.shrunk) {
            fj["shrunk"] = io::structure_json({*f.shrunk, std::nullopt, "structure"});
          }
        }
        fails.push_back(std::move(fj));
      }
      detail::emit(out, {{"seed", r.seed},
                         {"instances", r.instances},
                         {"chains", r.chains},
                         {"propositions", std::move(props)},
                         {"failures", std::move(fails)},
                         {"ok", r.ok()}});
      return r.ok() ? 0 : 1;
    }
    if (c_gallery->parsed()) {
      const Json params = io::parse_json(io::read_text(file));
      const detail::GalleryRun run = detail::gallery_families().at(family)(params);
      if (!out_path.empty()) {
        io::write_text(out_path, io::emit_structure(run.sample.structure));
      }
      detail::emit(out, detail::gallery_json(family, run));
      return run.sample.ok() ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const detail::FileViolation& e) {
    Json j = detail::violation_json("ValidationError", e.what());
    if (!quiet) {
      j["report"] = e.report();
    }
    detail::emit(out, j);
    return 1;
  } catch (const ValidationError& e) {
    detail::emit(out, detail::violation_json("ValidationError", quiet ? "" : e.what()));
    return 1;
  } catch (const PreInvalid& e) {
    detail::emit(out, detail::violation_json("PreInvalid", e.what()));
    return 1;
  } catch (const Violation& e) {
    detail::emit(out, detail::violation_json("Violation", e.what()));
    return 1;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace dimstruct::cli
