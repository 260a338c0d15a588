#pragma once

// Replays the expected-output sidecars under data/ through the in-process
// CLI, and checks that every shipped structure file is in canonical form.

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dimstruct/cli.hpp"
#include "dimstruct/io.hpp"

namespace goldens {

namespace fs = std::filesystem;
using dimstruct::io::Json;

struct Summary {
  std::size_t sidecars = 0;
  std::size_t runs = 0;
  std::set<int> exit_codes;
  std::vector<std::string> failures;
};

inline std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

inline std::vector<fs::path> files(const fs::path& root, const std::string& suffix) {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    const std::string name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

inline Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dimstruct::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

inline Summary replay(const fs::path& data) {
  Summary s;
  const std::string root = data.string();
  for (const auto& path : files(data, ".expected.json")) {
    ++s.sidecars;
    const Json doc = Json::parse(dimstruct::io::read_text(path.string()));
    std::size_t i = 0;
    for (const auto& r : doc.at("runs")) {
      std::vector<std::string> args;
      for (const auto& a : r.at("args")) {
        args.push_back(replace_all(a.get<std::string>(), "{data}", root));
      }
      const Outcome o = run(args);
      ++s.runs;
      s.exit_codes.insert(o.code);
      const Json& want = r.at("stdout");
      const std::string want_out = want.is_string() && want.get<std::string>().empty() ? "" : want.dump(2) + "\n";
      const std::string where = fs::relative(path, data).string() + " run " + std::to_string(i);
      if (o.code != r.at("exit").get<int>()) {
        s.failures.push_back(where + ": exit " + std::to_string(o.code) + ", expected " +
                             std::to_string(r.at("exit").get<int>()));
      } else if (o.out != want_out) {
        s.failures.push_back(where + ": standard output differs");
      } else if (replace_all(o.err, root, "{data}") != r.at("stderr").get<std::string>()) {
        s.failures.push_back(where + ": error output differs");
      }
      ++i;
    }
  }
  return s;
}

/// Structure files shipped under data/fixtures, excluding sidecars and maps.
inline std::vector<fs::path> structure_files(const fs::path& data) {
  std::vector<fs::path> out;
  for (const auto& p : files(data / "fixtures", ".json")) {
    const std::string n = p.filename().string();
    if (n.find(".expected.") == std::string::npos && n.find(".map.") == std::string::npos) {
      out.push_back(p);
    }
  }
  return out;
}

/// emit(parse(file)) reproduces the file byte for byte, and emitting is a
/// fixed point.
inline std::vector<std::string> round_trip(const fs::path& data, std::size_t* checked = nullptr) {
  std::vector<std::string> bad;
  std::size_t n = 0;
  for (const auto& p : structure_files(data)) {
    ++n;
    const std::string text = dimstruct::io::read_text(p.string());
    const std::string once = dimstruct::io::emit_structure_file(dimstruct::io::parse_structure_file(text));
    const std::string twice = dimstruct::io::emit_structure_file(dimstruct::io::parse_structure_file(once));
    if (once != text || twice != once) {
      bad.push_back(p.filename().string());
    }
  }
  if (checked) {
    *checked = n;
  }
  return bad;
}

} // namespace goldens
