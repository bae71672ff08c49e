#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycposet/error.hpp"
#include "cycposet/poset.hpp"

namespace cycposet {

/// Reads {"n": <int>, "relations": [[a,b], ...]} ([a,b] means a<b) and closes
/// the relation transitively. An optional "labels" array is kept for display.
inline Poset poset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw DomainError("poset JSON needs an integer field \"n\"");
  const auto n = j.at("n").get<std::int64_t>();
  if (n < 0) throw DomainError("\"n\" must be nonnegative");
  std::vector<Relation> rel;
  if (j.contains("relations")) {
    const auto& rs = j.at("relations");
    if (!rs.is_array()) throw DomainError("\"relations\" must be an array");
    for (const auto& r : rs) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
        throw DomainError("each relation must be a pair of integers");
      const auto a = r[0].get<std::int64_t>(), b = r[1].get<std::int64_t>();
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw IndexError("relation [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
      rel.emplace_back(static_cast<Point>(a), static_cast<Point>(b));
    }
  }
  Poset p = make_poset(static_cast<std::size_t>(n), rel);
  if (j.contains("labels")) p = p.with_labels(j.at("labels").get<std::vector<std::string>>());
  return p;
}

inline Poset poset_from_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed poset JSON: ") + e.what());
  }
  return poset_from_json(j);
}

/// Writer emits cover edges only, sorted lexicographically.
inline nlohmann::ordered_json poset_to_json(const Poset& p, bool with_labels = false) {
  nlohmann::ordered_json j;
  j["n"] = p.size();
  auto rel = nlohmann::ordered_json::array();
  for (const auto& [a, b] : transitive_reduction(p)) rel.push_back({a, b});
  j["relations"] = std::move(rel);
  if (with_labels && !p.labels().empty()) j["labels"] = p.labels();
  return j;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Hasse diagram in DOT. Points of equal height share a rank and edges run
/// from the lower to the upper point, drawn bottom to top.
inline std::string poset_to_dot(const Poset& p, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  os << "  edge [arrowhead=none];\n";
  const auto h = heights(p);
  std::map<std::size_t, std::vector<Point>> ranks;
  for (Point x = 0; x < p.size(); ++x) {
    ranks[h[x]].push_back(x);
    os << "  " << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  }
  for (const auto& [height, pts] : ranks) {
    os << "  { rank=same;";
    for (Point x : pts) os << ' ' << x << ';';
    os << " }\n";
  }
  for (const auto& [a, b] : transitive_reduction(p)) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cycposet
