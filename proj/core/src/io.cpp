#include "latforge/io.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace latforge {

using nlohmann::json;

namespace {

json cover_json(const FiniteLattice& l) {
  json j;
  j["n"] = l.size();
  j["covers"] = json::array();
  for (auto [lo, hi] : l.cover_pairs()) j["covers"].push_back({lo, hi});
  j["names"] = l.names();
  return j;
}

json constraints_json(const std::vector<Constraint>& side) {
  json arr = json::array();
  for (const Constraint& c : side) arr.push_back({c.members, c.value});
  return arr;
}

std::vector<Constraint> parse_constraints(const json& arr) {
  std::vector<Constraint> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2) throw ParseError("ParseError: bad constraint entry");
    Constraint c;
    for (const auto& m : item[0]) c.members.push_back(ElementId(m.get<unsigned>()));
    c.value = ElementId(item[1].get<unsigned>());
    out.push_back(std::move(c));
  }
  return out;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("ParseError: invalid JSON");
  return j;
}

}  // namespace

std::string to_json(const FiniteLattice& l) { return cover_json(l).dump(); }

std::string to_json(const PartialLattice& p) {
  json j;
  j["n"] = p.size();
  // the poset is serialized through its cover relation
  json covers = json::array();
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      bool cover = true;
      for (ElementId z = 0; z < p.size() && cover; ++z)
        cover = z == x || z == y || !(p.leq(x, z) && p.leq(z, y));
      if (cover) covers.push_back({x, y});
    }
  j["covers"] = std::move(covers);
  j["names"] = p.names();
  j["joins"] = constraints_json(p.joins());
  j["meets"] = constraints_json(p.meets());
  return j.dump();
}

std::string to_json(const Subspace& s) {
  json j;
  j["q"] = s.q();
  j["dim"] = s.ambient_dim();
  json rows = json::array();
  for (const auto& row : s.rows()) rows.push_back(std::vector<int>(row.begin(), row.end()));
  j["rows"] = std::move(rows);
  return j.dump();
}

std::variant<FiniteLattice, PartialLattice> from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw ParseError("ParseError: expected an object with n and covers");
  CoverSpec spec;
  spec.n = j["n"].get<std::size_t>();
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw ParseError("ParseError: bad cover entry");
    unsigned lo = c[0].get<unsigned>(), hi = c[1].get<unsigned>();
    if (lo > 0xffff || hi > 0xffff) throw ParseError("ParseError: cover endpoint out of range");
    spec.covers.emplace_back(ElementId(lo), ElementId(hi));
  }
  if (j.contains("names")) spec.names = j["names"].get<std::vector<std::string>>();

  if (!j.contains("joins") && !j.contains("meets")) return FiniteLattice::from_covers(spec);

  // partial lattice: reflexive-transitive closure of the covers is the poset
  std::vector<Constraint> joins, meets;
  if (j.contains("joins")) joins = parse_constraints(j["joins"]);
  if (j.contains("meets")) meets = parse_constraints(j["meets"]);
  const std::size_t n = spec.n;
  std::vector<bool> leq(n * n, false);
  for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = true;
  for (auto [lo, hi] : spec.covers) {
    if (lo >= n || hi >= n) throw ParseError("ParseError: cover endpoint out of range");
    leq[lo * n + hi] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!leq[x * n + y]) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (leq[y * n + z] && !leq[x * n + z]) {
            leq[x * n + z] = true;
            changed = true;
          }
      }
  }
  return PartialLattice(
      n, [&](ElementId x, ElementId y) { return leq[x * n + y]; }, std::move(joins), std::move(meets),
      spec.names);
}

Subspace subspace_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("q") || !j.contains("dim") || !j.contains("rows"))
    throw ParseError("ParseError: expected an object with q, dim, rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j["rows"]) rows.push_back(r.get<std::vector<int>>());
  return Subspace(j["q"].get<int>(), j["dim"].get<int>(), rows);
}

std::string to_dot(const FiniteLattice& l) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<std::size_t, std::vector<ElementId>> by_height;
  for (ElementId x = 0; x < l.size(); ++x) by_height[l.height(x)].push_back(x);
  for (ElementId x = 0; x < l.size(); ++x)
    out << "  n" << x << " [label=\"" << l.name(x) << "\"];\n";
  for (const auto& [h, elems] : by_height) {
    out << "  { rank=same;";
    for (ElementId x : elems) out << " n" << x << ";";
    out << " }\n";
  }
  for (auto [lo, hi] : l.cover_pairs()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latforge
