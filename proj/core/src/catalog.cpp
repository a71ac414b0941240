#include "latforge/catalog.hpp"

#include <bit>
#include <cctype>

namespace latforge {

FiniteLattice make_chain(std::size_t k) {
  if (k == 0) throw BadParamError("BadParam: chain needs at least one element");
  CoverSpec spec;
  spec.n = k;
  for (std::size_t i = 0; i + 1 < k; ++i) spec.covers.emplace_back(ElementId(i), ElementId(i + 1));
  return FiniteLattice::from_covers(spec);
}

FiniteLattice make_boolean(std::size_t n) {
  if (n > 12) throw BadParamError("BadParam: boolean lattice too large");
  const std::size_t size = std::size_t(1) << n;
  std::vector<std::string> names(size);
  for (std::size_t mask = 0; mask < size; ++mask) {
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s += std::to_string(i + 1) + ",";
    if (s.size() > 1) s.pop_back();
    names[mask] = s + "}";
  }
  return FiniteLattice::from_order(
      size, [](ElementId x, ElementId y) { return (x & ~y) == 0; }, std::move(names));
}

FiniteLattice make_m(std::size_t atoms) {
  if (atoms < 3) throw BadParamError("BadParam: M_n needs n >= 3");
  CoverSpec spec;
  spec.n = atoms + 2;
  spec.names.push_back("0");
  for (std::size_t i = 1; i <= atoms; ++i) {
    spec.covers.emplace_back(ElementId(0), ElementId(i));
    spec.covers.emplace_back(ElementId(i), ElementId(atoms + 1));
    spec.names.push_back("q" + std::to_string(i));
  }
  spec.names.push_back("1");
  return FiniteLattice::from_covers(spec);
}

FiniteLattice make_n5() {
  CoverSpec spec;
  spec.n = 5;
  spec.names = {"0", "p1", "p2", "p3", "1"};
  spec.covers = {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FiniteLattice::from_covers(spec);
}

FiniteLattice make_d4() {
  CoverSpec spec;
  spec.n = 7;
  spec.names = {"0", "a0", "a1", "c", "b0", "b1", "1"};
  spec.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
  return FiniteLattice::from_covers(spec);
}

FiniteLattice make_d4hat() {
  CoverSpec spec;
  spec.n = 8;
  spec.names = {"0", "a0", "a1", "c0", "c1", "b0", "b1", "1"};
  spec.covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  return FiniteLattice::from_covers(spec);
}

FiniteLattice make_m33() {
  CoverSpec spec;
  spec.n = 8;
  spec.names = {"0", "v0", "v1", "u", "v", "u0", "u1", "1"};
  spec.covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}};
  return FiniteLattice::from_covers(spec);
}

std::variant<FiniteLattice, PartialLattice> catalog(const std::string& name, std::optional<int> param) {
  auto need = [&](const char* what) {
    if (!param) throw BadParamError(std::string("BadParam: ") + name + " needs a parameter " + what);
    if (*param < 0) throw BadParamError("BadParam: negative parameter");
    return std::size_t(*param);
  };
  if (name == "D4") return make_d4();
  if (name == "D4hat") return make_d4hat();
  if (name == "N5") return make_n5();
  if (name == "M33") return make_m33();
  if (name == "M") return make_m(need("(atom count)"));
  if (name == "B") return make_boolean(need("(set size)"));
  if (name == "chain") return make_chain(need("(length)"));
  if (name == "P") return diamond(need("(diamond size)"));
  throw UnknownNameError(name);
}

FiniteLattice catalog_lattice(const std::string& name, std::optional<int> param) {
  auto entry = catalog(name, param);
  if (auto* l = std::get_if<FiniteLattice>(&entry)) return std::move(*l);
  throw BadParamError("BadParam: " + name + " is a partial lattice");
}

std::variant<FiniteLattice, PartialLattice> catalog_by_name(const std::string& token) {
  if (token == "M33") return make_m33();
  if (token == "D4" || token == "D4hat" || token == "N5") return catalog(token);
  // "M4", "M_4", "B3", "B_3", "P_3", "chain_5", "chain5"
  std::size_t i = 0;
  while (i < token.size() && !std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  if (i == 0 || i == token.size()) throw UnknownNameError(token);
  std::string head = token.substr(0, i);
  if (!head.empty() && head.back() == '_') head.pop_back();
  int param = 0;
  for (std::size_t j = i; j < token.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(token[j]))) throw UnknownNameError(token);
    param = param * 10 + (token[j] - '0');
  }
  return catalog(head, param);
}

}  // namespace latforge
