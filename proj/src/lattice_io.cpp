#include "epilat/lattice_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace epilat {

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

FiniteLattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::map<std::string, Node> index;
  std::vector<std::pair<Node, Node>> covers;
  std::map<Node, std::string> labels;
  int lineno = 0;
  auto node = [&](const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) throw Error("line " + std::to_string(lineno) + ": unknown element '" + n + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "elements") {
      std::istringstream vs(value);
      for (std::string n; vs >> n;) {
        if (!index.emplace(n, static_cast<Node>(names.size())).second)
          throw Error("line " + std::to_string(lineno) + ": duplicate element '" + n + "'");
        names.push_back(n);
      }
    } else if (key == "cover") {
      auto lt = value.find('<');
      if (lt == std::string::npos) throw Error("line " + std::to_string(lineno) + ": expected 'a < b'");
      covers.emplace_back(node(trim(value.substr(0, lt))), node(trim(value.substr(lt + 1))));
    } else if (key == "label") {
      auto eq = value.find('=');
      if (eq == std::string::npos) throw Error("line " + std::to_string(lineno) + ": expected 'a = text'");
      labels[node(trim(value.substr(0, eq)))] = trim(value.substr(eq + 1));
    } else {
      throw Error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (names.empty()) throw Error("lattice file has no elements");
  std::vector<std::string> lab = names;
  for (auto& [n, text] : labels) lab[n] = text;
  return FiniteLattice::from_covers(static_cast<int>(names.size()), covers, lab);
}

namespace {

// Element names must be whitespace-free; labels are kept verbatim.
std::vector<std::string> element_names(const FiniteLattice& l) {
  std::vector<std::string> out;
  for (Node a = 0; a < l.size(); ++a) {
    bool plain = !l.label(a).empty() && l.label(a).find_first_of(" \t<:=#") == std::string::npos;
    out.push_back(plain ? l.label(a) : "n" + std::to_string(a));
  }
  std::map<std::string, int> seen;
  for (auto& n : out)
    if (seen[n]++) n += "_" + std::to_string(seen[n]);
  return out;
}

} // namespace

std::string format_lattice(const FiniteLattice& l) {
  auto names = element_names(l);
  std::string out = "elements:";
  for (const auto& n : names) out += " " + n;
  out += "\n";
  for (auto [a, b] : l.covers()) out += "cover: " + names[a] + " < " + names[b] + "\n";
  for (Node a = 0; a < l.size(); ++a)
    if (names[a] != l.label(a)) out += "label: " + names[a] + " = " + l.label(a) + "\n";
  return out;
}

std::string to_dot(const FiniteLattice& l, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Node a = 0; a < l.size(); ++a) out += "  n" + std::to_string(a) + " [label=\"" + l.label(a) + "\"];\n";
  for (auto [a, b] : l.covers())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [arrowhead=none];\n";
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace epilat
