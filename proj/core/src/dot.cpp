#include "catena/dot.hpp"

#include <sstream>

namespace catena {

std::string to_dot(const FiniteLattice& L,
                   const std::map<std::pair<int, int>, std::string>& edge_attrs,
                   const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (int i = 0; i < L.size(); ++i)
    out << "  \"" << L.label(i) << "\";\n";
  for (auto& [a, b] : L.covers()) {
    out << "  \"" << L.label(a) << "\" -> \"" << L.label(b) << "\"";
    auto it = edge_attrs.find({a, b});
    if (it != edge_attrs.end()) out << " [" << it->second << "]";
    out << ";\n";
  }
  out << "  { rank=min; \"" << L.label(L.bottom()) << "\"; }\n";
  out << "}\n";
  return out.str();
}

std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>
parse_dot_covers(const std::string& text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  auto add_label = [&](const std::string& s) {
    for (const auto& l : labels)
      if (l == s) return;
    labels.push_back(s);
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("rank=min") != std::string::npos) continue;
    // quoted tokens on the line
    std::vector<std::string> quoted;
    std::size_t pos = 0;
    while ((pos = line.find('"', pos)) != std::string::npos) {
      std::size_t end = line.find('"', pos + 1);
      if (end == std::string::npos) break;
      quoted.push_back(line.substr(pos + 1, end - pos - 1));
      pos = end + 1;
    }
    bool edge = line.find("->") != std::string::npos;
    if (edge && quoted.size() >= 2) {
      add_label(quoted[0]);
      add_label(quoted[1]);
      covers.emplace_back(quoted[0], quoted[1]);
    } else if (!edge && quoted.size() == 1) {
      add_label(quoted[0]);
    }
  }
  return {labels, covers};
}

}  // namespace catena
