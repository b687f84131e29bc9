#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ultragrade/presentation.hpp"

namespace ultragrade::test {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ULTRAGRADE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Presentation load(const std::string& name) { return parse_presentation(read_data(name)); }

inline VertexRef vref(const Presentation& p, const std::string& label) {
  auto s = parse_vertex_set(p, label);
  return *s.min();
}

inline EdgeInst edge(const Presentation& p, const std::string& label) { return parse_edge_inst(p, label); }

}  // namespace ultragrade::test
