// SPDX-License-Identifier: Apache-2.0
#include "dot.hpp"

#include <sstream>

namespace parikh {

namespace {

void dot_body(std::ostringstream& os, const Automaton& a, const std::string& prefix) {
  os << "  " << prefix << "start [shape=point];\n";
  for (int q = 0; q < a.num_states(); ++q) {
    os << "  " << prefix << q << " [label=\"" << q << "\", shape="
       << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  os << "  " << prefix << "start -> " << prefix << a.initial() << ";\n";
  for (int id = 0; id < a.num_transitions(); ++id) {
    const Transition& t = a.transition(id);
    std::string label = t.is_epsilon() ? "\xce\xb5" : std::string(1, *t.label);
    os << "  " << prefix << t.from << " -> " << prefix << t.to << " [label=\"" << id << ":"
       << label << "\"];\n";
  }
}

}  // namespace

std::string dot_automaton(const Automaton& a, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  dot_body(os, a, "q");
  os << "}\n";
  return os.str();
}

std::string dot_model(const Model& m) {
  struct Visitor {
    std::string operator()(const Pa& p) const { return dot_automaton(p.automaton, "pa"); }
    std::string operator()(const Ca& c) const {
      return dot_automaton(c.automaton, c.has_epsilon() ? "epsca" : "ca");
    }
    std::string operator()(const DetApa& d) const { return dot_automaton(d.automaton, "detapa"); }
    std::string operator()(const BslLanguage& b) const {
      return dot_automaton(canonical_epsca(b).automaton, "bsl");
    }
    std::string operator()(const Cqdd& q) const {
      std::ostringstream os;
      os << "digraph cqdd {\n  rankdir=LR;\n";
      for (std::size_t i = 0; i < q.components.size(); ++i) {
        os << "  subgraph cluster_" << i << " {\n    label=\"component " << i << "\";\n";
        std::ostringstream body;
        dot_body(body, q.components[i].ca.automaton, "c" + std::to_string(i) + "_");
        // Indent the component body one extra level.
        std::istringstream in(body.str());
        std::string line;
        while (std::getline(in, line)) os << "  " << line << "\n";
        os << "  }\n";
      }
      os << "}\n";
      return os.str();
    }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace parikh
