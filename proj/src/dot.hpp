// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_DOT_HPP
#define PARIKH_DOT_HPP

#include "json_io.hpp"

namespace parikh {

// Graphviz digraph with transition ids on the edge labels, stable ordering.
std::string dot_automaton(const Automaton& a, const std::string& name = "automaton");

// Cqdd renders one subgraph per component; a BSL renders its canonical
// eps-CA automaton.
std::string dot_model(const Model& m);

}  // namespace parikh

#endif
