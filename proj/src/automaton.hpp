// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_AUTOMATON_HPP
#define PARIKH_AUTOMATON_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semilinear.hpp"

namespace parikh {

using StateId = int;

// Transition ids are the position in the automaton's transition list; they
// are the coordinate system for every constraint set in the library.
struct Transition {
  StateId from;
  std::optional<char> label;  // nullopt = epsilon
  StateId to;

  bool is_epsilon() const { return !label.has_value(); }
};

class Automaton {
 public:
  Automaton(int num_states, std::vector<char> alphabet, StateId initial,
            std::vector<StateId> finals, std::vector<Transition> transitions,
            bool epsilon_allowed);

  int num_states() const { return num_states_; }
  const std::vector<char>& alphabet() const { return alphabet_; }
  StateId initial() const { return initial_; }
  const std::vector<StateId>& finals() const { return finals_; }
  bool is_final(StateId q) const;
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(int id) const { return transitions_[id]; }
  int num_transitions() const { return static_cast<int>(transitions_.size()); }
  bool epsilon_allowed() const { return epsilon_allowed_; }
  bool has_letter(char a) const;

  // Transition ids leaving q, in id order.
  const std::vector<int>& out(StateId q) const { return out_[q]; }

 private:
  int num_states_;
  std::vector<char> alphabet_;
  StateId initial_;
  std::vector<StateId> finals_;
  std::vector<Transition> transitions_;
  bool epsilon_allowed_;
  std::vector<std::vector<int>> out_;
};

// A word over transition ids; consecutive transitions chain.
using Path = std::vector<int>;

std::string path_label(const Automaton& a, const Path& p);
bool path_is_valid(const Automaton& a, const Path& p);
// Parikh image of a path: per-transition occurrence counts.
Vec path_counts(const Automaton& a, const Path& p);

// All accepting paths labeled w that use at most eps_cap epsilon-transitions
// between consecutive letters and at the ends.
std::vector<Path> accepting_runs(const Automaton& a, std::string_view w, int eps_cap);

// No epsilon-transitions and no two transitions sharing (from, label).
bool is_deterministic(const Automaton& a);

// Structural flatness: a spine with at most one simple cycle anchored per
// segment, cycles pairwise state-disjoint and non-overlapping.
bool is_flat(const Automaton& a);

// Among the p -> q paths labeled exactly a (epsilon-transitions around one
// a-transition), the shortest, tie-broken lexicographically smallest by
// transition ids; nullopt if unreachable.
std::optional<Path> shortest_labeled_path(const Automaton& a, StateId p, StateId q, char letter);

struct SubsetAutomaton {
  Automaton automaton;            // deterministic, epsilon-free
  std::vector<std::vector<StateId>> subsets;  // source states per subset state
  Automaton source;

  // Smallest p in the subset with a path p -> q labeled a, if any.
  std::optional<StateId> witness(int subset_state, StateId q, char letter) const;
};

// Subset construction over epsilon*-a-epsilon* reachability; accepts L(a).
SubsetAutomaton subset_automaton(const Automaton& a);

// {Phi(pi) : pi an accepting run}, as a semilinear set over N^{|transitions|}.
// Labels are ignored; final_restriction, when set, replaces the final states.
SemilinearSet runs_parikh_image(const Automaton& a,
                                const std::optional<std::vector<StateId>>& final_restriction,
                                const Caps& caps = default_caps());

}  // namespace parikh

#endif
