// SPDX-License-Identifier: Apache-2.0
#include "bsl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parikh {

Socle::Socle(std::vector<std::string> ws) : words(std::move(ws)) {
  if (words.empty()) throw DimensionError("socle needs at least one word");
  for (const std::string& w : words)
    if (w.empty()) throw DimensionError("socle words must be nonempty");
}

std::vector<char> Socle::letters() const {
  std::set<char> set;
  for (const std::string& w : words) set.insert(w.begin(), w.end());
  return std::vector<char>(set.begin(), set.end());
}

BslLanguage::BslLanguage(Socle s, SemilinearSet e)
    : socle(std::move(s)), iteration_set(std::move(e)) {
  if (iteration_set.dim() != socle.size())
    throw DimensionError("iteration set dimension must equal the socle size");
}

bool bsl_member(const BslLanguage& b, std::string_view w) {
  int n = b.socle.size();
  Vec exps(n, 0);
  auto rec = [&](auto&& self, int i, std::size_t pos) -> bool {
    if (i == n) return pos == w.size() && sl_member(b.iteration_set, exps);
    const std::string& wi = b.socle.words[i];
    for (Int k = 0;; ++k) {
      exps[i] = k;
      if (self(self, i + 1, pos)) return true;
      // Try one more copy of w_i if it still matches.
      if (pos + wi.size() > w.size() || w.compare(pos, wi.size(), wi) != 0) break;
      pos += wi.size();
    }
    exps[i] = 0;
    return false;
  };
  return rec(rec, 0, 0);
}

Automaton socle_automaton(const Socle& s, std::vector<int>* first_cycle_transitions,
                          const std::vector<char>& extra_letters) {
  int n = s.size();
  std::vector<int> anchor(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    anchor[i] = total;
    total += static_cast<int>(s.words[i].size());
  }
  std::vector<Transition> transitions;
  if (first_cycle_transitions) first_cycle_transitions->clear();
  for (int i = 0; i < n; ++i) {
    const std::string& w = s.words[i];
    int len = static_cast<int>(w.size());
    if (first_cycle_transitions)
      first_cycle_transitions->push_back(static_cast<int>(transitions.size()));
    for (int j = 0; j < len; ++j) {
      int from = anchor[i] + j;
      int to = j + 1 < len ? anchor[i] + j + 1 : anchor[i];
      transitions.push_back({from, w[j], to});
    }
  }
  for (int i = 0; i + 1 < n; ++i) transitions.push_back({anchor[i], std::nullopt, anchor[i + 1]});

  std::set<char> sigma;
  for (const std::string& w : s.words) sigma.insert(w.begin(), w.end());
  sigma.insert(extra_letters.begin(), extra_letters.end());
  return Automaton(total, std::vector<char>(sigma.begin(), sigma.end()), 0, {anchor[n - 1]},
                   std::move(transitions), /*epsilon_allowed=*/n > 1);
}

Ca canonical_epsca(const BslLanguage& b, const Caps& caps) {
  std::vector<int> first;
  Automaton a = socle_automaton(b.socle, &first);
  int n = b.socle.size();
  IntMatrix proj(n, a.num_transitions());
  for (int i = 0; i < n; ++i) proj.at(i, first[i]) = 1;
  SemilinearSet c =
      sl_linear_preimage(b.iteration_set, proj, a.num_transitions(), caps);
  return Ca(std::move(a), std::move(c));
}

namespace {

// Complete DFA for the complement of w1*...wn* over the union alphabet.
struct ComplementDfa {
  int num_states;
  std::vector<std::vector<StateId>> step;  // [state][letter index]
  std::vector<bool> final_;
  std::vector<char> sigma;
};

ComplementDfa complement_socle_dfa(const Socle& s, const std::vector<char>& extra) {
  Automaton r = socle_automaton(s, nullptr, extra);
  SubsetAutomaton det = subset_automaton(r);
  const Automaton& d = det.automaton;
  const std::vector<char>& sigma = d.alphabet();
  int sink = d.num_states();
  ComplementDfa out;
  out.num_states = d.num_states() + 1;
  out.sigma = sigma;
  out.step.assign(out.num_states, std::vector<StateId>(sigma.size(), sink));
  for (const Transition& t : d.transitions()) {
    auto li = std::lower_bound(sigma.begin(), sigma.end(), *t.label) - sigma.begin();
    out.step[t.from][li] = t.to;
  }
  out.final_.assign(out.num_states, true);
  for (StateId f : d.finals()) out.final_[f] = false;
  out.final_[sink] = true;
  return out;
}

}  // namespace

bool pa_socle_check(const Pa& m, const Socle& s, const Caps& caps) {
  ComplementDfa dfa = complement_socle_dfa(s, m.automaton.alphabet());
  const Automaton& a = m.automaton;
  auto node = [&](StateId q, StateId d) { return q * dfa.num_states + d; };
  std::vector<Transition> transitions;
  std::vector<Vec> vectors;
  for (int id = 0; id < a.num_transitions(); ++id) {
    const Transition& t = a.transition(id);
    auto li = std::lower_bound(dfa.sigma.begin(), dfa.sigma.end(), *t.label) - dfa.sigma.begin();
    for (int d = 0; d < dfa.num_states; ++d) {
      transitions.push_back({node(t.from, d), t.label, node(t.to, dfa.step[d][li])});
      vectors.push_back(m.vectors[id]);
    }
  }
  std::vector<StateId> finals;
  for (StateId f : a.finals())
    for (int d = 0; d < dfa.num_states; ++d)
      if (dfa.final_[d]) finals.push_back(node(f, d));
  Automaton prod(a.num_states() * dfa.num_states, dfa.sigma, node(a.initial(), 0),
                 std::move(finals), std::move(transitions), false);
  Pa bad(std::move(prod), m.dim, std::move(vectors), m.constraint);
  return pa_empty(bad, caps);
}

SemilinearSet pa_iteration_set(const Pa& m, const Socle& s, const Caps& caps) {
  if (!pa_socle_check(m, s, caps)) throw SocleViolation("language is not within the socle product");
  const Automaton& a = m.automaton;
  int n = s.size();

  // Lifted transitions over the fresh alphabet: one per path of the PA
  // automaton reading w_i, labeled by the block index and carrying the
  // accumulated vector.
  struct Lifted {
    StateId from, to;
    int block;
    Vec sum;
  };
  std::vector<Lifted> lifted;
  std::set<std::tuple<StateId, StateId, int, Vec>> seen;
  for (int i = 0; i < n; ++i) {
    const std::string& wi = s.words[i];
    for (StateId q = 0; q < a.num_states(); ++q) {
      Vec sum(m.dim, 0);
      auto rec = [&](auto&& self, StateId cur, std::size_t pos) -> void {
        if (pos == wi.size()) {
          if (seen.emplace(q, cur, i, sum).second) lifted.push_back({q, cur, i, sum});
          return;
        }
        for (int id : a.out(cur)) {
          const Transition& t = a.transition(id);
          if (*t.label != wi[pos]) continue;
          Vec save = sum;
          vec_add_inplace(sum, m.vectors[id]);
          self(self, t.to, pos + 1);
          sum = std::move(save);
        }
      };
      rec(rec, q, 0);
    }
  }

  // Product with the order automaton o_0..o_{n-1}: a block-i step is allowed
  // from phase o <= i and moves to phase i.
  auto node = [&](StateId q, int o) { return q * n + o; };
  std::vector<Transition> transitions;
  std::vector<Vec> tr_vec;
  std::vector<int> tr_block;
  char block_letter_base = '1';
  std::vector<char> sigma;
  for (int i = 0; i < n; ++i) sigma.push_back(static_cast<char>(block_letter_base + i));
  for (const Lifted& l : lifted)
    for (int o = 0; o <= l.block; ++o) {
      transitions.push_back({node(l.from, o), static_cast<char>(block_letter_base + l.block),
                             node(l.to, l.block)});
      tr_vec.push_back(l.sum);
      tr_block.push_back(l.block);
    }
  std::vector<StateId> finals;
  for (StateId f : a.finals())
    for (int o = 0; o < n; ++o) finals.push_back(node(f, o));
  Automaton prod(a.num_states() * n, sigma, node(a.initial(), 0), std::move(finals),
                 std::move(transitions), false);

  SemilinearSet runs = runs_parikh_image(prod, std::nullopt, caps);
  // Keep the run counts whose accumulated vector satisfies the constraint,
  // then project to block letter counts.
  IntMatrix vmat(m.dim, prod.num_transitions());
  for (int t = 0; t < prod.num_transitions(); ++t)
    for (int i = 0; i < m.dim; ++i) vmat.at(i, t) = tr_vec[t][i];
  SemilinearSet constrained = sl_constrain(runs, vmat, m.constraint, caps);
  IntMatrix counts(n, prod.num_transitions());
  for (int t = 0; t < prod.num_transitions(); ++t) counts.at(tr_block[t], t) = 1;
  return sl_linear_image(constrained, counts);
}

}  // namespace parikh
