// SPDX-License-Identifier: Apache-2.0
#include "automaton.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace parikh {

Automaton::Automaton(int num_states, std::vector<char> alphabet, StateId initial,
                     std::vector<StateId> finals, std::vector<Transition> transitions,
                     bool epsilon_allowed)
    : num_states_(num_states),
      alphabet_(std::move(alphabet)),
      initial_(initial),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)),
      epsilon_allowed_(epsilon_allowed) {
  if (num_states_ <= 0) throw DimensionError("automaton needs at least one state");
  auto in_range = [&](StateId q) { return q >= 0 && q < num_states_; };
  if (!in_range(initial_)) throw DimensionError("initial state out of range");
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
  for (StateId f : finals_)
    if (!in_range(f)) throw DimensionError("final state out of range");
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  out_.resize(num_states_);
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    if (!in_range(t.from) || !in_range(t.to)) throw DimensionError("transition endpoint out of range");
    if (t.is_epsilon()) {
      if (!epsilon_allowed_) throw DimensionError("epsilon transition in epsilon-free automaton");
    } else if (!has_letter(*t.label)) {
      throw DimensionError("transition label not in alphabet");
    }
    out_[t.from].push_back(static_cast<int>(i));
  }
}

bool Automaton::is_final(StateId q) const {
  return std::binary_search(finals_.begin(), finals_.end(), q);
}

bool Automaton::has_letter(char a) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), a);
}

std::string path_label(const Automaton& a, const Path& p) {
  std::string s;
  for (int id : p) {
    const Transition& t = a.transition(id);
    if (!t.is_epsilon()) s.push_back(*t.label);
  }
  return s;
}

bool path_is_valid(const Automaton& a, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= a.num_transitions()) return false;
    if (i > 0 && a.transition(p[i - 1]).to != a.transition(p[i]).from) return false;
  }
  return true;
}

Vec path_counts(const Automaton& a, const Path& p) {
  Vec counts(a.num_transitions(), 0);
  for (int id : p) ++counts[id];
  return counts;
}

std::vector<Path> accepting_runs(const Automaton& a, std::string_view w, int eps_cap) {
  std::vector<Path> results;
  Path current;
  auto rec = [&](auto&& self, StateId q, std::size_t pos, int eps_since) -> void {
    if (pos == w.size() && a.is_final(q)) results.push_back(current);
    for (int id : a.out(q)) {
      const Transition& t = a.transition(id);
      if (t.is_epsilon()) {
        if (eps_since >= eps_cap) continue;
        current.push_back(id);
        self(self, t.to, pos, eps_since + 1);
        current.pop_back();
      } else if (pos < w.size() && *t.label == w[pos]) {
        current.push_back(id);
        self(self, t.to, pos + 1, 0);
        current.pop_back();
      }
    }
  };
  rec(rec, a.initial(), 0, 0);
  return results;
}

bool is_deterministic(const Automaton& a) {
  std::set<std::pair<StateId, char>> seen;
  for (const Transition& t : a.transitions()) {
    if (t.is_epsilon()) return false;
    if (!seen.insert({t.from, *t.label}).second) return false;
  }
  return true;
}

namespace {

// Iterative-friendly Tarjan over an edge-filtered view of the automaton.
struct SccResult {
  std::vector<int> id;  // -1 for excluded states
  int count = 0;
};

SccResult tarjan_scc(const Automaton& a, const std::vector<bool>& state_ok,
                     const std::vector<bool>& edge_ok) {
  int n = a.num_states();
  SccResult res;
  res.id.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  auto strongconnect = [&](auto&& self, int v) -> void {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int id : a.out(v)) {
      if (!edge_ok[id]) continue;
      int wst = a.transition(id).to;
      if (!state_ok[wst]) continue;
      if (index[wst] < 0) {
        self(self, wst);
        low[v] = std::min(low[v], low[wst]);
      } else if (on_stack[wst]) {
        low[v] = std::min(low[v], index[wst]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int wv = stack.back();
        stack.pop_back();
        on_stack[wv] = false;
        res.id[wv] = res.count;
        if (wv == v) break;
      }
      ++res.count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (state_ok[v] && index[v] < 0) strongconnect(strongconnect, v);
  return res;
}

}  // namespace

bool is_flat(const Automaton& a) {
  int n = a.num_states();
  std::vector<bool> all_states(n, true), all_edges(a.num_transitions(), true);
  SccResult scc = tarjan_scc(a, all_states, all_edges);

  std::vector<int> scc_size(scc.count, 0);
  for (int q = 0; q < n; ++q) ++scc_size[scc.id[q]];
  std::vector<bool> cyclic(scc.count, false);
  for (const Transition& t : a.transitions())
    if (scc.id[t.from] == scc.id[t.to]) cyclic[scc.id[t.from]] = true;

  // Each cyclic SCC must be one simple cycle: exactly one in-SCC successor
  // per member state.
  std::vector<int> internal_out(n, 0);
  std::vector<int> scc_out(scc.count, 0), scc_in(scc.count, 0);
  std::vector<int> scc_next(scc.count, -1);
  for (const Transition& t : a.transitions()) {
    int s1 = scc.id[t.from], s2 = scc.id[t.to];
    if (s1 == s2) {
      ++internal_out[t.from];
    } else {
      ++scc_out[s1];
      ++scc_in[s2];
      scc_next[s1] = s2;
    }
  }
  for (int q = 0; q < n; ++q) {
    int s = scc.id[q];
    if (cyclic[s]) {
      if (internal_out[q] != 1) return false;
    } else if (internal_out[q] != 0) {
      return false;  // unreachable for trivial SCCs, kept for clarity
    }
  }

  // The condensation must form one simple chain from the initial SCC with a
  // single transition between consecutive spine segments, covering all states.
  for (int s = 0; s < scc.count; ++s)
    if (scc_out[s] > 1 || scc_in[s] > 1) return false;

  int cur = scc.id[a.initial()];
  if (scc_in[cur] != 0) return false;
  int covered = scc_size[cur];
  std::vector<bool> seen(scc.count, false);
  seen[cur] = true;
  while (scc_out[cur] == 1) {
    int nxt = scc_next[cur];
    if (seen[nxt]) return false;
    seen[nxt] = true;
    covered += scc_size[nxt];
    cur = nxt;
  }
  return covered == n;
}

namespace {

struct LayeredNode {
  StateId state;
  int consumed;  // 0 before the letter, 1 after
};

}  // namespace

std::optional<Path> shortest_labeled_path(const Automaton& a, StateId p, StateId q, char letter) {
  int n = a.num_states();
  // dist[state][consumed] = shortest remaining length to (q, 1).
  constexpr int kInf = 1 << 29;
  std::vector<std::array<int, 2>> dist(n, {kInf, kInf});
  dist[q][1] = 0;
  // Backward BFS; build reverse adjacency on the fly.
  std::vector<std::vector<int>> in(n);
  for (int id = 0; id < a.num_transitions(); ++id) in[a.transition(id).to].push_back(id);
  std::vector<LayeredNode> queue{{q, 1}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [s, c] = queue[head];
    int d = dist[s][c];
    for (int id : in[s]) {
      const Transition& t = a.transition(id);
      // Edge (t.from, c') -> (s, c).
      if (t.is_epsilon()) {
        if (dist[t.from][c] > d + 1) {
          dist[t.from][c] = d + 1;
          queue.push_back({t.from, c});
        }
      } else if (c == 1 && *t.label == letter) {
        if (dist[t.from][0] > d + 1) {
          dist[t.from][0] = d + 1;
          queue.push_back({t.from, 0});
        }
      }
    }
  }
  if (dist[p][0] >= kInf) return std::nullopt;

  // Greedy forward walk picking the smallest transition id that stays on a
  // shortest path; yields the lexicographically smallest shortest path.
  Path path;
  StateId s = p;
  int c = 0;
  int remaining = dist[p][0];
  while (remaining > 0) {
    int best = -1;
    int best_c = c;
    for (int id : a.out(s)) {
      const Transition& t = a.transition(id);
      int nc;
      if (t.is_epsilon())
        nc = c;
      else if (c == 0 && *t.label == letter)
        nc = 1;
      else
        continue;
      if (dist[t.to][nc] == remaining - 1) {
        best = id;
        best_c = nc;
        break;  // out() is in id order
      }
    }
    if (best < 0) throw Error("shortest_labeled_path reconstruction failed");
    path.push_back(best);
    s = a.transition(best).to;
    c = best_c;
    --remaining;
  }
  return path;
}

SubsetAutomaton subset_automaton(const Automaton& a) {
  int n = a.num_states();
  // Epsilon closures.
  std::vector<std::vector<bool>> ecl(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<StateId> queue{s};
    ecl[s][s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int id : a.out(queue[head])) {
        const Transition& t = a.transition(id);
        if (t.is_epsilon() && !ecl[s][t.to]) {
          ecl[s][t.to] = true;
          queue.push_back(t.to);
        }
      }
    }
  }
  // reach[p][letter index][q]: a path p -> q labeled exactly the letter.
  const std::vector<char>& sigma = a.alphabet();
  auto letter_index = [&](char ch) {
    return std::lower_bound(sigma.begin(), sigma.end(), ch) - sigma.begin();
  };
  std::vector<std::vector<std::vector<bool>>> reach(
      n, std::vector<std::vector<bool>>(sigma.size(), std::vector<bool>(n, false)));
  for (int p = 0; p < n; ++p)
    for (int mid = 0; mid < n; ++mid) {
      if (!ecl[p][mid]) continue;
      for (int id : a.out(mid)) {
        const Transition& t = a.transition(id);
        if (t.is_epsilon()) continue;
        auto li = letter_index(*t.label);
        for (int q = 0; q < n; ++q)
          if (ecl[t.to][q]) reach[p][li][q] = true;
      }
    }

  std::vector<std::vector<StateId>> subsets;
  std::map<std::vector<StateId>, int> subset_id;
  std::vector<Transition> transitions;
  std::vector<StateId> finals;

  auto intern = [&](std::vector<StateId> set) {
    auto it = subset_id.find(set);
    if (it != subset_id.end()) return it->second;
    int id = static_cast<int>(subsets.size());
    subset_id.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };

  intern({a.initial()});
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (std::size_t li = 0; li < sigma.size(); ++li) {
      std::vector<bool> nxt(n, false);
      const auto members = subsets[head];  // copy: subsets may reallocate
      for (StateId p : members)
        for (int q = 0; q < n; ++q)
          if (reach[p][li][q]) nxt[q] = true;
      std::vector<StateId> set;
      for (int q = 0; q < n; ++q)
        if (nxt[q]) set.push_back(q);
      if (set.empty()) continue;
      int to = intern(std::move(set));
      transitions.push_back({static_cast<StateId>(head), sigma[li], static_cast<StateId>(to)});
    }
  }
  // A subset accepts when its epsilon-closure meets the final states; every
  // subset reached by a nonempty word is already closed, so this only
  // affects the initial {q0}.
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    bool fin = false;
    for (StateId p : subsets[i]) {
      for (int q = 0; q < n && !fin; ++q)
        if (ecl[p][q] && a.is_final(q)) fin = true;
      if (fin) break;
    }
    if (fin) finals.push_back(static_cast<StateId>(i));
  }

  Automaton det(static_cast<int>(subsets.size()), sigma, 0, std::move(finals),
                std::move(transitions), false);
  return SubsetAutomaton{std::move(det), std::move(subsets), a};
}

std::optional<StateId> SubsetAutomaton::witness(int subset_state, StateId q, char letter) const {
  for (StateId p : subsets[subset_state])
    if (shortest_labeled_path(source, p, q, letter).has_value()) return p;
  return std::nullopt;
}

namespace {

struct SegmentKey {
  int scc, entry, exit;
  bool operator<(const SegmentKey& o) const {
    return std::tie(scc, entry, exit) < std::tie(o.scc, o.entry, o.exit);
  }
};

// Realizable Parikh images of walks from entry to exit inside one SCC,
// embedded in N^{|transitions|}. Support-exact enumeration per subset of the
// SCC's edges, solved for flow balance with every chosen edge used >= 1.
std::vector<LinearSet> segment_components(const Automaton& a, const std::vector<int>& edges,
                                          StateId entry, StateId exit, const Caps& caps) {
  int ndelta = a.num_transitions();
  std::vector<LinearSet> comps;
  if (entry == exit) comps.emplace_back(Vec(ndelta, 0), std::vector<Vec>{});
  int k = static_cast<int>(edges.size());
  if (k > caps.support_cap)
    throw SupportEnumerationCapExceeded("SCC has more transitions than the support cap");

  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) chosen.push_back(edges[i]);

    // States touched by the support, with entry and exit required present.
    std::map<StateId, int> state_row;
    auto touch = [&](StateId q) {
      state_row.emplace(q, static_cast<int>(state_row.size()));
    };
    for (int id : chosen) {
      touch(a.transition(id).from);
      touch(a.transition(id).to);
    }
    if (!state_row.count(entry) || !state_row.count(exit)) continue;

    // Weak connectivity of the support.
    std::vector<int> parent(state_row.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int id : chosen) {
      int x = find(find, state_row[a.transition(id).from]);
      int y = find(find, state_row[a.transition(id).to]);
      parent[x] = y;
    }
    int root = find(find, 0);
    bool connected = true;
    for (std::size_t i = 1; i < parent.size(); ++i)
      if (find(find, static_cast<int>(i)) != root) connected = false;
    if (!connected) continue;

    // Flow balance with x_t = 1 + y_t on the support.
    int rows = static_cast<int>(state_row.size());
    SignedMatrix sys(rows, std::vector<Int>(chosen.size(), 0));
    std::vector<Int> rhs(rows, 0);
    for (auto [q, r] : state_row) rhs[r] = (q == exit ? 1 : 0) - (q == entry ? 1 : 0);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      const Transition& t = a.transition(chosen[j]);
      sys[state_row[t.to]][j] += 1;
      sys[state_row[t.from]][j] -= 1;
      rhs[state_row[t.to]] -= 1;
      rhs[state_row[t.from]] += 1;
    }
    NonnegSolutions sol = solve_nonneg_system(sys, rhs, caps.solver_cap);
    for (const Vec& m : sol.minimal) {
      Vec base(ndelta, 0);
      for (std::size_t j = 0; j < chosen.size(); ++j) base[chosen[j]] = 1 + m[j];
      std::vector<Vec> periods;
      for (const Vec& h : sol.basis) {
        Vec p(ndelta, 0);
        for (std::size_t j = 0; j < chosen.size(); ++j) p[chosen[j]] = h[j];
        periods.push_back(std::move(p));
      }
      comps.emplace_back(std::move(base), std::move(periods));
    }
  }
  return comps;
}

}  // namespace

SemilinearSet runs_parikh_image(const Automaton& a,
                                const std::optional<std::vector<StateId>>& final_restriction,
                                const Caps& caps) {
  int n = a.num_states();
  int ndelta = a.num_transitions();
  std::vector<bool> is_fin(n, false);
  if (final_restriction.has_value()) {
    for (StateId f : *final_restriction) is_fin[f] = true;
  } else {
    for (StateId f : a.finals()) is_fin[f] = true;
  }

  // Trim to states both reachable from the initial state and co-reachable
  // to an accepting one.
  std::vector<bool> reach(n, false), coreach(n, false);
  {
    std::vector<StateId> queue{a.initial()};
    reach[a.initial()] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int id : a.out(queue[h])) {
        StateId to = a.transition(id).to;
        if (!reach[to]) {
          reach[to] = true;
          queue.push_back(to);
        }
      }
    std::vector<std::vector<int>> in(n);
    for (int id = 0; id < ndelta; ++id) in[a.transition(id).to].push_back(id);
    std::vector<StateId> bqueue;
    for (int q = 0; q < n; ++q)
      if (is_fin[q]) {
        coreach[q] = true;
        bqueue.push_back(q);
      }
    for (std::size_t h = 0; h < bqueue.size(); ++h)
      for (int id : in[bqueue[h]]) {
        StateId fr = a.transition(id).from;
        if (!coreach[fr]) {
          coreach[fr] = true;
          bqueue.push_back(fr);
        }
      }
  }
  std::vector<bool> alive_state(n), alive_edge(ndelta);
  for (int q = 0; q < n; ++q) alive_state[q] = reach[q] && coreach[q];
  for (int id = 0; id < ndelta; ++id) {
    const Transition& t = a.transition(id);
    alive_edge[id] = reach[t.from] && coreach[t.to];
  }
  SemilinearSet out(ndelta);
  if (!alive_state[a.initial()]) return out;

  SccResult scc = tarjan_scc(a, alive_state, alive_edge);
  std::vector<std::vector<int>> internal_edges(scc.count);
  std::vector<std::vector<int>> cross_from(scc.count);
  for (int id = 0; id < ndelta; ++id) {
    if (!alive_edge[id]) continue;
    const Transition& t = a.transition(id);
    int s1 = scc.id[t.from], s2 = scc.id[t.to];
    if (s1 == s2)
      internal_edges[s1].push_back(id);
    else
      cross_from[s1].push_back(id);
  }

  std::map<SegmentKey, std::vector<LinearSet>> memo;
  auto segments = [&](int s, StateId u, StateId v) -> const std::vector<LinearSet>& {
    SegmentKey key{s, u, v};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto comps = segment_components(a, internal_edges[s], u, v, caps);
    return memo.emplace(key, std::move(comps)).first->second;
  };

  // Per-SCC alive members (for final enumeration).
  std::vector<std::vector<StateId>> members(scc.count);
  for (int q = 0; q < n; ++q)
    if (alive_state[q]) members[scc.id[q]].push_back(q);

  Int budget = 0;

  // Depth-first over condensation plans: a plan fixes the crossing edges and
  // per-SCC entry/exit states; runs decompose uniquely this way.
  std::vector<SegmentKey> visits;
  Vec cross_counts(ndelta, 0);
  std::set<std::pair<Vec, std::vector<Vec>>> dedup;
  std::vector<LinearSet> collected;

  auto emit_plan = [&](const std::vector<SegmentKey>& plan_visits) {
    // Cartesian product of per-visit components, Minkowski-summed.
    std::vector<const std::vector<LinearSet>*> lists;
    for (const SegmentKey& k : plan_visits) {
      const auto& l = segments(k.scc, k.entry, k.exit);
      if (l.empty()) return;
      lists.push_back(&l);
    }
    std::vector<std::size_t> idx(lists.size(), 0);
    while (true) {
      Vec base = cross_counts;
      std::vector<Vec> periods;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        const LinearSet& c = (*lists[i])[idx[i]];
        vec_add_inplace(base, c.base);
        periods.insert(periods.end(), c.periods.begin(), c.periods.end());
      }
      LinearSet comp(std::move(base), std::move(periods));
      if (dedup.emplace(comp.base, comp.periods).second) collected.push_back(std::move(comp));
      if (++budget > caps.plan_cap)
        throw SupportEnumerationCapExceeded("run decomposition plan cap exceeded");
      std::size_t i = 0;
      while (i < lists.size() && ++idx[i] == lists[i]->size()) idx[i++] = 0;
      if (i == lists.size()) break;
    }
  };

  auto rec = [&](auto&& self, int s, StateId entry) -> void {
    if (++budget > caps.plan_cap)
      throw SupportEnumerationCapExceeded("run decomposition plan cap exceeded");
    for (StateId f : members[s]) {
      if (!is_fin[f]) continue;
      visits.push_back({s, entry, f});
      emit_plan(visits);
      visits.pop_back();
    }
    for (int id : cross_from[s]) {
      const Transition& t = a.transition(id);
      visits.push_back({s, entry, t.from});
      cross_counts[id] += 1;
      self(self, scc.id[t.to], t.to);
      cross_counts[id] -= 1;
      visits.pop_back();
    }
  };
  rec(rec, scc.id[a.initial()], a.initial());

  for (LinearSet& c : collected) out.add_component(std::move(c));
  return out;
}

}  // namespace parikh
