// SPDX-License-Identifier: Apache-2.0
#include "flatten.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace parikh {

namespace {

template <typename Seq>
Seq generic_primitive_root(const Seq& w) {
  std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i)
      if (w[i] != w[i - len]) ok = false;
    if (ok) return Seq(w.begin(), w.begin() + len);
  }
  return w;
}

}  // namespace

std::string primitive_root(std::string_view w) {
  if (w.empty()) throw DimensionError("primitive root of the empty word");
  return generic_primitive_root(std::string(w));
}

Path primitive_root_path(const Path& w) {
  if (w.empty()) throw DimensionError("primitive root of the empty path");
  return generic_primitive_root(w);
}

std::optional<std::string> common_root(std::string_view u, std::string_view v) {
  if (u.empty() || v.empty()) throw DimensionError("common root of an empty word");
  std::string r = primitive_root(u);
  if (primitive_root(v) == r) return r;
  return std::nullopt;
}

std::optional<Path> common_root_path(const Path& u, const Path& v) {
  if (u.empty() || v.empty()) throw DimensionError("common root of an empty path");
  Path r = primitive_root_path(u);
  if (primitive_root_path(v) == r) return r;
  return std::nullopt;
}

namespace {

bool starts_with(const Path& word, std::size_t pos, const Path& prefix) {
  if (pos + prefix.size() > word.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (word[pos + i] != prefix[i]) return false;
  return true;
}

}  // namespace

bool branch_matches(const Branch& b, const Path& word) {
  if (!starts_with(word, 0, b.head)) return false;
  std::set<std::pair<std::size_t, std::size_t>> failed;
  auto rec = [&](auto&& self, std::size_t piece, std::size_t pos) -> bool {
    if (piece == b.pieces.size()) return pos == word.size();
    if (failed.count({piece, pos})) return false;
    const Branch::Piece& p = b.pieces[piece];
    std::size_t at = pos;
    while (true) {
      if (starts_with(word, at, p.link) && self(self, piece + 1, at + p.link.size())) return true;
      if (!starts_with(word, at, p.loop)) break;
      at += p.loop.size();
    }
    failed.insert({piece, pos});
    return false;
  };
  return rec(rec, 0, b.head.size());
}

bool slre_matches(const Slre& s, const Path& word) {
  for (const Branch& b : s.branches)
    if (branch_matches(b, word)) return true;
  return false;
}

namespace {

// Cycle structure of a trimmed automaton whose SCCs are simple cycles.
struct CycleStructure {
  std::vector<bool> alive_state, alive_edge;
  std::vector<int> scc;  // -1 for dead states
  int scc_count = 0;
  std::vector<bool> cyclic;
  std::vector<int> next_edge;       // per state: the unique in-SCC out-edge, -1
  std::vector<std::vector<int>> cross_from;  // crossing edges per SCC
  std::vector<std::vector<StateId>> members;
  bool bounded = true;
};

CycleStructure analyze_cycles(const Automaton& a) {
  int n = a.num_states();
  int nd = a.num_transitions();
  CycleStructure cs;
  cs.alive_state.assign(n, false);
  cs.alive_edge.assign(nd, false);

  std::vector<bool> reach(n, false), coreach(n, false);
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
  for (int id = 0; id < nd; ++id) in[a.transition(id).to].push_back(id);
  std::vector<StateId> bqueue;
  for (StateId f : a.finals()) {
    coreach[f] = true;
    bqueue.push_back(f);
  }
  for (std::size_t h = 0; h < bqueue.size(); ++h)
    for (int id : in[bqueue[h]]) {
      StateId fr = a.transition(id).from;
      if (!coreach[fr]) {
        coreach[fr] = true;
        bqueue.push_back(fr);
      }
    }
  for (int q = 0; q < n; ++q) cs.alive_state[q] = reach[q] && coreach[q];
  for (int id = 0; id < nd; ++id) {
    const Transition& t = a.transition(id);
    cs.alive_edge[id] = reach[t.from] && coreach[t.to];
  }

  // Tarjan over the alive subgraph.
  cs.scc.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  auto strongconnect = [&](auto&& self, int v) -> void {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int id : a.out(v)) {
      if (!cs.alive_edge[id]) continue;
      int w = a.transition(id).to;
      if (!cs.alive_state[w]) continue;
      if (index[w] < 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        cs.scc[w] = cs.scc_count;
        if (w == v) break;
      }
      ++cs.scc_count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (cs.alive_state[v] && index[v] < 0) strongconnect(strongconnect, v);

  cs.cyclic.assign(cs.scc_count, false);
  cs.next_edge.assign(n, -1);
  cs.cross_from.assign(cs.scc_count, {});
  cs.members.assign(cs.scc_count, {});
  for (int q = 0; q < n; ++q)
    if (cs.alive_state[q]) cs.members[cs.scc[q]].push_back(q);
  std::vector<int> internal_out(n, 0);
  for (int id = 0; id < nd; ++id) {
    if (!cs.alive_edge[id]) continue;
    const Transition& t = a.transition(id);
    if (cs.scc[t.from] == cs.scc[t.to]) {
      cs.cyclic[cs.scc[t.from]] = true;
      ++internal_out[t.from];
      cs.next_edge[t.from] = id;
    } else {
      cs.cross_from[cs.scc[t.from]].push_back(id);
    }
  }
  for (int q = 0; q < n; ++q)
    if (cs.alive_state[q] && cs.cyclic[cs.scc[q]] && internal_out[q] != 1) cs.bounded = false;
  return cs;
}

// Branches of Run(A) at the transition level: per condensation path, the
// entry-state cycle rotations (loops) and the in-SCC walks plus crossing
// edges (links).
struct RawElement {
  bool is_loop;
  Path path;
};

std::vector<std::vector<RawElement>> enumerate_raw_branches(const Automaton& a,
                                                            const CycleStructure& cs,
                                                            Int plan_cap) {
  std::vector<std::vector<RawElement>> out;
  if (!cs.alive_state[a.initial()]) return out;

  auto rotation = [&](StateId u) {
    Path p;
    StateId cur = u;
    do {
      int id = cs.next_edge[cur];
      p.push_back(id);
      cur = a.transition(id).to;
    } while (cur != u);
    return p;
  };
  auto walk = [&](StateId u, StateId v) {
    Path p;
    StateId cur = u;
    while (cur != v) {
      int id = cs.next_edge[cur];
      p.push_back(id);
      cur = a.transition(id).to;
    }
    return p;
  };

  std::vector<RawElement> current;
  Int budget = 0;
  auto rec = [&](auto&& self, int scc, StateId entry) -> void {
    if (++budget > plan_cap) throw SupportEnumerationCapExceeded("branch enumeration cap exceeded");
    std::size_t mark = current.size();
    if (cs.cyclic[scc]) current.push_back({true, rotation(entry)});
    for (StateId f : cs.members[scc]) {
      if (!a.is_final(f)) continue;
      std::size_t mark2 = current.size();
      if (cs.cyclic[scc]) {
        current.push_back({false, walk(entry, f)});
      } else {
        // Trivial SCC: entry == f, empty tail.
        current.push_back({false, {}});
      }
      out.push_back(current);
      current.resize(mark2);
    }
    for (int id : cs.cross_from[scc]) {
      const Transition& t = a.transition(id);
      Path link = cs.cyclic[scc] ? walk(entry, t.from) : Path{};
      link.push_back(id);
      current.push_back({false, std::move(link)});
      self(self, cs.scc[t.to], t.to);
      current.pop_back();
    }
    current.resize(mark);
  };
  rec(rec, cs.scc[a.initial()], a.initial());
  return out;
}

Branch assemble_branch(const std::vector<RawElement>& elements) {
  Branch b;
  Path pending;
  for (const RawElement& e : elements) {
    if (e.is_loop) {
      if (b.pieces.empty())
        b.head = pending;
      else
        b.pieces.back().link = pending;
      pending.clear();
      b.pieces.push_back({e.path, {}});
    } else {
      pending.insert(pending.end(), e.path.begin(), e.path.end());
    }
  }
  if (b.pieces.empty())
    b.head = pending;
  else
    b.pieces.back().link = pending;
  return b;
}

std::size_t common_prefix_len(const Path& a, const Path& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

Branch normalize_branch(Branch b) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = static_cast<int>(b.pieces.size()) - 1; i >= 0; --i) {
      Branch::Piece& piece = b.pieces[i];
      while (true) {
        std::size_t k = common_prefix_len(piece.loop, piece.link);
        if (k == 0) break;
        Path zeta(piece.loop.begin(), piece.loop.begin() + k);
        Path& prev = i == 0 ? b.head : b.pieces[i - 1].link;
        prev.insert(prev.end(), zeta.begin(), zeta.end());
        Path rotated(piece.loop.begin() + k, piece.loop.end());
        rotated.insert(rotated.end(), zeta.begin(), zeta.end());
        piece.loop = std::move(rotated);
        piece.link.erase(piece.link.begin(), piece.link.begin() + k);
        changed = true;
      }
    }
    // Merge adjacent loops when a link emptied; a missing common root would
    // certify Run(A) unbounded.
    for (std::size_t i = 0; i + 1 < b.pieces.size(); ++i) {
      if (!b.pieces[i].link.empty()) continue;
      std::optional<Path> z = common_root_path(b.pieces[i].loop, b.pieces[i + 1].loop);
      if (!z) throw NotBoundedError("adjacent loops without a common root");
      b.pieces[i].loop = *z;
      b.pieces[i].link = std::move(b.pieces[i + 1].link);
      b.pieces.erase(b.pieces.begin() + i + 1);
      changed = true;
      break;
    }
  }
  return b;
}

std::optional<Socle> bounded_socle_of_regular(const Automaton& a, const Caps& caps) {
  if (!is_deterministic(a)) throw DimensionError("bounded_socle_of_regular needs a DFA");
  CycleStructure cs = analyze_cycles(a);
  if (!cs.bounded) return std::nullopt;
  std::vector<std::string> words;
  for (const auto& raw : enumerate_raw_branches(a, cs, caps.plan_cap)) {
    for (const RawElement& e : raw) {
      std::string w = path_label(a, e.path);
      if (w.empty()) continue;
      if (!words.empty() && words.back() == w) continue;  // w* w* = w*
      words.push_back(std::move(w));
    }
  }
  if (words.empty()) {
    // Empty or {epsilon} language: any single-word socle works.
    words.push_back(a.alphabet().empty() ? "a" : std::string(1, a.alphabet()[0]));
  }
  return Socle(std::move(words));
}

Slre runs_slre(const Automaton& a, const Caps& caps) {
  if (!is_deterministic(a)) throw DimensionError("runs_slre needs a DFA");
  CycleStructure cs = analyze_cycles(a);
  if (!cs.bounded) throw NotBoundedError("Run(A) is not bounded");
  Slre out;
  for (const auto& raw : enumerate_raw_branches(a, cs, caps.plan_cap))
    out.branches.push_back(normalize_branch(assemble_branch(raw)));
  return out;
}

FlatDetCa::FlatDetCa(Ca c) : ca(std::move(c)) {
  if (!is_deterministic(ca.automaton)) throw DimensionError("component automaton not deterministic");
  if (!is_flat(ca.automaton)) throw DimensionError("component automaton not flat");
}

bool cqdd_accepts(const Cqdd& m, std::string_view w, const Caps& caps) {
  for (const FlatDetCa& c : m.components)
    if (ca_accepts(c.ca, w, caps)) return true;
  return false;
}

namespace {

AffineFn path_fn(const DetApa& host, const Path& p) {
  AffineFn acc = AffineFn::identity(host.dim());
  for (int id : p) acc = affine_compose(acc, host.affine[id]);
  return acc;
}

IntMatrix matrix_power(const IntMatrix& m, Int k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (Int i = 0; i < k; ++i) r = m.mul(r);
  return r;
}

}  // namespace

std::vector<std::pair<Int, Int>> branch_periods(const Branch& b, const DetApa& host, Int cap) {
  std::vector<std::pair<Int, Int>> out;
  for (const Branch::Piece& piece : b.pieces) {
    IntMatrix m = path_fn(host, piece.loop).m;
    std::unordered_map<IntMatrix, Int, IntMatrixHash> seen;
    IntMatrix power = m;  // m^1
    Int p = -1, r = -1;
    for (Int j = 1; j <= cap; ++j) {
      auto it = seen.find(power);
      if (it != seen.end()) {
        p = it->second;
        r = j - it->second;
        break;
      }
      seen.emplace(power, j);
      power = m.mul(power);
    }
    if (p < 0) throw MonoidCapExceeded("loop matrix has no repeating power within the cap");
    out.emplace_back(p, r);
  }
  return out;
}

std::vector<FlatDetCa> flatten_branch(const Branch& b, const DetApa& host, const Caps& caps) {
  const Automaton& a = host.automaton;
  int d = host.dim();
  int n = static_cast<int>(b.pieces.size());
  std::vector<std::pair<Int, Int>> pr = branch_periods(b, host, caps.monoid_cap);

  std::vector<AffineFn> loop_fn, link_fn;
  for (const Branch::Piece& piece : b.pieces) {
    loop_fn.push_back(path_fn(host, piece.loop));
    link_fn.push_back(path_fn(host, piece.link));
  }
  AffineFn head_fn = path_fn(host, b.head);

  std::vector<FlatDetCa> out;
  std::vector<Int> exps(n, 0);
  auto emit = [&]() {
    // Suffix matrices with the base exponents: tail[i] = M of
    // x_{i+1}^{a_{i+1}} y_{i+1} ... x_n^{a_n} y_n, after[i] = M of the suffix
    // starting at y_i.
    std::vector<IntMatrix> tail(n + 1), after(n + 1);
    tail[n] = IntMatrix::identity(d);
    for (int i = n - 1; i >= 0; --i) {
      after[i] = tail[i + 1].mul(link_fn[i].m);
      tail[i] = after[i].mul(matrix_power(loop_fn[i].m, exps[i]));
    }

    // Word-level edges (label word, vector); empty-labeled edges never arise.
    struct Edge {
      int from, to;
      std::string word;
      Vec vec;
    };
    std::vector<Edge> edges;
    int next_node = 0;
    auto fresh = [&]() { return next_node++; };

    int start = fresh();
    int cur = start;
    if (!b.head.empty()) {
      int nx = fresh();
      edges.push_back({cur, nx, path_label(a, b.head), tail[0].apply(head_fn.v)});
      cur = nx;
    }
    for (int i = 0; i < n; ++i) {
      const Branch::Piece& piece = b.pieces[i];
      IntMatrix mpow = IntMatrix::identity(d);
      Vec entry(d, 0), loopvec(d, 0);
      for (Int l = 0; l < exps[i] + pr[i].second; ++l) {
        // v_i(l) = M_{suffix starting at the link} . M^l . v_loop
        Vec vl = after[i].apply(mpow.apply(loop_fn[i].v));
        if (l < exps[i])
          vec_add_inplace(entry, vl);
        else
          vec_add_inplace(loopvec, vl);
        mpow = loop_fn[i].m.mul(mpow);
      }
      if (exps[i] > 0) {
        int nx = fresh();
        std::string word;
        std::string one = path_label(a, piece.loop);
        for (Int k = 0; k < exps[i]; ++k) word += one;
        edges.push_back({cur, nx, std::move(word), std::move(entry)});
        cur = nx;
      }
      if (exps[i] >= pr[i].first) {
        std::string word;
        std::string one = path_label(a, piece.loop);
        for (Int k = 0; k < pr[i].second; ++k) word += one;
        edges.push_back({cur, cur, std::move(word), std::move(loopvec)});
      }
      if (!piece.link.empty()) {
        int nx = fresh();
        edges.push_back({cur, nx, path_label(a, piece.link), tail[i + 1].apply(link_fn[i].v)});
        cur = nx;
      }
    }
    int final_state = cur;

    // Expand word edges into letter transitions, vector on the first letter.
    std::vector<Transition> transitions;
    std::vector<Vec> tvec;
    for (const Edge& e : edges) {
      int from = e.from;
      for (std::size_t i = 0; i < e.word.size(); ++i) {
        int to = i + 1 == e.word.size() ? e.to : fresh();
        transitions.push_back({from, e.word[i], to});
        tvec.push_back(i == 0 ? e.vec : Vec(d, 0));
        from = to;
      }
    }
    Automaton flat(next_node, a.alphabet(), start, {final_state}, std::move(transitions), false);
    IntMatrix w(d, flat.num_transitions());
    for (int t = 0; t < flat.num_transitions(); ++t)
      for (int i = 0; i < d; ++i) w.at(i, t) = tvec[t][i];
    SemilinearSet c = sl_linear_preimage(host.constraint, w, flat.num_transitions(), caps);
    if (c.is_empty()) return;
    out.emplace_back(Ca(std::move(flat), std::move(c)));
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (Int v = 0; v < pr[i].first + pr[i].second; ++v) {
      exps[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Cqdd detapa_to_cqdd(const DetApa& m, const Caps& caps) {
  if (!bounded_socle_of_regular(m.automaton, caps).has_value())
    throw NotBoundedError("DetAPA language is not bounded");
  monoid_closure(m, caps.monoid_cap);  // finiteness guard
  Slre slre = runs_slre(m.automaton, caps);
  Cqdd out;
  for (const Branch& b : slre.branches)
    for (FlatDetCa& c : flatten_branch(b, m, caps)) out.components.push_back(std::move(c));
  return out;
}

Cqdd bounded_pa_to_cqdd(const Pa& m, const Socle& s, const Caps& caps) {
  SemilinearSet e = pa_iteration_set(m, s, caps);  // throws SocleViolation
  BslLanguage b(s, std::move(e));
  Ca epsca = canonical_epsca(b, caps);
  DetApa apa = epsca_to_detapa(epsca, 0, /*trusted=*/true, caps);
  return detapa_to_cqdd(apa, caps);
}

}  // namespace parikh
