// SPDX-License-Identifier: Apache-2.0
#ifndef PARIKH_FLATTEN_HPP
#define PARIKH_FLATTEN_HPP

#include "apa.hpp"

namespace parikh {

// One SLRE branch y0 x1* y1 ... xn* yn over transition ids.
struct Branch {
  Path head;  // y0, possibly empty
  struct Piece {
    Path loop;  // x_i, nonempty
    Path link;  // y_i, may be empty only for the last piece after normalization
  };
  std::vector<Piece> pieces;
};

struct Slre {
  std::vector<Branch> branches;
};

bool branch_matches(const Branch& b, const Path& word);
bool slre_matches(const Slre& s, const Path& word);

// Shortest z with w in z*.
std::string primitive_root(std::string_view w);
Path primitive_root_path(const Path& w);

// z with u, v in z* when it exists; its absence certifies (u+v)* unbounded.
std::optional<std::string> common_root(std::string_view u, std::string_view v);
std::optional<Path> common_root_path(const Path& u, const Path& v);

// For a trim deterministic automaton: a socle with L(A) within the socle
// product, or nullopt when some SCC carries two distinct cycles (L(A) is then
// unbounded).
std::optional<Socle> bounded_socle_of_regular(const Automaton& a,
                                              const Caps& caps = default_caps());

// SLRE for Run(A), branches normalized: links nonempty except possibly the
// last, and the first transitions of loop and link differ.
Slre runs_slre(const Automaton& a, const Caps& caps = default_caps());

// In-place Lemma-4 normalization of one branch (prefix rotation, loop merge
// on emptied links). Exposed for tests.
Branch normalize_branch(Branch b);

// A constrained automaton whose underlying automaton is flat and
// deterministic, checked at construction.
struct FlatDetCa {
  Ca ca;
  explicit FlatDetCa(Ca c);
};

// Finite union of flat deterministic CA over a common alphabet.
struct Cqdd {
  std::vector<FlatDetCa> components;
};

bool cqdd_accepts(const Cqdd& m, std::string_view w, const Caps& caps = default_caps());

// Minimal (p_i, r_i) with M_{x_i}^{p_i} = M_{x_i}^{p_i + r_i}, per piece.
std::vector<std::pair<Int, Int>> branch_periods(const Branch& b, const DetApa& host,
                                                Int cap = default_caps().monoid_cap);

// Lemma-5 flattening of one normalized branch of Run(host): flat DetCA whose
// union accepts {mu(pi) : pi in the branch language, (U(pi))(0) in C}.
// Components with an empty transported constraint are dropped.
std::vector<FlatDetCa> flatten_branch(const Branch& b, const DetApa& host,
                                      const Caps& caps = default_caps());

Cqdd detapa_to_cqdd(const DetApa& m, const Caps& caps = default_caps());

// Theorem-3 pipeline: iteration set extraction, canonical eps-CA, DetAPA
// simulation, flattening.
Cqdd bounded_pa_to_cqdd(const Pa& m, const Socle& s, const Caps& caps = default_caps());

}  // namespace parikh

#endif
