// SPDX-License-Identifier: Apache-2.0
//
// Brute-force oracles and fixture builders for the test suites. Everything
// here is independent of the implementation paths it checks: enumeration
// over bounded ranges, direct generator expansion, and exhaustive run walks.
#ifndef PARIKH_TEST_ORACLES_HPP
#define PARIKH_TEST_ORACLES_HPP

#include <functional>
#include <random>

#include "flatten.hpp"
#include "json_io.hpp"

namespace parikh::testing {

// All nonnegative x with coordinates <= bound and A.x = b.
std::vector<Vec> brute_force_solutions(const SignedMatrix& a, const std::vector<Int>& b,
                                       Int bound);

// Direct expansion of base + periods*, capped at coordinate bound.
std::vector<Vec> expand_linear(const LinearSet& c, Int bound);
std::vector<Vec> expand_semilinear(const SemilinearSet& s, Int bound);

// All words over sigma with length <= max_len, length-lexicographic.
std::vector<std::string> all_words(const std::vector<char>& sigma, int max_len);

// All accepting runs of length <= max_len, by exhaustive walk.
std::vector<Path> all_accepting_paths(const Automaton& a, int max_len);

// Two membership predicates agree on every word up to max_len.
bool languages_agree(const std::function<bool(const std::string&)>& lhs,
                     const std::function<bool(const std::string&)>& rhs,
                     const std::vector<char>& sigma, int max_len,
                     std::string* counterexample = nullptr);

// Random instances (deterministic in the seed).
Vec random_vec(std::mt19937& rng, int dim, Int max_entry);
SemilinearSet random_semilinear(std::mt19937& rng, int dim, int max_components, int max_periods,
                                Int max_entry);
BslLanguage random_bsl(std::mt19937& rng, int max_words, int max_word_len, int max_components,
                       Int max_entry);
// A deterministic automaton with a bounded language: a DAG skeleton with
// disjoint simple cycles.
Automaton random_bounded_dfa(std::mt19937& rng, int max_states);

// Epsilon-free CA with the same language as the canonical eps-CA of b: the
// socle cycle automaton with letter short-circuit edges and the iteration
// count transported through a preimage.
Ca bsl_to_ca(const BslLanguage& b);

// Acceptance fixtures.
Pa anbn_pa();                       // { a^n b^n }
Pa finite_pa();                     // { ab, aabb }
Pa astar_pa();                      // a*
Pa aibj_pa();                       // { a^i b^j : i <= j }

}  // namespace parikh::testing

#endif
