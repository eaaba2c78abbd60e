// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "dot.hpp"
#include "oracles.hpp"

using namespace parikh;
using namespace parikh::testing;

TEST_CASE("model JSON round trip preserves membership") {
  std::mt19937 rng(89);
  Pa pa = anbn_pa();
  Model m1 = pa;
  Model m2 = load_model(save_model(m1));
  CHECK(model_kind(m2) == ModelKind::Pa);

  BslLanguage bsl = random_bsl(rng, 3, 2, 2, 2);
  Model b1 = bsl;
  Model b2 = load_model(save_model(b1));
  CHECK(model_kind(b2) == ModelKind::Bsl);

  Ca epsca = canonical_epsca(bsl);
  Model c1 = epsca;
  Model c2 = load_model(save_model(c1));
  CHECK(model_kind(c2) == model_kind(c1));

  DetApa apa = epsca_to_detapa(canonical_epsca(BslLanguage(Socle({"a", "b"}), [] {
                                 SemilinearSet e(2);
                                 e.add_component(LinearSet({0, 0}, {{1, 1}}));
                                 return e;
                               }())),
                               0, true);
  Model d1 = apa;
  Model d2 = load_model(save_model(d1));
  CHECK(model_kind(d2) == ModelKind::DetApa);

  Cqdd cqdd = bounded_pa_to_cqdd(pa, Socle({"a", "b"}));
  Model q1 = cqdd;
  Model q2 = load_model(save_model(q1));
  CHECK(model_kind(q2) == ModelKind::Cqdd);

  for (const std::string& w : all_words({'a', 'b'}, 6)) {
    CHECK(model_accepts(m1, w) == model_accepts(m2, w));
    CHECK(model_accepts(b1, w) == model_accepts(b2, w));
    CHECK(model_accepts(c1, w) == model_accepts(c2, w));
    CHECK(model_accepts(d1, w) == model_accepts(d2, w));
    CHECK(model_accepts(q1, w) == model_accepts(q2, w));
  }
}

TEST_CASE("kind sniffing without a type tag") {
  // A CA written by hand, no type field.
  const char* text = R"({
    "states": 1, "alphabet": ["a"], "initial": 0, "finals": [0],
    "transitions": [{"from": 0, "label": "a", "to": 0}],
    "constraint": {"dim": 1, "components": [{"base": [0], "periods": [[1]]}]}
  })";
  Model m = load_model(text);
  CHECK(model_kind(m) == ModelKind::Ca);
  CHECK(model_accepts(m, "aaa"));

  // Empty label means epsilon and flips the kind.
  const char* eps = R"({
    "states": 2, "alphabet": ["a"], "initial": 0, "finals": [1],
    "transitions": [{"from": 0, "label": "", "to": 1}],
    "constraint": {"dim": 1, "components": [{"base": [1], "periods": []}]}
  })";
  CHECK(model_kind(load_model(eps)) == ModelKind::EpsCa);
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(load_model("not json"), ParseError);
  CHECK_THROWS_AS(load_model("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(load_model("{\"states\": 1}"), ParseError);
  // Constraint dimension must match the transition count.
  const char* bad = R"({
    "states": 1, "alphabet": ["a"], "initial": 0, "finals": [0],
    "transitions": [{"from": 0, "label": "a", "to": 0}],
    "constraint": {"dim": 2, "components": []}
  })";
  CHECK_THROWS_AS(load_model(bad), ParseError);
  // Out-of-range states too.
  const char* oob = R"({
    "states": 1, "alphabet": ["a"], "initial": 3, "finals": [0],
    "transitions": [], "constraint": {"dim": 0, "components": []}
  })";
  CHECK_THROWS_AS(load_model(oob), ParseError);
}

TEST_CASE("dot export is stable and kind aware") {
  Pa pa = anbn_pa();
  std::string dot = dot_model(Model(pa));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot == dot_model(Model(pa)));

  // Epsilon renders as the epsilon glyph.
  BslLanguage b(Socle({"a", "b"}), [] {
    SemilinearSet e(2);
    e.add_component(LinearSet({0, 0}, {{1, 1}}));
    return e;
  }());
  std::string eps_dot = dot_model(Model(canonical_epsca(b)));
  CHECK(eps_dot.find("\xce\xb5") != std::string::npos);

  // One subgraph per CQDD component.
  Cqdd cqdd = bounded_pa_to_cqdd(anbn_pa(), Socle({"a", "b"}));
  std::string cq = dot_model(Model(cqdd));
  std::size_t count = 0, at = 0;
  while ((at = cq.find("subgraph cluster_", at)) != std::string::npos) {
    ++count;
    at += 1;
  }
  CHECK(count == cqdd.components.size());
}
