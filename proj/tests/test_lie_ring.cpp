#include "doctest.h"
#include "rbg/constructions.hpp"
#include "rbg/corpus.hpp"
#include "rbg/enumerate.hpp"
#include "rbg/lie_ring.hpp"
#include "rbg/morphism.hpp"

using namespace rbg;

TEST_CASE("layers") {
  auto z6 = cyclic(6);
  auto l = associated_lie_ring(z6);
  REQUIRE(l.layers.size() == 1);
  CHECK(l.layers[0].size() == 6);
  CHECK(l.bracket_nonzeros() == 0);

  auto d4 = associated_lie_ring(dihedral(4));
  REQUIRE(d4.layers.size() == 2);
  CHECK(is_isomorphic(d4.layers[0].quotient.group, corpus_group("Z2xZ2")));
  CHECK(d4.layers[1].size() == 2);
  CHECK(d4.bracket_nonzeros() > 0);
  // The bracket of the two generators' cosets is the nonzero element of layer 2.
  const auto& g = *d4.group;
  elem_t a = g.generators()[0], b = g.generators()[1];
  auto br = d4.bracket(0, d4.layers[0].coset(b), 0, d4.layers[0].coset(a));
  REQUIRE(br);
  CHECK(*br == d4.layers[1].coset(g.commutator(b, a)));
  CHECK(*br != d4.layers[1].zero());

  auto heis = associated_lie_ring(heisenberg(3));
  REQUIRE(heis.layers.size() == 2);
  CHECK(heis.layers[0].size() == 9);
  CHECK(heis.layers[1].size() == 3);

  auto s3 = associated_lie_ring(symmetric(3));
  REQUIRE(s3.layers.size() == 1);
  CHECK(s3.layers[0].size() == 2);
  CHECK(associated_lie_ring(alternating(5)).layers.empty());
  CHECK(associated_lie_ring(cyclic(1)).layers.empty());

  // Layer sizes multiply to |G| / |last term|.
  for (const auto& name : corpus_names()) {
    auto gr = corpus_group(name);
    if (gr->order() > 64) continue;
    auto lr = associated_lie_ring(gr);
    std::size_t prod = 1;
    for (const auto& L : lr.layers) prod *= L.size();
    CHECK(prod * lr.series.back().size() == gr->order());
  }
}

TEST_CASE("elementary Lie operators") {
  for (auto g : {dihedral(4), quaternion8(), heisenberg(3), cyclic(4)}) {
    auto l = associated_lie_ring(g);
    CHECK(verify_lie_rb(l, LieRBOperator::zero(l)).valid);
    CHECK(verify_lie_rb(l, LieRBOperator::minus_identity(l)).valid);
    auto r = induced_rb(l, elementary(g, Elementary::b_minus1));
    REQUIRE(r.op);
    CHECK(*r.op == LieRBOperator::minus_identity(l));
    CHECK(*induced_rb(l, elementary(g, Elementary::b0)).op == LieRBOperator::zero(l));
  }
  // The identity satisfies [x,y] = 3[x,y], which fails once the bracket
  // lands in a layer of exponent 3.
  auto l = associated_lie_ring(heisenberg(3));
  LieRBOperator id;
  for (const auto& L : l.layers) {
    std::vector<elem_t> m(L.size());
    for (elem_t a = 0; a < L.size(); ++a) m[a] = a;
    id.maps.push_back(m);
  }
  auto v = verify_lie_rb(l, id);
  CHECK(v.additive);
  CHECK_FALSE(v.valid);
  CHECK(v.witness);
}

TEST_CASE("central conjugation induces minus identity") {
  for (auto g : {dihedral(4), quaternion8(), heisenberg(3)}) {
    auto l = associated_lie_ring(g);
    for (elem_t x = 0; x < g->order(); ++x) {
      auto b = central_conjugation(g, x);
      REQUIRE(b.op);
      auto r = induced_rb(l, *b.op);
      REQUIRE(r.op);
      CHECK(*r.op == LieRBOperator::minus_identity(l));
      CHECK(verify_lie_rb(l, *r.op).valid);
    }
  }
}

TEST_CASE("induced operators across the corpus") {
  std::size_t induced = 0, refused = 0;
  auto groups = corpus_groups(1, 16);
  groups.push_back(corpus_group("S4"));
  for (auto g : groups) {
    CAPTURE(g->name());
    auto l = associated_lie_ring(g);
    for (const auto& op : graph_enumerate(g).operators) {
      auto r = induced_rb(l, op);
      if (!r.op) {
        ++refused;
        REQUIRE(r.witness);
        auto [n, x] = *r.witness;
        CHECK(l.series[n - 1].contains(x));
        CHECK_FALSE(l.series[n - 1].contains(op(x)));
        continue;
      }
      ++induced;
      CHECK(verify_lie_rb(l, *r.op).valid);
    }
  }
  CHECK(induced > 0);
  CHECK(refused > 0);
}
