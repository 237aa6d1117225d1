#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "rbg/corpus.hpp"
#include "rbg/morphism.hpp"
#include "rbg/products.hpp"

using namespace rbg;

namespace {

// Subsets closed under multiplication, by bitmask scan. Only for tiny groups.
std::size_t brute_subgroup_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if ((mask >> b & 1) && !(mask >> g.mul(elem_t(a), elem_t(b)) & 1)) closed = false;
      }
    }
    count += closed;
  }
  return count;
}

std::size_t brute_aut_count(const GroupPtr& g) {
  std::vector<elem_t> p(g->order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    count += is_homomorphism(GroupMap{g, g, p});
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("table validation") {
  auto triv = FiniteGroup::from_cayley_table({{0}});
  CHECK(triv->order() == 1);
  auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2->identity() == 0);

  auto shifted = FiniteGroup::from_cayley_table({{1, 0}, {0, 1}});
  CHECK(shifted->identity() == 1);

  auto code_of = [](const Table& t) {
    try {
      FiniteGroup::from_cayley_table(t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_input;
  };
  CHECK(code_of({{0, 1}, {0, 1}}) == ErrorCode::not_latin_square);
  CHECK(code_of({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}) == ErrorCode::no_identity);
  // Latin square with identity 0 that is not associative.
  Table loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of(loop) == ErrorCode::not_associative);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 5}, {5, 0}}), Error);
}

TEST_CASE("permutation closure") {
  CHECK(FiniteGroup::from_permutations({{1, 0}})->order() == 2);
  auto s3 = symmetric(3);
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  CHECK(s3->label(1) == "s1");
  CHECK(s3->label(2) == "s2");
  CHECK(s3->mul(1, 2) == 3);
  CHECK(s3->label(5) == "s1s2s1");
  CHECK(s3->mul({1, 2, 1}) == s3->mul({2, 1, 2}));
  CHECK(alternating(5)->order() == 60);
  CHECK(symmetric(4)->order() == 24);
  CHECK(quaternion8()->order() == 8);
  CHECK(heisenberg(3)->order() == 27);
}

TEST_CASE("corpus groups validate") {
  for (const auto& name : corpus_names()) {
    auto g = corpus_group(name);
    CAPTURE(name);
    for (std::size_t x = 0; x < g->order(); ++x) {
      CHECK(g->mul(elem_t(x), g->inv(elem_t(x))) == g->identity());
    }
  }
  CHECK(corpus_groups(1, 8).size() == 14);
  CHECK_THROWS_AS(corpus_group("nope"), Error);
}

TEST_CASE("products") {
  auto z2 = cyclic(2);
  auto v4 = direct_product(z2, z2);
  CHECK(v4.group->order() == 4);
  CHECK(v4.group->is_abelian());
  for (std::size_t x = 0; x < 4; ++x) CHECK(v4.group->element_order(elem_t(x)) <= 2);
  CHECK(is_homomorphism(v4.projection(0)));
  CHECK(is_homomorphism(v4.injection(1)));

  auto s3 = symmetric(3);
  CHECK(direct_power(s3, 3).group->order() == 216);
  CHECK(is_isomorphic(direct_product(cyclic(1), s3).group, s3));

  auto z3 = cyclic(3);
  GroupMap id3 = identity_map(z3);
  GroupMap neg3{z3, z3, {0, 2, 1}};
  auto sd = semidirect_product(z3, z2, {id3, neg3});
  CHECK(is_isomorphic(sd.group, s3));
  CHECK(is_normal(sd.normal_subgroup()));
  auto trivial_action = semidirect_product(z3, z2, {id3, id3});
  CHECK(is_isomorphic(trivial_action.group, cyclic(6)));

  auto z5 = cyclic(5);
  auto z4 = cyclic(4);
  GroupMap times2{z5, z5, {0, 2, 4, 1, 3}};
  std::vector<GroupMap> act{identity_map(z5), times2, compose(times2, times2), compose(times2, compose(times2, times2))};
  auto f20 = semidirect_product(z5, z4, act);
  CHECK(f20.group->order() == 20);
  CHECK_FALSE(f20.group->is_abelian());

  try {
    semidirect_product(z3, z2, {neg3, neg3});
    FAIL("expected ActionNotHomomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::action_not_homomorphism);
  }

  auto w22 = wreath_product(z2, z2);
  CHECK(w22.group->order() == 8);
  CHECK(is_isomorphic(w22.group, dihedral(4)));
  CHECK(is_normal(w22.base_subgroup()));
  CHECK(wreath_product(z2, z3).group->order() == 24);
  CHECK(is_isomorphic(wreath_product(s3, cyclic(1)).group, s3));
}

TEST_CASE("subgroups against subset scan") {
  for (auto g : corpus_groups(1, 8)) {
    CAPTURE(g->name());
    auto subs = all_subgroups(g);
    CHECK(subs.size() == brute_subgroup_count(*g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
  CHECK(all_subgroups(cyclic(4)).size() == 3);
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(alternating(5)).size() == 59);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(subgroup_generated(symmetric(3), {}).is_trivial());
}

TEST_CASE("structural queries") {
  auto s3 = symmetric(3);
  CHECK(center(s3).is_trivial());
  auto d4 = dihedral(4);
  auto lcs = lower_central_series(d4);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[1].size() == 2);
  CHECK(lcs[1].contains(d4->pow(1, 2)));
  CHECK(lcs[2].is_trivial());
  for (const auto& t : lcs) CHECK(is_normal(t));

  CHECK(is_simple(alternating(5)));
  CHECK_FALSE(is_simple(symmetric(4)));
  CHECK(is_simple(cyclic(5)));
  // Oracle: no proper nontrivial normal subgroup in the full lattice.
  std::size_t normals = 0;
  for (const auto& s : all_subgroups(alternating(5))) normals += is_normal(s);
  CHECK(normals == 2);

  auto s3_lcs = lower_central_series(s3);
  REQUIRE(s3_lcs.size() == 2);
  CHECK(s3_lcs[1].size() == 3);

  auto a3 = lcs[1];
  auto q = quotient(d4, a3);
  CHECK(q.group->order() == 4);
  CHECK(is_homomorphism(q.projection));
  try {
    quotient(s3, subgroup_generated(s3, std::vector<elem_t>{1}));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_normal);
  }
}

TEST_CASE("automorphisms and isomorphisms") {
  CHECK(automorphisms(cyclic(2)).size() == 1);
  CHECK(automorphisms(symmetric(3)).size() == brute_aut_count(symmetric(3)));
  CHECK(automorphisms(symmetric(3)).size() == 6);
  CHECK(automorphisms(dihedral(4)).size() == brute_aut_count(dihedral(4)));
  CHECK(automorphisms(quaternion8()).size() == 24);
  CHECK(automorphisms(alternating(5)).size() == 120);
  CHECK(automorphisms(direct_power(cyclic(2), 3).group).size() == 168);

  auto z3 = cyclic(3);
  CHECK(fixed_point_free(GroupMap{z3, z3, {0, 2, 1}}));
  auto z2 = cyclic(2);
  CHECK_FALSE(fixed_point_free(GroupMap{z2, z2, {0, 1}}));

  // Aut(D4) closed under composition.
  auto d4 = dihedral(4);
  auto auts = automorphisms(d4);
  for (const auto& a : auts) {
    for (const auto& b : auts) {
      CHECK(std::find(auts.begin(), auts.end(), compose(a, b)) != auts.end());
    }
  }
  CHECK_FALSE(is_isomorphic(d4, quaternion8()));
  CHECK_FALSE(is_isomorphic(cyclic(4), direct_power(cyclic(2), 2).group));
  CHECK(is_isomorphic(opposite(*symmetric(3)), symmetric(3)));
  CHECK(endomorphisms(cyclic(4)).size() == 4);
}

TEST_CASE("exact factorizations") {
  auto z5 = cyclic(5);
  CHECK(exact_factorizations(z5).size() == 2);

  auto s3 = symmetric(3);
  auto facts = exact_factorizations(s3);
  auto a3 = subgroup_generated(s3, std::vector<elem_t>{3});
  auto s1 = subgroup_generated(s3, std::vector<elem_t>{1});
  CHECK(std::find(facts.begin(), facts.end(), std::make_pair(a3, s1)) != facts.end());
  for (const auto& [h, l] : facts) {
    std::vector<int> hits(s3->order());
    for (elem_t x : h.elements())
      for (elem_t y : l.elements()) ++hits[s3->mul(x, y)];
    for (int c : hits) CHECK(c == 1);
  }

  auto a5 = alternating(5);
  bool found = false;
  for (const auto& [h, l] : exact_factorizations(a5)) found = found || (h.size() == 12 && l.size() == 5);
  CHECK(found);
}

TEST_CASE("k-abelian") {
  CHECK(is_k_abelian(*cyclic(6), 3));
  std::pair<elem_t, elem_t> w;
  CHECK_FALSE(is_k_abelian(*symmetric(3), 2, &w));
  CHECK(is_k_abelian(*symmetric(3), 1));
}

TEST_CASE("content hash") {
  CHECK(symmetric(3)->content_hash() == symmetric(3)->content_hash());
  CHECK(symmetric(3)->content_hash() != cyclic(6)->content_hash());
  CHECK(cyclic(2)->content_hash().rfind("fnv1a64:", 0) == 0);
}
