#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rbg/corpus.hpp"
#include "rbg/enumerate.hpp"
#include "rbg/morphism.hpp"
#include "rbg/products.hpp"

using namespace rbg;

namespace {

std::vector<std::vector<elem_t>> images_of(const Census& c) {
  std::vector<std::vector<elem_t>> out;
  for (const auto& op : c.operators) out.push_back(op.images());
  return out;
}

}  // namespace

TEST_CASE("brute force against exhaustive map scan") {
  for (auto g : corpus_groups(1, 6)) {
    CAPTURE(g->name());
    CHECK(images_of(brute_force_enumerate(g)) == oracle::all_rb_operators(*g));
  }
  CHECK(brute_force_enumerate(cyclic(1)).operators.size() == 1);
  CHECK(brute_force_enumerate(cyclic(2)).operators.size() == 2);
  CHECK_THROWS_AS(brute_force_enumerate(cyclic(9)), Error);
}

TEST_CASE("graph strategies agree with brute force") {
  for (auto g : corpus_groups(1, 8)) {
    CAPTURE(g->name());
    auto brute = images_of(brute_force_enumerate(g));
    CHECK(images_of(graph_enumerate(g)) == brute);
    if (g->order() <= 8) CHECK(images_of(graph_enumerate(g, GraphStrategy::lattice)) == brute);
  }
  for (auto name : {"Z9", "Z10", "A4", "D6", "Z12"}) {
    auto g = corpus_group(name);
    CAPTURE(name);
    CHECK(images_of(graph_enumerate(g, GraphStrategy::goursat)) ==
          images_of(graph_enumerate(g, GraphStrategy::lattice)));
  }
}

TEST_CASE("graph round trip") {
  auto g = symmetric(3);
  auto gg = direct_product(g, g);
  for (const auto& op : brute_force_enumerate(g).operators) {
    auto pairs = graph_of(op);
    std::vector<elem_t> elems;
    for (auto p : pairs) elems.push_back(gg.encode({elem_t(p / 6), elem_t(p % 6)}));
    auto h = Subgroup::from_elements(gg.group, elems);
    CHECK(h.size() == 6);
    for (elem_t x = 0; x < 6; ++x) {
      if (x != g->identity()) CHECK_FALSE(h.contains(gg.encode({x, x})));
    }
  }
}

TEST_CASE("thread count does not change output") {
  auto g = corpus_group("A4");
  CHECK(images_of(graph_enumerate(g, GraphStrategy::goursat, 1)) ==
        images_of(graph_enumerate(g, GraphStrategy::goursat, 4)));
}

TEST_CASE("endomorphism oracles agree") {
  for (auto g : corpus_groups(1, 6)) CHECK(oracle::endomorphisms_by_generators(*g) == oracle::all_endomorphisms(*g));
}

TEST_CASE("abelian census equals endomorphisms") {
  for (auto g : corpus_groups(1, 8)) {
    if (!g->is_abelian()) continue;
    CAPTURE(g->name());
    CHECK(images_of(graph_enumerate(g)) == oracle::all_endomorphisms(*g));
  }
  for (auto g : corpus_groups(9, 16)) {
    if (!g->is_abelian()) continue;
    std::vector<std::vector<elem_t>> ends;
    for (const auto& e : endomorphisms(g)) ends.push_back(e.images);
    CHECK(images_of(graph_enumerate(g)) == ends);
  }
}

TEST_CASE("classification") {
  auto s3 = symmetric(3);
  auto c = brute_force_enumerate(s3);
  classify(c);
  std::size_t total = 0;
  for (const auto& cl : c.classes) total += cl.size();
  CHECK(total == c.operators.size());

  auto b0 = c.find(elementary(s3, Elementary::b0).images());
  auto bm = c.find(elementary(s3, Elementary::b_minus1).images());
  REQUIRE(b0);
  REQUIRE(bm);
  auto class_of = [&](std::size_t i) {
    for (std::size_t k = 0; k < c.classes.size(); ++k)
      if (std::count(c.classes[k].begin(), c.classes[k].end(), i)) return k;
    return std::size_t(-1);
  };
  CHECK(class_of(*b0) == class_of(*bm));
  CHECK(c.classes[class_of(*b0)].size() == 2);

  // splitting operators with kernel of order 3
  std::set<std::size_t> split3;
  for (std::size_t i = 0; i < c.operators.size(); ++i) {
    auto s = is_splitting(c.operators[i]);
    if (s.splitting && s.factorization->first.size() == 3) split3.insert(class_of(i));
  }
  CHECK(split3.size() == 1);

  auto auts = automorphisms(s3);
  for (const auto& cl : c.classes) {
    for (auto i : cl) CHECK(canonical_form(c.operators[i], auts) == c.operators[cl.front()].images());
  }

  auto z3 = brute_force_enumerate(cyclic(3));
  classify(z3);
  CHECK(z3.operators.size() == 3);
  // B0 and B-1 swap under tilde; tilde fixes the identity map since -2x = x in Z3.
  std::multiset<std::size_t> sizes;
  for (const auto& cl : z3.classes) sizes.insert(cl.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2});
}

TEST_CASE("elementary verdicts and splitting report") {
  CHECK(is_rb_elementary(brute_force_enumerate(cyclic(1))).elementary);
  auto z3 = is_rb_elementary(brute_force_enumerate(cyclic(3)));
  CHECK_FALSE(z3.elementary);
  CHECK(z3.non_elementary_count == 1);

  auto s3 = brute_force_enumerate(symmetric(3));
  auto rep = splitting_report(s3);
  CHECK(rep.matches_factorizations);
  CHECK(rep.entries.size() == exact_factorizations(symmetric(3)).size());

  CHECK_THROWS_AS(simple_group_check(s3), Error);
  auto z5 = simple_group_check(graph_enumerate(cyclic(5)));
  CHECK(z5.has_fixed_point_free_automorphism);
}
