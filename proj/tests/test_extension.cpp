#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rbg/corpus.hpp"
#include "rbg/derived.hpp"
#include "rbg/enumerate.hpp"
#include "rbg/extension.hpp"
#include "rbg/morphism.hpp"

using namespace rbg;

namespace {

// S3: e=0 s1=1 s2=2 s1s2=3 s2s1=4 s1s2s1=5
ExtensionProblem inversion() { return ExtensionProblem::make(symmetric(3), {1, 2}, {1, 2}); }
ExtensionProblem three_gens() { return ExtensionProblem::make(symmetric(3), {1, 2, 5}, {1, 2, 4}); }
ExtensionProblem half_trivial() { return ExtensionProblem::make(symmetric(3), {1, 2}, {1, 0}); }

BarWord word(std::vector<std::pair<std::size_t, long long>> l) { return BarWord{std::move(l)}.normalize(); }

// Every reduced word of total length <= max_len.
void all_words(std::size_t gens, std::size_t max_len, std::vector<BarWord>& out) {
  std::vector<BarWord> frontier{BarWord{}};
  out.push_back(BarWord{});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<BarWord> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < gens; ++i)
        for (long long k : {1LL, -1LL}) {
          if (!w.letters.empty() && w.letters.back().first == i && w.letters.back().second * k < 0) continue;
          BarWord v = w;
          v.letters.emplace_back(i, k);
          v.normalize();
          next.push_back(v);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
}

// Bounded search for (cond) violations over all words up to length max_len.
bool bounded_violation(const ExtensionProblem& p, std::size_t max_len) {
  std::vector<BarWord> ws;
  all_words(p.generators.size(), max_len, ws);
  std::map<elem_t, elem_t> seen;
  for (const auto& w : ws) {
    elem_t pi = pi_eval(p, w), b = beta_bar_eval(p, w);
    auto [it, fresh] = seen.emplace(pi, b);
    if (!fresh && it->second != b) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("problem validation") {
  auto s3 = symmetric(3);
  CHECK_THROWS_AS(ExtensionProblem::make(s3, {1}, {1}), Error);
  CHECK_THROWS_AS(ExtensionProblem::make(s3, {1, 2}, {1}), Error);
  CHECK_THROWS_AS(ExtensionProblem::make(s3, {1, 9}, {1, 1}), Error);
  CHECK_NOTHROW(inversion());
}

TEST_CASE("pi and beta evaluation") {
  auto p = inversion();
  const auto& g = *p.group;
  CHECK(pi_eval(p, BarWord{}) == g.identity());
  CHECK(beta_bar_eval(p, BarWord{}) == g.identity());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(pi_eval(p, word({{i, 1}})) == p.generators[i]);
    CHECK(beta_bar_eval(p, word({{i, 1}})) == p.images[i]);
  }
  // pi(t1^k1 o t2^l1 o ... ) = s2^-ls s1^-ks ... s2^-l1 s1^-k1
  for (const auto& w : random_words(p, 200, 6, 5, 7)) {
    elem_t expect = g.identity();
    for (const auto& [i, k] : w.letters) expect = g.mul(g.pow(p.generators[i], -k), expect);
    CHECK(pi_eval(p, w) == expect);
  }
  auto q = three_gens();
  const auto& s = *q.group;
  CHECK(pi_eval(q, word({{0, 2}})) == s.identity());
  CHECK(pi_eval(q, word({{1, 2}})) == s.identity());
  CHECK(pi_eval(q, word({{2, 1}, {0, 1}})) == s.identity());
  CHECK(pi_eval(q, word({{0, 1}, {1, 1}, {0, 1}})) == 5);
  CHECK(pi_eval(q, word({{1, 1}, {0, 1}, {1, 1}})) == 5);
  CHECK(pi_eval(q, word({{0, 1}, {1, 1}})) == 4);
  CHECK(pi_eval(q, word({{1, 1}, {2, 1}})) == 4);
  CHECK(pi_eval(q, word({{2, 2}})) == 4);
  CHECK(pi_eval(q, word({{1, 1}, {0, 1}})) == 3);
  CHECK(pi_eval(q, word({{2, 1}, {1, 1}})) == 3);
  CHECK(pi_eval(q, word({{0, 1}, {2, 1}})) == 3);
}

TEST_CASE("operator identities on words") {
  for (const auto& p : {inversion(), three_gens(), half_trivial()}) {
    auto r = word_identity_selftest(p, random_words(p, 40, 8, 5, 11));
    CHECK(r.holds);
    CHECK(r.failures.empty());
    CHECK(word_identity_selftest(p, {}).holds);
  }
  auto heis = heisenberg(3);
  auto p = ExtensionProblem::make(heis, {9, 1}, {4, 13});
  CHECK(word_identity_selftest(p, random_words(p, 30, 8, 5, 3)).holds);
}

TEST_CASE("cond check") {
  CHECK(cond_check(inversion()).holds);
  CHECK(cond_check(half_trivial()).holds);
  auto q = three_gens();
  auto r = cond_check(q);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  auto [w1, w2] = *r.witness;
  CHECK(pi_eval(q, w1) == pi_eval(q, w2));
  CHECK(beta_bar_eval(q, w1) != beta_bar_eval(q, w2));
  // t1∘t1 against t3∘t1 is another obstruction.
  auto a = word({{0, 1}, {0, 1}}), b = word({{2, 1}, {0, 1}});
  CHECK(pi_eval(q, a) == pi_eval(q, b));
  CHECK(beta_bar_eval(q, a) == q.group->identity());
  CHECK(beta_bar_eval(q, b) == 2);

  // Every beta on {s1, s2} and on {s1, s2, s1s2s1}: closure verdict matches
  // the bounded word search.
  auto s3 = symmetric(3);
  for (elem_t u = 0; u < 6; ++u)
    for (elem_t v = 0; v < 6; ++v) {
      auto p = ExtensionProblem::make(s3, {1, 2}, {u, v});
      auto c = cond_check(p);
      CHECK(c.holds == !bounded_violation(p, 6));
      if (!c.holds) {
        CHECK(pi_eval(p, c.witness->first) == pi_eval(p, c.witness->second));
        CHECK(beta_bar_eval(p, c.witness->first) != beta_bar_eval(p, c.witness->second));
      }
    }
  for (auto g : {cyclic(4), cyclic(6), dihedral(4)}) {
    auto gens = g->generators();
    std::vector<elem_t> imgs(gens.size(), 0);
    for (elem_t u = 0; u < g->order(); ++u) {
      imgs[0] = u;
      auto p = ExtensionProblem::make(g, gens, imgs);
      CHECK(cond_check(p).holds == !bounded_violation(p, 6));
    }
  }
}

TEST_CASE("G-bar") {
  auto s3 = symmetric(3);
  auto half = g_bar_beta(half_trivial());
  CHECK(half.group->order() == 4);
  CHECK(is_isomorphic(half.group, corpus_group("Z2xZ2")));
  CHECK_FALSE(half.pi_bar_bijective);

  auto inv = g_bar_beta(inversion());
  CHECK(inv.pi_bar_bijective);
  // pi-bar is an isomorphism onto S3 with the opposite product.
  auto op = opposite(*s3);
  GroupMap pb{inv.group, op, inv.pi_bar};
  CHECK(is_homomorphism(pb));
  CHECK(is_bijective(pb));

  for (auto g : {s3, dihedral(4), quaternion8()}) {
    auto gens = g->generators();
    auto p = ExtensionProblem::make(g, gens, std::vector<elem_t>(gens.size(), g->identity()));
    auto gb = g_bar_beta(p);
    CHECK(is_isomorphic(gb.group, g));
    CHECK(gb.pi_bar_bijective);
  }

  try {
    g_bar_beta(three_gens());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::cond_fails);
  }
}

TEST_CASE("extension") {
  auto s3 = symmetric(3);
  auto a = extend_to_rb(inversion());
  CHECK(a.status == ExtensionStatus::extends);
  CHECK(a.basis == ExtensionBasis::theorem);
  CHECK(*a.op == elementary(s3, Elementary::b_minus1));

  auto b = extend_to_rb(half_trivial());
  CHECK(b.status == ExtensionStatus::no_extension);
  CHECK(b.basis == ExtensionBasis::census);
  CHECK(b.cond.holds);
  // Exhaustive oracle: no RB map on S3 sends s1 -> s1, s2 -> e.
  for (const auto& m : oracle::all_rb_operators(*s3)) CHECK_FALSE((m[1] == 1 && m[2] == 0));

  auto c = extend_to_rb(three_gens());
  CHECK(c.status == ExtensionStatus::no_extension);
  CHECK(c.basis == ExtensionBasis::cond_fails);
  CHECK(c.cond.witness);

  // Every two-generator beta on S3 against the census.
  auto census = brute_force_enumerate(s3);
  for (elem_t u = 0; u < 6; ++u)
    for (elem_t v = 0; v < 6; ++v) {
      auto r = extend_to_rb(ExtensionProblem::make(s3, {1, 2}, {u, v}));
      bool exists = false;
      for (const auto& op : census.operators) exists |= op(1) == u && op(2) == v;
      CHECK(r.status == (exists ? ExtensionStatus::extends : ExtensionStatus::no_extension));
      if (r.op) {
        CHECK(r.op->valid());
        CHECK((*r.op)(1) == u);
        CHECK((*r.op)(2) == v);
      }
    }
}

TEST_CASE("restriction then extension recovers the operator") {
  for (auto g : {symmetric(3), dihedral(4), quaternion8()}) {
    for (const auto& op : brute_force_enumerate(g).operators) {
      auto d = derived_group(op);
      std::vector<elem_t> gens = d.circle->generators();
      for (elem_t x : g->generators())
        if (std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
      std::vector<elem_t> imgs;
      for (elem_t x : gens) imgs.push_back(op(x));
      auto r = extend_to_rb(ExtensionProblem::make(g, gens, imgs));
      CHECK(r.status == ExtensionStatus::extends);
      CHECK(r.basis == ExtensionBasis::theorem);
      REQUIRE(r.op);
      CHECK(*r.op == op);
    }
  }
}
