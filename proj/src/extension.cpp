#include "rbg/extension.hpp"

#include <algorithm>
#include <random>

#include "rbg/config.hpp"
#include "rbg/derived.hpp"
#include "rbg/enumerate.hpp"
#include "rbg/morphism.hpp"

namespace rbg {

ExtensionProblem ExtensionProblem::make(GroupPtr g, std::vector<elem_t> generators, std::vector<elem_t> images) {
  if (!g) throw Error(ErrorCode::invalid_input, "extension problem without a group");
  if (generators.size() != images.size())
    throw Error(ErrorCode::invalid_input, "extension problem: " + std::to_string(generators.size()) +
                                              " generators but " + std::to_string(images.size()) + " images");
  for (elem_t x : generators)
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, "generator " + std::to_string(x) + " out of range");
  for (elem_t x : images)
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, "image " + std::to_string(x) + " out of range");
  if (closure(*g, generators).size() != g->order())
    throw Error(ErrorCode::invalid_input, "extension problem: the generators do not generate the group");
  return ExtensionProblem{std::move(g), std::move(generators), std::move(images)};
}

BarWord& BarWord::normalize() {
  std::vector<std::pair<std::size_t, long long>> out;
  for (const auto& l : letters) {
    if (l.second == 0) continue;
    if (!out.empty() && out.back().first == l.first) {
      out.back().second += l.second;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters = std::move(out);
  return *this;
}

BarWord BarWord::inverse() const {
  BarWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.emplace_back(it->first, -it->second);
  return w;
}

std::size_t BarWord::length() const {
  std::size_t n = 0;
  for (const auto& l : letters) n += std::size_t(l.second < 0 ? -l.second : l.second);
  return n;
}

std::string BarWord::to_string() const {
  if (letters.empty()) return "e";
  std::string s;
  for (const auto& [i, k] : letters) {
    if (!s.empty()) s += '*';
    s += "t" + std::to_string(i + 1);
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

BarWord operator*(const BarWord& a, const BarWord& b) {
  BarWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  w.normalize();
  return w;
}

namespace {

void check_letters(const ExtensionProblem& p, const BarWord& w) {
  for (const auto& l : w.letters)
    if (l.first >= p.generators.size())
      throw Error(ErrorCode::invalid_input, "letter t" + std::to_string(l.first + 1) + " out of range");
}

}  // namespace

elem_t pi_eval(const ExtensionProblem& p, const BarWord& w) {
  check_letters(p, w);
  const auto& g = *p.group;
  elem_t left = g.identity(), right = g.identity();
  for (const auto& [i, k] : w.letters) {
    const elem_t a = p.generators[i], u = p.images[i];
    left = g.mul(left, g.pow(g.mul(a, u), k));
    right = g.mul(g.pow(u, -k), right);
  }
  return g.mul(left, right);
}

elem_t beta_bar_eval(const ExtensionProblem& p, const BarWord& w) {
  check_letters(p, w);
  const auto& g = *p.group;
  elem_t r = g.identity();
  for (const auto& [i, k] : w.letters) r = g.mul(r, g.pow(p.images[i], k));
  return r;
}

std::vector<BarWord> random_words(const ExtensionProblem& p, std::size_t count, std::size_t max_len, long long max_exp,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BarWord> out;
  if (p.generators.empty() || max_exp <= 0) return out;
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, p.generators.size() - 1);
  std::uniform_int_distribution<long long> exp(-max_exp, max_exp - 1);
  for (std::size_t c = 0; c < count; ++c) {
    BarWord w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      long long k = exp(rng);
      if (k >= 0) ++k;
      w.letters.emplace_back(letter(rng), k);
    }
    out.push_back(w.normalize());
  }
  return out;
}

WordIdentityResult word_identity_selftest(const ExtensionProblem& p, const std::vector<BarWord>& sample) {
  const auto& g = *p.group;
  WordIdentityResult r;
  auto fail = [&](const std::string& what, const BarWord& w, const BarWord* w2) {
    r.holds = false;
    r.failures.push_back(what + " at w=" + w.to_string() + (w2 ? ", w'=" + w2->to_string() : ""));
  };
  std::vector<BarWord> words = sample;
  words.insert(words.begin(), BarWord{});
  for (const auto& w : words) {
    const elem_t pw = pi_eval(p, w), bw = beta_bar_eval(p, w);
    if (pi_eval(p, w.inverse()) != g.mul({g.inv(bw), g.inv(pw), bw})) fail("inverse rule", w, nullptr);
    for (const auto& v : words) {
      const elem_t pv = pi_eval(p, v), bv = beta_bar_eval(p, v);
      const BarWord wv = w * v;
      const elem_t pwv = pi_eval(p, wv);
      if (pwv != g.mul({pw, bw, pv, g.inv(bw)})) fail("product rule", w, &v);
      if (beta_bar_eval(p, wv) != g.mul(bw, bv)) fail("beta multiplicative", w, &v);
      if (g.mul(pwv, beta_bar_eval(p, wv)) != g.mul(g.mul(pw, bw), g.mul(pv, bv)))
        fail("pi*beta multiplicative", w, &v);
      const elem_t conj = pi_eval(p, v.inverse() * w * v);
      if (conj != g.mul({g.inv(bv), g.inv(pv), pw, bw, pv, g.inv(bw), bv})) fail("conjugation rule", w, &v);
    }
  }
  return r;
}

Closure closure(const ExtensionProblem& p) {
  const auto& g = *p.group;
  const std::size_t n = g.order();
  struct Step {
    elem_t x, y;
    std::size_t letter;
    long long k;
  };
  std::vector<Step> steps;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const elem_t x = g.mul(p.generators[i], p.images[i]), y = p.images[i];
    steps.push_back({x, y, i, 1});
    steps.push_back({g.inv(x), g.inv(y), i, -1});
  }
  Closure c;
  c.fiber.assign(n, {});
  std::vector<std::int64_t> seen(n * n, -1);
  auto add = [&](elem_t x, elem_t y, BarWord w) {
    std::size_t code = std::size_t(x) * n + y;
    if (seen[code] >= 0) return;
    seen[code] = std::int64_t(c.pairs.size());
    c.fiber[g.mul(x, g.inv(y))].push_back(c.pairs.size());
    c.pairs.emplace_back(x, y);
    c.words.push_back(std::move(w));
  };
  add(g.identity(), g.identity(), BarWord{});
  for (std::size_t head = 0; head < c.pairs.size(); ++head) {
    const auto [x, y] = c.pairs[head];
    for (const auto& s : steps) {
      const elem_t nx = g.mul(x, s.x), ny = g.mul(y, s.y);
      if (seen[std::size_t(nx) * n + ny] >= 0) continue;
      BarWord w = c.words[head];
      w.letters.emplace_back(s.letter, s.k);
      add(nx, ny, std::move(w.normalize()));
    }
  }
  return c;
}

CondResult cond_check(const ExtensionProblem&, const Closure& c) {
  // The first collision in BFS order gives the shortest second word.
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& f : c.fiber)
    if (f.size() >= 2 && (!best || f[1] < best->second)) best = {f[0], f[1]};
  if (!best) return {true, std::nullopt};
  return {false, std::make_pair(c.words[best->first], c.words[best->second])};
}

CondResult cond_check(const ExtensionProblem& p) { return cond_check(p, closure(p)); }

GBar g_bar_beta(const ExtensionProblem& p) {
  auto c = closure(p);
  auto cond = cond_check(p, c);
  if (!cond.holds)
    throw Error(ErrorCode::cond_fails, "pi(" + cond.witness->first.to_string() + ") = pi(" +
                                           cond.witness->second.to_string() + ") but beta differs");
  const auto& g = *p.group;
  const std::size_t n = g.order(), m = c.pairs.size();
  std::vector<std::int64_t> local(n * n, -1);
  for (std::size_t k = 0; k < m; ++k) local[std::size_t(c.pairs[k].first) * n + c.pairs[k].second] = std::int64_t(k);
  std::vector<elem_t> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const elem_t x = g.mul(c.pairs[a].first, c.pairs[b].first), y = g.mul(c.pairs[a].second, c.pairs[b].second);
      flat[a * m + b] = elem_t(local[std::size_t(x) * n + y]);
    }
  std::vector<std::string> labels;
  for (const auto& w : c.words) labels.push_back(w.to_string());
  GBar gb;
  gb.group = FiniteGroup::from_flat_table(std::move(flat), m, "Gbar", std::move(labels));
  gb.pairs = c.pairs;
  gb.words = c.words;
  for (std::size_t k = 0; k < m; ++k) {
    const auto [x, y] = c.pairs[k];
    gb.pi_bar.push_back(g.mul(x, g.inv(y)));
    gb.beta_bar.push_back(y);
    // Im(pi) = Im(pi-bar): the literal formulas reproduce the closure.
    if (pi_eval(p, c.words[k]) != gb.pi_bar.back() || beta_bar_eval(p, c.words[k]) != y)
      throw Error(ErrorCode::structure_violation, "closure disagrees with pi on " + c.words[k].to_string());
  }
  gb.pi_bar_bijective = m == n;  // injective by (cond)
  return gb;
}

std::string to_string(ExtensionStatus s) {
  switch (s) {
    case ExtensionStatus::extends: return "extends";
    case ExtensionStatus::no_extension: return "no_extension";
    case ExtensionStatus::undecided: return "undecided";
  }
  return "?";
}

std::string to_string(ExtensionBasis b) {
  switch (b) {
    case ExtensionBasis::theorem: return "theorem";
    case ExtensionBasis::cond_fails: return "cond_fails";
    case ExtensionBasis::census: return "census";
    case ExtensionBasis::none: return "none";
  }
  return "?";
}

ExtensionResult extend_to_rb(const ExtensionProblem& p) {
  ExtensionResult r;
  auto c = closure(p);
  r.cond = cond_check(p, c);
  if (!r.cond.holds) {
    r.status = ExtensionStatus::no_extension;
    r.basis = ExtensionBasis::cond_fails;
    return r;
  }
  r.gbar = g_bar_beta(p);
  const auto& g = p.group;
  if (r.gbar->pi_bar_bijective) {
    std::vector<elem_t> img(g->order());
    for (std::size_t k = 0; k < r.gbar->pairs.size(); ++k) img[r.gbar->pi_bar[k]] = r.gbar->beta_bar[k];
    RBOperator op(g, std::move(img));
    if (!op.valid()) throw Error(ErrorCode::structure_violation, "extension from a bijective pi-bar is not RB");
    if (!is_isomorphic(derived_group(op).circle, r.gbar->group))
      throw Error(ErrorCode::structure_violation, "G_B is not isomorphic to G-bar");
    op.with_provenance({"extension", {}});
    r.op = std::move(op);
    r.status = ExtensionStatus::extends;
    r.basis = ExtensionBasis::theorem;
    return r;
  }
  if (g->order() > config().census_fallback_cap) return r;
  auto census = graph_enumerate(g);
  r.basis = ExtensionBasis::census;
  for (const auto& op : census.operators) {
    bool match = true;
    for (std::size_t i = 0; i < p.generators.size() && match; ++i) match = op(p.generators[i]) == p.images[i];
    if (!match) continue;
    if (!r.op) {
      r.op = op;
      r.op->with_provenance({"extension", {{"basis", "census"}}});
    }
    ++r.census_matches;
  }
  r.status = r.op ? ExtensionStatus::extends : ExtensionStatus::no_extension;
  return r;
}

}  // namespace rbg
