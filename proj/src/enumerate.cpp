#include "rbg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "rbg/config.hpp"
#include "rbg/morphism.hpp"
#include "rbg/products.hpp"

namespace rbg {

namespace {

constexpr elem_t kUnset = static_cast<elem_t>(-1);

Census make_census(const GroupPtr& g, Method m, std::vector<std::vector<elem_t>> maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  Census c;
  c.group = g;
  c.method = m;
  c.operators.reserve(maps.size());
  for (auto& img : maps) {
    c.operators.emplace_back(g, std::move(img), 1);
    if (!c.operators.back().valid()) {
      throw Error(ErrorCode::structure_violation, "enumeration produced an operator that fails verification");
    }
  }
  return c;
}

class BruteSearch {
 public:
  explicit BruteSearch(const FiniteGroup& g) : g_(g), n_(g.order()), b_(n_, kUnset), pos_(n_) {
    seq_.push_back(g.identity());
    for (std::size_t x = 0; x < n_; ++x)
      if (elem_t(x) != g.identity()) seq_.push_back(elem_t(x));
    for (std::size_t k = 0; k < n_; ++k) pos_[seq_[k]] = k;
  }

  std::vector<std::vector<elem_t>> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  // Checks every pair (g, h) whose three B-values are known and of which
  // the newest is seq_[k].
  bool consistent(std::size_t k) const {
    for (std::size_t i = 0; i <= k; ++i) {
      const elem_t g = seq_[i];
      const elem_t bg = b_[g];
      const elem_t left = g_.mul(g, bg);
      const elem_t right = g_.inv(bg);
      for (std::size_t j = 0; j <= k; ++j) {
        const elem_t h = seq_[j];
        const elem_t t = g_.mul(g_.mul(left, h), right);
        if (pos_[t] > k) continue;
        if (i != k && j != k && pos_[t] != k) continue;
        if (g_.mul(bg, b_[h]) != b_[t]) return false;
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == n_) {
      found_.push_back(b_);
      return;
    }
    const elem_t x = seq_[k];
    if (k == 0) {
      b_[x] = g_.identity();
      if (consistent(0)) descend(1);
      b_[x] = kUnset;
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      b_[x] = elem_t(v);
      if (consistent(k)) descend(k + 1);
    }
    b_[x] = kUnset;
  }

  const FiniteGroup& g_;
  std::size_t n_;
  std::vector<elem_t> b_;
  std::vector<elem_t> seq_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<elem_t>> found_;
};

struct QuotientData {
  Quotient q;
  /// coset index -> elements of the numerator in that coset
  std::vector<std::vector<elem_t>> members;
};

std::vector<std::vector<elem_t>> goursat_scan(const GroupPtr& gp, unsigned threads) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  const auto subs = all_subgroups(gp);

  // normal[i]: indices j with subs[j] normal in subs[i]
  std::vector<std::vector<std::size_t>> normal(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (subs[i].size() % subs[j].size() != 0) continue;
      if (!std::includes(subs[i].elements().begin(), subs[i].elements().end(), subs[j].elements().begin(),
                         subs[j].elements().end()))
        continue;
      if (is_normal_in(subs[j], subs[i])) normal[i].push_back(j);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, QuotientData> quotients;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j : normal[i]) {
      QuotientData d{quotient(subs[i], subs[j]), {}};
      d.members.resize(d.q.group->order());
      for (elem_t x : subs[i].elements()) d.members[d.q.coset_of[x]].push_back(x);
      quotients.emplace(std::make_pair(i, j), std::move(d));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (product_size(subs[i], subs[k]) == n) tasks.emplace_back(i, k);
    }
  }

  auto run_task = [&](std::size_t i1, std::size_t i2, std::vector<std::vector<elem_t>>& out) {
    const Subgroup& p1 = subs[i1];
    const Subgroup& p2 = subs[i2];
    const Subgroup common = intersection(p1, p2);
    for (std::size_t j1 : normal[i1]) {
      for (std::size_t j2 : normal[i2]) {
        const Subgroup& n1 = subs[j1];
        const Subgroup& n2 = subs[j2];
        if (p1.size() * n2.size() != n || p1.size() * n2.size() != p2.size() * n1.size()) continue;
        if (!intersection(n1, n2).is_trivial()) continue;
        const QuotientData& d1 = quotients.at({i1, j1});
        const QuotientData& d2 = quotients.at({i2, j2});
        for (const GroupMap& theta : all_isomorphisms(d1.q.group, d2.q.group)) {
          bool meets_diagonal = false;
          for (elem_t x : common.elements()) {
            if (x != g.identity() && theta(d1.q.coset_of[x]) == d2.q.coset_of[x]) {
              meets_diagonal = true;
              break;
            }
          }
          if (meets_diagonal) continue;
          std::vector<elem_t> img(n, kUnset);
          for (elem_t x : p1.elements()) {
            for (elem_t y : d2.members[theta(d1.q.coset_of[x])]) img[g.mul(x, g.inv(y))] = y;
          }
          out.push_back(std::move(img));
        }
      }
    }
  };

  if (threads == 0) threads = config().threads;
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(tasks.size())));
  std::vector<std::vector<std::vector<elem_t>>> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned t) {
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) run_task(tasks[k].first, tasks[k].second, partial[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<elem_t>> maps;
  for (auto& p : partial)
    for (auto& m : p) maps.push_back(std::move(m));
  return maps;
}

std::vector<std::vector<elem_t>> lattice_scan(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  check_order_cap(n * n, "lattice strategy on G x G");
  ProductGroup gg = direct_product(gp, gp);
  std::vector<std::vector<elem_t>> maps;
  for (const Subgroup& h : all_subgroups(gg.group)) {
    if (h.size() != n) continue;
    std::vector<elem_t> img(n, kUnset);
    bool injective = true;
    for (elem_t p : h.elements()) {
      const elem_t x = gg.component(p, 0);
      const elem_t y = gg.component(p, 1);
      const elem_t at = g.mul(x, g.inv(y));
      if (img[at] != kUnset) {
        injective = false;
        break;
      }
      img[at] = y;
    }
    if (injective) maps.push_back(std::move(img));
  }
  return maps;
}

std::vector<elem_t> conjugated_images(const std::vector<elem_t>& b, const GroupMap& phi, const GroupMap& phi_inv) {
  std::vector<elem_t> out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = phi_inv(b[phi(elem_t(x))]);
  return out;
}

std::vector<elem_t> tilde_images(const FiniteGroup& g, const std::vector<elem_t>& b) {
  std::vector<elem_t> out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    elem_t xi = g.inv(elem_t(x));
    out[x] = g.mul(xi, b[xi]);
  }
  return out;
}

bool is_b0(const RBOperator& b) {
  for (elem_t v : b.images())
    if (v != b.group()->identity()) return false;
  return true;
}

bool is_b_minus1(const RBOperator& b) {
  for (std::size_t x = 0; x < b.images().size(); ++x)
    if (b(elem_t(x)) != b.group()->inv(elem_t(x))) return false;
  return true;
}

}  // namespace

std::string to_string(Method m) { return m == Method::brute ? "brute" : "graph"; }

std::optional<std::size_t> Census::find(const std::vector<elem_t>& images) const {
  auto it = std::lower_bound(operators.begin(), operators.end(), images,
                             [](const RBOperator& op, const std::vector<elem_t>& v) { return op.images() < v; });
  if (it == operators.end() || it->images() != images) return std::nullopt;
  return std::size_t(it - operators.begin());
}

Census brute_force_enumerate(const GroupPtr& g) {
  if (g->order() > config().brute_force_cap) {
    throw Error(ErrorCode::order_cap_exceeded, "brute force enumeration is limited to order " +
                                                   std::to_string(config().brute_force_cap) + ", got " +
                                                   std::to_string(g->order()));
  }
  return make_census(g, Method::brute, BruteSearch(*g).run());
}

Census graph_enumerate(const GroupPtr& g, GraphStrategy strategy, unsigned threads) {
  check_order_cap(g->order(), "graph enumeration");
  auto maps = strategy == GraphStrategy::goursat ? goursat_scan(g, threads) : lattice_scan(g);
  return make_census(g, Method::graph, std::move(maps));
}

std::vector<std::uint64_t> graph_of(const RBOperator& b) {
  const FiniteGroup& g = *b.group();
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const elem_t bx = b(elem_t(x));
    out.push_back(std::uint64_t(g.mul(elem_t(x), bx)) * g.order() + bx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<elem_t> canonical_form(const RBOperator& b, const std::vector<GroupMap>& auts) {
  require_valid(b, 1, "canonical_form");
  const FiniteGroup& g = *b.group();
  const std::vector<elem_t> t = tilde_images(g, b.images());
  std::vector<elem_t> best = b.images();
  for (const GroupMap& phi : auts) {
    const GroupMap phi_inv = inverse(phi);
    best = std::min(best, conjugated_images(b.images(), phi, phi_inv));
    best = std::min(best, conjugated_images(t, phi, phi_inv));
  }
  return best;
}

void classify(Census& census) {
  const FiniteGroup& g = *census.group;
  const auto auts = automorphisms(census.group);
  std::vector<GroupMap> invs;
  invs.reserve(auts.size());
  for (const auto& a : auts) invs.push_back(inverse(a));

  std::vector<std::size_t> class_of(census.operators.size(), std::size_t(-1));
  census.classes.clear();
  for (std::size_t i = 0; i < census.operators.size(); ++i) {
    if (class_of[i] != std::size_t(-1)) continue;
    // orbit by closure over conjugation and tilde
    const std::size_t id = census.classes.size();
    std::vector<std::size_t> members{i};
    class_of[i] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto& src = census.operators[members[k]].images();
      std::vector<std::vector<elem_t>> moves{tilde_images(g, src)};
      for (std::size_t a = 0; a < auts.size(); ++a) moves.push_back(conjugated_images(src, auts[a], invs[a]));
      for (const auto& m : moves) {
        auto at = census.find(m);
        if (!at) throw Error(ErrorCode::invalid_input, "census is not closed under conjugation and tilde");
        if (class_of[*at] == std::size_t(-1)) {
          class_of[*at] = id;
          members.push_back(*at);
        }
      }
    }
    std::sort(members.begin(), members.end());
    census.classes.push_back(std::move(members));
  }
}

ElementaryVerdict is_rb_elementary(const Census& census) {
  ElementaryVerdict v;
  v.operator_count = census.operators.size();
  for (const auto& op : census.operators) v.non_elementary_count += !(is_b0(op) || is_b_minus1(op));
  v.elementary = v.non_elementary_count == 0;
  v.class_count = census.classes.size();
  return v;
}

SplittingReport splitting_report(const Census& census) {
  SplittingReport r;
  std::set<std::pair<std::vector<elem_t>, std::vector<elem_t>>> seen;
  bool distinct = true;
  for (std::size_t i = 0; i < census.operators.size(); ++i) {
    auto s = is_splitting(census.operators[i]);
    if (!s.splitting) continue;
    auto& [k, im] = *s.factorization;
    distinct = seen.emplace(k.elements(), im.elements()).second && distinct;
    r.entries.push_back({i, k, im});
  }
  std::set<std::pair<std::vector<elem_t>, std::vector<elem_t>>> facts;
  for (const auto& [h, l] : exact_factorizations(census.group)) facts.emplace(h.elements(), l.elements());
  r.matches_factorizations = distinct && facts == seen;
  return r;
}

SimpleGroupVerdict simple_group_check(const Census& census) {
  const GroupPtr& gp = census.group;
  SimpleGroupVerdict v;
  v.simple = is_simple(gp);
  if (!v.simple) throw Error(ErrorCode::invalid_input, "simple_group_check needs a simple group");
  for (const auto& a : automorphisms(gp)) {
    if (fixed_point_free(a)) {
      v.has_fixed_point_free_automorphism = true;
      break;
    }
  }
  std::set<std::pair<std::vector<elem_t>, std::vector<elem_t>>> facts;
  for (const auto& [h, l] : exact_factorizations(gp)) facts.emplace(h.elements(), l.elements());

  v.trivial_kernel_is_inversion = true;
  v.pairs_are_factorizations = true;
  for (std::size_t i = 0; i < census.operators.size(); ++i) {
    const RBOperator& op = census.operators[i];
    const Subgroup k = kernel(op);
    if (k.is_trivial() && !is_b_minus1(op)) v.trivial_kernel_is_inversion = false;
    if (is_b0(op) || is_b_minus1(op)) continue;
    ++v.non_elementary_count;
    if (!is_splitting(op).splitting) {
      v.non_splitting.push_back(i);
      v.pairs_are_factorizations = false;
      continue;
    }
    if (!facts.count({k.elements(), image(op).elements()})) v.pairs_are_factorizations = false;
  }
  return v;
}

}  // namespace rbg
