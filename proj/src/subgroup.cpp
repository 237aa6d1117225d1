#include "rbg/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rbg/config.hpp"

namespace rbg {

Subgroup::Subgroup(GroupPtr parent, std::vector<elem_t> sorted, Unchecked)
    : parent_(std::move(parent)), elements_(std::move(sorted)), member_(parent_->order()) {
  for (elem_t x : elements_) member_[x] = true;
}

Subgroup make_subgroup_unchecked(GroupPtr parent, std::vector<elem_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup(std::move(parent), std::move(elems), Subgroup::Unchecked{});
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<elem_t> elements) {
  const FiniteGroup& g = *parent;
  for (elem_t x : elements) {
    if (x >= g.order()) throw Error(ErrorCode::invalid_input, "element " + std::to_string(x) + " out of range");
  }
  Subgroup s = make_subgroup_unchecked(std::move(parent), std::move(elements));
  if (!s.contains(g.identity())) throw Error(ErrorCode::invalid_input, "subset lacks the identity");
  for (elem_t x : s.elements_) {
    if (!s.contains(g.inv(x))) throw Error(ErrorCode::invalid_input, "subset not closed under inverse at " + g.label(x));
    for (elem_t y : s.elements_) {
      if (!s.contains(g.mul(x, y))) {
        throw Error(ErrorCode::invalid_input, "subset not closed: " + g.label(x) + " * " + g.label(y));
      }
    }
  }
  return s;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<elem_t> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = elem_t(i);
  return Subgroup(std::move(parent), std::move(all), Unchecked{});
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  elem_t e = parent->identity();
  return Subgroup(std::move(parent), {e}, Unchecked{});
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const elem_t> elems) {
  for (elem_t x : elems) {
    if (x >= g->order()) throw Error(ErrorCode::invalid_input, "element " + std::to_string(x) + " out of range");
  }
  return make_subgroup_unchecked(g, closure(*g, elems));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  check_order_cap(g.order(), "all_subgroups");
  const std::size_t n = g.order();

  struct Node {
    std::vector<elem_t> sorted;
    std::vector<elem_t> gens;
  };
  std::set<std::vector<elem_t>> seen;
  std::deque<Node> work;
  work.push_back({{g.identity()}, {}});
  seen.insert(work.front().sorted);

  std::vector<char> in_sub(n), covered(n);
  while (!work.empty()) {
    Node cur = std::move(work.front());
    work.pop_front();
    std::fill(in_sub.begin(), in_sub.end(), 0);
    for (elem_t x : cur.sorted) in_sub[x] = 1;
    std::fill(covered.begin(), covered.end(), 0);
    for (elem_t x : cur.sorted) covered[x] = 1;

    // <S, x> = <S, sx> for s in S, so one representative per right coset Sx.
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (elem_t s : cur.sorted) covered[g.mul(s, elem_t(x))] = 1;
      std::vector<elem_t> gens = cur.gens;
      gens.push_back(elem_t(x));
      std::vector<elem_t> elems = closure(g, gens);
      std::sort(elems.begin(), elems.end());
      if (seen.insert(elems).second) work.push_back({std::move(elems), std::move(gens)});
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(make_subgroup_unchecked(gp, s));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<elem_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return make_subgroup_unchecked(a.parent(), std::move(out));
}

std::size_t product_size(const Subgroup& a, const Subgroup& b) {
  return a.size() * b.size() / intersection(a, b).size();
}

bool is_normal_in(const Subgroup& n, const Subgroup& s) {
  const FiniteGroup& g = *s.parent();
  auto gens = small_generating_set(g, s.elements());
  for (elem_t t : gens) {
    for (elem_t x : n.elements()) {
      if (!n.contains(g.conj(x, t))) return false;
    }
  }
  return true;
}

bool is_normal(const Subgroup& s) { return is_normal_in(s, Subgroup::whole(s.parent())); }

Subgroup center(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  std::vector<elem_t> z;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (elem_t t : g.generators()) {
      if (g.mul(elem_t(x), t) != g.mul(t, elem_t(x))) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(elem_t(x));
  }
  return make_subgroup_unchecked(gp, std::move(z));
}

Subgroup normal_closure(const GroupPtr& gp, std::span<const elem_t> elems) {
  const FiniteGroup& g = *gp;
  std::vector<elem_t> gens(elems.begin(), elems.end());
  std::vector<elem_t> cl = closure(g, gens);
  std::vector<char> in(g.order());
  for (elem_t x : cl) in[x] = 1;
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < cl.size() && !grown; ++i) {
      for (elem_t t : g.generators()) {
        elem_t c = g.conj(cl[i], t);
        if (!in[c]) {
          gens.push_back(c);
          cl = closure(g, gens);
          for (elem_t x : cl) in[x] = 1;
          grown = true;
          break;
        }
      }
    }
  }
  return make_subgroup_unchecked(gp, std::move(cl));
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& l) {
  const FiniteGroup& g = *h.parent();
  std::vector<char> hit(g.order());
  std::vector<elem_t> comms;
  for (elem_t a : h.elements()) {
    for (elem_t b : l.elements()) {
      elem_t c = g.commutator(a, b);
      if (!hit[c]) {
        hit[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return make_subgroup_unchecked(h.parent(), closure(g, small_generating_set(g, comms)));
}

std::vector<Subgroup> lower_central_series(const GroupPtr& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  const Subgroup whole = series.front();
  for (;;) {
    Subgroup next = commutator_subgroup(whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_simple(const GroupPtr& g) {
  if (g->order() == 1) return false;
  for (std::size_t x = 0; x < g->order(); ++x) {
    if (elem_t(x) == g->identity()) continue;
    elem_t one = elem_t(x);
    if (!normal_closure(g, std::span<const elem_t>(&one, 1)).is_whole()) return false;
  }
  return true;
}

InducedGroup induced(const Subgroup& s, std::string name) {
  const FiniteGroup& g = *s.parent();
  InducedGroup out;
  out.to_parent = s.elements();
  out.from_parent.assign(g.order(), InducedGroup::npos);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = elem_t(i);
  const std::size_t m = s.size();
  std::vector<elem_t> flat(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    if (!g.labels().empty()) labels.push_back(g.label(out.to_parent[a]));
    for (std::size_t b = 0; b < m; ++b) {
      flat[a * m + b] = out.from_parent[g.mul(out.to_parent[a], out.to_parent[b])];
    }
  }
  out.group = FiniteGroup::from_flat_table(std::move(flat), m, std::move(name), std::move(labels));
  return out;
}

Quotient quotient(const Subgroup& s, const Subgroup& n) {
  const FiniteGroup& g = *s.parent();
  if (!is_normal_in(n, s)) throw Error(ErrorCode::not_normal, "subgroup is not normal");
  Quotient q;
  q.coset_of.assign(g.order(), InducedGroup::npos);
  for (elem_t x : s.elements()) {
    if (q.coset_of[x] != InducedGroup::npos) continue;
    elem_t id = elem_t(q.representatives.size());
    q.representatives.push_back(x);
    for (elem_t y : n.elements()) q.coset_of[g.mul(x, y)] = id;
  }
  const std::size_t m = q.representatives.size();
  std::vector<elem_t> flat(m * m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("[" + g.label(q.representatives[a]) + "]");
    for (std::size_t b = 0; b < m; ++b) {
      flat[a * m + b] = q.coset_of[g.mul(q.representatives[a], q.representatives[b])];
    }
  }
  q.group = FiniteGroup::from_flat_table(std::move(flat), m, {}, std::move(labels));
  return q;
}

QuotientWithProjection quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(n)) throw Error(ErrorCode::not_normal, "subgroup of order " + std::to_string(n.size()) + " is not normal");
  Quotient q = quotient(Subgroup::whole(g), n);
  QuotientWithProjection out;
  out.group = q.group->renamed(g->name().empty() ? std::string{} : g->name() + "/N");
  out.projection = GroupMap{g, out.group, q.coset_of};
  out.representatives = std::move(q.representatives);
  return out;
}

std::vector<std::pair<Subgroup, Subgroup>> exact_factorizations(const GroupPtr& g) {
  auto subs = all_subgroups(g);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const auto& h : subs) {
    if (g->order() % h.size() != 0) continue;
    for (const auto& l : subs) {
      if (h.size() * l.size() != g->order()) continue;
      if (intersection(h, l).is_trivial()) out.emplace_back(h, l);
    }
  }
  return out;
}

}  // namespace rbg
