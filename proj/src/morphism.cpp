#include "rbg/morphism.hpp"

#include <algorithm>

namespace rbg {

bool is_homomorphism(const GroupMap& f, std::pair<elem_t, elem_t>* witness) {
  const FiniteGroup& a = *f.domain;
  const FiniteGroup& b = *f.codomain;
  for (std::size_t x = 0; x < a.order(); ++x) {
    for (std::size_t y = 0; y < a.order(); ++y) {
      if (f(a.mul(elem_t(x), elem_t(y))) != b.mul(f(elem_t(x)), f(elem_t(y)))) {
        if (witness) *witness = {elem_t(x), elem_t(y)};
        return false;
      }
    }
  }
  return true;
}

bool is_antihomomorphism(const GroupMap& f, std::pair<elem_t, elem_t>* witness) {
  const FiniteGroup& a = *f.domain;
  const FiniteGroup& b = *f.codomain;
  for (std::size_t x = 0; x < a.order(); ++x) {
    for (std::size_t y = 0; y < a.order(); ++y) {
      if (f(a.mul(elem_t(x), elem_t(y))) != b.mul(f(elem_t(y)), f(elem_t(x)))) {
        if (witness) *witness = {elem_t(x), elem_t(y)};
        return false;
      }
    }
  }
  return true;
}

bool is_bijective(const GroupMap& f) {
  if (f.domain->order() != f.codomain->order()) return false;
  std::vector<char> hit(f.codomain->order());
  for (elem_t y : f.images) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool is_automorphism(const GroupMap& f) {
  return f.domain == f.codomain && is_bijective(f) && is_homomorphism(f);
}

GroupMap identity_map(const GroupPtr& g) {
  std::vector<elem_t> img(g->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = elem_t(i);
  return {g, g, std::move(img)};
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (inner.codomain->order() != outer.domain->order()) {
    throw Error(ErrorCode::invalid_input, "maps are not composable");
  }
  std::vector<elem_t> img(inner.images.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = outer(inner(elem_t(i)));
  return {inner.domain, outer.codomain, std::move(img)};
}

GroupMap inverse(const GroupMap& f) {
  if (!is_bijective(f)) throw Error(ErrorCode::invalid_input, "map is not bijective");
  std::vector<elem_t> img(f.images.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[f.images[i]] = elem_t(i);
  return {f.codomain, f.domain, std::move(img)};
}

GroupMap inner_automorphism(const GroupPtr& g, elem_t by) {
  std::vector<elem_t> img(g->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g->conj(elem_t(i), by);
  return {g, g, std::move(img)};
}

bool fixed_point_free(const GroupMap& f) {
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    if (elem_t(i) != f.domain->identity() && f.images[i] == elem_t(i)) return false;
  }
  return true;
}

namespace {

constexpr elem_t kUnset = static_cast<elem_t>(-1);

class HomSearch {
 public:
  HomSearch(const GroupPtr& from, const GroupPtr& to, MapKind kind, std::size_t limit)
      : from_(from), to_(to), a_(*from), b_(*to), kind_(kind), limit_(limit), gens_(a_.generators()),
        phi_(a_.order(), kUnset), owner_(b_.order(), kUnset) {}

  std::vector<GroupMap> run() {
    if (kind_ == MapKind::bijective && a_.order() != b_.order()) return {};
    assign(a_.identity(), b_.identity());
    descend(0);
    std::sort(results_.begin(), results_.end(),
              [](const GroupMap& x, const GroupMap& y) { return x.images < y.images; });
    return std::move(results_);
  }

 private:
  bool injective() const { return kind_ != MapKind::homomorphism; }

  bool assign(elem_t x, elem_t v) {
    if (injective() && owner_[v] != kUnset) return false;
    phi_[x] = v;
    if (injective()) owner_[v] = x;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      elem_t x = trail_.back();
      trail_.pop_back();
      if (injective()) owner_[phi_[x]] = kUnset;
      phi_[x] = kUnset;
    }
  }

  // Enforces phi(x s) = phi(x) phi(s) for every assigned x and every
  // generator s among the first `upto`.
  bool propagate(std::size_t upto) {
    std::vector<elem_t> queue(trail_.begin(), trail_.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      elem_t x = queue[i];
      for (std::size_t j = 0; j < upto; ++j) {
        elem_t s = gens_[j];
        elem_t y = a_.mul(x, s);
        elem_t v = b_.mul(phi_[x], phi_[s]);
        if (phi_[y] == kUnset) {
          if (!assign(y, v)) return false;
          queue.push_back(y);
        } else if (phi_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t level) {
    if (limit_ != 0 && results_.size() >= limit_) return;
    if (level == gens_.size()) {
      results_.push_back(GroupMap{from_, to_, phi_});
      return;
    }
    elem_t s = gens_[level];
    const std::size_t ord = a_.element_order(s);
    for (std::size_t c = 0; c < b_.order(); ++c) {
      std::size_t oc = b_.element_order(elem_t(c));
      if (injective() ? oc != ord : ord % oc != 0) continue;
      std::size_t mark = trail_.size();
      if (assign(s, elem_t(c)) && propagate(level + 1)) descend(level + 1);
      undo(mark);
      if (limit_ != 0 && results_.size() >= limit_) return;
    }
  }

  GroupPtr from_, to_;
  const FiniteGroup& a_;
  const FiniteGroup& b_;
  MapKind kind_;
  std::size_t limit_;
  std::vector<elem_t> gens_;
  std::vector<elem_t> phi_;
  std::vector<elem_t> owner_;
  std::vector<elem_t> trail_;
  std::vector<GroupMap> results_;
};

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> p(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = g.element_order(elem_t(i));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

std::vector<GroupMap> find_homomorphisms(const GroupPtr& from, const GroupPtr& to, MapKind kind,
                                         std::size_t limit) {
  return HomSearch(from, to, kind, limit).run();
}

std::vector<GroupMap> automorphisms(const GroupPtr& g) { return find_homomorphisms(g, g, MapKind::bijective); }

std::vector<GroupMap> endomorphisms(const GroupPtr& g) { return find_homomorphisms(g, g, MapKind::homomorphism); }

std::vector<GroupMap> all_isomorphisms(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order() || order_profile(*a) != order_profile(*b)) return {};
  return find_homomorphisms(a, b, MapKind::bijective);
}

std::optional<GroupMap> is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  if (a->is_abelian() != b->is_abelian()) return std::nullopt;
  if (order_profile(*a) != order_profile(*b)) return std::nullopt;
  if (center(a).size() != center(b).size()) return std::nullopt;
  auto whole_a = Subgroup::whole(a);
  auto whole_b = Subgroup::whole(b);
  if (commutator_subgroup(whole_a, whole_a).size() != commutator_subgroup(whole_b, whole_b).size()) {
    return std::nullopt;
  }
  auto found = find_homomorphisms(a, b, MapKind::bijective, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace rbg
