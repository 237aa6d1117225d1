#include "rbg/derived.hpp"

#include <algorithm>

#include "rbg/morphism.hpp"

namespace rbg {

DerivedGroup derived_group(const RBOperator& b) {
  require_valid(b, 1, "derived_group");
  const GroupPtr& gp = b.group();
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  std::vector<elem_t> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const elem_t left = g.mul(elem_t(x), b(elem_t(x)));
    const elem_t right = g.inv(b(elem_t(x)));
    for (std::size_t h = 0; h < n; ++h) flat[x * n + h] = g.mul(g.mul(left, elem_t(h)), right);
  }
  GroupPtr circle = FiniteGroup::from_flat_table(std::move(flat), n, g.name() + "_B", g.labels());
  if (circle->identity() != g.identity()) {
    throw Error(ErrorCode::structure_violation, "identity of G_B differs from identity of G");
  }
  std::pair<elem_t, elem_t> w;
  if (!is_homomorphism(GroupMap{circle, gp, b.images()}, &w)) {
    throw Error(ErrorCode::structure_violation,
                "B is not a homomorphism G_B -> G at (" + g.label(w.first) + ", " + g.label(w.second) + ")");
  }
  if (first_violation(*circle, b.images(), 1)) {
    throw Error(ErrorCode::structure_violation, "B is not an RB-operator on G_B");
  }
  return DerivedGroup{gp, b, std::move(circle)};
}

CircleWord& CircleWord::normalize() {
  std::vector<std::pair<elem_t, long long>> out;
  for (const auto& [a, k] : letters) {
    if (!out.empty() && out.back().first == a) {
      out.back().second += k;
      if (out.back().second == 0) out.pop_back();
    } else if (k != 0) {
      out.emplace_back(a, k);
    }
  }
  letters = std::move(out);
  return *this;
}

elem_t eval_word(const RBOperator& b, const CircleWord& w) {
  require_valid(b, 1, "eval_word");
  const FiniteGroup& g = *b.group();
  elem_t head = g.identity();
  elem_t tail = g.identity();
  for (const auto& [a, k] : w.letters) {
    if (a >= g.order()) throw Error(ErrorCode::invalid_input, "word letter out of range");
    head = g.mul(head, g.pow(g.mul(a, b(a)), k));
    tail = g.mul(g.pow(b(a), -k), tail);
  }
  return g.mul(head, tail);
}

elem_t eval_word_iterated(const DerivedGroup& d, const CircleWord& w) {
  const FiniteGroup& c = *d.circle;
  elem_t acc = c.identity();
  for (const auto& [a, k] : w.letters) {
    if (a >= c.order()) throw Error(ErrorCode::invalid_input, "word letter out of range");
    const elem_t step = k >= 0 ? a : c.inv(a);
    for (long long i = 0; i < (k >= 0 ? k : -k); ++i) acc = c.mul(acc, step);
  }
  return acc;
}

StructureReport structure_report(const RBOperator& b) {
  require_valid(b, 1, "structure_report");
  const GroupPtr& gp = b.group();
  const FiniteGroup& g = *gp;
  const DerivedGroup d = derived_group(b);
  const GroupMap plus = bplus(b);

  auto collect = [&](auto pred) {
    std::vector<elem_t> v;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (pred(elem_t(x))) v.push_back(elem_t(x));
    return v;
  };
  StructureReport r{
      .kernel = Subgroup::from_elements(gp, collect([&](elem_t x) { return b(x) == g.identity(); })),
      .kernel_plus = Subgroup::from_elements(gp, collect([&](elem_t x) { return plus(x) == g.identity(); })),
      .image = Subgroup::from_elements(gp, b.images()),
      .image_plus = Subgroup::from_elements(gp, plus.images),
  };

  // (a) normality inside G_B, using the circle table
  auto normal_in_circle = [&](const Subgroup& s) {
    const FiniteGroup& c = *d.circle;
    for (std::size_t t = 0; t < c.order(); ++t) {
      for (elem_t x : s.elements()) {
        if (!s.contains(c.conj(x, elem_t(t)))) return false;
      }
    }
    return true;
  };
  r.kernels_normal_in_derived = normal_in_circle(r.kernel) && normal_in_circle(r.kernel_plus);

  // (b)
  r.kernels_normal_in_images = std::includes(r.image_plus.elements().begin(), r.image_plus.elements().end(),
                                             r.kernel.elements().begin(), r.kernel.elements().end()) &&
                               std::includes(r.image.elements().begin(), r.image.elements().end(),
                                             r.kernel_plus.elements().begin(), r.kernel_plus.elements().end()) &&
                               is_normal_in(r.kernel, r.image_plus) && is_normal_in(r.kernel_plus, r.image);

  // (c)
  if (r.kernels_normal_in_images) {
    Quotient q1 = quotient(r.image_plus, r.kernel);
    Quotient q2 = quotient(r.image, r.kernel_plus);
    constexpr elem_t unset = InducedGroup::npos;
    r.quotient_map.assign(q1.group->order(), unset);
    r.quotient_map_well_defined = true;
    for (std::size_t x = 0; x < g.order() && r.quotient_map_well_defined; ++x) {
      elem_t from = q1.coset_of[plus(elem_t(x))];
      elem_t to = q2.coset_of[b(elem_t(x))];
      if (r.quotient_map[from] == unset) {
        r.quotient_map[from] = to;
      } else if (r.quotient_map[from] != to) {
        r.quotient_map_well_defined = false;
      }
    }
    r.quotient_domain_reps = q1.representatives;
    r.quotient_codomain_reps = q2.representatives;
    if (r.quotient_map_well_defined) {
      GroupMap m{q1.group, q2.group, r.quotient_map};
      r.quotient_map_isomorphism = is_bijective(m) && is_homomorphism(m);
    }
  }

  // (d)
  std::vector<char> hit(g.order());
  std::size_t covered = 0;
  for (elem_t x : r.image_plus.elements()) {
    for (elem_t y : r.image.elements()) {
      elem_t p = g.mul(x, y);
      if (!hit[p]) {
        hit[p] = 1;
        ++covered;
      }
    }
  }
  r.images_factorize = covered == g.order();

  if (!r.kernels_normal_in_derived) throw Error(ErrorCode::structure_violation, "kernels not normal in G_B");
  if (!r.kernels_normal_in_images) throw Error(ErrorCode::structure_violation, "kernels not normal in images");
  if (!r.quotient_map_well_defined) throw Error(ErrorCode::structure_violation, "coset map not well defined");
  if (!r.quotient_map_isomorphism) throw Error(ErrorCode::structure_violation, "coset map not an isomorphism");
  if (!r.images_factorize) throw Error(ErrorCode::structure_violation, "G != Im(B+) Im(B)");
  return r;
}

}  // namespace rbg
