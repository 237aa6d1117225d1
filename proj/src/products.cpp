#include "rbg/products.hpp"

#include <limits>

#include "rbg/config.hpp"
#include "rbg/morphism.hpp"

namespace rbg {

std::size_t checked_order_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint32_t>::max() / a) return std::numeric_limits<std::uint32_t>::max();
  return a * b;
}

elem_t ProductGroup::encode(const std::vector<elem_t>& coords) const {
  elem_t v = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) v = v * elem_t(factors[i]->order()) + coords[i];
  return v;
}

std::vector<elem_t> ProductGroup::decode(elem_t g) const {
  std::vector<elem_t> c(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    c[i] = g % elem_t(factors[i]->order());
    g /= elem_t(factors[i]->order());
  }
  return c;
}

elem_t ProductGroup::component(elem_t g, std::size_t i) const {
  for (std::size_t j = factors.size(); j-- > i + 1;) g /= elem_t(factors[j]->order());
  return g % elem_t(factors[i]->order());
}

GroupMap ProductGroup::injection(std::size_t i) const {
  std::vector<elem_t> coords(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) coords[j] = factors[j]->identity();
  std::vector<elem_t> img(factors[i]->order());
  for (std::size_t x = 0; x < img.size(); ++x) {
    coords[i] = elem_t(x);
    img[x] = encode(coords);
  }
  return {factors[i], group, std::move(img)};
}

GroupMap ProductGroup::projection(std::size_t i) const {
  std::vector<elem_t> img(group->order());
  for (std::size_t g = 0; g < img.size(); ++g) img[g] = component(elem_t(g), i);
  return {group, factors[i], std::move(img)};
}

Subgroup ProductGroup::factor_subgroup(std::size_t i) const {
  return make_subgroup_unchecked(group, injection(i).images);
}

ProductGroup direct_product(const std::vector<GroupPtr>& factors, std::string name) {
  std::size_t n = 1;
  for (const auto& f : factors) n = checked_order_product(n, f->order());
  check_order_cap(n, "direct product");

  ProductGroup p;
  p.factors = factors;
  std::vector<elem_t> flat(n * n);
  std::vector<std::string> labels(n);
  std::vector<std::vector<elem_t>> dec(n);
  for (std::size_t g = 0; g < n; ++g) dec[g] = p.decode(elem_t(g));
  std::vector<elem_t> prod(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    std::string lab = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) lab += (i ? "," : "") + factors[i]->label(dec[a][i]);
    labels[a] = lab + ")";
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) prod[i] = factors[i]->mul(dec[a][i], dec[b][i]);
      flat[a * n + b] = p.encode(prod);
    }
  }
  if (name.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i]->name();
  }
  p.group = FiniteGroup::from_flat_table(std::move(flat), n, std::move(name), std::move(labels));
  return p;
}

ProductGroup direct_product(const GroupPtr& a, const GroupPtr& b, std::string name) {
  return direct_product(std::vector<GroupPtr>{a, b}, std::move(name));
}

ProductGroup direct_power(const GroupPtr& g, std::size_t n, std::string name) {
  if (n == 0) throw Error(ErrorCode::invalid_input, "direct power needs n >= 1");
  if (name.empty()) name = g->name() + "^" + std::to_string(n);
  return direct_product(std::vector<GroupPtr>(n, g), std::move(name));
}

Subgroup SemidirectProduct::normal_subgroup() const {
  std::vector<elem_t> s;
  for (std::size_t h = 0; h < normal->order(); ++h) s.push_back(encode(elem_t(h), complement->identity()));
  return make_subgroup_unchecked(group, std::move(s));
}

Subgroup SemidirectProduct::complement_subgroup() const {
  std::vector<elem_t> s;
  for (std::size_t l = 0; l < complement->order(); ++l) s.push_back(encode(normal->identity(), elem_t(l)));
  return make_subgroup_unchecked(group, std::move(s));
}

SemidirectProduct semidirect_product(const GroupPtr& h, const GroupPtr& l, const std::vector<GroupMap>& action,
                                     std::string name) {
  if (action.size() != l->order()) {
    throw Error(ErrorCode::invalid_input, "action needs one map per element of the acting group");
  }
  for (std::size_t x = 0; x < action.size(); ++x) {
    const auto& a = action[x];
    if (a.images.size() != h->order()) throw Error(ErrorCode::invalid_input, "action map has wrong size");
    for (elem_t v : a.images) {
      if (v >= h->order()) throw Error(ErrorCode::invalid_input, "action image out of range");
    }
    GroupMap on_h{h, h, a.images};
    if (!is_automorphism(on_h)) {
      throw Error(ErrorCode::action_not_homomorphism, "action of " + l->label(elem_t(x)) + " is not an automorphism");
    }
  }
  for (std::size_t x = 0; x < l->order(); ++x) {
    for (std::size_t y = 0; y < l->order(); ++y) {
      const auto& xy = action[l->mul(elem_t(x), elem_t(y))].images;
      for (std::size_t k = 0; k < h->order(); ++k) {
        if (xy[k] != action[x].images[action[y].images[k]]) {
          throw Error(ErrorCode::action_not_homomorphism, "act(" + l->label(elem_t(x)) + l->label(elem_t(y)) +
                                                              ") != act(" + l->label(elem_t(x)) + ") o act(" +
                                                              l->label(elem_t(y)) + ")");
        }
      }
    }
  }

  const std::size_t n = checked_order_product(h->order(), l->order());
  check_order_cap(n, "semidirect product");
  SemidirectProduct sp;
  sp.normal = h;
  sp.complement = l;
  std::vector<elem_t> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    elem_t ha = elem_t(a) / elem_t(l->order()), la = elem_t(a) % elem_t(l->order());
    labels[a] = "(" + h->label(ha) + "," + l->label(la) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      elem_t hb = elem_t(b) / elem_t(l->order()), lb = elem_t(b) % elem_t(l->order());
      flat[a * n + b] = sp.encode(h->mul(ha, action[la](hb)), l->mul(la, lb));
    }
  }
  if (name.empty()) name = h->name() + ":" + l->name();
  sp.group = FiniteGroup::from_flat_table(std::move(flat), n, std::move(name), std::move(labels));
  return sp;
}

Subgroup WreathProduct::top_subgroup() const {
  std::vector<elem_t> s;
  for (std::size_t l = 0; l < top->order(); ++l) s.push_back(encode(elem_t(l), base.group->identity()));
  return make_subgroup_unchecked(group, std::move(s));
}

Subgroup WreathProduct::base_subgroup() const {
  std::vector<elem_t> s;
  for (std::size_t f = 0; f < base.group->order(); ++f) s.push_back(encode(top->identity(), elem_t(f)));
  return make_subgroup_unchecked(group, std::move(s));
}

WreathProduct wreath_product(const GroupPtr& h, const GroupPtr& l, std::string name) {
  std::size_t base_order = 1;
  for (std::size_t i = 0; i < l->order(); ++i) base_order = checked_order_product(base_order, h->order());
  const std::size_t n = checked_order_product(base_order, l->order());
  check_order_cap(n, "wreath product");

  WreathProduct w;
  w.base_factor = h;
  w.top = l;
  w.base = direct_power(h, l->order(), "Fun(" + l->name() + "," + h->name() + ")");
  const std::size_t m = base_order;
  const std::size_t k = l->order();

  // shifted[lp * m + f] = f^{lp}
  std::vector<elem_t> shifted(k * m);
  for (std::size_t f = 0; f < m; ++f) {
    auto fv = w.base.decode(elem_t(f));
    std::vector<elem_t> g(k);
    for (std::size_t lp = 0; lp < k; ++lp) {
      for (std::size_t x = 0; x < k; ++x) g[x] = fv[l->mul(elem_t(lp), elem_t(x))];
      shifted[lp * m + f] = w.base.encode(g);
    }
  }

  std::vector<elem_t> flat(n * n);
  std::vector<std::string> labels(n);
  const FiniteGroup& base = *w.base.group;
  for (std::size_t a = 0; a < n; ++a) {
    elem_t la = elem_t(a / m), fa = elem_t(a % m);
    labels[a] = l->label(la) + base.label(fa);
    for (std::size_t b = 0; b < n; ++b) {
      elem_t lb = elem_t(b / m), fb = elem_t(b % m);
      flat[a * n + b] = w.encode(l->mul(la, lb), base.mul(shifted[std::size_t(lb) * m + fa], fb));
    }
  }
  if (name.empty()) name = h->name() + "wr" + l->name();
  w.group = FiniteGroup::from_flat_table(std::move(flat), n, std::move(name), std::move(labels));
  return w;
}

}  // namespace rbg
