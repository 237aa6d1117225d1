#include "rbg/operator.hpp"

#include <algorithm>

#include "rbg/morphism.hpp"

namespace rbg {

RBOperator::RBOperator(GroupPtr group, std::vector<elem_t> images, int weight)
    : group_(std::move(group)), images_(std::move(images)), weight_(weight), cache_(std::make_shared<Cache>()) {
  if (weight_ != 1 && weight_ != -1) {
    throw Error(ErrorCode::invalid_input, "weight must be 1 or -1, got " + std::to_string(weight_));
  }
  if (images_.size() != group_->order()) {
    throw Error(ErrorCode::invalid_input, "expected " + std::to_string(group_->order()) + " images, got " +
                                              std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= group_->order()) {
      throw Error(ErrorCode::invalid_input, "image of element " + std::to_string(i) + " out of range");
    }
  }
}

std::optional<std::pair<elem_t, elem_t>> first_violation(const FiniteGroup& g, const std::vector<elem_t>& b,
                                                         int weight) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    const elem_t bx = b[x];
    const elem_t bx_inv = g.inv(bx);
    // weight +1: B(x)B(h) = B(x B(x) h B(x)^-1); weight -1: C(x)C(h) = C(C(x) h C(x)^-1 x)
    const elem_t left = weight == 1 ? g.mul(elem_t(x), bx) : bx;
    const elem_t right = weight == 1 ? bx_inv : g.mul(bx_inv, elem_t(x));
    auto row = g.row(bx);
    for (std::size_t h = 0; h < n; ++h) {
      if (row[b[h]] != b[g.mul(g.mul(left, elem_t(h)), right)]) return std::make_pair(elem_t(x), elem_t(h));
    }
  }
  return std::nullopt;
}

std::vector<std::string> lemma_failures(const FiniteGroup& g, const std::vector<elem_t>& b) {
  std::vector<std::string> out;
  const elem_t e = g.identity();
  if (b[e] != e) out.push_back("B(e) != e");
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    const elem_t x = elem_t(xi);
    const elem_t bx = b[x];
    const std::string at = " at g=" + g.label(x);
    if (g.mul(bx, b[g.inv(x)]) != b[g.commutator(g.inv(x), g.inv(bx))]) out.push_back("B(g)B(g^-1) identity" + at);
    if (g.mul(bx, b[bx]) != b[g.mul(x, bx)]) out.push_back("B(g)B(B(g)) identity" + at);
    if (g.inv(bx) != b[g.mul({g.inv(bx), g.inv(x), bx})]) out.push_back("B(g)^-1 identity" + at);
    if (bx == e) {
      for (std::size_t h = 0; h < g.order(); ++h) {
        if (b[g.mul(x, elem_t(h))] != b[h]) {
          out.push_back("coset constancy" + at + " h=" + g.label(elem_t(h)));
          break;
        }
      }
    }
  }
  return out;
}

const VerifyResult& RBOperator::verify() const {
  Cache& c = *cache_;
  std::call_once(c.once, [&] {
    VerifyResult r;
    r.witness = first_violation(*group_, images_, weight_);
    r.verdict = r.witness ? Verdict::invalid : Verdict::valid;
    if (r.valid()) {
      if (weight_ == 1) {
        r.lemma_failures = lemma_failures(*group_, images_);
      } else {
        std::vector<elem_t> plus(images_.size());
        for (std::size_t x = 0; x < plus.size(); ++x) plus[x] = group_->mul(group_->inv(elem_t(x)), images_[x]);
        if (first_violation(*group_, plus, 1)) r.lemma_failures.push_back("weight conversion g^-1 C(g) fails");
        for (auto& f : lemma_failures(*group_, plus)) r.lemma_failures.push_back("via g^-1 C(g): " + f);
      }
    }
    c.result = std::move(r);
  });
  return c.result;
}

Verdict RBOperator::status() const { return verify().verdict; }

void RBOperator::set_image(elem_t g, elem_t v) {
  if (g >= images_.size() || v >= images_.size()) throw Error(ErrorCode::invalid_input, "element out of range");
  images_[g] = v;
  cache_ = std::make_shared<Cache>();
}

void require_valid(const RBOperator& b, int weight, const char* what) {
  if (b.weight() != weight) {
    throw Error(ErrorCode::invalid_input, std::string(what) + " needs a weight " + std::to_string(weight) + " operator");
  }
  const auto& r = b.verify();
  if (!r.valid()) {
    throw Error(ErrorCode::invalid_input, std::string(what) + " needs a valid operator; identity fails at (" +
                                              b.group()->label(r.witness->first) + ", " +
                                              b.group()->label(r.witness->second) + ")");
  }
}

RBOperator elementary(const GroupPtr& g, Elementary which) {
  std::vector<elem_t> img(g->order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = which == Elementary::b0 ? g->identity() : g->inv(elem_t(x));
  RBOperator op(g, std::move(img));
  op.with_provenance({which == Elementary::b0 ? "B0" : "B-1", {}});
  return op;
}

RBOperator tilde(const RBOperator& b) {
  require_valid(b, 1, "tilde");
  const FiniteGroup& g = *b.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) {
    elem_t xi = g.inv(elem_t(x));
    img[x] = g.mul(xi, b(xi));
  }
  return RBOperator(b.group(), std::move(img), 1);
}

RBOperator conjugate(const RBOperator& b, const GroupMap& phi) {
  require_valid(b, b.weight(), "conjugate");
  if (phi.domain->order() != b.group()->order() || !is_automorphism(GroupMap{b.group(), b.group(), phi.images})) {
    throw Error(ErrorCode::invalid_input, "conjugate needs an automorphism of the operator's group");
  }
  GroupMap inv = inverse(GroupMap{b.group(), b.group(), phi.images});
  std::vector<elem_t> img(b.images().size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = inv(b(phi(elem_t(x))));
  return RBOperator(b.group(), std::move(img), b.weight());
}

RBOperator to_weight_minus(const RBOperator& b) {
  require_valid(b, 1, "weight conversion");
  const FiniteGroup& g = *b.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.mul(elem_t(x), b(elem_t(x)));
  return RBOperator(b.group(), std::move(img), -1);
}

RBOperator from_weight_minus(const RBOperator& c) {
  require_valid(c, -1, "weight conversion");
  const FiniteGroup& g = *c.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.mul(g.inv(elem_t(x)), c(elem_t(x)));
  return RBOperator(c.group(), std::move(img), 1);
}

RBOperator inverse_argument(const RBOperator& b) {
  require_valid(b, 1, "weight conversion");
  const FiniteGroup& g = *b.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = b(g.inv(elem_t(x)));
  return RBOperator(b.group(), std::move(img), -1);
}

RBOperator tilde_minus(const RBOperator& c) {
  require_valid(c, -1, "weight -1 tilde");
  const FiniteGroup& g = *c.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.mul(elem_t(x), c(g.inv(elem_t(x))));
  return RBOperator(c.group(), std::move(img), -1);
}

GroupMap bplus(const RBOperator& b) {
  require_valid(b, 1, "bplus");
  const FiniteGroup& g = *b.group();
  std::vector<elem_t> img(g.order());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.mul(elem_t(x), b(elem_t(x)));
  return {b.group(), b.group(), std::move(img)};
}

Subgroup kernel(const RBOperator& b) {
  require_valid(b, b.weight(), "kernel");
  std::vector<elem_t> k;
  for (std::size_t x = 0; x < b.images().size(); ++x) {
    if (b(elem_t(x)) == b.group()->identity()) k.push_back(elem_t(x));
  }
  return Subgroup::from_elements(b.group(), std::move(k));
}

Subgroup image(const RBOperator& b) {
  require_valid(b, b.weight(), "image");
  return Subgroup::from_elements(b.group(), b.images());
}

SplittingResult is_splitting(const RBOperator& b) {
  require_valid(b, 1, "is_splitting");
  const FiniteGroup& g = *b.group();
  SplittingResult r;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (b(g.mul(elem_t(x), b(elem_t(x)))) != g.identity()) {
      r.witness = elem_t(x);
      return r;
    }
  }
  r.splitting = true;
  Subgroup k = kernel(b);
  Subgroup im = image(b);
  if (k.size() * im.size() != g.order() || !intersection(k, im).is_trivial()) {
    throw Error(ErrorCode::structure_violation, "splitting operator without exact kernel-image factorization");
  }
  for (elem_t y : im.elements()) {
    if (b(y) != g.inv(y)) {
      throw Error(ErrorCode::structure_violation, "splitting operator does not invert " + g.label(y));
    }
  }
  r.factorization.emplace(std::move(k), std::move(im));
  return r;
}

std::size_t deep(const RBOperator& b) {
  require_valid(b, 1, "deep");
  const FiniteGroup& g = *b.group();
  std::vector<elem_t> cur(g.order());
  for (std::size_t x = 0; x < cur.size(); ++x) cur[x] = elem_t(x);
  for (std::size_t m = 0;; ++m) {
    std::vector<elem_t> next;
    next.reserve(cur.size());
    for (elem_t x : cur) next.push_back(b(x));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() == cur.size()) return m;
    cur = std::move(next);
  }
}

}  // namespace rbg
