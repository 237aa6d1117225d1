#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbg/subgroup.hpp"

namespace rbg {

enum class Verdict { unchecked, valid, invalid };

struct VerifyResult {
  Verdict verdict = Verdict::unchecked;
  /// Lexicographically first (g, h) breaking the identity.
  std::optional<std::pair<elem_t, elem_t>> witness;
  /// Consequences that must hold for every valid operator; a non-empty list
  /// means a bug, not bad input.
  std::vector<std::string> lemma_failures;

  bool valid() const { return verdict == Verdict::valid; }
};

/// Where an operator came from: construction name plus parameters.
struct Provenance {
  std::string construction;
  std::map<std::string, std::string> params;
};

/// Total map G -> G with a declared weight. Weight +1:
///   B(g)B(h) = B(g B(g) h B(g)^-1)
/// Weight -1:
///   C(g)C(h) = C(C(g) h C(g)^-1 g)
/// Verification is lazy and cached; set_image drops the cache.
class RBOperator {
 public:
  RBOperator(GroupPtr group, std::vector<elem_t> images, int weight = 1);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<elem_t>& images() const noexcept { return images_; }
  int weight() const noexcept { return weight_; }
  elem_t operator()(elem_t g) const { return images_[g]; }

  const VerifyResult& verify() const;
  Verdict status() const;
  bool valid() const { return verify().valid(); }

  void set_image(elem_t g, elem_t v);

  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  RBOperator& with_provenance(Provenance p) {
    provenance_ = std::move(p);
    return *this;
  }

  friend bool operator==(const RBOperator& a, const RBOperator& b) {
    return a.weight_ == b.weight_ && a.images_ == b.images_;
  }
  friend bool operator<(const RBOperator& a, const RBOperator& b) {
    if (a.weight_ != b.weight_) return a.weight_ > b.weight_;
    return a.images_ < b.images_;
  }

 private:
  struct Cache {
    std::once_flag once;
    VerifyResult result;
  };

  GroupPtr group_;
  std::vector<elem_t> images_;
  int weight_;
  std::optional<Provenance> provenance_;
  mutable std::shared_ptr<Cache> cache_;
};

/// Single identity check without the derived identity cross-checks; used as the search
/// filter. Returns the lexicographically first failing pair.
std::optional<std::pair<elem_t, elem_t>> first_violation(const FiniteGroup& g, const std::vector<elem_t>& images,
                                                         int weight);

/// Consequences of the weight +1 identity: B(e) = e,
///   B(g)B(g^-1) = B([g^-1, B(g)^-1]),  B(g)B(B(g)) = B(gB(g)),
///   B(g)^-1 = B(B(g)^-1 g^-1 B(g)),
/// and B(gh) = B(h) whenever B(g) = e. Returns human-readable failures,
/// empty when all hold.
std::vector<std::string> lemma_failures(const FiniteGroup& g, const std::vector<elem_t>& images);

enum class Elementary { b0, b_minus1 };
RBOperator elementary(const GroupPtr& g, Elementary which);

/// B~(g) = g^-1 B(g^-1)
RBOperator tilde(const RBOperator& b);
/// B^(phi) = phi^-1 B phi. Right action: conjugate(conjugate(B, f), h) =
/// conjugate(B, compose(f, h)).
RBOperator conjugate(const RBOperator& b, const GroupMap& phi);

/// C(g) = g B(g), weight +1 -> -1. Bijective, inverted by from_weight_minus.
RBOperator to_weight_minus(const RBOperator& b);
/// B(g) = g^-1 C(g), weight -1 -> +1.
RBOperator from_weight_minus(const RBOperator& c);
/// C(g) = B(g^-1), weight +1 -> -1.
RBOperator inverse_argument(const RBOperator& b);
/// C~(g) = g C(g^-1), weight -1 -> -1.
RBOperator tilde_minus(const RBOperator& c);

/// g -> g B(g)
GroupMap bplus(const RBOperator& b);
Subgroup kernel(const RBOperator& b);
Subgroup image(const RBOperator& b);

struct SplittingResult {
  bool splitting = false;
  /// When splitting: G = kernel * image, exact.
  std::optional<std::pair<Subgroup, Subgroup>> factorization;
  /// First g with B(g B(g)) != e when not splitting.
  std::optional<elem_t> witness;
};
SplittingResult is_splitting(const RBOperator& b);

/// Minimal m with B^m(G) = B^{m+1}(G).
std::size_t deep(const RBOperator& b);

/// Throws invalid_input unless b verifies at the given weight.
void require_valid(const RBOperator& b, int weight, const char* what);

}  // namespace rbg
