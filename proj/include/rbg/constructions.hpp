#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rbg/operator.hpp"
#include "rbg/products.hpp"
#include "rbg/rb_matrix.hpp"

namespace rbg {

// Every construction below returns an operator that has already passed
// verify(); a failed verify after the preconditions held is reported as
// structure_violation. Operators on a subgroup L are given on
// induced(L).group, whose local index i is the i-th smallest element of L.

/// B(hl) = l^-1 for an exact factorization G = HL.
RBOperator splitting_from_factorization(const Subgroup& h, const Subgroup& l);

struct TriangularOptions {
  /// Assert G_B ≅ H × L_C × M^op with is_isomorphic.
  bool check_structure = true;
};
/// B(hlm) = C(l) m^-1 when G = HLM uniquely, [H, L] = e and [C(L), M] = e.
RBOperator triangular_splitting(const Subgroup& h, const Subgroup& l, const Subgroup& m, const RBOperator& c,
                                TriangularOptions opts = {});

/// B(hl) = C(l) for G = H ⋊ L, H normal. Checks that H and L stay
/// subgroups of G_B with H normal there and L carrying the L_C product.
RBOperator semidirect_rb(const Subgroup& h, const Subgroup& l, const RBOperator& c);

enum class HomMode { hom, antihom };
/// f: G -> G with image inside the abelian subgroup `target` (default: the
/// image of f itself).
RBOperator hom_to_abelian(const GroupMap& f, HomMode mode, std::optional<Subgroup> target = std::nullopt);

struct Refusal {
  std::optional<RBOperator> op;
  /// Failing pair of the RB identity when op is empty.
  std::optional<std::pair<elem_t, elem_t>> witness;
};

/// B(g) = g^n.
Refusal power_map(const GroupPtr& g, long long n);

/// B(x) = g^-1 x^-1 g. Valid exactly when [g, G] ⊆ Z(G).
Refusal central_conjugation(const GroupPtr& g, elem_t by);

/// B(x) = a x b. Valid exactly when G is abelian and b = a^-1.
Refusal affine_map_check(const GroupPtr& g, elem_t a, elem_t b);

/// B(h, l) = (B_H(h), B_L(l)) on direct_product(H, L).
RBOperator direct_product_rb(const RBOperator& bh, const RBOperator& bl);

/// On H × L with L abelian, |L| > 2: B(h, l) = (e, psi(l)) for the first
/// psi in Aut(L) making B non-splitting.
RBOperator endomorphism_nonsplitting(const GroupPtr& h, const GroupPtr& l);

enum class CascadeVariant { plain, tilde };
/// plain: (g1..gn) -> (e, g1, g2 g1, ..., g_{n-1}...g1)
/// tilde: (g1..gn) -> (g1^-1, g2^-1 g1^-1, ..., gn^-1...g1^-1)
RBOperator cascade_rb(const GroupPtr& g, std::size_t n, CascadeVariant variant);

/// The matrix whose power_product_rb equals cascade_rb.
RBMatrix cascade_matrix(std::size_t n, CascadeVariant variant);

/// (g1..gn) -> (t1..tn), t_i = g_i^{r_ii} g_{i-1}^{r_{i-1,i}} ... g_1^{r_1i}.
RBOperator power_product_rb(const GroupPtr& g, const RBMatrix& r);

/// t_i = g_i^{r_ii} psi_i(g_{i-1}^{r_{i-1,i}} psi_{i-1}(... psi_2(g_1^{r_1i}))).
/// psis[k] is psi_{k+2}; n - 1 automorphisms of G. Also checked equal to
/// conjugate(power_product_rb(g, r), phi) for phi = twist_automorphism.
RBOperator twisted_power_product_rb(const GroupPtr& g, const RBMatrix& r, const std::vector<GroupMap>& psis);

/// phi(g1..gn) = (g1, psi2^-1(g2), psi2^-1 psi3^-1(g3), ...)
GroupMap twist_automorphism(const ProductGroup& gn, const std::vector<GroupMap>& psis);

/// B(h1, h2, l) = (e, h1, e) on H × H × L; throws trivial_h for |H| = 1.
RBOperator nonsplitting_witness(const GroupPtr& h, const GroupPtr& l);

enum class WreathVariant { inverse_base, top_endo, componentwise };
struct WreathArgs {
  WreathVariant variant = WreathVariant::inverse_base;
  /// top_endo: endomorphism of L (default identity).
  std::optional<GroupMap> phi;
  /// componentwise: operators on L and on the base Fun(L, H).
  std::optional<RBOperator> b_top;
  std::optional<RBOperator> b_base;
};
/// Operators on wreath_product(h, l):
///   inverse_base  B(l f) = f^-1
///   top_endo      B(l f) = phi(l), L abelian
///   componentwise B(l f) = B_L(l) B_H(f), trivial action (|L| = 1 or |H| = 1)
RBOperator wreath_rb(const WreathProduct& w, const WreathArgs& args);

}  // namespace rbg
