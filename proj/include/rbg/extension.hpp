#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbg/operator.hpp"

namespace rbg {

/// A partial map beta: a_i -> u_i on a generating set A of G.
struct ExtensionProblem {
  GroupPtr group;
  std::vector<elem_t> generators;
  std::vector<elem_t> images;

  /// Checks sizes, ranges and <A> = G; throws invalid_input.
  static ExtensionProblem make(GroupPtr g, std::vector<elem_t> generators, std::vector<elem_t> images);
};

/// Word t_{i_1}^{k_1} o ... o t_{i_s}^{k_s} in the free group on the letters
/// t_i, one per generator. Letter indices are 0-based.
struct BarWord {
  std::vector<std::pair<std::size_t, long long>> letters;

  /// Merges equal neighbours and drops zero exponents.
  BarWord& normalize();
  BarWord inverse() const;
  /// Total absolute exponent.
  std::size_t length() const;
  /// "t1^2*t3^-1", 1-based letter names; "e" for the empty word.
  std::string to_string() const;

  friend BarWord operator*(const BarWord& a, const BarWord& b);
  friend bool operator==(const BarWord&, const BarWord&) = default;
};

/// pi(w) = (a_1 u_1)^{k_1} ... (a_s u_s)^{k_s} u_s^{-k_s} ... u_1^{-k_1}
elem_t pi_eval(const ExtensionProblem& p, const BarWord& w);
/// beta(w) = u_1^{k_1} ... u_s^{k_s}
elem_t beta_bar_eval(const ExtensionProblem& p, const BarWord& w);

/// Random reduced words with up to max_len syllables and exponents in
/// [-max_exp, max_exp] \ {0}. Deterministic in seed.
std::vector<BarWord> random_words(const ExtensionProblem& p, std::size_t count, std::size_t max_len, long long max_exp,
                                  std::uint64_t seed);

struct WordIdentityResult {
  bool holds = true;
  std::vector<std::string> failures;
};
/// Checks, for all w, w' in the sample:
///   pi(w^-1) = beta(w)^-1 pi(w)^-1 beta(w)
///   pi(w o w') = pi(w) beta(w) pi(w') beta(w)^-1
///   pi(w'^-1 o w o w') = beta(w')^-1 pi(w')^-1 pi(w) beta(w) pi(w') beta(w)^-1 beta(w')
/// plus multiplicativity of w -> (pi(w) beta(w), beta(w)).
WordIdentityResult word_identity_selftest(const ExtensionProblem& p, const std::vector<BarWord>& sample);

/// H = <(a_i u_i, u_i)> <= G x G, enumerated breadth-first from (e, e) by
/// right multiplication with the generator pairs and their inverses. Each
/// pair carries the word that reached it, so pair k is the image of
/// words[k] under w -> (pi(w) beta(w), beta(w)).
struct Closure {
  std::vector<std::pair<elem_t, elem_t>> pairs;
  std::vector<BarWord> words;
  /// pi value x y^-1 -> indices of the pairs in that fiber, BFS order.
  std::vector<std::vector<std::size_t>> fiber;
};
Closure closure(const ExtensionProblem& p);

struct CondResult {
  bool holds = false;
  /// (w, w') with pi(w) = pi(w') and beta(w) != beta(w').
  std::optional<std::pair<BarWord, BarWord>> witness;
};
/// pi(w) = pi(w') => beta(w) = beta(w'); equivalent to H meeting the
/// diagonal trivially.
CondResult cond_check(const ExtensionProblem& p);
CondResult cond_check(const ExtensionProblem& p, const Closure& c);

/// G-bar = <A-bar>/R realised as H with the product of G x G. Element k is
/// the class of words[k].
struct GBar {
  GroupPtr group;
  std::vector<std::pair<elem_t, elem_t>> pairs;
  std::vector<BarWord> words;
  /// pi-bar([w]) = x y^-1
  std::vector<elem_t> pi_bar;
  /// beta-bar([w]) = y
  std::vector<elem_t> beta_bar;
  bool pi_bar_bijective = false;
};
/// Throws cond_fails when (cond) does not hold.
GBar g_bar_beta(const ExtensionProblem& p);

enum class ExtensionStatus { extends, no_extension, undecided };
std::string to_string(ExtensionStatus s);

enum class ExtensionBasis {
  /// (cond) and pi-bar bijective: B(pi-bar(x)) = beta-bar(x).
  theorem,
  /// (cond) fails: the witness rules out every extension.
  cond_fails,
  /// Decided by scanning the full operator census of G.
  census,
  /// Not decided: pi-bar not bijective and G above the census cap.
  none,
};
std::string to_string(ExtensionBasis b);

struct ExtensionResult {
  ExtensionStatus status = ExtensionStatus::undecided;
  ExtensionBasis basis = ExtensionBasis::none;
  CondResult cond;
  std::optional<GBar> gbar;
  std::optional<RBOperator> op;
  /// Census operators agreeing with beta on A (census basis only).
  std::size_t census_matches = 0;
};
ExtensionResult extend_to_rb(const ExtensionProblem& p);

}  // namespace rbg
