#include "rbg/config.hpp"

#include <cstdlib>
#include <string>

#include "rbg/error.hpp"

namespace rbg {

namespace {

std::size_t env_size(const char* var, std::size_t fallback) {
  const char* raw = std::getenv(var);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    auto v = std::stoull(raw);
    return v == 0 ? fallback : static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

Config& config() {
  static Config cfg = [] {
    Config c;
    c.order_cap = env_size("RBG_ORDER_CAP", c.order_cap);
    c.threads = static_cast<unsigned>(env_size("RBG_THREADS", c.threads));
    return c;
  }();
  return cfg;
}

void check_order_cap(std::size_t order, const char* what) {
  if (order > config().order_cap) {
    throw Error(ErrorCode::order_cap_exceeded, std::string(what) + " has order " + std::to_string(order) +
                                                   " above the cap " + std::to_string(config().order_cap));
  }
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::no_identity: return "NoIdentity";
    case ErrorCode::not_latin_square: return "NotLatinSquare";
    case ErrorCode::order_cap_exceeded: return "OrderCapExceeded";
    case ErrorCode::action_not_homomorphism: return "ActionNotHomomorphism";
    case ErrorCode::not_normal: return "NotNormal";
    case ErrorCode::not_exact_factorization: return "NotExactFactorization";
    case ErrorCode::decomposition_not_unique: return "DecompositionNotUnique";
    case ErrorCode::commutation_fails: return "CommutationFails";
    case ErrorCode::image_not_abelian: return "ImageNotAbelian";
    case ErrorCode::not_homomorphism: return "NotHomomorphism";
    case ErrorCode::invalid_matrix: return "InvalidMatrix";
    case ErrorCode::trivial_h: return "TrivialH";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::cond_fails: return "CondFails";
    case ErrorCode::schema_violation: return "SchemaViolation";
    case ErrorCode::structure_violation: return "StructureViolation";
  }
  return "Unknown";
}

}  // namespace rbg
