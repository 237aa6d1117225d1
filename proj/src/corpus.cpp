#include "rbg/corpus.hpp"

#include <map>
#include <mutex>

#include "rbg/products.hpp"

namespace rbg {

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_input, "cyclic group of order 0");
  std::vector<elem_t> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = elem_t((a + b) % n);
  }
  return FiniteGroup::from_flat_table(std::move(flat), n, n == 1 ? "trivial" : "Z" + std::to_string(n),
                                      std::move(labels));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_input, "dihedral group needs n >= 2");
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = std::uint32_t((i + 1) % n);
    s[i] = std::uint32_t((n - i) % n);
  }
  if (n == 2) {
    // The 2-gon: act on 4 points so that r and s stay distinct involutions.
    return FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}, "D2", {"r", "s"});
  }
  return FiniteGroup::from_permutations({r, s}, "D" + std::to_string(n), {"r", "s"});
}

GroupPtr quaternion8() {
  // index = 4 * sign + unit, unit in {1, i, j, k}
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<elem_t> flat(64);
  std::vector<std::string> labels(8);
  for (int a = 0; a < 8; ++a) {
    labels[a] = std::string(a >= 4 ? "-" : "") + names[a % 4];
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int sign = (a / 4 + b / 4 + unit_sign[ua][ub]) % 2;
      flat[a * 8 + b] = elem_t(4 * sign + unit_mul[ua][ub]);
    }
  }
  return FiniteGroup::from_flat_table(std::move(flat), 8, "Q8", std::move(labels));
}

GroupPtr heisenberg(std::size_t p) {
  if (p < 2) throw Error(ErrorCode::invalid_input, "heisenberg group needs p >= 2");
  const std::size_t n = p * p * p;
  auto idx = [p](std::size_t x, std::size_t z, std::size_t y) { return elem_t((x * p + z) * p + y); };
  std::vector<elem_t> flat(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a / (p * p), z = (a / p) % p, y = a % p;
    labels[a] = "(" + std::to_string(x) + "," + std::to_string(z) + "," + std::to_string(y) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x2 = b / (p * p), z2 = (b / p) % p, y2 = b % p;
      flat[a * n + b] = idx((x + x2) % p, (z + z2 + x * y2) % p, (y + y2) % p);
    }
  }
  return FiniteGroup::from_flat_table(std::move(flat), n, "Heis" + std::to_string(p), std::move(labels));
}

GroupPtr symmetric(std::size_t n) {
  if (n <= 1) return cyclic(1);
  if (n == 2) return FiniteGroup::from_permutations({{1, 0}}, "S2", {"s1"});
  if (n == 3) return FiniteGroup::from_permutations({{1, 0, 2}, {0, 2, 1}}, "S3", {"s1", "s2"});
  Permutation cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = std::uint32_t((i + 1) % n);
    swap[i] = std::uint32_t(i);
  }
  std::swap(swap[0], swap[1]);
  return FiniteGroup::from_permutations({cycle, swap}, "S" + std::to_string(n), {"c", "t"});
}

GroupPtr alternating(std::size_t n) {
  if (n <= 2) return cyclic(1);
  Permutation three(n);
  for (std::size_t i = 0; i < n; ++i) three[i] = std::uint32_t(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Permutation> gens{three};
  std::vector<std::string> names{"x"};
  if (n >= 4) {
    Permutation other(n);
    for (std::size_t i = 0; i < n; ++i) other[i] = std::uint32_t(i);
    if (n % 2 == 1) {
      for (std::size_t i = 0; i < n; ++i) other[i] = std::uint32_t((i + 1) % n);
    } else {
      // (0 1)(2 3) for A4; (1 2 ... n-1) for larger even n
      if (n == 4) {
        other = {1, 0, 3, 2};
      } else {
        for (std::size_t i = 1; i < n; ++i) other[i] = std::uint32_t(i + 1 < n ? i + 1 : 1);
      }
    }
    gens.insert(gens.begin(), other);
    names = {"y", "x"};
  }
  return FiniteGroup::from_permutations(gens, "A" + std::to_string(n), names);
}

namespace {

GroupPtr build(const std::string& name) {
  if (name == "trivial") return cyclic(1);
  if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
    return cyclic(std::stoul(name.substr(1)));
  }
  if (name == "Z2xZ2") return direct_power(cyclic(2), 2, name).group;
  if (name == "Z4xZ2") return direct_product(cyclic(4), cyclic(2), name).group;
  if (name == "Z2xZ2xZ2") return direct_power(cyclic(2), 3, name).group;
  if (name == "S3") return symmetric(3);
  if (name == "D4") return dihedral(4);
  if (name == "Q8") return quaternion8();
  if (name == "A4") return alternating(4);
  if (name == "S4") return symmetric(4);
  if (name == "D6") return dihedral(6);
  if (name == "Heis3") return heisenberg(3);
  if (name == "A5") return alternating(5);
  throw Error(ErrorCode::invalid_input, "unknown corpus group '" + name + "'");
}

}  // namespace

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"trivial"};
    for (int n = 2; n <= 16; ++n) {
      v.push_back("Z" + std::to_string(n));
      if (n == 4) v.push_back("Z2xZ2");
      if (n == 6) v.push_back("S3");
      if (n == 8) {
        for (const char* s : {"Z4xZ2", "Z2xZ2xZ2", "D4", "Q8"}) v.push_back(s);
      }
      if (n == 12) {
        for (const char* s : {"A4", "D6"}) v.push_back(s);
      }
    }
    for (const char* s : {"S4", "Heis3", "A5"}) v.push_back(s);
    return v;
  }();
  return names;
}

GroupPtr corpus_group(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  bool known = false;
  for (const auto& n : corpus_names()) known = known || n == name;
  if (!known) throw Error(ErrorCode::invalid_input, "unknown corpus group '" + name + "'");
  GroupPtr g = build(name);
  cache.emplace(name, g);
  return g;
}

std::vector<GroupPtr> corpus_groups(std::size_t lo, std::size_t hi) {
  std::vector<GroupPtr> out;
  for (const auto& n : corpus_names()) {
    GroupPtr g = corpus_group(n);
    if (g->order() >= lo && g->order() <= hi) out.push_back(g);
  }
  return out;
}

}  // namespace rbg
