#include "rbg/group.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "rbg/config.hpp"

namespace rbg {

namespace {

std::string describe(const std::vector<std::string>& labels, elem_t g) {
  return g < labels.size() ? labels[g] + "(#" + std::to_string(g) + ")" : std::to_string(g);
}

}  // namespace

GroupPtr FiniteGroup::from_cayley_table(const Table& table, std::string name,
                                        std::vector<std::string> labels) {
  const std::size_t n = table.size();
  std::vector<elem_t> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorCode::invalid_input, "table row " + std::to_string(r) + " has " +
                                                std::to_string(table[r].size()) + " entries, expected " +
                                                std::to_string(n));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return from_flat_table(std::move(flat), n, std::move(name), std::move(labels));
}

GroupPtr FiniteGroup::from_flat_table(std::vector<elem_t> flat, std::size_t n, std::string name,
                                      std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::invalid_input, "empty table");
  check_order_cap(n, "table");
  if (flat.size() != n * n) throw Error(ErrorCode::invalid_input, "table is not square");
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::invalid_input, "expected " + std::to_string(n) + " labels, got " +
                                              std::to_string(labels.size()));
  }
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] >= n) {
      throw Error(ErrorCode::invalid_input, "entry (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                                                ") = " + std::to_string(flat[i]) + " out of range");
    }
  }

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      elem_t v = flat[r * n + c];
      if (seen[v]) {
        throw Error(ErrorCode::not_latin_square,
                    "row " + std::to_string(r) + " repeats element " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      elem_t v = flat[r * n + c];
      if (seen[v]) {
        throw Error(ErrorCode::not_latin_square,
                    "column " + std::to_string(c) + " repeats element " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }

  // A Latin square has at most one row equal to the identity permutation.
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = flat[e * n + x] == x && flat[x * n + e] == x;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorCode::no_identity, "no element acts trivially on both sides");

  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  FiniteGroup& g = *grp;
  g.order_ = n;
  g.identity_ = static_cast<elem_t>(identity);
  g.table_ = std::move(flat);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);

  g.inverses_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.table_[x * n + y] == identity) {
        g.inverses_[x] = static_cast<elem_t>(y);
        break;
      }
    }
    if (g.table_[std::size_t(g.inverses_[x]) * n + x] != identity) {
      throw Error(ErrorCode::not_associative,
                  "right inverse of " + describe(g.labels_, static_cast<elem_t>(x)) + " is not a left inverse");
    }
  }

  g.element_orders_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    elem_t p = static_cast<elem_t>(x);
    while (p != identity) {
      p = g.table_[std::size_t(p) * n + x];
      ++k;
    }
    g.element_orders_[x] = k;
  }

  std::vector<elem_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  g.generators_ = small_generating_set(g, all);
  if (closure(g, g.generators_).size() != n) {
    throw Error(ErrorCode::not_associative, "generators do not reach every element");
  }

  // Light's test: (xy)s = x(ys) for every generator s suffices, because the
  // associative elements of a magma are closed under products.
  for (elem_t s : g.generators_) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        elem_t lhs = g.table_[std::size_t(g.table_[x * n + y]) * n + s];
        elem_t rhs = g.table_[x * n + g.table_[y * n + s]];
        if (lhs != rhs) {
          throw Error(ErrorCode::not_associative, "(xy)z != x(yz) for x=" + describe(g.labels_, elem_t(x)) +
                                                      " y=" + describe(g.labels_, elem_t(y)) +
                                                      " z=" + describe(g.labels_, s));
        }
      }
    }
  }

  for (std::size_t x = 0; x < n && g.abelian_; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (g.table_[x * n + y] != g.table_[y * n + x]) {
        g.abelian_ = false;
        break;
      }
    }
  }
  return grp;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Permutation>& gens, std::string name,
                                        std::vector<std::string> gen_names) {
  const std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != degree) {
      throw Error(ErrorCode::invalid_input, "generator " + std::to_string(i) + " acts on " +
                                                std::to_string(gens[i].size()) + " points, expected " +
                                                std::to_string(degree));
    }
    std::vector<char> hit(degree);
    for (auto p : gens[i]) {
      if (p >= degree || hit[p]) {
        throw Error(ErrorCode::invalid_input, "generator " + std::to_string(i) + " is not a permutation");
      }
      hit[p] = 1;
    }
  }
  if (!gen_names.empty() && gen_names.size() != gens.size()) {
    throw Error(ErrorCode::invalid_input, "one name per generator expected");
  }
  if (gen_names.empty()) {
    for (std::size_t i = 0; i < gens.size(); ++i) gen_names.push_back("g" + std::to_string(i + 1));
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Permutation, elem_t> index{{id, 0}};
  std::vector<Permutation> elems{id};
  std::vector<std::string> labels{"e"};
  // right[x * k + s] = x * gens[s]; parent/last_gen give the BFS word of x.
  std::vector<elem_t> right;
  std::vector<elem_t> parent{0};
  std::vector<std::size_t> last_gen{0};
  const std::size_t k = gens.size();

  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation prod(degree);
      for (std::size_t p = 0; p < degree; ++p) prod[p] = gens[s][elems[x][p]];
      auto [it, inserted] = index.emplace(prod, static_cast<elem_t>(elems.size()));
      if (inserted) {
        check_order_cap(elems.size() + 1, "permutation closure");
        elems.push_back(std::move(prod));
        labels.push_back(x == 0 ? gen_names[s] : labels[x] + gen_names[s]);
        parent.push_back(static_cast<elem_t>(x));
        last_gen.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<elem_t> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    flat[x * n] = static_cast<elem_t>(x);
    for (std::size_t y = 1; y < n; ++y) {
      flat[x * n + y] = right[std::size_t(flat[x * n + parent[y]]) * k + last_gen[y]];
    }
  }
  return from_flat_table(std::move(flat), n, std::move(name), std::move(labels));
}

std::string FiniteGroup::label(elem_t g) const {
  return g < labels_.size() ? labels_[g] : std::to_string(g);
}

elem_t FiniteGroup::mul(std::initializer_list<elem_t> xs) const noexcept {
  elem_t acc = identity_;
  for (elem_t x : xs) acc = mul(acc, x);
  return acc;
}

elem_t FiniteGroup::pow(elem_t a, long long k) const noexcept {
  const auto o = static_cast<long long>(element_orders_[a]);
  long long r = ((k % o) + o) % o;
  elem_t acc = identity_;
  for (long long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

Table FiniteGroup::table() const {
  Table t(order_);
  for (std::size_t r = 0; r < order_; ++r) t[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  return t;
}

std::string FiniteGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  feed(order_, 8);
  for (elem_t v : table_) feed(v, 4);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

GroupPtr FiniteGroup::renamed(std::string name) const {
  auto copy = std::shared_ptr<FiniteGroup>(new FiniteGroup(*this));
  copy->name_ = std::move(name);
  return copy;
}

std::vector<elem_t> closure(const FiniteGroup& g, std::span<const elem_t> gens) {
  std::vector<char> seen(g.order());
  std::vector<elem_t> out{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (elem_t s : gens) {
      elem_t y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<elem_t> small_generating_set(const FiniteGroup& g, std::span<const elem_t> elems) {
  std::vector<elem_t> target(elems.begin(), elems.end());
  std::vector<elem_t> cands = target;
  std::stable_sort(cands.begin(), cands.end(),
                   [&g](elem_t a, elem_t b) { return g.element_order(a) > g.element_order(b); });
  const std::size_t want = closure(g, target).size();
  std::vector<elem_t> gens;
  std::vector<char> in(g.order());
  in[g.identity()] = 1;
  std::size_t have = 1;
  for (elem_t c : cands) {
    if (have == want) break;
    if (in[c]) continue;
    gens.push_back(c);
    auto cl = closure(g, gens);
    for (elem_t x : cl) in[x] = 1;
    have = cl.size();
  }
  return gens;
}

GroupPtr opposite(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<elem_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = g.mul(elem_t(b), elem_t(a));
  }
  return FiniteGroup::from_flat_table(std::move(flat), n, g.name() + "^op", g.labels());
}

bool is_k_abelian(const FiniteGroup& g, long long k, std::pair<elem_t, elem_t>* witness) {
  const std::size_t n = g.order();
  std::vector<elem_t> pk(n);
  for (std::size_t x = 0; x < n; ++x) pk[x] = g.pow(elem_t(x), k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (pk[g.mul(elem_t(x), elem_t(y))] != g.mul(pk[x], pk[y])) {
        if (witness) *witness = {elem_t(x), elem_t(y)};
        return false;
      }
    }
  }
  return true;
}

}  // namespace rbg
