#include "nilaut/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>

#include <omp.h>

#include "nilaut/errors.hpp"

namespace nilaut::kernels {

namespace {

// First violation with a fixed left factor, c drawn from `cs` (or all of 0..n-1).
std::optional<Triple> violation_in_row(std::span<const Index> t, std::size_t n, Index a,
                                       std::span<const Index> cs) {
  const Index* row_a = t.data() + static_cast<std::size_t>(a) * n;
  for (Index b = 0; b < n; ++b) {
    const Index* row_ab = t.data() + static_cast<std::size_t>(row_a[b]) * n;
    const Index* row_b = t.data() + static_cast<std::size_t>(b) * n;
    if (cs.empty()) {
      for (Index c = 0; c < n; ++c)
        if (row_ab[c] != row_a[row_b[c]]) return Triple{a, b, c};
    } else {
      for (Index c : cs)
        if (row_ab[c] != row_a[row_b[c]]) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

std::optional<Triple> scan_serial(std::span<const Index> t, std::size_t n, std::span<const Index> cs) {
  for (Index a = 0; a < n; ++a)
    if (auto v = violation_in_row(t, n, a, cs)) return v;
  return std::nullopt;
}

std::optional<Triple> scan_parallel(std::span<const Index> t, std::size_t n, std::span<const Index> cs) {
  // Smallest row holding a violation; rows are scanned independently and
  // rows past the current best are skipped.
  std::atomic<std::int64_t> best{static_cast<std::int64_t>(n)};
  std::optional<Triple> found;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 0; a < rows; ++a) {
    if (a > best.load(std::memory_order_relaxed)) continue;
    auto v = violation_in_row(t, n, static_cast<Index>(a), cs);
    if (!v) continue;
#pragma omp critical(nilaut_assoc_best)
    {
      if (a < best.load()) {
        best.store(a);
        found = v;
      }
    }
  }
  return found;
}

}  // namespace

bool is_latin_square(std::span<const Index> table, std::size_t n) {
  if (table.size() != n * n) return false;
  std::vector<std::size_t> stamp(n, 0);
  std::size_t mark = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++mark;
    for (std::size_t c = 0; c < n; ++c) {
      Index x = table[r * n + c];
      if (x >= n || stamp[x] == mark) return false;
      stamp[x] = mark;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++mark;
    for (std::size_t r = 0; r < n; ++r) {
      Index x = table[r * n + c];
      if (stamp[x] == mark) return false;
      stamp[x] = mark;
    }
  }
  return true;
}

std::optional<Triple> find_associativity_violation_serial(std::span<const Index> table, std::size_t n) {
  return scan_serial(table, n, {});
}

std::optional<Triple> find_associativity_violation_parallel(std::span<const Index> table, std::size_t n) {
  return scan_parallel(table, n, {});
}

std::optional<Triple> find_generator_triple_violation_serial(std::span<const Index> table, std::size_t n,
                                                             std::span<const Index> generators) {
  if (generators.empty()) return std::nullopt;
  return scan_serial(table, n, generators);
}

std::optional<Triple> find_generator_triple_violation_parallel(std::span<const Index> table, std::size_t n,
                                                               std::span<const Index> generators) {
  if (generators.empty()) return std::nullopt;
  return scan_parallel(table, n, generators);
}

CayleyTree cayley_tree(const FiniteGroup& g, std::span<const Index> generators) {
  const std::size_t n = g.order();
  CayleyTree tree;
  tree.parent.assign(n, g.identity());
  tree.via.assign(n, 0);
  std::vector<char> seen(n, 0);
  tree.order.reserve(n);
  tree.order.push_back(g.identity());
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < tree.order.size(); ++head) {
    const Index x = tree.order[head];
    for (std::size_t s = 0; s < generators.size(); ++s) {
      const Index y = g.mul(x, generators[s]);
      if (seen[y]) continue;
      seen[y] = 1;
      tree.parent[y] = x;
      tree.via[y] = s;
      tree.order.push_back(y);
    }
  }
  if (tree.order.size() != n)
    throw PreconditionError("elements do not generate the group (" + std::to_string(tree.order.size()) +
                            " of " + std::to_string(n) + " reached)");
  return tree;
}

namespace {

bool extend_into(const FiniteGroup& g, const CayleyTree& tree, std::span<const Index> generators,
                 const FiniteGroup& target, std::span<const Index> images, std::vector<Index>& phi) {
  phi[g.identity()] = target.identity();
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Index e = tree.order[i];
    phi[e] = target.mul(phi[tree.parent[e]], images[tree.via[e]]);
  }
  const std::size_t n = g.order();
  for (std::size_t s = 0; s < generators.size(); ++s)
    for (Index e = 0; e < n; ++e)
      if (phi[g.mul(e, generators[s])] != target.mul(phi[e], images[s])) return false;
  return true;
}

bool injective(const std::vector<Index>& phi, std::size_t target_order, std::vector<char>& seen) {
  if (phi.size() != target_order) return false;
  std::fill(seen.begin(), seen.end(), 0);
  for (Index x : phi) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void decode(std::uint64_t t, const std::vector<std::vector<Index>>& cand, std::vector<Index>& images) {
  for (std::size_t s = cand.size(); s-- > 0;) {
    images[s] = cand[s][t % cand[s].size()];
    t /= cand[s].size();
  }
}

}  // namespace

std::optional<std::vector<Index>> extend_homomorphism(const FiniteGroup& g, const CayleyTree& tree,
                                                      std::span<const Index> generators,
                                                      const FiniteGroup& target,
                                                      std::span<const Index> images) {
  std::vector<Index> phi(g.order());
  if (!extend_into(g, tree, generators, target, images, phi)) return std::nullopt;
  return phi;
}

std::size_t candidate_count(const HomSearch& search) {
  std::size_t total = 1;
  for (const auto& c : search.candidates) {
    if (c.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / c.size()) return std::numeric_limits<std::size_t>::max();
    total *= c.size();
  }
  return total;
}

std::vector<std::vector<Index>> search_homomorphisms_serial(const HomSearch& search) {
  std::vector<std::vector<Index>> out;
  const std::size_t total = candidate_count(search);
  if (total == 0) return out;
  const CayleyTree tree = cayley_tree(*search.source, search.generators);
  std::vector<Index> images(search.generators.size());
  std::vector<Index> phi(search.source->order());
  std::vector<char> seen(search.target->order());
  for (std::size_t t = 0; t < total; ++t) {
    decode(t, search.candidates, images);
    if (!extend_into(*search.source, tree, search.generators, *search.target, images, phi)) continue;
    if (search.bijective_only && !injective(phi, search.target->order(), seen)) continue;
    out.push_back(phi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Index>> search_homomorphisms_parallel(const HomSearch& search) {
  std::vector<std::vector<Index>> out;
  const std::size_t total = candidate_count(search);
  if (total == 0) return out;
  const CayleyTree tree = cayley_tree(*search.source, search.generators);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
  {
    std::vector<std::vector<Index>> local;
    std::vector<Index> images(search.generators.size());
    std::vector<Index> phi(search.source->order());
    std::vector<char> seen(search.target->order());
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t t = 0; t < count; ++t) {
      decode(static_cast<std::uint64_t>(t), search.candidates, images);
      if (!extend_into(*search.source, tree, search.generators, *search.target, images, phi)) continue;
      if (search.bijective_only && !injective(phi, search.target->order(), seen)) continue;
      local.push_back(phi);
    }
#pragma omp critical(nilaut_hom_merge)
    out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nilaut::kernels
