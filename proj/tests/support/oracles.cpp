#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

using nilaut::Index;

namespace {

std::vector<std::pair<Int, unsigned>> prime_powers(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

Int ipow(Int b, unsigned e) {
  Int r = 1;
  while (e--) r *= b;
  return r;
}

// Elements of prod Z/f_j as mixed-radix tuples.
std::vector<std::vector<Int>> elements_of(const CyclicFactors& v) {
  std::vector<std::vector<Int>> out{{}};
  for (Int f : v) {
    std::vector<std::vector<Int>> next;
    for (const auto& t : out)
      for (Int a = 0; a < f; ++a) {
        auto t2 = t;
        t2.push_back(a);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

bool killed_by(const std::vector<Int>& x, const CyclicFactors& v, Int m) {
  for (std::size_t j = 0; j < v.size(); ++j)
    if ((x[j] * (m % v[j])) % v[j] != 0) return false;
  return true;
}

Int element_order(const std::vector<Int>& x, const CyclicFactors& v) {
  Int o = 1;
  for (std::size_t j = 0; j < v.size(); ++j) o = std::lcm(o, v[j] / std::gcd(v[j], x[j]));
  return o;
}

unsigned log_exact(Int n, Int p) {
  unsigned e = 0;
  while (n > 1) {
    if (n % p) throw std::logic_error("not a prime power");
    n /= p;
    ++e;
  }
  return e;
}

// Given N_k = |A[p^k]| for k = 0, 1, ..., recovers the exponent partition.
std::vector<unsigned> partition_from_counts(const std::vector<Int>& counts, Int p) {
  std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
  for (std::size_t k = 1; k < counts.size(); ++k) {
    const unsigned c = log_exact(counts[k] / counts[k - 1], p);
    if (c == 0) break;
    at_least.push_back(c);
  }
  std::vector<unsigned> exps;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (unsigned i = next; i < at_least[k]; ++i) exps.push_back(static_cast<unsigned>(k + 1));
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

Index find_identity(const std::vector<Index>& t, std::size_t n) {
  for (Index e = 0; e < n; ++e)
    if (t[e * n + 0] == 0 && t[0 * n + e] == 0) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) ok = t[e * n + x] == x;
      if (ok) return e;
    }
  throw std::logic_error("no identity");
}

}  // namespace

std::vector<CyclicFactors> abelian_types(Int n) {
  std::vector<CyclicFactors> out{{}};
  for (auto [p, e] : prime_powers(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<CyclicFactors> next;
    for (const auto& t : out)
      for (const auto& part : parts) {
        auto t2 = t;
        for (unsigned a : part) t2.push_back(ipow(p, a));
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<CyclicFactors> abelian_types_up_to(Int max_order) {
  std::vector<CyclicFactors> out;
  for (Int n = 1; n <= max_order; ++n)
    for (auto& t : abelian_types(n)) out.push_back(std::move(t));
  return out;
}

Int order_of(const CyclicFactors& u) {
  Int o = 1;
  for (Int f : u) o *= f;
  return o;
}

PrimaryType hom_type_by_counting(const CyclicFactors& u, const CyclicFactors& v) {
  const auto ve = elements_of(v);
  PrimaryType out;
  for (auto [p, e] : prime_powers(order_of(v))) {
    (void)e;
    std::vector<Int> counts{1};
    for (Int pk = p;; pk *= p) {
      Int n = 1;
      for (Int ni : u) {
        const Int m = std::gcd(ni, pk);
        n *= static_cast<Int>(std::count_if(ve.begin(), ve.end(), [&](const auto& x) { return killed_by(x, v, m); }));
      }
      if (n == counts.back()) break;
      counts.push_back(n);
    }
    counts.push_back(counts.back());
    auto exps = partition_from_counts(counts, p);
    if (!exps.empty()) out[p] = std::move(exps);
  }
  return out;
}

namespace {

std::vector<std::vector<std::vector<Int>>> image_candidates(const CyclicFactors& u, const CyclicFactors& v) {
  const auto ve = elements_of(v);
  std::vector<std::vector<std::vector<Int>>> cands;
  for (Int ni : u) {
    std::vector<std::vector<Int>> c;
    for (const auto& x : ve)
      if (killed_by(x, v, ni)) c.push_back(x);
    cands.push_back(std::move(c));
  }
  return cands;
}

}  // namespace

Int hom_order_by_enumeration(const CyclicFactors& u, const CyclicFactors& v) {
  Int n = 1;
  for (const auto& c : image_candidates(u, v)) n *= c.size();
  return n;
}

PrimaryType hom_type_by_enumeration(const CyclicFactors& u, const CyclicFactors& v) {
  const auto cands = image_candidates(u, v);
  std::vector<Int> orders;
  std::vector<std::size_t> pick(cands.size(), 0);
  while (true) {
    Int o = 1;
    for (std::size_t i = 0; i < cands.size(); ++i) o = std::lcm(o, element_order(cands[i][pick[i]], v));
    orders.push_back(o);
    std::size_t i = cands.size();
    while (i-- > 0) {
      if (++pick[i] < cands[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return primary_type_from_orders(orders);
}

PrimaryType primary_type_from_orders(const std::vector<Int>& element_orders) {
  PrimaryType out;
  for (auto [p, e] : prime_powers(element_orders.size())) {
    std::vector<Int> counts;
    for (unsigned k = 0; k <= e + 1; ++k) {
      const Int pk = ipow(p, k);
      counts.push_back(static_cast<Int>(
          std::count_if(element_orders.begin(), element_orders.end(), [&](Int o) { return pk % o == 0; })));
    }
    out[p] = partition_from_counts(counts, p);
  }
  return out;
}

std::vector<Index> heisenberg_matrix_table(Int p, unsigned k) {
  const Int q = ipow(p, k);
  const std::size_t n = q * q * q;
  std::vector<Index> t(n * n);
  auto idx = [&](Int a, Int b, Int c) { return static_cast<Index>((a * q + b) * q + c); };
  for (Int a = 0; a < q; ++a)
    for (Int b = 0; b < q; ++b)
      for (Int c = 0; c < q; ++c)
        for (Int a2 = 0; a2 < q; ++a2)
          for (Int b2 = 0; b2 < q; ++b2)
            for (Int c2 = 0; c2 < q; ++c2)
              t[idx(a, b, c) * n + idx(a2, b2, c2)] = idx((a + a2) % q, (b + b2 + a * c2) % q, (c + c2) % q);
  return t;
}

Fingerprint fingerprint(const std::vector<Index>& t, std::size_t n) {
  Fingerprint f;
  f.order = n;
  const Index e = find_identity(t, n);
  std::vector<Index> inv(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (t[x * n + y] == e) inv[x] = y;
  for (Index x = 0; x < n; ++x) {
    std::size_t o = 1;
    for (Index y = x; y != e; y = t[y * n + x]) ++o;
    ++f.element_orders[o];
  }
  for (Index x = 0; x < n; ++x) {
    bool central = true;
    for (Index y = 0; y < n && central; ++y) central = t[x * n + y] == t[y * n + x];
    f.center += central;
  }
  std::vector<char> in(n, 0);
  std::vector<Index> elems;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index c = t[t[inv[a] * n + inv[b]] * n + t[a * n + b]];
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (Index c : {t[elems[i] * n + elems[j]], t[elems[j] * n + elems[i]]})
        if (!in[c]) {
          in[c] = 1;
          elems.push_back(c);
        }
  f.derived = elems.size();
  std::vector<char> seen(n, 0);
  for (Index x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (Index g = 0; g < n; ++g) {
      const Index c = t[t[inv[g] * n + x] * n + g];
      if (!seen[c]) {
        seen[c] = 1;
        ++size;
      }
    }
    f.class_sizes.push_back(size);
  }
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

Fingerprint fingerprint(const nilaut::FiniteGroup& g) {
  return fingerprint(std::vector<Index>(g.table().begin(), g.table().end()), g.order());
}

std::vector<std::vector<Index>> naive_automorphisms(const nilaut::FiniteGroup& g) {
  const std::size_t n = g.order();
  auto mul = [&](Index a, Index b) { return g.table()[a * n + b]; };
  const Index e = find_identity(std::vector<Index>(g.table().begin(), g.table().end()), n);
  auto closure = [&](const std::vector<Index>& gens) {
    std::vector<char> in(n, 0);
    std::vector<Index> q{e};
    in[e] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (Index s : gens)
        if (!in[mul(q[i], s)]) {
          in[mul(q[i], s)] = 1;
          q.push_back(mul(q[i], s));
        }
    return q.size();
  };
  std::vector<Index> gens;
  std::size_t reached = 1;
  for (Index x = 0; x < n && reached < n; ++x) {
    gens.push_back(x);
    const std::size_t r = closure(gens);
    if (r > reached) reached = r;
    else gens.pop_back();
  }
  std::vector<std::size_t> ord(n);
  for (Index x = 0; x < n; ++x) {
    std::size_t o = 1;
    for (Index y = x; y != e; y = mul(y, x)) ++o;
    ord[x] = o;
  }
  std::vector<std::vector<Index>> out;
  std::vector<Index> img(gens.size(), 0);
  std::vector<Index> f(n);
  std::vector<char> set(n);
  auto try_images = [&]() {
    std::fill(set.begin(), set.end(), 0);
    f[e] = e;
    set[e] = 1;
    std::deque<Index> q{e};
    while (!q.empty()) {
      const Index x = q.front();
      q.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Index y = mul(x, gens[s]);
        const Index fy = mul(f[x], img[s]);
        if (set[y]) {
          if (f[y] != fy) return false;
        } else {
          set[y] = 1;
          f[y] = fy;
          q.push_back(y);
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (Index x = 0; x < n; ++x) {
      if (hit[f[x]]) return false;
      hit[f[x]] = 1;
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (f[mul(a, b)] != mul(f[a], f[b])) return false;
    return true;
  };
  std::vector<std::vector<Index>> cands(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (Index y = 0; y < n; ++y)
      if (ord[y] == ord[gens[s]]) cands[s].push_back(y);
  std::vector<std::size_t> pick(gens.size(), 0);
  if (gens.empty()) return {std::vector<Index>{e}};
  while (true) {
    for (std::size_t s = 0; s < gens.size(); ++s) img[s] = cands[s][pick[s]];
    if (try_images()) out.push_back(f);
    std::size_t i = gens.size();
    while (i-- > 0) {
      if (++pick[i] < cands[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<char> naive_center(const nilaut::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> out(n, 1);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (g.table()[x * n + y] != g.table()[y * n + x]) out[x] = 0;
  return out;
}

std::vector<char> naive_derived(const nilaut::FiniteGroup& g) {
  const std::size_t n = g.order();
  auto mul = [&](Index a, Index b) { return g.table()[a * n + b]; };
  std::vector<Index> inv(n);
  const Index e = find_identity(std::vector<Index>(g.table().begin(), g.table().end()), n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (mul(x, y) == e) inv[x] = y;
  std::vector<char> in(n, 0);
  std::vector<Index> elems;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index c = mul(mul(inv[a], inv[b]), mul(a, b));
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Index c = mul(elems[i], elems[j]);
      if (!in[c]) {
        in[c] = 1;
        elems.push_back(c);
      }
    }
  return in;
}

}  // namespace oracle
