#include "nilaut/pcgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilaut/errors.hpp"
#include "nilaut/kernels.hpp"

namespace nilaut {

PcPresentation::PcPresentation(std::vector<std::string> generators, std::vector<unsigned> relative_orders)
    : generators_(std::move(generators)),
      relative_orders_(std::move(relative_orders)),
      powers_(generators_.size()) {
  if (generators_.size() != relative_orders_.size())
    throw std::invalid_argument("generator and relative order counts differ");
  for (unsigned e : relative_orders_)
    if (e < 2) throw std::invalid_argument("relative orders must be >= 2");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i] == generators_[j])
        throw std::invalid_argument("duplicate generator name '" + generators_[i] + "'");
}

std::size_t PcPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return i;
  throw std::out_of_range("unknown generator '" + std::string(name) + "'");
}

namespace {

void check_word(const Word& w, std::size_t k) {
  for (const auto& l : w)
    if (l.generator >= k) throw std::out_of_range("word mentions an undeclared generator");
}

}  // namespace

void PcPresentation::set_power(std::size_t i, Word rhs) {
  check_word(rhs, size());
  powers_.at(i) = std::move(rhs);
}

void PcPresentation::set_conjugate(std::size_t i, std::size_t j, Word rhs) {
  if (!(i < j && j < size())) throw std::out_of_range("conjugate relation needs i < j < k");
  check_word(rhs, size());
  conjugates_[{i, j}] = std::move(rhs);
}

Word PcPresentation::conjugate(std::size_t i, std::size_t j) const {
  if (auto it = conjugates_.find({i, j}); it != conjugates_.end()) return it->second;
  return Word{{j, 1}};
}

std::size_t PcPresentation::normal_form_count(std::size_t cap) const {
  std::size_t n = 1;
  for (unsigned e : relative_orders_) {
    if (n > cap / e) throw CapExceeded("presentation has more than " + std::to_string(cap) + " normal forms");
    n *= e;
  }
  if (n > cap) throw CapExceeded("presentation has more than " + std::to_string(cap) + " normal forms");
  return n;
}

Collector::Collector(const PcPresentation& pres, std::size_t budget)
    : pres_(&pres), budget_(budget), generator_orders_(pres.size(), 0) {}

long Collector::generator_order(std::size_t i) const {
  long& cached = generator_orders_[i];
  if (cached > 0) return cached;
  // Powers of g_i computed with positive letters only.
  NormalForm a = identity();
  const NormalForm id = identity();
  const Word g{{i, 1}};
  for (std::size_t m = 1; m <= budget_; ++m) {
    a = multiply(std::move(a), g);
    if (a == id) {
      cached = static_cast<long>(m);
      return cached;
    }
  }
  throw CollectionBudgetExceeded("could not determine the order of generator " + pres_->generators()[i]);
}

void Collector::push_word(std::vector<std::size_t>& stack, const Word& word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    long e = it->exponent;
    if (e < 0) {
      long ord = generator_order(it->generator);
      e = ((e % ord) + ord) % ord;
    }
    for (long r = 0; r < e; ++r) stack.push_back(it->generator);
  }
}

NormalForm Collector::multiply(NormalForm a, const Word& word) const {
  const std::size_t k = pres_->size();
  const auto& orders = pres_->relative_orders();
  std::vector<std::size_t> stack;
  push_word(stack, word);
  std::size_t steps = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (++steps > budget_)
      throw CollectionBudgetExceeded("collection exceeded " + std::to_string(budget_) + " steps");

    // a * g_i = prefix * g_i^{a_i + 1} * prod_{j > i} (g_i^{-1} g_j g_i)^{a_j}
    bool tail_commutes = true;
    for (std::size_t j = i + 1; j < k && tail_commutes; ++j)
      if (a[j] != 0 && pres_->has_conjugate(i, j)) tail_commutes = false;

    if (!tail_commutes) {
      for (std::size_t j = k; j-- > i + 1;) {
        if (a[j] == 0) continue;
        const Word w = pres_->conjugate(i, j);
        for (unsigned r = 0; r < a[j]; ++r) push_word(stack, w);
        a[j] = 0;
      }
    }
    if (++a[i] == orders[i]) {
      a[i] = 0;
      if (tail_commutes) {
        // the untouched tail has to be re-collected behind the power word
        for (std::size_t j = k; j-- > i + 1;) {
          for (unsigned r = 0; r < a[j]; ++r) stack.push_back(j);
          a[j] = 0;
        }
      }
      push_word(stack, pres_->power(i));
    }
  }
  return a;
}

NormalForm Collector::collect(const Word& word) const { return multiply(identity(), word); }

NormalForm collect(const PcPresentation& pres, const Word& word, std::size_t budget) {
  for (const auto& l : word)
    if (l.generator >= pres.size()) throw std::out_of_range("word mentions an undeclared generator");
  return Collector(pres, budget).collect(word);
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> generators,
                         std::string name, std::string family, std::vector<unsigned> relative_orders,
                         std::vector<std::string> generator_names)
    : n_(order),
      table_(std::move(table)),
      inverse_(order),
      generators_(std::move(generators)),
      generator_names_(std::move(generator_names)),
      relative_orders_(std::move(relative_orders)),
      name_(std::move(name)),
      family_(std::move(family)) {
  if (n_ == 0) throw ConsistencyError("a group has at least one element");
  if (table_.size() != n_ * n_) throw ConsistencyError("table size is not order^2");
  for (Index x : table_)
    if (x >= n_) throw ConsistencyError("table entry out of range");
  for (Index g : generators_)
    if (g >= n_) throw ConsistencyError("generator index out of range");
  if (!kernels::is_latin_square(table_, n_)) throw ConsistencyError("table is not a Latin square");
  bool found = false;
  for (Index e = 0; e < n_ && !found; ++e) {
    bool left = true;
    for (Index a = 0; a < n_ && left; ++a) left = mul(e, a) == a;
    if (!left) continue;
    identity_ = e;
    found = true;
  }
  if (!found) throw ConsistencyError("no identity element");
  for (Index a = 0; a < n_; ++a)
    if (mul(a, identity_) != a) throw ConsistencyError("no two-sided identity");
  for (Index a = 0; a < n_; ++a)
    for (Index b = 0; b < n_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
  for (Index a = 0; a < n_; ++a)
    if (mul(inverse_[a], a) != identity_) throw ConsistencyError("left and right inverses differ");
  if (!relative_orders_.empty()) {
    std::size_t prod = 1;
    for (unsigned e : relative_orders_) prod *= e;
    if (prod != n_) throw ConsistencyError("relative orders do not multiply to the order");
  }
  if (!generator_names_.empty() && generator_names_.size() != generators_.size())
    throw ConsistencyError("generator name count differs from generator count");
}

Index FiniteGroup::pow(Index a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Index result = identity_;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t m = 1;
  for (Index x = a; x != identity_; x = mul(x, a)) ++m;
  return m;
}

NormalForm FiniteGroup::normal_form(Index a) const {
  NormalForm nf(relative_orders_.size());
  for (std::size_t i = relative_orders_.size(); i-- > 0;) {
    nf[i] = a % relative_orders_[i];
    a /= relative_orders_[i];
  }
  return nf;
}

Index FiniteGroup::index_of(const NormalForm& nf) const {
  if (nf.size() != relative_orders_.size()) throw std::invalid_argument("normal form length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (nf[i] >= relative_orders_[i]) throw std::invalid_argument("normal form exponent out of range");
    idx = idx * relative_orders_[i] + nf[i];
  }
  return static_cast<Index>(idx);
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup build_group(const PcPresentation& pres, const BuildOptions& opts, std::string name,
                        std::string family) {
  const std::size_t n = pres.normal_form_count(opts.cap);
  const std::size_t k = pres.size();
  const auto& orders = pres.relative_orders();
  Collector collector(pres, opts.budget);

  auto index_of = [&](const NormalForm& nf) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * orders[i] + nf[i];
    return static_cast<Index>(idx);
  };
  auto normal_form = [&](std::size_t a) {
    NormalForm nf(k);
    for (std::size_t i = k; i-- > 0;) {
      nf[i] = static_cast<unsigned>(a % orders[i]);
      a /= orders[i];
    }
    return nf;
  };

  // right multiplication by each generator
  std::vector<std::vector<Index>> right(k, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const NormalForm nf = normal_form(a);
    for (std::size_t i = 0; i < k; ++i) right[i][a] = index_of(collector.multiply(nf, Word{{i, 1}}));
  }

  // b = b' * g_m where m is the last nonzero position of b, and b' < b
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<Index>(a);
  for (std::size_t b = 1; b < n; ++b) {
    NormalForm nf = normal_form(b);
    std::size_t m = k;
    while (nf[m - 1] == 0) --m;
    --m;
    --nf[m];
    const std::size_t prev = index_of(nf);
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = right[m][table[a * n + prev]];
  }

  if (!kernels::is_latin_square(table, n))
    throw ConsistencyError("presentation does not define a group of order " + std::to_string(n) +
                           " (table is not a Latin square)");

  std::vector<Index> gens(k);
  for (std::size_t i = 0; i < k; ++i) {
    NormalForm nf(k, 0);
    nf[i] = 1;
    gens[i] = index_of(nf);
  }

  Verification level = Verification::Full;
  std::optional<kernels::Triple> bad;
  if (n <= opts.full_scan_cap) {
    bad = kernels::find_associativity_violation_parallel(table, n);
  } else {
    bad = kernels::find_generator_triple_violation_parallel(table, n, gens);
    level = Verification::GeneratorTriples;
  }
  if (bad)
    throw ConsistencyError("presentation does not define a group of order " + std::to_string(n) +
                           ": associativity fails at (" + std::to_string(bad->a) + ", " +
                           std::to_string(bad->b) + ", " + std::to_string(bad->c) + ")");

  FiniteGroup g(n, std::move(table), std::move(gens), std::move(name), std::move(family),
                pres.relative_orders(), pres.generators());
  g.set_verification(level);
  return g;
}

bool check_consistency(std::span<const Index> table, std::size_t n) {
  if (table.size() != n * n) return false;
  for (Index x : table)
    if (x >= n) return false;
  return kernels::is_latin_square(table, n) && !kernels::find_associativity_violation_parallel(table, n);
}

bool check_consistency(const FiniteGroup& g) { return check_consistency(g.table(), g.order()); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t m = g.order(), k = h.order();
  if (m > cap / k || m * k > cap)
    throw CapExceeded("direct product of order " + std::to_string(m) + " x " + std::to_string(k) +
                      " exceeds cap " + std::to_string(cap));
  const std::size_t n = m * k;
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Index>(g.mul(static_cast<Index>(a / k), static_cast<Index>(b / k)) * k +
                                            h.mul(static_cast<Index>(a % k), static_cast<Index>(b % k)));
  std::vector<Index> gens;
  std::vector<std::string> names;
  const bool named = g.generator_names().size() == g.generators().size() &&
                     h.generator_names().size() == h.generators().size();
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back(static_cast<Index>(g.generators()[i] * k + h.identity()));
    if (named) names.push_back(g.generator_names()[i]);
  }
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    gens.push_back(static_cast<Index>(g.identity() * k + h.generators()[i]));
    if (named) names.push_back(h.generator_names()[i] + "'");
  }
  std::vector<unsigned> orders;
  if (g.has_normal_forms() && h.has_normal_forms()) {
    orders = g.relative_orders();
    orders.insert(orders.end(), h.relative_orders().begin(), h.relative_orders().end());
  }
  std::string name = g.name().empty() || h.name().empty() ? std::string{} : g.name() + " x " + h.name();
  FiniteGroup out(n, std::move(table), std::move(gens), std::move(name), "direct-product", std::move(orders),
                  std::move(names));
  out.set_verification(g.verification() == Verification::Full && h.verification() == Verification::Full
                           ? Verification::Full
                           : Verification::GeneratorTriples);
  return out;
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Index> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw std::invalid_argument("relabelling has wrong length");
  std::vector<Index> table(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  std::vector<Index> gens;
  for (Index x : g.generators()) gens.push_back(perm[x]);
  return FiniteGroup(n, std::move(table), std::move(gens), g.name(), g.family(), {}, g.generator_names());
}

}  // namespace nilaut
