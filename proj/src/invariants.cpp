#include "nilaut/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "nilaut/errors.hpp"
#include "nilaut/families.hpp"
#include "nilaut/kernels.hpp"

namespace nilaut {

Subgroup::Subgroup(std::vector<Index> elements, std::size_t n) : elements_(std::move(elements)), mask_(n, 0) {
  for (Index x : elements_) mask_[x] = 1;
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Index x : elements)
    if (x >= g.order()) throw std::invalid_argument("subgroup element out of range");
  Subgroup h(std::move(elements), g.order());
  if (!h.contains(g.identity())) throw std::invalid_argument("subset does not contain the identity");
  for (Index a : h.elements_) {
    if (!h.contains(g.inv(a))) throw std::invalid_argument("subset is not closed under inverses");
    for (Index b : h.elements_)
      if (!h.contains(g.mul(a, b))) throw std::invalid_argument("subset is not closed under multiplication");
  }
  return h;
}

Subgroup Subgroup::generated_by(const FiniteGroup& g, std::span<const Index> generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> elems{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Index s : generators) {
      const Index y = g.mul(elems[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return Subgroup(std::move(elems), g.order());
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup({g.identity()}, g.order()); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(std::move(all), g.order());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Index x) { return other.contains(x); });
}

bool Subgroup::is_normal(const FiniteGroup& g) const {
  // normalized by a generating set is enough in a finite group
  for (Index s : g.generators())
    for (Index x : elements_)
      if (!contains(g.conjugate(x, s))) return false;
  return true;
}

bool Subgroup::is_abelian(const FiniteGroup& g) const {
  for (Index a : elements_)
    for (Index b : elements_)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool Subgroup::is_cyclic(const FiniteGroup& g) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](Index x) { return g.element_order(x) == elements_.size(); });
}

bool Subgroup::is_elementary_abelian(const FiniteGroup& g) const {
  if (order() == 1) return true;
  if (!is_abelian(g)) return false;
  auto f = factorize(order());
  if (f.size() != 1) return false;
  const Int p = f.front().first;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Index x) { return g.pow(x, static_cast<long long>(p)) == g.identity(); });
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  for (Index x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Index> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated_by(g, gens);
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> gens;
  for (Index x : a.elements())
    for (Index y : b.elements()) {
      const Index c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return Subgroup::generated_by(g, gens);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Index> z;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(z));
}

Subgroup centralizer(const FiniteGroup& g, Index x) {
  std::vector<Index> c;
  for (Index y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  return Subgroup::from_elements(g, std::move(c));
}

std::vector<Index> commutator_set(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) seen[g.commutator(a, b)] = 1;
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

std::vector<Index> commutator_with(const FiniteGroup& g, Index x) {
  std::vector<char> seen(g.order(), 0);
  for (Index b = 0; b < g.order(); ++b) seen[g.commutator(x, b)] = 1;
  std::vector<Index> out;
  for (Index y = 0; y < g.order(); ++y)
    if (seen[y]) out.push_back(y);
  return out;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto k = commutator_set(g);
  return Subgroup::generated_by(g, k);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (n.ambient_order() != g.order()) throw std::invalid_argument("subgroup of a different group");
  if (!n.is_normal(g)) throw NotNormal("quotient by a subgroup that is not normal");
  const std::size_t order = g.order();
  constexpr Index unset = ~Index{0};
  Quotient q{FiniteGroup{}, std::vector<Index>(order, unset), {}};
  for (Index x = 0; x < order; ++x) {
    if (q.projection[x] != unset) continue;
    const auto c = static_cast<Index>(q.representatives.size());
    q.representatives.push_back(x);
    for (Index y : n.elements()) q.projection[g.mul(x, y)] = c;
  }
  const std::size_t m = q.representatives.size();
  std::vector<Index> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = q.projection[g.mul(q.representatives[a], q.representatives[b])];
  std::vector<Index> gens;
  for (Index s : g.generators()) gens.push_back(q.projection[s]);
  q.group = FiniteGroup(m, std::move(table), std::move(gens), g.name().empty() ? "" : g.name() + " / N",
                        "quotient", {}, g.generator_names());
  q.group.set_verification(g.verification());
  return q;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t m = h.order();
  std::vector<Index> pos(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) pos[h.elements()[i]] = static_cast<Index>(i);
  std::vector<Index> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = pos[g.mul(h.elements()[a], h.elements()[b])];
  // greedy generating set, in increasing element order
  std::vector<Index> gens_g;
  Subgroup span = Subgroup::trivial(g);
  for (Index x : h.elements())
    if (!span.contains(x)) {
      gens_g.push_back(x);
      span = Subgroup::generated_by(g, gens_g);
    }
  std::vector<Index> gens;
  for (Index x : gens_g) gens.push_back(pos[x]);
  SubgroupGroup out{FiniteGroup(m, std::move(table), std::move(gens), {}, "subgroup"),
                    std::vector<Index>(h.elements().begin(), h.elements().end())};
  out.group.set_verification(g.verification());
  return out;
}

Subgroup upper_central_next(const FiniteGroup& g, const Subgroup& zi) {
  const Quotient q = quotient(g, zi);
  const Subgroup zq = center(q.group);
  std::vector<Index> pre;
  for (Index x = 0; x < g.order(); ++x)
    if (zq.contains(q.projection[x])) pre.push_back(x);
  return Subgroup::from_elements(g, std::move(pre));
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  const Subgroup all = Subgroup::whole(g);
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return lower_central_series(g).back().order() == 1; }

unsigned nilpotency_class(const FiniteGroup& g) {
  const auto series = lower_central_series(g);
  if (series.back().order() != 1) throw NotNilpotent("group is not nilpotent");
  return static_cast<unsigned>(series.size() - 1);
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Index> cls;
    for (Index a = 0; a < g.order(); ++a) {
      const Index y = g.conjugate(x, a);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> conjugacy_class_ids(const FiniteGroup& g) {
  std::vector<std::size_t> ids(g.order());
  const auto classes = conjugacy_classes(g);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Index x : classes[c]) ids[x] = c;
  return ids;
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (Index x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

std::optional<Int> p_group_prime(const FiniteGroup& g) {
  if (g.order() == 1) return std::nullopt;
  auto f = factorize(g.order());
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

namespace {

// Maximal subgroups by exhaustive lattice walk; only used for non-nilpotent groups.
std::vector<Subgroup> maximal_subgroups_by_lattice(const FiniteGroup& g) {
  if (g.order() > 256) throw CapExceeded("subgroup lattice walk is limited to order 256");
  std::set<std::vector<Index>> known;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup h) {
    std::vector<Index> key(h.elements().begin(), h.elements().end());
    if (known.insert(key).second) all.push_back(std::move(h));
  };
  add(Subgroup::trivial(g));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (Index x = 0; x < g.order(); ++x) {
      if (all[i].contains(x)) continue;
      std::vector<Index> gens(all[i].elements().begin(), all[i].elements().end());
      gens.push_back(x);
      add(Subgroup::generated_by(g, gens));
    }
  std::vector<Subgroup> proper;
  for (auto& h : all)
    if (h.order() < g.order()) proper.push_back(h);
  std::vector<Subgroup> maximal;
  for (const auto& h : proper) {
    bool is_max = true;
    for (const auto& k : proper)
      if (k.order() > h.order() && h.is_subset_of(k)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(h);
  }
  return maximal;
}

}  // namespace

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  std::vector<char> in_all(g.order(), 1);
  if (is_nilpotent(g)) {
    std::vector<Index> gens(g.generators().begin(), g.generators().end());
    for (auto [p, e] : factorize(g.order())) {
      const FiniteGroup cp = cyclic(p);
      std::vector<Index> all_cp(p);
      std::iota(all_cp.begin(), all_cp.end(), Index{0});
      kernels::HomSearch search{&g, &cp, gens, std::vector<std::vector<Index>>(gens.size(), all_cp), false};
      for (const auto& phi : kernels::search_homomorphisms(search)) {
        bool trivial = std::all_of(phi.begin(), phi.end(), [&](Index v) { return v == cp.identity(); });
        if (trivial) continue;
        for (Index x = 0; x < g.order(); ++x)
          if (phi[x] != cp.identity()) in_all[x] = 0;
      }
    }
  } else {
    for (const auto& m : maximal_subgroups_by_lattice(g))
      for (Index x = 0; x < g.order(); ++x)
        if (!m.contains(x)) in_all[x] = 0;
  }
  std::vector<Index> phi_elems;
  for (Index x = 0; x < g.order(); ++x)
    if (in_all[x]) phi_elems.push_back(x);
  return Subgroup::from_elements(g, std::move(phi_elems));
}

Subgroup frattini_by_powers(const FiniteGroup& g) {
  if (g.order() == 1) return Subgroup::trivial(g);
  auto p = p_group_prime(g);
  if (!p) throw PreconditionError("G' G^p is the Frattini subgroup only for p-groups");
  std::vector<Index> powers;
  for (Index x = 0; x < g.order(); ++x) powers.push_back(g.pow(x, static_cast<long long>(*p)));
  const Subgroup gp = Subgroup::generated_by(g, powers);
  return join(g, derived_subgroup(g), gp);
}

AbelianDecomposition decompose_abelian(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("group is not abelian");
  AbelianDecomposition out;
  FgAbelian::PrimaryMap primary;
  if (g.order() == 1) return out;
  const Index e = g.identity();
  for (auto [p, mult] : factorize(g.order())) {
    // Sylow p-subgroup: elements of p-power order
    std::vector<Index> sylow;
    for (Index x = 0; x < g.order(); ++x) {
      std::size_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    std::vector<char> in_b(g.order(), 0);
    std::vector<Index> b{e};
    in_b[e] = 1;
    while (b.size() < sylow.size()) {
      // element of largest order modulo B
      Index best = e;
      unsigned best_k = 0;
      for (Index y : sylow) {
        unsigned k = 0;
        Index z = y;
        while (!in_b[z]) {
          z = g.pow(z, static_cast<long long>(p));
          ++k;
        }
        if (k > best_k) {
          best_k = k;
          best = y;
        }
      }
      const auto q = static_cast<long long>(checked_pow(p, best_k));
      // lift within the coset best * B to an element of the same order
      Index lifted = e;
      bool found = false;
      for (Index x : b) {
        const Index cand = g.mul(best, x);
        if (g.pow(cand, q) == e) {
          lifted = cand;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("no pure lift in abelian decomposition");
      out.basis.push_back(lifted);
      out.basis_orders.push_back(static_cast<Int>(q));
      primary[p].push_back(best_k);
      // B <- B x <lifted>
      std::vector<Index> next;
      next.reserve(b.size() * static_cast<std::size_t>(q));
      Index power = e;
      for (long long i = 0; i < q; ++i) {
        for (Index x : b) next.push_back(g.mul(x, power));
        power = g.mul(power, lifted);
      }
      for (Index x : next) in_b[x] = 1;
      b = std::move(next);
    }
  }
  out.type = FgAbelian::from_primary(std::move(primary));
  return out;
}

FgAbelian abelian_structure(const FiniteGroup& g) { return decompose_abelian(g).type; }

FgAbelian abelian_structure(const FiniteGroup& g, const Subgroup& h) {
  return abelian_structure(subgroup_as_group(g, h).group);
}

unsigned torsion_rank_of_group(const FiniteGroup& h) { return torsion_rank(abelian_structure(h)); }

unsigned minimal_generator_count(const FiniteGroup& h) {
  if (h.is_abelian()) return torsion_rank(abelian_structure(h));
  if (!is_nilpotent(h)) throw NotNilpotent("minimal generator count needs a nilpotent group");
  const Quotient q = quotient(h, frattini_subgroup(h));
  return torsion_rank(abelian_structure(q.group));
}

std::vector<Index> minimal_generating_set(const FiniteGroup& h) {
  if (!is_nilpotent(h)) throw NotNilpotent("minimal generating set needs a nilpotent group");
  const Quotient q = quotient(h, frattini_subgroup(h));
  const AbelianDecomposition dec = decompose_abelian(q.group);
  // basis elements grouped by prime; combine the i-th of every prime
  std::map<Int, std::vector<Index>> by_prime;
  for (std::size_t i = 0; i < dec.basis.size(); ++i) {
    const Int p = factorize(dec.basis_orders[i]).front().first;
    by_prime[p].push_back(dec.basis[i]);
  }
  const unsigned d = torsion_rank(dec.type);
  std::vector<Index> out;
  for (unsigned i = 0; i < d; ++i) {
    Index x = q.group.identity();
    for (const auto& [p, elems] : by_prime)
      if (i < elems.size()) x = q.group.mul(x, elems[i]);
    out.push_back(q.representatives[x]);
  }
  return out;
}

std::vector<std::vector<Index>> minimal_generating_tuples(const FiniteGroup& h, std::size_t sample_limit,
                                                          std::uint64_t seed) {
  const unsigned d = minimal_generator_count(h);
  if (d == 0) return {{}};
  const Quotient fq = quotient(h, frattini_subgroup(h));
  const std::size_t n = h.order();
  auto generates = [&](const std::vector<Index>& tuple) {
    std::vector<Index> img;
    for (Index x : tuple) img.push_back(fq.projection[x]);
    return Subgroup::generated_by(fq.group, img).order() == fq.group.order();
  };

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Index>> out;
  double space = 1;
  for (unsigned i = 0; i < d; ++i) space *= static_cast<double>(n);
  if (space <= 1e6) {
    std::vector<Index> tuple(d, 0);
    const auto total = static_cast<std::size_t>(space);
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t r = t;
      for (unsigned i = d; i-- > 0;) {
        tuple[i] = static_cast<Index>(r % n);
        r /= n;
      }
      if (generates(tuple)) out.push_back(tuple);
    }
    if (out.size() > sample_limit) {
      // partial Fisher-Yates
      for (std::size_t i = 0; i < sample_limit; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, out.size() - 1);
        std::swap(out[i], out[pick(rng)]);
      }
      out.resize(sample_limit);
    }
  } else {
    std::set<std::vector<Index>> chosen;
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    const std::size_t attempts = std::max<std::size_t>(sample_limit, 1) * 1000;
    std::vector<Index> tuple(d);
    for (std::size_t a = 0; a < attempts && chosen.size() < sample_limit; ++a) {
      for (auto& x : tuple) x = pick(rng);
      if (generates(tuple)) chosen.insert(tuple);
    }
    out.assign(chosen.begin(), chosen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

StructureTriple StructureTriple::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == '|') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 3) throw ParseError("a triple has the form 'G/Z | G/G' | G''", 1, 1);
  StructureTriple t;
  t.center_quotient = FgAbelian::parse(parts[0]);
  t.abelianization = FgAbelian::parse(parts[1]);
  t.derived = FgAbelian::parse(parts[2]);
  t.source = Source::UserSupplied;
  return t;
}

std::string StructureTriple::to_string() const {
  return center_quotient.to_string() + " | " + abelianization.to_string() + " | " + derived.to_string();
}

StructureTriple structure_triple(const FiniteGroup& g) {
  if (nilpotency_class(g) > 2) throw NotClass2("structure triple needs nilpotency class <= 2");
  StructureTriple t;
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  t.center_quotient = abelian_structure(quotient(g, z).group);
  t.abelianization = abelian_structure(quotient(g, d).group);
  t.derived = abelian_structure(g, d);
  t.source = StructureTriple::Source::ComputedFromGroup;
  return t;
}

StructureSummary structure_summary(const FiniteGroup& g) {
  StructureSummary s;
  s.order = g.order();
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  s.center_order = z.order();
  s.derived_order = d.order();
  s.center_quotient_order = g.order() / z.order();
  s.frattini_order = frattini_subgroup(g).order();
  s.derived_equals_commutator_set = commutator_set(g).size() == d.order();
  s.abelianization = abelian_structure(quotient(g, d).group);
  if (is_nilpotent(g)) {
    s.nilpotency_class = nilpotency_class(g);
    if (*s.nilpotency_class <= 2) s.triple = structure_triple(g);
  }
  return s;
}

}  // namespace nilaut
