#include "nilaut/autos.hpp"

#include <algorithm>
#include <numeric>

#include "nilaut/errors.hpp"

namespace nilaut {

Automorphism Automorphism::from_images(const FiniteGroup& g, std::vector<Index> images) {
  const std::size_t n = g.order();
  if (images.size() != n) throw PreconditionError("automorphism has the wrong degree");
  std::vector<char> hit(n, 0);
  for (Index y : images) {
    if (y >= n || hit[y]) throw PreconditionError("map is not a bijection");
    hit[y] = 1;
  }
  for (Index x = 0; x < n; ++x)
    for (Index s : g.generators())
      if (images[g.mul(x, s)] != g.mul(images[x], images[s]))
        throw PreconditionError("map is not multiplicative");
  return Automorphism(std::move(images));
}

Automorphism Automorphism::identity(const FiniteGroup& g) {
  std::vector<Index> id(g.order());
  std::iota(id.begin(), id.end(), Index{0});
  return Automorphism(std::move(id));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<Index> out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a(b(static_cast<Index>(x)));
  return Automorphism(std::move(out));
}

Automorphism inverse(const Automorphism& a) {
  std::vector<Index> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a(static_cast<Index>(x))] = static_cast<Index>(x);
  return Automorphism(std::move(out));
}

std::string to_string(AutKind kind) {
  switch (kind) {
    case AutKind::Inner: return "Inn";
    case AutKind::IA: return "IA";
    case AutKind::IAStar: return "IA*";
    case AutKind::AutC: return "Aut_c";
    case AutKind::Full: return "Aut";
    case AutKind::Other: return "other";
  }
  return "other";
}

AutSet::AutSet(AutKind kind, std::size_t degree, std::vector<Automorphism> members)
    : kind_(kind), degree_(degree), members_(std::move(members)) {
  for (const auto& a : members_)
    if (a.size() != degree_) throw PreconditionError("automorphisms of different groups in one set");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AutSet::contains(const Automorphism& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool AutSet::contains_identity() const {
  std::vector<Index> id(degree_);
  std::iota(id.begin(), id.end(), Index{0});
  return std::any_of(members_.begin(), members_.end(), [&](const Automorphism& a) { return a.images() == id; });
}

bool AutSet::is_subset_of(const AutSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool AutSet::is_closed() const {
  if (closed_) return *closed_;
  bool ok = !members_.empty() && contains_identity();
  for (std::size_t i = 0; ok && i < members_.size(); ++i) {
    ok = contains(inverse(members_[i]));
    for (std::size_t j = 0; ok && j < members_.size(); ++j) ok = contains(compose(members_[i], members_[j]));
  }
  closed_ = ok;
  return ok;
}

bool AutSet::is_abelian() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (compose(members_[i], members_[j]) != compose(members_[j], members_[i])) return false;
  return true;
}

bool set_equal(const AutSet& a, const AutSet& b) {
  return a.degree() == b.degree() && a.members() == b.members();
}

FiniteGroup as_group(const AutSet& s) {
  if (!s.is_closed()) throw PreconditionError("automorphism set is not a group");
  const auto& m = s.members();
  const std::size_t k = m.size();
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto c = compose(m[i], m[j]);
      table[i * k + j] = static_cast<Index>(std::lower_bound(m.begin(), m.end(), c) - m.begin());
    }
  std::vector<Index> gens(k);
  std::iota(gens.begin(), gens.end(), Index{0});
  return FiniteGroup(k, std::move(table), std::move(gens), to_string(s.kind()), "automorphisms");
}

AutStructure structure_of(const AutSet& s) {
  AutStructure out;
  out.order = s.order();
  if (s.is_closed() && s.is_abelian()) out.abelian = abelian_structure(as_group(s));
  return out;
}

AutSet inner(const FiniteGroup& g) {
  std::vector<Automorphism> out;
  for (Index a = 0; a < g.order(); ++a) {
    std::vector<Index> img(g.order());
    for (Index x = 0; x < g.order(); ++x) img[x] = g.conjugate(x, a);
    out.push_back(Automorphism::from_images(g, std::move(img)));
  }
  return AutSet(AutKind::Inner, g.order(), std::move(out));
}

namespace {

Automorphism t_theta_on(const FiniteGroup& g, const Quotient& q, std::span<const Index> theta) {
  const FiniteGroup& gq = q.group;
  if (theta.size() != gq.order()) throw PreconditionError("theta must give one value per coset");
  for (Index c = 0; c < gq.order(); ++c)
    for (Index d = 0; d < gq.order(); ++d)
      if (theta[gq.mul(c, d)] != g.mul(theta[c], theta[d]))
        throw ThetaNotHomomorphism("theta is not a homomorphism on G/X");
  std::vector<Index> img(g.order());
  for (Index x = 0; x < g.order(); ++x) img[x] = g.mul(x, theta[q.projection[x]]);
  return Automorphism::from_images(g, std::move(img));
}

unsigned class_at_most_2(const FiniteGroup& g) {
  try {
    const unsigned c = nilpotency_class(g);
    if (c > 2) throw NotClass2("nilpotency class is " + std::to_string(c));
    return c;
  } catch (const NotNilpotent&) {
    throw NotClass2("group is not nilpotent");
  }
}

std::vector<Index> search_generators(const FiniteGroup& g) {
  if (is_nilpotent(g)) return minimal_generating_set(g);
  std::vector<Index> gens;
  for (Index s : g.generators())
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  return gens;
}

AutSet search_automorphisms(const FiniteGroup& g, const AutOptions& opts, AutKind kind,
                            const std::vector<Index>* coset_of) {
  if (g.order() > opts.oracle_cap)
    throw CapExceeded("order " + std::to_string(g.order()) + " exceeds the oracle cap " +
                      std::to_string(opts.oracle_cap));
  if (g.order() == 1) return AutSet(kind, 1, {Automorphism::identity(g)});
  const std::vector<Index> gens = search_generators(g);
  std::vector<std::vector<Index>> candidates;
  for (Index s : gens) {
    const std::size_t o = g.element_order(s);
    std::vector<Index> c;
    for (Index y = 0; y < g.order(); ++y)
      if (g.element_order(y) == o && (!coset_of || (*coset_of)[y] == (*coset_of)[s])) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  kernels::HomSearch search{&g, &g, gens, std::move(candidates), true};
  if (kernels::candidate_count(search) > opts.candidate_cap)
    throw CapExceeded("generator-image search space exceeds the candidate cap");
  std::vector<Automorphism> out;
  for (auto& images : kernels::search_homomorphisms(search, opts.policy))
    out.push_back(Automorphism::from_images(g, std::move(images)));
  return AutSet(kind, g.order(), std::move(out));
}

}  // namespace

Automorphism t_theta(const FiniteGroup& g, const Subgroup& x, const Subgroup& y, std::span<const Index> theta) {
  if (!x.is_normal(g)) throw PreconditionError("X is not normal");
  if (!y.is_subset_of(x)) throw PreconditionError("Y is not contained in X");
  for (Index c : y.elements())
    for (Index s : g.generators())
      if (g.mul(c, s) != g.mul(s, c)) throw YNotCentral("Y is not central");
  for (Index v : theta)
    if (v >= g.order() || !y.contains(v)) throw PreconditionError("theta takes a value outside Y");
  return t_theta_on(g, quotient(g, x), theta);
}

AutSet ia_class2(const FiniteGroup& g) {
  class_at_most_2(g);
  const Subgroup d = derived_subgroup(g);
  const Quotient q = quotient(g, d);
  const AbelianDecomposition dec = decompose_abelian(q.group);
  const std::size_t k = dec.basis.size();
  const FiniteGroup& gq = q.group;

  // coordinates of every coset over the basis
  std::vector<std::vector<Int>> coords(gq.order(), std::vector<Int>(k, 0));
  {
    std::vector<Int> c(k, 0);
    for (std::size_t t = 0; t < gq.order(); ++t) {
      Index e = gq.identity();
      for (std::size_t i = 0; i < k; ++i) e = gq.mul(e, gq.pow(dec.basis[i], static_cast<long long>(c[i])));
      coords[e] = c;
      for (std::size_t i = k; i-- > 0;) {
        if (++c[i] < dec.basis_orders[i]) break;
        c[i] = 0;
      }
    }
  }
  std::vector<std::vector<Index>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Index c : d.elements())
      if (g.pow(c, static_cast<long long>(dec.basis_orders[i])) == g.identity()) candidates[i].push_back(c);

  std::vector<Automorphism> out;
  std::vector<std::size_t> pick(k, 0);
  std::vector<Index> theta(gq.order());
  while (true) {
    for (Index e = 0; e < gq.order(); ++e) {
      Index v = g.identity();
      for (std::size_t i = 0; i < k; ++i)
        v = g.mul(v, g.pow(candidates[i][pick[i]], static_cast<long long>(coords[e][i])));
      theta[e] = v;
    }
    out.push_back(t_theta_on(g, q, theta));
    std::size_t i = k;
    while (i-- > 0) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return AutSet(AutKind::IA, g.order(), std::move(out));
}

AutSet ia_bruteforce(const FiniteGroup& g, const AutOptions& opts) {
  if (g.order() > opts.oracle_cap)
    throw CapExceeded("order " + std::to_string(g.order()) + " exceeds the oracle cap " +
                      std::to_string(opts.oracle_cap));
  const Quotient q = quotient(g, derived_subgroup(g));
  return search_automorphisms(g, opts, AutKind::IA, &q.projection);
}

AutSet aut_bruteforce(const FiniteGroup& g, const AutOptions& opts) {
  return search_automorphisms(g, opts, AutKind::Full, nullptr);
}

AutSet ia(const FiniteGroup& g, const AutOptions& opts) {
  if (is_nilpotent(g) && nilpotency_class(g) <= 2) return ia_class2(g);
  return ia_bruteforce(g, opts);
}

AutSet ia_star(const FiniteGroup& g, const AutOptions& opts) {
  const Subgroup z = center(g);
  return ia(g, opts).filter(AutKind::IAStar, [&](const Automorphism& a) {
    return std::all_of(z.elements().begin(), z.elements().end(), [&](Index x) { return a(x) == x; });
  });
}

AutSet aut_c(const FiniteGroup& g, const AutOptions& opts) {
  const auto ids = conjugacy_class_ids(g);
  auto preserves = [&](const Automorphism& a) {
    for (Index x = 0; x < g.order(); ++x)
      if (ids[a(x)] != ids[x]) return false;
    return true;
  };
  if (is_nilpotent(g) && nilpotency_class(g) <= 2) return ia_star(g, opts).filter(AutKind::AutC, preserves);
  return aut_bruteforce(g, opts).filter(AutKind::AutC, preserves);
}

}  // namespace nilaut
