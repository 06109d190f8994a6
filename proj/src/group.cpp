#include "orbikit/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbikit/errors.hpp"

namespace orbikit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw input_error("group needs at least one cyclic factor");
  order_ = 1;
  for (long n : orders_) {
    if (n < 1) throw input_error("cyclic factor order must be >= 1");
    if (order_ > (1L << 56) / n) throw input_error("group order overflow");
    order_ *= n;
  }
}

Coords FiniteAbelianGroup::reduce(Coords g) const {
  if (g.size() != orders_.size()) throw input_error("element arity mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] %= orders_[i];
    if (g[i] < 0) g[i] += orders_[i];
  }
  return g;
}

Coords FiniteAbelianGroup::add(const Coords& a, const Coords& b) const {
  if (a.size() != orders_.size() || b.size() != orders_.size())
    throw input_error("element arity mismatch");
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
  return c;
}

Coords FiniteAbelianGroup::neg(const Coords& a) const {
  Coords c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] == 0 ? 0 : orders_[i] - c[i];
  return c;
}

Coords FiniteAbelianGroup::scale(long n, const Coords& a) const {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    long m = orders_[i];
    long r = (n % m) * (a[i] % m) % m;
    c[i] = r < 0 ? r + m : r;
  }
  return c;
}

long FiniteAbelianGroup::element_order(const Coords& a) const {
  long ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long o = orders_[i] / std::gcd(orders_[i], a[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::vector<Coords> FiniteAbelianGroup::elements() const {
  if (order_ > (1L << 22)) throw resource_error("group too large to enumerate");
  std::vector<Coords> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

long FiniteAbelianGroup::index_of(const Coords& g) const {
  Coords r = reduce(g);
  long idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx = idx * orders_[i] + r[i];
  return idx;
}

Coords FiniteAbelianGroup::element_at(long idx) const {
  Coords g(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    g[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return g;
}

Coords SubgroupEmbedding::embed(const Coords& h) const {
  if (h.size() != sub.rank()) throw input_error("element arity mismatch");
  Coords g = ambient.zero();
  for (std::size_t j = 0; j < images.size(); ++j)
    g = ambient.add(g, ambient.scale(h[j], images[j]));
  return g;
}

std::vector<Coords> subgroup_closure(const FiniteAbelianGroup& g,
                                     const std::vector<Coords>& gens) {
  std::set<Coords> seen;
  seen.insert(g.zero());
  std::vector<Coords> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        Coords y = g.add(x, g.reduce(gen));
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

SubgroupEmbedding embedding_from_images(const FiniteAbelianGroup& ambient,
                                        const std::vector<Coords>& images) {
  if (images.empty())
    return SubgroupEmbedding{FiniteAbelianGroup({1}), ambient, {ambient.zero()}};
  std::vector<long> sub_orders;
  std::vector<Coords> reduced;
  long expected = 1;
  for (const auto& im : images) {
    Coords r = ambient.reduce(im);
    long o = ambient.element_order(r);
    sub_orders.push_back(o);
    reduced.push_back(std::move(r));
    expected *= o;
  }
  if (static_cast<long>(subgroup_closure(ambient, reduced).size()) != expected)
    throw input_error("generator images do not define an injective homomorphism");
  return SubgroupEmbedding{FiniteAbelianGroup(std::move(sub_orders)), ambient,
                           std::move(reduced)};
}

std::vector<Coords> subgroup_elements(const SubgroupEmbedding& e) {
  return subgroup_closure(e.ambient, e.images);
}

QuotientPresentation::QuotientPresentation(const FiniteAbelianGroup& ambient,
                                           const SubgroupEmbedding& h)
    : ambient_(ambient), quotient_({1}) {
  if (h.ambient != ambient) throw input_error("subgroup lives in a different group");
  const std::size_t r = ambient.rank(), s = h.images.size();
  IntMatrix rel(r, r + s);
  for (std::size_t i = 0; i < r; ++i) rel(i, i) = ambient.orders()[i];
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < r; ++i) rel(i, r + j) = h.images[j][i];

  SmithResult snf = smith_normal_form(rel);
  u_ = snf.u;
  u_inv_ = inverse_unimodular(u_);
  diag_.resize(r);
  std::vector<long> q_orders;
  for (std::size_t i = 0; i < r; ++i) {
    diag_[i] = static_cast<long>(snf.d(i, i).get_si());
    if (diag_[i] > 1) {
      kept_.push_back(i);
      q_orders.push_back(diag_[i]);
    }
  }
  if (!q_orders.empty()) quotient_ = FiniteAbelianGroup(q_orders);
}

Coords QuotientPresentation::project(const Coords& g) const {
  Coords rg = ambient_.reduce(g);
  Coords k(quotient_.rank(), 0);
  if (kept_.empty()) return k;
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t i = kept_[t];
    Integer y(0);
    for (std::size_t j = 0; j < ambient_.rank(); ++j) y += u_(i, j) * rg[j];
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), y.get_mpz_t(), Integer(diag_[i]).get_mpz_t());
    k[t] = static_cast<long>(m.get_si());
  }
  return k;
}

Coords QuotientPresentation::section(const Coords& k) const {
  Coords rk = quotient_.reduce(k);
  std::vector<Integer> y(ambient_.rank(), Integer(0));
  for (std::size_t t = 0; t < kept_.size(); ++t) y[kept_[t]] = rk[t];
  Coords g(ambient_.rank());
  for (std::size_t j = 0; j < ambient_.rank(); ++j) {
    Integer v(0);
    for (std::size_t i = 0; i < ambient_.rank(); ++i) v += u_inv_(j, i) * y[i];
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), Integer(ambient_.orders()[j]).get_mpz_t());
    g[j] = static_cast<long>(m.get_si());
  }
  return g;
}

std::vector<std::vector<Coords>> all_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::vector<Coords>> found;
  std::vector<Coords> trivial{g.zero()};
  found.insert(trivial);
  std::vector<std::vector<Coords>> frontier{trivial};
  const std::vector<Coords> everyone = g.elements();
  while (!frontier.empty()) {
    std::vector<std::vector<Coords>> next;
    for (const auto& s : frontier) {
      for (const auto& x : everyone) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        std::vector<Coords> gens = s;
        gens.push_back(x);
        std::vector<Coords> bigger = subgroup_closure(g, gens);
        if (found.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

SubgroupEmbedding embedding_from_subset(const FiniteAbelianGroup& g,
                                        const std::vector<Coords>& subset) {
  const std::size_t r = g.rank();
  const std::size_t t = subset.size();
  // lattice of lifts: columns of diag(orders) plus one lift per element
  IntMatrix b(r, r + t);
  for (std::size_t i = 0; i < r; ++i) b(i, i) = g.orders()[i];
  for (std::size_t j = 0; j < t; ++j) {
    Coords x = g.reduce(subset[j]);
    for (std::size_t i = 0; i < r; ++i) b(i, r + j) = x[i];
  }
  SmithResult outer = smith_normal_form(b);
  IntMatrix u_inv = inverse_unimodular(outer.u);

  // basis of the lift lattice: columns of u_inv * diag(d)
  IntMatrix basis(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) basis(i, j) = u_inv(i, j) * outer.d(j, j);

  // subgroup = lift lattice / diag(orders); relations in basis coordinates
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Integer num = outer.u(i, j) * g.orders()[j];
      mpz_divexact(c(i, j).get_mpz_t(), num.get_mpz_t(), outer.d(i, i).get_mpz_t());
    }
  SmithResult inner = smith_normal_form(c);
  IntMatrix gen = basis * inverse_unimodular(inner.u);

  std::vector<long> sub_orders;
  std::vector<Coords> images;
  for (std::size_t i = 0; i < r; ++i) {
    const long e = static_cast<long>(inner.d(i, i).get_si());
    if (e <= 1) continue;
    sub_orders.push_back(e);
    Coords img(r);
    for (std::size_t row = 0; row < r; ++row) {
      Integer m;
      mpz_fdiv_r(m.get_mpz_t(), gen(row, i).get_mpz_t(),
                 Integer(g.orders()[row]).get_mpz_t());
      img[row] = static_cast<long>(m.get_si());
    }
    images.push_back(std::move(img));
  }
  if (sub_orders.empty()) return SubgroupEmbedding{FiniteAbelianGroup({1}), g, {g.zero()}};

  SubgroupEmbedding emb{FiniteAbelianGroup(std::move(sub_orders)), g, std::move(images)};
  if (subgroup_elements(emb) != subset)
    throw domain_error("canonical subgroup presentation failed to close");
  return emb;
}

std::vector<SubgroupEmbedding> all_embeddings(const FiniteAbelianGroup& g) {
  std::vector<SubgroupEmbedding> out;
  for (const auto& subset : all_subgroups(g)) {
    SubgroupEmbedding canonical = embedding_from_subset(g, subset);
    const std::vector<long>& m = canonical.sub.orders();
    const std::size_t k = m.size();
    // every image tuple in subset^k defining an injective homomorphism
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      std::vector<Coords> images;
      images.reserve(k);
      bool orders_ok = true;
      for (std::size_t j = 0; j < k && orders_ok; ++j) {
        const Coords& cand = subset[pick[j]];
        if (m[j] % g.element_order(cand) != 0) orders_ok = false;
        images.push_back(cand);
      }
      if (orders_ok && subgroup_closure(g, images).size() == subset.size())
        out.push_back(SubgroupEmbedding{canonical.sub, g, images});

      std::size_t j = 0;
      while (j < k && ++pick[j] == subset.size()) pick[j++] = 0;
      if (j == k) break;
    }
  }
  return out;
}

namespace {
void invariant_chains(long product, long cap, std::vector<long>& chain,
                      std::vector<std::vector<long>>& out) {
  if (product == 1) {
    std::vector<long> asc(chain.rbegin(), chain.rend());
    out.push_back(std::move(asc));
    return;
  }
  for (long d = 2; d <= std::min(product, cap); ++d) {
    if (product % d != 0 || cap % d != 0) continue;
    chain.push_back(d);
    invariant_chains(product / d, d, chain, out);
    chain.pop_back();
  }
}
}  // namespace

std::vector<FiniteAbelianGroup> abelian_groups_up_to(long max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (long n = 1; n <= max_order; ++n) {
    if (n == 1) {
      out.push_back(FiniteAbelianGroup({1}));
      continue;
    }
    std::vector<std::vector<long>> chains;
    std::vector<long> chain;
    invariant_chains(n, n, chain, chains);
    for (auto& c : chains) out.push_back(FiniteAbelianGroup(std::move(c)));
  }
  return out;
}

}  // namespace orbikit
