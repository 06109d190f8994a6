#include "orbikit/grouprep.hpp"

#include <numeric>

#include "orbikit/errors.hpp"

namespace orbikit {

namespace {

long turn_lcm(const FiniteAbelianGroup& g) {
  long l = 1;
  for (long n : g.orders()) l = std::lcm(l, n);
  return l;
}

// Numerator of sum_i l_i e_i / n_i over the common denominator big_l.
long turn_numerator(const FiniteAbelianGroup& g, const Coords& labels, const Coords& elt,
                    long big_l) {
  if (labels.size() != g.rank() || elt.size() != g.rank())
    throw input_error("label or element arity mismatch");
  __int128 acc = 0;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const long n = g.orders()[i];
    long l = labels[i] % n, e = elt[i] % n;
    if (l < 0) l += n;
    if (e < 0) e += n;
    __int128 term = (__int128)l * e % big_l;
    term = term * (big_l / n) % big_l;
    acc = (acc + term) % big_l;
  }
  return static_cast<long>(acc);
}

Coords restricted_labels(const SubgroupEmbedding& h, const Coords& labels) {
  const long big_l = turn_lcm(h.ambient);
  Coords out(h.sub.rank());
  for (std::size_t j = 0; j < h.sub.rank(); ++j) {
    const long num = turn_numerator(h.ambient, labels, h.images[j], big_l);
    out[j] = static_cast<long>((__int128)num * h.sub.orders()[j] / big_l);
  }
  return out;
}

}  // namespace

Rational character_turn(const FiniteAbelianGroup& g, const Coords& labels, const Coords& elt) {
  const long big_l = turn_lcm(g);
  Rational t(turn_numerator(g, labels, elt, big_l), big_l);
  t.canonicalize();
  return t;
}

Cyclotomic character_value(const FiniteAbelianGroup& g, const Coords& labels,
                           const Coords& elt) {
  return Cyclotomic::from_turn(character_turn(g, labels, elt));
}

RepRingElement RepRingElement::irrep(const FiniteAbelianGroup& g, const Coords& labels) {
  RepRingElement x(g);
  x.add_term(labels, Integer(1));
  return x;
}

RepRingElement RepRingElement::trivial(const FiniteAbelianGroup& g) {
  return irrep(g, g.zero());
}

Integer RepRingElement::coeff(const Coords& labels) const {
  auto it = coeffs_.find(group_.reduce(labels));
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void RepRingElement::add_term(const Coords& labels, const Integer& n) {
  if (n == 0) return;
  Coords key = group_.reduce(labels);
  auto [it, fresh] = coeffs_.emplace(std::move(key), n);
  if (!fresh) {
    it->second += n;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RepRingElement RepRingElement::operator+(const RepRingElement& o) const {
  if (group_ != o.group_) throw input_error("virtual characters over different groups");
  RepRingElement out = *this;
  for (const auto& [l, n] : o.coeffs_) out.add_term(l, n);
  return out;
}

RepRingElement RepRingElement::operator-(const RepRingElement& o) const {
  return *this + (-o);
}

RepRingElement RepRingElement::operator-() const {
  RepRingElement out(group_);
  for (const auto& [l, n] : coeffs_) out.coeffs_.emplace(l, -n);
  return out;
}

RepRingElement RepRingElement::scaled(const Integer& n) const {
  RepRingElement out(group_);
  if (n == 0) return out;
  for (const auto& [l, c] : coeffs_) out.coeffs_.emplace(l, c * n);
  return out;
}

Integer RepRingElement::dimension() const {
  Integer d(0);
  for (const auto& [l, n] : coeffs_) d += n;
  return d;
}

ClassFunction::ClassFunction(FiniteAbelianGroup g) : group_(std::move(g)) {
  if (group_.order() > (1L << 22)) throw resource_error("group too large to enumerate");
  values_.resize(static_cast<std::size_t>(group_.order()));
}

const Cyclotomic& ClassFunction::value(const Coords& g) const {
  return values_[static_cast<std::size_t>(group_.index_of(g))];
}

void ClassFunction::set_value(const Coords& g, Cyclotomic v) {
  values_[static_cast<std::size_t>(group_.index_of(g))] = std::move(v);
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group_ != o.group_) throw input_error("class functions over different groups");
  ClassFunction out(group_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] + o.values_[i];
  return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + (-o); }

ClassFunction ClassFunction::operator-() const {
  ClassFunction out(group_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = -values_[i];
  return out;
}

ClassFunction ClassFunction::pointwise_mul(const ClassFunction& o) const {
  if (group_ != o.group_) throw input_error("class functions over different groups");
  ClassFunction out(group_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * o.values_[i];
  return out;
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
  ClassFunction out(group_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * c;
  return out;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (group_ != o.group_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != o.values_[i]) return false;
  return true;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

RepRingElement rep_tensor(const RepRingElement& x, const RepRingElement& y) {
  if (x.group() != y.group()) throw input_error("virtual characters over different groups");
  RepRingElement out(x.group());
  for (const auto& [lx, nx] : x.coeffs())
    for (const auto& [ly, ny] : y.coeffs()) out.add_term(x.group().add(lx, ly), nx * ny);
  return out;
}

RepRingElement rep_dual(const RepRingElement& x) {
  RepRingElement out(x.group());
  for (const auto& [l, n] : x.coeffs()) out.add_term(x.group().neg(l), n);
  return out;
}

Integer trace_G(const RepRingElement& x) { return x.coeff(x.group().zero()); }

Integer pairing(const RepRingElement& x, const RepRingElement& y) {
  return trace_G(rep_tensor(x, y));
}

ClassFunction ch(const RepRingElement& x) {
  ClassFunction f(x.group());
  for (const auto& g : x.group().elements()) {
    Cyclotomic acc;
    for (const auto& [l, n] : x.coeffs())
      acc += Cyclotomic(Rational(n)) * character_value(x.group(), l, g);
    f.set_value(g, std::move(acc));
  }
  return f;
}

Cyclotomic trace_classfun(const ClassFunction& f) {
  Cyclotomic acc;
  for (const auto& v : f.values()) acc += v;
  return acc * Cyclotomic(Rational(1, f.group().order()));
}

std::map<Coords, Cyclotomic> ch_inverse(const ClassFunction& f) {
  const FiniteAbelianGroup& g = f.group();
  const Cyclotomic inv_order{Rational(1, g.order())};
  std::map<Coords, Cyclotomic> out;
  const std::vector<Coords> elements = g.elements();
  for (const auto& labels : all_irreps(g)) {
    Cyclotomic acc;
    for (const auto& e : elements)
      acc += f.value(e) * character_value(g, labels, g.neg(e));
    out.emplace(labels, acc * inv_order);
  }
  return out;
}

RepRingElement induce(const SubgroupEmbedding& h, const RepRingElement& x) {
  if (x.group() != h.sub) throw input_error("character does not live over the subgroup");
  RepRingElement out(h.ambient);
  for (const auto& pi : all_irreps(h.ambient)) {
    Integer n = x.coeff(restricted_labels(h, pi));
    if (n != 0) out.add_term(pi, n);
  }
  return out;
}

RepRingElement restrict_rep(const SubgroupEmbedding& h, const RepRingElement& x) {
  if (x.group() != h.ambient) throw input_error("character does not live over the ambient group");
  RepRingElement out(h.sub);
  for (const auto& [l, n] : x.coeffs()) out.add_term(restricted_labels(h, l), n);
  return out;
}

RepRingElement invariants(const RepRingElement& x, const SubgroupEmbedding& h,
                          const QuotientPresentation& q) {
  if (x.group() != h.ambient || q.ambient() != h.ambient)
    throw input_error("invariants: mismatched group data");
  const FiniteAbelianGroup& k = q.quotient();
  const long big_l = turn_lcm(h.ambient);

  std::vector<Coords> sections(k.rank());
  for (std::size_t t = 0; t < k.rank(); ++t) {
    Coords e = k.zero();
    e[t] = 1;
    sections[t] = q.section(e);
  }

  RepRingElement out(k);
  for (const auto& [l, n] : x.coeffs()) {
    Coords on_h = restricted_labels(h, l);
    if (on_h != h.sub.zero()) continue;  // not H-invariant
    Coords kl(k.rank());
    for (std::size_t t = 0; t < k.rank(); ++t) {
      const long num = turn_numerator(h.ambient, l, sections[t], big_l);
      kl[t] = static_cast<long>((__int128)num * k.orders()[t] / big_l);
    }
    out.add_term(kl, n);
  }
  return out;
}

ClassFunction average_H(const ClassFunction& f, const SubgroupEmbedding& h,
                        const QuotientPresentation& q) {
  if (f.group() != h.ambient || q.ambient() != h.ambient)
    throw input_error("average: mismatched group data");
  const FiniteAbelianGroup& k = q.quotient();
  const std::vector<Coords> h_elements = h.sub.elements();
  const Cyclotomic inv_h{Rational(1, h.sub.order())};

  ClassFunction out(k);
  for (const auto& kk : k.elements()) {
    const Coords sec = q.section(kk);
    Cyclotomic acc;
    for (const auto& hh : h_elements) acc += f.value(h.ambient.add(h.embed(hh), sec));
    out.set_value(kk, acc * inv_h);
  }
  return out;
}

ClassFunction real_structure(const ClassFunction& f) {
  ClassFunction out(f.group());
  for (const auto& g : f.group().elements()) out.set_value(g, f.value(f.group().neg(g)).conj());
  return out;
}

IntMatrix dual_pairing_matrix(const FiniteAbelianGroup& g) {
  const std::vector<Coords> irreps = all_irreps(g);
  const std::size_t n = irreps.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RepRingElement xi = RepRingElement::irrep(g, irreps[i]);
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = pairing(xi, RepRingElement::irrep(g, irreps[j]));
  }
  return m;
}

}  // namespace orbikit
