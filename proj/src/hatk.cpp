#include "orbikit/hatk.hpp"

#include <algorithm>
#include <numeric>

#include "orbikit/errors.hpp"

namespace orbikit {

namespace {

// Power-basis coordinates of c at conductor big_l (length phi(big_l));
// rationals sit in position 0.
std::vector<Rational> coords_at(const Cyclotomic& c, long big_l) {
  std::vector<Rational> out(static_cast<std::size_t>(euler_phi(big_l)), Rational(0));
  Cyclotomic p = c.promoted(big_l);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i];
  return out;
}

std::vector<ClassFunction> merged_lattice(const std::vector<ClassFunction>& a,
                                          const std::vector<ClassFunction>& b) {
  std::vector<ClassFunction> out = a;
  for (const auto& e : b)
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  return out;
}

// Does target = sum_k m_k gen_k + (integer shift per irrep, position 0)
// admit an integer solution?  Coefficient vectors are indexed by
// (irrep, power-basis position) at a common conductor.  with_slacks
// selects whether the per-irrep integer shifts participate.
bool lattice_member(const FiniteAbelianGroup& g,
                    const std::map<Coords, Cyclotomic>& target,
                    const std::vector<std::map<Coords, Cyclotomic>>& gens,
                    bool with_slacks) {
  long big_l = 1;
  for (const auto& [pi, c] : target) big_l = std::lcm(big_l, c.conductor());
  for (const auto& gen : gens)
    for (const auto& [pi, c] : gen) big_l = std::lcm(big_l, c.conductor());
  const std::size_t phi = static_cast<std::size_t>(euler_phi(big_l));
  const std::size_t n_pi = target.size();
  const std::size_t n_gen = gens.size();
  const std::size_t cols = n_gen + (with_slacks ? n_pi : 0);
  const std::size_t rows = n_pi * phi;

  IntMatrix m(rows, cols);
  std::vector<Integer> rhs(rows, Integer(0));
  std::size_t pi_idx = 0;
  for (const auto& [pi, c] : target) {
    const std::vector<Rational> t = coords_at(c, big_l);
    std::vector<std::vector<Rational>> e(n_gen);
    for (std::size_t k = 0; k < n_gen; ++k) e[k] = coords_at(gens[k].at(pi), big_l);
    for (std::size_t p = 0; p < phi; ++p) {
      Integer den = t[p].get_den();
      for (const auto& v : e)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v[p].get_den().get_mpz_t());
      const std::size_t row = pi_idx * phi + p;
      for (std::size_t k = 0; k < n_gen; ++k) {
        Rational scaled = e[k][p] * Rational(den);
        m(row, k) = scaled.get_num();
      }
      if (with_slacks && p == 0) m(row, n_gen + pi_idx) = den;
      Rational scaled = t[p] * Rational(den);
      rhs[row] = scaled.get_num();
    }
    ++pi_idx;
  }
  return solve_integer(m, rhs).has_value();
}

}  // namespace

TorusClassFunction::TorusClassFunction(ClassFunction rep, std::vector<ClassFunction> extra)
    : rep_(std::move(rep)), extra_(std::move(extra)) {
  for (const auto& e : extra_)
    if (e.group() != rep_.group())
      throw input_error("extra lattice generator over a different group");
}

TorusClassFunction TorusClassFunction::zero(const FiniteAbelianGroup& g) {
  return TorusClassFunction(ClassFunction(g));
}

TorusClassFunction TorusClassFunction::operator+(const TorusClassFunction& o) const {
  return TorusClassFunction(rep_ + o.rep_, merged_lattice(extra_, o.extra_));
}

TorusClassFunction TorusClassFunction::operator-(const TorusClassFunction& o) const {
  return TorusClassFunction(rep_ - o.rep_, merged_lattice(extra_, o.extra_));
}

TorusClassFunction TorusClassFunction::operator-() const {
  return TorusClassFunction(-rep_, extra_);
}

TorusClassFunction a_map(const ClassFunction& f) {
  const FiniteAbelianGroup& g = f.group();
  const std::map<Coords, Cyclotomic> coeffs = ch_inverse(f);
  ClassFunction rep(g);
  for (const auto& elt : g.elements()) {
    Cyclotomic acc;
    for (const auto& [pi, c] : coeffs) {
      Cyclotomic reduced = c;
      if (c.is_rational())
        reduced = c - Cyclotomic(Rational(rat_floor(c.rational_part())));
      acc += reduced * character_value(g, pi, elt);
    }
    rep.set_value(elt, std::move(acc));
  }
  return TorusClassFunction(std::move(rep));
}

bool torus_equal(const TorusClassFunction& u, const TorusClassFunction& v) {
  if (u.group() != v.group()) throw input_error("torus classes over different groups");
  const ClassFunction diff = u.representative() - v.representative();
  const std::map<Coords, Cyclotomic> d = ch_inverse(diff);
  const std::vector<ClassFunction> extra =
      merged_lattice(u.extra_lattice(), v.extra_lattice());
  if (extra.empty()) {
    for (const auto& [pi, c] : d)
      if (!cyc_is_integer(c)) return false;
    return true;
  }
  std::vector<std::map<Coords, Cyclotomic>> gens;
  gens.reserve(extra.size());
  for (const auto& e : extra) gens.push_back(ch_inverse(e));
  return lattice_member(u.group(), d, gens, /*with_slacks=*/true);
}

bool torus_is_zero(const TorusClassFunction& u) {
  return torus_equal(u, TorusClassFunction::zero(u.group()));
}

Cyclotomic torus_trace(const TorusClassFunction& u) {
  return trace_classfun(u.representative());
}

bool torus_scalar_equal(const Cyclotomic& a, const Cyclotomic& b) {
  return cyc_is_integer(a - b);
}

bool is_real(const TorusClassFunction& u) {
  std::map<Coords, Cyclotomic> d = ch_inverse(u.representative());
  for (auto& [pi, c] : d) c = c - c.conj();
  if (u.extra_lattice().empty()) {
    for (const auto& [pi, c] : d)
      if (!c.is_zero()) return false;
    return true;
  }
  std::vector<std::map<Coords, Cyclotomic>> gens;
  for (const auto& e : u.extra_lattice()) {
    std::map<Coords, Cyclotomic> ge = ch_inverse(e);
    for (auto& [pi, c] : ge) c = c - c.conj();
    gens.push_back(std::move(ge));
  }
  return lattice_member(u.group(), d, gens, /*with_slacks=*/false);
}

HatKPoint HatKPoint::operator+(const HatKPoint& o) const {
  if (degree_ != o.degree_) throw input_error("mixed-degree addition");
  if (degree_ == 0) return degree0(even() + o.even());
  return degree1(odd() + o.odd());
}

bool HatKPoint::equal(const HatKPoint& o) const {
  if (degree_ != o.degree_) return false;
  if (degree_ == 0) return even() == o.even();
  return torus_equal(odd(), o.odd());
}

}  // namespace orbikit
