#include "orbikit/cp1.hpp"

#include <cstdlib>

#include "orbikit/errors.hpp"

namespace orbikit {

namespace {
void check_same_k(const EquivLineBundle& a, const EquivLineBundle& b) {
  if (a.k != b.k) throw input_error("line bundles with different cyclic orders");
}

FiniteAbelianGroup gamma(long k) {
  if (k < 1) throw input_error("cyclic order must be >= 1");
  return FiniteAbelianGroup({k});
}
}  // namespace

EquivLineBundle lb_tensor(const EquivLineBundle& a, const EquivLineBundle& b) {
  check_same_k(a, b);
  return {a.k, a.l + b.l, a.h + b.h};
}

EquivLineBundle lb_dual(const EquivLineBundle& a) { return {a.k, -a.l, -a.h}; }

EquivLineBundle lb_canonical(long k) { return {k, -1, -1}; }

RepRingElement h0(const EquivLineBundle& lb) {
  RepRingElement out(gamma(lb.k));
  for (long s = 0; s <= lb.l + lb.h; ++s) out.add_term({lb.l - s}, Integer(1));
  return out;
}

RepRingElement h1(const EquivLineBundle& lb) {
  RepRingElement out(gamma(lb.k));
  for (long s = 0; s <= -lb.l - lb.h - 2; ++s) out.add_term({lb.l + s + 1}, Integer(1));
  return out;
}

RepRingElement dolbeault_index(const EquivLineBundle& lb) { return h0(lb) - h1(lb); }

Integer intersection(const EquivLineBundle& a, const EquivLineBundle& b) {
  return trace_G(dolbeault_index(lb_tensor(a, b)));
}

IntMatrix pairing_matrix(const std::vector<EquivLineBundle>& basis) {
  if (basis.empty()) return IntMatrix(0, 0);
  for (const auto& lb : basis) check_same_k(basis.front(), lb);
  const long n = static_cast<long>(basis.size());
  IntMatrix a(basis.size(), basis.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          intersection(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
  return a;
}

IntMatrix pairing_matrix_serial(const std::vector<EquivLineBundle>& basis) {
  if (basis.empty()) return IntMatrix(0, 0);
  for (const auto& lb : basis) check_same_k(basis.front(), lb);
  IntMatrix a(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = intersection(basis[i], basis[j]);
  return a;
}

std::vector<EquivLineBundle> mv_generators(long k) {
  if (k < 1) throw input_error("cyclic order must be >= 1");
  std::vector<EquivLineBundle> out{{k, 0, 0}, {k, 0, -k}};
  for (long l = 1; l < k; ++l) out.push_back({k, -l, 0});
  for (long h = 1; h < k; ++h) out.push_back({k, 0, -h});
  return out;
}

KClassCP1 delta_class(long k) {
  KClassCP1 x{k, std::vector<Integer>(static_cast<std::size_t>(2 * k), Integer(0))};
  x.coords[0] = -1;
  x.coords[1] = 1;
  return x;
}

Integer kclass_intersection(const KClassCP1& x, const KClassCP1& y) {
  if (x.k != y.k) throw input_error("classes with different cyclic orders");
  const IntMatrix a = pairing_matrix(mv_generators(x.k));
  Integer acc(0);
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j)
      acc += x.coords[i] * a(i, j) * y.coords[j];
  }
  return acc;
}

Integer kclass_index_dimension(const KClassCP1& x) {
  const std::vector<EquivLineBundle> gens = mv_generators(x.k);
  Integer acc(0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    acc += x.coords[i] * dolbeault_index(gens[i]).dimension();
  return acc;
}

NondegeneracyReport nondegeneracy_check(const std::vector<EquivLineBundle>& basis) {
  NondegeneracyReport report;
  report.matrix = pairing_matrix(basis);
  report.det = basis.empty() ? Integer(1) : det_bareiss(report.matrix);
  SmithResult snf = smith_normal_form(report.matrix);
  for (std::size_t i = 0; i < basis.size(); ++i) report.invariant_factors.push_back(snf.d(i, i));
  Integer abs_det;
  mpz_abs(abs_det.get_mpz_t(), report.det.get_mpz_t());
  report.unimodular = abs_det == 1;
  report.dual_basis_ok = false;
  if (report.unimodular) {
    // columns of the inverse solve A x = e_i exactly, hence mod Z
    const IntMatrix inv = inverse_unimodular(report.matrix);
    report.dual_basis_ok = report.matrix * inv == IntMatrix::identity(basis.size());
  }
  return report;
}

RepRingElement h0_bruteforce(const EquivLineBundle& lb, long bound) {
  if (std::abs(lb.l) + std::abs(lb.h) > bound)
    throw domain_error("section enumeration bound exceeded");
  RepRingElement out(gamma(lb.k));
  long s = 0;
  while (s <= lb.l + lb.h) {
    // the generator sends u^s to zeta^{l-s} u^s
    const long weight = lb.l - s;
    out.add_term({weight}, Integer(1));
    ++s;
  }
  return out;
}

}  // namespace orbikit
