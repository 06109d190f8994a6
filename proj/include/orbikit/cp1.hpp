#ifndef ORBIKIT_CP1_HPP
#define ORBIKIT_CP1_HPP

#include <vector>

#include "orbikit/grouprep.hpp"
#include "orbikit/intmatrix.hpp"

namespace orbikit {

// Z/k-equivariant line bundle on the projective line with fiber weight l
// at u=0 and -h at v=0; degree l+h.  Tensor adds the (l,h) pairs, dual
// negates them, the canonical bundle is (-1,-1).
struct EquivLineBundle {
  long k;
  long l;
  long h;

  bool operator==(const EquivLineBundle& o) const = default;
};

EquivLineBundle lb_tensor(const EquivLineBundle& a, const EquivLineBundle& b);
EquivLineBundle lb_dual(const EquivLineBundle& a);
EquivLineBundle lb_canonical(long k);

// Global sections as a Z/k-representation: sum over s = 0..l+h of the
// weight-(l-s) character; zero when l+h < 0.
RepRingElement h0(const EquivLineBundle& lb);
// First cohomology: sum over s = 0..-l-h-2 of the weight-(l+s+1)
// character; zero when l+h > -2.
RepRingElement h1(const EquivLineBundle& lb);
// h0 - h1; its dimension is l+h+1.
RepRingElement dolbeault_index(const EquivLineBundle& lb);

// Trivial-coefficient of the index of the tensor product; symmetric.
Integer intersection(const EquivLineBundle& a, const EquivLineBundle& b);

// Matrix of pairwise intersections.  The kernel is embarrassingly
// parallel over entries; the serial variant is the reference
// implementation the parallel one is tested against.
IntMatrix pairing_matrix(const std::vector<EquivLineBundle>& basis);
IntMatrix pairing_matrix_serial(const std::vector<EquivLineBundle>& basis);

// Generating set from the two-chart cover: L_{0,0}, L_{0,-k}, then
// L_{-l,0} for l = 1..k-1 and L_{0,-h} for h = 1..k-1 (2k bundles).
std::vector<EquivLineBundle> mv_generators(long k);

// Integer combination of the mv_generators(k) basis.
struct KClassCP1 {
  long k;
  std::vector<Integer> coords;  // length 2k

  bool operator==(const KClassCP1& o) const = default;
};

// [L_{0,-k}] - [L_{0,0}], the degree-shift class.
KClassCP1 delta_class(long k);
Integer kclass_intersection(const KClassCP1& x, const KClassCP1& y);
Integer kclass_index_dimension(const KClassCP1& x);

struct NondegeneracyReport {
  IntMatrix matrix;
  Integer det;
  std::vector<Integer> invariant_factors;
  bool unimodular;       // |det| = 1, equivalently SNF = identity
  bool dual_basis_ok;    // A x = e_i solved over Z for every i (set when unimodular)
};

// det + Smith form of the intersection matrix; when unimodular, also
// verifies bijectivity of the induced mod-Z pairing by solving
// A x = e_i exactly for every standard functional.
NondegeneracyReport nondegeneracy_check(const std::vector<EquivLineBundle>& basis);

// Independent oracle for h0: enumerates the monomial sections u^s one by
// one and reads off the weight of each; refuses |l|+|h| > bound.
RepRingElement h0_bruteforce(const EquivLineBundle& lb, long bound = 64);

}  // namespace orbikit

#endif
