#ifndef ORBIKIT_GROUPREP_HPP
#define ORBIKIT_GROUPREP_HPP

#include <map>
#include <vector>

#include "orbikit/cyclotomic.hpp"
#include "orbikit/group.hpp"
#include "orbikit/intmatrix.hpp"

namespace orbikit {

// Irreducible characters of a finite abelian group are indexed by label
// tuples l (reduced mod the orders); the character at g is
// prod_i zeta_{n_i}^{l_i g_i}.  Canonical enumeration is lexicographic,
// which coincides with the element enumeration.
inline std::vector<Coords> all_irreps(const FiniteAbelianGroup& g) { return g.elements(); }

// The fractional part of sum_i l_i g_i / n_i: the character value is
// e^{2 pi i turn}.
Rational character_turn(const FiniteAbelianGroup& g, const Coords& labels, const Coords& elt);
Cyclotomic character_value(const FiniteAbelianGroup& g, const Coords& labels, const Coords& elt);

// Virtual character: sparse integer combination of irrep labels.
class RepRingElement {
 public:
  explicit RepRingElement(FiniteAbelianGroup g) : group_(std::move(g)) {}
  static RepRingElement irrep(const FiniteAbelianGroup& g, const Coords& labels);
  static RepRingElement trivial(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::map<Coords, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(const Coords& labels) const;
  void add_term(const Coords& labels, const Integer& n);

  RepRingElement operator+(const RepRingElement& o) const;
  RepRingElement operator-(const RepRingElement& o) const;
  RepRingElement operator-() const;
  RepRingElement scaled(const Integer& n) const;

  bool operator==(const RepRingElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const RepRingElement& o) const { return !(*this == o); }
  bool is_zero() const { return coeffs_.empty(); }
  Integer dimension() const;  // sum of coefficients

 private:
  FiniteAbelianGroup group_;
  std::map<Coords, Integer> coeffs_;  // zero coefficients absent
};

// Total function G -> cyclotomics; for abelian G every function is a
// class function.
class ClassFunction {
 public:
  explicit ClassFunction(FiniteAbelianGroup g);

  const FiniteAbelianGroup& group() const { return group_; }
  const Cyclotomic& value(const Coords& g) const;
  void set_value(const Coords& g, Cyclotomic v);
  const std::vector<Cyclotomic>& values() const { return values_; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator-() const;
  ClassFunction pointwise_mul(const ClassFunction& o) const;
  ClassFunction scaled(const Cyclotomic& c) const;

  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<Cyclotomic> values_;  // indexed by element index
};

// Ring operations on virtual characters.
RepRingElement rep_tensor(const RepRingElement& x, const RepRingElement& y);
RepRingElement rep_dual(const RepRingElement& x);

// Coefficient of the trivial irrep.
Integer trace_G(const RepRingElement& x);
// trace_G(x tensor y); equals 1 on (pi, dual pi) pairs, 0 otherwise.
Integer pairing(const RepRingElement& x, const RepRingElement& y);

// Character map and its inverse (by orthogonality); trace of a class
// function is the average over the group.
ClassFunction ch(const RepRingElement& x);
Cyclotomic trace_classfun(const ClassFunction& f);
std::map<Coords, Cyclotomic> ch_inverse(const ClassFunction& f);

// Induction along an embedding: the sum of ambient irreps restricting to
// the given one; dimension multiplies by the index.
RepRingElement induce(const SubgroupEmbedding& h, const RepRingElement& x);
// Restriction along an embedding: labels composed with the images.
RepRingElement restrict_rep(const SubgroupEmbedding& h, const RepRingElement& x);

// H-invariants of x, relabeled over G/H.
RepRingElement invariants(const RepRingElement& x, const SubgroupEmbedding& h,
                          const QuotientPresentation& q);
// av(f)(Hg) = (1/|H|) sum_{h in H} f(h + g), as a function on G/H.
ClassFunction average_H(const ClassFunction& f, const SubgroupEmbedding& h,
                        const QuotientPresentation& q);

// Q(f)(g) = conj(f(-g)); involutive, fixes every character.
ClassFunction real_structure(const ClassFunction& f);

// Matrix of pairing(pi_i, pi_j) over the canonical irrep enumeration.
IntMatrix dual_pairing_matrix(const FiniteAbelianGroup& g);

}  // namespace orbikit

#endif
