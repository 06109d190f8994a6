#ifndef ORBIKIT_HATK_HPP
#define ORBIKIT_HATK_HPP

#include <variant>
#include <vector>

#include "orbikit/grouprep.hpp"

namespace orbikit {

// A class function considered modulo the character lattice ch(R(G)),
// optionally enlarged by extra lattice generators (used by the mapping
// torus, where log-branch shifts enlarge the quotient).  Equality always
// goes through the difference test, never representative comparison.
class TorusClassFunction {
 public:
  explicit TorusClassFunction(ClassFunction rep, std::vector<ClassFunction> extra = {});
  static TorusClassFunction zero(const FiniteAbelianGroup& g);

  const FiniteAbelianGroup& group() const { return rep_.group(); }
  const ClassFunction& representative() const { return rep_; }
  const std::vector<ClassFunction>& extra_lattice() const { return extra_; }

  TorusClassFunction operator+(const TorusClassFunction& o) const;  // lattices merge
  TorusClassFunction operator-(const TorusClassFunction& o) const;
  TorusClassFunction operator-() const;

 private:
  ClassFunction rep_;
  std::vector<ClassFunction> extra_;
};

// Class of f modulo ch(R(G)) with the canonical representative: rational
// character coefficients are reduced into [0,1) by integer shifts,
// non-rational ones are kept as-is.
TorusClassFunction a_map(const ClassFunction& f);

// True iff u - v lies in the lattice spanned by the characters and the
// union of both extra lattices (integer coefficients).
bool torus_equal(const TorusClassFunction& u, const TorusClassFunction& v);
bool torus_is_zero(const TorusClassFunction& u);

// Average of a representative; an element of C mod Z.
Cyclotomic torus_trace(const TorusClassFunction& u);
// Equality in C mod Z.
bool torus_scalar_equal(const Cyclotomic& a, const Cyclotomic& b);

// True iff some lattice shift of the representative is fixed by the real
// structure, i.e. the class lies in R(G) tensor R/Z.
bool is_real(const TorusClassFunction& u);

// Degree 0: a virtual character.  Degree 1: a torus class function.
class HatKPoint {
 public:
  static HatKPoint degree0(RepRingElement x) { return HatKPoint(0, std::move(x)); }
  static HatKPoint degree1(TorusClassFunction u) { return HatKPoint(1, std::move(u)); }

  int degree() const { return degree_; }
  const RepRingElement& even() const { return std::get<RepRingElement>(value_); }
  const TorusClassFunction& odd() const { return std::get<TorusClassFunction>(value_); }

  HatKPoint operator+(const HatKPoint& o) const;
  bool equal(const HatKPoint& o) const;

 private:
  HatKPoint(int degree, std::variant<RepRingElement, TorusClassFunction> v)
      : degree_(degree), value_(std::move(v)) {}
  int degree_;
  std::variant<RepRingElement, TorusClassFunction> value_;
};

}  // namespace orbikit

#endif
