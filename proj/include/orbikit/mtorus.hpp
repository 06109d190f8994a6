#ifndef ORBIKIT_MTORUS_HPP
#define ORBIKIT_MTORUS_HPP

#include <map>
#include <vector>

#include "orbikit/hatk.hpp"

namespace orbikit {

// Eigen-sector holonomy bookkeeping for the suspension of an
// automorphism: per group element g, a record per occurring eigenvalue
// theta of g (a rational turn), listing the determinant phases of the
// holonomies on the positive and negative eigenbundles as rational turns.
struct HolonomyData {
  struct SectorRecord {
    Rational theta_turn;
    std::vector<Rational> plus_turns;
    std::vector<Rational> minus_turns;
  };
  FiniteAbelianGroup group;
  std::map<Coords, std::vector<SectorRecord>> sectors;  // absent g contributes nothing
};

// Concatenates sector lists pointwise.
HolonomyData holonomy_sum(const HolonomyData& a, const HolonomyData& b);
// Swaps plus and minus lists everywhere.
HolonomyData holonomy_swapped(const HolonomyData& d);

// Phi(g) = sum over records theta * (sum of plus turns - sum of minus
// turns), with theta the exact root of unity for the rational turn.  The
// result lives modulo the character lattice enlarged by one generator
// delta_g * theta per occurring (g, theta) sector, which absorbs the
// integer ambiguity of each turn (log branch).
TorusClassFunction mapping_torus_class(const HolonomyData& d);

// A φ-eigenline inside a G-isotypic summand: the G-weight labels and the
// rational turn of the φ-eigenvalue on that line.
struct WeightLine {
  Coords g_weight;
  Rational phi_turn;
};

// Assembles HolonomyData for (V+, V-) given in a simultaneous eigenbasis
// (theta at g is the character value of the line's weight) and delegates
// to mapping_torus_class.
TorusClassFunction mapping_torus_from_automorphism(const FiniteAbelianGroup& g,
                                                   const std::vector<WeightLine>& v_plus,
                                                   const std::vector<WeightLine>& v_minus);

}  // namespace orbikit

#endif
