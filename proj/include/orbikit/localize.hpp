#ifndef ORBIKIT_LOCALIZE_HPP
#define ORBIKIT_LOCALIZE_HPP

#include <optional>
#include <vector>

#include "orbikit/grouprep.hpp"

namespace orbikit {

// Loop-space sectors of a point quotient: one per group element, each
// carrying an opaque rank label standing in for the forms on that sector.
struct SectorModule {
  struct Sector {
    Coords h;
    long rank;
  };
  FiniteAbelianGroup group;
  std::vector<Sector> sectors;
};

// One sector per element, rank labels distinct (the element index).
SectorModule full_sector_module(const FiniteAbelianGroup& g);

// True iff g lies in the cyclic subgroup generated by h; exactly the
// sectors with this property survive localization at the vanishing ideal
// of g.
bool survives(const FiniteAbelianGroup& g, const Coords& h, const Coords& elt);

// If survives(h, elt) fails, a virtual character x with ch(x) = 0 on all
// of <h> and ch(x)(elt) != 0, namely [G:<h>] * trivial minus the sum of
// the <h>-trivial irreps; empty when elt is in <h> (no witness exists).
std::optional<RepRingElement> separating_witness(const FiniteAbelianGroup& g, const Coords& h,
                                                 const Coords& elt);

// Keeps exactly the surviving sectors, ranks untouched.
SectorModule localize_module(const SectorModule& m, const Coords& elt);

}  // namespace orbikit

#endif
