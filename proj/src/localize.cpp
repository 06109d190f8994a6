#include "orbikit/localize.hpp"

#include "orbikit/errors.hpp"

namespace orbikit {

SectorModule full_sector_module(const FiniteAbelianGroup& g) {
  SectorModule m{g, {}};
  long rank = 0;
  for (const auto& h : g.elements()) m.sectors.push_back({h, rank++});
  return m;
}

bool survives(const FiniteAbelianGroup& g, const Coords& h, const Coords& elt) {
  const Coords rh = g.reduce(h);
  const Coords target = g.reduce(elt);
  Coords x = g.zero();
  const long ord = g.element_order(rh);
  for (long k = 0; k < ord; ++k) {
    if (x == target) return true;
    x = g.add(x, rh);
  }
  return false;
}

std::optional<RepRingElement> separating_witness(const FiniteAbelianGroup& g, const Coords& h,
                                                 const Coords& elt) {
  if (survives(g, h, elt)) return std::nullopt;
  const Coords rh = g.reduce(h);
  const long index = g.order() / g.element_order(rh);
  RepRingElement x = RepRingElement::trivial(g).scaled(Integer(index));
  for (const auto& pi : all_irreps(g)) {
    // pi is trivial on <h> iff it is trivial at the generator
    if (character_turn(g, pi, rh) == 0) x.add_term(pi, Integer(-1));
  }
  return x;
}

SectorModule localize_module(const SectorModule& m, const Coords& elt) {
  SectorModule out{m.group, {}};
  for (const auto& s : m.sectors)
    if (survives(m.group, s.h, elt)) out.sectors.push_back(s);
  return out;
}

}  // namespace orbikit
