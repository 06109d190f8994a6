#include "orbikit/mtorus.hpp"

#include <algorithm>

#include "orbikit/errors.hpp"

namespace orbikit {

namespace {

ClassFunction delta_times_theta(const FiniteAbelianGroup& g, const Coords& at,
                                const Cyclotomic& theta) {
  ClassFunction d(g);
  d.set_value(at, theta);
  return d;
}

}  // namespace

HolonomyData holonomy_sum(const HolonomyData& a, const HolonomyData& b) {
  if (a.group != b.group) throw input_error("holonomy data over different groups");
  HolonomyData out = a;
  for (const auto& [g, records] : b.sectors) {
    auto& dst = out.sectors[g];
    dst.insert(dst.end(), records.begin(), records.end());
  }
  return out;
}

HolonomyData holonomy_swapped(const HolonomyData& d) {
  HolonomyData out = d;
  for (auto& [g, records] : out.sectors)
    for (auto& r : records) std::swap(r.plus_turns, r.minus_turns);
  return out;
}

TorusClassFunction mapping_torus_class(const HolonomyData& d) {
  ClassFunction rep(d.group);
  std::vector<ClassFunction> extra;
  for (const auto& [g_raw, records] : d.sectors) {
    const Coords g = d.group.reduce(g_raw);
    Cyclotomic value = rep.value(g);
    for (const auto& r : records) {
      const Cyclotomic theta = Cyclotomic::from_turn(r.theta_turn);
      Rational net(0);
      for (const auto& t : r.plus_turns) net += t;
      for (const auto& t : r.minus_turns) net -= t;
      net.canonicalize();
      value += theta * Cyclotomic(net);
      // one branch generator per occurring (g, theta) sector
      ClassFunction gen = delta_times_theta(d.group, g, theta);
      if (std::find(extra.begin(), extra.end(), gen) == extra.end())
        extra.push_back(std::move(gen));
    }
    rep.set_value(g, std::move(value));
  }
  return TorusClassFunction(std::move(rep), std::move(extra));
}

TorusClassFunction mapping_torus_from_automorphism(const FiniteAbelianGroup& g,
                                                   const std::vector<WeightLine>& v_plus,
                                                   const std::vector<WeightLine>& v_minus) {
  HolonomyData data{g, {}};
  auto feed = [&](const std::vector<WeightLine>& lines, bool plus) {
    for (const auto& line : lines) {
      for (const auto& elt : g.elements()) {
        const Rational theta = character_turn(g, line.g_weight, elt);
        auto& records = data.sectors[elt];
        auto it = std::find_if(records.begin(), records.end(),
                               [&](const HolonomyData::SectorRecord& r) {
                                 return r.theta_turn == theta;
                               });
        if (it == records.end()) {
          records.push_back({theta, {}, {}});
          it = std::prev(records.end());
        }
        (plus ? it->plus_turns : it->minus_turns).push_back(line.phi_turn);
      }
    }
  };
  feed(v_plus, true);
  feed(v_minus, false);
  return mapping_torus_class(data);
}

}  // namespace orbikit
