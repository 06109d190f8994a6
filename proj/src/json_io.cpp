#include "orbikit/json_io.hpp"

#include <sstream>

#include "orbikit/errors.hpp"

namespace orbikit {

namespace {

long long_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
  return j.get<long>();
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw input_error(std::string("missing field \"") + key + "\"");
  return *it;
}

FiniteAbelianGroup group_or_fallback(const Json& j,
                                     const std::optional<FiniteAbelianGroup>& fallback) {
  if (j.contains("group")) return group_from_json(j.at("group"));
  if (fallback) return *fallback;
  throw input_error("missing field \"group\" and no ambient group given");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_error(std::string("bad JSON: ") + e.what());
  }
}

Json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<long>(n.get_si()));
  return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw input_error("malformed integer literal: " + j.get<std::string>());
    }
  }
  throw input_error("expected an integer");
}

Json rational_to_json(const Rational& q) { return Json(rat_to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float())
    throw domain_error("floating-point value where an exact rational is required");
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw input_error("expected a rational \"p/q\" string");
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < c.coeffs().size(); ++i)
    if (c.coeffs()[i] != 0) coeffs[std::to_string(i)] = rat_to_string(c.coeffs()[i]);
  return Json{{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (j.is_string()) return Cyclotomic(rat_from_string(j.get<std::string>()));
  const long conductor = long_from_json(field(j, "conductor"), "conductor");
  std::vector<Rational> coeffs;
  for (const auto& [key, value] : field(j, "coeffs").items()) {
    std::size_t exp;
    try {
      exp = std::stoul(key);
    } catch (const std::exception&) {
      throw input_error("malformed exponent key: " + key);
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, Rational(0));
    coeffs[exp] = rational_from_json(value);
  }
  return Cyclotomic::from_coeffs(conductor, std::move(coeffs));
}

Json intmatrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix intmatrix_from_json(const Json& j) {
  const long rows = long_from_json(field(j, "rows"), "rows");
  const long cols = long_from_json(field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) throw input_error("negative matrix dimensions");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows))
    throw input_error("entries shape does not match rows");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
      throw input_error("entries shape does not match cols");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = integer_from_json(row[c]);
  }
  return m;
}

Json group_to_json(const FiniteAbelianGroup& g) { return Json{{"orders", g.orders()}}; }

FiniteAbelianGroup group_from_json(const Json& j) {
  const Json& orders = field(j, "orders");
  if (!orders.is_array()) throw input_error("orders must be an array");
  std::vector<long> o;
  for (const auto& n : orders) o.push_back(long_from_json(n, "order"));
  return FiniteAbelianGroup(std::move(o));
}

std::string coords_key(const Coords& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << ',';
    out << c[i];
  }
  return out.str();
}

Coords coords_from_key(const std::string& key) {
  Coords out;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      out.push_back(std::stol(part));
    } catch (const std::exception&) {
      throw input_error("malformed coordinate tuple: " + key);
    }
  }
  if (out.empty()) throw input_error("empty coordinate tuple");
  return out;
}

Json rep_to_json(const RepRingElement& x) {
  Json coeffs = Json::object();
  for (const auto& [l, n] : x.coeffs()) coeffs[coords_key(l)] = integer_to_json(n);
  return Json{{"group", group_to_json(x.group())}, {"coeffs", std::move(coeffs)}};
}

RepRingElement rep_from_json(const Json& j,
                             const std::optional<FiniteAbelianGroup>& fallback) {
  RepRingElement x(group_or_fallback(j, fallback));
  for (const auto& [key, value] : field(j, "coeffs").items())
    x.add_term(coords_from_key(key), integer_from_json(value));
  return x;
}

Json classfun_to_json(const ClassFunction& f) {
  Json values = Json::object();
  for (const auto& g : f.group().elements()) {
    const Cyclotomic& v = f.value(g);
    if (!v.is_zero()) values[coords_key(g)] = cyclotomic_to_json(v);
  }
  return Json{{"group", group_to_json(f.group())}, {"values", std::move(values)}};
}

ClassFunction classfun_from_json(const Json& j,
                                 const std::optional<FiniteAbelianGroup>& fallback) {
  ClassFunction f(group_or_fallback(j, fallback));
  for (const auto& [key, value] : field(j, "values").items())
    f.set_value(coords_from_key(key), cyclotomic_from_json(value));
  return f;
}

Json torus_to_json(const TorusClassFunction& u) {
  Json j = classfun_to_json(u.representative());
  j["modulo"] = "character-lattice";
  if (!u.extra_lattice().empty()) {
    Json extra = Json::array();
    for (const auto& e : u.extra_lattice()) extra.push_back(classfun_to_json(e));
    j["extra_lattice"] = std::move(extra);
  }
  return j;
}

TorusClassFunction torus_from_json(const Json& j,
                                   const std::optional<FiniteAbelianGroup>& fallback) {
  ClassFunction rep = classfun_from_json(j, fallback);
  std::vector<ClassFunction> extra;
  if (j.contains("extra_lattice"))
    for (const auto& e : j.at("extra_lattice"))
      extra.push_back(classfun_from_json(e, rep.group()));
  return TorusClassFunction(std::move(rep), std::move(extra));
}

SubgroupEmbedding subgroup_from_json(const Json& j,
                                     const std::optional<FiniteAbelianGroup>& fallback) {
  FiniteAbelianGroup ambient = [&] {
    if (j.contains("ambient")) return group_from_json(j.at("ambient"));
    if (fallback) return *fallback;
    throw input_error("missing field \"ambient\" and no ambient group given");
  }();
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw input_error("generators must be an array");
  std::vector<Coords> images;
  for (const auto& gen : gens) {
    if (!gen.is_array()) throw input_error("each generator must be a coordinate array");
    Coords c;
    for (const auto& v : gen) c.push_back(long_from_json(v, "generator coordinate"));
    images.push_back(std::move(c));
  }
  return embedding_from_images(ambient, images);
}

Json subgroup_to_json(const SubgroupEmbedding& e) {
  Json gens = Json::array();
  for (const auto& im : e.images) gens.push_back(im);
  return Json{{"ambient", group_to_json(e.ambient)},
              {"orders", e.sub.orders()},
              {"generators", std::move(gens)}};
}

Json holonomy_to_json(const HolonomyData& d) {
  Json sectors = Json::object();
  for (const auto& [g, records] : d.sectors) {
    Json list = Json::array();
    for (const auto& r : records) {
      Json plus = Json::array(), minus = Json::array();
      for (const auto& t : r.plus_turns) plus.push_back(rat_to_string(t));
      for (const auto& t : r.minus_turns) minus.push_back(rat_to_string(t));
      list.push_back(Json{{"theta", rat_to_string(r.theta_turn)},
                          {"plus", std::move(plus)},
                          {"minus", std::move(minus)}});
    }
    sectors[coords_key(g)] = std::move(list);
  }
  return Json{{"group", group_to_json(d.group)}, {"sectors", std::move(sectors)}};
}

HolonomyData holonomy_from_json(const Json& j) {
  HolonomyData d{group_from_json(field(j, "group")), {}};
  for (const auto& [key, list] : field(j, "sectors").items()) {
    const Coords g = d.group.reduce(coords_from_key(key));
    if (!list.is_array()) throw input_error("sector records must form an array");
    std::vector<HolonomyData::SectorRecord> records;
    for (const auto& rec : list) {
      HolonomyData::SectorRecord r;
      r.theta_turn = rational_from_json(field(rec, "theta"));
      for (const auto& t : field(rec, "plus")) r.plus_turns.push_back(rational_from_json(t));
      for (const auto& t : field(rec, "minus")) r.minus_turns.push_back(rational_from_json(t));
      records.push_back(std::move(r));
    }
    auto& dst = d.sectors[g];
    dst.insert(dst.end(), records.begin(), records.end());
  }
  return d;
}

}  // namespace orbikit
