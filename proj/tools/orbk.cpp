#include <algorithm>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbikit/json_io.hpp"
#include "orbikit/localize.hpp"

using namespace orbikit;

namespace {

struct OutputOptions {
  std::string format = "json";
  bool approx = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON text or a path to a file holding it.
Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return parse_json(arg);
  return parse_json(read_file(arg));
}

FiniteAbelianGroup group_from_orders(const std::string& orders) {
  return FiniteAbelianGroup(coords_from_key(orders));
}

// Labeled floating-point rendering next to every exact cyclotomic.
void add_approx(Json& j) {
  if (j.is_object()) {
    if (j.contains("conductor") && j.contains("coeffs")) {
      const std::complex<double> z = cyclotomic_from_json(j).to_complex();
      j["approx"] = Json{{"re", z.real()}, {"im", z.imag()}, {"inexact", true}};
      return;
    }
    for (auto& [key, value] : j.items()) add_approx(value);
  } else if (j.is_array()) {
    for (auto& value : j) add_approx(value);
  }
}

void append_row(std::string& out, const std::vector<std::string>& cells) {
  out += "|";
  for (const auto& c : cells) {
    out += " ";
    out += c;
    out += " |";
  }
  out += "\n";
}

std::string render_table(const Json& j) {
  std::string out;
  if (j.is_object() && j.contains("matrix")) {
    for (const auto& row : j["matrix"]["entries"]) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(v.dump());
      append_row(out, cells);
    }
    for (const char* key : {"det", "snf", "unimodular", "dual_basis_ok"})
      if (j.contains(key)) out += std::string(key) + ": " + j[key].dump() + "\n";
    return out;
  }
  if (j.is_object() && (j.contains("coeffs") || j.contains("values"))) {
    const bool sparse = j.contains("coeffs");
    append_row(out, {sparse ? "irrep" : "element", sparse ? "coefficient" : "value"});
    append_row(out, {"---", "---"});
    for (const auto& [key, value] : j[sparse ? "coeffs" : "values"].items())
      append_row(out, {key, value.dump()});
    return out;
  }
  if (j.is_object()) {
    append_row(out, {"field", "value"});
    append_row(out, {"---", "---"});
    for (const auto& [key, value] : j.items()) append_row(out, {key, value.dump()});
    return out;
  }
  return j.dump() + "\n";
}

void emit(Json j, const OutputOptions& opt) {
  if (opt.approx) add_approx(j);
  if (opt.format == "table")
    std::cout << render_table(j);
  else
    std::cout << j.dump(2) << "\n";
}

Json torus_report(const TorusClassFunction& u) {
  Json coeffs = Json::object();
  for (const auto& [pi, c] : ch_inverse(u.representative()))
    coeffs[coords_key(pi)] = cyclotomic_to_json(c);
  return Json{{"class", torus_to_json(u)}, {"coefficients_mod_z", coeffs}};
}

std::vector<EquivLineBundle> parse_basis(long k, const std::string& arg) {
  if (arg == "default") return mv_generators(k);
  const Json b = load_json_arg(arg);
  if (!b.is_array()) throw input_error("basis must be an array of [l,h] pairs");
  std::vector<EquivLineBundle> out;
  for (const auto& e : b) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw input_error("basis entries must be [l,h] integer pairs");
    out.push_back({k, e[0].get<long>(), e[1].get<long>()});
  }
  return out;
}

Json matrix_report(const std::vector<EquivLineBundle>& basis, bool with_dual) {
  const NondegeneracyReport r = nondegeneracy_check(basis);
  Json snf = Json::array();
  for (const auto& d : r.invariant_factors) snf.push_back(integer_to_json(d));
  Json out{{"matrix", intmatrix_to_json(r.matrix)},
           {"det", integer_to_json(r.det)},
           {"snf", snf},
           {"unimodular", r.unimodular}};
  if (with_dual) out["dual_basis_ok"] = r.dual_basis_ok;
  return out;
}

// ---------------------------------------------------------------------------
// Golden fixtures.  Every expected value below is a frozen constant checked
// against an independent derivation; ids name the computed content.

struct Fixture {
  const char* id;
  Json (*compute)();
  const char* expected;
};

Json fx_pairing_matrix() { return intmatrix_to_json(pairing_matrix(mv_generators(2))); }
Json fx_pairing_det() {
  return integer_to_json(det_bareiss(pairing_matrix(mv_generators(2))));
}
Json fx_pairing_snf() {
  Json out = Json::array();
  for (const auto& d : nondegeneracy_check(mv_generators(2)).invariant_factors)
    out.push_back(integer_to_json(d));
  return out;
}
Json fx_chart_basis() {
  Json out = Json::array();
  for (const auto& lb : mv_generators(2)) out.push_back(Json::array({lb.l, lb.h}));
  return out;
}
Json fx_duality_pairing() {
  FiniteAbelianGroup z3({3});
  return Json{{"dual_pair", integer_to_json(pairing(RepRingElement::irrep(z3, {1}),
                                                    RepRingElement::irrep(z3, {2})))},
              {"self_pair", integer_to_json(pairing(RepRingElement::irrep(z3, {1}),
                                                    RepRingElement::irrep(z3, {1})))}};
}
Json fx_section_count() { return rep_to_json(h0({2, 0, 0})); }
Json fx_first_cohomology() { return rep_to_json(h1({2, 0, -2})); }
Json fx_index_values() {
  return Json{{"degree_zero", rep_to_json(dolbeault_index({2, 0, 0}))},
              {"degree_minus_two", rep_to_json(dolbeault_index({2, 0, -2}))}};
}
Json fx_intersection_entries() {
  return Json{{"unit_self", integer_to_json(intersection({2, 0, 0}, {2, 0, 0}))},
              {"shift_self", integer_to_json(intersection({2, 0, -2}, {2, 0, -2}))},
              {"unit_chart", integer_to_json(intersection({2, 0, 0}, {2, -1, 0}))}};
}
Json fx_delta_coords() {
  Json out = Json::array();
  for (const auto& c : delta_class(2).coords) out.push_back(integer_to_json(c));
  return out;
}

const Fixture kFixtures[] = {
    {"order2-pairing-matrix", fx_pairing_matrix,
     R"({"cols":4,"entries":[[1,0,0,0],[0,-1,-1,-1],[0,-1,0,-1],[0,-1,-1,0]],"rows":4})"},
    {"order2-pairing-det", fx_pairing_det, "-1"},
    {"order2-pairing-snf", fx_pairing_snf, "[1,1,1,1]"},
    {"order2-chart-basis", fx_chart_basis, "[[0,0],[0,-2],[-1,0],[0,-1]]"},
    {"order3-duality-pairing", fx_duality_pairing, R"({"dual_pair":1,"self_pair":0})"},
    {"order2-section-count", fx_section_count,
     R"({"coeffs":{"0":1},"group":{"orders":[2]}})"},
    {"order2-first-cohomology", fx_first_cohomology,
     R"({"coeffs":{"1":1},"group":{"orders":[2]}})"},
    {"order2-index-values", fx_index_values,
     R"({"degree_minus_two":{"coeffs":{"1":-1},"group":{"orders":[2]}},)"
     R"("degree_zero":{"coeffs":{"0":1},"group":{"orders":[2]}}})"},
    {"order2-intersection-entries", fx_intersection_entries,
     R"({"shift_self":-1,"unit_chart":0,"unit_self":1})"},
    {"order2-delta-coords", fx_delta_coords, "[-1,1,0,0]"},
};

int run_fixtures(const std::string& dir) {
  struct Job {
    std::string id;
    Json expected;
  };
  std::vector<Job> jobs;
  if (dir.empty()) {
    for (const auto& f : kFixtures) jobs.push_back({f.id, parse_json(f.expected)});
  } else {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    if (ec) throw input_error("cannot read fixture directory " + dir);
    if (files.empty()) throw input_error("no fixtures found in " + dir);
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      const Json j = parse_json(read_file(path.string()));
      if (!j.is_object() || !j.contains("id") || !j.contains("expect"))
        throw input_error("fixture " + path.string() + " needs \"id\" and \"expect\"");
      jobs.push_back({j["id"].get<std::string>(), j["expect"]});
    }
  }
  int failures = 0;
  for (const auto& job : jobs) {
    const Fixture* fixture = nullptr;
    for (const auto& f : kFixtures)
      if (job.id == f.id) fixture = &f;
    if (fixture == nullptr) throw input_error("unknown fixture id: " + job.id);
    const Json got = fixture->compute();
    if (got == job.expected) {
      std::cout << "ok " << job.id << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << job.id << "\n";
      std::cout << "  expected: " << job.expected.dump() << "\n";
      std::cout << "  actual:   " << got.dump() << "\n";
    }
  }
  std::cout << (failures == 0 ? "all fixtures passed" : "fixtures failed") << "\n";
  return failures == 0 ? 0 : 1;
}

void apply_conductor_cap_env() {
  const char* cap = std::getenv("ORBK_MAX_CONDUCTOR");
  if (cap == nullptr) return;
  char* end = nullptr;
  const long value = std::strtol(cap, &end, 10);
  if (end == cap || *end != '\0' || value < 1)
    throw input_error("ORBK_MAX_CONDUCTOR must be a positive integer");
  set_max_conductor(value);
}

// Config file values become flag tokens injected after the subcommand
// names; explicitly passed flags win because every option takes the last
// occurrence.
std::vector<std::string> with_config(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw input_error("--config needs a file argument");
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (config_path.empty()) return args;
  const Json cfg = parse_json(read_file(config_path));
  if (!cfg.is_object()) throw input_error("config file must hold a JSON object");
  std::size_t pos = 0;
  while (pos < args.size() && !args[pos].empty() && args[pos][0] != '-') ++pos;
  std::vector<std::string> inject;
  for (const auto& [key, value] : cfg.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) inject.push_back("--" + key);
    } else if (value.is_string()) {
      inject.push_back("--" + key);
      inject.push_back(value.get<std::string>());
    } else {
      inject.push_back("--" + key);
      inject.push_back(value.dump());
    }
  }
  args.insert(args.begin() + static_cast<long>(pos), inject.begin(), inject.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-theoretic invariants of finite abelian quotients"};
  app.set_help_flag("--help", "print this help message and exit");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.fallthrough();
  app.require_subcommand(1);

  OutputOptions out;
  app.add_option("--format", out.format, "output rendering")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--approx", out.approx, "add labeled floating-point renderings");

  std::string orders, rep_arg, x_arg, y_arg, sub_arg, fun_arg, h_elt, g_elt;
  std::string input_arg, basis_arg = "default", fixtures_dir;
  long k = 1, lb_l = 0, lb_h = 0;
  int status = 0;

  auto* trace = app.add_subcommand("trace", "trivial-irrep coefficient of a virtual character");
  trace->add_option("--orders", orders)->required();
  trace->add_option("--rep", rep_arg)->required();
  trace->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    emit(integer_to_json(trace_G(rep_from_json(load_json_arg(rep_arg), g))), out);
  });

  auto* pair = app.add_subcommand("pairing", "trace of the tensor product of two virtual characters");
  pair->add_option("--orders", orders)->required();
  pair->add_option("--x", x_arg)->required();
  pair->add_option("--y", y_arg)->required();
  pair->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    emit(integer_to_json(pairing(rep_from_json(load_json_arg(x_arg), g),
                                 rep_from_json(load_json_arg(y_arg), g))),
         out);
  });

  auto* chc = app.add_subcommand("ch", "character of a virtual representation");
  chc->add_option("--orders", orders)->required();
  chc->add_option("--rep", rep_arg)->required();
  chc->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    emit(classfun_to_json(ch(rep_from_json(load_json_arg(rep_arg), g))), out);
  });

  auto* ind = app.add_subcommand("induce", "induced virtual character along a subgroup embedding");
  ind->add_option("--orders", orders, "ambient group")->required();
  ind->add_option("--sub", sub_arg, "subgroup embedding JSON")->required();
  ind->add_option("--rep", rep_arg, "virtual character over the subgroup")->required();
  ind->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    const SubgroupEmbedding h = subgroup_from_json(load_json_arg(sub_arg), g);
    emit(rep_to_json(induce(h, rep_from_json(load_json_arg(rep_arg), h.sub))), out);
  });

  auto* res = app.add_subcommand("restrict", "restricted virtual character");
  res->add_option("--orders", orders)->required();
  res->add_option("--sub", sub_arg)->required();
  res->add_option("--rep", rep_arg)->required();
  res->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    const SubgroupEmbedding h = subgroup_from_json(load_json_arg(sub_arg), g);
    emit(rep_to_json(restrict_rep(h, rep_from_json(load_json_arg(rep_arg), g))), out);
  });

  auto* inv = app.add_subcommand("invariants", "subgroup invariants relabeled over the quotient");
  inv->add_option("--orders", orders)->required();
  inv->add_option("--sub", sub_arg)->required();
  inv->add_option("--rep", rep_arg)->required();
  inv->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    const SubgroupEmbedding h = subgroup_from_json(load_json_arg(sub_arg), g);
    const QuotientPresentation q(g, h);
    emit(rep_to_json(invariants(rep_from_json(load_json_arg(rep_arg), g), h, q)), out);
  });

  auto* avg = app.add_subcommand("average", "subgroup average of a class function");
  avg->add_option("--orders", orders)->required();
  avg->add_option("--sub", sub_arg)->required();
  avg->add_option("--classfun", fun_arg)->required();
  avg->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    const SubgroupEmbedding h = subgroup_from_json(load_json_arg(sub_arg), g);
    const QuotientPresentation q(g, h);
    emit(classfun_to_json(average_H(classfun_from_json(load_json_arg(fun_arg), g), h, q)),
         out);
  });

  auto* hatk = app.add_subcommand("hatk-point", "class of a form modulo the character lattice");
  hatk->add_option("--orders", orders)->required();
  hatk->add_option("--classfun", fun_arg)->required();
  hatk->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    emit(torus_report(a_map(classfun_from_json(load_json_arg(fun_arg), g))), out);
  });

  auto* loc = app.add_subcommand("localize", "sector survival and separating witness");
  loc->add_option("--orders", orders)->required();
  loc->add_option("--h", h_elt, "sector element")->required();
  loc->add_option("--g", g_elt, "localization element")->required();
  loc->callback([&] {
    const FiniteAbelianGroup g = group_from_orders(orders);
    const Coords hc = coords_from_key(h_elt);
    const Coords gc = coords_from_key(g_elt);
    Json result{{"survives", survives(g, hc, gc)}};
    const auto witness = separating_witness(g, hc, gc);
    result["witness"] = witness ? rep_to_json(*witness) : Json(nullptr);
    emit(result, out);
  });

  auto* cp1 = app.add_subcommand("cp1", "equivariant line bundles on the projective line");
  cp1->require_subcommand(1);
  auto add_lbh = [&](CLI::App* cmd, bool with_lh) {
    cmd->add_option("--k", k, "cyclic order")->required();
    if (with_lh) {
      cmd->add_option("--l", lb_l)->required();
      cmd->add_option("--h", lb_h)->required();
    }
  };
  auto* c_idx = cp1->add_subcommand("index", "index virtual character of a line bundle");
  add_lbh(c_idx, true);
  c_idx->callback([&] { emit(rep_to_json(dolbeault_index({k, lb_l, lb_h})), out); });
  auto* c_h0 = cp1->add_subcommand("h0", "global sections");
  add_lbh(c_h0, true);
  c_h0->callback([&] { emit(rep_to_json(h0({k, lb_l, lb_h})), out); });
  auto* c_h1 = cp1->add_subcommand("h1", "first cohomology");
  add_lbh(c_h1, true);
  c_h1->callback([&] { emit(rep_to_json(h1({k, lb_l, lb_h})), out); });
  auto* c_pm = cp1->add_subcommand("pairing-matrix", "intersection matrix of a basis");
  add_lbh(c_pm, false);
  c_pm->add_option("--basis", basis_arg, "\"default\" or JSON [[l,h],...]");
  c_pm->callback([&] { emit(matrix_report(parse_basis(k, basis_arg), false), out); });
  auto* c_nd = cp1->add_subcommand("nondeg", "unimodularity report for the chart basis");
  add_lbh(c_nd, false);
  c_nd->add_option("--basis", basis_arg, "\"default\" or JSON [[l,h],...]");
  c_nd->callback([&] { emit(matrix_report(parse_basis(k, basis_arg), true), out); });

  auto* mt = app.add_subcommand("mtorus", "mapping-torus class from holonomy data");
  mt->add_option("--input", input_arg, "holonomy JSON (inline or file)")->required();
  mt->callback([&] {
    emit(torus_report(mapping_torus_class(holonomy_from_json(load_json_arg(input_arg)))),
         out);
  });

  auto* repro = app.add_subcommand("reproduce-paper", "recompute the published golden values");
  repro->add_option("--fixtures", fixtures_dir, "directory of {id, expect} JSON files");
  repro->callback([&] { status = run_fixtures(fixtures_dir); });

  try {
    apply_conductor_cap_env();
    std::vector<std::string> args = with_config({argv + 1, argv + argc});
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
