#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "systolic/helly.hpp"
#include "systolic/io.hpp"

using nlohmann::json;
using namespace systolic;

namespace {

// Exit codes: 0 verified/success, 1 property violation or not found,
// 2 invalid input.
constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;

struct Report {
  json body = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command) { body["command"] = command; }
  void echo_instance(const GeneratedInstance& inst) {
    body["instance_hash"] = instance_hash(inst);
  }
  int finish(int code) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    body["timing_ms"] = ms;
    body["exit"] = code;
    std::cout << body.dump() << "\n";
    return code;
  }
};

std::uint64_t global_seed(std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("SYSTOLIC_KIT_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

std::vector<VertexId> parse_ids(const std::string& csv) {
  std::vector<VertexId> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Subcomplex named_member(const GeneratedInstance& inst, const std::string& name) {
  auto it = inst.subcomplexes.find(name);
  if (it == inst.subcomplexes.end()) throw invalid_input("no subcomplex named " + name);
  return Subcomplex(inst.complex, it->second);
}

json witness_json(const std::optional<HellyWitness>& w) {
  if (!w) return nullptr;
  json j;
  j["simplex"] = w->simplex;
  j["dimension"] = dim(w->simplex);
  j["touched"] = w->touched;
  return j;
}

int run_check(const std::string& path, int k, long long budget) {
  Report rep("check");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  const auto& X = inst.complex;
  rep.body["k"] = k;
  rep.body["connected"] = X.is_connected();
  rep.body["flag"] = is_flag(X);
  rep.body["k_large"] = is_k_large(X, k);
  rep.body["locally_k_large"] = is_locally_k_large(X, k);
  Tri sc = X.is_connected() ? is_simply_connected(X, budget) : Tri::False;
  rep.body["simply_connected"] = to_string(sc);
  Tri sys = is_k_systolic(X, k, budget);
  rep.body["k_systolic"] = to_string(sys);
  std::cerr << k << "-systolic: " << to_string(sys) << "\n";
  return rep.finish(sys == Tri::True ? kOk : kViolation);
}

int run_dist(const std::string& path, VertexId from, VertexId to) {
  Report rep("dist");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  IntervalDag dag = interval(inst.complex, from, to);
  rep.body["from"] = from;
  rep.body["to"] = to;
  rep.body["distance"] = dag.length();
  rep.body["geodesic_count"] = dag.geodesic_count();
  auto sample = dag.geodesics(1);
  rep.body["lex_min_geodesic"] = sample.front();
  return rep.finish(kOk);
}

int run_fill(const std::string& path, const std::string& cycle_csv, int cap,
             const std::string& out_path) {
  Report rep("fill");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  auto cycle = parse_ids(cycle_csv);
  rep.body["cycle"] = cycle;
  auto filling = fill_cycle_minimal(inst.complex, cycle, cap);
  if (!filling) {
    rep.body["filling"] = nullptr;
    return rep.finish(kViolation);
  }
  rep.body["area"] = filling->domain_area;
  rep.body["injective_area"] = filling->injective_area;
  auto dv = defects(filling->disc);
  rep.body["defects"] = dv.defect;
  rep.body["flat"] = is_flat(filling->disc);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << surface_to_json(filling->as_surface_map(inst.complex));
  }
  return rep.finish(kOk);
}

int run_triangle(const std::string& path, const std::string& ids_csv) {
  Report rep("triangle");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  auto ids = parse_ids(ids_csv);
  if (ids.size() != 3) throw invalid_input("triangle expects three vertex ids");
  auto shape = triangle_shape(inst.complex, ids[0], ids[1], ids[2]);
  rep.body["shape"] = to_string(shape.shape);
  rep.body["core_area"] = shape.core_area;
  rep.body["single_simplex_core"] = shape.single_simplex_core;
  rep.body["core_equilateral"] = shape.core_equilateral;
  rep.body["core_side"] = shape.core_side;
  rep.body["reduced_cycle"] = shape.reduced_cycle;
  return rep.finish(kOk);
}

int run_digon(const std::string& path, const std::string& g0_csv, const std::string& g1_csv) {
  Report rep("digon");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  auto surf = digonal_surface(inst.complex, parse_ids(g0_csv), parse_ids(g1_csv));
  rep.body["shape"] = to_string(surf.shape);
  rep.body["pieces"] = surf.pieces.size();
  rep.body["cuts"] = surf.cuts;
  rep.body["all_pieces_flat"] = surf.all_pieces_flat;
  rep.body["area"] = surf.surface.domain_area;
  return rep.finish(surf.all_pieces_flat ? kOk : kViolation);
}

int run_sphere(const std::string& path, const std::string& ids_csv) {
  Report rep("sphere");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  auto ids = parse_ids(ids_csv);
  if (ids.size() != 4) throw invalid_input("sphere expects four vertex ids");
  auto res = build_sphere(inst.complex, ids[0], ids[1], ids[2], ids[3]);
  rep.body["degenerate"] = res.degenerate;
  if (res.degenerate) {
    rep.body["reason"] = res.degeneracy;
    return rep.finish(kViolation);
  }
  rep.body["sphere_vertices"] = res.sphere->complex().vertex_count();
  rep.body["sphere_triangles"] = res.sphere->triangle_count();
  auto gb = gauss_bonnet(*res.sphere);
  rep.body["gauss_bonnet"] = {gb.first, gb.second};
  return rep.finish(kOk);
}

int run_helly_verify(const std::string& path, const std::string& family_csv, int max_dim) {
  Report rep("helly verify");
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  ConvexFamily family;
  family.parent = &inst.complex;
  std::string cur;
  for (char c : family_csv + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        family.names.push_back(cur);
        family.members.push_back(named_member(inst, cur));
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  rep.body["family"] = family.names;
  rep.body["max_dim"] = max_dim;
  auto witness = find_witness(family, max_dim);
  rep.body["witness"] = witness_json(witness);
  if (family.members.size() == 3) {
    auto trace = reduce_triangle(family);
    rep.body["reduction"] = {{"common_point", trace.common_point},
                             {"iterations", trace.iterations},
                             {"points", {trace.A, trace.B, trace.C}}};
    if (!trace.common_point) rep.body["reduction"]["cycle"] = trace.cycle;
  }
  std::cerr << "witness: " << (witness ? "found" : "none") << "\n";
  return rep.finish(witness ? kOk : kViolation);
}

int run_helly_search(int max_side, const std::string& out_path) {
  Report rep("helly search-counterexample");
  auto res = search_counterexample(max_side);
  rep.body["found"] = res.found;
  if (!res.found) {
    std::cerr << "counterexample: none\n";
    return rep.finish(kViolation);
  }
  rep.body["side"] = res.side;
  rep.body["family"] = res.family_names;
  if (!out_path.empty()) save_instance(out_path, res.instance);
  std::cerr << "counterexample: hex triangle side " << res.side << "\n";
  return rep.finish(kOk);
}

int run_gen(const std::string& kind, const std::string& shape, int a, int b, int triangles,
            int k, int depth, std::optional<std::uint64_t> seed_opt, const std::string& out_path) {
  Report rep("gen " + kind);
  std::uint64_t seed = global_seed(seed_opt);
  GeneratedInstance inst;
  if (kind == "hex_disc") {
    if (shape == "triangle")
      inst = hex_disc(HexShape::Triangle, a);
    else if (shape == "hexagon")
      inst = hex_disc(HexShape::Hexagon, a);
    else if (shape == "parallelogram")
      inst = hex_disc(HexShape::Parallelogram, a, b);
    else
      throw invalid_input("unknown lattice region shape: " + shape);
  } else if (kind == "simplex_with_facets") {
    inst = simplex_with_facets(a);
  } else if (kind == "seven_systolic_disc") {
    inst = seven_systolic_disc(a, depth, seed);
  } else if (kind == "random_disc") {
    RandomDiscParams params;
    params.triangles = triangles;
    params.k = k;
    params.seed = seed;
    inst = random_disc(params);
  } else {
    throw invalid_input("unknown generator kind: " + kind);
  }
  rep.echo_instance(inst);
  rep.body["seed"] = seed;
  if (!out_path.empty()) save_instance(out_path, inst);
  return rep.finish(kOk);
}

int run_diagram(const std::string& path, const std::string& format, const std::string& import_path,
                const std::string& out_path) {
  Report rep("diagram");
  if (!import_path.empty()) {
    // lattice coordinates back to a complex
    std::ifstream in(import_path);
    if (!in) throw invalid_input("cannot open coordinate file: " + import_path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("coords")) throw invalid_input("malformed coordinate file");
    std::vector<HexCoord> coords;
    for (const auto& c : j["coords"]) coords.push_back({c[0].get<int>(), c[1].get<int>()});
    GeneratedInstance inst = hex_patch(coords);
    rep.echo_instance(inst);
    if (!out_path.empty()) save_instance(out_path, inst);
    return rep.finish(kOk);
  }
  GeneratedInstance inst = load_instance(path);
  rep.echo_instance(inst);
  if (format == "dot") {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      os = &file;
    }
    *os << "graph skeleton {\n";
    for (const auto& e : inst.complex.edges())
      *os << "  v" << e[0] << " -- v" << e[1] << ";\n";
    *os << "}\n";
    return rep.finish(kOk);
  }
  // lattice coordinates of a flat disc
  auto disc = TriangulatedDisc::try_from_complex(inst.complex);
  if (!disc) throw invalid_input("diagram coords: instance is not a triangulated disc");
  auto embedding = embed_in_hex_plane(*disc);
  if (!embedding) {
    rep.body["flat"] = false;
    return rep.finish(kViolation);
  }
  json coords = json::array();
  for (int v = 0; v < inst.complex.vertex_count(); ++v) {
    const auto& c = embedding->at(v);
    coords.push_back({c.a, c.b});
  }
  rep.body["flat"] = true;
  json out;
  out["coords"] = coords;
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    file << out.dump(2) << "\n";
  } else {
    rep.body["coords"] = coords;
  }
  return rep.finish(kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial toolkit for systolic complexes"};
  app.require_subcommand(1);

  std::string instance, out_path, cycle_csv, ids_csv, g0_csv, g1_csv, family_csv, kind,
      gen_shape = "triangle", format = "coords", import_path;
  int k = 6, max_dim = 2, cap = 24, max_side = 4, gen_a = 3, gen_b = 0, gen_triangles = 20,
      gen_k = 0, gen_depth = 1;
  long long budget = 200000;
  std::optional<std::uint64_t> seed;

  auto* check = app.add_subcommand("check", "largeness / systolicity checks");
  check->add_option("--instance", instance)->required();
  check->add_option("--k", k);
  check->add_option("--budget", budget);

  auto* dist = app.add_subcommand("dist", "distance and geodesics");
  int from = 0, to = 0;
  dist->add_option("--instance", instance)->required();
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();

  auto* fill = app.add_subcommand("fill", "minimal filling of a cycle");
  fill->add_option("--instance", instance)->required();
  fill->add_option("--cycle", cycle_csv)->required();
  fill->add_option("--area-cap", cap);
  fill->add_option("-o,--out", out_path);

  auto* triangle = app.add_subcommand("triangle", "minimal triangular surface shape");
  triangle->add_option("--instance", instance)->required();
  triangle->add_option("--vertices", ids_csv)->required();

  auto* digon = app.add_subcommand("digon", "digonal surface between two geodesics");
  digon->add_option("--instance", instance)->required();
  digon->add_option("--g0", g0_csv)->required();
  digon->add_option("--g1", g1_csv)->required();

  auto* sphere = app.add_subcommand("sphere", "sphere from four vertices");
  sphere->add_option("--instance", instance)->required();
  sphere->add_option("--vertices", ids_csv)->required();

  auto* helly = app.add_subcommand("helly", "witness search drivers");
  helly->require_subcommand(1);
  auto* verify = helly->add_subcommand("verify", "witness for a named family");
  verify->add_option("--instance", instance)->required();
  verify->add_option("--family", family_csv)->required();
  verify->add_option("--max-dim", max_dim);
  auto* search = helly->add_subcommand("search-counterexample", "sweep hex discs");
  search->add_option("--max-side", max_side);
  search->add_option("-o,--out", out_path);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("kind", kind)->required();
  gen->add_option("--shape", gen_shape);
  gen->add_option("--side,--n,--boundary,--radius", gen_a);
  gen->add_option("--b", gen_b);
  gen->add_option("--triangles", gen_triangles);
  gen->add_option("--k", gen_k);
  gen->add_option("--depth", gen_depth);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out_path);

  auto* diagram = app.add_subcommand("diagram", "diagram data (dot / lattice coords)");
  diagram->add_option("--instance", instance);
  diagram->add_option("--format", format);
  diagram->add_option("--import", import_path);
  diagram->add_option("-o,--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(instance, k, budget);
    if (dist->parsed()) return run_dist(instance, from, to);
    if (fill->parsed()) return run_fill(instance, cycle_csv, cap, out_path);
    if (triangle->parsed()) return run_triangle(instance, ids_csv);
    if (digon->parsed()) return run_digon(instance, g0_csv, g1_csv);
    if (sphere->parsed()) return run_sphere(instance, ids_csv);
    if (helly->parsed()) {
      if (verify->parsed()) return run_helly_verify(instance, family_csv, max_dim);
      return run_helly_search(max_side, out_path);
    }
    if (gen->parsed())
      return run_gen(kind, gen_shape, gen_a, gen_b, gen_triangles, gen_k, gen_depth, seed, out_path);
    if (diagram->parsed()) return run_diagram(instance, format, import_path, out_path);
  } catch (const invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const no_path& e) {
    std::cerr << "no path: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kBadInput;
}
