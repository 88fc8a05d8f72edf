#include "systolic/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace systolic {

using nlohmann::json;

namespace {

json complex_to_json_obj(const SimplicialComplex& X) {
  json j;
  j["vertices"] = X.vertex_count();
  j["maximal_simplices"] = X.maximal_simplices();
  j["certificates"] = json::object();
  if (X.sc_certificate())
    j["certificates"]["simply_connected"] = to_string(*X.sc_certificate());
  else
    j["certificates"]["simply_connected"] = nullptr;
  return j;
}

SimplicialComplex complex_from_json_obj(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw invalid_input("instance: missing integer field 'vertices'");
  if (!j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
    throw invalid_input("instance: missing array field 'maximal_simplices'");
  int n = j["vertices"].get<int>();
  std::vector<Simplex> maximal;
  size_t idx = 0;
  for (const auto& row : j["maximal_simplices"]) {
    if (!row.is_array()) throw invalid_input("maximal_simplices[" + std::to_string(idx) + "]: not an array");
    Simplex s;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw invalid_input("maximal_simplices[" + std::to_string(idx) + "]: non-integer vertex");
      s.push_back(v.get<int>());
    }
    maximal.push_back(std::move(s));
    ++idx;
  }
  SimplicialComplex X;
  try {
    X = SimplicialComplex::from_maximal(n, std::move(maximal));
  } catch (const invalid_input& e) {
    throw invalid_input(std::string("instance: ") + e.what());
  }
  if (j.contains("certificates") && j["certificates"].is_object()) {
    const auto& c = j["certificates"];
    if (c.contains("simply_connected") && c["simply_connected"].is_string()) {
      auto cert = certificate_from_string(c["simply_connected"].get<std::string>());
      if (!cert) throw invalid_input("certificates.simply_connected: unknown certificate kind");
      X.set_sc_certificate(cert);
    }
  }
  return X;
}

}  // namespace

std::string instance_to_json(const GeneratedInstance& inst) {
  json j = complex_to_json_obj(inst.complex);
  if (!inst.subcomplexes.empty()) {
    json subs = json::object();
    for (const auto& [name, verts] : inst.subcomplexes) subs[name] = verts;
    j["subcomplexes"] = subs;
  }
  if (!inst.notes.empty()) {
    json notes = json::object();
    for (const auto& [k, v] : inst.notes) notes[k] = v;
    j["notes"] = notes;
  }
  return j.dump(2) + "\n";
}

GeneratedInstance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("instance: ") + e.what());
  }
  GeneratedInstance inst;
  inst.complex = complex_from_json_obj(j);
  if (j.contains("subcomplexes")) {
    if (!j["subcomplexes"].is_object()) throw invalid_input("subcomplexes: not an object");
    for (const auto& [name, verts] : j["subcomplexes"].items()) {
      if (!verts.is_array()) throw invalid_input("subcomplexes." + name + ": not an array");
      std::vector<VertexId> ids;
      for (const auto& v : verts) {
        if (!v.is_number_integer())
          throw invalid_input("subcomplexes." + name + ": non-integer vertex");
        int id = v.get<int>();
        if (id < 0 || id >= inst.complex.vertex_count())
          throw invalid_input("subcomplexes." + name + ": vertex id out of range");
        ids.push_back(id);
      }
      inst.subcomplexes[name] = std::move(ids);
    }
  }
  if (j.contains("notes") && j["notes"].is_object())
    for (const auto& [k, v] : j["notes"].items())
      if (v.is_string()) inst.notes[k] = v.get<std::string>();
  return inst;
}

GeneratedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const std::string& path, const GeneratedInstance& inst) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

std::string surface_to_json(const SurfaceMap& surface) {
  json j;
  j["domain"] = complex_to_json_obj(surface.domain);
  auto disc = TriangulatedDisc::try_from_complex(surface.domain);
  if (disc) j["domain"]["boundary_cycle"] = disc->boundary_cycle();
  j["assignment"] = surface.assignment;
  j["area"] = surface.domain_area;
  j["injective_area"] = surface.injective_area;
  return j.dump(2) + "\n";
}

SurfaceMap surface_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("surface: ") + e.what());
  }
  if (!j.contains("domain") || !j.contains("assignment"))
    throw invalid_input("surface: needs 'domain' and 'assignment'");
  SurfaceMap s;
  s.domain = complex_from_json_obj(j["domain"]);
  for (const auto& v : j["assignment"]) {
    if (!v.is_number_integer()) throw invalid_input("surface: non-integer assignment entry");
    s.assignment.push_back(v.get<int>());
  }
  if (s.assignment.size() != static_cast<size_t>(s.domain.vertex_count()))
    throw invalid_input("surface: assignment arity mismatch");
  for (const auto& t : s.domain.maximal_simplices()) {
    if (t.size() != 3) continue;
    s.domain_area++;
    std::set<VertexId> img{s.assignment[static_cast<size_t>(t[0])],
                           s.assignment[static_cast<size_t>(t[1])],
                           s.assignment[static_cast<size_t>(t[2])]};
    if (img.size() == 3) s.injective_area++;
  }
  return s;
}

std::uint64_t instance_hash(const GeneratedInstance& inst) {
  std::string text = instance_to_json(inst);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace systolic
