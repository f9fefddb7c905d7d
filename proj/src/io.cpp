#include "wythoff/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wythoff/errors.hpp"

namespace wythoff {

using ojson = nlohmann::ordered_json;

MeshDocument to_mesh(const Wythoffian& w) {
  MeshDocument m;
  m.vertices = w.vertices;
  m.edge_count = w.edges.size();
  for (const FaceRecord& f : w.faces) (f.closed ? m.polygons : m.polylines).push_back(f.cycle);
  m.metadata["name"] = w.source.name;
  m.metadata["iset"] = w.iset.str();
  m.metadata["params"] = ojson(w.params).dump();
  m.metadata["window"] = ojson::array({w.window.center.x, w.window.center.y, w.window.center.z,
                                       w.window.radius})
                             .dump();
  return m;
}

std::string off_text(const MeshDocument& mesh) {
  std::ostringstream out;
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.polygons.size() << ' ' << mesh.edge_count
      << '\n';
  char buf[128];
  for (const Vec3& p : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << buf;
  }
  for (const auto& poly : mesh.polygons) {
    out << poly.size();
    for (int id : poly) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

std::string paths_text(const MeshDocument& mesh) {
  std::ostringstream out;
  for (const auto& line : mesh.polylines) {
    out << line.size();
    for (int id : line) out << ' ' << id;
    out << " open\n";
  }
  return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IOError, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorCode::IOError, "failed writing '" + path + "'");
}

}  // namespace

std::string export_off(const Wythoffian& w, const std::string& path) {
  if (w.vertices.empty()) throw Error(ErrorCode::EmptyMesh, "nothing to export: the window is empty");
  MeshDocument mesh = to_mesh(w);
  write_file(path, off_text(mesh));
  if (mesh.polylines.empty()) return {};
  std::string sidecar = std::filesystem::path(path).replace_extension(".paths").string();
  write_file(sidecar, paths_text(mesh));
  return sidecar;
}

AnalysisReport make_report(const Wythoffian& w) {
  AnalysisReport r;
  r.name = w.source.name;
  r.iset = w.iset.str();
  r.params = w.params;
  r.realizable = true;
  r.vertex_count = w.vertices.size();
  r.edge_count = w.edges.size();
  for (const FaceType& t : index_pairs(w.iset)) r.faces_by_type[to_string(t)] = 0;
  for (const FaceRecord& f : w.faces) ++r.faces_by_type[to_string(f.ftype)];
  r.vertex_symbol = vertex_symbol(w).str();
  for (const BaseFace& f : base_faces(w.source.gens, w.iset, w.initial_vertex, 10)) {
    FaceClass fc = classify_points(f.points, f.closed, w.source.gens, f.ftype, w.iset);
    r.faces.push_back({to_string(f.ftype), to_string(fc.shape), fc.regular});
  }
  r.uniform = is_uniform(w).uniform;
  return r;
}

AnalysisReport analyze(const PolyhedronSpec& spec, IndexSet iset,
                       const std::vector<double>& params, const BuildOptions& options) {
  AdmissibleSet a = admissible_set(spec, iset);
  if (a.empty) {
    AnalysisReport r;
    r.name = spec.name;
    r.iset = iset.str();
    r.params = params;
    return r;
  }
  return make_report(build(spec, iset, params, options));
}

std::string report_json(const AnalysisReport& r, int indent) {
  ojson j;
  j["name"] = r.name;
  j["iset"] = r.iset;
  j["params"] = r.params;
  j["realizable"] = r.realizable;
  ojson counts;
  counts["v"] = r.vertex_count;
  counts["e"] = r.edge_count;
  ojson by_type = ojson::object();
  for (const auto& [t, n] : r.faces_by_type) by_type[t] = n;
  counts["f_by_type"] = by_type;
  j["counts"] = counts;
  j["vertex_symbol"] = r.vertex_symbol;
  ojson faces = ojson::array();
  for (const FaceSummary& f : r.faces) {
    ojson fj;
    fj["type"] = f.type;
    fj["class"] = f.shape;
    fj["regular"] = f.regular;
    faces.push_back(fj);
  }
  j["faces"] = faces;
  j["uniform"] = r.uniform;
  return j.dump(indent);
}

AnalysisReport parse_report(const std::string& text) {
  AnalysisReport r;
  try {
    ojson j = ojson::parse(text);
    r.name = j.at("name").get<std::string>();
    r.iset = j.at("iset").get<std::string>();
    r.params = j.at("params").get<std::vector<double>>();
    r.realizable = j.at("realizable").get<bool>();
    const ojson& c = j.at("counts");
    r.vertex_count = c.at("v").get<std::size_t>();
    r.edge_count = c.at("e").get<std::size_t>();
    for (const auto& [k, v] : c.at("f_by_type").items()) r.faces_by_type[k] = v.get<std::size_t>();
    r.vertex_symbol = j.at("vertex_symbol").get<std::string>();
    for (const ojson& f : j.at("faces"))
      r.faces.push_back({f.at("type").get<std::string>(), f.at("class").get<std::string>(),
                         f.at("regular").get<bool>()});
    r.uniform = j.at("uniform").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::IOError, std::string("malformed report: ") + e.what());
  }
  return r;
}

void export_report(const AnalysisReport& r, const std::string& path) {
  write_file(path, report_json(r) + "\n");
}

}  // namespace wythoff
