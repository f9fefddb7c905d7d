#pragma once

#include <map>
#include <string>
#include <vector>

#include "wythoff/analysis.hpp"
#include "wythoff/construction.hpp"

namespace wythoff {

struct MeshDocument {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> polygons;   // closed faces
  std::vector<std::vector<int>> polylines;  // open apeirogon paths
  std::size_t edge_count = 0;
  std::map<std::string, std::string> metadata;
};

MeshDocument to_mesh(const Wythoffian& w);
std::string off_text(const MeshDocument& mesh);
std::string paths_text(const MeshDocument& mesh);

// Writes an OFF file, plus a sibling ".paths" file when the build has open
// faces. Returns the sidecar path, or an empty string when none was written.
std::string export_off(const Wythoffian& w, const std::string& path);

struct FaceSummary {
  std::string type;  // "01", "12", "02"
  std::string shape;
  bool regular = false;

  friend bool operator==(const FaceSummary&, const FaceSummary&) = default;
};

struct AnalysisReport {
  std::string name;
  std::string iset;
  std::vector<double> params;
  bool realizable = false;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<std::string, std::size_t> faces_by_type;
  std::string vertex_symbol;
  std::vector<FaceSummary> faces;
  bool uniform = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Builds and analyses; a non-realizable index set yields realizable = false.
AnalysisReport analyze(const PolyhedronSpec& spec, IndexSet iset,
                       const std::vector<double>& params, const BuildOptions& options = {});
AnalysisReport make_report(const Wythoffian& w);

std::string report_json(const AnalysisReport& r, int indent = 2);
AnalysisReport parse_report(const std::string& text);
void export_report(const AnalysisReport& r, const std::string& path);

}  // namespace wythoff
