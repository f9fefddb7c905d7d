#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wythoff/wythoff.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kNotRealizable = 2, kInvalid = 3, kNotUniform = 4 };

struct PolyDeleter {
  void operator()(wy_polyhedron* p) const { wy_polyhedron_free(p); }
};
struct BuildDeleter {
  void operator()(wy_build* b) const { wy_build_free(b); }
};
using PolyPtr = std::unique_ptr<wy_polyhedron, PolyDeleter>;
using BuildPtr = std::unique_ptr<wy_build, BuildDeleter>;

int exit_for(wy_status s) {
  switch (s) {
    case WY_OK: return kOk;
    case WY_ERR_NO_ADMISSIBLE_VERTEX: return kNotRealizable;
    case WY_ERR_VALIDATION:
    case WY_ERR_PLACEMENT:
    case WY_ERR_BUDGET:
    case WY_ERR_EMPTY_MESH: return kInvalid;
    case WY_ERR_NOT_UNIFORMIZABLE: return kNotUniform;
    case WY_ERR_UNKNOWN_POLYHEDRON:
    case WY_ERR_INVALID_ARGUMENT:
    case WY_ERR_LOCALLY_INFINITE:
    case WY_ERR_DEGENERATE_BLEND: return kUsage;
    default: return kInvalid;
  }
}

int report(wy_status s) {
  std::cerr << "error: " << wy_status_name(s);
  if (*wy_last_error()) std::cerr << ": " << wy_last_error();
  std::cerr << '\n';
  return exit_for(s);
}

// Resolves a catalog name; a non-default blend scale rebuilds blends from
// their planar base so the family parameter can be explored.
wy_status open_poly(const std::string& name, std::optional<double> blend_scale, PolyPtr& out) {
  wy_polyhedron* p = nullptr;
  if (wy_status s = wy_polyhedron_lookup(name.c_str(), &p); s != WY_OK) return s;
  out.reset(p);
  if (!blend_scale) return WY_OK;
  std::string n = wy_polyhedron_name(p);
  auto hash = n.find('#');
  if (hash == std::string::npos) {
    std::cerr << "note: --blend-scale ignored for " << n << '\n';
    return WY_OK;
  }
  wy_polyhedron* base = nullptr;
  if (wy_status s = wy_polyhedron_lookup(n.substr(0, hash).c_str(), &base); s != WY_OK) return s;
  PolyPtr base_ptr(base);
  int apeirogon = n.find("inf", hash) != std::string::npos;
  wy_polyhedron* b = nullptr;
  if (wy_status s = wy_polyhedron_blend(base, apeirogon, *blend_scale, &b); s != WY_OK) return s;
  out.reset(b);
  return WY_OK;
}

std::string json_for(const wy_polyhedron* p, const std::string& iset, const std::vector<double>& params,
                     double radius, wy_status& status) {
  size_t len = 0;
  status = wy_report_json(p, iset.c_str(), params.data(), params.size(), radius, nullptr, 0, &len);
  if (status != WY_ERR_BUFFER_TOO_SMALL) return {};
  std::string buf(len + 1, '\0');
  status = wy_report_json(p, iset.c_str(), params.data(), params.size(), radius, buf.data(), buf.size(), &len);
  buf.resize(len);
  return buf;
}

bool write_text(const std::string& path, const std::string& text) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  ok = std::fputc('\n', f) != EOF && ok;
  return std::fclose(f) == 0 && ok;
}

int cmd_list() {
  for (size_t i = 0; i < wy_catalog_count(); ++i) {
    wy_polyhedron* raw = nullptr;
    if (wy_status s = wy_polyhedron_lookup(wy_catalog_name(i), &raw); s != WY_OK) return report(s);
    PolyPtr p(raw);
    wy_polyhedron_info info{};
    wy_polyhedron_get_info(p.get(), &info);
    std::string pp = info.schlafli_p < 0 ? "inf" : std::to_string(info.schlafli_p);
    std::printf("%-18s {%s,%d}  %-8s mirror vector (%d,%d,%d)\n", wy_catalog_name(i), pp.c_str(),
                info.schlafli_q, info.finite ? "finite" : "infinite", info.mirror_vector[0],
                info.mirror_vector[1], info.mirror_vector[2]);
  }
  return kOk;
}

struct Common {
  std::string poly;
  std::string iset;
  std::vector<double> params;
  double radius = 4.0;
  std::optional<double> blend_scale;
};

void add_common(CLI::App* sub, Common& c, bool with_params) {
  sub->add_option("--poly", c.poly, "catalog name, e.g. \"{6,4}_3\"")->required();
  sub->add_option("--iset", c.iset, "index set such as 0, 01 or 012")
      ->required()
      ->check([](const std::string& s) -> std::string {
        if (s.empty() || s.size() > 3 || s.find_first_not_of("012") != std::string::npos)
          return "index set must be digits from 012";
        return {};
      });
  sub->add_option("--blend-scale", c.blend_scale,
                  "distance between the blend planes (catalog default " +
                      std::to_string(wy_default_blend_scale()) + ")")
      ->check(CLI::PositiveNumber);
  if (!with_params) return;
  sub->add_option("--param", c.params, "parameters of the initial vertex")->delimiter(',');
  sub->add_option("--window", c.radius, "window radius")->check(CLI::PositiveNumber);
}

int cmd_build(const Common& c, const std::string& out, const std::string& rep, bool print_report) {
  PolyPtr p;
  if (wy_status s = open_poly(c.poly, c.blend_scale, p); s != WY_OK) return report(s);
  wy_build* raw = nullptr;
  wy_status s = wy_build_create(p.get(), c.iset.c_str(), c.params.data(), c.params.size(), c.radius, &raw);
  if (s != WY_OK) return report(s);
  BuildPtr b(raw);
  if (!out.empty()) {
    if (s = wy_build_export_off(b.get(), out.c_str()); s != WY_OK) return report(s);
  }
  size_t len = 0;
  wy_build_report_json(b.get(), nullptr, 0, &len);
  std::string json(len + 1, '\0');
  if (s = wy_build_report_json(b.get(), json.data(), json.size(), &len); s != WY_OK) return report(s);
  json.resize(len);
  if (!rep.empty() && !write_text(rep, json)) {
    std::cerr << "error: cannot write '" << rep << "'\n";
    return kInvalid;
  }
  if (print_report) {
    std::cout << json << '\n';
  } else {
    wy_counts n{};
    wy_build_counts(b.get(), &n);
    std::printf("%s P^%s: %zu vertices, %zu edges, %zu closed faces, %zu open faces\n",
                wy_polyhedron_name(p.get()), c.iset.c_str(), n.vertices, n.edges, n.closed_faces,
                n.open_faces);
  }
  return kOk;
}

int cmd_analyze(const Common& c, const std::string& rep) {
  PolyPtr p;
  if (wy_status s = open_poly(c.poly, c.blend_scale, p); s != WY_OK) return report(s);
  wy_status s = WY_OK;
  std::string json = json_for(p.get(), c.iset, c.params, c.radius, s);
  if (s != WY_OK) return report(s);
  if (!rep.empty() && !write_text(rep, json)) {
    std::cerr << "error: cannot write '" << rep << "'\n";
    return kInvalid;
  }
  std::cout << json << '\n';
  return kOk;
}

int cmd_search(const Common& c) {
  PolyPtr p;
  if (wy_status s = open_poly(c.poly, c.blend_scale, p); s != WY_OK) return report(s);
  double params[3] = {0, 0, 0};
  size_t n = 0;
  double spread = 0;
  wy_status s = wy_search_uniform(p.get(), c.iset.c_str(), params, 3, &n, &spread);
  std::string joined;
  for (size_t k = 0; k < n; ++k) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%.17g", k ? "," : "", params[k]);
    joined += buf;
  }
  if (s == WY_ERR_NOT_UNIFORMIZABLE) {
    std::printf("not uniformizable (best params %s, edge spread %.3g)\n", joined.c_str(), spread);
    return kNotUniform;
  }
  if (s != WY_OK) return report(s);
  wy_build* raw = nullptr;
  if (s = wy_build_create(p.get(), c.iset.c_str(), params, n, 4.0, &raw); s != WY_OK) return report(s);
  BuildPtr b(raw);
  size_t len = 0;
  wy_build_vertex_symbol(b.get(), nullptr, 0, &len);
  std::string sym(len + 1, '\0');
  if (s = wy_build_vertex_symbol(b.get(), sym.data(), sym.size(), &len); s != WY_OK) return report(s);
  sym.resize(len);
  std::printf("params %s\nvertex symbol %s\nedge spread %.3g\n", joined.c_str(), sym.c_str(), spread);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wythoffians of regular skeletal polyhedra"};
  app.require_subcommand(1);

  app.add_subcommand("list", "list the catalog");

  Common build_opts;
  std::string out, rep;
  auto* build = app.add_subcommand("build", "build a window of P^I, export OFF and a report");
  add_common(build, build_opts, true);
  build->add_option("--out", out, "OFF output path");
  build->add_option("--report", rep, "JSON report path");

  Common analyze_opts;
  std::string analyze_rep;
  auto* analyze = app.add_subcommand("analyze", "print the JSON analysis report");
  add_common(analyze, analyze_opts, true);
  analyze->add_option("--report", analyze_rep, "also write the report to this path");

  Common search_opts;
  auto* search = app.add_subcommand("search-uniform", "look for an initial vertex with equal edges");
  add_common(search, search_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (app.got_subcommand("list")) return cmd_list();
  if (build->parsed()) return cmd_build(build_opts, out, rep, false);
  if (analyze->parsed()) return cmd_analyze(analyze_opts, analyze_rep);
  return cmd_search(search_opts);
}
