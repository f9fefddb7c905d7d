#include "wythoff/wythoff.h"

#include <cstring>
#include <string>

#include "wythoff/analysis.hpp"
#include "wythoff/catalog.hpp"
#include "wythoff/construction.hpp"
#include "wythoff/errors.hpp"
#include "wythoff/io.hpp"

struct wy_polyhedron {
  wythoff::PolyhedronSpec spec;
};

struct wy_build {
  wythoff::Wythoffian w;
};

namespace {

thread_local std::string g_last_error;

wy_status status_of(wythoff::ErrorCode code) {
  using wythoff::ErrorCode;
  switch (code) {
    case ErrorCode::UnknownPolyhedron: return WY_ERR_UNKNOWN_POLYHEDRON;
    case ErrorCode::LocallyInfinite: return WY_ERR_LOCALLY_INFINITE;
    case ErrorCode::DegenerateBlend: return WY_ERR_DEGENERATE_BLEND;
    case ErrorCode::NoAdmissibleVertex: return WY_ERR_NO_ADMISSIBLE_VERTEX;
    case ErrorCode::PlacementViolation: return WY_ERR_PLACEMENT;
    case ErrorCode::ValidationFailed:
    case ErrorCode::OpenVertexFigure:
    case ErrorCode::NonTransitiveSymbol:
    case ErrorCode::TooFewVertices: return WY_ERR_VALIDATION;
    case ErrorCode::BudgetExceeded: return WY_ERR_BUDGET;
    case ErrorCode::EmptyMesh: return WY_ERR_EMPTY_MESH;
    case ErrorCode::IOError: return WY_ERR_IO;
    default: return WY_ERR_INVALID_ARGUMENT;
  }
}

template <class F>
wy_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const wythoff::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WY_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return WY_ERR_INTERNAL;
  }
}

wy_status fail(wy_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

wy_status copy_text(const std::string& text, char* buffer, size_t capacity, size_t* length) {
  if (length) *length = text.size();
  if (!buffer || capacity <= text.size())
    return fail(WY_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return WY_OK;
}

std::vector<double> param_list(const double* params, size_t n) {
  if (n > 0 && !params) throw wythoff::Error(wythoff::ErrorCode::InvalidArgument, "params is NULL");
  return std::vector<double>(params, params + n);
}

wythoff::BuildOptions options_for(double radius) {
  wythoff::BuildOptions o;
  if (radius > 0) o.radius = radius;
  return o;
}

}  // namespace

extern "C" {

const char* wy_status_name(wy_status status) {
  switch (status) {
    case WY_OK: return "ok";
    case WY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WY_ERR_UNKNOWN_POLYHEDRON: return "unknown polyhedron";
    case WY_ERR_LOCALLY_INFINITE: return "locally infinite";
    case WY_ERR_DEGENERATE_BLEND: return "degenerate blend";
    case WY_ERR_NO_ADMISSIBLE_VERTEX: return "no admissible vertex";
    case WY_ERR_PLACEMENT: return "placement violation";
    case WY_ERR_VALIDATION: return "validation failed";
    case WY_ERR_BUDGET: return "budget exceeded";
    case WY_ERR_NOT_UNIFORMIZABLE: return "not uniformizable";
    case WY_ERR_EMPTY_MESH: return "empty mesh";
    case WY_ERR_IO: return "i/o error";
    case WY_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case WY_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wy_last_error(void) { return g_last_error.c_str(); }

size_t wy_catalog_count(void) { return wythoff::catalog_names().size(); }

const char* wy_catalog_name(size_t index) {
  const auto& names = wythoff::catalog_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

wy_status wy_polyhedron_lookup(const char* name, wy_polyhedron** out) {
  if (!name || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new wy_polyhedron{wythoff::lookup(name)};
    return WY_OK;
  });
}

wy_status wy_polyhedron_petrie(const wy_polyhedron* p, wy_polyhedron** out) {
  if (!p || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new wy_polyhedron{wythoff::petrie(p->spec)};
    return WY_OK;
  });
}

wy_status wy_polyhedron_dual(const wy_polyhedron* p, wy_polyhedron** out) {
  if (!p || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new wy_polyhedron{wythoff::dual(p->spec)};
    return WY_OK;
  });
}

wy_status wy_polyhedron_blend(const wy_polyhedron* planar, int apeirogon, double scale,
                              wy_polyhedron** out) {
  if (!planar || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto kind = apeirogon ? wythoff::BlendKind::Apeirogon : wythoff::BlendKind::Segment;
    *out = new wy_polyhedron{wythoff::blend(planar->spec, kind, scale)};
    return WY_OK;
  });
}

void wy_polyhedron_free(wy_polyhedron* p) { delete p; }

double wy_default_blend_scale(void) { return wythoff::kDefaultBlendScale; }

const char* wy_polyhedron_name(const wy_polyhedron* p) { return p ? p->spec.name.c_str() : ""; }

wy_status wy_polyhedron_get_info(const wy_polyhedron* p, wy_polyhedron_info* out) {
  if (!p || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  out->schlafli_p = p->spec.schlafli_p;
  out->schlafli_q = p->spec.schlafli_q;
  for (int i = 0; i < 3; ++i) out->mirror_vector[i] = p->spec.mirror_vector[i];
  out->finite = p->spec.finite ? 1 : 0;
  return WY_OK;
}

wy_status wy_admissible(const wy_polyhedron* p, const char* iset, int* realizable, int* dimension) {
  if (!p || !iset) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::AdmissibleSet a = wythoff::admissible_set(p->spec, wythoff::IndexSet::parse(iset));
    if (realizable) *realizable = a.empty ? 0 : 1;
    if (dimension) *dimension = a.empty ? -1 : a.dimension();
    return WY_OK;
  });
}

wy_status wy_build_create(const wy_polyhedron* p, const char* iset, const double* params,
                          size_t nparams, double radius, wy_build** out) {
  if (!p || !iset || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::IndexSet s = wythoff::IndexSet::parse(iset);
    *out = new wy_build{
        wythoff::build(p->spec, s, param_list(params, nparams), options_for(radius))};
    return WY_OK;
  });
}

void wy_build_free(wy_build* b) { delete b; }

wy_status wy_build_counts(const wy_build* b, wy_counts* out) {
  if (!b || !out) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  out->vertices = b->w.vertices.size();
  out->edges = b->w.edges.size();
  out->closed_faces = out->open_faces = 0;
  for (const auto& f : b->w.faces) ++(f.closed ? out->closed_faces : out->open_faces);
  return WY_OK;
}

wy_status wy_build_vertex(const wy_build* b, size_t index, double xyz[3]) {
  if (!b || !xyz) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= b->w.vertices.size()) return fail(WY_ERR_INVALID_ARGUMENT, "vertex index out of range");
  const auto& v = b->w.vertices[index];
  xyz[0] = v.x;
  xyz[1] = v.y;
  xyz[2] = v.z;
  return WY_OK;
}

wy_status wy_build_is_uniform(const wy_build* b, int* uniform, double* edge_spread) {
  if (!b) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::UniformityReport r = wythoff::is_uniform(b->w);
    if (uniform) *uniform = r.uniform ? 1 : 0;
    if (edge_spread) *edge_spread = r.edge_length_spread;
    return WY_OK;
  });
}

wy_status wy_build_export_off(const wy_build* b, const char* path) {
  if (!b || !path) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::export_off(b->w, path);
    return WY_OK;
  });
}

wy_status wy_build_vertex_symbol(const wy_build* b, char* buffer, size_t capacity, size_t* length) {
  if (!b) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return copy_text(wythoff::vertex_symbol(b->w).str(), buffer, capacity, length);
  });
}

wy_status wy_build_report_json(const wy_build* b, char* buffer, size_t capacity, size_t* length) {
  if (!b) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return copy_text(wythoff::report_json(wythoff::make_report(b->w)), buffer, capacity, length);
  });
}

wy_status wy_report_json(const wy_polyhedron* p, const char* iset, const double* params,
                         size_t nparams, double radius, char* buffer, size_t capacity,
                         size_t* length) {
  if (!p || !iset) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::AnalysisReport r = wythoff::analyze(p->spec, wythoff::IndexSet::parse(iset),
                                                 param_list(params, nparams), options_for(radius));
    return copy_text(wythoff::report_json(r), buffer, capacity, length);
  });
}

wy_status wy_search_uniform(const wy_polyhedron* p, const char* iset, double* params,
                            size_t capacity, size_t* nparams, double* edge_spread) {
  if (!p || !iset) return fail(WY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    wythoff::UniformSearchResult r =
        wythoff::find_uniform_vertex(p->spec, wythoff::IndexSet::parse(iset));
    if (nparams) *nparams = r.params.size();
    if (edge_spread) *edge_spread = r.edge_length_spread;
    if (r.params.size() > capacity || (!params && !r.params.empty()))
      return fail(WY_ERR_BUFFER_TOO_SMALL, "params buffer too small");
    for (size_t k = 0; k < r.params.size(); ++k) params[k] = r.params[k];
    if (!r.found) return fail(WY_ERR_NOT_UNIFORMIZABLE, "no uniform initial vertex found");
    return WY_OK;
  });
}

}  // extern "C"
