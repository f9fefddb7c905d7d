/* C interface to the Wythoffian construction library. */
#ifndef WYTHOFF_WYTHOFF_H
#define WYTHOFF_WYTHOFF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(WYTHOFF_BUILDING)
#define WY_API __attribute__((visibility("default")))
#else
#define WY_API
#endif

typedef enum wy_status {
  WY_OK = 0,
  WY_ERR_INVALID_ARGUMENT,
  WY_ERR_UNKNOWN_POLYHEDRON,
  WY_ERR_LOCALLY_INFINITE,
  WY_ERR_DEGENERATE_BLEND,
  WY_ERR_NO_ADMISSIBLE_VERTEX,
  WY_ERR_PLACEMENT,
  WY_ERR_VALIDATION,
  WY_ERR_BUDGET,
  WY_ERR_NOT_UNIFORMIZABLE,
  WY_ERR_EMPTY_MESH,
  WY_ERR_IO,
  WY_ERR_BUFFER_TOO_SMALL,
  WY_ERR_INTERNAL
} wy_status;

typedef struct wy_polyhedron wy_polyhedron;
typedef struct wy_build wy_build;

typedef struct wy_polyhedron_info {
  int schlafli_p; /* -1 for apeirogonal faces */
  int schlafli_q;
  int mirror_vector[3];
  int finite;
} wy_polyhedron_info;

typedef struct wy_counts {
  size_t vertices;
  size_t edges;
  size_t closed_faces;
  size_t open_faces;
} wy_counts;

WY_API const char* wy_status_name(wy_status status);
/* Message of the most recent failure on this thread ("" if none). */
WY_API const char* wy_last_error(void);

WY_API size_t wy_catalog_count(void);
WY_API const char* wy_catalog_name(size_t index);

WY_API wy_status wy_polyhedron_lookup(const char* name, wy_polyhedron** out);
WY_API wy_status wy_polyhedron_petrie(const wy_polyhedron* p, wy_polyhedron** out);
WY_API wy_status wy_polyhedron_dual(const wy_polyhedron* p, wy_polyhedron** out);
/* apeirogon != 0 blends with a linear apeirogon, otherwise with a segment. */
WY_API wy_status wy_polyhedron_blend(const wy_polyhedron* planar, int apeirogon, double scale,
                                     wy_polyhedron** out);
WY_API void wy_polyhedron_free(wy_polyhedron* p);
/* Scale used by the catalog blends. */
WY_API double wy_default_blend_scale(void);
WY_API const char* wy_polyhedron_name(const wy_polyhedron* p);
WY_API wy_status wy_polyhedron_get_info(const wy_polyhedron* p, wy_polyhedron_info* out);

/* iset is a digit string such as "01" or "012". */
WY_API wy_status wy_admissible(const wy_polyhedron* p, const char* iset, int* realizable,
                               int* dimension);

/* params may be NULL with nparams 0 for the default vertex; the window is a
   ball of the given radius around the initial vertex. */
WY_API wy_status wy_build_create(const wy_polyhedron* p, const char* iset, const double* params,
                                 size_t nparams, double radius, wy_build** out);
WY_API void wy_build_free(wy_build* b);
WY_API wy_status wy_build_counts(const wy_build* b, wy_counts* out);
WY_API wy_status wy_build_vertex(const wy_build* b, size_t index, double xyz[3]);
WY_API wy_status wy_build_is_uniform(const wy_build* b, int* uniform, double* edge_spread);
WY_API wy_status wy_build_export_off(const wy_build* b, const char* path);

/* Text results: *length receives the length without the terminator; the call
   fails with WY_ERR_BUFFER_TOO_SMALL when capacity <= *length. */
WY_API wy_status wy_build_vertex_symbol(const wy_build* b, char* buffer, size_t capacity,
                                        size_t* length);
WY_API wy_status wy_build_report_json(const wy_build* b, char* buffer, size_t capacity,
                                      size_t* length);
/* Report for any index set, including non-realizable ones. */
WY_API wy_status wy_report_json(const wy_polyhedron* p, const char* iset, const double* params,
                                size_t nparams, double radius, char* buffer, size_t capacity,
                                size_t* length);

/* Fails with WY_ERR_NOT_UNIFORMIZABLE when no uniform vertex exists; params
   then hold the best point found and edge_spread its relative edge spread. */
WY_API wy_status wy_search_uniform(const wy_polyhedron* p, const char* iset, double* params,
                                   size_t capacity, size_t* nparams, double* edge_spread);

#ifdef __cplusplus
}
#endif

#endif
