#ifndef FGC_FGC_H
#define FGC_FGC_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(FGC_BUILDING)
#    define FGC_API __declspec(dllexport)
#  else
#    define FGC_API __declspec(dllimport)
#  endif
#else
#  define FGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgc_status {
  FGC_OK = 0,
  FGC_ERR_PARSE,
  FGC_ERR_VALIDATION,
  FGC_ERR_UNPAIRED_SIDE,
  FGC_ERR_EULER_MISMATCH,
  FGC_ERR_VERTEX_COUNT_MISMATCH,
  FGC_ERR_SELF_GLUED_EDGE,
  FGC_ERR_DEGENERATE_CONFIGURATION,
  FGC_ERR_NOT_COLLINEAR,
  FGC_ERR_NOT_CONCURRENT,
  FGC_ERR_COINCIDENT_BASE_POINTS,
  FGC_ERR_NON_POSITIVE_PARAMETER,
  FGC_ERR_DEGENERATE_PAIR,
  FGC_ERR_INCONSISTENT_PATH,
  FGC_ERR_ZERO_DETERMINANT,
  FGC_ERR_DEPTH_LIMIT_EXCEEDED,
  FGC_ERR_PATCH_OVERFLOW,
  FGC_ERR_TOO_FEW_VERTICES,
  FGC_ERR_ASSUMPTION_VIOLATED,
  FGC_ERR_INVALID_ARGUMENT,
  FGC_ERR_IO,
  FGC_ERR_INTERNAL
} fgc_status;

typedef struct fgc_surface fgc_surface;
typedef struct fgc_coords fgc_coords;
typedef struct fgc_path fgc_path;
typedef struct fgc_pair fgc_pair;
typedef struct fgc_tessellation fgc_tessellation;

/* Message of the last failing call on this thread ("" if none). */
FGC_API const char* fgc_last_error_message(void);
FGC_API const char* fgc_status_name(fgc_status s);
/* Frees any char* returned through an out parameter. */
FGC_API void fgc_string_free(char* s);

/* Surfaces */
FGC_API fgc_status fgc_surface_load(const char* path, fgc_surface** out);
FGC_API fgc_status fgc_surface_from_json(const char* text, fgc_surface** out);
/* "s11", "s03", "s12" */
FGC_API fgc_status fgc_surface_example(const char* name, fgc_surface** out);
FGC_API fgc_status fgc_surface_to_json(const fgc_surface* s, char** out);
/* Counts, vertex degrees and peripheral paths as JSON. */
FGC_API fgc_status fgc_surface_info_json(const fgc_surface* s, char** out);
FGC_API void fgc_surface_free(fgc_surface* s);

/* Coordinates */
FGC_API fgc_status fgc_coords_load(const char* path, fgc_coords** out);
/* Relative surface paths inside text resolve against base_dir. */
FGC_API fgc_status fgc_coords_from_json(const char* text, const char* base_dir, fgc_coords** out);
FGC_API fgc_status fgc_coords_preset(const char* surface, const char* preset, fgc_coords** out);
FGC_API fgc_status fgc_coords_random(const fgc_surface* s, uint64_t seed, fgc_coords** out);
FGC_API fgc_status fgc_coords_to_json(const fgc_coords* c, char** out);
FGC_API fgc_status fgc_coords_surface(const fgc_coords* c, fgc_surface** out);
FGC_API void fgc_coords_free(fgc_coords* c);

FGC_API fgc_status fgc_coords_reverse(const fgc_coords* c, fgc_coords** out);
FGC_API fgc_status fgc_coords_dualize(const fgc_coords* c, fgc_coords** out);
/* edge: "t.i->t.j" or a corner-label name such as "e13". The new diagonal
   takes the old one's slots; inverse = 1 on the same edge undoes a flip. */
FGC_API fgc_status fgc_coords_flip(const fgc_coords* c, const char* edge, int inverse,
                                   fgc_coords** out);

/* Per-vertex monomials and end types, finite-area and Teichmuller flags. */
FGC_API fgc_status fgc_classify_json(const fgc_coords* c, char** out);
FGC_API fgc_status fgc_gluable(const fgc_coords* c, int v1, int v2, int* out);

/* Paths */
FGC_API fgc_status fgc_path_parse(const fgc_surface* s, const char* text, fgc_path** out);
FGC_API fgc_status fgc_path_peripheral(const fgc_surface* s, int vertex, int eps, fgc_path** out);
FGC_API fgc_status fgc_path_to_string(const fgc_surface* s, const fgc_path* p, char** out);
FGC_API void fgc_path_free(fgc_path* p);

/* Exact monodromy entries, det, j-invariants, triangularity, trace. */
FGC_API fgc_status fgc_holonomy_json(const fgc_coords* c, const fgc_path* p, char** out);

/* Developing map */
FGC_API fgc_status fgc_develop(const fgc_coords* c, int depth, int max_depth, int max_bits,
                               fgc_tessellation** out);
/* Tile count, ratio fidelity, convexity, conic residual. */
FGC_API fgc_status fgc_tessellation_report_json(const fgc_tessellation* t, char** out);
FGC_API fgc_status fgc_tessellation_svg(const fgc_tessellation* t, double width, double height,
                                        double stroke_width, int flag_lines, char** svg,
                                        char** warnings_json);
FGC_API void fgc_tessellation_free(fgc_tessellation* t);

/* Poisson structure */
/* Bracket of two coordinate functions by name ("t0", "e0.0->0.1", ...). */
FGC_API fgc_status fgc_bracket_coordinates(const fgc_coords* c, const char* f, const char* g,
                                           double* out);
FGC_API fgc_status fgc_rank(const fgc_coords* c, int* out);

FGC_API fgc_status fgc_pair_from_json(const fgc_surface* s, const char* text, fgc_pair** out);
FGC_API fgc_status fgc_pair_load(const fgc_surface* s, const char* path, fgc_pair** out);
/* Computes the intersection annotations of two closed paths. */
FGC_API fgc_status fgc_pair_annotate(const fgc_surface* s, const fgc_path* a, const fgc_path* b,
                                     fgc_pair** out);
/* index 0..2: alpha-beta, alpha-gamma, beta-gamma on s11. */
FGC_API fgc_status fgc_pair_example(int index, fgc_pair** out);
FGC_API fgc_status fgc_pair_to_json(const fgc_surface* s, const fgc_pair* p, char** out);
FGC_API void fgc_pair_free(fgc_pair* p);
/* Goldman side, FG side and residual at c. */
FGC_API fgc_status fgc_pair_evaluate_json(const fgc_coords* c, const fgc_pair* p, char** out);

/* Verification suites. which: "jacobi", "antisymmetry", "flip-invariance",
   "casimirs", "compatibility". pairs may be NULL for the bundled s11 pairs.
   passed is set to 1 iff the residual is below tol. */
FGC_API fgc_status fgc_check_json(const fgc_coords* c, const char* which, int samples,
                                  uint64_t seed, double tol, const fgc_pair* const* pairs,
                                  int npairs, int* passed, char** out);

/* Bundled corpus: surfaces, presets and curves as one JSON document. */
FGC_API fgc_status fgc_examples_json(char** out);
/* Writes the corpus files into dir. */
FGC_API fgc_status fgc_examples_write(const char* dir, char** written_json);

#ifdef __cplusplus
}
#endif

#endif
