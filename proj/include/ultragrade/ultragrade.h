/* C interface to the ultragrade library.
 *
 * Functions return UG_OK or an error code; on error a message is available
 * from ug_last_error() on the calling thread. Strings returned through out
 * parameters are owned by the caller and released with ug_string_free().
 */
#ifndef ULTRAGRADE_ULTRAGRADE_H
#define ULTRAGRADE_ULTRAGRADE_H

#include <stdint.h>

#if defined(_WIN32)
#define UG_API __declspec(dllexport)
#else
#define UG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ug_presentation ug_presentation;

typedef enum ug_status {
  UG_OK = 0,
  UG_ERR_SYNTAX = 1,
  UG_ERR_DANGLING_REFERENCE = 2,
  UG_ERR_EMPTY_RANGE = 3,
  UG_ERR_INVALID_PRESENTATION = 4,
  UG_ERR_INFINITE_EMITTER = 5,
  UG_ERR_NOT_FINITE = 6,
  UG_ERR_NOT_REGULAR = 7,
  UG_ERR_NOT_HOMOGENEOUS = 8,
  UG_ERR_NOT_FINITE_EDGES = 9,
  UG_ERR_NOT_UNITAL = 10,
  UG_ERR_NO_EDGES = 11,
  UG_ERR_PATH_LENGTH_CAP = 12,
  UG_ERR_TERM_COUNT_CAP = 13,
  UG_ERR_MIXED_PRESENTATION = 14,
  UG_ERR_NOT_IN_DOMAIN = 15,
  UG_ERR_NOT_IN_IDEAL = 16,
  UG_ERR_NOT_STRONGLY_GRADED = 17,
  UG_ERR_BOUND_EXCEEDED = 18,
  UG_ERR_LIMIT_EXCEEDED = 19,
  UG_ERR_INVALID_ARGUMENT = 20,
  UG_ERR_IO = 100,
  UG_ERR_INTERNAL = 101
} ug_status;

UG_API const char* ug_version(void);
UG_API const char* ug_status_name(ug_status status);

/* Message and source line (0 if none) of the last error on this thread. */
UG_API const char* ug_last_error(void);
UG_API int ug_last_error_line(void);

UG_API ug_status ug_presentation_parse(const char* text, ug_presentation** out);
UG_API ug_status ug_presentation_load(const char* path, ug_presentation** out);
UG_API void ug_presentation_free(ug_presentation* p);

/* Presentation text of p and of its associated directed graph. */
UG_API ug_status ug_presentation_print(const ug_presentation* p, char** text_out);
UG_API ug_status ug_associated_graph(const ug_presentation* p, char** text_out);

/* JSON documents. horizon 0 and ck2_depth 0 select the defaults. */
UG_API ug_status ug_analyze(const ug_presentation* p, uint64_t horizon, unsigned ck2_depth, char** json_out);
UG_API ug_status ug_check(const ug_presentation* p, const char* property, uint64_t horizon, unsigned ck2_depth,
                          char** json_out);
UG_API ug_status ug_eval(const ug_presentation* p, const char* expr, char** json_out);
UG_API ug_status ug_skew(const ug_presentation* p, const char* expr, unsigned verify_depth, char** json_out);

/* Text rendering of any JSON document produced above. */
UG_API ug_status ug_render_text(const char* json, int color, char** text_out);

UG_API void ug_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
