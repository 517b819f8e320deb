#ifndef LPGEOM_H
#define LPGEOM_H

/* C interface to the lpgeom verifications. Every call returns an lpg_status;
   on failure lpg_last_error() holds a message for the calling thread. Reports
   and problems are opaque handles released with their _free functions. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LPG_API __declspec(dllexport)
#else
#define LPG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpg_status {
    LPG_OK = 0,
    LPG_ERR_PARSE = 1,            /* syntax, unknown symbol, bad document */
    LPG_ERR_INVALID_ARGUMENT = 2, /* wrong shape, symmetry, degenerate input */
    LPG_ERR_CHART_MISMATCH = 3,
    LPG_ERR_DIVISION_BY_ZERO = 4,
    LPG_ERR_PRECONDITION = 5,
    LPG_ERR_IO = 6,
    LPG_ERR_INTERNAL = 7
} lpg_status;

typedef enum lpg_format { LPG_FORMAT_TEXT = 0, LPG_FORMAT_STRUCTURED = 1 } lpg_format;

typedef struct lpg_problem lpg_problem;
typedef struct lpg_report lpg_report;

LPG_API const char* lpg_last_error(void);
LPG_API const char* lpg_status_name(lpg_status status);
LPG_API int lpg_format_version(void);

/* ---- problem documents ------------------------------------------------ */

/* inline_text != 0 also splits lines on ';'. */
LPG_API lpg_status lpg_problem_load_text(const char* text, int inline_text, lpg_problem** out);
LPG_API lpg_status lpg_problem_load_file(const char* path, lpg_problem** out);
/* "path_system", "quadric_family", ...; owned by the problem. */
LPG_API const char* lpg_problem_kind(const lpg_problem* problem);
/* Structured document text; release with lpg_string_free. */
LPG_API lpg_status lpg_problem_emit(const lpg_problem* problem, char** out);
LPG_API void lpg_problem_free(lpg_problem* problem);

/* Whether text parses as a function of x1..xn. */
LPG_API int lpg_function_valid(const char* text);
/* Whether text parses as a vector on the parameters of a quadric family. */
LPG_API int lpg_vector_valid(const lpg_problem* family, const char* text);

/* ---- verifications ---------------------------------------------------- */

LPG_API lpg_status lpg_frobenius(const lpg_problem* system, lpg_report** out);
/* at: comma list of rationals, or NULL for the origin. */
LPG_API lpg_status lpg_osculate(const char* f, const char* at, lpg_report** out);
LPG_API lpg_status lpg_family(const char* f, lpg_report** out);
/* X, V: "[e1, ..., en]" on the family parameters, or "identity". */
LPG_API lpg_status lpg_nullcheck(const lpg_problem* family, const char* X, lpg_report** out);
LPG_API lpg_status lpg_symdiff(const lpg_problem* family, lpg_report** out);
LPG_API lpg_status lpg_developable(const lpg_problem* family, const char* V, lpg_report** out);
LPG_API lpg_status lpg_flat_verify(unsigned n, lpg_report** out);
/* quadric_family (constant coefficients) or plane. */
LPG_API lpg_status lpg_lagrangian(const lpg_problem* problem, lpg_report** out);
/* sp_form or blocks. */
LPG_API lpg_status lpg_curvature(const lpg_problem* problem, lpg_report** out);
LPG_API lpg_status lpg_maurer_cartan(const lpg_problem* matrix, lpg_report** out);
LPG_API lpg_status lpg_identities(const lpg_problem* blocks, lpg_report** out);
LPG_API lpg_status lpg_normalize_torsion(const lpg_problem* torsion, lpg_report** out);
LPG_API lpg_status lpg_normalize_p(const lpg_problem* p_tensor, lpg_report** out);
/* label: "2,1" or NULL for all fundamental representations. */
LPG_API lpg_status lpg_rep_dims(unsigned n, const char* label, lpg_report** out);
LPG_API lpg_status lpg_rep_decompose(unsigned n, const char* a, const char* b, lpg_report** out);
LPG_API lpg_status lpg_rep_verify(unsigned n, uint64_t seed, lpg_report** out);
LPG_API lpg_status lpg_lemma_audit(unsigned n, lpg_report** out);

/* ---- acceptance ------------------------------------------------------- */

LPG_API uint64_t lpg_accept_default_seed(void);
/* Criterion 1..8. */
LPG_API lpg_status lpg_accept(int criterion, uint64_t seed, lpg_report** out);
/* All nine reports into out[0..8]; criterion 9 compares two runs of 1..8. */
LPG_API lpg_status lpg_accept_all(uint64_t seed, lpg_report* out[9]);

/* ---- reports ---------------------------------------------------------- */

LPG_API int lpg_report_passed(const lpg_report* report);
LPG_API const char* lpg_report_subject(const lpg_report* report);
/* Total elapsed seconds recorded by the report, 0 if none. */
LPG_API double lpg_report_seconds(const lpg_report* report);
LPG_API size_t lpg_report_check_count(const lpg_report* report);
/* Render; release with lpg_string_free. */
LPG_API lpg_status lpg_report_render(const lpg_report* report, lpg_format format, char** out);
LPG_API void lpg_report_free(lpg_report* report);

LPG_API void lpg_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
