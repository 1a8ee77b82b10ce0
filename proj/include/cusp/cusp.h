/* C interface to the cusp library. Strings returned through `char** out` are
 * heap-allocated and must be released with cusp_string_free. On failure the
 * out pointer is left NULL and cusp_last_error() describes the problem. */
#ifndef CUSP_H
#define CUSP_H

#include <stddef.h>

#if defined(CUSP_BUILDING)
#define CUSP_API __attribute__((visibility("default")))
#else
#define CUSP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CUSP_OK = 0,
    CUSP_MISMATCH = 1, /* a verification did not come out as required */
    CUSP_INPUT = 2,    /* malformed or unknown input */
    CUSP_BUDGET = 3,   /* search or enumeration limit reached */
    CUSP_INTERNAL = 4
} cusp_status;

typedef struct cusp_table cusp_table;

CUSP_API const char* cusp_last_error(void); /* thread-local, valid until the next call */
CUSP_API void cusp_string_free(char* s);

/* Fourier matrix over M(gamma), gamma in Z2 Z3 Z4 S3 S4 S5; one row per line,
 * entries as cyclotomic strings. Hermitian and involutive or CUSP_MISMATCH. */
CUSP_API cusp_status cusp_fourier_matrix(const char* gamma, char** out_text);
/* JSON list of pairs in matrix order. */
CUSP_API cusp_status cusp_gamma_pairs(const char* gamma, char** out_json);

/* JSON {"type","pair","terms":[{"name","coeff"}]} for R_pair. */
CUSP_API cusp_status cusp_family_row(const char* type, const char* pair, char** out_json);
/* Expansion of a unipotent character in almost characters. */
CUSP_API cusp_status cusp_unipotent_row(const char* type, const char* name, char** out_json);
/* Compares every stored printed combination; CUSP_MISMATCH if any differ. */
CUSP_API cusp_status cusp_printed_rows_check(char** out_json);

/* End-to-end Sp4(F2) replay; JSON report with audit trail. */
CUSP_API cusp_status cusp_sp4_verify(char** out_json);

/* group: "sp4f2", "s<n>" (n <= 10), "gamma:<id>", "c2", "d4" style adjoint
 * groups are refused above the enumeration bound with CUSP_BUDGET. */
CUSP_API cusp_status cusp_table_compute(const char* group, cusp_table** out);
CUSP_API cusp_status cusp_table_parse(const char* text, cusp_table** out);
CUSP_API cusp_status cusp_table_load(const char* path, cusp_table** out);
CUSP_API void cusp_table_free(cusp_table* t);
CUSP_API size_t cusp_table_class_count(const cusp_table* t);
CUSP_API cusp_status cusp_table_serialize(const cusp_table* t, char** out_text);
/* JSON {"valid":bool,"violations":[...]}; CUSP_MISMATCH when invalid. */
CUSP_API cusp_status cusp_table_validate(const cusp_table* t, char** out_json);

/* pins: comma-separated "subclass=bigclass" by class name, or NULL.
 * node_limit 0 selects the default. CUSP_BUDGET if the search was cut short
 * (the JSON still lists the maps found). */
CUSP_API cusp_status cusp_fusion(const cusp_table* sub, const cusp_table* big, const char* pins,
                        unsigned long long node_limit, char** out_json);
/* Class names hit by `sub_class` across all admissible fusions, JSON list. */
CUSP_API cusp_status cusp_fusion_images(const cusp_table* sub, const cusp_table* big, const char* sub_class,
                               unsigned long long node_limit, char** out_json);

/* type in F4 E6 D4 B2; support: comma-separated class names or NULL for the
 * default. CUSP_MISMATCH unless zeta is a root of unity and R = sign*zeta*chi
 * on every class for some admissible matching. */
CUSP_API cusp_status cusp_zeta_verify(const char* type, const cusp_table* t, const char* pair, const char* class_name,
                             const char* support, char** out_json);
CUSP_API cusp_status cusp_zeta_extrapolate(const char* zeta, unsigned long m, char** out_text);

/* Chevalley data: a type (C2 D4 F4 E6) or a representative name (u17, ...).
 * JSON with metadata; grids adds the 0/1 matrices. */
CUSP_API cusp_status cusp_chev(const char* what, int grids, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
