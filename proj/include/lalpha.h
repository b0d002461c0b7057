/* lalpha: spectra of the matrix family alpha*D(G) + (alpha-1)*A(G).
 *
 * C interface over the C++ core. All objects are opaque handles created by
 * la_* constructors and released with the matching la_*_free. Functions
 * returning la_status set a thread-local message retrievable with
 * la_last_error() on failure. Strings returned as char* are heap-allocated
 * and must be released with la_string_free.
 */
#ifndef LALPHA_H
#define LALPHA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum la_status {
    LA_OK = 0,
    LA_ERR_PARAM = 1,       /* parameter out of range / invalid vertex */
    LA_ERR_PARSE = 2,       /* malformed edge list or graph spec */
    LA_ERR_ALPHA = 3,       /* alpha outside [0,1] or excluded boundary */
    LA_ERR_SIZE = 4,        /* size limit or size mismatch */
    LA_ERR_HYPOTHESIS = 5,  /* not regular / not equitable / not orthogonal */
    LA_ERR_CONVERGENCE = 6, /* eigensolver iteration cap (kernel bug) */
    LA_ERR_IO = 7,
    LA_ERR_INTERNAL = 8
} la_status;

typedef struct la_graph la_graph;
typedef struct la_spectrum la_spectrum;

const char* la_status_name(la_status status);

/* Message for the most recent failure on this thread. */
const char* la_last_error(void);

const char* la_version(void);

/* ---- graph constructors ---- */

la_status la_graph_complete(int n, la_graph** out);
la_status la_graph_path(int n, la_graph** out);
la_status la_graph_cycle(int n, la_graph** out);
la_status la_graph_complete_bipartite(int p, int q, la_graph** out);
la_status la_graph_star(int n, la_graph** out);
la_status la_graph_empty(int n, la_graph** out);
la_status la_graph_pineapple(int p, int q, la_graph** out);
la_status la_graph_h_graph(int n, int l, la_graph** out);
la_status la_graph_kk_graph(int n, int l, la_graph** out);
la_status la_graph_core_satellite(int c, int s, int eta, la_graph** out);

/* ---- graph operations ---- */

la_status la_graph_union(const la_graph* g, const la_graph* h, la_graph** out);
la_status la_graph_join(const la_graph* g, const la_graph* h, la_graph** out);
la_status la_graph_cartesian(const la_graph* g, const la_graph* h, la_graph** out);
la_status la_graph_direct(const la_graph* g, const la_graph* h, la_graph** out);
la_status la_graph_strong(const la_graph* g, const la_graph* h, la_graph** out);
la_status la_graph_coalesce(const la_graph* g, int u, const la_graph* h, int v, la_graph** out);
la_status la_graph_splitting(const la_graph* g, la_graph** out);

/* ---- edge-list I/O ----
 * Format: first line is the vertex count; every following non-empty line is
 * "u v" with 0 <= u < v < n; '#' lines are comments. Duplicates and loops
 * are parse errors. */

la_status la_graph_read(const char* path, la_graph** out);
la_status la_graph_write(const la_graph* g, const char* path);
la_status la_graph_from_string(const char* text, la_graph** out);
char* la_graph_to_string(const la_graph* g);

/* ---- structure ---- */

int la_graph_order(const la_graph* g);
int la_graph_size(const la_graph* g);
int la_graph_degree(const la_graph* g, int v); /* -1 on bad vertex */
int la_graph_is_regular(const la_graph* g, int* k);
int la_graph_is_bipartite(const la_graph* g);
int la_graph_is_connected(const la_graph* g);

/* Full structural report (degrees, regularity, bipartition, connectivity,
 * twin classes) as a JSON object. */
char* la_graph_report_json(const la_graph* g);

/* ---- spectra ---- */

/* Eigenvalues of alpha*D + (alpha-1)*A, grouped into multiplicities and
 * sorted descending. */
la_status la_spectrum_lalpha(const la_graph* g, double alpha, la_spectrum** out);

/* Eigenvalues of alpha*D + (1-alpha)*A (the A_alpha companion family). */
la_status la_spectrum_aalpha(const la_graph* g, double alpha, la_spectrum** out);

int la_spectrum_distinct(const la_spectrum* s);        /* number of lines */
int la_spectrum_order(const la_spectrum* s);           /* total multiplicity */
double la_spectrum_value(const la_spectrum* s, int i); /* i-th distinct value */
int la_spectrum_multiplicity(const la_spectrum* s, int i);

/* L_alpha matrix as JSON {"n": ..., "entries": [row-major]} for debugging. */
char* la_lalpha_matrix_json(const la_graph* g, double alpha);

/* ---- characteristic polynomial ----
 * Monic coefficients of det(xI - L_alpha), highest degree first (n+1 values).
 * Fails with LA_ERR_SIZE when n > 20 or capacity < n+1. */

la_status la_charpoly_lalpha(const la_graph* g, double alpha, double* coeffs, int capacity,
                             int* out_len);

/* ---- verification suite ----
 * json_out/table_out may be NULL when not wanted. unexpected_failures gets
 * the count of cases that failed without being marked expected-negative. */

la_status la_verify_default(char** json_out, char** table_out, int* unexpected_failures);

/* Single-theorem run. g_spec/h_spec use the compact grammar: k5, p4, c6, e3,
 * star5, kpq4_2, pine5_3, h5_2, kk5_2, theta3_2_3, er6_1, cer6_1.
 * grid_points <= 0 and tol <= 0 pick per-theorem defaults; u and v are the
 * coalescence endpoints (ignored by other theorems). */
la_status la_verify_case(const char* theorem, const char* g_spec, const char* h_spec,
                         int grid_points, double tol, int u, int v, char** json_out,
                         char** table_out, int* unexpected_failures);

/* ---- memory ---- */

void la_graph_free(la_graph* g);
void la_spectrum_free(la_spectrum* s);
void la_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LALPHA_H */
