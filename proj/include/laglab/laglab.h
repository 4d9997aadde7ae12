/*
 * laglab — Lagrangians and density certificates of uniform hypergraphs.
 *
 * C interface of the shared library. All functions return a laglab_status;
 * LAGLAB_OK means success and anything else leaves a human-readable message
 * in laglab_error_message() (thread-local). Objects returned through out
 * parameters are owned by the caller and released with the matching _free
 * function. Strings returned through char** are released with
 * laglab_string_free.
 */

#ifndef LAGLAB_H
#define LAGLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct laglab_graph laglab_graph; /* opaque immutable hypergraph */

typedef enum laglab_status {
    LAGLAB_OK = 0,
    LAGLAB_ERR_INVALID_ARGUMENT = 1,
    LAGLAB_ERR_PARSE = 2,
    LAGLAB_ERR_IO = 3,
    LAGLAB_ERR_BUDGET = 4, /* exhaustive computation would exceed its budget */
    LAGLAB_ERR_INTERNAL = 5,
} laglab_status;

typedef struct laglab_config {
    uint64_t seed;
    int starts;           /* multistart count, >= 1 */
    int iter_cap;         /* ascent iteration cap per start */
    double kkt_tol;       /* stationarity residual target */
    double value_tie_tol; /* values this close count as equal */
    double delta;         /* density margin */
    double value_tol;     /* report-level lambda-equality tolerance */
    int threads;          /* 0 = auto */
} laglab_config;

typedef struct laglab_opt_result {
    double value;
    double stationarity_residual;
    int converged;
    int iterations;
    int starts_used;
    int support_size;
} laglab_opt_result;

/* 0 = Dense, 1 = NotDense, 2 = Inconclusive */
typedef enum laglab_verdict {
    LAGLAB_DENSE = 0,
    LAGLAB_NOT_DENSE = 1,
    LAGLAB_INCONCLUSIVE = 2,
} laglab_verdict;

const char* laglab_version(void);
const char* laglab_error_message(void);
void laglab_string_free(char* s);

void laglab_config_init(laglab_config* cfg); /* fills in the defaults */

/* ---- graphs ------------------------------------------------------------ */

/* spec grammar: complete:t:r, H1:t..H4:t, cliquetail:t:m, remark24:t, remark62:t */
laglab_status laglab_graph_from_family(const char* spec, laglab_graph** out);
/* edge-list text: "n r" header line, then one edge per line */
laglab_status laglab_graph_from_edgelist(const char* text, laglab_graph** out);
laglab_status laglab_graph_from_file(const char* path, laglab_graph** out);
void laglab_graph_free(laglab_graph* g);

int laglab_graph_vertex_count(const laglab_graph* g);
int laglab_graph_edge_size(const laglab_graph* g);
int laglab_graph_edge_count(const laglab_graph* g);
laglab_status laglab_graph_to_edgelist(const laglab_graph* g, char** out_text);

/* ---- lagrangian --------------------------------------------------------- */

/* weights may be NULL; otherwise it receives the witness weighting and must
 * hold laglab_graph_vertex_count(g) doubles */
laglab_status laglab_maximize(const laglab_graph* g, const laglab_config* cfg,
                              laglab_opt_result* out, double* weights, size_t weights_len);

laglab_status laglab_evaluate(const laglab_graph* g, const double* weights, size_t len,
                              double* out_value);

/* ---- density ------------------------------------------------------------ */

/* JSON: {status, certificate_kind, certificate_data, lambda, margin,
 * theorem_id?, delta} */
laglab_status laglab_density_json(const laglab_graph* g, const laglab_config* cfg,
                                  char** out_json);
laglab_status laglab_density_status(const laglab_graph* g, const laglab_config* cfg,
                                    laglab_verdict* out_status);

/* ---- verification sweeps ------------------------------------------------ */

/*
 * theorem_id: T3.1, T3.2, C3.3, T4.1, T4.5, P4.6a, P4.6b, T5.1, T5.2,
 *             C6.1 (conjecture probe; set r and samples), R2.4, R6.2 (demos).
 * m_lo/m_hi: -1 selects the rule's own edge-count window.
 * out_all_pass may be NULL.
 */
laglab_status laglab_verify_json(const char* theorem_id, int t_lo, int t_hi, long long m_lo,
                                 long long m_hi, int r, int samples, const laglab_config* cfg,
                                 char** out_json, int* out_all_pass);

/* CSV rendering (params, predicted, computed, lambda, margin, pass) of a
 * report produced by laglab_verify_json */
laglab_status laglab_report_csv(const char* report_json, char** out_csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LAGLAB_H */
