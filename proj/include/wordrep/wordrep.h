/* C interface to the wordrep library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char ** out-parameters are heap allocated and
 * released with wr_string_free. Every function returns a wr_status; on an
 * error status wr_last_error() describes the failure for the calling thread.
 * WR_OK and WR_FALSE are both successful calls: WR_FALSE means the checked
 * property does not hold.
 *
 * Letter sets and single letters are passed as text in either word format,
 * e.g. "1 2 3'" or "123'".
 */
#ifndef WORDREP_H
#define WORDREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WR_API __declspec(dllexport)
#else
#  define WR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wr_word wr_word;
typedef struct wr_graph wr_graph;
typedef struct wr_outcome wr_outcome;

typedef enum wr_status {
    WR_OK = 0,
    WR_FALSE = 1,
    WR_ERR_INVALID_ARGUMENT = 2,
    WR_ERR_PARSE = 3,
    WR_ERR_PRECONDITION = 4,
    WR_ERR_INTERNAL = 5
} wr_status;

typedef enum wr_word_format {
    WR_FORMAT_AUTO = 0,
    WR_FORMAT_TOKEN = 1,
    WR_FORMAT_COMPACT = 2
} wr_word_format;

typedef struct wr_search_options {
    double budget_seconds;   /* per level; <= 0 means unlimited */
    unsigned threads;        /* 0 is treated as 1 */
    int deterministic;       /* nonzero forces a single thread */
} wr_search_options;

WR_API const char * wr_last_error(void);
WR_API void wr_string_free(char * s);
WR_API const char * wr_version(void);

/* Words */
WR_API wr_status wr_word_parse(const char * text, wr_word_format format, wr_word ** out);
WR_API void wr_word_free(wr_word * w);
WR_API size_t wr_word_length(const wr_word * w);
/* Compact output falls back to token form when an index exceeds 9. */
WR_API wr_status wr_word_to_string(const wr_word * w, int compact, char ** out);
/* WR_FALSE when the word is not uniform. */
WR_API wr_status wr_word_uniformity(const wr_word * w, size_t * k);
WR_API wr_status wr_word_cyclic_shift(const wr_word * w, size_t shift, wr_word ** out);
WR_API wr_status wr_word_alternates(const wr_word * w, const char * x, const char * y);
WR_API wr_status wr_word_induced_graph(const wr_word * w, wr_graph ** out);
/* WR_FALSE when w does not represent g; diagnostic (optional) explains why. */
WR_API wr_status wr_word_represents(const wr_word * w, const wr_graph * g, char ** diagnostic);

/* Graphs */
/* warnings (optional) receives newline-separated warnings, possibly empty. */
WR_API wr_status wr_graph_parse_edge_list(const char * text, wr_graph ** out, char ** warnings);
WR_API wr_status wr_graph_crown(uint32_t n, wr_graph ** out);
WR_API wr_status wr_graph_complete(uint32_t m, wr_graph ** out);
WR_API wr_status wr_graph_complete_bipartite(uint32_t p, uint32_t q, wr_graph ** out);
WR_API void wr_graph_free(wr_graph * g);
WR_API size_t wr_graph_vertex_count(const wr_graph * g);
WR_API size_t wr_graph_edge_count(const wr_graph * g);
WR_API wr_status wr_graph_to_edge_list(const wr_graph * g, char ** out);
WR_API wr_status wr_graph_to_dot(const wr_graph * g, char ** out);
WR_API wr_status wr_graph_equal(const wr_graph * a, const wr_graph * b);
/* Neighbours of vertex as a token-form letter list, e.g. "2 3". */
WR_API wr_status wr_graph_neighborhood(const wr_graph * g, const char * vertex, char ** out);

/* Constructions */
WR_API wr_status wr_represent_crown(uint32_t n, wr_word ** out);
WR_API wr_status wr_halving_crown_word(uint32_t n, wr_word ** out);
WR_API wr_status wr_permutation_concatenation_word(uint32_t n, wr_word ** out);

/* Search */
WR_API wr_status wr_exists_k_word(const wr_graph * g, size_t k, const wr_search_options * options,
        wr_outcome ** out);
WR_API wr_status wr_repnum(const wr_graph * g, size_t k_max, const wr_search_options * options,
        wr_outcome ** out);
WR_API void wr_outcome_free(wr_outcome * o);
WR_API size_t wr_outcome_k(const wr_outcome * o);
/* WR_FALSE (and *out = NULL) when the outcome carries no witness. */
WR_API wr_status wr_outcome_witness(const wr_outcome * o, wr_word ** out);
WR_API int wr_outcome_exhaustive(const wr_outcome * o);
WR_API int wr_outcome_budget_hit(const wr_outcome * o);
WR_API uint64_t wr_outcome_nodes(const wr_outcome * o);
WR_API wr_status wr_outcome_json(const wr_outcome * o, char ** out);

/* Split analysis; every report is a JSON document. */
/* WR_FALSE when the set is not splittable (json is then NULL). */
WR_API wr_status wr_analyze_split(const wr_word * w, const char * set, char ** json);
WR_API wr_status wr_analyze_neighborhood(const wr_word * w, const wr_graph * g, const char * vertex, char ** json);
/* WR_FALSE when violations were found. */
WR_API wr_status wr_analyze_edge_forcing(const wr_word * w, const wr_graph * g, const char * set, char ** json);
WR_API wr_status wr_analyze_block_span(const wr_word * w, const char * set, const char * letter, size_t first_block,
        size_t blocks, size_t * count, char ** json);
/* WR_FALSE when some letter of the set opens or closes no block. */
WR_API wr_status wr_analyze_endpoints(const wr_word * w, const char * set, char ** json);

#ifdef __cplusplus
}
#endif

#endif
