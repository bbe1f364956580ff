/*
 * kmcrystal -- crystals of symmetrizable Kac-Moody algebras realized as
 * rigged configurations: crystal operators, bounded B(infinity) / B(lambda)
 * generation, Dynkin-diagram folding to simply-laced type with
 * virtualization checks, and the rigged-configuration Littlewood-Richardson
 * rule.
 *
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function.  Strings returned as char*
 * are heap-allocated and released with kmc_string_free.  On failure a
 * function returns a status other than KMC_OK, leaves its out-parameters
 * untouched, and stores a thread-local message retrievable with
 * kmc_last_error().
 *
 * All handles are immutable after creation, so sharing them across threads
 * is safe; the last-error buffer is per-thread.
 */
#ifndef KMCRYSTAL_H
#define KMCRYSTAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kmc_status {
  KMC_OK = 0,
  KMC_ERR_PARSE = 1,
  KMC_ERR_BAD_DIAGONAL = 2,
  KMC_ERR_POSITIVE_OFF_DIAGONAL = 3,
  KMC_ERR_ASYMMETRIC_ZERO_PATTERN = 4,
  KMC_ERR_NOT_SYMMETRIZABLE = 5,
  KMC_ERR_UNKNOWN_INDEX = 6,
  KMC_ERR_NOT_FINITE_TYPE = 7,
  KMC_ERR_NOT_DOMINANT = 8,
  KMC_ERR_STRING_NOT_FOUND = 9,
  KMC_ERR_NON_INTEGRAL_C = 10,
  KMC_ERR_MULTI_EDGE = 11,
  KMC_ERR_NOT_IN_VIRTUAL_IMAGE = 12,
  KMC_ERR_INCOMPARABLE_DEPTHS = 13,
  KMC_ERR_INVALID_ARGUMENT = 14,
  KMC_ERR_PROPERTY_VIOLATION = 15,
  KMC_ERR_INTERNAL = 16
} kmc_status;

typedef struct kmc_cartan_s kmc_cartan;
typedef struct kmc_graph_s kmc_graph;
typedef struct kmc_folding_s kmc_folding;

const char *kmc_version(void);
const char *kmc_status_name(kmc_status status);

/* Message for the most recent failure on the calling thread; never NULL. */
const char *kmc_last_error(void);

void kmc_string_free(char *text);

/*
 * Cartan matrices.  `spec` is either a named type ("A2", "B3", "G2", and
 * "A2~" for untwisted affine) or JSON: {"labels": [...], "matrix": [[...]]}
 * or a bare [[...]] array.  Rows follow A[i][j] = <h_i, alpha_j>.
 */
kmc_status kmc_cartan_parse(const char *spec, kmc_cartan **out);
void kmc_cartan_free(kmc_cartan *cartan);
long long kmc_cartan_rank(const kmc_cartan *cartan);
char *kmc_cartan_to_json(const kmc_cartan *cartan);

/* Fills d[0..rank) with the canonical symmetrizer (DA symmetric, gcd 1). */
kmc_status kmc_cartan_symmetrizer(const kmc_cartan *cartan, long long *d);

/* Exact Weyl dimension of B(lambda); finite type only. */
kmc_status kmc_weyl_dimension(const kmc_cartan *cartan,
                              const long long *lambda, long long *dim);

/*
 * Crystal graph generation from the empty rigged configuration.
 * lambda: rank-many dominant coefficients over the fundamental weights, or
 * NULL for B(infinity) (then depth >= 0 is required).  depth < 0 means
 * unbounded; max_nodes <= 0 selects the default safety cap.
 */
kmc_status kmc_generate(const kmc_cartan *cartan, const long long *lambda,
                        long long depth, long long max_nodes, kmc_graph **out);
void kmc_graph_free(kmc_graph *graph);
long long kmc_graph_node_count(const kmc_graph *graph);
long long kmc_graph_edge_count(const kmc_graph *graph);
int kmc_graph_is_complete(const kmc_graph *graph);
char *kmc_graph_to_json(const kmc_graph *graph);
char *kmc_graph_to_dot(const kmc_graph *graph);
char *kmc_graph_to_text(const kmc_graph *graph);

/*
 * Diagram folding to simply-laced type (gamma identically 1) built from the
 * canonical symmetrizer.
 */
kmc_status kmc_folding_build(const kmc_cartan *cartan, kmc_folding **out);
void kmc_folding_free(kmc_folding *folding);
long long kmc_folding_vertex_count(const kmc_folding *folding);
long long kmc_folding_edge_count(const kmc_folding *folding);
char *kmc_folding_to_json(const kmc_folding *folding);
char *kmc_folding_to_dot(const kmc_folding *folding);

/*
 * Structural verification report (automorphism, edge counts, c <= N, orbit
 * independence) as JSON with a top-level "passed" flag.  Returns KMC_OK
 * even when checks fail; the report carries the failures.
 */
kmc_status kmc_folding_verify(const kmc_folding *folding,
                              const kmc_cartan *cartan, char **report_json);

/*
 * Virtualization sweep over RC(infinity) up to depth: operator commutation
 * with the virtualization map, epsilon/phi scaling, weight diagram, image
 * membership.  Returns KMC_OK and a report when everything holds,
 * KMC_ERR_PROPERTY_VIOLATION (report still written) otherwise.
 */
kmc_status kmc_virtcheck(const kmc_cartan *cartan, long long depth,
                         char **report_json);

/*
 * Littlewood-Richardson decomposition of B(mu) (x) B(lambda).  depth < 0
 * asks for complete enumeration of RC(mu); a bound flags the result as
 * partial when hit.  Output JSON: {"components": [{"weight", "multiplicity",
 * "witnesses"}...], "partial": bool}.
 */
kmc_status kmc_decompose(const kmc_cartan *cartan, const long long *mu,
                         const long long *lambda, long long depth,
                         char **result_json);

#ifdef __cplusplus
}
#endif

#endif /* KMCRYSTAL_H */
