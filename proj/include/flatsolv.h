/*
 * flatsolv - exact models of flat solvmanifolds: lattice existence,
 * holonomy groups, minimal-dimension constructions and low-dimension
 * enumeration.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns a status code. Functions with a char** output parameter allocate
 * a NUL-terminated JSON document that the caller releases with
 * fsv_string_free. On FSV_ERROR the document is {"error": "<message>"}; on
 * FSV_OBSTRUCTION it describes why no lattice exists.
 */
#ifndef FLATSOLV_H
#define FLATSOLV_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fsv_status {
    FSV_OK = 0,
    FSV_ERROR = 1,
    FSV_OBSTRUCTION = 2
} fsv_status;

/* Opaque rotation data: a center dimension plus rational turn fractions. */
typedef struct fsv_spectrum fsv_spectrum;

const char *fsv_version(void);

void fsv_string_free(char *s);

/* ---- arithmetic ------------------------------------------------------- */

fsv_status fsv_euler_phi(uint64_t n, uint64_t *out);
fsv_status fsv_hiller_phi(uint64_t n, uint64_t *out);
/* {"n": n, "coefficients": [...], "degree": d, "text": "..."} */
fsv_status fsv_cyclotomic(uint64_t n, char **json_out);

/* ---- spectra ---------------------------------------------------------- */

/* Parses "s=<int>;f=<p>/<q>,...". On failure returns FSV_ERROR and, when
 * error_out is non-NULL, an error document. */
fsv_status fsv_spectrum_parse(const char *text, fsv_spectrum **out, char **error_out);
void fsv_spectrum_free(fsv_spectrum *sp);
/* Canonical text form (folded, sorted); caller frees. */
char *fsv_spectrum_text(const fsv_spectrum *sp);

/* Certificate (FSV_OK) or obstruction (FSV_OBSTRUCTION). */
fsv_status fsv_spectrum_check(const fsv_spectrum *sp, char **json_out);
fsv_status fsv_spectrum_holonomy(const fsv_spectrum *sp, char **json_out);
fsv_status fsv_spectrum_lattice(const fsv_spectrum *sp, double tolerance, char **json_out);

/* ---- constructions ----------------------------------------------------- */

/* Minimal dimension of a one-block quotient with cyclic holonomy of order n. */
fsv_status fsv_min_dim(uint64_t n, uint64_t *out);
/* Witness spectrum of that minimal dimension. */
fsv_status fsv_construct_cyclic(uint64_t n, char **json_out);
/* Product witness for the abelian group with the given cyclic orders;
 * kahler != 0 pads odd dimension with a circle factor. */
fsv_status fsv_construct_abelian(const uint64_t *orders, size_t count, int kahler,
                                 char **json_out);

/* ---- enumeration ------------------------------------------------------- */

/* Holonomy report for manifold dimension 3..6. */
fsv_status fsv_enumerate(uint32_t dim, char **json_out);
fsv_status fsv_platycosms(char **json_out);
fsv_status fsv_admissible_pairs_dim5(char **json_out);

/* Recomputes the embedded golden tables; FSV_OK iff everything matches. */
fsv_status fsv_seed_check(char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* FLATSOLV_H */
