/* diffdep — exact differential-algebra dependence toolkit.
 *
 * C interface to the core library. All objects are opaque handles created
 * and released through the functions below; every function that can fail
 * returns a dd_status, with a human-readable message available from
 * dd_last_error() (thread local). Output handles and strings are owned by
 * the caller.
 */
#ifndef DIFFDEP_H
#define DIFFDEP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dd_status {
    DD_OK = 0,
    DD_ERR_INVALID_ARGUMENT = 1,
    DD_ERR_PARSE = 2,
    DD_ERR_SIGNATURE = 3,
    DD_ERR_ARITY = 4,
    DD_ERR_DOMAIN = 5,
    DD_ERR_RESOURCE = 6, /* a configured search cap was exceeded */
    DD_ERR_INTERNAL = 7
} dd_status;

typedef struct dd_session dd_session;   /* algebra signature (n vars, m derivations) */
typedef struct dd_poly dd_poly;         /* differential polynomial over Q */
typedef struct dd_ore dd_ore;           /* differential operator */
typedef struct dd_matrix dd_matrix;     /* matrix of operators (Jacobian) */
typedef struct dd_verdict dd_verdict;   /* dependence verdict + certificate */
typedef struct dd_nov dd_nov;           /* Novikov expression and its image */
typedef struct dd_rho_parts dd_rho_parts;
typedef struct dd_basis dd_basis;

const char* dd_version(void);
/* Message for the most recent failure on this thread ("" if none). */
const char* dd_last_error(void);
void dd_string_free(char* s);

dd_status dd_session_new(int32_t num_vars, int32_t num_derivations,
                         dd_session** out);
void dd_session_free(dd_session* s);

/* --- differential polynomials --------------------------------------- */
dd_status dd_poly_parse(const dd_session* s, const char* src, dd_poly** out);
dd_status dd_poly_format(const dd_poly* p, char** out);
void dd_poly_free(dd_poly* p);
dd_status dd_poly_add(const dd_poly* a, const dd_poly* b, dd_poly** out);
dd_status dd_poly_sub(const dd_poly* a, const dd_poly* b, dd_poly** out);
dd_status dd_poly_mul(const dd_poly* a, const dd_poly* b, dd_poly** out);
dd_status dd_poly_pow(const dd_poly* a, int64_t e, dd_poly** out);
/* theta is the exponent vector of the m derivations. */
dd_status dd_poly_derive(const dd_poly* a, const uint32_t* theta, size_t m,
                         dd_poly** out);
int32_t dd_poly_is_zero(const dd_poly* p);
int32_t dd_poly_equal(const dd_poly* a, const dd_poly* b);
/* g over p variables, fs over the target signature; count must equal p. */
dd_status dd_poly_substitute(const dd_poly* g, const dd_poly* const* fs,
                             size_t count, dd_poly** out);
/* values/homogeneous are arrays of length 3: variable degree, derivation
 * weight, rho. homogeneous[i] = 0 marks a non-homogeneous grading; the
 * matching value is then meaningless. Fails on the zero polynomial. */
dd_status dd_poly_degrees(const dd_poly* p, int64_t values[3],
                          int32_t homogeneous[3]);
dd_status dd_poly_degree_in_var(const dd_poly* p, int32_t var, int64_t* out);
dd_status dd_poly_rho_components(const dd_poly* p, dd_rho_parts** out);
size_t dd_rho_parts_count(const dd_rho_parts* r);
dd_status dd_rho_parts_get(const dd_rho_parts* r, size_t i, int64_t* rho,
                           dd_poly** part);
void dd_rho_parts_free(dd_rho_parts* r);

/* --- differential operators ------------------------------------------ */
dd_status dd_ore_parse(const dd_session* s, const char* src, dd_ore** out);
dd_status dd_ore_format(const dd_ore* a, char** out);
void dd_ore_free(dd_ore* a);
dd_status dd_ore_mul(const dd_ore* a, const dd_ore* b, dd_ore** out);
int32_t dd_ore_is_zero(const dd_ore* a);
dd_status dd_ore_order(const dd_ore* a, int64_t* out);
/* Action on a polynomial; fails if the result is not polynomial. */
dd_status dd_ore_apply(const dd_ore* a, const dd_poly* f, dd_poly** out);
/* Common left multiple c*a = d*b != 0 with minimal search order s. */
dd_status dd_ore_lclm(const dd_ore* a, const dd_ore* b, int32_t max_order,
                      dd_ore** c, dd_ore** d, int32_t* s);

/* --- Fox derivatives -------------------------------------------------- */
dd_status dd_fox_gradient(const dd_poly* f, dd_matrix** out); /* 1 x n */
dd_status dd_jacobian(const dd_poly* const* fs, size_t count, dd_matrix** out);
size_t dd_matrix_rows(const dd_matrix* m);
size_t dd_matrix_cols(const dd_matrix* m);
dd_status dd_matrix_get(const dd_matrix* m, size_t row, size_t col, dd_ore** out);
void dd_matrix_free(dd_matrix* m);

/* --- dependence ------------------------------------------------------- */
dd_status dd_depcheck(const dd_poly* const* fs, size_t count,
                      int32_t max_ore_order, dd_verdict** out);
int32_t dd_verdict_dependent(const dd_verdict* v);
size_t dd_verdict_certificate_size(const dd_verdict* v);
dd_status dd_verdict_certificate_get(const dd_verdict* v, size_t i, dd_ore** out);
size_t dd_verdict_pivot_count(const dd_verdict* v);
dd_status dd_verdict_pivot_get(const dd_verdict* v, size_t i, int32_t* row,
                               int32_t* col);
/* Recomputes sum b_i * d(f_i) = 0 from scratch. */
dd_status dd_verdict_verify(const dd_verdict* v, int32_t* ok);
void dd_verdict_free(dd_verdict* v);
dd_status dd_verify_certificate(const dd_poly* const* fs, size_t nfs,
                                const dd_ore* const* cert, size_t ncert,
                                int32_t* ok);
/* Commutative Jacobian rank of all derivatives up to order s. */
dd_status dd_prolongation_rank(const dd_poly* const* fs, size_t count,
                               int32_t s, int64_t* rank, int64_t* total);

/* --- Novikov algebra --------------------------------------------------- */
dd_status dd_nov_parse(const dd_session* s, const char* src, dd_nov** out);
dd_status dd_nov_format(const dd_nov* e, char** out); /* the expression tree */
dd_status dd_nov_body(const dd_nov* e, dd_poly** out);
dd_status dd_nov_scalar(const dd_nov* e, char** out); /* exact rational */
void dd_nov_free(dd_nov* e);
dd_status dd_novcheck(const dd_nov* const* es, size_t count,
                      int32_t max_ore_order, dd_verdict** out);
dd_status dd_nov_basis(const dd_session* s, int64_t weight, dd_basis** out);
size_t dd_basis_count(const dd_basis* b);
dd_status dd_basis_get(const dd_basis* b, size_t i, char** out);
void dd_basis_free(dd_basis* b);

#ifdef __cplusplus
}
#endif

#endif /* DIFFDEP_H */
