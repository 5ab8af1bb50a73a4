/* C interface to the exact fermion Fock space library.
 *
 * All functions return an error code; results come back through out
 * parameters. Handles are opaque and must be released with the matching
 * _free function; strings returned through char** are heap copies owned
 * by the caller and released with vf_string_free. vf_last_error() gives
 * a human-readable message for the most recent failure on this thread.
 */
#ifndef VIRFOCK_H
#define VIRFOCK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define VF_OK 0
#define VF_ERR_PARSE 1
#define VF_ERR_DOMAIN 2
#define VF_ERR_RADICAND_MISMATCH 3
#define VF_ERR_INVALID_ARG 4
#define VF_ERR_INTERNAL 5

typedef struct vf_surd vf_surd;
typedef struct vf_state vf_state;
typedef struct vf_series vf_series;

const char* vf_last_error(void);
void vf_string_free(char* s);

/* --- exact scalars: a + b*sqrt(d), text form "p/q" or "p/q+r/s*sqrt(d)" --- */
int vf_surd_parse(const char* text, vf_surd** out);
int vf_surd_from_rational(long num, long den, vf_surd** out);
int vf_surd_str(const vf_surd* s, char** out);
int vf_surd_add(const vf_surd* a, const vf_surd* b, vf_surd** out);
int vf_surd_sub(const vf_surd* a, const vf_surd* b, vf_surd** out);
int vf_surd_mul(const vf_surd* a, const vf_surd* b, vf_surd** out);
int vf_surd_div(const vf_surd* a, const vf_surd* b, vf_surd** out);
int vf_surd_sign(const vf_surd* s, int* out);
int vf_surd_equal(const vf_surd* a, const vf_surd* b, int* out);
void vf_surd_free(vf_surd* s);

/* --- Fock space states ------------------------------------------------- */
/* monomial phi_{-n_k-1/2}...phi_{-n_1-1/2}|0> from occupations n_i >= 0   */
int vf_state_monomial(const int* occupations, size_t len, vf_state** out);
/* minimal vector of the given charge sector                               */
int vf_state_vacuum_like(int charge, vf_state** out);
/* applies a mode operator given in text form: "phi[t/2]" (t odd), "h[k]",
 * "Lhalf[n]", "Lone[n]", "L[n;lambda=<surd>;b=<surd>]"                    */
int vf_state_apply(const char* op_text, const vf_state* s, vf_state** out);
int vf_state_add(const vf_state* a, const vf_state* b, vf_state** out);
int vf_state_scale(const vf_state* s, const vf_surd* c, vf_state** out);
int vf_state_is_zero(const vf_state* s, int* out);
int vf_state_coeff(const vf_state* s, const int* occupations, size_t len,
                   vf_surd** out);
int vf_state_str(const vf_state* s, char** out);
void vf_state_free(vf_state* s);

/* --- characters and q-series ------------------------------------------- */
/* product forms: "jac1", "euler-even", "neg-q-half"
 * sum forms:     "jac2", "jacid-theta", "char-half-even", "char-half-odd"
 * q_order is in quarter-integer units of the q-exponent.                  */
int vf_series_product(const char* name, long q_order, int z_window,
                      vf_series** out);
int vf_series_sum(const char* name, long q_order, int z_window,
                  vf_series** out);
/* trace of q^{Lhalf_0} z^{h_0}; sector: "full", "even", "odd", or a charge
 * given as a decimal integer string                                       */
int vf_series_trace(const char* sector, long q_order, int z_window,
                    vf_series** out);
/* coefficient of z^z_exp q^{q_quarters/4} as canonical rational text      */
int vf_series_coeff(const vf_series* s, long q_quarters, int z_exp,
                    char** out);
int vf_series_equal(const vf_series* a, const vf_series* b, int* out);
int vf_series_json(const vf_series* s, char** out);
int vf_series_csv(const vf_series* s, char** out);
void vf_series_free(vf_series* s);

/* --- verification driver ----------------------------------------------- */
/* config_json keys: command (required), energy_cutoff, q_order, z_window,
 * mode_window, lambda, b, sector, max_level, j_max, discrete_max_m, format.
 * On success *report_out holds the rendered report and *verdict_out is 1
 * when every check passed, 0 otherwise.                                   */
int vf_run(const char* config_json, char** report_out, int* verdict_out);

#ifdef __cplusplus
}
#endif

#endif /* VIRFOCK_H */
