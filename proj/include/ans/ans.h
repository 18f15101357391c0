/* Abstract numeration systems on regular languages: C interface.
 *
 * Every function returns an ans_status. On failure, ans_last_error() gives a
 * message for the calling thread. Strings returned through char** are owned
 * by the caller and released with ans_string_free. Big integers cross the
 * interface as decimal strings.
 */
#ifndef ANS_ANS_H
#define ANS_ANS_H

#include <stddef.h>

#if defined(ANS_BUILDING_LIBRARY)
#define ANS_API __attribute__((visibility("default")))
#else
#define ANS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ans_status {
  ANS_OK = 0,
  ANS_E_INVALID_ARGUMENT = 1,
  ANS_E_PARSE = 2,
  ANS_E_INVALID_SPEC = 3,
  ANS_E_NOT_SUBSET = 4,
  ANS_E_REJECTED_WORD = 5,
  ANS_E_EMPTY_LANGUAGE = 6,
  ANS_E_FINITE_LANGUAGE = 7,
  ANS_E_OUT_OF_RANGE = 8,
  ANS_E_NO_RECURRENCE = 9,
  ANS_E_INFEASIBLE = 10,
  ANS_E_FINITE_FIXED_POINT = 11,
  ANS_E_NO_SET = 12,
  ANS_E_INTERNAL = 13
} ans_status;

/* A numeration system, optionally with a recognizable set. */
typedef struct ans_system ans_system;

ANS_API const char* ans_last_error(void);
ANS_API const char* ans_status_name(ans_status status);
ANS_API void ans_string_free(char* s);

ANS_API ans_status ans_system_load_file(const char* path, ans_system** out);
ANS_API ans_status ans_system_load_text(const char* text, ans_system** out);
/* family: base, unary, bounded, fibonacci, squares, rational_power, logpoly,
 * inverse_logpoly. */
ANS_API ans_status ans_system_construct(const char* family, const long* params, size_t nparams,
                                        ans_system** out);
ANS_API void ans_system_free(ans_system* system);

ANS_API ans_status ans_system_to_text(const ans_system* system, char** out);
ANS_API int ans_system_has_set(const ans_system* system);

ANS_API ans_status ans_rep(const ans_system* system, const char* n, char** word);
ANS_API ans_status ans_val(const ans_system* system, const char* word, char** n);

/* t_X(n), membership of m in X. */
ANS_API ans_status ans_term(const ans_system* system, const char* n, char** t);
ANS_API ans_status ans_contains(const ans_system* system, const char* m, int* member);

/* Calls back with (n, t_X(n)) for n in [from, to]; a nonzero return from the
 * callback stops the enumeration. */
typedef int (*ans_term_callback)(void* user, const char* n, const char* t);
ANS_API ans_status ans_enumerate(const ans_system* system, const char* from, const char* to,
                                 ans_term_callback callback, void* user);

/* which: 0 for L, 1 for rep_S(X). */
ANS_API ans_status ans_counts_csv(const ans_system* system, int which, size_t n_max, char** csv);
ANS_API ans_status ans_signature(const ans_system* system, int which, char** line,
                                 char** constants);
/* Class line; ANS_E_INFEASIBLE when the signatures violate the sublanguage
 * constraint (the message names the clause). */
ANS_API ans_status ans_predict(const ans_system* system, char** line);

/* Runs the lemma checks, the file's expect: lines and optionally the
 * empirical fit. *all_pass is 1 iff every check passed. */
ANS_API ans_status ans_verify(const ans_system* system, size_t n_max, int fit, unsigned long seed,
                              char** report, int* all_pass);

/* Bracket k with F(k) <= n < F(k+1); -1 below the first bracket. */
ANS_API ans_status ans_bracket(const ans_system* system, const char* n, long* k);

/* Trace for the target Θ(n/(log n)^k); *infeasible is 1 when refuted. */
ANS_API ans_status ans_impossibility(long k, char** trace, int* infeasible);

/* μ_A of the product automaton, the coding g and the first F values. */
ANS_API ans_status ans_morphism(const ans_system* system, size_t n_max, char** text);

#ifdef __cplusplus
}
#endif

#endif
