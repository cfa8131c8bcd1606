#ifndef TWISTED_DEMAZURE_H
#define TWISTED_DEMAZURE_H

/* Generated by cbindgen from crates/ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code: success.
 */
#define TDM_OK 0

/**
 * Status code: a required pointer argument was NULL.
 */
#define TDM_ERR_NULL_POINTER 1

/**
 * Status code: a string argument was not valid UTF-8.
 */
#define TDM_ERR_INVALID_UTF8 2

/**
 * Status code: a computation panicked; the handle state is unchanged.
 */
#define TDM_ERR_PANIC 3

/**
 * Opaque handle to a computed module (its exact character together with the
 * algebra it lives over).
 */
typedef struct TdmModule TdmModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the most recent error message on this thread, or NULL if no call
 * has failed yet.  The pointer is borrowed: it stays valid until the next
 * failing call on the same thread and must not be freed.
 */
const char *tdm_last_error_message(void);

/**
 * Computes the Demazure module `D(level, λ)` and stores a new handle in
 * `*out`.
 *
 * `type_name` is an algebra name such as `"A4(2)"` or `"D4(3)"`; `level` is
 * a rational literal such as `"1"` or `"3/2"`; `weight`/`weight_len`
 * describe the coefficient vector of λ on the fundamental weights of the
 * finite subalgebra.  On failure, `*out` is untouched and the status code
 * identifies the violated precondition.
 *
 * # Safety
 * `type_name` and `level` must be NUL-terminated; `weight` must point to
 * `weight_len` values (see [`read_weight`]); `out` must be a valid pointer.
 */
int32_t tdm_module_new_demazure(const char *type_name,
                                const char *level,
                                const int64_t *weight,
                                size_t weight_len,
                                struct TdmModule **out);

/**
 * Computes the graded Weyl module `W(λ)` at the distinguished level and
 * stores a new handle in `*out`.
 *
 * # Safety
 * Same contracts as [`tdm_module_new_demazure`], minus the level string.
 */
int32_t tdm_module_new_weyl(const char *type_name,
                            const int64_t *weight,
                            size_t weight_len,
                            struct TdmModule **out);

/**
 * Writes the module's dimension to `*out`.
 *
 * # Safety
 * `module` must be a live handle from this library; `out` must be valid.
 */
int32_t tdm_module_dimension(const struct TdmModule *module, uint64_t *out);

/**
 * Writes the number of distinct exponents in the character to `*out`.
 *
 * # Safety
 * `module` must be a live handle from this library; `out` must be valid.
 */
int32_t tdm_module_num_weights(const struct TdmModule *module, size_t *out);

/**
 * Renders the module as the canonical JSON document and stores a freshly
 * allocated NUL-terminated string in `*out`.  Release it with
 * [`tdm_string_free`].
 *
 * # Safety
 * `module` must be a live handle from this library; `out` must be valid.
 */
int32_t tdm_module_json(const struct TdmModule *module, char **out);

/**
 * Releases a string allocated by this library.  NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a pointer previously returned via [`tdm_module_json`],
 * and must not be used afterwards.
 */
void tdm_string_free(char *s);

/**
 * Releases a module handle.  NULL is a no-op.
 *
 * # Safety
 * `module` must be NULL or a live handle from this library, and must not be
 * used afterwards.
 */
void tdm_module_free(struct TdmModule *module);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTED_DEMAZURE_H */
