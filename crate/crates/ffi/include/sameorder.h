/* C interface to the sameorder finite-group library. */

#ifndef SAMEORDER_H
#define SAMEORDER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum so_status {
  SO_OK = 0,
  SO_PARSE_ERROR = 1,
  SO_PARAM_ERROR = 2,
  SO_BUILD_ERROR = 3,
  SO_ORDER_GATE_ERROR = 4,
  SO_CAP_EXCEEDED = 5,
  SO_UNKNOWN_CHECK = 6,
  SO_IO_ERROR = 7,
  SO_NULL_ARGUMENT = 8,
  SO_INVALID_UTF8 = 9,
  SO_INDEX_OUT_OF_RANGE = 10,
  SO_BUFFER_TOO_SMALL = 11,
  SO_PANIC = 12,
} so_status;

typedef enum so_check_outcome {
  SO_CHECK_PASS = 0,
  SO_CHECK_FAIL = 1,
  SO_CHECK_NOT_APPLICABLE = 2,
  SO_CHECK_SKIPPED = 3,
} so_check_outcome;

// Opaque handle: one built group with its spectrum.
typedef struct so_group so_group;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *so_version(void);

// Static description of a status code.
const char *so_status_describe(enum so_status status);

// Copy the most recent error message for this thread into `buf`
// (NUL-terminated, truncated to `len` bytes).
enum so_status so_last_error_message(char *buf, uintptr_t len);

// Build a group from a spec string (`"A5"`, `"L2(7)"`, `"Sz(8)"`,
// `"file:path"`, ...). `data_dir` may be NULL for the default `./data`;
// `cap` = 0 uses the default enumeration cap. On success `*out` owns the
// handle.
enum so_status so_group_build(const char *spec,
                              const char *data_dir,
                              uintptr_t cap,
                              struct so_group **out);

// Build a group from a generator file. `expected_order` = 0 skips the
// order gate.
enum so_status so_group_ingest(const char *path,
                               uint64_t expected_order,
                               uintptr_t cap,
                               struct so_group **out);

// Release a handle. NULL is a no-op.
void so_group_free(struct so_group *g);

// |G|; 0 for a NULL handle.
uint64_t so_group_order(const struct so_group *g);

// The group's display name, NUL-terminated, truncated to `len` bytes.
enum so_status so_group_name(const struct so_group *g, char *buf, uintptr_t len);

// Number of distinct element orders (spectrum entries).
uintptr_t so_spectrum_size(const struct so_group *g);

// Read spectrum entry `index` (ascending by element order) into
// `order_out`/`count_out`.
enum so_status so_spectrum_entry(const struct so_group *g,
                                 uintptr_t index,
                                 uint64_t *order_out,
                                 uint64_t *count_out);

// |nse(G)|.
uintptr_t so_nse_size(const struct so_group *g);

// Read nse entry `index` (ascending).
enum so_status so_nse_entry(const struct so_group *g, uintptr_t index, uint64_t *out);

// Run one per-group check (`"frobenius"`, `"shen-bound"`, ...) and write
// its outcome.
enum so_status so_check_run(const struct so_group *g,
                            const char *check_id,
                            enum so_check_outcome *outcome_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SAMEORDER_H */
