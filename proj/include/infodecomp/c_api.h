/* C-compatible boundary of the infodecomp library, intended for scripting
 * language wrappers. All functions return an idc_status; on failure the
 * message is available from idc_last_error() on the calling thread. */
#ifndef INFODECOMP_C_API_H
#define INFODECOMP_C_API_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Values 1..17 mirror infodecomp::ErrorCode one to one. */
typedef enum idc_status {
    IDC_OK = 0,
    IDC_ERR_INVALID_SPEC = 1,
    IDC_ERR_DUPLICATE_DIM = 2,
    IDC_ERR_WRONG_STATE = 3,
    IDC_ERR_WIDTH_MISMATCH = 4,
    IDC_ERR_NON_FINITE = 5,
    IDC_ERR_EMPTY_DATA = 6,
    IDC_ERR_DEGENERATE_RANGE = 7,
    IDC_ERR_UNKNOWN_DIM = 8,
    IDC_ERR_BAD_SHIFT = 9,
    IDC_ERR_BAD_COORDS = 10,
    IDC_ERR_OVERLAPPING_GROUPS = 11,
    IDC_ERR_ZERO_PROBABILITY = 12,
    IDC_ERR_UNSUPPORTED_SOURCE_COUNT = 13,
    IDC_ERR_LENGTH_MISMATCH = 14,
    IDC_ERR_BAD_LAG = 15,
    IDC_ERR_INDEX_OUT_OF_RANGE = 16,
    IDC_ERR_TOO_FEW_TRIALS = 17,
    IDC_ERR_NULL_ARGUMENT = 100,
    IDC_ERR_INTERNAL = 101
} idc_status;

typedef struct idc_dataset idc_dataset;

typedef struct idc_measure {
    double value_bits;
    int clamped;
} idc_measure;

#define IDC_MAX_ATOMS 18
#define IDC_NODE_NAME_LEN 16

typedef struct idc_pid_result {
    size_t n_atoms;
    double total_mi_bits;
    double atoms[IDC_MAX_ATOMS];
    double raw_atoms[IDC_MAX_ATOMS];
    char names[IDC_MAX_ATOMS][IDC_NODE_NAME_LEN];
} idc_pid_result;

typedef struct idc_te_result {
    double te_bits;
    double cmi_bits;
    size_t rows;
} idc_te_result;

const char* idc_last_error(void);

idc_status idc_dataset_create(size_t shifts, idc_dataset** out);
void idc_dataset_destroy(idc_dataset* ds);

/* Per-dim arrays have n_dims entries. `bins` and `discrete` may be NULL
 * (bins default to 1, dims default to continuous). A dim uses an explicit
 * range only when both range_min and range_max are non-NULL and the entry
 * is not NaN. */
idc_status idc_declare_variable(idc_dataset* ds, const size_t* dims, size_t n_dims, const int* bins,
                                const double* range_min, const double* range_max,
                                const int* discrete, size_t* var_id);
idc_status idc_add_sample(idc_dataset* ds, const double* row, size_t width);
idc_status idc_add_samples(idc_dataset* ds, const double* rows, size_t n_rows, size_t width);
idc_status idc_finalize(idc_dataset* ds);

int idc_is_finalized(const idc_dataset* ds);
size_t idc_row_count(const idc_dataset* ds);
size_t idc_clamp_count(const idc_dataset* ds);

/* per_shift may be NULL; otherwise it receives `shifts` values. */
idc_status idc_entropy(const idc_dataset* ds, const size_t* x, size_t nx, idc_measure* out,
                       double* per_shift);
idc_status idc_conditional_entropy(const idc_dataset* ds, const size_t* x, size_t nx,
                                   const size_t* y, size_t ny, idc_measure* out, double* per_shift);
idc_status idc_mutual_info(const idc_dataset* ds, const size_t* x, size_t nx, const size_t* y,
                           size_t ny, idc_measure* out, double* per_shift);
idc_status idc_conditional_mutual_info(const idc_dataset* ds, const size_t* x, size_t nx,
                                       const size_t* y, size_t ny, const size_t* z, size_t nz,
                                       idc_measure* out, double* per_shift);

idc_status idc_pid(const idc_dataset* ds, const size_t* target, size_t n_target,
                   const size_t* const* sources, const size_t* source_sizes, size_t n_sources,
                   idc_pid_result* out);

/* discrete != 0 bins each series by exact value; otherwise `bins` equal
 * bins over the observed range of each series. */
idc_status idc_transfer_entropy(const double* x, const double* y, size_t length, size_t lag,
                                int discrete, int bins, size_t shifts, idc_te_result* out);

#ifdef __cplusplus
}
#endif

#endif /* INFODECOMP_C_API_H */
