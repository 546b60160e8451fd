#include <cmath>
#include <cstring>
#include <string>

#include "infodecomp/c_api.h"
#include "infodecomp/dynamics.hpp"
#include "infodecomp/error.hpp"

using namespace infodecomp;

struct idc_dataset {
    DataSet ds;
};

namespace {

thread_local std::string last_error;

template <class F>
idc_status guarded(F&& f) noexcept {
    try {
        last_error.clear();
        f();
        return IDC_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<idc_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        last_error = e.what();
        return IDC_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return IDC_ERR_INTERNAL;
    }
}

idc_status null_argument() {
    last_error = "required pointer argument is null";
    return IDC_ERR_NULL_ARGUMENT;
}

DimGroup group(const size_t* dims, size_t n) {
    if (n > 0 && dims == nullptr) throw Error(ErrorCode::InvalidSpec, "null dim array");
    return DimGroup(dims, dims + n);
}

void store(const MeasureValue& v, idc_measure* out, double* per_shift) {
    out->value_bits = v.value_bits;
    out->clamped = v.clamped ? 1 : 0;
    if (per_shift)
        for (std::size_t k = 0; k < v.per_shift_values.size(); ++k) per_shift[k] = v.per_shift_values[k];
}

}  // namespace

extern "C" {

const char* idc_last_error(void) { return last_error.c_str(); }

idc_status idc_dataset_create(size_t shifts, idc_dataset** out) {
    if (!out) return null_argument();
    return guarded([&] { *out = new idc_dataset{DataSet(shifts)}; });
}

void idc_dataset_destroy(idc_dataset* ds) { delete ds; }

idc_status idc_declare_variable(idc_dataset* ds, const size_t* dims, size_t n_dims, const int* bins,
                                const double* range_min, const double* range_max, const int* discrete,
                                size_t* var_id) {
    if (!ds || !dims) return null_argument();
    return guarded([&] {
        VariableSpec spec;
        spec.dims.assign(dims, dims + n_dims);
        for (size_t i = 0; i < n_dims; ++i) {
            spec.bins_per_dim.push_back(bins ? bins[i] : 1);
            spec.is_discrete_per_dim.push_back(discrete && discrete[i] != 0);
            if (range_min && range_max && !std::isnan(range_min[i]) && !std::isnan(range_max[i]))
                spec.range_per_dim.emplace_back(Range{range_min[i], range_max[i]});
            else
                spec.range_per_dim.emplace_back(std::nullopt);
        }
        const VarId id = ds->ds.declare_variable(spec);
        if (var_id) *var_id = id.value;
    });
}

idc_status idc_add_sample(idc_dataset* ds, const double* row, size_t width) {
    return idc_add_samples(ds, row, 1, width);
}

idc_status idc_add_samples(idc_dataset* ds, const double* rows, size_t n_rows, size_t width) {
    if (!ds || (!rows && n_rows * width > 0)) return null_argument();
    return guarded([&] { ds->ds.add_samples(std::span<const double>(rows, n_rows * width), width); });
}

idc_status idc_finalize(idc_dataset* ds) {
    if (!ds) return null_argument();
    return guarded([&] { ds->ds.finalize(); });
}

int idc_is_finalized(const idc_dataset* ds) { return ds && ds->ds.finalized() ? 1 : 0; }

size_t idc_row_count(const idc_dataset* ds) { return ds ? ds->ds.row_count() : 0; }

size_t idc_clamp_count(const idc_dataset* ds) { return ds ? static_cast<size_t>(ds->ds.clamp_count()) : 0; }

idc_status idc_entropy(const idc_dataset* ds, const size_t* x, size_t nx, idc_measure* out, double* per_shift) {
    if (!ds || !out) return null_argument();
    return guarded([&] { store(entropy(ds->ds, group(x, nx)), out, per_shift); });
}

idc_status idc_conditional_entropy(const idc_dataset* ds, const size_t* x, size_t nx, const size_t* y, size_t ny,
                                   idc_measure* out, double* per_shift) {
    if (!ds || !out) return null_argument();
    return guarded([&] { store(conditional_entropy(ds->ds, group(x, nx), group(y, ny)), out, per_shift); });
}

idc_status idc_mutual_info(const idc_dataset* ds, const size_t* x, size_t nx, const size_t* y, size_t ny,
                           idc_measure* out, double* per_shift) {
    if (!ds || !out) return null_argument();
    return guarded([&] { store(mutual_info(ds->ds, group(x, nx), group(y, ny)), out, per_shift); });
}

idc_status idc_conditional_mutual_info(const idc_dataset* ds, const size_t* x, size_t nx, const size_t* y, size_t ny,
                                       const size_t* z, size_t nz, idc_measure* out, double* per_shift) {
    if (!ds || !out) return null_argument();
    return guarded([&] {
        store(conditional_mutual_info(ds->ds, group(x, nx), group(y, ny), group(z, nz)), out, per_shift);
    });
}

idc_status idc_pid(const idc_dataset* ds, const size_t* target, size_t n_target, const size_t* const* sources,
                   const size_t* source_sizes, size_t n_sources, idc_pid_result* out) {
    if (!ds || !out || (n_sources > 0 && (!sources || !source_sizes))) return null_argument();
    return guarded([&] {
        std::vector<DimGroup> groups;
        for (size_t i = 0; i < n_sources; ++i) groups.push_back(group(sources[i], source_sizes[i]));
        const PIDResult r = pid_decompose(ds->ds, group(target, n_target), groups);
        *out = idc_pid_result{};
        out->n_atoms = r.atoms.size();
        out->total_mi_bits = r.total_mi.value_bits;
        for (size_t i = 0; i < r.atoms.size(); ++i) {
            out->atoms[i] = r.atoms[i];
            out->raw_atoms[i] = r.raw_atoms[i];
            const std::string name = r.lattice->node(i).name();
            std::strncpy(out->names[i], name.c_str(), IDC_NODE_NAME_LEN - 1);
        }
    });
}

idc_status idc_transfer_entropy(const double* x, const double* y, size_t length, size_t lag, int discrete, int bins,
                                size_t shifts, idc_te_result* out) {
    if (!out || ((!x || !y) && length > 0)) return null_argument();
    return guarded([&] {
        TransferEntropyConfig cfg;
        cfg.lag = lag;
        cfg.shifts = shifts;
        cfg.source = SeriesBinning{discrete != 0, bins, std::nullopt};
        cfg.target = cfg.source;
        const auto r = transfer_entropy(std::span<const double>(x, length), std::span<const double>(y, length), cfg);
        out->te_bits = r.te_bits;
        out->cmi_bits = r.cmi_bits;
        out->rows = r.rows;
    });
}

}  // extern "C"
