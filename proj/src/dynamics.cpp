#include <algorithm>
#include <exception>
#include <string>

#include "infodecomp/dynamics.hpp"
#include "infodecomp/error.hpp"

namespace infodecomp {

namespace {

VariableSpec series_spec(std::size_t column, const SeriesBinning& b, std::span<const double> series) {
    if (b.discrete) return VariableSpec::discrete(column);
    std::optional<Range> range = b.range;
    if (!range && !series.empty()) {
        const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
        if (*lo < *hi) range = Range{*lo, *hi};
    }
    return VariableSpec::continuous(column, b.bins, range);
}

}  // namespace

std::vector<std::array<double, 3>> lag_embed(std::span<const double> x, std::span<const double> y, std::size_t lag) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "lag_embed: series lengths differ (" + std::to_string(x.size()) +
                                                   " vs " + std::to_string(y.size()) + ")");
    if (lag < 1 || lag >= x.size())
        throw Error(ErrorCode::BadLag, "lag_embed: lag " + std::to_string(lag) + " must lie in [1, " +
                                           std::to_string(x.size()) + ")");
    std::vector<std::array<double, 3>> rows;
    rows.reserve(x.size() - lag);
    for (std::size_t t = lag; t < x.size(); ++t) rows.push_back({x[t - lag], y[t - lag], y[t]});
    return rows;
}

DataSet lagged_dataset(std::span<const double> x, std::span<const double> y, const TransferEntropyConfig& config) {
    const auto rows = lag_embed(x, y, config.lag);
    DataSet ds(config.shifts);
    ds.declare_variable(series_spec(kSourcePast, config.source, x));
    ds.declare_variable(series_spec(kTargetPast, config.target, y));
    ds.declare_variable(series_spec(kTargetFuture, config.target, y));
    ds.add_samples(std::span<const double>(rows.front().data(), rows.size() * 3), 3);
    ds.finalize();
    return ds;
}

TransferEntropyResult transfer_entropy(std::span<const double> x, std::span<const double> y,
                                       const TransferEntropyConfig& config) {
    const DataSet ds = lagged_dataset(x, y, config);
    TransferEntropyResult r;
    r.pid = pid_decompose(ds, {kTargetFuture}, {{kSourcePast}, {kTargetPast}});
    const double te = r.pid.raw_atom("{1}") + r.pid.raw_atom("{12}");
    r.te_bits = te > 0.0 ? te : 0.0;
    r.cmi_bits = conditional_mutual_info(ds, {kTargetFuture}, {kSourcePast}, {kTargetPast}).value_bits;
    r.rows = ds.row_count();
    r.clamp_count = ds.clamp_count();
    return r;
}

TrialTensor::TrialTensor(std::size_t trials, std::size_t timepoints, std::size_t channels, std::vector<double> values)
    : trials_(trials), timepoints_(timepoints), channels_(channels), values_(std::move(values)) {
    if (values_.size() != trials * timepoints * channels)
        throw Error(ErrorCode::LengthMismatch, "TrialTensor: expected " + std::to_string(trials * timepoints * channels) +
                                                   " values, got " + std::to_string(values_.size()));
}

double TrialTensor::at(std::size_t trial, std::size_t time, std::size_t channel) const {
    if (trial >= trials_ || time >= timepoints_ || channel >= channels_)
        throw Error(ErrorCode::IndexOutOfRange, "TrialTensor: index out of range");
    return values_[(trial * timepoints_ + time) * channels_ + channel];
}

std::vector<double> TrialTensor::slice(std::size_t time) const {
    if (time >= timepoints_)
        throw Error(ErrorCode::IndexOutOfRange, "timepoint " + std::to_string(time) + " out of range [0, " +
                                                    std::to_string(timepoints_) + ")");
    std::vector<double> out;
    out.reserve(trials_ * channels_);
    for (std::size_t tr = 0; tr < trials_; ++tr) {
        const auto begin = values_.begin() + static_cast<std::ptrdiff_t>((tr * timepoints_ + time) * channels_);
        out.insert(out.end(), begin, begin + static_cast<std::ptrdiff_t>(channels_));
    }
    return out;
}

DataSet timepoint_dataset(const TrialTensor& tensor, std::size_t time, const MeasureRequest& request) {
    if (time >= tensor.timepoints())
        throw Error(ErrorCode::IndexOutOfRange, "timepoint " + std::to_string(time) + " out of range [0, " +
                                                    std::to_string(tensor.timepoints()) + ")");
    if (tensor.trials() < 2)
        throw Error(ErrorCode::TooFewTrials, "time-resolved analysis needs at least 2 trials");
    if (!request.binning.empty() && request.binning.size() != tensor.channels())
        throw Error(ErrorCode::InvalidSpec, "one binning entry per channel is required");

    std::vector<std::size_t> used;
    for (const auto& g : request.groups)
        for (auto c : g) {
            if (c >= tensor.channels())
                throw Error(ErrorCode::UnknownDim, "channel " + std::to_string(c) + " does not exist");
            used.push_back(c);
        }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.empty()) throw Error(ErrorCode::InvalidSpec, "measure request names no channels");

    DataSet ds(request.shifts);
    for (auto c : used) {
        const ChannelBinning b = request.binning.empty() ? ChannelBinning{} : request.binning[c];
        ds.declare_variable(b.discrete ? VariableSpec::discrete(c) : VariableSpec::continuous(c, b.bins, b.range));
    }
    const std::size_t width = used.back() + 1;
    const auto full = tensor.slice(time);
    std::vector<double> rows;
    rows.reserve(tensor.trials() * width);
    for (std::size_t tr = 0; tr < tensor.trials(); ++tr) {
        const auto begin = full.begin() + static_cast<std::ptrdiff_t>(tr * tensor.channels());
        rows.insert(rows.end(), begin, begin + static_cast<std::ptrdiff_t>(width));
    }
    ds.add_samples(rows, width);
    ds.finalize();
    return ds;
}

TimeResolvedValue evaluate(const DataSet& ds, const MeasureRequest& request) {
    const auto& g = request.groups;
    auto need = [&](std::size_t n, const char* what) {
        if (g.size() != n)
            throw Error(ErrorCode::InvalidSpec, std::string(what) + " needs " + std::to_string(n) + " groups");
    };
    switch (request.kind) {
        case MeasureRequest::Kind::Entropy:
            need(1, "entropy");
            return entropy(ds, g[0]);
        case MeasureRequest::Kind::MutualInfo:
            need(2, "mutual information");
            return mutual_info(ds, g[0], g[1]);
        case MeasureRequest::Kind::ConditionalMutualInfo:
            need(3, "conditional mutual information");
            return conditional_mutual_info(ds, g[0], g[1], g[2]);
        case MeasureRequest::Kind::Pid:
            if (g.size() != 3 && g.size() != 4)
                throw Error(ErrorCode::UnsupportedSourceCount, "pid needs a target and 2 or 3 sources");
            return pid_decompose(ds, g[0], std::vector<DimGroup>(g.begin() + 1, g.end()));
    }
    throw Error(ErrorCode::InvalidSpec, "unknown measure kind");
}

TimeResolvedValue time_resolved(const TrialTensor& tensor, std::size_t time, const MeasureRequest& request) {
    return evaluate(timepoint_dataset(tensor, time, request), request);
}

std::vector<TimeResolvedValue> time_course(const TrialTensor& tensor, const MeasureRequest& request) {
    const auto n = static_cast<std::int64_t>(tensor.timepoints());
    std::vector<TimeResolvedValue> out(tensor.timepoints());
    std::vector<std::exception_ptr> errors(tensor.timepoints());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < n; ++t) {
        try {
            out[t] = time_resolved(tensor, static_cast<std::size_t>(t), request);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace infodecomp
