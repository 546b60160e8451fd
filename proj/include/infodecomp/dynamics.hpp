#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "infodecomp/pid.hpp"

namespace infodecomp {

/// Rows (x[t-lag], y[t-lag], y[t]) for t in [lag, length).
std::vector<std::array<double, 3>> lag_embed(std::span<const double> x, std::span<const double> y,
                                             std::size_t lag);

struct SeriesBinning {
    bool discrete = true;
    int bins = 2;
    std::optional<Range> range;
};

struct TransferEntropyConfig {
    std::size_t lag = 1;
    std::size_t shifts = 1;
    SeriesBinning source;
    SeriesBinning target;
};

/// Columns of the lagged dataset.
inline constexpr std::size_t kSourcePast = 0;
inline constexpr std::size_t kTargetPast = 1;
inline constexpr std::size_t kTargetFuture = 2;

/// Finalized dataset over the lag embedding. Series without an explicit
/// range are binned on their full observed range, shared by past and
/// future columns.
DataSet lagged_dataset(std::span<const double> x, std::span<const double> y,
                       const TransferEntropyConfig& config);

struct TransferEntropyResult {
    /// unique(X_past) + synergy of the lagged decomposition.
    double te_bits = 0.0;
    /// I(Y_t; X_{t-lag} | Y_{t-lag}) computed directly.
    double cmi_bits = 0.0;
    PIDResult pid;
    std::size_t rows = 0;
    std::uint64_t clamp_count = 0;
};

TransferEntropyResult transfer_entropy(std::span<const double> x, std::span<const double> y,
                                       const TransferEntropyConfig& config);

/// trials × timepoints × channels, row-major in that order.
class TrialTensor {
public:
    TrialTensor(std::size_t trials, std::size_t timepoints, std::size_t channels,
                std::vector<double> values);

    std::size_t trials() const noexcept { return trials_; }
    std::size_t timepoints() const noexcept { return timepoints_; }
    std::size_t channels() const noexcept { return channels_; }

    double at(std::size_t trial, std::size_t time, std::size_t channel) const;
    /// Row-major trials × channels values at one timepoint.
    std::vector<double> slice(std::size_t time) const;

private:
    std::size_t trials_;
    std::size_t timepoints_;
    std::size_t channels_;
    std::vector<double> values_;
};

struct ChannelBinning {
    bool discrete = false;
    int bins = 10;
    std::optional<Range> range;
};

struct MeasureRequest {
    enum class Kind { Entropy, MutualInfo, ConditionalMutualInfo, Pid };

    Kind kind = Kind::MutualInfo;
    /// Channel groups. Entropy: {X}. MutualInfo: {X, Y}. ConditionalMutualInfo:
    /// {X, Y, Z}. Pid: {target, source 1, source 2[, source 3]}.
    std::vector<DimGroup> groups;
    /// One entry per channel of the tensor; channels absent from every group are ignored.
    std::vector<ChannelBinning> binning;
    std::size_t shifts = 1;
};

using TimeResolvedValue = std::variant<MeasureValue, PIDResult>;

/// Finalized dataset of the trials' channel values at one timepoint.
DataSet timepoint_dataset(const TrialTensor& tensor, std::size_t time, const MeasureRequest& request);

TimeResolvedValue evaluate(const DataSet& ds, const MeasureRequest& request);

/// Measure evaluated on the data of a single timepoint.
TimeResolvedValue time_resolved(const TrialTensor& tensor, std::size_t time, const MeasureRequest& request);

/// time_resolved at every timepoint; timepoints are evaluated in parallel.
std::vector<TimeResolvedValue> time_course(const TrialTensor& tensor, const MeasureRequest& request);

}  // namespace infodecomp
