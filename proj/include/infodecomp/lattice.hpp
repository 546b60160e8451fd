#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace infodecomp {

/// Nonempty subset of source labels {1..n}, bit i set for source i+1.
using SourceSet = std::uint32_t;

/// Collection of pairwise incomparable source sets, kept sorted by
/// (size, members).
struct AntichainNode {
    std::vector<SourceSet> sets;

    /// Canonical brace notation, e.g. "{1}{2}", "{3}{12}", "{123}".
    std::string name() const;
    friend bool operator==(const AntichainNode&, const AntichainNode&) = default;
};

/// All antichains of nonempty subsets of {1..n}, ordered by
/// alpha <= beta iff every set of beta contains some set of alpha.
/// Nodes are stored in a topological order (bottom first, top last).
class AntichainLattice {
public:
    explicit AntichainLattice(int sources);

    int sources() const noexcept { return sources_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const AntichainNode& node(std::size_t i) const { return nodes_.at(i); }
    const std::vector<AntichainNode>& nodes() const noexcept { return nodes_; }

    bool leq(std::size_t a, std::size_t b) const { return order_[a * nodes_.size() + b]; }
    /// Nodes strictly below `i`.
    const std::vector<std::size_t>& strict_down_set(std::size_t i) const { return down_.at(i); }

    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return nodes_.size() - 1; }
    /// Throws std::out_of_range for unknown names.
    std::size_t index_of(std::string_view name) const;

private:
    int sources_;
    std::vector<AntichainNode> nodes_;
    std::vector<bool> order_;
    std::vector<std::vector<std::size_t>> down_;
};

bool precedes_or_equal(const AntichainNode& a, const AntichainNode& b);

/// Enumerates the lattice for n sources; only n = 2 and n = 3 are supported.
AntichainLattice build_lattice(int sources);

/// Shared immutable lattice for n = 2 or 3.
const AntichainLattice& lattice_for(int sources);

}  // namespace infodecomp
