#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "infodecomp/lattice.hpp"
#include "infodecomp/measures.hpp"

namespace infodecomp {

/// Specific information I(T = t; A) at one shift: the KL divergence of
/// p(A | t) from p(A). Throws ZeroProbability if t is unoccupied.
double specific_information(const DataSet& ds, const DimGroup& target,
                            std::span<const std::int32_t> target_coords, const DimGroup& a,
                            std::size_t shift);

/// Minimum-specific-information redundancy of the source collections in `node` at one
/// shift: sum over t of p(t) times the smallest specific information among
/// the node's sets. Each set maps to the union of its member source groups.
double imin(const DataSet& ds, const DimGroup& target, const AntichainNode& node,
            const std::vector<DimGroup>& sources, std::size_t shift);

struct PIDResult {
    DimGroup target;
    std::vector<DimGroup> sources;
    MeasureValue total_mi;
    const AntichainLattice* lattice = nullptr;

    /// Atom values in lattice order, averaged over shifts and clamped at 0.
    std::vector<double> atoms;
    /// Same, before clamping.
    std::vector<double> raw_atoms;
    /// per_shift_atoms[k][i]: raw atom i at shift k.
    std::vector<std::vector<double>> per_shift_atoms;

    double atom(std::string_view node_name) const;
    double raw_atom(std::string_view node_name) const;
    /// Atom of the bottom node {1}{2}...
    double redundancy() const;
    /// Atom of the singleton node {i}, i counted from 1.
    double unique(int source) const;
    /// Atom of the top node {12...}.
    double synergy() const;
};

/// Decomposes I(target; sources) into lattice atoms, per shift by Möbius
/// inversion of imin, then averaged over shifts.
PIDResult pid_decompose(const DataSet& ds, const DimGroup& target, const std::vector<DimGroup>& sources);

namespace shift {

/// Raw imin value of every lattice node at one histogram.
std::vector<double> imin_values(const SparseJointHistogram& h, std::span<const std::size_t> target,
                                const std::vector<std::vector<std::size_t>>& sources,
                                const AntichainLattice& lattice);

/// Möbius inversion over the lattice: atom(a) = imin(a) - sum of atoms strictly below a.
std::vector<double> mobius_atoms(std::span<const double> imin_values, const AntichainLattice& lattice);

}  // namespace shift

}  // namespace infodecomp
