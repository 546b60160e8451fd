#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infodecomp/error.hpp"
#include "infodecomp/pid.hpp"

namespace infodecomp {

namespace {

void require_disjoint(const DimGroup& target, const std::vector<DimGroup>& sources) {
    DimGroup all = target;
    for (const auto& s : sources) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error(ErrorCode::OverlappingGroups, "target and source groups must be pairwise disjoint");
}

// Positions of the union of the sources selected by `set`, in source order.
std::vector<std::size_t> union_positions(SourceSet set, const std::vector<std::vector<std::size_t>>& sources) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (set & (SourceSet{1} << i)) out.insert(out.end(), sources[i].begin(), sources[i].end());
    }
    return out;
}

// Specific information I(T = t; A) for every target class t.
std::vector<double> specific_info_by_class(const SparseJointHistogram& h, const Partition& target,
                                           std::span<const std::size_t> a_positions) {
    const Partition a = h.project(a_positions);
    const JointCounts j = joint(target, a, h.counts());
    const double n = static_cast<double>(h.total());
    std::vector<double> si(target.size(), 0.0);
    for (std::size_t i = 0; i < j.keys.size(); ++i) {
        const auto tc = j.left_of(i);
        const double c = static_cast<double>(j.counts[i]);
        const double ct = static_cast<double>(target.counts[tc]);
        const double ca = static_cast<double>(a.counts[j.right_of(i)]);
        si[tc] += (c / ct) * std::log2((c * n) / (ct * ca));
    }
    return si;
}

std::vector<std::vector<std::size_t>> source_positions(const DataSet& ds, const std::vector<DimGroup>& sources) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(sources.size());
    for (const auto& s : sources) out.push_back(ds.positions(s));
    return out;
}

double redundancy(const Partition& target, const std::vector<const std::vector<double>*>& si) {
    const double n = static_cast<double>(target.total);
    double sum = 0.0;
    for (std::size_t t = 0; t < target.size(); ++t) {
        double m = std::numeric_limits<double>::infinity();
        for (const auto* v : si) m = std::min(m, (*v)[t]);
        sum += static_cast<double>(target.counts[t]) / n * m;
    }
    return sum;
}

}  // namespace

double specific_information(const DataSet& ds, const DimGroup& target, std::span<const std::int32_t> target_coords,
                            const DimGroup& a, std::size_t shift) {
    join_disjoint({target, a});
    const auto& h = ds.histogram(shift);
    const auto tp = ds.positions(target);
    const auto ap = ds.positions(a);
    if (target_coords.size() != tp.size())
        throw Error(ErrorCode::BadCoords, "target coordinate vector length does not match target group");
    const Partition t = h.project(tp);
    const auto cls = t.find(target_coords);
    if (!cls) throw Error(ErrorCode::ZeroProbability, "specific_information: target outcome has zero probability");
    return specific_info_by_class(h, t, ap)[*cls];
}

double imin(const DataSet& ds, const DimGroup& target, const AntichainNode& node, const std::vector<DimGroup>& sources,
            std::size_t shift) {
    require_disjoint(target, sources);
    if (node.sets.empty()) throw Error(ErrorCode::InvalidSpec, "imin: empty antichain node");
    for (auto s : node.sets) {
        if (s == 0 || (s >> sources.size()) != 0)
            throw Error(ErrorCode::IndexOutOfRange, "imin: node references a source that was not supplied");
    }
    const auto& h = ds.histogram(shift);
    const auto sp = source_positions(ds, sources);
    const Partition t = h.project(ds.positions(target));

    std::vector<std::vector<double>> si;
    std::vector<const std::vector<double>*> refs;
    si.reserve(node.sets.size());
    for (auto s : node.sets) si.push_back(specific_info_by_class(h, t, union_positions(s, sp)));
    for (const auto& v : si) refs.push_back(&v);
    return redundancy(t, refs);
}

namespace shift {

std::vector<double> imin_values(const SparseJointHistogram& h, std::span<const std::size_t> target,
                                const std::vector<std::vector<std::size_t>>& sources,
                                const AntichainLattice& lattice) {
    const Partition t = h.project(target);
    const SourceSet subsets = (SourceSet{1} << sources.size()) - 1;
    std::vector<std::vector<double>> si(subsets + 1);
    for (SourceSet s = 1; s <= subsets; ++s) si[s] = specific_info_by_class(h, t, union_positions(s, sources));

    std::vector<double> out;
    out.reserve(lattice.size());
    std::vector<const std::vector<double>*> refs;
    for (const auto& node : lattice.nodes()) {
        refs.clear();
        for (auto s : node.sets) refs.push_back(&si[s]);
        out.push_back(redundancy(t, refs));
    }
    return out;
}

std::vector<double> mobius_atoms(std::span<const double> imin_values, const AntichainLattice& lattice) {
    std::vector<double> atoms(lattice.size(), 0.0);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        double below = 0.0;
        for (auto j : lattice.strict_down_set(i)) below += atoms[j];
        atoms[i] = imin_values[i] - below;
    }
    return atoms;
}

}  // namespace shift

PIDResult pid_decompose(const DataSet& ds, const DimGroup& target, const std::vector<DimGroup>& sources) {
    if (sources.size() != 2 && sources.size() != 3)
        throw Error(ErrorCode::UnsupportedSourceCount,
                    "pid_decompose needs 2 or 3 sources, got " + std::to_string(sources.size()));
    require_disjoint(target, sources);

    const AntichainLattice& lattice = lattice_for(static_cast<int>(sources.size()));
    const auto tp = ds.positions(target);
    const auto sp = source_positions(ds, sources);

    PIDResult r;
    r.target = target;
    r.sources = sources;
    r.lattice = &lattice;
    r.raw_atoms.assign(lattice.size(), 0.0);
    for (std::size_t k = 0; k < ds.shift_count(); ++k) {
        const auto values = shift::imin_values(ds.histogram(k), tp, sp, lattice);
        r.per_shift_atoms.push_back(shift::mobius_atoms(values, lattice));
        for (std::size_t i = 0; i < lattice.size(); ++i) r.raw_atoms[i] += r.per_shift_atoms.back()[i];
    }
    r.atoms.resize(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        r.raw_atoms[i] /= static_cast<double>(ds.shift_count());
        r.atoms[i] = r.raw_atoms[i] > 0.0 ? r.raw_atoms[i] : 0.0;
    }

    DimGroup all_sources;
    for (const auto& s : sources) all_sources.insert(all_sources.end(), s.begin(), s.end());
    r.total_mi = mutual_info(ds, target, all_sources);
    return r;
}

double PIDResult::atom(std::string_view node_name) const { return atoms.at(lattice->index_of(node_name)); }

double PIDResult::raw_atom(std::string_view node_name) const { return raw_atoms.at(lattice->index_of(node_name)); }

double PIDResult::redundancy() const { return atoms.at(lattice->bottom()); }

double PIDResult::unique(int source) const {
    if (source < 1 || source > lattice->sources())
        throw Error(ErrorCode::IndexOutOfRange, "unique: source " + std::to_string(source) + " out of range");
    return atom("{" + std::to_string(source) + "}");
}

double PIDResult::synergy() const { return atoms.at(lattice->top()); }

}  // namespace infodecomp
