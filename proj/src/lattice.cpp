#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "infodecomp/error.hpp"
#include "infodecomp/lattice.hpp"

namespace infodecomp {

namespace {

std::string members(SourceSet s) {
    std::string out;
    for (int i = 0; i < 32; ++i) {
        if (s & (SourceSet{1} << i)) out += std::to_string(i + 1);
    }
    return out;
}

bool set_before(SourceSet a, SourceSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members(a) < members(b);
}

bool subset(SourceSet a, SourceSet b) { return (a & b) == a; }

}  // namespace

std::string AntichainNode::name() const {
    std::string out;
    for (auto s : sets) out += "{" + members(s) + "}";
    return out;
}

bool precedes_or_equal(const AntichainNode& a, const AntichainNode& b) {
    return std::all_of(b.sets.begin(), b.sets.end(), [&](SourceSet big) {
        return std::any_of(a.sets.begin(), a.sets.end(), [&](SourceSet small) { return subset(small, big); });
    });
}

AntichainLattice::AntichainLattice(int sources) : sources_(sources) {
    if (sources != 2 && sources != 3)
        throw Error(ErrorCode::UnsupportedSourceCount,
                    "redundancy lattice supports 2 or 3 sources, got " + std::to_string(sources));

    // Every nonempty collection of nonempty subsets whose members are
    // pairwise incomparable.
    const std::uint32_t subsets = (1u << sources) - 1;
    std::vector<AntichainNode> found;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << subsets); ++pick) {
        AntichainNode node;
        for (std::uint32_t i = 0; i < subsets; ++i) {
            if (pick & (std::uint64_t{1} << i)) node.sets.push_back(i + 1);
        }
        bool antichain = true;
        for (std::size_t i = 0; i < node.sets.size() && antichain; ++i)
            for (std::size_t j = 0; j < node.sets.size() && antichain; ++j)
                if (i != j && subset(node.sets[i], node.sets[j])) antichain = false;
        if (!antichain) continue;
        std::sort(node.sets.begin(), node.sets.end(), set_before);
        found.push_back(std::move(node));
    }

    // Topological order: a strictly smaller node has a strictly smaller down-set.
    const std::size_t n = found.size();
    std::vector<std::size_t> down_size(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (precedes_or_equal(found[j], found[i])) ++down_size[i];
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (down_size[a] != down_size[b]) return down_size[a] < down_size[b];
        return found[a].name() < found[b].name();
    });
    for (auto i : idx) nodes_.push_back(found[i]);

    order_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) order_[a * n + b] = precedes_or_equal(nodes_[a], nodes_[b]);

    const std::size_t expected = sources == 2 ? 4 : 18;
    if (n != expected)
        throw std::logic_error("antichain enumeration produced " + std::to_string(n) + " nodes, expected " +
                               std::to_string(expected));
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq(a, a)) throw std::logic_error("lattice order is not reflexive");
        if (!leq(0, a) || !leq(a, n - 1)) throw std::logic_error("lattice lacks a unique bottom or top");
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq(a, b) && leq(b, a)) throw std::logic_error("lattice order is not antisymmetric");
            if (leq(a, b) && b < a) throw std::logic_error("node order is not a linear extension");
            for (std::size_t c = 0; c < n; ++c)
                if (leq(a, b) && leq(b, c) && !leq(a, c)) throw std::logic_error("lattice order is not transitive");
        }
    }

    down_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (b != a && leq(b, a)) down_[a].push_back(b);
}

std::size_t AntichainLattice::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].name() == name) return i;
    throw std::out_of_range("no lattice node named " + std::string(name));
}

AntichainLattice build_lattice(int sources) { return AntichainLattice(sources); }

const AntichainLattice& lattice_for(int sources) {
    static const AntichainLattice two(2);
    static const AntichainLattice three(3);
    if (sources == 2) return two;
    if (sources == 3) return three;
    throw Error(ErrorCode::UnsupportedSourceCount,
                "redundancy lattice supports 2 or 3 sources, got " + std::to_string(sources));
}

}  // namespace infodecomp
