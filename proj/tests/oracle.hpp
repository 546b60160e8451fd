#pragma once

// Direct-enumeration reference for discrete data. Works on raw row values
// (no binning, no histograms, no entropy identities) and builds its own
// redundancy lattice from set-of-sets enumeration, so it shares no code path
// with the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Row = std::vector<double>;
using Cols = std::vector<std::size_t>;
using Dist = std::map<std::vector<double>, double>;

inline std::vector<double> pick(const Row& r, const Cols& c) {
    std::vector<double> out;
    for (auto i : c) out.push_back(r[i]);
    return out;
}

inline Cols cat(const Cols& a, const Cols& b) {
    Cols out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Dist distribution(const std::vector<Row>& rows, const Cols& cols) {
    Dist d;
    for (const auto& r : rows) d[pick(r, cols)] += 1.0;
    for (auto& [k, v] : d) v /= static_cast<double>(rows.size());
    return d;
}

inline double entropy(const std::vector<Row>& rows, const Cols& x) {
    double h = 0.0;
    for (const auto& [k, p] : distribution(rows, x)) h -= p * std::log2(p);
    return h;
}

inline double conditional_entropy(const std::vector<Row>& rows, const Cols& x, const Cols& y) {
    const auto pxy = distribution(rows, cat(x, y));
    const auto py = distribution(rows, y);
    double h = 0.0;
    for (const auto& [k, p] : pxy) {
        const std::vector<double> yk(k.begin() + static_cast<std::ptrdiff_t>(x.size()), k.end());
        h -= p * std::log2(p / py.at(yk));
    }
    return h;
}

inline double mutual_info(const std::vector<Row>& rows, const Cols& x, const Cols& y) {
    const auto pxy = distribution(rows, cat(x, y));
    const auto px = distribution(rows, x);
    const auto py = distribution(rows, y);
    double i = 0.0;
    for (const auto& [k, p] : pxy) {
        const std::vector<double> xk(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(x.size()));
        const std::vector<double> yk(k.begin() + static_cast<std::ptrdiff_t>(x.size()), k.end());
        i += p * std::log2(p / (px.at(xk) * py.at(yk)));
    }
    return i;
}

inline double conditional_mutual_info(const std::vector<Row>& rows, const Cols& x, const Cols& y, const Cols& z) {
    const Cols all = cat(cat(x, y), z);
    const auto pxyz = distribution(rows, all);
    const auto pxz = distribution(rows, cat(x, z));
    const auto pyz = distribution(rows, cat(y, z));
    const auto pz = distribution(rows, z);
    double i = 0.0;
    for (const auto& [k, p] : pxyz) {
        const auto nx = static_cast<std::ptrdiff_t>(x.size()), ny = static_cast<std::ptrdiff_t>(y.size());
        const std::vector<double> xk(k.begin(), k.begin() + nx);
        const std::vector<double> yk(k.begin() + nx, k.begin() + nx + ny);
        const std::vector<double> zk(k.begin() + nx + ny, k.end());
        std::vector<double> xz = xk, yz = yk;
        xz.insert(xz.end(), zk.begin(), zk.end());
        yz.insert(yz.end(), zk.begin(), zk.end());
        i += p * std::log2(p * pz.at(zk) / (pxz.at(xz) * pyz.at(yz)));
    }
    return i;
}

/// I(T = t; A) = sum_a p(a|t) log2(p(a|t) / p(a)).
inline double specific_information(const std::vector<Row>& rows, const Cols& t, const std::vector<double>& tv,
                                   const Cols& a) {
    const auto pa = distribution(rows, a);
    std::map<std::vector<double>, double> joint;
    double nt = 0.0;
    for (const auto& r : rows) {
        if (pick(r, t) != tv) continue;
        nt += 1.0;
        joint[pick(r, a)] += 1.0;
    }
    double si = 0.0;
    for (const auto& [ak, c] : joint) {
        const double pat = c / nt;
        si += pat * std::log2(pat / pa.at(ak));
    }
    return si;
}

using Source = std::set<int>;        // subset of {1..n}
using Node = std::set<Source>;       // antichain

inline std::string name(const Node& node) {
    std::vector<std::string> parts;
    for (const auto& s : node) {
        std::string p;
        for (int i : s) p += std::to_string(i);
        parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::string out;
    for (const auto& p : parts) out += "{" + p + "}";
    return out;
}

inline bool below(const Node& a, const Node& b) {
    for (const auto& big : b) {
        bool found = false;
        for (const auto& small : a)
            if (std::includes(big.begin(), big.end(), small.begin(), small.end())) found = true;
        if (!found) return false;
    }
    return true;
}

/// Every antichain of nonempty subsets of {1..n}, by recursive inclusion/exclusion.
inline std::vector<Node> antichains(int n) {
    std::vector<Source> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        Source s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.insert(i + 1);
        subsets.push_back(s);
    }
    std::vector<Node> out;
    std::function<void(std::size_t, Node)> rec = [&](std::size_t i, Node cur) {
        if (i == subsets.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        rec(i + 1, cur);
        for (const auto& s : cur) {
            const auto& x = subsets[i];
            if (std::includes(s.begin(), s.end(), x.begin(), x.end()) ||
                std::includes(x.begin(), x.end(), s.begin(), s.end()))
                return;
        }
        cur.insert(subsets[i]);
        rec(i + 1, cur);
    };
    rec(0, {});
    return out;
}

inline double imin(const std::vector<Row>& rows, const Cols& t, const Node& node, const std::vector<Cols>& sources) {
    const auto pt = distribution(rows, t);
    double r = 0.0;
    for (const auto& [tv, p] : pt) {
        double m = 1e300;
        for (const auto& s : node) {
            Cols a;
            for (int i : s) a = cat(a, sources[static_cast<std::size_t>(i - 1)]);
            m = std::min(m, specific_information(rows, t, tv, a));
        }
        r += p * m;
    }
    return r;
}

/// Atoms keyed by canonical node name.
inline std::map<std::string, double> pid(const std::vector<Row>& rows, const Cols& t, const std::vector<Cols>& sources) {
    const auto nodes = antichains(static_cast<int>(sources.size()));
    std::map<Node, double> redundancy;
    for (const auto& n : nodes) redundancy[n] = imin(rows, t, n, sources);

    std::map<Node, double> atoms;
    std::function<double(const Node&)> atom = [&](const Node& a) -> double {
        if (auto it = atoms.find(a); it != atoms.end()) return it->second;
        double v = redundancy.at(a);
        for (const auto& b : nodes)
            if (b != a && below(b, a)) v -= atom(b);
        atoms[a] = v;
        return v;
    };
    std::map<std::string, double> out;
    for (const auto& n : nodes) out[name(n)] = atom(n);
    return out;
}

}  // namespace oracle
