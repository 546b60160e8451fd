#pragma once

#include <random>
#include <vector>

#include "infodecomp/dataset.hpp"
#include "oracle.hpp"

namespace fixtures {

using oracle::Row;

/// Every column declared as its own discrete variable.
inline infodecomp::DataSet discrete_dataset(const std::vector<Row>& rows, std::size_t shifts = 1) {
    infodecomp::DataSet ds(shifts);
    for (std::size_t c = 0; c < rows.front().size(); ++c) ds.declare_variable(infodecomp::VariableSpec::discrete(c));
    for (const auto& r : rows) ds.add_sample(r);
    ds.finalize();
    return ds;
}

// Columns: S1, S2, T.
inline std::vector<Row> xor_rows() { return {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}; }
inline std::vector<Row> and_rows() { return {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}; }

// Columns: S1, S2, S3, T = S1 xor S2 xor S3.
inline std::vector<Row> parity3_rows() {
    std::vector<Row> rows;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) rows.push_back({double(a), double(b), double(c), double(a ^ b ^ c)});
    return rows;
}

/// Rows realizing a joint distribution exactly: each combination of column
/// values appears a random number of times in [0, max_weight].
inline std::vector<Row> random_joint_rows(std::mt19937_64& rng, const std::vector<int>& cardinality, int max_weight) {
    std::vector<Row> rows;
    std::uniform_int_distribution<int> weight(0, max_weight);
    std::vector<int> idx(cardinality.size(), 0);
    while (true) {
        const int w = weight(rng);
        for (int i = 0; i < w; ++i) rows.emplace_back(idx.begin(), idx.end());
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == cardinality[d]) idx[d++] = 0;
        if (d == idx.size()) break;
    }
    if (rows.empty()) rows.emplace_back(cardinality.size(), 0.0);
    return rows;
}

/// `n` rows of independent uniform draws with column c taking cardinality[c] values.
inline std::vector<Row> random_rows(std::mt19937_64& rng, const std::vector<int>& cardinality, std::size_t n) {
    std::vector<Row> rows(n, Row(cardinality.size()));
    for (auto& r : rows)
        for (std::size_t c = 0; c < cardinality.size(); ++c)
            r[c] = std::uniform_int_distribution<int>(0, cardinality[c] - 1)(rng);
    return rows;
}

}  // namespace fixtures
