#pragma once

#include <cassert>
#include <vector>

namespace aifnav {

// Dense non-negative count matrix that can grow one row or column at a time.
// Stored column-wise because every consumer works on columns: a column is one
// conditional distribution (counts for P(row | col)).
class GrowableMatrix {
public:
    GrowableMatrix() = default;
    GrowableMatrix(int rows, int cols, double fill)
        : rows_(rows), cols_(cols, std::vector<double>(rows, fill)) {}

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }

    double& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols());
        return cols_[c][r];
    }
    double at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols());
        return cols_[c][r];
    }

    void add_row(double fill) {
        for (auto& col : cols_) col.push_back(fill);
        ++rows_;
    }
    void add_col(double fill) { cols_.emplace_back(rows_, fill); }

    const std::vector<double>& col(int c) const { return cols_[c]; }

    double col_sum(int c) const {
        double s = 0.0;
        for (double v : cols_[c]) s += v;
        return s;
    }

    // Dirichlet mean of one column; the epsilon floor on counts guarantees a
    // strictly positive sum.
    std::vector<double> normalized_col(int c) const {
        std::vector<double> out = cols_[c];
        const double s = col_sum(c);
        for (double& v : out) v /= s;
        return out;
    }

    friend bool operator==(const GrowableMatrix&, const GrowableMatrix&) = default;

private:
    int rows_ = 0;
    std::vector<std::vector<double>> cols_;
};

// Column-normalized copy (each column sums to 1).
GrowableMatrix normalized(const GrowableMatrix& counts);

// Vector form used for beliefs and single columns.
std::vector<double> normalized(const std::vector<double>& counts);

}  // namespace aifnav
