#pragma once

#include "tpgabor/error.hpp"
#include "tpgabor/io.hpp"
#include "tpgabor/point_sequence.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tpgabor {

/// One row of a banded matrix: dense values for columns first, first+1, ...
struct BandRow {
    Index first = 0;
    std::vector<double> values;

    Index last() const { return first + static_cast<Index>(values.size()) - 1; }
    bool empty() const { return values.empty(); }
};

/// Real matrix indexed by integer windows with an explicit band per row.
/// Entries outside a row's band are exactly zero. Immutable once built.
class BandedMatrix {
public:
    BandedMatrix(Index row_lo, Index row_hi, Index col_lo, Index col_hi, std::vector<BandRow> rows)
        : row_lo_(row_lo)
        , row_hi_(row_hi)
        , col_lo_(col_lo)
        , col_hi_(col_hi)
        , rows_(std::move(rows))
    {
        if (row_hi < row_lo || col_hi < col_lo)
            fail(ErrorCode::EmptyWindow, "banded matrix needs nonempty row and column windows");
        if (rows_.size() != static_cast<std::size_t>(row_hi - row_lo + 1))
            fail(ErrorCode::LengthMismatch, "one band per row is required");
        for (auto& r : rows_) {
            if (r.empty())
                continue;
            if (r.first < col_lo_ || r.last() > col_hi_)
                fail(ErrorCode::InvalidArgument, "band exceeds the column window");
        }
    }

    Index row_lo() const { return row_lo_; }
    Index row_hi() const { return row_hi_; }
    Index col_lo() const { return col_lo_; }
    Index col_hi() const { return col_hi_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return static_cast<std::size_t>(col_hi_ - col_lo_ + 1); }

    const BandRow& row(Index i) const { return rows_.at(static_cast<std::size_t>(i - row_lo_)); }

    double operator()(Index i, Index j) const
    {
        if (i < row_lo_ || i > row_hi_)
            return 0.0;
        const auto& r = row(i);
        if (r.empty() || j < r.first || j > r.last())
            return 0.0;
        return r.values[static_cast<std::size_t>(j - r.first)];
    }

    std::size_t row_nonzeros(Index i) const
    {
        const auto& v = row(i).values;
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return x != 0.0; }));
    }

    std::size_t max_row_nonzeros() const
    {
        std::size_t best = 0;
        for (Index i = row_lo_; i <= row_hi_; ++i)
            best = std::max(best, row_nonzeros(i));
        return best;
    }

    std::size_t max_col_nonzeros() const
    {
        std::vector<std::size_t> count(cols(), 0);
        for (const auto& r : rows_)
            for (std::size_t t = 0; t < r.values.size(); ++t)
                if (r.values[t] != 0.0)
                    ++count[static_cast<std::size_t>(r.first - col_lo_) + t];
        return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
    }

    double max_abs() const
    {
        double best = 0.0;
        for (const auto& r : rows_)
            for (double v : r.values)
                best = std::max(best, std::abs(v));
        return best;
    }

    bool all_finite() const
    {
        for (const auto& r : rows_)
            for (double v : r.values)
                if (!std::isfinite(v))
                    return false;
        return true;
    }

    /// y = A x with x indexed over the column window.
    std::vector<double> multiply(std::span<const double> x) const
    {
        if (x.size() != cols())
            fail(ErrorCode::LengthMismatch, "vector length does not match the column window");
        std::vector<double> y(rows(), 0.0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            double acc = 0.0;
            for (std::size_t t = 0; t < r.values.size(); ++t)
                acc += r.values[t] * x[static_cast<std::size_t>(r.first - col_lo_) + t];
            y[i] = acc;
        }
        return y;
    }

    Eigen::MatrixXd to_dense() const
    {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows()), static_cast<Eigen::Index>(cols()));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& r = rows_[i];
            for (std::size_t t = 0; t < r.values.size(); ++t)
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r.first - col_lo_) + static_cast<Eigen::Index>(t)) = r.values[t];
        }
        return a;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json rows = nlohmann::json::array();
        for (Index i = row_lo_; i <= row_hi_; ++i) {
            const auto& r = row(i);
            rows.push_back({{"row", i}, {"band", {r.first, r.last()}}, {"values", r.values}});
        }
        return {{"row_window", {row_lo_, row_hi_}}, {"col_window", {col_lo_, col_hi_}}, {"rows", std::move(rows)}};
    }

    /// (row, col, value) for every stored nonzero.
    void write_triplets(std::ostream& os) const
    {
        os << "row,col,value\n";
        for (Index i = row_lo_; i <= row_hi_; ++i) {
            const auto& r = row(i);
            for (std::size_t t = 0; t < r.values.size(); ++t)
                if (r.values[t] != 0.0)
                    os << i << ',' << r.first + static_cast<Index>(t) << ',' << format_double(r.values[t]) << '\n';
        }
    }

private:
    Index row_lo_, row_hi_, col_lo_, col_hi_;
    std::vector<BandRow> rows_;
};

} // namespace tpgabor
