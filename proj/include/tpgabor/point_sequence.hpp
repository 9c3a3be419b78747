#pragma once

#include "tpgabor/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace tpgabor {

using Index = std::int64_t;

/// Strictly increasing real sequence (x_j) realized over an index window
/// [lo, hi]. A uniform sequence x_j = offset + step * j can be evaluated at
/// any integer j; an explicit table only inside its window.
class PointSequence {
public:
    static PointSequence uniform(double offset, double step, Index lo, Index hi)
    {
        if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(offset))
            fail(ErrorCode::NonIncreasingSequence, "uniform sequence needs a positive finite step");
        if (hi < lo)
            fail(ErrorCode::EmptyWindow, "index window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
        PointSequence s;
        s.uniform_ = true;
        s.offset_ = offset;
        s.step_ = step;
        s.lo_ = lo;
        s.hi_ = hi;
        return s;
    }

    static PointSequence table(Index lo, std::vector<double> points)
    {
        if (points.empty())
            fail(ErrorCode::EmptyWindow, "point table is empty");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!std::isfinite(points[i]))
                fail(ErrorCode::InvalidArgument, "point table contains a non-finite value");
            if (i > 0 && !(points[i] > points[i - 1]))
                fail(ErrorCode::NonIncreasingSequence,
                     "points are not strictly increasing at index " + std::to_string(lo + static_cast<Index>(i)));
        }
        PointSequence s;
        s.uniform_ = false;
        s.lo_ = lo;
        s.hi_ = lo + static_cast<Index>(points.size()) - 1;
        s.points_ = std::move(points);
        return s;
    }

    bool is_uniform() const { return uniform_; }
    double offset() const { return offset_; }
    double step() const { return step_; }

    Index lo() const { return lo_; }
    Index hi() const { return hi_; }
    std::size_t size() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }

    /// Whether x_j is available (always for uniform sequences).
    bool defined(Index j) const { return uniform_ || (j >= lo_ && j <= hi_); }
    bool in_window(Index j) const { return j >= lo_ && j <= hi_; }

    double operator[](Index j) const
    {
        if (uniform_)
            return offset_ + step_ * static_cast<double>(j);
        if (j < lo_ || j > hi_)
            fail(ErrorCode::EmptyWindow, "index " + std::to_string(j) + " outside the point window");
        return points_[static_cast<std::size_t>(j - lo_)];
    }

    std::vector<double> values() const
    {
        std::vector<double> v;
        v.reserve(size());
        for (Index j = lo_; j <= hi_; ++j)
            v.push_back((*this)[j]);
        return v;
    }

    /// min{j : x_j > y}. For tables the search is restricted to the window and
    /// returns hi() + 1 when no point qualifies.
    Index first_above(double y) const
    {
        if (uniform_) {
            Index j = static_cast<Index>(std::floor((y - offset_) / step_)) + 1;
            while ((*this)[j - 1] > y)
                --j;
            while (!((*this)[j] > y))
                ++j;
            return j;
        }
        auto it = std::upper_bound(points_.begin(), points_.end(), y);
        return lo_ + static_cast<Index>(it - points_.begin());
    }

    /// max{j : x_j < y}; lo() - 1 when no point of a table qualifies.
    Index last_below(double y) const
    {
        if (uniform_) {
            Index j = static_cast<Index>(std::ceil((y - offset_) / step_)) - 1;
            while (!((*this)[j] < y))
                --j;
            while ((*this)[j + 1] < y)
                ++j;
            return j;
        }
        auto it = std::lower_bound(points_.begin(), points_.end(), y);
        return lo_ + static_cast<Index>(it - points_.begin()) - 1;
    }

    /// Number of points strictly inside (a, b), counted over the window for
    /// tables and over all of Z for uniform sequences.
    Index count_in(double a, double b) const
    {
        if (!(b > a))
            return 0;
        const Index first = first_above(a);
        const Index last = last_below(b);
        return std::max<Index>(0, last - first + 1);
    }

    /// True when the realized points certainly contain every x_j in [a, b]:
    /// the window has a point <= a and a point >= b.
    bool covers(double a, double b) const
    {
        if (uniform_)
            return true;
        return points_.front() <= a && points_.back() >= b;
    }

    /// Separation q = inf gap and mesh Q = sup gap over the window.
    double separation() const { return gap_extreme(true); }
    double mesh() const { return gap_extreme(false); }

    /// The reflected sequence x~_j = -x_{-j}, again strictly increasing.
    PointSequence reflected() const
    {
        if (uniform_)
            return uniform(-offset_, step_, -hi_, -lo_);
        std::vector<double> pts(points_.rbegin(), points_.rend());
        for (double& p : pts)
            p = -p;
        return table(-hi_, std::move(pts));
    }

    /// y_j + d for every j.
    PointSequence translated(double d) const
    {
        if (uniform_)
            return uniform(offset_ + d, step_, lo_, hi_);
        std::vector<double> pts = points_;
        for (double& p : pts)
            p += d;
        return table(lo_, std::move(pts));
    }

    /// Same rule, different window.
    PointSequence with_window(Index lo, Index hi) const
    {
        if (uniform_)
            return uniform(offset_, step_, lo, hi);
        if (lo < lo_ || hi > hi_ || hi < lo)
            fail(ErrorCode::EmptyWindow, "requested window exceeds the point table");
        return table(lo, std::vector<double>(points_.begin() + (lo - lo_), points_.begin() + (hi - lo_) + 1));
    }

private:
    PointSequence() = default;

    double gap_extreme(bool smallest) const
    {
        if (uniform_)
            return step_;
        if (points_.size() < 2)
            return std::numeric_limits<double>::infinity();
        double best = smallest ? std::numeric_limits<double>::infinity() : 0.0;
        for (std::size_t i = 1; i < points_.size(); ++i) {
            const double gap = points_[i] - points_[i - 1];
            best = smallest ? std::min(best, gap) : std::max(best, gap);
        }
        return best;
    }

    bool uniform_ = true;
    double offset_ = 0.0;
    double step_ = 1.0;
    Index lo_ = 0;
    Index hi_ = 0;
    std::vector<double> points_;
};

} // namespace tpgabor
