// Monotone cubic (Fritsch-Carlson) interpolation on a 1-d table.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gasfilt/errors.hpp"

namespace gasfilt {

class MonotoneCubic {
public:
    MonotoneCubic() = default;

    MonotoneCubic(std::vector<double> x, std::vector<double> y)
        : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw ParamError("MonotoneCubic: need two or more (x, y) pairs");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1]))
                throw ParamError("MonotoneCubic: x must be strictly increasing");

        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

        m_.assign(n, 0.0);
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                m_[i] = 0.0;
            } else {
                // harmonic mean keeps the interpolant monotone on each cell
                const double w1 = 2.0 * (x_[i + 1] - x_[i]) + (x_[i] - x_[i - 1]);
                const double w2 = (x_[i + 1] - x_[i]) + 2.0 * (x_[i] - x_[i - 1]);
                m_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        // clamp endpoint slopes (Fritsch-Carlson boundary treatment)
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m_[i] = m_[i + 1] = 0.0;
            } else {
                const double a = m_[i] / d[i];
                const double b = m_[i + 1] / d[i];
                const double s = a * a + b * b;
                if (s > 9.0) {
                    const double t = 3.0 / std::sqrt(s);
                    m_[i] = t * a * d[i];
                    m_[i + 1] = t * b * d[i];
                }
            }
        }
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

    double operator()(double x) const {
        if (x < x_.front() || x > x_.back())
            throw ExtrapolationError("MonotoneCubic: x=" + std::to_string(x) +
                                     " outside table [" + std::to_string(x_.front()) +
                                     ", " + std::to_string(x_.back()) + "]");
        std::size_t lo = 0, hi = x_.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        const double h = x_[lo + 1] - x_[lo];
        const double t = (x - x_[lo]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        return h00 * y_[lo] + h10 * h * m_[lo] + h01 * y_[lo + 1] + h11 * h * m_[lo + 1];
    }

private:
    std::vector<double> x_, y_, m_;
};

} // namespace gasfilt
