#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace coverbound {

/// Neumaier-compensated accumulator.
class KahanSum {
public:
    KahanSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    KahanSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s.value();
}

inline double norm2(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

}  // namespace coverbound
