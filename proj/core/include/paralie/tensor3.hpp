#pragma once

#include <array>
#include <cstddef>

namespace paralie {

/// 27 frame components T[i][j][k], i, j, k in {0, 1, 2}.
class Tensor3 {
public:
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return t_[9 * i + 3 * j + k];
    }
    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return t_[9 * i + 3 * j + k];
    }

    Tensor3& operator+=(const Tensor3& o) {
        for (std::size_t n = 0; n < 27; ++n) t_[n] += o.t_[n];
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        for (std::size_t n = 0; n < 27; ++n) t_[n] -= o.t_[n];
        return *this;
    }
    Tensor3& operator*=(double s) {
        for (auto& x : t_) x *= s;
        return *this;
    }

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

    /// Euclidean inner product over all 27 components.
    friend double inner(const Tensor3& a, const Tensor3& b) {
        double s = 0.0;
        for (std::size_t n = 0; n < 27; ++n) s += a.t_[n] * b.t_[n];
        return s;
    }

    double max_abs() const;
    bool all_finite() const;

private:
    std::array<double, 27> t_{};
};

}  // namespace paralie
