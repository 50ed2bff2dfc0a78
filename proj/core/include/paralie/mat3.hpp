#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>

namespace paralie {

/// Three real components in frame order (e0 = xi, e1, e2).
class Vec3 {
public:
    constexpr Vec3() = default;
    Vec3(double x0, double x1, double x2);

    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }

    static Vec3 basis(std::size_t i);

    Vec3& operator+=(const Vec3& o);
    Vec3& operator-=(const Vec3& o);
    Vec3& operator*=(double s);

    friend bool operator==(const Vec3&, const Vec3&) = default;

private:
    std::array<double, 3> v_{};
};

Vec3 operator+(Vec3 a, const Vec3& b);
Vec3 operator-(Vec3 a, const Vec3& b);
Vec3 operator*(double s, Vec3 v);
double dot(const Vec3& a, const Vec3& b);
double max_abs(const Vec3& v);

/// Row-major 3x3 real matrix. Entries are finite after construction and
/// after every arithmetic operation; a non-finite result throws
/// std::domain_error.
class Mat3 {
public:
    using Rows = std::array<std::array<double, 3>, 3>;

    constexpr Mat3() = default;
    explicit Mat3(const Rows& rows);
    Mat3(std::initializer_list<std::initializer_list<double>> rows);

    static Mat3 identity();
    static Mat3 zero() { return Mat3{}; }
    static Mat3 diag(double d0, double d1, double d2);
    static Mat3 outer(const Vec3& col, const Vec3& row);

    double operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }

    /// Unchecked write access; call validate() after batch edits if the
    /// source values are untrusted.
    double& at(std::size_t r, std::size_t c) { return e_[3 * r + c]; }
    void validate() const;

    Rows rows() const;

    Mat3& operator+=(const Mat3& o);
    Mat3& operator-=(const Mat3& o);
    Mat3& operator*=(double s);

    friend bool operator==(const Mat3&, const Mat3&) = default;

private:
    std::array<double, 9> e_{};
};

Mat3 operator+(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a);
Mat3 operator*(double s, Mat3 a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& x);

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) { return a * b; }
Mat3 transpose(const Mat3& a);

double trace(const Mat3& a);
/// tr(A^2), without forming A^2.
double trace_sq(const Mat3& a);
double det(const Mat3& a);
/// Max-abs entry; the norm used for every tolerance in this library.
double max_abs(const Mat3& a);
double max_abs_diff(const Mat3& a, const Mat3& b);

/// Matrix exponential by scaling and squaring with a truncated Taylor
/// series, accumulated in extended precision. Independent of the closed
/// forms in expengine and used to verify them.
///
/// A is scaled by 2^-s until its max-abs entry is at most 1/2, the series
/// is summed until the max-abs entry of the next term drops below
/// tol * 2^-s, and the result is squared s times.
///
/// Throws std::invalid_argument if tol <= 0 and std::domain_error if A has
/// non-finite entries.
Mat3 expm_oracle(const Mat3& a, double tol = 1e-15);

/// Low-degree annihilating identity of A: A^2 = kappa A (Quadratic) or
/// A^3 = kappa A (Cubic).
struct Annihilator {
    enum class Kind { Quadratic, Cubic, None };
    Kind kind = Kind::None;
    double kappa = 0.0;
};

/// Detects A^2 = kappa A, else A^3 = kappa A, each accepted when the
/// defect is at most tol * (1 + |A|^2) in max-abs. kappa is the least
/// squares fit over entries with |A_ij| > tol; for A ~ 0 it falls back to
/// tr A (quadratic) or tr(A^2)/2 (cubic).
Annihilator annihilator(const Mat3& a, double tol);

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Mat3& m);

}  // namespace paralie
