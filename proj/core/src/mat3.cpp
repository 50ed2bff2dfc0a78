#include "paralie/mat3.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace paralie {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": non-finite entry");
    }
}

Vec3 checked(Vec3 v) {
    for (std::size_t i = 0; i < 3; ++i) require_finite(v[i], "Vec3");
    return v;
}

}  // namespace

// ---------------------------------------------------------------- Vec3

Vec3::Vec3(double x0, double x1, double x2) : v_{x0, x1, x2} {
    checked(*this);
}

Vec3 Vec3::basis(std::size_t i) {
    Vec3 v;
    v.v_.at(i) = 1.0;
    return v;
}

Vec3& Vec3::operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v_[i] += o.v_[i];
    return *this = checked(*this);
}

Vec3& Vec3::operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v_[i] -= o.v_[i];
    return *this = checked(*this);
}

Vec3& Vec3::operator*=(double s) {
    for (auto& x : v_) x *= s;
    return *this = checked(*this);
}

Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
Vec3 operator*(double s, Vec3 v) { return v *= s; }

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double max_abs(const Vec3& v) {
    return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

// ---------------------------------------------------------------- Mat3

Mat3::Mat3(const Rows& rows) {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) e_[3 * r + c] = rows[r][c];
    validate();
}

Mat3::Mat3(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() != 3) throw std::invalid_argument("Mat3: expected 3 rows");
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != 3) throw std::invalid_argument("Mat3: expected 3 columns");
        std::size_t c = 0;
        for (double x : row) e_[3 * r + c++] = x;
        ++r;
    }
    validate();
}

Mat3 Mat3::identity() { return diag(1.0, 1.0, 1.0); }

Mat3 Mat3::diag(double d0, double d1, double d2) {
    Mat3 m;
    m.e_[0] = d0;
    m.e_[4] = d1;
    m.e_[8] = d2;
    m.validate();
    return m;
}

Mat3 Mat3::outer(const Vec3& col, const Vec3& row) {
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m.e_[3 * r + c] = col[r] * row[c];
    m.validate();
    return m;
}

void Mat3::validate() const {
    for (double x : e_) require_finite(x, "Mat3");
}

Mat3::Rows Mat3::rows() const {
    Rows out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out[r][c] = e_[3 * r + c];
    return out;
}

Mat3& Mat3::operator+=(const Mat3& o) {
    for (std::size_t i = 0; i < 9; ++i) e_[i] += o.e_[i];
    validate();
    return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
    for (std::size_t i = 0; i < 9; ++i) e_[i] -= o.e_[i];
    validate();
    return *this;
}

Mat3& Mat3::operator*=(double s) {
    for (auto& x : e_) x *= s;
    validate();
    return *this;
}

Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
Mat3 operator-(Mat3 a) { return a *= -1.0; }
Mat3 operator*(double s, Mat3 a) { return a *= s; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out.at(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    out.validate();
    return out;
}

Vec3 operator*(const Mat3& a, const Vec3& x) {
    return Vec3(a(0, 0) * x[0] + a(0, 1) * x[1] + a(0, 2) * x[2],
                a(1, 0) * x[0] + a(1, 1) * x[1] + a(1, 2) * x[2],
                a(2, 0) * x[0] + a(2, 1) * x[1] + a(2, 2) * x[2]);
}

Mat3 transpose(const Mat3& a) {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out.at(r, c) = a(c, r);
    return out;
}

double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

double trace_sq(const Mat3& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * a(k, i);
    return s;
}

double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double max_abs(const Mat3& a) {
    double m = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m = std::max(m, std::abs(a(r, c)));
    return m;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

// ---------------------------------------------------------------- oracle

namespace {

using Wide = long double;
using WideMat = std::array<std::array<Wide, 3>, 3>;

WideMat wide_mul(const WideMat& a, const WideMat& b) {
    WideMat out{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c] + a[r][2] * b[2][c];
    return out;
}

Wide wide_max_abs(const WideMat& a) {
    Wide m = 0;
    for (const auto& row : a)
        for (Wide x : row) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

Mat3 expm_oracle(const Mat3& a, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("expm_oracle: tol must be positive");
    a.validate();

    int squarings = 0;
    double norm = max_abs(a);
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const Wide scale = std::ldexp(Wide{1}, -squarings);
    const Wide cutoff = Wide{tol} * scale;

    WideMat x{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) x[r][c] = Wide{a(r, c)} * scale;

    WideMat sum{};
    WideMat term{};
    for (std::size_t i = 0; i < 3; ++i) sum[i][i] = term[i][i] = 1;

    // Scaled norm <= 1/2 bounds the term ratio by 3/(2k), so the loop is
    // short; the cap only guards against pathological tolerances.
    for (int k = 1; k < 64; ++k) {
        term = wide_mul(term, x);
        for (auto& row : term)
            for (Wide& t : row) t /= k;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) sum[r][c] += term[r][c];
        if (wide_max_abs(term) < cutoff) break;
    }
    for (int s = 0; s < squarings; ++s) sum = wide_mul(sum, sum);

    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out.at(r, c) = static_cast<double>(sum[r][c]);
    out.validate();
    return out;
}

// ---------------------------------------------------------------- annihilator

namespace {

// Least squares kappa for lhs = kappa * a over entries with |a_ij| > tol.
double fit_kappa(const Mat3& lhs, const Mat3& a, double tol, double fallback) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            if (std::abs(a(r, c)) > tol) {
                num += lhs(r, c) * a(r, c);
                den += a(r, c) * a(r, c);
            }
        }
    return den > 0.0 ? num / den : fallback;
}

}  // namespace

Annihilator annihilator(const Mat3& a, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("annihilator: tol must be positive");
    const double bound = tol * (1.0 + max_abs(a) * max_abs(a));

    const Mat3 a2 = a * a;
    const double kq = fit_kappa(a2, a, tol, trace(a));
    if (max_abs_diff(a2, kq * a) <= bound) return {Annihilator::Kind::Quadratic, kq};

    const Mat3 a3 = a2 * a;
    const double kc = fit_kappa(a3, a, tol, 0.5 * trace_sq(a));
    if (max_abs_diff(a3, kc * a) <= bound) return {Annihilator::Kind::Cubic, kc};

    return {};
}

// ---------------------------------------------------------------- printing

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    // Adding 0.0 prints -0 as 0.
    return os << '(' << v[0] + 0.0 << ", " << v[1] + 0.0 << ", " << v[2] + 0.0 << ')';
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    for (std::size_t r = 0; r < 3; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < 3; ++c) {
            os << std::setw(14) << std::setprecision(8) << m(r, c) + 0.0;
        }
        os << (r == 2 ? " ]" : "\n");
    }
    os.flags(flags);
    os.precision(prec);
    return os;
}

}  // namespace paralie
