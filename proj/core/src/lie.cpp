#include "paralie/lie.hpp"

#include "paralie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paralie {

StructureConstants StructureConstants::from_tensor(const Tensor3& c) {
    if (!c.all_finite()) throw NotALieAlgebra("structure constants must be finite", 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(c(i, j, k) + c(j, i, k)));
    if (worst != 0.0) {
        throw NotALieAlgebra("structure constants are not antisymmetric in (i, j)", worst);
    }
    StructureConstants out;
    out.c_ = c;
    return out;
}

void StructureConstants::add_bracket(std::size_t i, std::size_t j, std::size_t k, double v) {
    if (i == j) throw std::invalid_argument("add_bracket: [E_i, E_i] is zero");
    c_(i, j, k) += v;
    c_(j, i, k) -= v;
}

StructureConstants class_algebra(const ClassParams& p) {
    validate(p);
    const double al = p.alpha;
    const double bt = p.beta;
    StructureConstants c;
    switch (p.id) {
        case ClassId::F0:
            break;
        case ClassId::F1:
            c.add_bracket(1, 2, 1, al);
            c.add_bracket(1, 2, 2, -bt);
            break;
        case ClassId::F4:
            c.add_bracket(0, 1, 2, al);
            c.add_bracket(0, 2, 1, al);
            break;
        case ClassId::F5:
            c.add_bracket(0, 1, 1, al);
            c.add_bracket(0, 2, 2, al);
            break;
        case ClassId::F8:
            c.add_bracket(0, 1, 2, al);
            c.add_bracket(0, 2, 1, -al);
            c.add_bracket(1, 2, 0, 2.0 * al);
            break;
        case ClassId::F9:
            c.add_bracket(0, 1, 1, al);
            c.add_bracket(0, 2, 2, -al);
            break;
        case ClassId::F10:
            c.add_bracket(0, 1, 2, -al);
            c.add_bracket(0, 2, 1, al);
            break;
        case ClassId::F11:
            c.add_bracket(0, 1, 0, al);
            c.add_bracket(0, 2, 0, bt);
            break;
    }
    return c;
}

StructureConstants para_sasakian_algebra() {
    StructureConstants c;
    c.add_bracket(0, 1, 2, -1.0);
    c.add_bracket(0, 2, 1, -1.0);
    return c;
}

double jacobi_defect(const StructureConstants& c) {
    // [[e_i, e_j], e_k] has e_m component sum_l C_ij^l C_lk^m.
    auto nested = [&c](std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
        double s = 0.0;
        for (std::size_t l = 0; l < 3; ++l) s += c(i, j, l) * c(l, k, m);
        return s;
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t m = 0; m < 3; ++m) {
                    const double cyc = nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m);
                    worst = std::max(worst, std::abs(cyc));
                }
    return worst;
}

Vec3 bracket(const StructureConstants& c, const Vec3& x, const Vec3& y) {
    Vec3 z;
    for (std::size_t k = 0; k < 3; ++k) {
        double s = 0.0;
        // Pairs i < j only, so that [x, y] = -[y, x] holds bit for bit.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) s += (x[i] * y[j] - x[j] * y[i]) * c(i, j, k);
        z[k] = s;
    }
    return z;
}

Mat3 adjoint_rep(const StructureConstants& c, double a, double b, double cc) {
    const double coeff[3] = {a, b, cc};
    Mat3 out;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < 3; ++i) {
                if (coeff[i] != 0.0) s -= coeff[i] * c(i, j, k);
            }
            out.at(j, k) = s;
        }
    out.validate();
    return out;
}

}  // namespace paralie
