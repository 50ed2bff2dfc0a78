#include "paralie/levicivita.hpp"

#include "paralie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace paralie {

namespace {

void require_lie_algebra(const StructureConstants& c) {
    const double defect = jacobi_defect(c);
    if (defect > kJacobiTolerance) {
        std::ostringstream msg;
        msg << "not a Lie algebra: Jacobi defect " << defect;
        throw NotALieAlgebra(msg.str(), defect);
    }
}

}  // namespace

ConnectionCoeffs connection_coeffs(const StructureConstants& c) {
    require_lie_algebra(c);
    ConnectionCoeffs conn;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                conn.gamma(i, j, k) = 0.5 * (c(i, j, k) - c(i, k, j) - c(j, k, i));
    return conn;
}

double metric_defect(const ConnectionCoeffs& conn) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(conn.gamma(i, j, k) + conn.gamma(i, k, j)));
    return worst;
}

double torsion_defect(const ConnectionCoeffs& conn, const StructureConstants& c) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(conn.gamma(i, j, k) - conn.gamma(j, i, k) -
                                                 c(i, j, k)));
    return worst;
}

FTensor f_tensor(const StructureConstants& c, const PhiBasisStructure& s) {
    const auto residuals = check_structure(s);
    if (!passes(residuals, 1e-12)) {
        throw InvalidStructure("structure fails its defining identities");
    }
    if (max_abs_diff(s.g, Mat3::identity()) > 1e-12) {
        throw InvalidStructure("frame must be orthonormal for the left-invariant connection");
    }
    const ConnectionCoeffs conn = connection_coeffs(c);
    const Tensor3& gm = conn.gamma;
    const Mat3& phi = s.phi;

    FTensor F;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                double v = 0.0;
                for (std::size_t m = 0; m < 3; ++m) {
                    v += phi(m, j) * gm(i, m, k) - gm(i, j, m) * phi(k, m);
                }
                F.f(i, j, k) = v;
            }
    return F;
}

ClassReport classify_manifold(const StructureConstants& c, double tol) {
    ClassReport report = match_class(f_tensor(c, standard_structure()), tol);
    report.para_sasakian = is_para_sasakian(report);
    return report;
}

bool is_para_sasakian(const ClassReport& report) {
    return report.is_pure() && report.verdict.front() == ClassId::F4 &&
           std::abs(report.lee.theta[0] + 2.0) <= 1e-9;
}

}  // namespace paralie
