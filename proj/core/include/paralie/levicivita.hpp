#pragma once

#include "paralie/lie.hpp"
#include "paralie/structure.hpp"

namespace paralie {

/// Gamma(i, j, k) = g(nabla_{e_i} e_j, e_k) for the left-invariant metric
/// that makes the frame orthonormal.
struct ConnectionCoeffs {
    Tensor3 gamma;
};

/// Jacobi defect above which constants are rejected as not a Lie algebra.
inline constexpr double kJacobiTolerance = 1e-12;

/// Left-invariant Koszul formula with g = identity:
///   Gamma_ijk = (C_ij^k - C_ik^j - C_jk^i) / 2.
/// Throws NotALieAlgebra if jacobi_defect(c) > kJacobiTolerance.
ConnectionCoeffs connection_coeffs(const StructureConstants& c);

/// max |Gamma_ijk + Gamma_ikj|.
double metric_defect(const ConnectionCoeffs& conn);
/// max |Gamma_ijk - Gamma_jik - C_ij^k|.
double torsion_defect(const ConnectionCoeffs& conn, const StructureConstants& c);

/// F_ijk = g(nabla_{e_i}(phi e_j) - phi(nabla_{e_i} e_j), e_k).
/// Throws InvalidStructure if s fails check_structure at 1e-12, or if its
/// metric is not the identity (the connection assumes an orthonormal
/// frame). Throws NotALieAlgebra as connection_coeffs does.
FTensor f_tensor(const StructureConstants& c, const PhiBasisStructure& s);

/// Default tolerance for pattern matching in classify_manifold.
inline constexpr double kClassifyTolerance = 1e-12;

/// connection_coeffs -> f_tensor (standard structure) -> match_class, with
/// the para-Sasakian flag filled in.
ClassReport classify_manifold(const StructureConstants& c, double tol = kClassifyTolerance);

/// Pure F4 with theta_0 = -2 to within 1e-9, i.e. alpha = -1.
bool is_para_sasakian(const ClassReport& report);

}  // namespace paralie
