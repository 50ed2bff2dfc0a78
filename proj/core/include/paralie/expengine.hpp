#pragma once

#include "paralie/classes.hpp"
#include "paralie/mat3.hpp"

#include <optional>
#include <string_view>

namespace paralie {

/// Which case of the closed form produced an ExpResult.
///   Generic     - analytic t, u
///   TraceZero   - tr A ~ 0 for the classes with A^2 = kappa A
///   TrA2Zero    - tr A^2 ~ 0 for the classes with A^3 = kappa A
///   ZeroMatrix  - A == 0, e^A = E
enum class Branch { Generic, TraceZero, TrA2Zero, ZeroMatrix };

std::string_view to_string(Branch b);

/// |tr A| (resp. |tr A^2|) at or below this selects the degenerate branch.
inline constexpr double kBranchThreshold = 1e-12;

/// e^A = E + t A + u A^2.
struct ExpResult {
    Mat3 A;
    double t = 1.0;
    double u = 0.0;
    Branch branch = Branch::ZeroMatrix;
    Mat3 expA;
    std::optional<double> oracle_residual;
};

/// How the exponential series collapses for a class.
///   Linear      - A^2 = (tr A) A          (F1, F11)
///   HalfLinear  - A^2 = (tr A / 2) A      (F5)
///   Cubic       - A^3 = (tr A^2 / 2) A    (F4, F8, F9, F10)
enum class ExpFamily { Linear, HalfLinear, Cubic };

/// Throws std::invalid_argument for F0.
ExpFamily family_of(ClassId id);

enum class BranchPolicy { Automatic, ForceGeneric, ForceDegenerate };

struct ExpCoefficients {
    double t = 1.0;
    double u = 0.0;
    bool degenerate = false;
};

/// For A^2 = kappa A: t = (e^kappa - 1) / kappa, u = 0; degenerate t = 1.
/// Automatic picks the degenerate case for |kappa| <= kBranchThreshold.
ExpCoefficients quadratic_coefficients(double kappa, BranchPolicy policy = BranchPolicy::Automatic);

/// For A^3 = kappa A:
///   kappa > 0: t = sinh r / r, u = (cosh r - 1) / r^2, r = sqrt(kappa)
///   kappa < 0: t = sin q / q,  u = (1 - cos q) / q^2,  q = sqrt(-kappa)
/// The degenerate case has t = 1 and u = 0 when A^2 vanishes (then
/// e^A = E + A exactly), otherwise u = 1/2, the common limit of both
/// generic expressions. Automatic picks it for |2 kappa| <= kBranchThreshold.
ExpCoefficients cubic_coefficients(double kappa, bool square_vanishes,
                                   BranchPolicy policy = BranchPolicy::Automatic);

/// E + t A + u A^2.
Mat3 assemble(const Mat3& a, double t, double u);

/// Closed-form group element for the class Lie algebra at coordinates
/// (a, b, c): A = adjoint_rep(class_algebra(p), a, b, c), then t and u from
/// the class family. Throws std::invalid_argument for F0 and
/// std::domain_error for non-finite input.
ExpResult closed_form(const ClassParams& p, double a, double b, double c,
                      BranchPolicy policy = BranchPolicy::Automatic);

/// The para-Sasakian group: A = [[0, -c, -b], [0, 0, a], [0, a, 0]],
/// t = sinh|a| / |a|, u = (cosh|a| - 1) / a^2.
ExpResult para_sasakian_group(double a, double b, double c);

/// Tolerance used for the oracle side of every verification.
inline constexpr double kOracleTolerance = 1e-15;

/// |closed_form(p, a, b, c).expA - expm_oracle(A)|, max-abs.
double verify_closed_form(const ClassParams& p, double a, double b, double c);

/// Fills r.oracle_residual and returns r.
ExpResult with_oracle(ExpResult r);

/// Class-agnostic reconstruction: detects the annihilating identity of A
/// with mat3's annihilator and applies the matching coefficients.
/// nullopt when A satisfies neither identity.
std::optional<Mat3> exp_from_annihilator(const Mat3& a, double tol);

}  // namespace paralie
