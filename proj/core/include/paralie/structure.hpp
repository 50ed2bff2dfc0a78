#pragma once

#include "paralie/classes.hpp"
#include "paralie/mat3.hpp"
#include "paralie/tensor3.hpp"

#include <map>
#include <string>
#include <vector>

namespace paralie {

/// Almost paracontact almost paracomplex structure (phi, xi, eta) and a
/// compatible metric g, written in a frame. phi(r, c) is the e_r component
/// of phi(e_c); g(i, j) = g(e_i, e_j).
struct PhiBasisStructure {
    Mat3 phi;
    Vec3 xi;
    Vec3 eta;
    Mat3 g;
};

/// phi e0 = 0, phi e1 = e2, phi e2 = e1, xi = e0, eta = e0^*, g = identity.
PhiBasisStructure standard_structure();

struct StructureResidual {
    std::string name;
    double value = 0.0;
};

/// Residuals of the six defining identities, in this order:
/// "phi^2 - I + eta(x)xi", "eta(xi) - 1", "eta o phi", "phi xi", "tr phi",
/// "metric compatibility". Each is a max-abs value.
std::vector<StructureResidual> check_structure(const PhiBasisStructure& s);

/// True when every residual of check_structure is at most tol.
bool passes(const std::vector<StructureResidual>& residuals, double tol);

/// F(x, y, z) = g((nabla_x phi) y, z) in frame components.
struct FTensor {
    Tensor3 f;
};

/// Lee forms theta, theta^*, omega.
struct LeeForms {
    Vec3 theta;
    Vec3 theta_star;
    Vec3 omega;
};

/// Lee forms from the 3-dimensional component table:
///   theta   = (F110 + F220,  F111,  F222)
///   theta^* = (F120 + F210, -F222, -F111)
///   omega   = (0, F001, F002)
LeeForms lee_forms(const FTensor& F);

/// Lee forms by direct contraction over the contact frame {e1, e2}:
/// theta(z) = g^ij F(e_i, e_j, z), theta^*(z) = g^ij F(e_i, phi e_j, z),
/// omega(z) = F(xi, xi, z). Assumes xi = e0. Makes no use of the
/// symmetries of F, so agreement with lee_forms is a real check.
LeeForms lee_forms_contracted(const FTensor& F, const PhiBasisStructure& s);

/// The 3-dimensional basic-class pattern F_s evaluated on all frame
/// triples. Parameters map to the tensor as
///   F1: theta_1 = 2 alpha, theta_2 = 2 beta    F4: theta_0 = 2 alpha
///   F5: theta^*_0 = 2 alpha                   F8: lambda = alpha
///   F9: mu = alpha                            F10: nu = 2 alpha
///   F11: omega_2 = alpha, omega_1 = beta      F0: zero tensor
FTensor class_pattern(const ClassParams& p);

/// Result of decomposing an F tensor (or a Lie algebra, via levicivita)
/// into basic-class patterns.
struct ClassReport {
    /// Recovered parameters of every basic class, in table order.
    std::vector<ClassParams> components;
    /// Classes with a parameter above tol; {F0} if there are none.
    std::vector<ClassId> verdict;
    /// |F - sum_s F_s|, max-abs.
    double residual = 0.0;
    /// The tensor has a part outside the span of the seven patterns.
    bool unclassified = false;
    LeeForms lee;
    bool para_sasakian = false;

    bool is_pure() const { return verdict.size() == 1 && !unclassified; }
    /// Parameters of class id from components (zeros for F0).
    ClassParams params(ClassId id) const;
};

/// Orthogonal projection of F onto each basic-class pattern. The seven
/// patterns (nine directions, counting beta) are mutually orthogonal in
/// component space, so the decomposition is exact on their span.
ClassReport match_class(const FTensor& F, double tol);

}  // namespace paralie
