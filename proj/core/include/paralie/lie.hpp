#pragma once

#include "paralie/classes.hpp"
#include "paralie/mat3.hpp"
#include "paralie/tensor3.hpp"

namespace paralie {

/// Coefficients of [E_i, E_j] = C(i, j, k) E_k. Antisymmetric in (i, j) by
/// construction.
class StructureConstants {
public:
    StructureConstants() = default;

    /// Throws NotALieAlgebra unless c(i, j, k) == -c(j, i, k) exactly and
    /// every entry is finite.
    static StructureConstants from_tensor(const Tensor3& c);

    /// Sets [E_i, E_j] += v E_k together with its antisymmetric partner.
    void add_bracket(std::size_t i, std::size_t j, std::size_t k, double v);

    double operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
    const Tensor3& tensor() const { return c_; }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    Tensor3 c_;
};

/// The Lie algebra of a basic class, e.g. for F8:
/// [E0, E1] = alpha E2, [E0, E2] = -alpha E1, [E1, E2] = 2 alpha E0.
/// F0 gives the Abelian algebra.
StructureConstants class_algebra(const ClassParams& p);

/// [E0, E1] = -E2, [E0, E2] = -E1, [E1, E2] = 0, i.e. F4 with alpha = -1.
StructureConstants para_sasakian_algebra();

/// max over (i, j, k, m) of |sum over cyclic (i, j, k) of C_ij^l C_lk^m|.
double jacobi_defect(const StructureConstants& c);

/// z^k = x^i y^j C_ij^k.
Vec3 bracket(const StructureConstants& c, const Vec3& x, const Vec3& y);

/// A = a M0 + b M1 + c M2 with (M_i)_j^k = -C_ij^k, stored as A(j, k):
/// row j, column k. This is the convention under which the basic-class
/// matrices come out as x -> -ad(x)^T, a faithful representation for the
/// classes here.
Mat3 adjoint_rep(const StructureConstants& c, double a, double b, double cc);

}  // namespace paralie
