#include "paralie/expengine.hpp"

#include "paralie/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace paralie {

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::Generic: return "generic";
        case Branch::TraceZero: return "trace_zero";
        case Branch::TrA2Zero: return "trA2_zero";
        case Branch::ZeroMatrix: return "zero_matrix";
    }
    return "?";
}

ExpFamily family_of(ClassId id) {
    switch (id) {
        case ClassId::F1:
        case ClassId::F11: return ExpFamily::Linear;
        case ClassId::F5: return ExpFamily::HalfLinear;
        case ClassId::F4:
        case ClassId::F8:
        case ClassId::F9:
        case ClassId::F10: return ExpFamily::Cubic;
        case ClassId::F0: break;
    }
    throw std::invalid_argument("F0 is Abelian with A = 0; its group element is E");
}

ExpCoefficients quadratic_coefficients(double kappa, BranchPolicy policy) {
    const bool degenerate = policy == BranchPolicy::ForceDegenerate ||
                            (policy == BranchPolicy::Automatic &&
                             std::abs(kappa) <= kBranchThreshold);
    if (degenerate || kappa == 0.0) return {1.0, 0.0, degenerate};
    return {std::expm1(kappa) / kappa, 0.0, false};
}

ExpCoefficients cubic_coefficients(double kappa, bool square_vanishes, BranchPolicy policy) {
    const bool degenerate = policy == BranchPolicy::ForceDegenerate ||
                            (policy == BranchPolicy::Automatic &&
                             std::abs(2.0 * kappa) <= kBranchThreshold);
    if (degenerate || kappa == 0.0) {
        return {1.0, square_vanishes ? 0.0 : 0.5, degenerate};
    }
    // Half-angle forms keep u free of cancellation near kappa = 0.
    if (kappa > 0.0) {
        const double r = std::sqrt(kappa);
        const double s = std::sinh(0.5 * r);
        return {std::sinh(r) / r, 2.0 * s * s / kappa, false};
    }
    const double q = std::sqrt(-kappa);
    const double s = std::sin(0.5 * q);
    return {std::sin(q) / q, 2.0 * s * s / -kappa, false};
}

Mat3 assemble(const Mat3& a, double t, double u) {
    Mat3 out = Mat3::identity() + t * a;
    if (u != 0.0) out += u * (a * a);
    return out;
}

namespace {

void require_finite_coords(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw std::domain_error("coordinates must be finite");
    }
}

// Branch decision on the trace quantities themselves: |tr A| for the
// quadratic families, |tr A^2| for the cubic one.
BranchPolicy resolve(BranchPolicy policy, double trace_quantity) {
    if (policy != BranchPolicy::Automatic) return policy;
    return std::abs(trace_quantity) <= kBranchThreshold ? BranchPolicy::ForceDegenerate
                                                        : BranchPolicy::ForceGeneric;
}

ExpResult finish(const Mat3& a, ExpFamily family, BranchPolicy policy) {
    ExpResult r;
    r.A = a;
    if (a == Mat3::zero()) {
        r.expA = Mat3::identity();
        return r;
    }
    ExpCoefficients k;
    switch (family) {
        case ExpFamily::Linear: {
            const double tr = trace(a);
            k = quadratic_coefficients(tr, resolve(policy, tr));
            r.branch = k.degenerate ? Branch::TraceZero : Branch::Generic;
            break;
        }
        case ExpFamily::HalfLinear: {
            const double tr = trace(a);
            k = quadratic_coefficients(0.5 * tr, resolve(policy, tr));
            r.branch = k.degenerate ? Branch::TraceZero : Branch::Generic;
            break;
        }
        case ExpFamily::Cubic: {
            const double tr2 = trace_sq(a);
            const bool square_vanishes = (a * a) == Mat3::zero();
            k = cubic_coefficients(0.5 * tr2, square_vanishes, resolve(policy, tr2));
            r.branch = k.degenerate ? Branch::TrA2Zero : Branch::Generic;
            break;
        }
    }
    r.t = k.t;
    r.u = k.u;
    r.expA = assemble(a, r.t, r.u);
    return r;
}

}  // namespace

ExpResult closed_form(const ClassParams& p, double a, double b, double c, BranchPolicy policy) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
        throw std::domain_error("closed_form: non-finite class parameter");
    }
    validate(p);
    require_finite_coords(a, b, c);
    const ExpFamily family = family_of(p.id);
    return finish(adjoint_rep(class_algebra(p), a, b, c), family, policy);
}

ExpResult para_sasakian_group(double a, double b, double c) {
    require_finite_coords(a, b, c);
    const Mat3 A{{0.0, -c, -b}, {0.0, 0.0, a}, {0.0, a, 0.0}};
    return finish(A, ExpFamily::Cubic, BranchPolicy::Automatic);
}

double verify_closed_form(const ClassParams& p, double a, double b, double c) {
    const ExpResult r = closed_form(p, a, b, c);
    return max_abs_diff(r.expA, expm_oracle(r.A, kOracleTolerance));
}

ExpResult with_oracle(ExpResult r) {
    r.oracle_residual = max_abs_diff(r.expA, expm_oracle(r.A, kOracleTolerance));
    return r;
}

std::optional<Mat3> exp_from_annihilator(const Mat3& a, double tol) {
    const Annihilator ann = annihilator(a, tol);
    switch (ann.kind) {
        case Annihilator::Kind::Quadratic: {
            const auto k = quadratic_coefficients(ann.kappa);
            return assemble(a, k.t, 0.0);
        }
        case Annihilator::Kind::Cubic: {
            const auto k = cubic_coefficients(ann.kappa, (a * a) == Mat3::zero());
            return assemble(a, k.t, k.u);
        }
        case Annihilator::Kind::None: break;
    }
    return std::nullopt;
}

}  // namespace paralie
