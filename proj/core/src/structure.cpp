#include "paralie/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace paralie {

PhiBasisStructure standard_structure() {
    PhiBasisStructure s;
    s.phi = Mat3{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    s.xi = Vec3::basis(0);
    s.eta = Vec3::basis(0);
    s.g = Mat3::identity();
    return s;
}

std::vector<StructureResidual> check_structure(const PhiBasisStructure& s) {
    const Mat3& phi = s.phi;
    const Mat3 id = Mat3::identity();

    const double square = max_abs(phi * phi - id + Mat3::outer(s.xi, s.eta));
    const double eta_xi = std::abs(dot(s.eta, s.xi) - 1.0);
    const double eta_phi = max_abs(transpose(phi) * s.eta);
    const double phi_xi = max_abs(phi * s.xi);
    const double tr = std::abs(trace(phi));
    // g(phi x, phi y) - g(x, y) + eta(x) eta(y) on frame pairs.
    const double metric = max_abs(transpose(phi) * s.g * phi - s.g + Mat3::outer(s.eta, s.eta));

    return {{"phi^2 - I + eta(x)xi", square}, {"eta(xi) - 1", eta_xi},
            {"eta o phi", eta_phi},            {"phi xi", phi_xi},
            {"tr phi", tr},                    {"metric compatibility", metric}};
}

bool passes(const std::vector<StructureResidual>& residuals, double tol) {
    return std::all_of(residuals.begin(), residuals.end(),
                       [tol](const StructureResidual& r) { return r.value <= tol; });
}

LeeForms lee_forms(const FTensor& F) {
    const Tensor3& f = F.f;
    LeeForms lee;
    lee.theta = Vec3(f(1, 1, 0) + f(2, 2, 0), f(1, 1, 1), f(2, 2, 2));
    lee.theta_star = Vec3(f(1, 2, 0) + f(2, 1, 0), -f(2, 2, 2), -f(1, 1, 1));
    lee.omega = Vec3(0.0, f(0, 0, 1), f(0, 0, 2));
    return lee;
}

LeeForms lee_forms_contracted(const FTensor& F, const PhiBasisStructure& s) {
    // F(x, y, e_k) extended linearly in x and y.
    auto eval = [&F](const Vec3& x, const Vec3& y, std::size_t k) {
        double v = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) v += x[i] * y[j] * F.f(i, j, k);
        return v;
    };
    // Inverse of the metric block on the contact frame {e1, e2}.
    const double g11 = s.g(1, 1), g12 = s.g(1, 2), g22 = s.g(2, 2);
    const double d = g11 * g22 - g12 * g12;
    if (d == 0.0) throw std::domain_error("lee_forms_contracted: degenerate metric");
    const double ginv[2][2] = {{g22 / d, -g12 / d}, {-g12 / d, g11 / d}};

    LeeForms lee;
    for (std::size_t k = 0; k < 3; ++k) {
        double th = 0.0;
        double ths = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const Vec3 ei = Vec3::basis(i + 1);
                const Vec3 ej = Vec3::basis(j + 1);
                th += ginv[i][j] * eval(ei, ej, k);
                ths += ginv[i][j] * eval(ei, s.phi * ej, k);
            }
        lee.theta[k] = th;
        lee.theta_star[k] = ths;
        lee.omega[k] = eval(s.xi, s.xi, k);
    }
    return lee;
}

namespace {

using Form = std::function<double(const Vec3&, const Vec3&, const Vec3&)>;

Form pattern_form(const ClassParams& p) {
    const double al = p.alpha;
    const double bt = p.beta;
    // Symmetrised products y^a z^b + y^b z^a.
    auto sym = [](const Vec3& y, const Vec3& z, std::size_t a, std::size_t b) {
        return y[a] * z[b] + y[b] * z[a];
    };
    switch (p.id) {
        case ClassId::F0:
            return [](const Vec3&, const Vec3&, const Vec3&) { return 0.0; };
        case ClassId::F1: {
            const double th1 = 2.0 * al;
            const double th2 = 2.0 * bt;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return (x[1] * th1 - x[2] * th2) * (y[1] * z[1] - y[2] * z[2]);
            };
        }
        case ClassId::F4: {
            const double half_th0 = al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return half_th0 * (x[1] * sym(y, z, 0, 1) + x[2] * sym(y, z, 0, 2));
            };
        }
        case ClassId::F5: {
            const double half_ths0 = al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return half_ths0 * (x[1] * sym(y, z, 0, 2) + x[2] * sym(y, z, 0, 1));
            };
        }
        case ClassId::F8: {
            const double lambda = al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return lambda * (x[1] * sym(y, z, 0, 1) - x[2] * sym(y, z, 0, 2));
            };
        }
        case ClassId::F9: {
            const double mu = al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return mu * (x[1] * sym(y, z, 0, 2) - x[2] * sym(y, z, 0, 1));
            };
        }
        case ClassId::F10: {
            const double nu = 2.0 * al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return nu * x[0] * (y[1] * z[1] - y[2] * z[2]);
            };
        }
        case ClassId::F11: {
            const double om1 = bt;
            const double om2 = al;
            return [=](const Vec3& x, const Vec3& y, const Vec3& z) {
                return x[0] * (om1 * sym(y, z, 0, 1) + om2 * sym(y, z, 0, 2));
            };
        }
    }
    throw std::invalid_argument("unknown class id");
}

}  // namespace

FTensor class_pattern(const ClassParams& p) {
    validate(p);
    const Form form = pattern_form(p);
    FTensor out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                out.f(i, j, k) = form(Vec3::basis(i), Vec3::basis(j), Vec3::basis(k));
    return out;
}

ClassParams ClassReport::params(ClassId id) const {
    for (const ClassParams& c : components) {
        if (c.id == id) return c;
    }
    return {id, 0.0, 0.0};
}

namespace {

double project(const Tensor3& f, const Tensor3& unit) {
    return inner(f, unit) / inner(unit, unit);
}

}  // namespace

ClassReport match_class(const FTensor& F, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("match_class: tol must be positive");
    if (!F.f.all_finite()) throw std::domain_error("match_class: non-finite F component");

    ClassReport report;
    Tensor3 reconstructed;
    for (ClassId id : kBasicClasses) {
        const Tensor3 unit_alpha = class_pattern({id, 1.0, 0.0}).f;
        ClassParams p{id, project(F.f, unit_alpha), 0.0};
        reconstructed += p.alpha * unit_alpha;
        if (has_beta(id)) {
            const Tensor3 unit_beta = class_pattern({id, 0.0, 1.0}).f;
            p.beta = project(F.f, unit_beta);
            reconstructed += p.beta * unit_beta;
        }
        report.components.push_back(p);
        if (std::abs(p.alpha) > tol || std::abs(p.beta) > tol) report.verdict.push_back(id);
    }
    if (report.verdict.empty()) report.verdict.push_back(ClassId::F0);

    report.residual = (F.f - reconstructed).max_abs();
    report.unclassified = report.residual > tol;
    report.lee = lee_forms(F);
    return report;
}

}  // namespace paralie
