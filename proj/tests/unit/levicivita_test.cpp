#include "paralie/levicivita.hpp"

#include "paralie/errors.hpp"
#include "support/table1.hpp"

#include <gtest/gtest.h>

#include <array>

namespace paralie {
namespace {

const std::array<double, 6> kGrid{-2, -1, -0.5, 0.5, 1, 2};

StructureConstants not_jacobi() {
    StructureConstants c;
    c.add_bracket(0, 1, 1, 1.0);
    c.add_bracket(1, 2, 0, 1.0);
    return c;
}

TEST(ConnectionCoeffs, AbelianIsFlat) {
    EXPECT_EQ(connection_coeffs(StructureConstants{}).gamma, Tensor3{});
}

TEST(ConnectionCoeffs, F5HandValue) {
    // 2 Gamma_110 = -2 C_10^1 = 2 alpha.
    const ConnectionCoeffs conn = connection_coeffs(class_algebra({ClassId::F5, 1, 0}));
    EXPECT_EQ(conn.gamma(1, 1, 0), 1.0);
    EXPECT_EQ(conn.gamma(1, 0, 1), -1.0);
}

TEST(ConnectionCoeffs, F8TorsionIdentity) {
    const StructureConstants c = class_algebra({ClassId::F8, 1, 0});
    const ConnectionCoeffs conn = connection_coeffs(c);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(conn.gamma(1, 2, k) - conn.gamma(2, 1, k), (k == 0 ? 2.0 : 0.0));
    }
}

TEST(ConnectionCoeffs, RejectsNonLieAlgebra) {
    try {
        connection_coeffs(not_jacobi());
        FAIL() << "expected NotALieAlgebra";
    } catch (const NotALieAlgebra& e) {
        EXPECT_EQ(e.defect(), 1.0);
    }
}

TEST(ConnectionCoeffsProperty, MetricAndTorsionFreeOnGrid) {
    for (ClassId id : kBasicClasses)
        for (double al : kGrid)
            for (double bt : kGrid) {
                const StructureConstants c = class_algebra({id, al, has_beta(id) ? bt : 0.0});
                const ConnectionCoeffs conn = connection_coeffs(c);
                EXPECT_LE(metric_defect(conn), 1e-14);
                EXPECT_LE(torsion_defect(conn, c), 1e-14);
            }
}

TEST(ConnectionCoeffsProperty, ArbitraryLieAlgebrasToo) {
    // Invariants do not depend on the class structure; try so(3) and a
    // solvable algebra with generic coefficients.
    StructureConstants so3;
    so3.add_bracket(0, 1, 2, 1.3);
    so3.add_bracket(1, 2, 0, 1.3);
    so3.add_bracket(2, 0, 1, 1.3);
    StructureConstants solv;
    solv.add_bracket(0, 1, 1, 0.7);
    solv.add_bracket(0, 1, 2, -1.1);
    solv.add_bracket(0, 2, 1, 2.0);
    solv.add_bracket(0, 2, 2, 0.3);
    for (const auto& c : {so3, solv}) {
        ASSERT_EQ(jacobi_defect(c), 0.0);
        const ConnectionCoeffs conn = connection_coeffs(c);
        EXPECT_LE(metric_defect(conn), 1e-15);
        EXPECT_LE(torsion_defect(conn, c), 1e-15);
    }
}

TEST(FTensor, AbelianIsZero) {
    EXPECT_EQ(f_tensor(StructureConstants{}, standard_structure()).f, Tensor3{});
}

TEST(FTensor, F5HandValue) {
    const FTensor f = f_tensor(class_algebra({ClassId::F5, 1, 0}), standard_structure());
    EXPECT_EQ(f.f(1, 2, 0), 1.0);
}

TEST(FTensor, F11HandValue) {
    // nabla_{E0} E0 = -alpha E1, so F(E0, E0, .) = alpha g(E2, .).
    const StructureConstants c = class_algebra({ClassId::F11, 1, 0});
    EXPECT_EQ(connection_coeffs(c).gamma(0, 0, 1), -1.0);
    const FTensor f = f_tensor(c, standard_structure());
    EXPECT_EQ(f.f(0, 0, 2), 1.0);
    EXPECT_EQ(lee_forms(f).omega, Vec3(0, 0, 1));
}

TEST(FTensor, F1HandValuesFixBetaSign) {
    // nabla_{E2} E1 = beta E2 and nabla_{E2} E2 = -beta E1 give
    // F(E2, E2, E2) = 2 beta for [E1, E2] = alpha E1 - beta E2.
    const double bt = 0.75;
    const StructureConstants c = class_algebra({ClassId::F1, 0, bt});
    const ConnectionCoeffs conn = connection_coeffs(c);
    EXPECT_EQ(conn.gamma(2, 1, 2), bt);
    EXPECT_EQ(conn.gamma(2, 2, 1), -bt);
    const FTensor f = f_tensor(c, standard_structure());
    EXPECT_EQ(f.f(2, 2, 2), 2 * bt);
    EXPECT_EQ(lee_forms(f).theta[2], 2 * bt);
}

TEST(FTensor, RejectsBrokenStructure) {
    PhiBasisStructure s = standard_structure();
    s.phi = Mat3::identity();
    EXPECT_THROW(f_tensor(StructureConstants{}, s), InvalidStructure);
    EXPECT_THROW(f_tensor(not_jacobi(), standard_structure()), NotALieAlgebra);
}

TEST(FTensorProperty, LeeIdentitiesAndContraction) {
    testing::Gen gen(31);
    const PhiBasisStructure s = standard_structure();
    for (int n = 0; n < 100; ++n) {
        const ClassId id = gen.basic_class();
        const FTensor f = f_tensor(class_algebra({id, gen.uniform(-3, 3), gen.uniform(-3, 3)}), s);
        const LeeForms t = lee_forms(f);
        const LeeForms c = lee_forms_contracted(f, s);
        EXPECT_LE(std::abs(c.theta[1] + c.theta_star[2]), 1e-13);
        EXPECT_LE(std::abs(c.theta[2] + c.theta_star[1]), 1e-13);
        EXPECT_LE(std::abs(c.omega[0]), 1e-13);
        EXPECT_LE(max_abs(c.theta - t.theta), 1e-13) << to_string(id);
        EXPECT_LE(max_abs(c.theta_star - t.theta_star), 1e-13) << to_string(id);
        EXPECT_LE(max_abs(c.omega - t.omega), 1e-13) << to_string(id);
    }
}

TEST(ClassifyManifold, Examples) {
    const ClassReport f9 = classify_manifold(class_algebra({ClassId::F9, 2, 0}));
    EXPECT_EQ(f9.verdict, std::vector<ClassId>{ClassId::F9});
    EXPECT_NEAR(f9.params(ClassId::F9).alpha, 2.0, 1e-12);
    EXPECT_LE(f9.residual, 1e-12);

    const ClassReport f0 = classify_manifold(StructureConstants{});
    EXPECT_EQ(f0.verdict, std::vector<ClassId>{ClassId::F0});
    EXPECT_FALSE(f0.para_sasakian);

    const ClassReport ps = classify_manifold(class_algebra({ClassId::F4, -1, 0}));
    EXPECT_EQ(ps.verdict, std::vector<ClassId>{ClassId::F4});
    EXPECT_EQ(ps.params(ClassId::F4).alpha, -1.0);
    EXPECT_TRUE(ps.para_sasakian);
}

TEST(ClassifyManifold, RoundTripOnGrid) {
    for (ClassId id : kBasicClasses)
        for (double al : kGrid)
            for (double bt : kGrid) {
                const ClassParams p{id, al, has_beta(id) ? bt : 0.0};
                const ClassReport r = classify_manifold(class_algebra(p));
                ASSERT_TRUE(r.is_pure()) << to_string(id);
                EXPECT_EQ(r.verdict.front(), id);
                EXPECT_NEAR(r.params(id).alpha, p.alpha, 1e-12);
                EXPECT_NEAR(r.params(id).beta, p.beta, 1e-12);
            }
}

TEST(ClassifyManifold, ScalingEquivariance) {
    testing::Gen gen(41);
    for (int n = 0; n < 50; ++n) {
        const ClassId id = gen.basic_class();
        const double al = gen.uniform(-2, 2);
        const double bt = has_beta(id) ? gen.uniform(-2, 2) : 0.0;
        const double s = gen.uniform(-5, 5);
        const ClassReport r = classify_manifold(class_algebra({id, s * al, s * bt}));
        EXPECT_NEAR(r.params(id).alpha, s * al, 1e-12);
        EXPECT_NEAR(r.params(id).beta, s * bt, 1e-12);
    }
}

TEST(ClassifyManifold, NonClassAlgebraIsReportedNotForced) {
    // so(3) with this frame is not one of the basic-class algebras.
    StructureConstants so3;
    so3.add_bracket(0, 1, 2, 1.0);
    so3.add_bracket(1, 2, 0, 1.0);
    so3.add_bracket(2, 0, 1, 1.0);
    const ClassReport r = classify_manifold(so3);
    EXPECT_FALSE(r.para_sasakian);
    EXPECT_TRUE(r.unclassified || r.verdict.size() != 1 || r.verdict.front() == ClassId::F0);
}

TEST(IsParaSasakian, Examples) {
    EXPECT_TRUE(is_para_sasakian(classify_manifold(para_sasakian_algebra())));
    EXPECT_FALSE(is_para_sasakian(classify_manifold(class_algebra({ClassId::F4, 1, 0}))));
    EXPECT_FALSE(is_para_sasakian(classify_manifold(StructureConstants{})));
    EXPECT_FALSE(is_para_sasakian(classify_manifold(class_algebra({ClassId::F8, -1, 0}))));
    const ClassReport f4 = classify_manifold(class_algebra({ClassId::F4, 1, 0}));
    EXPECT_EQ(f4.lee.theta[0], 2.0);
}

}  // namespace
}  // namespace paralie
