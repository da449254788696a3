#include "fullerene/belyi.hpp"
#include "fullerene/compose.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fullerene;

namespace {

UniPoly zpoly(std::initializer_list<std::pair<unsigned, long>> terms) { return oracle::to_poly(oracle::dense(terms)); }

const oracle::Coeffs kV60 = oracle::dense({{20, 1}, {15, 228}, {10, 494}, {5, -228}, {0, 1}});
const oracle::Coeffs kP60 = oracle::dense({{11, 1}, {6, -11}, {1, -1}});
const oracle::Coeffs kM60 = oracle::dense({{30, 1}, {25, -522}, {20, -10005}, {10, -10005}, {5, 522}, {0, 1}});
const oracle::Coeffs kV72 = oracle::dense({{24, 1}, {18, 228}, {12, 494}, {6, -228}, {0, 1}});
const oracle::Coeffs kP72 = oracle::dense({{12, 1}, {6, -11}, {0, -1}});
const oracle::Coeffs kM72 = oracle::dense({{36, 1}, {30, -522}, {24, -10005}, {12, -10005}, {6, 522}, {0, 1}});

FactoredBelyi beta6_by_hand() {
    FactoredBelyi f;
    f.name = "d6";
    f.k = GaussRat(Rational(1, 1728));
    f.zeros = {{zpoly({{2, 1}, {1, 10}, {0, 5}}), 3}};
    f.ones = {{zpoly({{2, 1}, {1, 4}, {0, -1}}), 2}, {zpoly({{2, 1}, {1, 22}, {0, 125}}), 1}};
    f.poles = {{UniPoly::z(), 1}};
    f.infinity = {CriticalClass::Pole, 5};
    return f;
}

BelyiErrorKind verify_error(const FactoredBelyi& f) {
    try {
        verify_belyi(f);
    } catch (const BelyiError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "verify_belyi accepted " << f.name;
    return BelyiErrorKind::IdentityFailed;
}

}  // namespace

TEST(FaceVector, Dodecahedron) {
    const FullereneParams f = face_vector(0);
    EXPECT_EQ(f.f0, 20);
    EXPECT_EQ(f.f1, 30);
    EXPECT_EQ(f.f2, 12);
    EXPECT_EQ(f.dessin_edges, 60);
    EXPECT_TRUE(f.realizable);
}

TEST(FaceVector, Barrel) {
    const FullereneParams f = face_vector(2);
    EXPECT_EQ(f.f0, 24);
    EXPECT_EQ(f.f1, 36);
    EXPECT_EQ(f.f2, 14);
    EXPECT_EQ(f.dessin_edges, 72);
}

TEST(FaceVector, C22IsFlagged) {
    const FullereneParams f = face_vector(1);
    EXPECT_EQ(f.f0, 22);
    EXPECT_EQ(f.f1, 33);
    EXPECT_EQ(f.f2, 13);
    EXPECT_FALSE(f.realizable);
}

TEST(FaceVector, IdentitiesUpToHundred) {
    for (unsigned p6 = 0; p6 <= 100; ++p6) {
        const FullereneParams f = face_vector(p6);
        EXPECT_EQ(f.f0 - f.f1 + f.f2, 2) << p6;
        EXPECT_EQ(3 * f.f0, 2 * f.f1) << p6;
        EXPECT_EQ(f.f2, 12 + static_cast<long>(p6)) << p6;
        EXPECT_EQ(f.p5, 12) << p6;
        EXPECT_EQ(f.dessin_edges, 2 * f.f1) << p6;
        EXPECT_EQ(f.realizable, p6 != 1) << p6;
    }
}

TEST(Passport, FullerenePassports) {
    EXPECT_EQ(fullerene_passport(0).str(), "(3^20 | 2^30 | 5^12)");
    EXPECT_EQ(fullerene_passport(2).str(), "(3^24 | 2^36 | 6^2 5^12)");
    for (unsigned p6 = 0; p6 <= 100; ++p6) {
        const Passport p = fullerene_passport(p6);
        EXPECT_TRUE(p.balanced());
        EXPECT_EQ(p.black_sum(), 60 + 6 * p6);
    }
}

TEST(Passport, PartitionHelper) {
    EXPECT_EQ(partition({{5, 12}, {6, 2}}), (std::vector<unsigned>{6, 6, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5}));
    const Passport p({3, 3}, {1, 2, 1, 2}, {1, 5});
    EXPECT_EQ(p.white, (std::vector<unsigned>{2, 2, 1, 1}));
    EXPECT_EQ(p.str(), "(3^2 | 2^2 1^2 | 5^1 1^1)");
}

TEST(Counting, UnknownsAndEquations) {
    const EquationCount c0 = counting(0);
    EXPECT_EQ(c0.unknowns, 64);
    EXPECT_EQ(c0.equations, 61);
    EXPECT_EQ(c0.excess, 3);
    const EquationCount c2 = counting(2);
    EXPECT_EQ(c2.unknowns, 76);
    EXPECT_EQ(c2.equations, 73);
    for (unsigned p6 = 0; p6 <= 100; ++p6) EXPECT_EQ(counting(p6).excess, 3);
}

TEST(MainEquation, DodecahedronExact) {
    const UniPoly r = main_equation_residual(GaussRat(1728), oracle::to_poly(kV60), oracle::to_poly(kP60),
                                             UniPoly::constant(GaussRat(1)), oracle::to_poly(kM60),
                                             ScalarConvention::OnFaces);
    EXPECT_TRUE(r.is_zero()) << r.str();
}

TEST(MainEquation, BarrelExact) {
    const UniPoly r = main_equation_residual(GaussRat(1728), oracle::to_poly(kV72), oracle::to_poly(kP72), UniPoly::z(),
                                             oracle::to_poly(kM72), ScalarConvention::OnFaces);
    EXPECT_TRUE(r.is_zero()) << r.str();
}

TEST(MainEquation, EvaluationOracle) {
    // V^3 - 1728 P^5 H^6 - M^2 at 40 rational points, computed without the polynomial class.
    for (int i = -20; i < 20; ++i) {
        const oracle::Q x(i, 7);
        const oracle::Q d60 = oracle::power(oracle::eval(kV60, x), 3) - 1728 * oracle::power(oracle::eval(kP60, x), 5) -
                              oracle::power(oracle::eval(kM60, x), 2);
        const oracle::Q d72 = oracle::power(oracle::eval(kV72, x), 3) -
                              1728 * oracle::power(oracle::eval(kP72, x), 5) * oracle::power(x, 6) -
                              oracle::power(oracle::eval(kM72, x), 2);
        EXPECT_EQ(d60, 0) << i;
        EXPECT_EQ(d72, 0) << i;
    }
}

TEST(MainEquation, PerturbedMidpointPolynomial) {
    oracle::Coeffs m = kM60;
    m[5] += 1;
    const UniPoly r = main_equation_residual(GaussRat(1728), oracle::to_poly(kV60), oracle::to_poly(kP60),
                                             UniPoly::constant(GaussRat(1)), oracle::to_poly(m),
                                             ScalarConvention::OnFaces);
    EXPECT_FALSE(r.is_zero());
    // The residual is -(2 M z^5 + z^10) with the perturbed M.
    EXPECT_EQ(r.coeff(35), GaussRat(-2));
}

TEST(VerifyBelyi, Beta6) {
    EXPECT_EQ(verify_belyi(beta6_by_hand()).str(), "(3^2 | 2^2 1^2 | 5^1 1^1)");
}

TEST(VerifyBelyi, Presets) {
    EXPECT_EQ(verify_belyi(build_beta12()).str(), "(3^4 | 2^6 | 5^2 1^2)");
    EXPECT_EQ(verify_belyi(build_beta60()).str(), "(3^20 | 2^30 | 5^12)");
    EXPECT_EQ(verify_belyi(build_beta72()).str(), "(3^24 | 2^36 | 6^2 5^12)");
    for (const char* id : {"d6", "d12", "d60", "d72"}) {
        const FactoredBelyi f = preset(id);
        const Passport p = verify_belyi(f);
        EXPECT_TRUE(p.balanced()) << id;
        EXPECT_EQ(p.black_sum(), f.to_map().degree()) << id;
    }
}

TEST(VerifyBelyi, IdentityFailed) {
    FactoredBelyi f = beta6_by_hand();
    f.k = GaussRat(Rational(1, 1727));
    EXPECT_EQ(verify_error(f), BelyiErrorKind::IdentityFailed);
}

TEST(VerifyBelyi, FactorNotSquarefree) {
    FactoredBelyi f = beta6_by_hand();
    const UniPoly q = f.zeros[0].poly;
    f.zeros = {{q * q, 1}, {q, 1}};
    EXPECT_EQ(verify_error(f), BelyiErrorKind::FactorNotSquarefree);
}

TEST(VerifyBelyi, FactorsShareRoot) {
    FactoredBelyi f = beta6_by_hand();
    const UniPoly q = f.zeros[0].poly;
    f.zeros = {{q, 2}, {q, 1}};
    EXPECT_EQ(verify_error(f), BelyiErrorKind::FactorsShareRoot);
}

TEST(VerifyBelyi, DegreeImbalance) {
    FactoredBelyi f = beta6_by_hand();
    f.infinity.order = 4;
    EXPECT_EQ(verify_error(f), BelyiErrorKind::DegreeImbalance);
}

TEST(VerifyBelyi, MessageNamesTheFactor) {
    FactoredBelyi f = beta6_by_hand();
    const UniPoly q = f.zeros[0].poly;
    f.zeros = {{q * q, 1}, {q, 1}};
    try {
        verify_belyi(f);
        FAIL();
    } catch (const BelyiError& e) {
        EXPECT_NE(std::string(e.what()).find((q * q).str()), std::string::npos) << e.what();
    }
}

TEST(FactorBelyi, RoundTripsBeta6) {
    const FactoredBelyi hand = beta6_by_hand();
    const FactoredBelyi f = factor_belyi(hand.to_map(), "d6");
    EXPECT_EQ(verify_belyi(f), verify_belyi(hand));
    EXPECT_EQ(f.to_map(), hand.to_map());
    EXPECT_EQ(f.infinity, hand.infinity);
}

TEST(FactorBelyi, Beta12OnesFactor) {
    // Equal multiplicities are merged: (z^2+1)^2 (z^4 - 522z^3 - 10006z^2 + 522z + 1)^2 as one square.
    const FactoredBelyi f = build_beta12();
    ASSERT_EQ(f.ones.size(), 1U);
    EXPECT_EQ(f.ones[0].exponent, 2U);
    EXPECT_EQ(f.ones[0].poly, zpoly({{2, 1}, {0, 1}}) * zpoly({{4, 1}, {3, -522}, {2, -10006}, {1, 522}, {0, 1}}));
}

TEST(PowerPassport, PredictsSubstitution) {
    const FactoredBelyi b12 = build_beta12();
    EXPECT_EQ(predict_power_passport(b12, 5), verify_belyi(build_beta60()));
    EXPECT_EQ(predict_power_passport(b12, 6), verify_belyi(build_beta72()));
    EXPECT_EQ(predict_power_passport(b12, 1), verify_belyi(b12));
}

TEST(PowerPassport, MatchesFactoringForRandomPowers) {
    const FactoredBelyi b6 = beta6_by_hand();
    for (unsigned n = 2; n <= 4; ++n) {
        const FactoredBelyi f = factor_belyi(ratmap_substitute_power(b6.to_map(), n));
        EXPECT_EQ(verify_belyi(f), predict_power_passport(b6, n)) << n;
    }
}
