#include "downup/errors.hpp"
#include "downup/torus.hpp"

#include "oracle.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace downup;

namespace {

class TorusTest : public ::testing::TestWithParam<Case> {
protected:
    Algebra alg{CaseConfig(GetParam())};
    QuantumTorus torus{alg};
    const CaseConfig& cfg() const { return alg.config(); }
};

TorusElement T(int a, int b, int c, const Scalar& k = Scalar(1))
{
    return QuantumTorus::monomial(a, b, c, k);
}

} // namespace

TEST_P(TorusTest, Relations)
{
    EXPECT_EQ(torus.mul(T(1, 0, 0), T(0, 1, 0)), T(1, 1, 0, cfg().s()));
    EXPECT_EQ(torus.mul(T(1, 0, 0), T(0, 0, 1)), T(1, 0, 1, cfg().r()));
    EXPECT_EQ(torus.mul(T(0, 1, 0), T(0, 0, 1)), torus.mul(T(0, 0, 1), T(0, 1, 0)));
    EXPECT_EQ(torus.mul(T(-1, 0, 0), T(0, 1, 0)), T(-1, 1, 0, cfg().s().inverse()));
    EXPECT_EQ(torus.mul(T(2, 0, 0), T(-2, 0, 0)), T(0, 0, 0));
}

TEST_P(TorusTest, Associativity)
{
    support::Random gen(cfg(), 31);
    for (int trial = 0; trial < 60; ++trial) {
        const TorusElement a = gen.torus_element(3, 3);
        const TorusElement b = gen.torus_element(3, 3);
        const TorusElement c = gen.torus_element(3, 3);
        ASSERT_EQ(torus.mul(torus.mul(a, b), c), torus.mul(a, torus.mul(b, c)));
    }
}

TEST_P(TorusTest, EmbedGenerators)
{
    EXPECT_EQ(torus.embed(alg.d()), T(1, 0, 0));
    EXPECT_EQ(torus.embed(alg.x()), T(0, 1, 0));
    EXPECT_EQ(torus.embed(alg.one()), T(0, 0, 0));
    const Scalar k = (cfg().s() - cfg().r()).inverse();
    const TorusElement eu = T(-1, 1, 0, k) + T(-1, 0, 1, -k);
    EXPECT_EQ(torus.embed(alg.u()), eu);
    EXPECT_EQ(torus.mul(torus.embed(alg.u()), torus.embed(alg.d())),
              torus.embed(alg.mul(alg.u(), alg.d())));
}

TEST_P(TorusTest, EmbedIsMultiplicative)
{
    support::Random gen(cfg(), 32);
    for (int trial = 0; trial < 80; ++trial) {
        const Element a = gen.element(3, 3);
        const Element b = gen.element(3, 3);
        ASSERT_EQ(torus.embed(alg.mul(a, b)), torus.mul(torus.embed(a), torus.embed(b)));
    }
}

TEST_P(TorusTest, PreimageRoundTrip)
{
    support::Random gen(cfg(), 33);
    for (int trial = 0; trial < 80; ++trial) {
        const Element e = gen.element(4, 3);
        ASSERT_EQ(torus.preimage(torus.embed(e)), e);
    }
}

TEST_P(TorusTest, PreimageOfEmbeddedU)
{
    const Scalar k = (cfg().s() - cfg().r()).inverse();
    EXPECT_EQ(torus.preimage(T(-1, 1, 0, k) + T(-1, 0, 1, -k)), alg.u());
}

TEST_P(TorusTest, PreimageRejectsNonImages)
{
    EXPECT_THROW(torus.preimage(T(-1, 0, 0)), NotInSubalgebra);
    EXPECT_THROW(torus.preimage(T(-2, 1, 0)), NotInSubalgebra);
    // T2 T1^-1 + T3 T1^-1 is not a multiple of T2 - T3
    EXPECT_THROW(torus.preimage(T(-1, 1, 0) + T(-1, 0, 1)), NotInSubalgebra);
}

TEST_P(TorusTest, CentralityMatchesBruteForce)
{
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                const TorusMono m{a, b, c};
                ASSERT_EQ(torus.is_central_monomial(m), support::brute_force_central(torus, m))
                    << a << ' ' << b << ' ' << c;
            }
}

TEST_P(TorusTest, CenterShape)
{
    EXPECT_TRUE(torus.is_central(T(0, 0, 0, Scalar(7))));
    EXPECT_FALSE(torus.is_central(T(1, 0, 0)));
    EXPECT_EQ(torus.is_central(T(0, 1, 1) + T(0, -2, -2)), GetParam() == Case::two);
    EXPECT_FALSE(torus.is_central(T(0, 1, 0)));
}

TEST_P(TorusTest, ConjugationScalars)
{
    // T_g m T_g^-1 = chi_g(m) m
    const TorusMono m{2, -1, 3};
    const TorusElement tm(m);
    const TorusMono gens[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int g = 1; g <= 3; ++g) {
        const TorusMono& p = gens[g - 1];
        const TorusElement conj = torus.mul(torus.mul(TorusElement(p), tm), TorusElement({-p.a, -p.b, -p.c}));
        EXPECT_EQ(conj, torus.conjugation_scalar(g, m) * tm);
    }
}

TEST_P(TorusTest, Text)
{
    EXPECT_EQ(to_string(T(-1, 2, 0, Scalar(3)) + T(0, 0, 1), cfg()), "(3) T2^2 T1^-1 + (1) T3");
    EXPECT_EQ(to_string(TorusElement{}, cfg()), "0");
}

INSTANTIATE_TEST_SUITE_P(BothCases, TorusTest, ::testing::Values(Case::one, Case::two),
                         [](const auto& info) { return info.param == Case::one ? "Case1" : "Case2"; });
