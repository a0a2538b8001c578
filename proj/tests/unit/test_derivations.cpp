#include "downup/derivation.hpp"
#include "downup/errors.hpp"

#include "random.hpp"

#include <gtest/gtest.h>

using namespace downup;

namespace {

Element W(int i, int j, int m, const Scalar& c = Scalar(1)) { return Element::word(i, j, m, c); }

class DerivationTest : public ::testing::TestWithParam<Case> {
protected:
    Algebra alg{CaseConfig(GetParam())};
    const CaseConfig& cfg() const { return alg.config(); }
    DerivSpec D1() const { return base_derivation(BaseDerivation::D1); }
    DerivSpec D2() const { return base_derivation(BaseDerivation::D2); }
};

} // namespace

TEST_P(DerivationTest, InnerOfX)
{
    const Scalar s = cfg().s();
    const DerivSpec ix = inner(alg, alg.x());
    EXPECT_EQ(ix.dd, (Scalar(1) - s) * W(1, 0, 1));
    EXPECT_EQ(ix.du, (Scalar(1) - s.inverse()) * W(1, 0, -1));
    EXPECT_EQ(apply_deriv(alg, ix, alg.d()), (Scalar(1) - s) * W(1, 0, 1));
}

TEST_P(DerivationTest, InnerOfCentralIsZero)
{
    EXPECT_EQ(inner(alg, alg.one()), DerivSpec{});
    if (GetParam() == Case::two)
        EXPECT_EQ(inner(alg, alg.z()), DerivSpec{});
    else
        EXPECT_NE(inner(alg, alg.z()), DerivSpec{});
}

TEST_P(DerivationTest, BaseDerivations)
{
    EXPECT_EQ(apply_deriv(alg, D1(), alg.x()), alg.x());
    EXPECT_EQ(apply_deriv(alg, D2(), alg.x()), alg.x());
    EXPECT_EQ(apply_deriv(alg, D1(), alg.y()), alg.y());
    EXPECT_TRUE(apply_deriv(alg, D2(), alg.d()).is_zero());
    EXPECT_TRUE(check_deriv(alg, D1()));
    EXPECT_TRUE(check_deriv(alg, D2()));
    EXPECT_EQ((D1() + D2()).dd, alg.d());
}

TEST_P(DerivationTest, ValuesOnInverses)
{
    // D1(x^-1) = -x^-1
    EXPECT_EQ(apply_deriv(alg, D1(), W(-1, 0, 0)), W(-1, 0, 0, Scalar(-1)));
    EXPECT_EQ(apply_deriv(alg, D2(), W(-2, 3, 0)), W(-2, 3, 0));
}

TEST_P(DerivationTest, RejectsNonDerivations)
{
    EXPECT_FALSE(check_deriv(alg, DerivSpec{alg.u(), Element{}}));
    EXPECT_FALSE(check_deriv(alg, DerivSpec{alg.one(), Element{}}));
    EXPECT_FALSE(check_deriv(alg, DerivSpec{alg.x(), alg.y()}));
}

TEST_P(DerivationTest, UnitIsKilled)
{
    EXPECT_TRUE(apply_deriv(alg, inner(alg, alg.x() + alg.d()), alg.one()).is_zero());
    EXPECT_TRUE(apply_deriv(alg, D1(), Element(Scalar(5))).is_zero());
}

TEST_P(DerivationTest, InnerDerivationsPassTheCheck)
{
    support::Random gen(cfg(), 51);
    for (int trial = 0; trial < 20; ++trial)
        ASSERT_TRUE(check_deriv(alg, inner(alg, gen.element(3, 3))));
}

TEST_P(DerivationTest, LeibnizRule)
{
    support::Random gen(cfg(), 52);
    for (int trial = 0; trial < 40; ++trial) {
        const DerivSpec s = inner(alg, gen.element(2, 2)) +
                            scaled(alg, gen.center_element(1), D1()) +
                            scaled(alg, gen.center_element(1), D2());
        const Element a = gen.element(2, 2);
        const Element b = gen.element(2, 2);
        ASSERT_EQ(apply_deriv(alg, s, alg.mul(a, b)),
                  alg.mul(apply_deriv(alg, s, a), b) + alg.mul(a, apply_deriv(alg, s, b)));
    }
}

TEST_P(DerivationTest, InnerAppliedIsCommutator)
{
    support::Random gen(cfg(), 53);
    for (int trial = 0; trial < 20; ++trial) {
        const Element t = gen.element(3, 2);
        const Element e = gen.element(3, 2);
        ASSERT_EQ(apply_deriv(alg, inner(alg, t), e), alg.commutator(t, e));
    }
}

TEST_P(DerivationTest, DecomposeInnerOfX)
{
    const Decomposition dec = decompose(alg, inner(alg, alg.x()));
    EXPECT_EQ(dec.t, alg.x());
    EXPECT_TRUE(dec.mu1.is_zero());
    EXPECT_TRUE(dec.mu2.is_zero());
}

TEST_P(DerivationTest, DecomposeBase)
{
    const Decomposition d1 = decompose(alg, D1());
    EXPECT_TRUE(d1.t.is_zero());
    EXPECT_EQ(d1.mu1, CenterElement(1));
    EXPECT_TRUE(d1.mu2.is_zero());
    const auto [a, b] = hh1_coords(alg, D2());
    EXPECT_TRUE(a.is_zero());
    EXPECT_EQ(b, CenterElement(1));
}

TEST_P(DerivationTest, DecomposeZero)
{
    const Decomposition dec = decompose(alg, DerivSpec{});
    EXPECT_TRUE(dec.t.is_zero());
    EXPECT_TRUE(dec.mu1.is_zero());
    EXPECT_TRUE(dec.mu2.is_zero());
}

TEST_P(DerivationTest, Hh1IsLinear)
{
    const auto [a, b] = hh1_coords(alg, D1() + inner(alg, alg.x()));
    EXPECT_EQ(a, CenterElement(1));
    EXPECT_TRUE(b.is_zero());

    support::Random gen(cfg(), 54);
    for (int trial = 0; trial < 10; ++trial) {
        const DerivSpec s1 = inner(alg, gen.element(2, 2)) + scaled(alg, gen.center_element(2), D1());
        const DerivSpec s2 = inner(alg, gen.element(2, 2)) + scaled(alg, gen.center_element(2), D2());
        const Scalar p = gen.scalar();
        const Scalar q = gen.scalar();
        const DerivSpec mix{p * s1.dd + q * s2.dd, p * s1.du + q * s2.du};
        const auto [m1, m2] = hh1_coords(alg, mix);
        const auto [a1, a2] = hh1_coords(alg, s1);
        const auto [b1, b2] = hh1_coords(alg, s2);
        ASSERT_EQ(m1, p * a1 + q * b1);
        ASSERT_EQ(m2, p * a2 + q * b2);
    }
}

TEST_P(DerivationTest, ReconstructionOfRandomDerivations)
{
    support::Random gen(cfg(), 55);
    for (int trial = 0; trial < 25; ++trial) {
        const Element t = gen.element(4, 3);
        const CenterElement mu1 = gen.center_element(2);
        const CenterElement mu2 = gen.center_element(2);
        const DerivSpec s = reconstruct(alg, Decomposition{t, mu1, mu2});
        const Decomposition dec = decompose(alg, s);
        ASSERT_EQ(dec.mu1, mu1);
        ASSERT_EQ(dec.mu2, mu2);
        ASSERT_EQ(inner(alg, dec.t), inner(alg, t));
        ASSERT_EQ(reconstruct(alg, dec), s);
    }
}

TEST_P(DerivationTest, DecomposeRejectsNonDerivations)
{
    EXPECT_THROW(decompose(alg, DerivSpec{alg.u(), Element{}}), NotADerivation);
    EXPECT_THROW(decompose(alg, DerivSpec{alg.x(), Element{}}), NotADerivation);
}

TEST_P(DerivationTest, CenterElementText)
{
    EXPECT_EQ(to_string(CenterElement(), cfg()), "0");
    EXPECT_EQ(to_string(CenterElement(Scalar(3)), cfg()), "3");
    const CenterElement c = CenterElement(Scalar(1)) + CenterElement::z_power(-2, Scalar(2));
    EXPECT_EQ(to_string(c, cfg()), "(2) z^-2 + (1)");
    EXPECT_EQ(to_string(CenterElement::z_power(1), cfg()), "(1) z");
}

INSTANTIATE_TEST_SUITE_P(BothCases, DerivationTest, ::testing::Values(Case::one, Case::two),
                         [](const auto& info) { return info.param == Case::one ? "Case1" : "Case2"; });

TEST(DerivationCaseTwo, CentralMultiplierOfD2)
{
    const Algebra alg{CaseConfig(Case::two)};
    const DerivSpec s{Element{}, alg.mul(alg.z(), alg.u())};
    EXPECT_TRUE(check_deriv(alg, s));
    const Decomposition dec = decompose(alg, s);
    EXPECT_TRUE(dec.mu1.is_zero());
    EXPECT_EQ(dec.mu2, CenterElement::z_power(1));
    EXPECT_TRUE(dec.t.is_zero());
}

TEST(DerivationCaseOne, ZTimesD2IsNotADerivation)
{
    const Algebra alg{CaseConfig(Case::one)};
    const DerivSpec s{Element{}, alg.mul(alg.z(), alg.u())};
    EXPECT_FALSE(check_deriv(alg, s));
    EXPECT_THROW(decompose(alg, s), NotADerivation);
}
