#include "downup/errors.hpp"
#include "downup/morphism.hpp"

#include "random.hpp"

#include <gtest/gtest.h>

using namespace downup;

namespace {

Element W(int i, int j, int m, const Scalar& c = Scalar(1)) { return Element::word(i, j, m, c); }

ClassifiedEndo endo(EndoKind kind, Scalar g1, Scalar g2, int i, int j, int k, int l)
{
    return ClassifiedEndo{kind, std::move(g1), std::move(g2), i, j, k, l};
}

bool is_identity_on_generators(const Algebra& alg, const ClassifiedEndo& m)
{
    return apply(alg, m, alg.d()) == alg.d() && apply(alg, m, alg.u()) == alg.u();
}

class MorphismTest : public ::testing::TestWithParam<Case> {
protected:
    Algebra alg{CaseConfig(GetParam())};
    const CaseConfig& cfg() const { return alg.config(); }
};

} // namespace

TEST_P(MorphismTest, IdentityIsAnEndomorphism)
{
    const GenImages id{alg.d(), alg.u()};
    EXPECT_TRUE(check_endo(alg, id, true));
    EXPECT_TRUE(check_endo(alg, id, false));
    EXPECT_EQ(classify(alg, id), ClassifiedEndo::identity());
}

TEST_P(MorphismTest, DToDUToZero)
{
    const GenImages g{alg.d(), Element{}};
    EXPECT_TRUE(check_endo(alg, g, false));
    EXPECT_FALSE(check_endo(alg, g, true));
}

TEST_P(MorphismTest, RejectsNonEndomorphisms)
{
    EXPECT_FALSE(check_endo(alg, GenImages{alg.u(), alg.u()}, true));
    EXPECT_FALSE(check_endo(alg, GenImages{alg.d() + alg.u(), alg.u()}, true));
    EXPECT_FALSE(check_endo(alg, GenImages{W(-1, 0, 1), alg.u()}, false));
}

TEST_P(MorphismTest, ClassifyRejectsNonMonomialImages)
{
    EXPECT_THROW(classify(alg, GenImages{alg.d() + alg.x(), alg.u()}), NotClassifiable);
    EXPECT_THROW(classify(alg, GenImages{alg.d(), alg.d()}), NotClassifiable);
    EXPECT_THROW(classify(alg, GenImages{W(0, 0, 2), alg.u()}), NotClassifiable);
}

TEST_P(MorphismTest, ClassifiedImagesAreEndomorphisms)
{
    support::Random gen(cfg(), 41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto kind = gen.coin() ? EndoKind::straight : EndoKind::swap;
        const ClassifiedEndo m = gen.endo(kind, 3);
        ASSERT_TRUE(check_endo(alg, images(m), true));
        ASSERT_EQ(classify(alg, images(m)), m);
    }
}

TEST_P(MorphismTest, LaurentImagesMatchApply)
{
    support::Random gen(cfg(), 42);
    for (int trial = 0; trial < 30; ++trial) {
        const auto kind = gen.coin() ? EndoKind::straight : EndoKind::swap;
        const ClassifiedEndo m = gen.endo(kind, 3);
        const LaurentImages li = laurent_images(alg, m);
        ASSERT_EQ(apply(alg, m, alg.x()), W(li.x.px, li.x.py, 0, li.x.coef));
        ASSERT_EQ(apply(alg, m, alg.y()), W(li.y.px, li.y.py, 0, li.y.coef));
        const auto zt = apply(alg, m, alg.z()).single_term();
        ASSERT_TRUE(zt.has_value());
        ASSERT_EQ(zt->first.i, center_exponent(alg, m));
        ASSERT_EQ(zt->first.j, center_exponent(alg, m));
    }
}

TEST_P(MorphismTest, ApplyPreservesProducts)
{
    support::Random gen(cfg(), 43);
    for (int trial = 0; trial < 40; ++trial) {
        const auto kind = gen.coin() ? EndoKind::straight : EndoKind::swap;
        const ClassifiedEndo m = gen.endo(kind, 2, 1);
        const Element a = gen.element(2, 2);
        const Element b = gen.element(2, 2);
        ASSERT_EQ(apply(alg, m, alg.mul(a, b)), alg.mul(apply(alg, m, a), apply(alg, m, b)));
    }
}

TEST_P(MorphismTest, ApplyIdentity)
{
    support::Random gen(cfg(), 44);
    const Element e = gen.element(4, 3);
    EXPECT_EQ(apply(alg, ClassifiedEndo::identity(), e), e);
}

TEST_P(MorphismTest, ComposeMatchesGeneratorLevel)
{
    support::Random gen(cfg(), 45);
    for (int trial = 0; trial < 40; ++trial) {
        const ClassifiedEndo f = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 2, 1);
        const ClassifiedEndo g = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 2, 1);
        const ClassifiedEndo fg = compose(alg, f, g);
        ASSERT_EQ(fg, compose_on_generators(alg, f, g));
        ASSERT_EQ(fg.kind == EndoKind::straight, f.kind == g.kind);
    }
}

TEST_P(MorphismTest, ComposeIdentityAndAssociativity)
{
    support::Random gen(cfg(), 46);
    for (int trial = 0; trial < 30; ++trial) {
        const ClassifiedEndo a = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 2, 1);
        const ClassifiedEndo b = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 2, 1);
        const ClassifiedEndo c = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 2, 1);
        ASSERT_EQ(compose(alg, a, ClassifiedEndo::identity()), a);
        ASSERT_EQ(compose(alg, ClassifiedEndo::identity(), a), a);
        ASSERT_EQ(compose(alg, compose(alg, a, b), c), compose(alg, a, compose(alg, b, c)));
    }
}

TEST_P(MorphismTest, InverseComposesToIdentity)
{
    support::Random gen(cfg(), 47);
    int inverted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const ClassifiedEndo m = gen.endo(gen.coin() ? EndoKind::straight : EndoKind::swap, 3, 1);
        ClassifiedEndo phi;
        try {
            phi = invert(alg, m);
        } catch (const NotAutomorphism& e) {
            ASSERT_EQ(GetParam(), Case::two);
            ASSERT_EQ(e.center_exponent, center_exponent(alg, m));
            ASSERT_NE(std::abs(e.center_exponent), 1);
            continue;
        }
        ++inverted;
        ASSERT_TRUE(is_identity_on_generators(alg, compose_on_generators(alg, m, phi)));
        ASSERT_TRUE(is_identity_on_generators(alg, compose_on_generators(alg, phi, m)));
    }
    EXPECT_GT(inverted, 0);
}

TEST_P(MorphismTest, InvertIdentity)
{
    EXPECT_EQ(invert(alg, ClassifiedEndo::identity()), ClassifiedEndo::identity());
}

INSTANTIATE_TEST_SUITE_P(BothCases, MorphismTest, ::testing::Values(Case::one, Case::two),
                         [](const auto& info) { return info.param == Case::one ? "Case1" : "Case2"; });

TEST(MorphismCaseOne, ExamplesFromTheClassification)
{
    const Algebra alg{CaseConfig(Case::one)};
    const GenImages g{W(1, 0, 1), W(-1, 0, -1)};
    EXPECT_TRUE(check_endo(alg, g, true));
    EXPECT_EQ(classify(alg, g), endo(EndoKind::straight, 1, 1, 1, 0, -1, 0));

    const GenImages swap{alg.u(), W(-1, -1, 1)};
    EXPECT_TRUE(check_endo(alg, swap, true));
    EXPECT_EQ(classify(alg, swap), endo(EndoKind::swap, 1, 1, 0, 0, -1, -1));
}

TEST(MorphismCaseOne, TwistConstraintIsEnforced)
{
    const Algebra alg{CaseConfig(Case::one)};
    const GenImages bad{W(1, 0, 1), W(0, 0, -1)};
    EXPECT_FALSE(check_endo(alg, bad, true));
    EXPECT_THROW(classify(alg, bad), NotClassifiable);
}

TEST(MorphismCaseOne, ApplyToX)
{
    const Algebra alg{CaseConfig(Case::one)};
    const ClassifiedEndo m = endo(EndoKind::straight, 1, 1, 1, 0, -1, 0);
    EXPECT_EQ(apply(alg, m, alg.x()), alg.config().s().inverse() * alg.x());
}

TEST(MorphismCaseOne, InvertExample)
{
    const Algebra alg{CaseConfig(Case::one)};
    const Scalar s = alg.config().s();
    const ClassifiedEndo m = endo(EndoKind::straight, 1, 1, 1, 0, -1, 0);
    const ClassifiedEndo phi = invert(alg, m);
    const GenImages im = images(phi);
    EXPECT_EQ(im.d_img, W(-1, 0, 1, s.inverse()));
    EXPECT_EQ(im.u_img, W(1, 0, -1, s));
    EXPECT_EQ(formula_inverse(alg, m), phi);
}

TEST(MorphismCaseOne, FormulaInverseOfIdentity)
{
    const Algebra alg{CaseConfig(Case::one)};
    EXPECT_EQ(formula_inverse(alg, ClassifiedEndo::identity()), ClassifiedEndo::identity());
}

TEST(MorphismCaseOne, StraightFormulaInverseMatchesSolver)
{
    const Algebra alg{CaseConfig(Case::one)};
    support::Random gen(alg.config(), 48);
    for (int trial = 0; trial < 30; ++trial) {
        const ClassifiedEndo m = gen.endo(EndoKind::straight, 3);
        ASSERT_EQ(formula_inverse(alg, m), invert(alg, m));
    }
}

TEST(MorphismCaseOne, SwapInverseIsASwap)
{
    const Algebra alg{CaseConfig(Case::one)};
    support::Random gen(alg.config(), 49);
    const ClassifiedEndo m = gen.endo(EndoKind::swap, 3);
    const ClassifiedEndo phi = invert(alg, m);
    EXPECT_EQ(phi.kind, EndoKind::swap);
    EXPECT_EQ(phi.i + phi.k, -1);
    EXPECT_EQ(phi.j + phi.l, -1);
}

TEST(MorphismCaseOne, ExhaustiveSmallClassification)
{
    const Algebra alg{CaseConfig(Case::one)};
    for (int gd = 0; gd < 2; ++gd)
        for (int gu = 0; gu < 2; ++gu)
            for (int i = -1; i <= 1; ++i)
                for (int j = -1; j <= 1; ++j)
                    for (int k = -1; k <= 1; ++k)
                        for (int l = -1; l <= 1; ++l) {
                            const int md = gd == 0 ? 1 : -1;
                            const int mu = gu == 0 ? 1 : -1;
                            const GenImages g{W(i, j, md, Scalar(2)), W(k, l, mu, alg.config().r())};
                            const bool straight = md == 1 && mu == -1 && i + k == 0 && j + l == 0;
                            const bool swap = md == -1 && mu == 1 && i + k == -1 && j + l == -1;
                            ASSERT_EQ(check_endo(alg, g, true), straight || swap)
                                << i << j << k << l << md << mu;
                        }
}

TEST(MorphismCaseTwo, TwistedMaps)
{
    const Algebra alg{CaseConfig(Case::two)};
    const ClassifiedEndo m = endo(EndoKind::straight, 1, 1, 1, 1, 0, 0);
    EXPECT_TRUE(check_endo(alg, images(m), true));
    const auto zt = apply(alg, m, alg.z()).single_term();
    ASSERT_TRUE(zt.has_value());
    EXPECT_EQ(zt->first, (BasisWord{3, 3, 0}));
    try {
        invert(alg, m);
        FAIL() << "expected NotAutomorphism";
    } catch (const NotAutomorphism& e) {
        EXPECT_EQ(e.center_exponent, 3);
        EXPECT_STREQ(e.what(), "center exponent 3");
    }
}

TEST(MorphismCaseTwo, InvertibleExactlyForTwistZeroOrMinusOne)
{
    const Algebra alg{CaseConfig(Case::two)};
    for (int e = -3; e <= 3; ++e) {
        for (auto kind : {EndoKind::straight, EndoKind::swap}) {
            const ClassifiedEndo m = endo(kind, 2, alg.config().q(), 1, -2, e - 1, e + 2);
            bool ok = true;
            try {
                invert(alg, m);
            } catch (const NotAutomorphism& ex) {
                ok = false;
                EXPECT_EQ(ex.center_exponent, 2 * e + 1);
            }
            EXPECT_EQ(ok, e == 0 || e == -1) << "twist " << e;
        }
    }
}

TEST(MorphismCaseTwo, LambdaOfStraightMaps)
{
    // x -> q^{i-j} gamma1 gamma2 x^{e+1} y^e
    const Algebra alg{CaseConfig(Case::two)};
    const Scalar q = alg.config().q();
    const ClassifiedEndo m = endo(EndoKind::straight, 3, 5, 2, -1, -2, 1);
    EXPECT_EQ(laurent_images(alg, m).x.coef, Scalar(15) * q.pow(3));
}

TEST(Surjectivity, Verdicts)
{
    const Algebra alg{CaseConfig(Case::one)};
    EXPECT_EQ(check_surjective_unlocalized(alg, GenImages{2 * alg.d(), 3 * alg.u()}, 6),
              SurjectivityVerdict::automorphism);
    EXPECT_EQ(check_surjective_unlocalized(alg, GenImages{alg.d(), Element{}}, 6),
              SurjectivityVerdict::not_surjective_at_bound);
    EXPECT_THROW(check_surjective_unlocalized(alg, GenImages{alg.u(), alg.d()}, 6),
                 NotAnEndomorphism);
    const Algebra alg2{CaseConfig(Case::two)};
    EXPECT_EQ(check_surjective_unlocalized(alg2, GenImages{alg2.u(), alg2.d()}, 6),
              SurjectivityVerdict::automorphism);
    EXPECT_EQ(to_string(SurjectivityVerdict::not_surjective_at_bound), "not_surjective_at_bound");
}
