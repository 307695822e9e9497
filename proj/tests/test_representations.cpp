#include "support.hpp"

using namespace hhtest;

namespace {

// h . m = scale * eps(h) m on a one-dimensional space.
HomModule counit_module(const HopfPtr& h, const Scalar& scale) {
    LinMap act(1, h->dim());
    for (std::size_t i = 0; i < h->dim(); ++i) act.at(0, i) = scale * h->counit()[i];
    return HomModule(algebra_of(h), LinMap::identity(1), MultilinearMap({h->dim(), 1}, {1}, act));
}

// v -> v (x) e_k on a one-dimensional space.
HomComodule point_comodule(const HopfPtr& h, std::size_t k) {
    LinMap co(h->dim(), 1);
    co.at(k, 0) = 1;
    return HomComodule(coalgebra_of(h), LinMap::identity(1), MultilinearMap({1}, {1, h->dim()}, co));
}

}  // namespace

TEST(Module, RegularModulePasses) {
    for (const Scalar c : {1, 2, -1}) EXPECT_TRUE(Passes(check_module(regular_module(algebra_of(h4(c))))));
    EXPECT_TRUE(Passes(check_module(regular_module(algebra_of(share(build_cyclic_twist(5, 2)))))));
}

TEST(Module, CounitModuleAndItsCorruption) {
    const auto h = h4(2);
    EXPECT_TRUE(Passes(check_module(counit_module(h, 1))));
    const auto rep = check_module(counit_module(h, 2));
    EXPECT_FALSE(rep.passed("unit"));
    EXPECT_FALSE(rep.passed("hom-associativity"));
    EXPECT_TRUE(rep.passed("xi-compatible"));
}

TEST(Module, RestrictionAlongAutomorphism) {
    const auto h = h4(2);
    const auto m = restrict_along(regular_module(algebra_of(h)), h4_automorphism(h, 5).matrix());
    EXPECT_TRUE(Passes(check_module(m)));
    // x . 1 = phi_5(x) 1 = 5 c x at c = 2.
    const Tensor out = Tensor::basis({4, 4}, {X, ONE}).apply(m.action(), {0, 1});
    EXPECT_EQ(out.to_vector(), scale(10, basis_vector(4, X)));
}

TEST(Module, WrongTwistIsNotCompatible) {
    const auto h = h4(2);
    const auto reg = regular_module(algebra_of(h));
    const HomModule bad(algebra_of(h), LinMap::identity(4), reg.action());
    const auto rep = check_module(bad);
    EXPECT_FALSE(rep.passed());
}

TEST(Comodule, RegularAndGroupLikeComodules) {
    const auto h = h4(Scalar(1, 2));
    EXPECT_TRUE(Passes(check_comodule(regular_comodule(coalgebra_of(h)))));
    EXPECT_TRUE(Passes(check_comodule(point_comodule(h, ONE))));
    EXPECT_TRUE(Passes(check_comodule(point_comodule(h, G))));
    const auto rep = check_comodule(point_comodule(h, X));
    EXPECT_FALSE(rep.passed("counit"));
    EXPECT_FALSE(rep.passed("hom-coassociativity"));
}

TEST(Bimodule, RegularBimodulePasses) {
    const auto a = algebra_of(h4(3));
    EXPECT_TRUE(Passes(check_bimodule({a, a->xi(), a->mult(), a->mult()})));
}

TEST(Bimodule, ScaledRightActionFailsUnit) {
    const auto a = algebra_of(h4(3));
    const MultilinearMap twice({4, 4}, {4}, Scalar(2) * a->mult().flat());
    const auto rep = check_bimodule({a, a->xi(), a->mult(), twice});
    EXPECT_FALSE(rep.passed("right.unit"));
    EXPECT_TRUE(rep.passed("left.unit"));
}

TEST(BicomoduleAlgebra, RegularAndTwisted) {
    for (const Scalar c : {1, 2}) {
        const auto h = h4(c);
        EXPECT_TRUE(Passes(check_bicomodule_algebra(regular_bicomodule_algebra(h))));
        EXPECT_TRUE(Passes(check_bicomodule_algebra(
            twisted_bicomodule_algebra(h, h4_automorphism(h, 3).matrix(), h4_automorphism(h, Scalar(-1, 2)).matrix()))));
        EXPECT_TRUE(Passes(check_bicomodule_algebra(twisted_bicomodule_algebra(h, h->antipode().power(2), h->xi()))));
    }
}

TEST(BicomoduleAlgebra, TwistedCoactionValues) {
    // rho_l(x) = alpha(x1) (x) x2 with alpha = phi_3 at c = 1: 3 x (x) 1 + g (x) x.
    const auto h = h4(1);
    const auto ba = twisted_bicomodule_algebra(h, h4_automorphism(h, 3).matrix(), LinMap::identity(4));
    const Tensor rl = Tensor::basis({4}, {X}).apply(ba.left_coaction(), {0});
    EXPECT_EQ(rl, Scalar(3) * Tensor::basis({4, 4}, {X, ONE}) + Tensor::basis({4, 4}, {G, X}));
}

TEST(BicomoduleAlgebra, NonAutomorphismBreaksMultiplicativity) {
    const auto h = h4(1);
    LinMap swap = LinMap::identity(4);
    swap.at(G, G) = swap.at(X, X) = 0;
    swap.at(X, G) = swap.at(G, X) = 1;
    const auto rep = check_bicomodule_algebra(twisted_bicomodule_algebra(h, swap, LinMap::identity(4)));
    EXPECT_FALSE(rep.passed());
}
