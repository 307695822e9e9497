#include "support.hpp"

#include <algorithm>

using namespace hhtest;

namespace {

const Vector kEps = q({1, 1, 0, 0});
const Vector kThetaMinus = q({1, -1, 0, 0});

Vector one() { return basis_vector(4, ONE); }
Vector gee() { return basis_vector(4, G); }

bool same_structure(const YDModule& a, const YDModule& b) {
    return a.pair() == b.pair() && a.xi() == b.xi() && a.action() == b.action() && a.coaction() == b.coaction();
}

}  // namespace

TEST(ThetaOmega, AlgebraMapsOfH4) {
    for (const Scalar c : {1, 2}) {
        auto maps = algebra_maps(build_h4(c));
        std::sort(maps.begin(), maps.end());
        EXPECT_EQ(maps, (std::vector<Vector>{kThetaMinus, kEps}));
    }
}

TEST(ThetaOmega, CheckAndInverse) {
    const auto h = build_h4(2);
    EXPECT_TRUE(Passes(check_theta_omega(h, kThetaMinus, gee())));
    EXPECT_FALSE(check_theta_omega(h, q({1, 2, 0, 0}), one()).passed());
    EXPECT_FALSE(check_theta_omega(h, kEps, basis_vector(4, X)).passed());
    // theta o S is the convolution inverse; on group-likes it inverts values.
    EXPECT_EQ(theta_inverse(h, kThetaMinus), kThetaMinus);
    EXPECT_EQ(theta_inverse(h, kEps), kEps);
}

TEST(Involution, SweepFindsPairsWhereTheyExist) {
    for (const Scalar c : {1, 2}) {
        const auto h = h4(c);
        EXPECT_FALSE(sweep_pairs_in_involution(AutPair::identity(h)).empty()) << c;
        EXPECT_FALSE(sweep_pairs_in_involution(s2_pair(h)).empty()) << c;
        EXPECT_FALSE(sweep_pairs_in_involution(phi_pair(h, -2, 2)).empty()) << c;
        EXPECT_TRUE(sweep_pairs_in_involution(phi_pair(h, 2, 3)).empty()) << c;
    }
}

TEST(Involution, TrivialDataIsInvolutiveForIdentity) {
    const auto h = h4(2);
    EXPECT_TRUE(Passes(check_pair_in_involution(AutPair::identity(h), {kEps, one()})));
    EXPECT_FALSE(check_pair_in_involution(phi_pair(h, 2, 3), {kEps, one()}).passed());
}

TEST(Involution, ThetaOmegaModulesAreYD) {
    const auto h = h4(2);
    for (const auto& p : {AutPair::identity(h), s2_pair(h), phi_pair(h, -2, 2)})
        for (const auto& pi : sweep_pairs_in_involution(p))
            EXPECT_TRUE(Passes(check_yd(make_theta_omega_module(p, pi, LinMap::diagonal(q({1, 3}))))));
}

TEST(Untwist, LandsAtIdentityAndRoundTripsWhenXiIsTrivial) {
    const auto h = h4(1);
    for (const auto& p : {s2_pair(h), phi_pair(h, -2, 2)})
        for (const auto& pi : sweep_pairs_in_involution(p)) {
            const auto m = canonical_yd(p);
            const auto u = twist_to_untwisted(m, pi);
            EXPECT_EQ(u.pair(), AutPair::identity(h));
            EXPECT_TRUE(Passes(check_yd(u)));
            EXPECT_TRUE(same_structure(untwist_inverse(u, p, pi), m));
            EXPECT_TRUE(same_structure(untwist_inverse(u, p, pi, TwistReading::xi_corrected), m));
        }
}

TEST(Untwist, LiteralInverseIsOffByXiSquaredForNonTrivialTwist) {
    const auto h = h4(2);
    const auto p = s2_pair(h);
    const auto pi = sweep_pairs_in_involution(p).front();
    const auto m = canonical_yd(p);
    const auto u = twist_to_untwisted(m, pi);
    EXPECT_TRUE(Passes(check_yd(u)));

    const auto lit = untwist_inverse(u, p, pi);
    EXPECT_FALSE(same_structure(lit, m));
    // The literal composite is h -> xi^-2(h).m, coaction m0 (x) xi^2(m1).
    const auto expected_action = tabulate({4, 4}, {4}, [&](const Tensor& t) {
        return t.apply(h->xi().power(-2), 0).apply(m.action(), {0, 1});
    });
    const auto expected_coaction = tabulate({4}, {4, 4}, [&](const Tensor& t) {
        return t.apply(m.coaction(), {0}).apply(h->xi().power(2), 1);
    });
    EXPECT_EQ(lit.action(), expected_action);
    EXPECT_EQ(lit.coaction(), expected_coaction);

    EXPECT_TRUE(same_structure(untwist_inverse(u, p, pi, TwistReading::xi_corrected), m));
}

TEST(Shift, FourIsomorphismsRoundTrip) {
    for (const Scalar c : {1, 2}) {
        const auto h = h4(c);
        const auto a = h4_automorphism(h, 2), b = h4_automorphism(h, 3);
        const auto id = HopfAutomorphism::identity(h);
        struct Case {
            AutPair from, to;
            HopfAutomorphism by;
        };
        const std::vector<Case> cases{
            {{a, b}, {a * b.inverse(), id}, b},
            {{a, a}, {id, id}, a},
            {{a, id}, {id, a.inverse()}, a},
            {{id, b}, {b.inverse(), id}, b},
        };
        for (const auto& k : cases) {
            const auto m = canonical_yd(k.from);
            const auto s = shift_functor(m, k.by);
            EXPECT_EQ(s.pair(), k.to);
            EXPECT_TRUE(Passes(check_yd(s)));
            EXPECT_TRUE(same_structure(shift_inverse(s, k.by), m));
            const auto n = canonical_yd(k.to);
            EXPECT_TRUE(same_structure(shift_functor(shift_inverse(n, k.by), k.by), n));
        }
    }
}

TEST(Shift, ActionIsPrecomposedWithInverse) {
    const auto h = h4(2);
    const auto b = h4_automorphism(h, 5);
    const auto m = canonical_yd(phi_pair(h, 5, 5));
    const auto s = shift_functor(m, b);
    const Tensor t = Tensor::basis({4, 4}, {X, G});
    EXPECT_EQ(t.apply(s.action(), {0, 1}), Scalar(1, 5) * t.apply(m.action(), {0, 1}));
}

TEST(Modular, LiteralFormAtTrivialTwist) {
    for (const Scalar c : {1, -1}) {
        const auto h = build_h4(c);
        EXPECT_TRUE(Passes(check_modular_pair(h, {kEps, gee()}))) << c;
        EXPECT_TRUE(Passes(check_modular_pair(h, {kThetaMinus, one()}))) << c;
    }
    // theta(omega) must be 1.
    EXPECT_FALSE(check_modular_pair(build_h4(1), {kThetaMinus, gee()}).passed("theta-omega"));
}

TEST(Modular, XiPowerSearchAtCTwo) {
    const auto h = build_h4(2);
    EXPECT_FALSE(check_modular_pair(h, {kEps, gee()}).passed());
    EXPECT_EQ(modular_pair_xi_powers(h, {kEps, gee()}), std::vector<int>{-4});
    EXPECT_EQ(modular_pair_xi_powers(build_h4(1), {kEps, gee()}, 2), (std::vector<int>{-2, -1, 0, 1, 2}));
}

TEST(Modular, ModularAntipodeWithCounit) {
    // h1 eps(h2) = xi^-1(h), so S~ = S xi^-1.
    const auto h = build_h4(2);
    EXPECT_EQ(modular_antipode(h, kEps), h.antipode() * h.xi_inv());
    // S~(g) = S(g) theta(g) = -g for theta_-.
    EXPECT_EQ(modular_antipode(h, kThetaMinus).apply(gee()), scale(-1, gee()));
}

TEST(AntiYD, ConvertsToYDAtIdentity) {
    const auto h = h4(1);
    const auto m = canonical_yd(s2_pair(h));
    for (const ModularPair& mp : {ModularPair{kEps, gee()}, ModularPair{kThetaMinus, one()}}) {
        const auto y = anti_yd_to_yd(m, mp);
        EXPECT_EQ(y.pair(), AutPair::identity(h));
        EXPECT_TRUE(Passes(check_yd(y)));
    }
}

TEST(AntiYD, RejectsUnmetPreconditions) {
    const auto h = h4(1);
    EXPECT_THROW(anti_yd_to_yd(canonical_yd(AutPair::identity(h)), {kEps, gee()}), InputError);
    EXPECT_THROW(anti_yd_to_yd(canonical_yd(s2_pair(h)), {kThetaMinus, gee()}), InputError);
}

TEST(DoubleIsomorphism, MutuallyInverseIsomorphismsAtTrivialTwist) {
    const auto h = h4(1);
    const auto d = drinfeld_double(h);
    for (const auto& p : {s2_pair(h), phi_pair(h, -2, 2)})
        for (const auto& pi : sweep_pairs_in_involution(p)) {
            const auto a = a_alpha_beta(h, p.alpha, p.beta);
            EXPECT_TRUE(Passes(check_cor49(d, a, cor49_iso(p, pi))));
        }
}

TEST(DoubleIsomorphism, LiteralFailsAndCorrectedPassesAtCTwo) {
    const auto h = h4(2);
    const auto d = drinfeld_double(h);
    const auto p = s2_pair(h);
    const auto pi = sweep_pairs_in_involution(p).front();
    const auto a = a_alpha_beta(h, p.alpha, p.beta);
    const auto lit = check_cor49(d, a, cor49_iso(p, pi));
    EXPECT_FALSE(lit.passed());
    EXPECT_FALSE(lit.passed("inverse-left"));
    EXPECT_TRUE(Passes(check_cor49(d, a, cor49_iso(p, pi, TwistReading::xi_corrected))));
}
