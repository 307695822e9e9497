#pragma once

#include "homhopf/crossed_products.hpp"

namespace homhopf {

// theta: algebra map H -> k (dual coordinates), omega: group-like element of H.
struct InvolutivePair {
    Vector theta;
    Vector omega;
};

// Same data; additionally theta(omega) = 1 is required.
struct ModularPair {
    Vector theta;
    Vector omega;
};

// theta multiplicative and unital, omega group-like.
AxiomReport check_theta_omega(const HomHopfAlgebra& h, const Vector& theta, const Vector& omega);

// alpha(h) = omega^-1 (theta(h11) beta(h12) theta(S(h2)) omega), products left to right
// as written, omega^-1 = S(omega).
AxiomReport check_pair_in_involution(const AutPair& p, const InvolutivePair& pi);

// Algebra maps H -> k among candidate functionals: all {0,1,-1}-vectors when
// dim H <= 8, the default group-like sweep otherwise.
std::vector<Vector> algebra_maps(const HomHopfAlgebra& h);
// Every (theta, omega) with theta from algebra_maps and omega from find_group_likes
// that passes check_pair_in_involution for p.
std::vector<InvolutivePair> sweep_pairs_in_involution(const AutPair& p);

// theta^-1 = theta o S, the convolution inverse of theta.
Vector theta_inverse(const HomHopfAlgebra& h, const Vector& theta);

// V with h.v = theta(h) xi_V(v), rho(v) = xi_V^-1(v) (x) omega, at p.
YDModule make_theta_omega_module(const AutPair& p, const InvolutivePair& pi, const LinMap& xi_v);

// literal: the formulas below as written. xi_corrected: the variant that is a
// two-sided inverse for every twist; it agrees with literal when xi = id.
enum class TwistReading { literal, xi_corrected };

// M at (alpha, beta) -> (id, id): h -> m = theta(beta^-1 S(h1)) beta^-1(h2).m, rho = m0 (x) m1 omega^-1.
YDModule twist_to_untwisted(const YDModule& m, const InvolutivePair& pi);
// N at (id, id) -> p: h -> n = theta(h1) beta(h2).n, rho = n0 (x) n1 omega.
// The literal composite with twist_to_untwisted is h -> xi^-2(h).m, rho = m0 (x) xi^2(m1);
// xi_corrected uses theta(h1) beta(xi^2(h2)).n and n0 (x) xi^-2(n1) omega instead.
YDModule untwist_inverse(const YDModule& n, const AutPair& p, const InvolutivePair& pi,
                         TwistReading reading = TwistReading::literal);

// M at (alpha b, gamma b) -> (alpha, gamma): h -> m = b^-1(h).m, coaction unchanged.
YDModule shift_functor(const YDModule& m, const HopfAutomorphism& b);
// N at (alpha, gamma) -> (alpha b, gamma b): h -> n = b(h).n.
YDModule shift_inverse(const YDModule& n, const HopfAutomorphism& b);

// S~(h) = S(h1) theta(h2).
LinMap modular_antipode(const HomHopfAlgebra& h, const Vector& theta);
// Gate theta(omega) = 1, then S~^2(h) = omega^-1 (h omega) on every basis element.
AxiomReport check_modular_pair(const HomHopfAlgebra& h, const ModularPair& mp);
// Exponents k in [-kmax, kmax] with S~^2(h) = omega^-1 (xi^k(h) omega) for all h.
std::vector<int> modular_pair_xi_powers(const HomHopfAlgebra& h, const ModularPair& mp, int kmax = 4);

// Anti-YD module (pair (S^2, id)) -> YD module at (id, id):
// h -> m = theta(S(h1)) h2.m, rho = m0 (x) m1 omega^-1.
YDModule anti_yd_to_yd(const YDModule& m, const ModularPair& mp);

struct Cor49Iso {
    LinMap to_twisted;  // D(H) -> H* # H(alpha, beta)
    LinMap to_double;   // H* # H(alpha, beta) -> D(H)
};

// f # h -> (omega^-1 -> f) # theta(beta^-1(S(h1))) beta^-1(h2)  and
// f # h -> (omega -> f) # theta(h1) beta(h2), with the left harpoon.
// xi_corrected feeds f o xi into the harpoon and applies xi to the last leg in both maps.
Cor49Iso cor49_iso(const AutPair& p, const InvolutivePair& pi, TwistReading reading = TwistReading::literal);
// Both maps commute with the twists, preserve products and units, and are mutually inverse.
AxiomReport check_cor49(const DrinfeldDouble& d, const DiagonalCrossedProduct& a, const Cor49Iso& iso);

}  // namespace homhopf
