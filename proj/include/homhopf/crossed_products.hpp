#pragma once

#include "homhopf/yetter_drinfeld.hpp"

namespace homhopf {

// f -> f o xi^k on dual coordinates.  The twist of H* is the k = -1 power.
LinMap dual_twist_power(const HomHopfAlgebra& h, int k);

// h -> f = <f2, xi^-1(h)> (f1 o xi^-2),  f <- h = <f1, xi^-1(h)> (f2 o xi^-2).
struct Harpoons {
    MultilinearMap left;   // H (x) H* -> H*
    MultilinearMap right;  // H* (x) H -> H*
};

Harpoons harpoons(const HomHopfAlgebra& h);
// H* as an H-bimodule through the harpoons, with twist f o xi^-1.
Bimodule harpoon_bimodule(const HopfPtr& h);
// Delta_{H*}(h -> (f <- l)) = ((f1 o xi^-1) <- l) (x) (xi^-1(h) -> (f2 o xi^-1)).
AxiomResult check_harpoon_coproduct(const HomHopfAlgebra& h);

// H* (x) A with
//   (f # a)(g # b) = f (a[-1] -> ((g o xi^2) <- S^-1(a[0]<1>))) # xi_A^2(a[0]<0>) b.
// Basis element e^i # a_j sits at flat index i * dim A + j.
class DiagonalCrossedProduct {
public:
    DiagonalCrossedProduct(HopfPtr hopf, BicomoduleAlgebra base);

    const HopfPtr& hopf() const { return hopf_; }
    const HopfPtr& dual() const { return dual_; }
    const BicomoduleAlgebra& base() const { return base_; }
    const AlgebraPtr& product() const { return product_; }
    std::size_t dim() const { return product_->dim(); }

private:
    HopfPtr hopf_, dual_;
    BicomoduleAlgebra base_;
    AlgebraPtr product_;
};

DiagonalCrossedProduct diagonal_crossed_product(const HopfPtr& h, const BicomoduleAlgebra& a);
// H* # H(alpha, beta).
DiagonalCrossedProduct a_alpha_beta(const HopfPtr& h, const HopfAutomorphism& alpha, const HopfAutomorphism& beta);

struct DrinfeldDouble {
    DiagonalCrossedProduct crossed;  // H* # H with rho_l = rho_r = Delta
    HopfPtr hopf;                    // product above, coproduct (f2 # h1) (x) (f1 # h2)
    AxiomReport report;              // full Hom-Hopf check of hopf
};

// Counit eps(h) f(1), antipode S(f # h) = (eps # S xi^-1(h))((f o xi o S^-1) # 1).
DrinfeldDouble drinfeld_double(const HopfPtr& h);

// H* # A as a D(H)-bicomodule algebra:
//   rho_r(f # a) = (f2 # a<0>) (x) (f1 # a<1>),  rho_l(f # a) = (f2 # a[-1]) (x) (f1 # a[0]).
BicomoduleAlgebra dh_bicomodule(const DiagonalCrossedProduct& p, const DrinfeldDouble& d);

// (f # u) |> m = <f, (u . xi_M^-1(m))1> xi_M^2((u . xi_M^-1(m))0).
HomModule functor_F(const DiagonalCrossedProduct& p, const YDDatumModule& m);
// u . m = (eps # xi_A^-1(u)) |> m,  rho(m) = sum_i ((e^i o xi^2) # 1) |> xi_M^-2(m) (x) e_i.
// The columns of `basis` give the basis e_i of H used for the coaction sum.
YDDatumModule functor_G(const DiagonalCrossedProduct& p, const HomModule& n);
YDDatumModule functor_G(const DiagonalCrossedProduct& p, const HomModule& n, const LinMap& basis);

}  // namespace homhopf
