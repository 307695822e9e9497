#pragma once

#include "homhopf/hom_hopf.hpp"

namespace homhopf {

// Left Hom-module: action A (x) M -> M.
class HomModule {
public:
    HomModule() = default;
    HomModule(AlgebraPtr algebra, LinMap xi, MultilinearMap action);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return xi_.domain_dim(); }
    const LinMap& xi() const { return xi_; }
    const LinMap& xi_inv() const { return xi_inv_; }
    const MultilinearMap& action() const { return act_; }

private:
    AlgebraPtr alg_;
    LinMap xi_, xi_inv_;
    MultilinearMap act_;
};

// Right Hom-comodule: coaction M -> M (x) C.
class HomComodule {
public:
    HomComodule() = default;
    HomComodule(CoalgebraPtr coalgebra, LinMap xi, MultilinearMap coaction);

    const CoalgebraPtr& coalgebra() const { return coalg_; }
    std::size_t dim() const { return xi_.domain_dim(); }
    const LinMap& xi() const { return xi_; }
    const LinMap& xi_inv() const { return xi_inv_; }
    const MultilinearMap& coaction() const { return coact_; }

private:
    CoalgebraPtr coalg_;
    LinMap xi_, xi_inv_;
    MultilinearMap coact_;
};

// Two-sided Hom-module: left A (x) M -> M and right M (x) A -> M.
struct Bimodule {
    AlgebraPtr algebra;
    LinMap xi;
    MultilinearMap left, right;
};

// Hom-algebra A with left coaction A -> H (x) A and right coaction A -> A (x) H.
class BicomoduleAlgebra {
public:
    BicomoduleAlgebra() = default;
    BicomoduleAlgebra(AlgebraPtr algebra, HopfPtr hopf, MultilinearMap left_coaction, MultilinearMap right_coaction);

    const AlgebraPtr& algebra() const { return alg_; }
    const HopfPtr& hopf() const { return hopf_; }
    std::size_t dim() const { return alg_->dim(); }
    const MultilinearMap& left_coaction() const { return left_; }
    const MultilinearMap& right_coaction() const { return right_; }

private:
    AlgebraPtr alg_;
    HopfPtr hopf_;
    MultilinearMap left_, right_;
};

AxiomReport check_module(const HomModule& m);
AxiomReport check_comodule(const HomComodule& m);
AxiomReport check_bimodule(const Bimodule& m);
AxiomReport check_bicomodule_algebra(const BicomoduleAlgebra& a);

// A acting on itself by its product; C coacting on itself by its coproduct.
HomModule regular_module(const AlgebraPtr& a);
HomComodule regular_comodule(const CoalgebraPtr& c);
// a . m := phi(a) . m
HomModule restrict_along(const HomModule& m, const LinMap& phi);

// H with rho_l = rho_r = Delta.
BicomoduleAlgebra regular_bicomodule_algebra(const HopfPtr& h);
// H(alpha, beta): rho_l(h) = alpha(h1) (x) h2, rho_r(h) = h1 (x) beta(h2).
BicomoduleAlgebra twisted_bicomodule_algebra(const HopfPtr& h, const LinMap& alpha, const LinMap& beta);

}  // namespace homhopf
