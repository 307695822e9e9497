#pragma once

#include "homhopf/representations.hpp"

namespace homhopf {

// Element (alpha, beta) of the group G of automorphism pairs.
struct AutPair {
    HopfAutomorphism alpha, beta;

    const HopfPtr& carrier() const { return alpha.carrier(); }
    static AutPair identity(const HopfPtr& h);
    friend bool operator==(const AutPair& p, const AutPair& q) { return p.alpha == q.alpha && p.beta == q.beta; }
};

// (alpha, beta) * (gamma, delta) = (alpha gamma, delta gamma^-1 beta gamma)
AutPair group_mul(const AutPair& p, const AutPair& q);
// (alpha, beta)^-1 = (alpha^-1, alpha beta^-1 alpha^-1)
AutPair group_inv(const AutPair& p);

// Left module and right comodule over the same H, sharing xi, labelled by a pair.
class YDModule {
public:
    YDModule(AutPair pair, HomModule module, HomComodule comodule);
    YDModule(AutPair pair, LinMap xi, MultilinearMap action, MultilinearMap coaction);

    const AutPair& pair() const { return pair_; }
    const HopfPtr& carrier() const { return pair_.carrier(); }
    const HomModule& module() const { return mod_; }
    const HomComodule& comodule() const { return com_; }
    std::size_t dim() const { return mod_.dim(); }
    const LinMap& xi() const { return mod_.xi(); }
    const LinMap& xi_inv() const { return mod_.xi_inv(); }
    const MultilinearMap& action() const { return mod_.action(); }
    const MultilinearMap& coaction() const { return com_.coaction(); }

private:
    AutPair pair_;
    HomModule mod_;
    HomComodule com_;
};

// Module and comodule axioms, the compatibility condition ("yd-compatibility")
// and its equivalent reformulation ("yd-compatibility-alt").
AxiomReport check_yd(const YDModule& m);
// Compatibility in the form  rho(h.m) = xi(h21).m0 (x) (h22 xi^-1(m1)) L(h1),
// with an arbitrary map L (for example S for anti-YD modules).
AxiomResult check_yd_condition(const YDModule& m, const LinMap& left_factor, std::string id);
// Same with R(h22) in place of h22.
AxiomResult check_yd_condition(const YDModule& m, const LinMap& left_factor, const LinMap& right_factor,
                               std::string id);

// H(alpha, beta): h.x = (beta(h2) xi^-1(x)) alpha(S^-1(xi(h1))), coaction Delta.
YDModule canonical_yd(const AutPair& p);
// k with h.1 = eps(h), rho(1) = 1 (x) 1, at (id, id).
YDModule unit_yd(const HopfPtr& h);
// V with h.v = eps(h) xi_V(v), rho(v) = xi_V^-1(v) (x) 1.
YDModule trivial_yd(const HopfPtr& h, const LinMap& xi);

// M (x) N at group_mul(M.pair, N.pair).
YDModule yd_tensor(const YDModule& m, const YDModule& n);

// Module, comodule and xi-compatibility of a linear map between YD modules.
AxiomReport check_yd_morphism(const LinMap& f, const YDModule& src, const YDModule& dst);

enum class DualSide { right, left };

struct YDDual {
    YDModule dual;                 // at group_inv(M.pair)
    LinMap coevaluation;           // b: k -> M (x) M*, 1 -> sum c_i (x) c^i
    LinMap evaluation;             // d: M* (x) M -> k, p (x) m -> p(m)
    DualSide side;
};

// Action (h.p)(m) = p(beta^-1 alpha^-1 S xi^-1(h) . xi_M^-2(m)), twist p o xi_M^-1,
// coaction p0(m) (x) p1 = p(xi_M^2(m0)) (x) S^-1 xi(m1).  Both sides share the formulas.
YDDual yd_dual(const YDModule& m, DualSide side = DualSide::right);
// Both zig-zag identities.
AxiomReport check_snake(const YDModule& m, const YDDual& d);
// b and d as module and comodule maps out of / into the unit object.
AxiomReport check_duality_morphisms(const YDModule& m, const YDDual& d);

// A module over a bicomodule algebra A together with an H-comodule structure.
class YDDatumModule {
public:
    YDDatumModule(BicomoduleAlgebra algebra, HomModule module, HomComodule comodule);

    const BicomoduleAlgebra& bicomodule_algebra() const { return alg_; }
    const HomModule& module() const { return mod_; }
    const HomComodule& comodule() const { return com_; }
    std::size_t dim() const { return mod_.dim(); }
    const LinMap& xi() const { return mod_.xi(); }
    const LinMap& xi_inv() const { return mod_.xi_inv(); }

private:
    BicomoduleAlgebra alg_;
    HomModule mod_;
    HomComodule com_;
};

AxiomReport check_datum_module(const YDDatumModule& m);
// A YD module at (alpha, beta) read as a datum module over H(alpha, beta).
YDDatumModule datum_from_yd(const YDModule& m);

// A YD module at (S^{2n}, id), n = grade.
class GradedYD {
public:
    GradedYD(YDModule module, int grade);

    const YDModule& module() const { return m_; }
    int grade() const { return grade_; }

private:
    YDModule m_;
    int grade_;
};

AutPair graded_pair(const HopfPtr& h, int grade);
// Compatibility with S^{2n-1}(h1) in the last factor.
AxiomReport check_nyd(const GradedYD& m);
// ^{(S^{2m}, id)}N: a . y = S^{-2m}(a) . y, coaction y0 (x) S^{2m}(y1); grade unchanged.
GradedYD conjugate_module(const GradedYD& n, int m);
// h.(m (x) n) = S^{2n}(h1).m (x) h2.n; grades add.
GradedYD nyd_tensor(const GradedYD& m, const GradedYD& n);
// c(x (x) y) = xi_N(y0) (x) y1 . xi_M^-1(x) : M (x) N -> ^M N (x) M.
MultilinearMap braiding(const GradedYD& m, const GradedYD& n);

// Invertibility, naturality with respect to xi_M (x) xi_N and the
// module/comodule morphism property into ^M N (x) M.
AxiomReport check_braiding(const GradedYD& m, const GradedYD& n);
// Both braiding composition axioms with the Hom associator
// a_{U,V,W} = xi_U (x) id_V (x) xi_W^-1.
AxiomReport check_hexagons(const GradedYD& u, const GradedYD& v, const GradedYD& w);

}  // namespace homhopf
