#pragma once

#include "homhopf/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace homhopf {

class HomAlgebra {
public:
    HomAlgebra() = default;
    HomAlgebra(LinMap xi, MultilinearMap mult, Vector unit);

    std::size_t dim() const { return xi_.domain_dim(); }
    const LinMap& xi() const { return xi_; }
    const LinMap& xi_inv() const { return xi_inv_; }
    const MultilinearMap& mult() const { return mult_; }
    const Vector& unit() const { return unit_; }

    Vector multiply(const Vector& a, const Vector& b) const;

private:
    LinMap xi_, xi_inv_;
    MultilinearMap mult_;
    Vector unit_;
};

class HomCoalgebra {
public:
    HomCoalgebra() = default;
    HomCoalgebra(LinMap xi, MultilinearMap comult, Vector counit);

    std::size_t dim() const { return xi_.domain_dim(); }
    const LinMap& xi() const { return xi_; }
    const LinMap& xi_inv() const { return xi_inv_; }
    const MultilinearMap& comult() const { return comult_; }
    const Vector& counit() const { return counit_; }
    const MultilinearMap& counit_map() const { return counit_map_; }

private:
    LinMap xi_, xi_inv_;
    MultilinearMap comult_, counit_map_;
    Vector counit_;
};

class HomHopfAlgebra {
public:
    HomHopfAlgebra() = default;
    // The algebra and coalgebra must share xi; the antipode must be invertible.
    HomHopfAlgebra(HomAlgebra algebra, HomCoalgebra coalgebra, LinMap antipode,
                   std::vector<std::string> basis_names = {});

    const HomAlgebra& algebra() const { return alg_; }
    const HomCoalgebra& coalgebra() const { return coalg_; }

    std::size_t dim() const { return alg_.dim(); }
    const LinMap& xi() const { return alg_.xi(); }
    const LinMap& xi_inv() const { return alg_.xi_inv(); }
    const MultilinearMap& mult() const { return alg_.mult(); }
    const Vector& unit() const { return alg_.unit(); }
    const MultilinearMap& comult() const { return coalg_.comult(); }
    const Vector& counit() const { return coalg_.counit(); }
    const MultilinearMap& counit_map() const { return coalg_.counit_map(); }
    const LinMap& antipode() const { return s_; }
    const LinMap& antipode_inv() const { return s_inv_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    Vector multiply(const Vector& a, const Vector& b) const { return alg_.multiply(a, b); }

private:
    HomAlgebra alg_;
    HomCoalgebra coalg_;
    LinMap s_, s_inv_;
    std::vector<std::string> names_;
};

using HopfPtr = std::shared_ptr<const HomHopfAlgebra>;
using AlgebraPtr = std::shared_ptr<const HomAlgebra>;
using CoalgebraPtr = std::shared_ptr<const HomCoalgebra>;

HopfPtr share(HomHopfAlgebra h);
AlgebraPtr share(HomAlgebra a);
// Views into a shared Hopf algebra that keep it alive.
AlgebraPtr algebra_of(const HopfPtr& h);
CoalgebraPtr coalgebra_of(const HopfPtr& h);

AxiomReport check_hom_algebra(const HomAlgebra& a);
AxiomReport check_hom_coalgebra(const HomCoalgebra& c);
AxiomReport check_hom_hopf(const HomHopfAlgebra& h);
AxiomReport verify_automorphism(const HomHopfAlgebra& h, const LinMap& phi);

// Verified automorphism of a shared Hopf algebra; construction throws
// InputError when verify_automorphism fails.
class HopfAutomorphism {
public:
    HopfAutomorphism(HopfPtr carrier, LinMap matrix);
    static HopfAutomorphism identity(HopfPtr carrier);

    const HopfPtr& carrier() const { return carrier_; }
    const LinMap& matrix() const { return m_; }
    const LinMap& inverse_matrix() const { return inv_; }

    HopfAutomorphism inverse() const;
    friend HopfAutomorphism operator*(const HopfAutomorphism& a, const HopfAutomorphism& b);  // a after b
    friend bool operator==(const HopfAutomorphism& a, const HopfAutomorphism& b) { return a.m_ == b.m_; }

private:
    struct Trusted {};
    HopfAutomorphism(HopfPtr carrier, LinMap matrix, LinMap inverse, Trusted);
    HopfPtr carrier_;
    LinMap m_, inv_;
};

// Candidates default to all vectors with entries in {0,1,-1} and support <= 2.
std::vector<Vector> find_group_likes(const HomHopfAlgebra& h, const std::vector<Vector>& candidates = {});
bool is_group_like(const HomHopfAlgebra& h, const Vector& g);

// Classical Hopf algebra (xi = id) twisted by a Hopf automorphism phi:
// m' = phi o m, Delta' = (phi^-1 (x) phi^-1) o Delta, xi' = phi.
HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinMap& phi);

// H* on the dual basis: product dual to Delta, coproduct dual to m, unit eps,
// counit evaluation at 1, antipode f o S, twist f o xi^-1.
HomHopfAlgebra dual_hopf(const HomHopfAlgebra& h);

// Same algebra, coproduct composed with the flip.
HomHopfAlgebra co_opposite(const HomHopfAlgebra& h);

}  // namespace homhopf
