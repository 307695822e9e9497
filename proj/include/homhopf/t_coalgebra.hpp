#pragma once

#include "homhopf/crossed_products.hpp"

#include <map>
#include <optional>
#include <utility>

namespace homhopf {

// A Hom-Hopf T-coalgebra over G restricted to a finite index set of pairs.
// Structure maps are stored only where their source and target components
// are both in the index set.
struct HopfTCoalgebra {
    using IndexPair = std::pair<std::size_t, std::size_t>;

    HopfPtr carrier;
    std::vector<AutPair> index;
    std::vector<DiagonalCrossedProduct> components;
    std::map<IndexPair, MultilinearMap> comult;     // (i, j): C_{p_i p_j} -> C_i (x) C_j
    Vector counit;                                  // on C_e
    std::map<std::size_t, LinMap> antipodes;        // i: C_i -> C_{p_i^-1}
    std::map<IndexPair, LinMap> conjugations;       // (i, j): C_j -> C_{p_i p_j p_i^-1}

    std::optional<std::size_t> find(const AutPair& p) const;
    std::size_t neutral() const;
    std::size_t inverse(std::size_t i) const;
    std::optional<std::size_t> product(std::size_t i, std::size_t j) const;
    const HomAlgebra& algebra(std::size_t i) const { return *components.at(i).product(); }
};

// Components H* # H(alpha, beta) and
//   Delta_{p,q}(f # h) = (f2 # gamma(h1)) (x) (f1 # gamma^-1 beta gamma(h2)),  q = (gamma, delta),
//   eps(f # h) = eps(h) f(1),
//   S_p(f # h) = (eps # alpha beta S xi^-1(h))((f o xi o S^-1) # 1), product taken in C_{p^-1},
//   phi^p_q(f # h) = (f o beta alpha^-1 # alpha gamma^-1 beta^-1 gamma(h)),  p = (alpha, beta).
// The index set must contain (id, id) and be closed under inverses.
HopfTCoalgebra build_mhd(const HopfPtr& h, const std::vector<AutPair>& pairs);

// Ids carry the index tuple they were evaluated on, e.g. "hom-coassociativity@1,0,2".
AxiomReport check_t_coalgebra(const HopfTCoalgebra& t);
AxiomReport check_crossing(const HopfTCoalgebra& t);

// A YD module at p as a module over C_p, and back.
HomModule rep_transport(const HopfTCoalgebra& t, const YDModule& m);
YDModule rep_transport_inverse(const HopfTCoalgebra& t, const AutPair& p, const HomModule& n);

}  // namespace homhopf
