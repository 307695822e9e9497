#pragma once

#include "homhopf/hom_hopf.hpp"

#include <map>
#include <string>
#include <vector>

namespace homhopf {

// Classical Sweedler algebra on the basis 1, g, x, gx (xi = id).
HomHopfAlgebra build_sweedler();

// Sweedler's algebra with product and coproduct twisted by xi = diag(1, 1, c, c),
// written out as explicit tables.  Throws for c = 0.
HomHopfAlgebra build_h4(const Scalar& c);

// The antipode table with S(gx) = -x.  It is not convolution inverse to the
// identity; kept so the discrepancy stays testable.
LinMap h4_sign_flipped_antipode();

// Yau twist of k[Z_n] by sigma_t(a) = a^t.  Throws unless n >= 2 and gcd(t, n) = 1.
HomHopfAlgebra build_cyclic_twist(int n, int t);

struct LiteralBuild {
    HomHopfAlgebra algebra;
    AxiomReport report;
};

// Cyclic tables a^i o a^j = a^{i+j-2}, Delta(a^i) = a^{i-2} (x) a^{i-2},
// xi(a^k) = a^{k+2}, S(a^i) = a^{-i}; the report records every failing axiom.
LiteralBuild build_cyclic_literal(int n);

// phi_lambda = diag(1, 1, lambda, lambda) on build_h4(c).  Throws for lambda = 0.
HopfAutomorphism h4_automorphism(const HopfPtr& h4, const Scalar& lambda);
// sigma_t(a^i) = a^{i t} on a cyclic group algebra.
HopfAutomorphism cyclic_automorphism(const HopfPtr& cyclic, int t);

struct ExampleSpec {
    std::string name;                        // h4, cyclic-twist, cyclic-literal, sweedler
    std::map<std::string, Scalar> parameters;  // c for h4; n, t for cyclic-*
    std::string notes;
};

struct ExampleBuild {
    ExampleSpec spec;
    HomHopfAlgebra algebra;
    AxiomReport report;
};

std::vector<std::string> example_names();
// Fills defaults for missing parameters and runs the full checker suite.
// Unknown names and bad parameters throw InputError.
ExampleBuild build_example(ExampleSpec spec);

}  // namespace homhopf
