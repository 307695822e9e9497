#pragma once

#include "homhopf/examples.hpp"
#include "homhopf/io.hpp"
#include "homhopf/twist_functors.hpp"

#include <gtest/gtest.h>

namespace hhtest {

using namespace homhopf;

inline ::testing::AssertionResult Passes(const AxiomReport& r) {
    if (r.passed()) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << format_report(r);
}

inline ::testing::AssertionResult Passes(const AxiomResult& r) {
    AxiomReport rep;
    rep.add(r);
    return Passes(rep);
}

inline HopfPtr h4(const Scalar& c = 1) { return share(build_h4(c)); }

inline AutPair phi_pair(const HopfPtr& h, const Scalar& a, const Scalar& b) {
    return {h4_automorphism(h, a), h4_automorphism(h, b)};
}

inline AutPair s2_pair(const HopfPtr& h) {
    return {HopfAutomorphism(h, h->antipode().power(2)), HopfAutomorphism::identity(h)};
}

inline Vector q(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Basis of H4: 1, g, x, gx.
enum H4 : std::size_t { ONE = 0, G = 1, X = 2, GX = 3 };

}  // namespace hhtest
