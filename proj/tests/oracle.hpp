#pragma once

#include "homhopf/crossed_products.hpp"

#include <functional>
#include <tuple>
#include <vector>

namespace hhtest {

using namespace homhopf;

// Functionals on H are coordinate vectors; everything below is evaluated
// pointwise from the product and coproduct tables, without the leg engine.
struct Oracle {
    const HomHopfAlgebra& h;

    std::size_t n() const { return h.dim(); }

    Scalar eval(const Vector& f, const Vector& k) const { return pair(f, k); }

    Vector functional(const std::function<Scalar(const Vector&)>& fn) const {
        Vector out(n());
        for (std::size_t i = 0; i < n(); ++i) out[i] = fn(basis_vector(n(), i));
        return out;
    }

    // f o xi^k
    Vector twist(const Vector& f, int k) const {
        const LinMap xk = h.xi().power(k);
        return functional([&](const Vector& v) { return eval(f, xk.apply(v)); });
    }

    // (u -> f)(k) = f(xi^-2(k) xi^-1(u))
    Vector left(const Vector& u, const Vector& f) const {
        return functional([&](const Vector& k) {
            return eval(f, h.multiply(h.xi().power(-2).apply(k), h.xi_inv().apply(u)));
        });
    }

    // (f <- u)(k) = f(xi^-1(u) xi^-2(k))
    Vector right(const Vector& f, const Vector& u) const {
        return functional([&](const Vector& k) {
            return eval(f, h.multiply(h.xi_inv().apply(u), h.xi().power(-2).apply(k)));
        });
    }

    // (f g)(k) = f(k1) g(k2)
    Vector dual_mult(const Vector& f, const Vector& g) const {
        const auto& d = h.comult().flat();
        return functional([&](const Vector& k) {
            Scalar s = 0;
            for (std::size_t i = 0; i < n(); ++i)
                for (std::size_t a = 0; a < n(); ++a)
                    for (std::size_t b = 0; b < n(); ++b) s += k[i] * d.at(a * n() + b, i) * f[a] * g[b];
            return s;
        });
    }

    // Coproduct of e_i as a list of (coefficient, left, right) basis terms.
    std::vector<std::tuple<Scalar, std::size_t, std::size_t>> coprod(std::size_t i) const {
        std::vector<std::tuple<Scalar, std::size_t, std::size_t>> out;
        const auto& flat = h.comult().flat();
        for (std::size_t a = 0; a < n(); ++a)
            for (std::size_t b = 0; b < n(); ++b)
                if (flat.at(a * n() + b, i) != 0) out.emplace_back(flat.at(a * n() + b, i), a, b);
        return out;
    }

    // (f # h)(g # l) = f (alpha(h1) -> ((g o xi^2) <- S^-1(beta(h22)))) # xi^2(h21) l, on H* (x) H.
    Vector product(std::size_t f, std::size_t hh, std::size_t g, std::size_t l, const LinMap& alpha,
                   const LinMap& beta) const {
        Vector out(n() * n());
        const Vector fv = basis_vector(n(), f), gv = twist(basis_vector(n(), g), 2);
        const LinMap sinv_beta = h.antipode_inv() * beta, xi2 = h.xi().power(2);
        for (const auto& [c1, h1, h2] : coprod(hh))
            for (const auto& [c2, h21, h22] : coprod(h2)) {
                const Vector fn = dual_mult(fv, left(alpha.column(h1), right(gv, sinv_beta.column(h22))));
                const Vector a = h.multiply(xi2.column(h21), basis_vector(n(), l));
                for (std::size_t i = 0; i < n(); ++i)
                    for (std::size_t j = 0; j < n(); ++j) out[i * n() + j] += c1 * c2 * fn[i] * a[j];
            }
        return out;
    }
};

}  // namespace hhtest
