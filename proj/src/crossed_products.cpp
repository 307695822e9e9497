#include "homhopf/crossed_products.hpp"

namespace homhopf {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

// <f, h> on H* (x) H (or H (x) H*; the pairing matrix is symmetric in the two legs).
MultilinearMap pairing(std::size_t n) {
    LinMap p(1, n * n);
    for (std::size_t i = 0; i < n; ++i) p.at(0, i * n + i) = 1;
    return MultilinearMap({n, n}, {}, p);
}

// The four-leg product H* (x) A (x) H* (x) A -> H* (x) A.
MultilinearMap crossed_product_tensor(const HomHopfAlgebra& H, const HomHopfAlgebra& Hd, const BicomoduleAlgebra& a) {
    const std::size_t n = H.dim(), m = a.dim();
    const auto hp = harpoons(H);
    const LinMap xi2 = dual_twist_power(H, 2);
    const LinMap xia2 = a.algebra()->xi().power(2);
    const auto& mult_a = a.algebra()->mult();
    return tabulate({n, m, n, m}, {n, m}, [&](const Tensor& t) {
        return t.apply(xi2, 2)
            .apply(a.left_coaction(), {1})
            .apply(a.right_coaction(), {2})
            .apply(H.antipode_inv(), 3)
            .apply(hp.right, {4, 3})
            .apply(hp.left, {1, 3})
            .apply(Hd.mult(), {0, 1})
            .apply(xia2, 1)
            .apply(mult_a, {1, 2});
    });
}

}  // namespace

LinMap dual_twist_power(const HomHopfAlgebra& h, int k) { return dualize(h.xi().power(k)); }

Harpoons harpoons(const HomHopfAlgebra& h) {
    const std::size_t n = h.dim();
    const auto pair = pairing(n);
    const MultilinearMap dual_comult({n}, {n, n}, h.mult().flat().transpose());
    const LinMap xi_m2 = dual_twist_power(h, -2);
    auto left = tabulate({n, n}, {n}, [&](const Tensor& t) {
        return t.apply(dual_comult, {1}).apply(h.xi_inv(), 0).apply(pair, {2, 0}).apply(xi_m2, 0);
    });
    auto right = tabulate({n, n}, {n}, [&](const Tensor& t) {
        return t.apply(dual_comult, {0}).apply(h.xi_inv(), 2).apply(pair, {0, 2}).apply(xi_m2, 0);
    });
    return {std::move(left), std::move(right)};
}

Bimodule harpoon_bimodule(const HopfPtr& h) {
    auto hp = harpoons(*h);
    return {algebra_of(h), dual_twist_power(*h, -1), std::move(hp.left), std::move(hp.right)};
}

AxiomResult check_harpoon_coproduct(const HomHopfAlgebra& h) {
    const std::size_t n = h.dim();
    const auto hp = harpoons(h);
    const MultilinearMap dual_comult({n}, {n, n}, h.mult().flat().transpose());
    const LinMap xs = dual_twist_power(h, -1);
    return check_identity(
        "harpoon-coproduct", {n, n, n},
        [&](const Tensor& t) { return t.apply(hp.right, {1, 2}).apply(hp.left, {0, 1}).apply(dual_comult, {0}); },
        [&](const Tensor& t) {
            return t.apply(dual_comult, {1})
                .apply(xs, 1)
                .apply(xs, 2)
                .apply(hp.right, {1, 3})
                .apply(h.xi_inv(), 0)
                .apply(hp.left, {0, 2})
                .swap(0, 1);
        });
}

DiagonalCrossedProduct::DiagonalCrossedProduct(HopfPtr hopf, BicomoduleAlgebra base)
    : hopf_(std::move(hopf)), base_(std::move(base)) {
    require(hopf_ && base_.hopf() == hopf_, "bicomodule algebra is not over the given Hopf algebra");
    dual_ = share(dual_hopf(*hopf_));
    const std::size_t n = hopf_->dim(), m = base_.dim(), N = n * m;
    const auto prod = crossed_product_tensor(*hopf_, *dual_, base_);
    Vector unit(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) unit[i * m + j] = dual_->unit()[i] * base_.algebra()->unit()[j];
    product_ = share(HomAlgebra(kron(dual_->xi(), base_.algebra()->xi()), reshape(prod, {N, N}, {N}), unit));
}

DiagonalCrossedProduct diagonal_crossed_product(const HopfPtr& h, const BicomoduleAlgebra& a) {
    return DiagonalCrossedProduct(h, a);
}

DiagonalCrossedProduct a_alpha_beta(const HopfPtr& h, const HopfAutomorphism& alpha, const HopfAutomorphism& beta) {
    require(alpha.carrier() == h && beta.carrier() == h, "automorphisms live on a different Hopf algebra");
    return DiagonalCrossedProduct(h, twisted_bicomodule_algebra(h, alpha.matrix(), beta.matrix()));
}

DrinfeldDouble drinfeld_double(const HopfPtr& hp) {
    DiagonalCrossedProduct dcp(hp, regular_bicomodule_algebra(hp));
    const auto& H = *hp;
    const auto& Hd = *dcp.dual();
    const std::size_t n = H.dim(), N = n * n;

    const auto comult = tabulate({n, n}, {n, n, n, n}, [&](const Tensor& t) {
        return t.apply(Hd.comult(), {0}).apply(H.comult(), {2}).permute({1, 2, 0, 3});
    });
    Vector counit(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) counit[i * n + j] = H.unit()[i] * H.counit()[j];

    const auto prod4 = reshape(dcp.product()->mult(), {n, n, n, n}, {n, n});
    const LinMap x = dualize(H.xi() * H.antipode_inv());
    const LinMap s_xi = H.antipode() * H.xi_inv();
    const Tensor eps = Tensor::from_vector(Hd.unit());
    const Tensor one = Tensor::from_vector(H.unit());
    const auto anti = tabulate({n, n}, {n, n}, [&](const Tensor& t) {
        const Tensor hf = t.apply(x, 0).apply(s_xi, 1).swap(0, 1);
        return outer(outer(eps, hf), one).apply(prod4, {0, 1, 2, 3});
    });

    std::vector<std::string> names;
    for (const auto& f : Hd.basis_names())
        for (const auto& h : H.basis_names()) names.push_back(f + "#" + h);
    HomCoalgebra coalg(dcp.product()->xi(), reshape(comult, {N}, {N, N}), counit);
    auto dh = share(HomHopfAlgebra(*dcp.product(), coalg, anti.flat(), names));
    AxiomReport rep = check_hom_hopf(*dh);
    return {std::move(dcp), std::move(dh), std::move(rep)};
}

BicomoduleAlgebra dh_bicomodule(const DiagonalCrossedProduct& p, const DrinfeldDouble& d) {
    require(d.crossed.hopf() == p.hopf(), "double is built over a different Hopf algebra");
    const auto& Hd = *p.dual();
    const auto& a = p.base();
    const std::size_t n = p.hopf()->dim(), m = a.dim(), N = n * m;
    const auto right = tabulate({n, m}, {n, m, n, n}, [&](const Tensor& t) {
        return t.apply(Hd.comult(), {0}).apply(a.right_coaction(), {2}).permute({1, 2, 0, 3});
    });
    const auto left = tabulate({n, m}, {n, n, n, m}, [&](const Tensor& t) {
        return t.apply(Hd.comult(), {0}).apply(a.left_coaction(), {2}).permute({1, 2, 0, 3});
    });
    return BicomoduleAlgebra(p.product(), d.hopf, reshape(left, {N}, {n * n, N}), reshape(right, {N}, {N, n * n}));
}

HomModule functor_F(const DiagonalCrossedProduct& p, const YDDatumModule& m) {
    const auto& ba = m.bicomodule_algebra();
    require(ba.algebra() == p.base().algebra() && ba.hopf() == p.hopf() &&
                ba.left_coaction() == p.base().left_coaction() && ba.right_coaction() == p.base().right_coaction(),
            "datum module is over a different bicomodule algebra");
    const std::size_t n = p.hopf()->dim(), a = p.base().dim(), d = m.dim();
    const auto pair = pairing(n);
    const LinMap xi2 = m.xi().power(2);
    const auto act = tabulate({n, a, d}, {d}, [&](const Tensor& t) {
        return t.apply(m.xi_inv(), 2)
            .apply(m.module().action(), {1, 2})
            .apply(m.comodule().coaction(), {1})
            .apply(pair, {0, 2})
            .apply(xi2, 0);
    });
    return HomModule(p.product(), m.xi(), reshape(act, {n * a, d}, {d}));
}

YDDatumModule functor_G(const DiagonalCrossedProduct& p, const HomModule& nm) {
    return functor_G(p, nm, LinMap::identity(p.hopf()->dim()));
}

YDDatumModule functor_G(const DiagonalCrossedProduct& p, const HomModule& nm, const LinMap& basis) {
    require(nm.algebra() == p.product(), "module is not over the crossed product");
    const auto& H = *p.hopf();
    const auto& A = *p.base().algebra();
    const std::size_t n = H.dim(), a = A.dim(), d = nm.dim();
    require(basis.domain_dim() == n && basis.codomain_dim() == n, "basis has the wrong shape");
    const LinMap cobasis = basis.inverse();
    const auto act3 = reshape(nm.action(), {n, a, d}, {d});
    const Tensor eps = Tensor::from_vector(p.dual()->unit());
    const Tensor one = Tensor::from_vector(A.unit());

    const auto action = tabulate({a, d}, {d}, [&](const Tensor& t) {
        return outer(eps, t.apply(A.xi_inv(), 0)).apply(act3, {0, 1, 2});
    });

    const LinMap xs2 = dual_twist_power(H, 2);
    const LinMap xm2 = nm.xi().power(-2);
    std::vector<Tensor> dual_basis, primal_basis;
    for (std::size_t i = 0; i < n; ++i) {
        Vector row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = cobasis.at(i, k);
        dual_basis.push_back(Tensor::from_vector(row).apply(xs2, 0));
        primal_basis.push_back(Tensor::from_vector(basis.column(i)));
    }
    const auto coaction = tabulate({d}, {d, n}, [&](const Tensor& t) {
        Tensor sum({d, n});
        const Tensor x = t.apply(xm2, 0);
        for (std::size_t i = 0; i < n; ++i)
            sum = sum + outer(outer(outer(dual_basis[i], one), x).apply(act3, {0, 1, 2}), primal_basis[i]);
        return sum;
    });
    return YDDatumModule(p.base(), HomModule(p.base().algebra(), nm.xi(), action),
                         HomComodule(coalgebra_of(p.hopf()), nm.xi(), coaction));
}

}  // namespace homhopf
