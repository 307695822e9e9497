#include "homhopf/t_coalgebra.hpp"

namespace homhopf {

namespace {

std::string at(std::string id, std::initializer_list<std::size_t> idx) {
    id += '@';
    bool first = true;
    for (auto i : idx) {
        if (!first) id += ',';
        id += std::to_string(i);
        first = false;
    }
    return id;
}

}  // namespace

std::optional<std::size_t> HopfTCoalgebra::find(const AutPair& p) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i] == p) return i;
    return std::nullopt;
}

std::size_t HopfTCoalgebra::neutral() const { return *find(AutPair::identity(carrier)); }

std::size_t HopfTCoalgebra::inverse(std::size_t i) const { return *find(group_inv(index.at(i))); }

std::optional<std::size_t> HopfTCoalgebra::product(std::size_t i, std::size_t j) const {
    return find(group_mul(index.at(i), index.at(j)));
}

HopfTCoalgebra build_mhd(const HopfPtr& hp, const std::vector<AutPair>& pairs) {
    HopfTCoalgebra t;
    t.carrier = hp;
    for (const auto& p : pairs) {
        if (p.carrier() != hp || p.beta.carrier() != hp) throw InputError("pair lives on a different Hopf algebra");
        if (!t.find(p)) t.index.push_back(p);
    }
    if (!t.find(AutPair::identity(hp))) throw InputError("index set must contain (id, id)");
    for (const auto& p : t.index)
        if (!t.find(group_inv(p))) throw InputError("index set is not closed under inverses");

    const auto& H = *hp;
    const std::size_t n = H.dim(), N = n * n;
    for (const auto& p : t.index) t.components.push_back(a_alpha_beta(hp, p.alpha, p.beta));
    const auto& Hd = *t.components.front().dual();

    for (std::size_t i = 0; i < t.index.size(); ++i)
        for (std::size_t j = 0; j < t.index.size(); ++j) {
            if (!t.product(i, j)) continue;
            const auto& q = t.index[j];
            const LinMap& gamma = q.alpha.matrix();
            const LinMap second = q.alpha.inverse_matrix() * t.index[i].beta.matrix() * gamma;
            const auto d = tabulate({n, n}, {n, n, n, n}, [&](const Tensor& x) {
                return x.apply(Hd.comult(), {0})
                    .apply(H.comult(), {2})
                    .apply(gamma, 2)
                    .apply(second, 3)
                    .permute({1, 2, 0, 3});
            });
            t.comult.emplace(HopfTCoalgebra::IndexPair{i, j}, reshape(d, {N}, {N, N}));
        }

    t.counit.assign(N, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.counit[i * n + j] = H.unit()[i] * H.counit()[j];

    const LinMap x = dualize(H.xi() * H.antipode_inv());
    const Tensor eps = Tensor::from_vector(Hd.unit());
    const Tensor one = Tensor::from_vector(H.unit());
    for (std::size_t i = 0; i < t.index.size(); ++i) {
        const auto& p = t.index[i];
        const LinMap left = p.alpha.matrix() * p.beta.matrix() * H.antipode() * H.xi_inv();
        const auto prod4 = reshape(t.algebra(t.inverse(i)).mult(), {n, n, n, n}, {n, n});
        const auto s = tabulate({n, n}, {n, n}, [&](const Tensor& v) {
            const Tensor hf = v.apply(x, 0).apply(left, 1).swap(0, 1);
            return outer(outer(eps, hf), one).apply(prod4, {0, 1, 2, 3});
        });
        t.antipodes.emplace(i, s.flat());
    }

    for (std::size_t i = 0; i < t.index.size(); ++i) {
        const auto& p = t.index[i];
        const auto pinv = group_inv(p);
        for (std::size_t j = 0; j < t.index.size(); ++j) {
            if (!t.find(group_mul(group_mul(p, t.index[j]), pinv))) continue;
            const auto& q = t.index[j];
            const LinMap on_f = dualize(p.beta.matrix() * p.alpha.inverse_matrix());
            const LinMap on_h =
                p.alpha.matrix() * q.alpha.inverse_matrix() * p.beta.inverse_matrix() * q.alpha.matrix();
            t.conjugations.emplace(HopfTCoalgebra::IndexPair{i, j}, kron(on_f, on_h));
        }
    }
    return t;
}

AxiomReport check_t_coalgebra(const HopfTCoalgebra& t) {
    AxiomReport rep;
    const std::size_t K = t.index.size();
    const std::size_t e = t.neutral();
    const std::size_t N = t.algebra(e).dim();
    const auto& d = [&](std::size_t i, std::size_t j) -> const MultilinearMap& { return t.comult.at({i, j}); };
    const MultilinearMap eps = MultilinearMap::functional(t.counit);

    for (std::size_t i = 0; i < K; ++i) rep.merge(check_hom_algebra(t.algebra(i)), at("component", {i}));

    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            for (std::size_t k = 0; k < K; ++k) {
                const auto ij = t.product(i, j), jk = t.product(j, k);
                if (!ij || !jk || !t.product(*ij, k)) continue;
                rep.add(check_identity(
                    at("hom-coassociativity", {i, j, k}), {N},
                    [&](const Tensor& c) {
                        return c.apply(d(i, *jk), {0}).apply(t.algebra(i).xi_inv(), 0).apply(d(j, k), {1});
                    },
                    [&](const Tensor& c) {
                        return c.apply(d(*ij, k), {0}).apply(d(i, j), {0}).apply(t.algebra(k).xi_inv(), 2);
                    }));
            }

    for (std::size_t i = 0; i < K; ++i) {
        const auto& xinv = t.algebra(i).xi_inv();
        rep.add(check_identity(
            at("counit-right", {i}), {N}, [&](const Tensor& c) { return c.apply(d(i, e), {0}).apply(eps, {1}); },
            [&](const Tensor& c) { return c.apply(xinv, 0); }));
        rep.add(check_identity(
            at("counit-left", {i}), {N}, [&](const Tensor& c) { return c.apply(d(e, i), {0}).apply(eps, {0}); },
            [&](const Tensor& c) { return c.apply(xinv, 0); }));
    }

    for (const auto& [ij, dm] : t.comult) {
        const auto [i, j] = ij;
        const std::size_t k = *t.product(i, j);
        const auto& A = t.algebra(k);
        const auto& P = t.algebra(i);
        const auto& Q = t.algebra(j);
        rep.add(check_identity(
            at("xi-comultiplicative", {i, j}), {N}, [&](const Tensor& c) { return c.apply(A.xi_inv(), 0).apply(dm, {0}); },
            [&](const Tensor& c) { return c.apply(dm, {0}).apply(P.xi_inv(), 0).apply(Q.xi_inv(), 1); }));
        rep.add(check_identity(
            at("comult-multiplicative", {i, j}), {N, N},
            [&](const Tensor& c) { return c.apply(A.mult(), {0, 1}).apply(dm, {0}); },
            [&](const Tensor& c) {
                return c.apply(dm, {0}).apply(dm, {2}).apply(P.mult(), {0, 2}).apply(Q.mult(), {1, 2});
            }));
        rep.add(check_flag(at("comult-unit", {i, j}),
                           Tensor::from_vector(A.unit()).apply(dm, {0}) ==
                               outer(Tensor::from_vector(P.unit()), Tensor::from_vector(Q.unit()))));
    }

    const auto& E = t.algebra(e);
    rep.add(check_identity(
        "counit-xi", {N}, [&](const Tensor& c) { return c.apply(E.xi_inv(), 0).apply(eps, {0}); },
        [&](const Tensor& c) { return c.apply(eps, {0}); }));
    rep.add(check_identity(
        "counit-multiplicative", {N, N}, [&](const Tensor& c) { return c.apply(E.mult(), {0, 1}).apply(eps, {0}); },
        [&](const Tensor& c) { return c.apply(eps, {0}).apply(eps, {0}); }));
    rep.add(check_flag("counit-unit", pair(t.counit, E.unit()) == 1));

    for (std::size_t i = 0; i < K; ++i) {
        const std::size_t iv = t.inverse(i);
        const auto& A = t.algebra(i);
        const LinMap& s = t.antipodes.at(iv);
        const Tensor one = Tensor::from_vector(A.unit());
        const auto rhs = [&](const Tensor& c) { return c.apply(eps, {0}).to_scalar() * one; };
        rep.add(check_identity(
            at("antipode-left", {i}), {N},
            [&](const Tensor& c) { return c.apply(d(iv, i), {0}).apply(s, 0).apply(A.mult(), {0, 1}); }, rhs));
        rep.add(check_identity(
            at("antipode-right", {i}), {N},
            [&](const Tensor& c) { return c.apply(d(i, iv), {0}).apply(s, 1).apply(A.mult(), {0, 1}); }, rhs));
    }
    return rep;
}

AxiomReport check_crossing(const HopfTCoalgebra& t) {
    AxiomReport rep;
    const std::size_t K = t.index.size();
    const std::size_t e = t.neutral();
    const std::size_t N = t.algebra(e).dim();
    const auto target = [&](std::size_t i, std::size_t j) {
        return *t.find(group_mul(group_mul(t.index[i], t.index[j]), group_inv(t.index[i])));
    };
    const auto has = [&](std::size_t i, std::size_t j) { return t.conjugations.count({i, j}) > 0; };
    const auto phi = [&](std::size_t i, std::size_t j) -> const LinMap& { return t.conjugations.at({i, j}); };
    const MultilinearMap eps = MultilinearMap::functional(t.counit);

    for (const auto& [ij, f] : t.conjugations) {
        const auto [i, j] = ij;
        const auto& S = t.algebra(j);
        const auto& D = t.algebra(target(i, j));
        rep.add(check_flag(at("invertible", {i, j}), f.rank() == N));
        rep.add(check_identity(
            at("multiplicative", {i, j}), {N, N}, [&](const Tensor& c) { return c.apply(S.mult(), {0, 1}).apply(f, 0); },
            [&](const Tensor& c) { return c.apply(f, 0).apply(f, 1).apply(D.mult(), {0, 1}); }));
        rep.add(check_flag(at("unit", {i, j}), f.apply(S.unit()) == D.unit()));
        rep.add(check_flag(at("commutes-xi", {i, j}), f * S.xi() == D.xi() * f));
        if (i == e) rep.add(check_flag(at("neutral-identity", {j}), f.is_identity()));
        if (j == e)
            rep.add(check_identity(
                at("counit", {i}), {N}, [&](const Tensor& c) { return c.apply(f, 0).apply(eps, {0}); },
                [&](const Tensor& c) { return c.apply(eps, {0}); }));
        const std::size_t iv = t.inverse(i);
        if (has(iv, target(i, j)))
            rep.add(check_flag(at("inverse", {i, j}), phi(iv, target(i, j)) * f == LinMap::identity(N)));
        const std::size_t jv = t.inverse(j);
        if (has(i, jv))
            rep.add(check_flag(at("antipode", {i, j}),
                               phi(i, jv) * t.antipodes.at(j) == t.antipodes.at(target(i, j)) * f));
    }

    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            for (std::size_t k = 0; k < K; ++k) {
                const auto jk = t.product(j, k);
                if (!jk || !has(i, j) || !has(i, k) || !has(i, *jk)) continue;
                const auto& dst = t.comult.at({target(i, j), target(i, k)});
                const auto& src = t.comult.at({j, k});
                const LinMap& fj = phi(i, j);
                const LinMap& fk = phi(i, k);
                const LinMap& fjk = phi(i, *jk);
                rep.add(check_identity(
                    at("comultiplicative", {i, j, k}), {N}, [&](const Tensor& c) { return c.apply(fjk, 0).apply(dst, {0}); },
                    [&](const Tensor& c) { return c.apply(src, {0}).apply(fj, 0).apply(fk, 1); }));
            }

    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t i2 = 0; i2 < K; ++i2) {
            const auto prod = t.product(i, i2);
            if (!prod) continue;
            for (std::size_t j = 0; j < K; ++j) {
                if (!has(i2, j) || !has(i, target(i2, j)) || !has(*prod, j)) continue;
                rep.add(check_flag(at("composition", {i, i2, j}), phi(i, target(i2, j)) * phi(i2, j) == phi(*prod, j)));
            }
        }
    return rep;
}

HomModule rep_transport(const HopfTCoalgebra& t, const YDModule& m) {
    const auto i = t.find(m.pair());
    if (!i) throw InputError("module's pair is not in the index set");
    return functor_F(t.components[*i], datum_from_yd(m));
}

YDModule rep_transport_inverse(const HopfTCoalgebra& t, const AutPair& p, const HomModule& n) {
    const auto i = t.find(p);
    if (!i) throw InputError("pair is not in the index set");
    const auto d = functor_G(t.components[*i], n);
    return YDModule(p, d.module(), d.comodule());
}

}  // namespace homhopf
