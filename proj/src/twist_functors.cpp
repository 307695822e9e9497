#include "homhopf/twist_functors.hpp"

namespace homhopf {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

void require_passed(const AxiomReport& r, const std::string& what) {
    if (!r.passed()) throw InputError(what + " fails " + r.failed_ids().front());
}

std::vector<Vector> sign_vectors(std::size_t n) {
    std::vector<Vector> out;
    Vector v(n, Scalar(-1));
    while (true) {
        out.push_back(v);
        std::size_t k = 0;
        while (k < n && v[k] == 1) v[k++] = -1;
        if (k == n) break;
        v[k] += 1;
    }
    return out;
}

// Omega times something on the right, written as a side for leg-calculus chains.
Tensor left_multiply(const HomHopfAlgebra& h, const Vector& w, const Tensor& y) {
    return outer(Tensor::from_vector(w), y).apply(h.mult(), {0, 1});
}

Tensor right_multiply(const HomHopfAlgebra& h, const Tensor& y, const Vector& w) {
    return outer(y, Tensor::from_vector(w)).apply(h.mult(), {0, 1});
}

}  // namespace

AxiomReport check_theta_omega(const HomHopfAlgebra& h, const Vector& theta, const Vector& omega) {
    require(theta.size() == h.dim() && omega.size() == h.dim(), "theta/omega have the wrong dimension");
    const auto th = MultilinearMap::functional(theta);
    AxiomReport rep;
    rep.add(check_identity(
        "theta-multiplicative", {h.dim(), h.dim()}, [&](const Tensor& t) { return t.apply(h.mult(), {0, 1}).apply(th, {0}); },
        [&](const Tensor& t) { return t.apply(th, {0}).apply(th, {0}); }));
    rep.add(check_flag("theta-unit", pair(theta, h.unit()) == 1));
    rep.add(check_flag("omega-group-like", is_group_like(h, omega)));
    return rep;
}

AxiomReport check_pair_in_involution(const AutPair& p, const InvolutivePair& pi) {
    const auto& H = *p.carrier();
    AxiomReport rep = check_theta_omega(H, pi.theta, pi.omega);
    if (!rep.passed()) return rep;
    const auto th = MultilinearMap::functional(pi.theta);
    const Vector omega_inv = H.antipode().apply(pi.omega);
    rep.add(check_identity(
        "involution", {H.dim()}, [&](const Tensor& t) { return t.apply(p.alpha.matrix(), 0); },
        [&](const Tensor& t) {
            const Tensor inner = t.apply(H.comult(), {0})
                                     .apply(H.comult(), {0})
                                     .apply(th, {0})
                                     .apply(H.antipode(), 1)
                                     .apply(th, {1})
                                     .apply(p.beta.matrix(), 0);
            return left_multiply(H, omega_inv, right_multiply(H, inner, pi.omega));
        }));
    return rep;
}

std::vector<Vector> algebra_maps(const HomHopfAlgebra& h) {
    const auto dual = dual_hopf(h);
    return find_group_likes(dual, h.dim() <= 8 ? sign_vectors(h.dim()) : std::vector<Vector>{});
}

std::vector<InvolutivePair> sweep_pairs_in_involution(const AutPair& p) {
    const auto& H = *p.carrier();
    std::vector<InvolutivePair> found;
    const auto omegas = find_group_likes(H, H.dim() <= 8 ? sign_vectors(H.dim()) : std::vector<Vector>{});
    for (const auto& theta : algebra_maps(H))
        for (const auto& omega : omegas) {
            InvolutivePair pi{theta, omega};
            if (check_pair_in_involution(p, pi).passed()) found.push_back(std::move(pi));
        }
    return found;
}

Vector theta_inverse(const HomHopfAlgebra& h, const Vector& theta) { return dualize(h.antipode()).apply(theta); }

YDModule make_theta_omega_module(const AutPair& p, const InvolutivePair& pi, const LinMap& xi_v) {
    require_passed(check_pair_in_involution(p, pi), "pair in involution");
    const std::size_t n = p.carrier()->dim(), d = xi_v.domain_dim();
    LinMap theta_row(1, n), omega_col(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        theta_row.at(0, i) = pi.theta[i];
        omega_col.at(i, 0) = pi.omega[i];
    }
    return YDModule(p, xi_v, MultilinearMap({n, d}, {d}, kron(theta_row, xi_v)),
                    MultilinearMap({d}, {d, n}, kron(xi_v.inverse(), omega_col)));
}

YDModule twist_to_untwisted(const YDModule& m, const InvolutivePair& pi) {
    require_passed(check_pair_in_involution(m.pair(), pi), "pair in involution");
    const auto& H = *m.carrier();
    const std::size_t n = H.dim(), d = m.dim();
    const auto th = MultilinearMap::functional(pi.theta);
    const LinMap& binv = m.pair().beta.inverse_matrix();
    const LinMap first = binv * H.antipode();
    const auto action = tabulate({n, d}, {d}, [&](const Tensor& t) {
        return t.apply(H.comult(), {0}).apply(first, 0).apply(th, {0}).apply(binv, 0).apply(m.action(), {0, 1});
    });
    const Vector omega_inv = H.antipode().apply(pi.omega);
    const auto coaction = tabulate({d}, {d, n}, [&](const Tensor& t) {
        return outer(t.apply(m.coaction(), {0}), Tensor::from_vector(omega_inv)).apply(H.mult(), {1, 2});
    });
    return YDModule(AutPair::identity(m.carrier()), m.xi(), action, coaction);
}

YDModule untwist_inverse(const YDModule& nm, const AutPair& p, const InvolutivePair& pi, TwistReading reading) {
    require(nm.pair() == AutPair::identity(nm.carrier()), "untwist_inverse expects a module at (id, id)");
    require(p.carrier() == nm.carrier(), "pair lives on a different Hopf algebra");
    require_passed(check_pair_in_involution(p, pi), "pair in involution");
    const auto& H = *nm.carrier();
    const std::size_t n = H.dim(), d = nm.dim();
    const auto th = MultilinearMap::functional(pi.theta);
    const bool fix = reading == TwistReading::xi_corrected;
    const LinMap pre = fix ? p.beta.matrix() * H.xi().power(2) : p.beta.matrix();
    const LinMap co = fix ? H.xi().power(-2) : LinMap::identity(n);
    const auto action = tabulate({n, d}, {d}, [&](const Tensor& t) {
        return t.apply(H.comult(), {0}).apply(th, {0}).apply(pre, 0).apply(nm.action(), {0, 1});
    });
    const auto coaction = tabulate({d}, {d, n}, [&](const Tensor& t) {
        return outer(t.apply(nm.coaction(), {0}).apply(co, 1), Tensor::from_vector(pi.omega)).apply(H.mult(), {1, 2});
    });
    return YDModule(p, nm.xi(), action, coaction);
}

YDModule shift_functor(const YDModule& m, const HopfAutomorphism& b) {
    require(b.carrier() == m.carrier(), "automorphism lives on a different Hopf algebra");
    const auto binv = b.inverse();
    const std::size_t n = m.carrier()->dim(), d = m.dim();
    AutPair out{m.pair().alpha * binv, m.pair().beta * binv};
    LinMap act = m.action().flat() * kron(binv.matrix(), LinMap::identity(d));
    return YDModule(out, m.xi(), MultilinearMap({n, d}, {d}, act), m.coaction());
}

YDModule shift_inverse(const YDModule& nm, const HopfAutomorphism& b) { return shift_functor(nm, b.inverse()); }

LinMap modular_antipode(const HomHopfAlgebra& h, const Vector& theta) {
    const auto th = MultilinearMap::functional(theta);
    return tabulate({h.dim()}, {h.dim()}, [&](const Tensor& t) {
               return t.apply(h.comult(), {0}).apply(th, {1}).apply(h.antipode(), 0);
           })
        .flat();
}

namespace {

AxiomResult modular_condition(const HomHopfAlgebra& h, const ModularPair& mp, const LinMap& pre, std::string id) {
    const LinMap st = modular_antipode(h, mp.theta);
    const LinMap st2 = st * st;
    const Vector omega_inv = h.antipode().apply(mp.omega);
    return check_identity(
        std::move(id), {h.dim()}, [&](const Tensor& t) { return t.apply(st2, 0); },
        [&](const Tensor& t) { return left_multiply(h, omega_inv, right_multiply(h, t.apply(pre, 0), mp.omega)); });
}

}  // namespace

AxiomReport check_modular_pair(const HomHopfAlgebra& h, const ModularPair& mp) {
    AxiomReport rep = check_theta_omega(h, mp.theta, mp.omega);
    rep.add(check_flag("theta-omega", pair(mp.theta, mp.omega) == 1));
    if (!rep.passed()) return rep;
    rep.add(modular_condition(h, mp, LinMap::identity(h.dim()), "modular-involution"));
    return rep;
}

std::vector<int> modular_pair_xi_powers(const HomHopfAlgebra& h, const ModularPair& mp, int kmax) {
    std::vector<int> ks;
    if (!check_theta_omega(h, mp.theta, mp.omega).passed() || pair(mp.theta, mp.omega) != 1) return ks;
    for (int k = -kmax; k <= kmax; ++k)
        if (modular_condition(h, mp, h.xi().power(k), "xi").passed) ks.push_back(k);
    return ks;
}

YDModule anti_yd_to_yd(const YDModule& m, const ModularPair& mp) {
    const auto& H = *m.carrier();
    require(m.pair() == AutPair{HopfAutomorphism(m.carrier(), H.antipode().power(2)),
                                HopfAutomorphism::identity(m.carrier())},
            "anti_yd_to_yd expects a module at (S^2, id)");
    require_passed(check_yd(m), "anti-YD module");
    require_passed(check_modular_pair(H, mp), "modular pair");
    const std::size_t n = H.dim(), d = m.dim();
    const auto th = MultilinearMap::functional(mp.theta);
    const auto action = tabulate({n, d}, {d}, [&](const Tensor& t) {
        return t.apply(H.comult(), {0}).apply(H.antipode(), 0).apply(th, {0}).apply(m.action(), {0, 1});
    });
    const Vector omega_inv = H.antipode().apply(mp.omega);
    const auto coaction = tabulate({d}, {d, n}, [&](const Tensor& t) {
        return outer(t.apply(m.coaction(), {0}), Tensor::from_vector(omega_inv)).apply(H.mult(), {1, 2});
    });
    return YDModule(AutPair::identity(m.carrier()), m.xi(), action, coaction);
}

Cor49Iso cor49_iso(const AutPair& p, const InvolutivePair& pi, TwistReading reading) {
    require_passed(check_pair_in_involution(p, pi), "pair in involution");
    const auto& H = *p.carrier();
    const std::size_t n = H.dim();
    const auto hp = harpoons(H);
    const auto th = MultilinearMap::functional(pi.theta);
    const Tensor omega = Tensor::from_vector(pi.omega);
    const Tensor omega_inv = Tensor::from_vector(H.antipode().apply(pi.omega));
    const LinMap& binv = p.beta.inverse_matrix();
    const LinMap first = binv * H.antipode();
    const bool fix = reading == TwistReading::xi_corrected;
    const LinMap fpre = fix ? dual_twist_power(H, 1) : LinMap::identity(n);
    const LinMap hpost = fix ? H.xi() : LinMap::identity(n);
    const auto to_twisted = tabulate({n, n}, {n, n}, [&](const Tensor& t) {
        return outer(omega_inv, t.apply(fpre, 0))
            .apply(hp.left, {0, 1})
            .apply(H.comult(), {1})
            .apply(first, 1)
            .apply(th, {1})
            .apply(hpost * binv, 1);
    });
    const auto to_double = tabulate({n, n}, {n, n}, [&](const Tensor& t) {
        return outer(omega, t.apply(fpre, 0))
            .apply(hp.left, {0, 1})
            .apply(H.comult(), {1})
            .apply(th, {1})
            .apply(hpost * p.beta.matrix(), 1);
    });
    return {to_twisted.flat(), to_double.flat()};
}

AxiomReport check_cor49(const DrinfeldDouble& d, const DiagonalCrossedProduct& a, const Cor49Iso& iso) {
    const auto& D = d.hopf->algebra();
    const auto& A = *a.product();
    const std::size_t N = D.dim();
    require(A.dim() == N, "algebras have different dimensions");
    AxiomReport rep;
    const auto morphism = [&](const HomAlgebra& src, const HomAlgebra& dst, const LinMap& f, const std::string& pre) {
        rep.add(check_flag(pre + ".commutes-xi", f * src.xi() == dst.xi() * f));
        rep.add(check_flag(pre + ".unit", f.apply(src.unit()) == dst.unit()));
        rep.add(check_identity(
            pre + ".multiplicative", {N, N}, [&](const Tensor& t) { return t.apply(src.mult(), {0, 1}).apply(f, 0); },
            [&](const Tensor& t) { return t.apply(f, 0).apply(f, 1).apply(dst.mult(), {0, 1}); }));
    };
    morphism(D, A, iso.to_twisted, "to-twisted");
    morphism(A, D, iso.to_double, "to-double");
    rep.add(check_flag("inverse-left", iso.to_double * iso.to_twisted == LinMap::identity(N)));
    rep.add(check_flag("inverse-right", iso.to_twisted * iso.to_double == LinMap::identity(N)));
    return rep;
}

}  // namespace homhopf
