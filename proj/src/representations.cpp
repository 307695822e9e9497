#include "homhopf/representations.hpp"

namespace homhopf {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

using Dims = std::vector<std::size_t>;

}  // namespace

HomModule::HomModule(AlgebraPtr algebra, LinMap xi, MultilinearMap action)
    : alg_(std::move(algebra)), xi_(std::move(xi)), act_(std::move(action)) {
    require(alg_ != nullptr, "module without algebra");
    require(xi_.square(), "module twist must be square");
    const std::size_t n = xi_.domain_dim();
    require(act_.in_dims() == Dims{alg_->dim(), n} && act_.out_dims() == Dims{n}, "action has wrong shape");
    xi_inv_ = xi_.inverse();
}

HomComodule::HomComodule(CoalgebraPtr coalgebra, LinMap xi, MultilinearMap coaction)
    : coalg_(std::move(coalgebra)), xi_(std::move(xi)), coact_(std::move(coaction)) {
    require(coalg_ != nullptr, "comodule without coalgebra");
    require(xi_.square(), "comodule twist must be square");
    const std::size_t n = xi_.domain_dim();
    require(coact_.in_dims() == Dims{n} && coact_.out_dims() == Dims{n, coalg_->dim()}, "coaction has wrong shape");
    xi_inv_ = xi_.inverse();
}

BicomoduleAlgebra::BicomoduleAlgebra(AlgebraPtr algebra, HopfPtr hopf, MultilinearMap left_coaction,
                                     MultilinearMap right_coaction)
    : alg_(std::move(algebra)), hopf_(std::move(hopf)), left_(std::move(left_coaction)), right_(std::move(right_coaction)) {
    require(alg_ && hopf_, "bicomodule algebra needs an algebra and a Hopf algebra");
    const std::size_t n = alg_->dim(), h = hopf_->dim();
    require(left_.in_dims() == Dims{n} && left_.out_dims() == Dims{h, n}, "left coaction has wrong shape");
    require(right_.in_dims() == Dims{n} && right_.out_dims() == Dims{n, h}, "right coaction has wrong shape");
}

AxiomReport check_module(const HomModule& mod) {
    AxiomReport rep;
    const auto& A = *mod.algebra();
    const std::size_t na = A.dim(), n = mod.dim();
    const auto& act = mod.action();
    const Tensor one = Tensor::from_vector(A.unit());
    rep.add(check_identity(
        "hom-associativity", {na, na, n},
        [&](const Tensor& t) { return t.apply(A.xi(), 0).apply(act, {1, 2}).apply(act, {0, 1}); },
        [&](const Tensor& t) { return t.apply(A.mult(), {0, 1}).apply(mod.xi(), 1).apply(act, {0, 1}); }));
    rep.add(check_identity(
        "xi-compatible", {na, n}, [&](const Tensor& t) { return t.apply(act, {0, 1}).apply(mod.xi(), 0); },
        [&](const Tensor& t) { return t.apply(A.xi(), 0).apply(mod.xi(), 1).apply(act, {0, 1}); }));
    rep.add(check_identity(
        "unit", {n}, [&](const Tensor& t) { return outer(one, t).apply(act, {0, 1}); },
        [&](const Tensor& t) { return t.apply(mod.xi(), 0); }));
    return rep;
}

AxiomReport check_comodule(const HomComodule& com) {
    AxiomReport rep;
    const auto& C = *com.coalgebra();
    const std::size_t n = com.dim();
    const auto& rho = com.coaction();
    rep.add(check_identity(
        "hom-coassociativity", {n},
        [&](const Tensor& t) { return t.apply(rho, {0}).apply(com.xi_inv(), 0).apply(C.comult(), {1}); },
        [&](const Tensor& t) { return t.apply(rho, {0}).apply(rho, {0}).apply(C.xi_inv(), 2); }));
    rep.add(check_identity(
        "xi-compatible", {n}, [&](const Tensor& t) { return t.apply(com.xi(), 0).apply(rho, {0}); },
        [&](const Tensor& t) { return t.apply(rho, {0}).apply(com.xi(), 0).apply(C.xi(), 1); }));
    rep.add(check_identity(
        "counit", {n}, [&](const Tensor& t) { return t.apply(rho, {0}).apply(C.counit_map(), {1}); },
        [&](const Tensor& t) { return t.apply(com.xi_inv(), 0); }));
    return rep;
}

AxiomReport check_bimodule(const Bimodule& b) {
    AxiomReport rep;
    rep.merge(check_module(HomModule(b.algebra, b.xi, b.left)), "left");
    const auto& A = *b.algebra;
    const std::size_t na = A.dim(), n = b.xi.domain_dim();
    require(b.right.in_dims() == Dims{n, na} && b.right.out_dims() == Dims{n}, "right action has wrong shape");
    const auto& r = b.right;
    const Tensor one = Tensor::from_vector(A.unit());
    rep.add(check_identity(
        "right.hom-associativity", {n, na, na},
        [&](const Tensor& t) { return t.apply(r, {0, 1}).apply(A.xi(), 1).apply(r, {0, 1}); },
        [&](const Tensor& t) { return t.apply(b.xi, 0).apply(A.mult(), {1, 2}).apply(r, {0, 1}); }));
    rep.add(check_identity(
        "right.xi-compatible", {n, na}, [&](const Tensor& t) { return t.apply(r, {0, 1}).apply(b.xi, 0); },
        [&](const Tensor& t) { return t.apply(b.xi, 0).apply(A.xi(), 1).apply(r, {0, 1}); }));
    rep.add(check_identity(
        "right.unit", {n}, [&](const Tensor& t) { return outer(t, one).apply(r, {0, 1}); },
        [&](const Tensor& t) { return t.apply(b.xi, 0); }));
    // xi(a).(m.a') = (a.m).xi(a')
    rep.add(check_identity(
        "compatibility", {na, n, na},
        [&](const Tensor& t) { return t.apply(A.xi(), 0).apply(r, {1, 2}).apply(b.left, {0, 1}); },
        [&](const Tensor& t) { return t.apply(b.left, {0, 1}).apply(A.xi(), 1).apply(r, {0, 1}); }));
    return rep;
}

AxiomReport check_bicomodule_algebra(const BicomoduleAlgebra& ba) {
    AxiomReport rep;
    const auto& A = *ba.algebra();
    const auto& H = *ba.hopf();
    const std::size_t n = A.dim();
    const auto& rl = ba.left_coaction();
    const auto& rr = ba.right_coaction();
    const Tensor one = Tensor::from_vector(A.unit());
    const Tensor hone = Tensor::from_vector(H.unit());

    // Left comodule axioms, mirrored from the right-handed ones.
    rep.add(check_identity(
        "left.hom-coassociativity", {n},
        [&](const Tensor& t) { return t.apply(rl, {0}).apply(H.comult(), {0}).apply(A.xi_inv(), 2); },
        [&](const Tensor& t) { return t.apply(rl, {0}).apply(H.xi_inv(), 0).apply(rl, {1}); }));
    rep.add(check_identity(
        "left.xi-compatible", {n}, [&](const Tensor& t) { return t.apply(A.xi(), 0).apply(rl, {0}); },
        [&](const Tensor& t) { return t.apply(rl, {0}).apply(H.xi(), 0).apply(A.xi(), 1); }));
    rep.add(check_identity(
        "left.counit", {n}, [&](const Tensor& t) { return t.apply(rl, {0}).apply(H.counit_map(), {0}); },
        [&](const Tensor& t) { return t.apply(A.xi_inv(), 0); }));
    rep.add(check_identity(
        "left.multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(A.mult(), {0, 1}).apply(rl, {0}); },
        [&](const Tensor& t) {
            return t.apply(rl, {0}).apply(rl, {2}).apply(H.mult(), {0, 2}).apply(A.mult(), {1, 2});
        }));
    rep.add(check_identity(
        "left.unit", {}, [&](const Tensor&) { return one.apply(rl, {0}); },
        [&](const Tensor&) { return outer(hone, one); }));

    rep.merge(check_comodule(HomComodule(coalgebra_of(ba.hopf()), A.xi(), rr)), "right");
    rep.add(check_identity(
        "right.multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(A.mult(), {0, 1}).apply(rr, {0}); },
        [&](const Tensor& t) {
            return t.apply(rr, {0}).apply(rr, {2}).apply(A.mult(), {0, 2}).apply(H.mult(), {1, 2});
        }));
    rep.add(check_identity(
        "right.unit", {}, [&](const Tensor&) { return one.apply(rr, {0}); },
        [&](const Tensor&) { return outer(one, hone); }));

    rep.add(check_identity(
        "compatibility", {n},
        [&](const Tensor& t) { return t.apply(rr, {0}).apply(rl, {0}).apply(H.xi_inv(), 2); },
        [&](const Tensor& t) { return t.apply(rl, {0}).apply(H.xi_inv(), 0).apply(rr, {1}); }));
    return rep;
}

HomModule regular_module(const AlgebraPtr& a) { return HomModule(a, a->xi(), a->mult()); }

HomComodule regular_comodule(const CoalgebraPtr& c) { return HomComodule(c, c->xi(), c->comult()); }

HomModule restrict_along(const HomModule& m, const LinMap& phi) {
    const std::size_t na = m.algebra()->dim(), n = m.dim();
    LinMap flat = m.action().flat() * kron(phi, LinMap::identity(n));
    return HomModule(m.algebra(), m.xi(), MultilinearMap({na, n}, {n}, flat));
}

BicomoduleAlgebra regular_bicomodule_algebra(const HopfPtr& h) {
    return BicomoduleAlgebra(algebra_of(h), h, h->comult(), h->comult());
}

BicomoduleAlgebra twisted_bicomodule_algebra(const HopfPtr& h, const LinMap& alpha, const LinMap& beta) {
    const std::size_t n = h->dim();
    const LinMap id = LinMap::identity(n);
    MultilinearMap left({n}, {n, n}, kron(alpha, id) * h->comult().flat());
    MultilinearMap right({n}, {n, n}, kron(id, beta) * h->comult().flat());
    return BicomoduleAlgebra(algebra_of(h), h, left, right);
}

}  // namespace homhopf
