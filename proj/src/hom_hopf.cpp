#include "homhopf/hom_hopf.hpp"

namespace homhopf {

namespace {

LinMap checked_inverse(const LinMap& m, const char* what) {
    auto inv = m.try_inverse();
    if (!inv) throw InputError(std::string(what) + " is not invertible");
    return *inv;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

// Permutation matrix of V (x) W -> W (x) V.
LinMap flip_matrix(std::size_t n, std::size_t m) {
    LinMap p(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) p.at(j * n + i, i * m + j) = 1;
    return p;
}

}  // namespace

HomAlgebra::HomAlgebra(LinMap xi, MultilinearMap mult, Vector unit)
    : xi_(std::move(xi)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t n = xi_.domain_dim();
    require(xi_.square(), "algebra twist must be square");
    require(mult_.in_dims() == std::vector<std::size_t>{n, n} && mult_.out_dims() == std::vector<std::size_t>{n},
            "multiplication shape does not match dimension " + std::to_string(n));
    require(unit_.size() == n, "unit has wrong dimension");
    xi_inv_ = checked_inverse(xi_, "algebra twist");
}

Vector HomAlgebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t n = dim();
    require(a.size() == n && b.size() == n, "multiply: dimension mismatch");
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const Scalar c = a[i] * b[j];
            for (const auto& [k, v] : mult_.column(i * n + j)) r[k] += c * v;
        }
    }
    return r;
}

HomCoalgebra::HomCoalgebra(LinMap xi, MultilinearMap comult, Vector counit)
    : xi_(std::move(xi)), comult_(std::move(comult)), counit_(std::move(counit)) {
    const std::size_t n = xi_.domain_dim();
    require(xi_.square(), "coalgebra twist must be square");
    require(comult_.in_dims() == std::vector<std::size_t>{n} && comult_.out_dims() == std::vector<std::size_t>{n, n},
            "comultiplication shape does not match dimension " + std::to_string(n));
    require(counit_.size() == n, "counit has wrong dimension");
    xi_inv_ = checked_inverse(xi_, "coalgebra twist");
    counit_map_ = MultilinearMap::functional(counit_);
}

HomHopfAlgebra::HomHopfAlgebra(HomAlgebra algebra, HomCoalgebra coalgebra, LinMap antipode,
                               std::vector<std::string> basis_names)
    : alg_(std::move(algebra)), coalg_(std::move(coalgebra)), s_(std::move(antipode)), names_(std::move(basis_names)) {
    require(alg_.dim() == coalg_.dim(), "algebra and coalgebra dimensions differ");
    require(alg_.xi() == coalg_.xi(), "algebra and coalgebra twists differ");
    require(s_.square() && s_.domain_dim() == alg_.dim(), "antipode has wrong shape");
    s_inv_ = checked_inverse(s_, "antipode");
    if (names_.empty())
        for (std::size_t i = 0; i < alg_.dim(); ++i) names_.push_back("e" + std::to_string(i));
    require(names_.size() == alg_.dim(), "basis name count does not match dimension");
}

HopfPtr share(HomHopfAlgebra h) { return std::make_shared<const HomHopfAlgebra>(std::move(h)); }
AlgebraPtr share(HomAlgebra a) { return std::make_shared<const HomAlgebra>(std::move(a)); }
AlgebraPtr algebra_of(const HopfPtr& h) { return AlgebraPtr(h, &h->algebra()); }
CoalgebraPtr coalgebra_of(const HopfPtr& h) { return CoalgebraPtr(h, &h->coalgebra()); }

AxiomReport check_hom_algebra(const HomAlgebra& a) {
    AxiomReport rep;
    const std::size_t n = a.dim();
    const auto& m = a.mult();
    const auto& xi = a.xi();
    const Tensor one = Tensor::from_vector(a.unit());
    rep.add(check_identity(
        "xi-multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(xi, 0); },
        [&](const Tensor& t) { return t.apply(xi, 0).apply(xi, 1).apply(m, {0, 1}); }));
    rep.add(check_identity(
        "xi-unit", {}, [&](const Tensor&) { return one.apply(xi, 0); }, [&](const Tensor&) { return one; }));
    rep.add(check_identity(
        "hom-associativity", {n, n, n},
        [&](const Tensor& t) { return t.apply(xi, 0).apply(m, {1, 2}).apply(m, {0, 1}); },
        [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(xi, 1).apply(m, {0, 1}); }));
    rep.add(check_identity(
        "twisted-unit-right", {n}, [&](const Tensor& t) { return outer(t, one).apply(m, {0, 1}); },
        [&](const Tensor& t) { return t.apply(xi, 0); }));
    rep.add(check_identity(
        "twisted-unit-left", {n}, [&](const Tensor& t) { return outer(one, t).apply(m, {0, 1}); },
        [&](const Tensor& t) { return t.apply(xi, 0); }));
    return rep;
}

AxiomReport check_hom_coalgebra(const HomCoalgebra& c) {
    AxiomReport rep;
    const std::size_t n = c.dim();
    const auto& d = c.comult();
    const auto& e = c.counit_map();
    const auto& xi = c.xi();
    const auto& xinv = c.xi_inv();
    rep.add(check_identity(
        "xi-comultiplicative", {n}, [&](const Tensor& t) { return t.apply(xi, 0).apply(d, {0}); },
        [&](const Tensor& t) { return t.apply(d, {0}).apply(xi, 0).apply(xi, 1); }));
    rep.add(check_identity(
        "counit-xi", {n}, [&](const Tensor& t) { return t.apply(xi, 0).apply(e, {0}); },
        [&](const Tensor& t) { return t.apply(e, {0}); }));
    // xi^-1(c1) (x) Delta(c2) = Delta(c1) (x) xi^-1(c2)
    rep.add(check_identity(
        "hom-coassociativity", {n},
        [&](const Tensor& t) { return t.apply(d, {0}).apply(xinv, 0).apply(d, {1}); },
        [&](const Tensor& t) { return t.apply(d, {0}).apply(xinv, 1).apply(d, {0}); }));
    // c1 (x) c21 (x) xi(c22) = xi(c11) (x) c12 (x) c2
    rep.add(check_identity(
        "hom-coassociativity-alt", {n},
        [&](const Tensor& t) { return t.apply(d, {0}).apply(d, {1}).apply(xi, 2); },
        [&](const Tensor& t) { return t.apply(d, {0}).apply(d, {0}).apply(xi, 0); }));
    rep.add(check_identity(
        "counit-right", {n}, [&](const Tensor& t) { return t.apply(d, {0}).apply(e, {1}); },
        [&](const Tensor& t) { return t.apply(xinv, 0); }));
    rep.add(check_identity(
        "counit-left", {n}, [&](const Tensor& t) { return t.apply(d, {0}).apply(e, {0}); },
        [&](const Tensor& t) { return t.apply(xinv, 0); }));
    return rep;
}

AxiomReport check_hom_hopf(const HomHopfAlgebra& h) {
    AxiomReport rep;
    rep.merge(check_hom_algebra(h.algebra()), "algebra");
    rep.merge(check_hom_coalgebra(h.coalgebra()), "coalgebra");
    const std::size_t n = h.dim();
    const auto& m = h.mult();
    const auto& d = h.comult();
    const auto& e = h.counit_map();
    const auto& s = h.antipode();
    const auto& xi = h.xi();
    const Tensor one = Tensor::from_vector(h.unit());
    auto eps_one = [&](const Tensor& t) { return outer(t.apply(e, {0}), one); };

    rep.add(check_identity(
        "comult-multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(d, {0}); },
        [&](const Tensor& t) {
            return t.apply(d, {0}).apply(d, {2}).apply(m, {0, 2}).apply(m, {1, 2});
        }));
    rep.add(check_identity(
        "comult-unit", {}, [&](const Tensor&) { return one.apply(d, {0}); },
        [&](const Tensor&) { return outer(one, one); }));
    rep.add(check_identity(
        "counit-multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(e, {0}); },
        [&](const Tensor& t) { return t.apply(e, {0}).apply(e, {0}); }));
    rep.add(check_identity(
        "counit-unit", {}, [&](const Tensor&) { return one.apply(e, {0}); },
        [&](const Tensor&) { return Tensor::scalar(1); }));
    rep.add(check_identity(
        "antipode-left", {n}, [&](const Tensor& t) { return t.apply(d, {0}).apply(s, 0).apply(m, {0, 1}); },
        eps_one));
    rep.add(check_identity(
        "antipode-right", {n}, [&](const Tensor& t) { return t.apply(d, {0}).apply(s, 1).apply(m, {0, 1}); },
        eps_one));
    rep.add(check_identity(
        "antipode-anti-multiplicative", {n, n},
        [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(s, 0); },
        [&](const Tensor& t) { return t.apply(s, 0).apply(s, 1).apply(m, {1, 0}); }));
    rep.add(check_identity(
        "antipode-unit", {}, [&](const Tensor&) { return one.apply(s, 0); }, [&](const Tensor&) { return one; }));
    rep.add(check_identity(
        "antipode-anti-comultiplicative", {n}, [&](const Tensor& t) { return t.apply(s, 0).apply(d, {0}); },
        [&](const Tensor& t) { return t.apply(d, {0}).apply(s, 0).apply(s, 1).swap(0, 1); }));
    rep.add(check_identity(
        "counit-antipode", {n}, [&](const Tensor& t) { return t.apply(s, 0).apply(e, {0}); },
        [&](const Tensor& t) { return t.apply(e, {0}); }));
    rep.add(check_identity(
        "antipode-xi", {n}, [&](const Tensor& t) { return t.apply(xi, 0).apply(s, 0); },
        [&](const Tensor& t) { return t.apply(s, 0).apply(xi, 0); }));
    return rep;
}

AxiomReport verify_automorphism(const HomHopfAlgebra& h, const LinMap& phi) {
    AxiomReport rep;
    const std::size_t n = h.dim();
    if (!phi.square() || phi.domain_dim() != n) throw InputError("automorphism has wrong shape");
    rep.add(check_flag("invertible", phi.try_inverse().has_value()));
    const auto& m = h.mult();
    const auto& d = h.comult();
    const auto& e = h.counit_map();
    const Tensor one = Tensor::from_vector(h.unit());
    rep.add(check_identity(
        "commutes-xi", {n}, [&](const Tensor& t) { return t.apply(h.xi(), 0).apply(phi, 0); },
        [&](const Tensor& t) { return t.apply(phi, 0).apply(h.xi(), 0); }));
    rep.add(check_identity(
        "multiplicative", {n, n}, [&](const Tensor& t) { return t.apply(m, {0, 1}).apply(phi, 0); },
        [&](const Tensor& t) { return t.apply(phi, 0).apply(phi, 1).apply(m, {0, 1}); }));
    rep.add(check_identity(
        "unit", {}, [&](const Tensor&) { return one.apply(phi, 0); }, [&](const Tensor&) { return one; }));
    rep.add(check_identity(
        "comultiplicative", {n}, [&](const Tensor& t) { return t.apply(phi, 0).apply(d, {0}); },
        [&](const Tensor& t) { return t.apply(d, {0}).apply(phi, 0).apply(phi, 1); }));
    rep.add(check_identity(
        "counit", {n}, [&](const Tensor& t) { return t.apply(phi, 0).apply(e, {0}); },
        [&](const Tensor& t) { return t.apply(e, {0}); }));
    rep.add(check_identity(
        "commutes-antipode", {n}, [&](const Tensor& t) { return t.apply(h.antipode(), 0).apply(phi, 0); },
        [&](const Tensor& t) { return t.apply(phi, 0).apply(h.antipode(), 0); }));
    return rep;
}

HopfAutomorphism::HopfAutomorphism(HopfPtr carrier, LinMap matrix) : carrier_(std::move(carrier)), m_(std::move(matrix)) {
    if (!carrier_) throw InputError("automorphism without carrier");
    const auto rep = verify_automorphism(*carrier_, m_);
    if (!rep.passed()) throw InputError("not a Hopf automorphism: fails " + rep.failed_ids().front());
    inv_ = m_.inverse();
}

HopfAutomorphism::HopfAutomorphism(HopfPtr carrier, LinMap matrix, LinMap inverse, Trusted)
    : carrier_(std::move(carrier)), m_(std::move(matrix)), inv_(std::move(inverse)) {}

HopfAutomorphism HopfAutomorphism::identity(HopfPtr carrier) {
    const std::size_t n = carrier->dim();
    return HopfAutomorphism(std::move(carrier), LinMap::identity(n), LinMap::identity(n), Trusted{});
}

HopfAutomorphism HopfAutomorphism::inverse() const { return HopfAutomorphism(carrier_, inv_, m_, Trusted{}); }

HopfAutomorphism operator*(const HopfAutomorphism& a, const HopfAutomorphism& b) {
    if (a.carrier_ != b.carrier_) throw InputError("automorphisms of different carriers");
    return HopfAutomorphism(a.carrier_, a.m_ * b.m_, b.inv_ * a.inv_, HopfAutomorphism::Trusted{});
}

bool is_group_like(const HomHopfAlgebra& h, const Vector& g) {
    if (g.size() != h.dim()) return false;
    if (h.xi().apply(g) != g) return false;
    if (pair(h.counit(), g) != 1) return false;
    const Tensor t = Tensor::from_vector(g);
    return t.apply(h.comult(), {0}) == outer(t, t);
}

std::vector<Vector> find_group_likes(const HomHopfAlgebra& h, const std::vector<Vector>& candidates) {
    std::vector<Vector> pool = candidates;
    if (pool.empty()) {
        const std::size_t n = h.dim();
        const Scalar signs[2] = {1, -1};
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& a : signs) {
                Vector v(n);
                v[i] = a;
                pool.push_back(v);
                for (std::size_t j = i + 1; j < n; ++j)
                    for (const auto& b : signs) {
                        Vector w = v;
                        w[j] = b;
                        pool.push_back(w);
                    }
            }
    }
    std::vector<Vector> found;
    for (const auto& v : pool)
        if (is_group_like(h, v)) found.push_back(v);
    return found;
}

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinMap& phi) {
    if (!classical.xi().is_identity()) throw InputError("yau_twist expects a classical Hopf algebra (xi = id)");
    const auto classical_rep = check_hom_hopf(classical);
    if (!classical_rep.passed())
        throw InputError("yau_twist input is not a Hopf algebra: fails " + classical_rep.failed_ids().front());
    const auto aut = verify_automorphism(classical, phi);
    if (!aut.passed()) throw InputError("yau_twist map is not a Hopf automorphism: fails " + aut.failed_ids().front());
    const std::size_t n = classical.dim();
    const LinMap phi_inv = phi.inverse();
    MultilinearMap mult({n, n}, {n}, phi * classical.mult().flat());
    MultilinearMap comult({n}, {n, n}, kron(phi_inv, phi_inv) * classical.comult().flat());
    return HomHopfAlgebra(HomAlgebra(phi, mult, classical.unit()), HomCoalgebra(phi, comult, classical.counit()),
                          classical.antipode(), classical.basis_names());
}

HomHopfAlgebra dual_hopf(const HomHopfAlgebra& h) {
    const std::size_t n = h.dim();
    const LinMap xi = dualize(h.xi()).inverse();
    MultilinearMap mult({n, n}, {n}, h.comult().flat().transpose());
    MultilinearMap comult({n}, {n, n}, h.mult().flat().transpose());
    std::vector<std::string> names;
    for (const auto& s : h.basis_names()) names.push_back(s + "*");
    return HomHopfAlgebra(HomAlgebra(xi, mult, h.counit()), HomCoalgebra(xi, comult, h.unit()), dualize(h.antipode()),
                          names);
}

HomHopfAlgebra co_opposite(const HomHopfAlgebra& h) {
    const std::size_t n = h.dim();
    MultilinearMap comult({n}, {n, n}, flip_matrix(n, n) * h.comult().flat());
    return HomHopfAlgebra(h.algebra(), HomCoalgebra(h.xi(), comult, h.counit()), h.antipode_inv(), h.basis_names());
}

}  // namespace homhopf
