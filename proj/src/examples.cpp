#include "homhopf/examples.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

namespace homhopf {

namespace {

enum { ONE = 0, G = 1, X = 2, Y = 3 };

std::size_t mod(long long a, long long n) { return static_cast<std::size_t>(((a % n) + n) % n); }

// Sweedler product on basis pairs as (coefficient, index); coefficient 0 means zero.
std::pair<int, int> sweedler_product(int a, int b) {
    static const std::pair<int, int> table[4][4] = {
        {{1, ONE}, {1, G}, {1, X}, {1, Y}},
        {{1, G}, {1, ONE}, {1, Y}, {1, X}},
        {{1, X}, {-1, Y}, {0, 0}, {0, 0}},
        {{1, Y}, {-1, X}, {0, 0}, {0, 0}},
    };
    return table[a][b];
}

HomHopfAlgebra sweedler_like(const Scalar& c, const LinMap& antipode) {
    if (c == 0) throw InputError("H4 parameter c must be nonzero");
    const Scalar twist[4] = {1, 1, c, c};
    LinMap m(4, 16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto [coef, k] = sweedler_product(a, b);
            if (coef) m.at(k, a * 4 + b) = Scalar(coef) * twist[k];
        }
    const Scalar ci = 1 / c;
    LinMap d(16, 4);
    d.at(ONE * 4 + ONE, ONE) = 1;
    d.at(G * 4 + G, G) = 1;
    d.at(X * 4 + ONE, X) = ci;
    d.at(G * 4 + X, X) = ci;
    d.at(Y * 4 + G, Y) = ci;
    d.at(ONE * 4 + Y, Y) = ci;
    const LinMap xi = LinMap::diagonal({1, 1, c, c});
    return HomHopfAlgebra(HomAlgebra(xi, MultilinearMap({4, 4}, {4}, m), basis_vector(4, ONE)),
                          HomCoalgebra(xi, MultilinearMap({4}, {4, 4}, d), Vector{1, 1, 0, 0}), antipode,
                          {"1", "g", "x", "gx"});
}

LinMap h4_antipode(int sign_of_s_y) {
    LinMap s(4, 4);
    s.at(ONE, ONE) = 1;
    s.at(G, G) = 1;
    s.at(Y, X) = -1;
    s.at(X, Y) = sign_of_s_y;
    return s;
}

std::vector<std::string> cyclic_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a^" + std::to_string(i));
    return names;
}

HomHopfAlgebra cyclic_group_algebra(int n) {
    const std::size_t N = static_cast<std::size_t>(n);
    LinMap m(N, N * N), d(N * N, N), s(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) m.at((i + j) % N, i * N + j) = 1;
        d.at(i * N + i, i) = 1;
        s.at(mod(-static_cast<long long>(i), n), i) = 1;
    }
    const LinMap id = LinMap::identity(N);
    return HomHopfAlgebra(HomAlgebra(id, MultilinearMap({N, N}, {N}, m), basis_vector(N, 0)),
                          HomCoalgebra(id, MultilinearMap({N}, {N, N}, d), Vector(N, Scalar(1))), s,
                          cyclic_names(n));
}

LinMap sigma(int n, int t) {
    const std::size_t N = static_cast<std::size_t>(n);
    LinMap p(N, N);
    for (std::size_t i = 0; i < N; ++i) p.at(mod(static_cast<long long>(i) * t, n), i) = 1;
    return p;
}

Scalar param(const ExampleSpec& spec, const std::string& key) {
    auto it = spec.parameters.find(key);
    if (it == spec.parameters.end()) throw InputError("missing parameter '" + key + "'");
    return it->second;
}

int int_param(const ExampleSpec& spec, const std::string& key) {
    const Scalar v = param(spec, key);
    if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw InputError("parameter '" + key + "' must be an integer");
    return static_cast<int>(v.get_num().get_si());
}

}  // namespace

HomHopfAlgebra build_sweedler() { return sweedler_like(1, h4_antipode(1)); }

HomHopfAlgebra build_h4(const Scalar& c) { return sweedler_like(c, h4_antipode(1)); }

LinMap h4_sign_flipped_antipode() { return h4_antipode(-1); }

HomHopfAlgebra build_cyclic_twist(int n, int t) {
    if (n < 2) throw InputError("cyclic order must be at least 2");
    if (std::gcd(t, n) != 1) throw InputError("twist exponent must be coprime to the order");
    return yau_twist(cyclic_group_algebra(n), sigma(n, t));
}

LiteralBuild build_cyclic_literal(int n) {
    if (n < 2) throw InputError("cyclic order must be at least 2");
    const std::size_t N = static_cast<std::size_t>(n);
    LinMap m(N, N * N), d(N * N, N), s(N, N), xi(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        const long long ii = static_cast<long long>(i);
        for (std::size_t j = 0; j < N; ++j) m.at(mod(ii + static_cast<long long>(j) - 2, n), i * N + j) = 1;
        const std::size_t k = mod(ii - 2, n);
        d.at(k * N + k, i) = 1;
        s.at(mod(-ii, n), i) = 1;
        xi.at(mod(ii + 2, n), i) = 1;
    }
    HomHopfAlgebra h(HomAlgebra(xi, MultilinearMap({N, N}, {N}, m), basis_vector(N, 0)),
                     HomCoalgebra(xi, MultilinearMap({N}, {N, N}, d), Vector(N, Scalar(1))), s, cyclic_names(n));
    AxiomReport rep = check_hom_hopf(h);
    return {std::move(h), std::move(rep)};
}

HopfAutomorphism h4_automorphism(const HopfPtr& h4, const Scalar& lambda) {
    if (lambda == 0) throw InputError("automorphism parameter must be nonzero");
    return HopfAutomorphism(h4, LinMap::diagonal({1, 1, lambda, lambda}));
}

HopfAutomorphism cyclic_automorphism(const HopfPtr& cyclic, int t) {
    return HopfAutomorphism(cyclic, sigma(static_cast<int>(cyclic->dim()), t));
}

std::vector<std::string> example_names() { return {"h4", "cyclic-twist", "cyclic-literal", "sweedler"}; }

namespace {

void allow_only(const ExampleSpec& spec, std::initializer_list<std::string_view> keys) {
    for (const auto& [k, v] : spec.parameters)
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw InputError("example '" + spec.name + "' has no parameter '" + k + "'");
}

}  // namespace

ExampleBuild build_example(ExampleSpec spec) {
    auto& p = spec.parameters;
    if (spec.name == "h4") {
        allow_only(spec, {"c"});
        p.try_emplace("c", Scalar(1));
        spec.notes = "Sweedler algebra twisted by x -> c x, gx -> c gx";
        HomHopfAlgebra h = build_h4(param(spec, "c"));
        AxiomReport rep = check_hom_hopf(h);
        return {std::move(spec), std::move(h), std::move(rep)};
    }
    if (spec.name == "sweedler") {
        allow_only(spec, {});
        spec.notes = "classical four-dimensional Sweedler Hopf algebra";
        HomHopfAlgebra h = build_sweedler();
        AxiomReport rep = check_hom_hopf(h);
        return {std::move(spec), std::move(h), std::move(rep)};
    }
    if (spec.name == "cyclic-twist") {
        allow_only(spec, {"n", "t"});
        p.try_emplace("n", Scalar(5));
        p.try_emplace("t", Scalar(2));
        spec.notes = "group algebra of Z_n twisted by a -> a^t";
        HomHopfAlgebra h = build_cyclic_twist(int_param(spec, "n"), int_param(spec, "t"));
        AxiomReport rep = check_hom_hopf(h);
        return {std::move(spec), std::move(h), std::move(rep)};
    }
    if (spec.name == "cyclic-literal") {
        allow_only(spec, {"n"});
        p.try_emplace("n", Scalar(5));
        spec.notes = "cyclic tables shifted by a^-2; fails the Hom-Hopf axioms for n > 2";
        auto lit = build_cyclic_literal(int_param(spec, "n"));
        return {std::move(spec), std::move(lit.algebra), std::move(lit.report)};
    }
    throw InputError("unknown example '" + spec.name + "'");
}

}  // namespace homhopf
