#include "support.hpp"

#include <random>

using namespace hhtest;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

LinMap random_map(std::mt19937& rng, std::size_t r, std::size_t c) {
    LinMap f(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) f.at(i, j) = random_scalar(rng);
    return f;
}

}  // namespace

TEST(Scalar, ParsesToLowestTerms) {
    EXPECT_EQ(format_scalar(parse_scalar("6/4")), "3/2");
    EXPECT_EQ(format_scalar(parse_scalar("-10/5")), "-2");
    EXPECT_EQ(format_scalar(parse_scalar(" 7 ")), "7");
    EXPECT_EQ(format_scalar(parse_scalar("0/9")), "0");
    EXPECT_EQ(parse_scalar("-3/6").get_den(), 2);
}

TEST(Scalar, RejectsMalformedText) {
    EXPECT_THROW(parse_scalar("1/0"), InputError);
    EXPECT_THROW(parse_scalar("1.5"), InputError);
    EXPECT_THROW(parse_scalar("3/-4"), InputError);
    EXPECT_THROW(parse_scalar(""), InputError);
    EXPECT_THROW(parse_scalar("x"), InputError);
}

TEST(Scalar, FieldAxiomsOnRandomSamples) {
    std::mt19937 rng(7);
    for (int k = 0; k < 500; ++k) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (a != 0) {
            EXPECT_EQ(a * (1 / a), 1);
        }
        EXPECT_EQ(a - a, 0);
    }
}

TEST(LinMap, TensorOfIdentitiesIsIdentity) {
    const auto t = tensor(LinMap::identity(2), LinMap::identity(3));
    EXPECT_EQ(t.in_dims(), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(t.out_dims(), (std::vector<std::size_t>{2, 3}));
    EXPECT_TRUE(t.flat().is_identity());
}

TEST(LinMap, TensorOfTwistsScalesXTensorX) {
    // xi = diag(1, 1, c, c) at c = 2, so xi (x) xi sends x (x) x to 4 x (x) x.
    const auto h = build_h4(2);
    const auto t = tensor(h.xi(), h.xi());
    const Tensor xx = Tensor::basis({4, 4}, {X, X});
    const Tensor out = xx.apply(t, {0, 1});
    EXPECT_EQ(out, Scalar(4) * xx);
}

TEST(LinMap, TensorEntriesAreProducts) {
    LinMap f(1, 1), g(1, 1);
    f.at(0, 0) = 3;
    g.at(0, 0) = Scalar(5, 2);
    EXPECT_EQ(tensor(f, g).flat().at(0, 0), Scalar(15, 2));

    std::mt19937 rng(11);
    const LinMap a = random_map(rng, 2, 3), b = random_map(rng, 3, 2);
    const LinMap k = kron(a, b);
    for (std::size_t r1 = 0; r1 < 2; ++r1)
        for (std::size_t c1 = 0; c1 < 3; ++c1)
            for (std::size_t r2 = 0; r2 < 3; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    EXPECT_EQ(k.at(r1 * 3 + r2, c1 * 2 + c2), a.at(r1, c1) * b.at(r2, c2));
}

TEST(LinMap, TensorIsAssociativeAfterFlattening) {
    std::mt19937 rng(3);
    const LinMap f = random_map(rng, 2, 2), g = random_map(rng, 3, 2), h = random_map(rng, 2, 3);
    const auto left = tensor(tensor(MultilinearMap::from_linmap(f), MultilinearMap::from_linmap(g)),
                             MultilinearMap::from_linmap(h));
    const auto right = tensor(MultilinearMap::from_linmap(f),
                              tensor(MultilinearMap::from_linmap(g), MultilinearMap::from_linmap(h)));
    EXPECT_EQ(left.flat(), right.flat());
    EXPECT_EQ(left.in_dims(), right.in_dims());
}

TEST(LinMap, DualizeIsAnInvolutiveAntiHomomorphism) {
    std::mt19937 rng(5);
    const LinMap f = random_map(rng, 3, 4), g = random_map(rng, 4, 2);
    EXPECT_EQ(dualize(LinMap::identity(4)), LinMap::identity(4));
    EXPECT_EQ(dualize(f * g), dualize(g) * dualize(f));
    EXPECT_EQ(dualize(dualize(f)), f);
}

TEST(LinMap, InverseDualTwistOnXStar) {
    // xi(x) = 2x, so (x* o xi^-1)(x) = 1/2.
    const auto h = build_h4(2);
    const Vector xstar = basis_vector(4, X);
    EXPECT_EQ(dualize(h.xi()).inverse().apply(xstar), scale(Scalar(1, 2), xstar));
}

TEST(LinMap, InverseRankAndPowers) {
    const LinMap a = LinMap::from_rows({q({2, 1}), q({1, 1})});
    EXPECT_EQ(a * a.inverse(), LinMap::identity(2));
    EXPECT_EQ(a.power(-2) * a.power(2), LinMap::identity(2));
    EXPECT_EQ(a.power(3), a * a * a);
    EXPECT_EQ(a.rank(), 2u);
    const LinMap s = LinMap::from_rows({q({1, 2}), q({2, 4})});
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_FALSE(s.try_inverse().has_value());
    EXPECT_THROW(s.inverse(), InputError);
    EXPECT_THROW(LinMap(2, 3) * LinMap(2, 3), InputError);
}

TEST(Pair, DualBasisAndBilinearity) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(pair(basis_vector(3, i), basis_vector(3, j)), i == j ? 1 : 0);
    EXPECT_EQ(pair(q({2, 1}), q({1, -1})), 1);
    EXPECT_THROW(pair(q({1, 2}), q({1, 2, 3})), InputError);
}

TEST(Pair, AdjunctionWithDualize) {
    std::mt19937 rng(13);
    const auto h = build_h4(Scalar(-3, 2));
    for (int k = 0; k < 50; ++k) {
        Vector p(4), v(4);
        for (auto& s : p) s = random_scalar(rng);
        for (auto& s : v) s = random_scalar(rng);
        EXPECT_EQ(pair(p, h.xi().apply(v)), pair(dualize(h.xi()).apply(p), v));
    }
}

TEST(Index, FlattenIsRowMajorAndRoundTrips) {
    const std::vector<std::size_t> dims{3, 4, 2};
    EXPECT_EQ(flatten_index(dims, {1, 2, 1}), 1u * 8 + 2 * 2 + 1);
    for (std::size_t f = 0; f < flat_size(dims); ++f) EXPECT_EQ(flatten_index(dims, unflatten_index(dims, f)), f);
}

TEST(Tensor, LegCalculus) {
    // Swap of a two-leg basis tensor, and a map fed two legs in reversed order.
    const Tensor t = Tensor::basis({2, 3}, {1, 2});
    EXPECT_EQ(t.swap(0, 1), Tensor::basis({3, 2}, {2, 1}));
    LinMap proj(1, 6);  // <e1 (x) e2 -> 1>, indices (leg a, leg b) over dims {3, 2}
    proj.at(0, 2 * 2 + 1) = 5;
    const MultilinearMap m({3, 2}, {}, proj);
    EXPECT_EQ(t.apply(m, {1, 0}).to_scalar(), 5);
    EXPECT_THROW(t.apply(m, {0, 1}), InputError);
}

TEST(MultilinearMap, RejectsShapeMismatch) {
    EXPECT_THROW(MultilinearMap({2, 2}, {2}, LinMap(2, 3)), InputError);
}
