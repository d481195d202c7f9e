#include <gtest/gtest.h>

#include <agcodes/ag_code.hpp>
#include <agcodes/linear_code.hpp>
#include <agcodes/rng.hpp>

using namespace agc;

namespace {

// every codeword, by encoding all q^k messages
std::vector<Vector> all_codewords(const LinearCode& C) {
    const FiniteField& F = C.field();
    const std::size_t k = C.dimension();
    u64 total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.order();
    std::vector<Vector> out;
    for (u64 N = 0; N < total; ++N) {
        Vector m;
        u64 t = N;
        for (std::size_t i = 0; i < k; ++i) {
            m.push_back(F.element(t % F.order()));
            t /= F.order();
        }
        out.push_back(C.encode(m));
    }
    return out;
}

std::size_t naive_distance(const LinearCode& C) {
    std::size_t best = C.length();
    for (auto& c : all_codewords(C)) {
        std::size_t w = weight(c);
        if (w > 0 && w < best) best = w;
    }
    return best;
}

Vector elements_vec(const FiniteField& F, std::size_t from, std::size_t count) {
    Vector v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(F.element(from + i));
    return v;
}

LinearCode random_code(const FiniteField& F, std::size_t n, std::size_t k, Rng& rng) {
    Matrix M(F, 0, n);
    for (std::size_t i = 0; i < k; ++i) {
        Vector r;
        for (std::size_t j = 0; j < n; ++j) r.push_back(F.element(rng.below(F.order())));
        M.append_row(r);
    }
    return LinearCode(std::move(M));
}

Vector random_vector(const FiniteField& F, std::size_t n, Rng& rng) {
    Vector r;
    for (std::size_t j = 0; j < n; ++j) r.push_back(F.element(rng.below(F.order())));
    return r;
}

}  // namespace

TEST(LinearCode, DualExamples) {
    auto F2 = make_field(2);
    EXPECT_EQ(dual(LinearCode::full_space(F2, 4)).dimension(), 0u);
    auto par = dual(LinearCode::repetition(F2, 3));
    EXPECT_EQ(par.dimension(), 2u);
    for (auto& c : all_codewords(par)) EXPECT_EQ(weight(c) % 2, 0u);
    auto F8 = make_field(2, {3});
    auto rs = reed_solomon(F8, F8.nonzero_elements(), 3).code;
    auto d = dual(rs);
    EXPECT_EQ(d.dimension(), 4u);
    EXPECT_EQ(dual(d), rs);
    for (std::size_t i = 0; i < rs.dimension(); ++i)
        for (std::size_t j = 0; j < d.dimension(); ++j) EXPECT_TRUE(inner_product(rs.generator().row(i), d.generator().row(j)).is_zero());
}

TEST(LinearCode, MinDistanceExamples) {
    auto F7 = make_field(7);
    EXPECT_EQ(min_distance(LinearCode::repetition(F7, 5)), 5u);
    Vector x = elements_vec(F7, 1, 6), y;
    for (u64 v : {1, 2, 3, 4, 5, 6}) y.push_back(F7.element(v));
    auto grs = grs_code(F7, x, y, 3).code;
    EXPECT_EQ(min_distance(grs), 4u);
    EXPECT_EQ(naive_distance(grs), 4u);
    auto H = std::make_shared<HermitianCurve>(2);
    auto c = cl_code(H, H->affine_points(), Divisor::infinity_multiple(5));
    std::size_t d = min_distance(c.code);
    EXPECT_GE(d, 3u);
    EXPECT_EQ(d, naive_distance(c.code));
}

TEST(LinearCode, MinDistanceMatchesNaiveAndIsJobIndependent) {
    Rng rng(17);
    for (auto F : {make_field(2), make_field(3), make_field(2, {2}), make_field(5)}) {
        for (int it = 0; it < 15; ++it) {
            std::size_t n = 3 + rng.below(6), k = 1 + rng.below(std::min<std::size_t>(n, 5));
            auto C = random_code(F, n, k, rng);
            if (C.dimension() == 0) continue;
            std::size_t d = min_distance(C);
            EXPECT_EQ(d, naive_distance(C));
            EXPECT_EQ(d, min_distance(C, kDefaultEnumerationGuard, 4));
        }
    }
}

TEST(LinearCode, GuardRefuses) {
    auto F = make_field(2, {4});
    auto C = reed_solomon(F, F.nonzero_elements(), 7).code;
    EXPECT_THROW(min_distance(C, u64{1} << 20), GuardExceeded);
    EXPECT_THROW(min_distance(LinearCode::zero_code(F, 3)), DomainError);
}

TEST(LinearCode, WeightDistributionOfHamming) {
    auto F2 = make_field(2);
    // [7,4] Hamming code from its parity checks
    Matrix H(F2, 3, 7);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t b = 0; b < 3; ++b) H.set(b, j, F2.element(((j + 1) >> b) & 1));
    auto C = LinearCode::from_parity_check(H);
    auto A = weight_distribution(C);
    EXPECT_EQ(A, (std::vector<u64>{1, 0, 0, 7, 7, 0, 0, 1}));
}

TEST(LinearCode, RestrictExamples) {
    auto F = make_field(5);
    Rng rng(2);
    auto C = random_code(F, 6, 3, rng);
    EXPECT_EQ(restrict(C, {0, 1, 2, 3, 4, 5}), C);
    auto R = restrict(LinearCode::repetition(F, 6), {1, 3, 4});
    EXPECT_EQ(R, LinearCode::repetition(F, 3));
    EXPECT_THROW(restrict(C, {}), DomainError);
}

TEST(LinearCode, SubfieldSubcodeExamples) {
    auto F4 = make_field(2, {2});
    auto F2 = make_field(2);
    EXPECT_EQ(subfield_subcode(LinearCode::full_space(F4, 5), F2), LinearCode::full_space(F2, 5));
    EXPECT_EQ(subfield_subcode(LinearCode::repetition(F4, 5), F2), LinearCode::repetition(F2, 5));
    EXPECT_THROW(subfield_subcode(LinearCode::repetition(F4, 3), make_field(3)), DomainError);
}

TEST(LinearCode, SubfieldSubcodeMatchesExhaustiveIntersection) {
    Rng rng(9);
    auto F16 = make_field(2, {4});
    auto F4 = make_field(2, {2, 2});
    std::vector<std::pair<FiniteField, FiniteField>> cases{{F16, make_field(2)}, {F4, F4.tower()[1]}, {F4, make_field(2)}, {make_field(3, {2}), make_field(3)}};
    for (auto& [F, B] : cases) {
        for (int it = 0; it < 6; ++it) {
            std::size_t n = 5, k = 1 + rng.below(4);
            auto C = random_code(F, n, k, rng);
            if (C.dimension() == 0) continue;
            auto S = subfield_subcode(C, B);
            std::size_t count = 0;
            for (auto& c : all_codewords(C)) {
                bool inside = true;
                for (auto& x : c) inside = inside && F.in_subfield(x, B);
                count += inside;
            }
            u64 expect = 1;
            for (std::size_t i = 0; i < S.dimension(); ++i) expect *= B.order();
            EXPECT_EQ(count, expect);
            EXPECT_TRUE(extend_scalars(S, F).is_subcode_of(C));
        }
    }
}

TEST(LinearCode, StarProductExamples) {
    auto F = make_field(7);
    Rng rng(4);
    auto C = random_code(F, 6, 3, rng);
    EXPECT_EQ(star_product(C, LinearCode::repetition(F, 6)), C);
    Vector x = elements_vec(F, 0, 5);
    auto rs2 = reed_solomon(F, x, 2).code, rs3 = reed_solomon(F, x, 3).code;
    EXPECT_EQ(star_product(rs2, rs2), rs3);
    auto X = std::make_shared<ProjectiveLine>(F);
    auto pts = line_points(elements_vec(F, 0, 7));
    auto a = cl_code(X, pts, Divisor::infinity_multiple(2)).code;
    auto b = cl_code(X, pts, Divisor::infinity_multiple(3)).code;
    auto ab = cl_code(X, pts, Divisor::infinity_multiple(5)).code;
    EXPECT_EQ(star_product(a, b), ab);
}

TEST(LinearCode, RegularityExamples) {
    auto F = make_field(11);
    EXPECT_EQ(regularity(LinearCode::full_space(F, 4)), 1u);
    EXPECT_EQ(regularity(LinearCode::repetition(F, 4)), 1u);
    auto rs3 = reed_solomon(F, F.elements(), 3).code;
    // dim (RS_3)^t = min(n, 2t + 1); first stationary t
    unsigned expect = 1;
    while (std::min<std::size_t>(11, 2 * (expect + 1) + 1) != std::min<std::size_t>(11, 2 * expect + 1)) ++expect;
    EXPECT_EQ(regularity(rs3), expect);
    Matrix M(F, 1, 3);
    M.set(0, 0, F.one());
    EXPECT_THROW(regularity(LinearCode(M)), DomainError);
}

TEST(LinearCode, StabilizerExamples) {
    auto F = make_field(5);
    EXPECT_EQ(stabilizer(LinearCode::full_space(F, 4)).dimension(), 4u);
    EXPECT_EQ(stabilizer(LinearCode::repetition(F, 4)).dimension(), 1u);
    auto ds = direct_sum(reed_solomon(F, elements_vec(F, 0, 4), 2).code, reed_solomon(F, elements_vec(F, 1, 4), 3).code);
    auto st = stabilizer(ds);
    EXPECT_GE(st.dimension(), 2u);
    Vector chi(8, F.zero());
    for (int i = 0; i < 4; ++i) chi[static_cast<std::size_t>(i)] = F.one();
    EXPECT_TRUE(st.contains(chi));
}

TEST(LinearCode, QuadricRelations) {
    auto F = make_field(11);
    Matrix one(F, 1, 4);
    for (std::size_t j = 0; j < 4; ++j) one.set(0, j, F.element(j + 1));
    EXPECT_EQ(quadric_relations(LinearCode(one)).rows(), 0u);
    auto rs3 = reed_solomon(F, elements_vec(F, 0, 8), 3).code;
    auto I2 = quadric_relations(rs3);
    EXPECT_EQ(I2.rows(), 1u);
    EXPECT_EQ(I2.rows(), 6 - star_product(rs3, rs3).dimension());
    auto mons = quadratic_monomials(3);
    const Matrix& G = rs3.generator();
    for (std::size_t j = 0; j < rs3.length(); ++j) {
        FieldElement s = F.zero();
        for (std::size_t t = 0; t < mons.size(); ++t) s += I2(0, t) * G(mons[t].first, j) * G(mons[t].second, j);
        EXPECT_TRUE(s.is_zero());
    }
    Rng rng(8);
    auto R = random_code(F, 10, 3, rng);
    ASSERT_EQ(star_product(R, R).dimension(), 6u);
    EXPECT_EQ(quadric_relations(R).rows(), 0u);
}

TEST(LinearCode, FrameproofExamples) {
    auto F2 = make_field(2);
    EXPECT_TRUE(is_frameproof(LinearCode::repetition(F2, 5), 3));
    // weight-2 words of length 3 always overlap; length 4 has 1100 and 0011
    EXPECT_TRUE(is_frameproof(dual(LinearCode::repetition(F2, 3)), 2));
    EXPECT_FALSE(is_frameproof(dual(LinearCode::repetition(F2, 4)), 2));
    auto F8 = make_field(2, {3});
    EXPECT_TRUE(is_frameproof(reed_solomon(F8, F8.nonzero_elements(), 2).code, 3));
}

TEST(LinearCode, FrameproofMatchesPairExhaustion) {
    Rng rng(13);
    for (auto F : {make_field(2), make_field(3)}) {
        for (int it = 0; it < 20; ++it) {
            auto C = random_code(F, 4 + rng.below(3), 1 + rng.below(3), rng);
            auto words = all_codewords(C);
            bool expect = true;
            for (auto& a : words)
                for (auto& b : words)
                    if (weight(a) && weight(b) && weight(star(a, b)) == 0) expect = false;
            EXPECT_EQ(is_frameproof(C, 2), expect);
        }
    }
}

TEST(LinearCodeProperties, Adjunction) {
    Rng rng(21);
    auto F = make_field(3, {2});
    for (int it = 0; it < 300; ++it) {
        auto x = random_vector(F, 7, rng), y = random_vector(F, 7, rng), z = random_vector(F, 7, rng);
        EXPECT_EQ(inner_product(star(x, y), z), inner_product(x, star(y, z)));
    }
}

TEST(LinearCodeProperties, StarDimensionKneserSingleton) {
    Rng rng(22);
    auto F = make_field(7);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 5 + rng.below(4);
        auto A = random_code(F, n, 1 + rng.below(3), rng), B = random_code(F, n, 1 + rng.below(3), rng);
        auto AB = star_product(A, B);
        EXPECT_LE(AB.dimension(), std::min(n, A.dimension() * B.dimension()));
        EXPECT_GE(AB.dimension() + stabilizer(AB).dimension(), A.dimension() + B.dimension());
        EXPECT_GE(static_cast<long>(AB.dimension()), kneser_bound(A, B));
        if (has_full_support(A) && has_full_support(B) && AB.dimension() > 0) {
            EXPECT_LE(static_cast<long>(min_distance(AB)), product_singleton_bound(n, {A.dimension(), B.dimension()}));
        }
    }
    Vector x = elements_vec(F, 0, 7);
    auto rs = reed_solomon(F, x, 3).code, rs2 = reed_solomon(F, x, 2).code;
    EXPECT_GE(star_product(rs, rs2).dimension(), std::min<std::size_t>(7, 3 + 2 - 1));
}

TEST(LinearCodeProperties, ProductSingletonBound) {
    EXPECT_EQ(product_singleton_bound(7, {2, 3}), 4);
    // sum of dimensions beyond n + 1: the t - 1 branch
    EXPECT_EQ(product_singleton_bound(5, {4, 4}), 1);
    EXPECT_EQ(product_singleton_bound(6, {2, 2, 2}), 3);
    EXPECT_THROW(product_singleton_bound(5, {2}), DomainError);
    auto F = make_field(5);
    auto rs = reed_solomon(F, F.elements(), 4).code;
    EXPECT_EQ(static_cast<long>(min_distance(star_product(rs, rs))), 1);
    // RS pairs on common points are tight
    auto a = reed_solomon(F, F.elements(), 2).code, b = reed_solomon(F, F.elements(), 2).code;
    EXPECT_EQ(static_cast<long>(min_distance(star_product(a, b))), product_singleton_bound(5, {2, 2}));
}

TEST(LinearCodeProperties, DoubleDual) {
    Rng rng(23);
    for (auto F : {make_field(2), make_field(2, {3}), make_field(13)}) {
        for (int it = 0; it < 10; ++it) {
            auto C = random_code(F, 8, 1 + rng.below(7), rng);
            EXPECT_EQ(dual(dual(C)), C);
            EXPECT_EQ(C.dimension() + dual(C).dimension(), 8u);
        }
    }
}
