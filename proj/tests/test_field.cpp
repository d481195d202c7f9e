#include <gtest/gtest.h>

#include <set>

#include <agcodes/field.hpp>
#include <agcodes/polynomial.hpp>
#include <agcodes/rng.hpp>

using namespace agc;

namespace {

// carry-less product of 4-bit polynomials reduced by X^4 + X + 1
unsigned gf16_ref_mul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 4; ++i)
        if (b >> i & 1) r ^= a << i;
    for (int k = 7; k >= 4; --k)
        if (r >> k & 1) r ^= 0x13u << (k - 4);
    return r;
}

// all monic polynomials of degree d over F
std::vector<Polynomial> all_monic(const FiniteField& F, int d) {
    std::vector<Polynomial> out;
    u64 q = F.order(), total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (u64 N = 0; N < total; ++N) {
        std::vector<u64> c;
        u64 t = N;
        for (int i = 0; i < d; ++i) {
            c.push_back(t % q);
            t /= q;
        }
        c.push_back(1);
        out.push_back(Polynomial::from_indices(F, c));
    }
    return out;
}

bool brute_irreducible(const Polynomial& f) {
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (auto& g : all_monic(f.field(), d))
            if ((f % g).is_zero()) return false;
    return f.degree() >= 1;
}

Polynomial random_poly(const FiniteField& F, Rng& rng, int maxdeg) {
    std::vector<u64> c;
    int d = static_cast<int>(rng.below(static_cast<u64>(maxdeg) + 1));
    for (int i = 0; i <= d; ++i) c.push_back(rng.below(F.order()));
    return Polynomial::from_indices(F, c);
}

}  // namespace

TEST(Field, PrimeFieldBasics) {
    auto F = make_field(2, {1});
    EXPECT_EQ(F.order(), 2u);
    EXPECT_TRUE(F.is_prime_field());
    auto F7 = make_field(7);
    EXPECT_EQ((F7.element(3) * F7.element(5)).index(), 1u);
    EXPECT_EQ((F7.element(3) - F7.element(5)).index(), 5u);
    EXPECT_EQ(F7.element(3).inverse().index(), 5u);
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(make_field(4, {1}), DomainError);
    EXPECT_THROW(make_field(1), DomainError);
    EXPECT_THROW(make_field(2, {0}), DomainError);
}

TEST(Field, Gf16MatchesBitwiseReference) {
    auto F = make_field(2, {4});
    ASSERT_EQ(F.order(), 16u);
    auto mod = F.modulus();
    std::vector<u64> idx;
    for (auto& c : mod) idx.push_back(c.index());
    EXPECT_EQ(idx, (std::vector<u64>{1, 1, 0, 0, 1}));
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            EXPECT_EQ((F.element(a) * F.element(b)).index(), gf16_ref_mul(a, b));
            EXPECT_EQ((F.element(a) + F.element(b)).index(), a ^ b);
        }
}

TEST(Field, DefiningPolynomialsAreIrreducibleByExhaustion) {
    for (auto [p, d] : std::vector<std::pair<u64, int>>{{2, 4}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {7, 3}, {2, 6}}) {
        auto F = make_field(p, {d});
        Polynomial m(make_field(p), F.modulus());
        EXPECT_TRUE(brute_irreducible(m)) << p << "^" << d;
        EXPECT_EQ(m.degree(), d);
        EXPECT_TRUE(m.is_monic());
    }
}

TEST(Field, TowerEmbeddingPreservesMultiplication) {
    auto T = make_field(2, {2, 2});
    auto F4 = make_field(2, {2});
    ASSERT_EQ(T.order(), 16u);
    auto tower = T.tower();
    ASSERT_EQ(tower.size(), 3u);
    EXPECT_TRUE(tower[1] == F4);
    for (u64 a = 0; a < 4; ++a)
        for (u64 b = 0; b < 4; ++b) {
            EXPECT_EQ((T.element(a) * T.element(b)).index(), (F4.element(a) * F4.element(b)).index());
            EXPECT_EQ(T.embed(F4.element(a)).index(), a);
        }
    for (auto& a : T.elements()) EXPECT_EQ(T.in_subfield(a, F4), a.index() < 4);
    // set of elements fixed by Frobenius over GF(4) is exactly the index prefix
    auto F2 = make_field(2);
    EXPECT_TRUE(T.has_subfield(F2));
    EXPECT_EQ(T.degree_over(F2), 4);
    EXPECT_EQ(T.degree_over(F4), 2);
}

TEST(Field, Deterministic) {
    auto a = make_field(3, {4});
    auto b = make_field(3, {4});
    EXPECT_TRUE(a == b);
    EXPECT_EQ(a.primitive_element().index(), b.primitive_element().index());
}

TEST(Field, AlgebraicIdentities) {
    Rng rng(1);
    std::vector<FiniteField> fields{make_field(2, {4}), make_field(3, {3}), make_field(7, {2}), make_field(13),
                                    make_field(2, {2, 3}), make_field(5, {2, 2}), make_field(1000000007ULL),
                                    make_field(18446744073709551557ULL)};
    for (auto& F : fields) {
        const u64 p = F.characteristic(), q = F.order();
        for (int it = 0; it < 200; ++it) {
            auto a = F.element(rng.below(q)), b = F.element(rng.below(q)), c = F.element(rng.below(q));
            EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
            EXPECT_EQ(a.pow(q), a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a - a, F.zero());
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.pow(q - 2), F.one());
                EXPECT_EQ(a * a.inverse(), F.one());
            }
        }
    }
}

TEST(Field, PrimitiveElementGeneratesGroup) {
    for (auto F : {make_field(2, {4}), make_field(3, {2}), make_field(13), make_field(2, {2, 2})}) {
        auto g = F.primitive_element();
        std::set<u64> seen;
        auto x = F.one();
        for (u64 i = 0; i + 1 < F.order(); ++i) {
            seen.insert(x.index());
            x *= g;
        }
        EXPECT_EQ(seen.size(), F.order() - 1);
    }
}

TEST(Polynomial, ZeroDegreeSentinel) {
    auto F = make_field(5);
    Polynomial z(F);
    EXPECT_EQ(z.degree(), Polynomial::kMinusInfinity);
    EXPECT_LT(z.degree(), -1000000L);
    EXPECT_EQ((z * Polynomial::x(F)).degree(), Polynomial::kMinusInfinity);
}

TEST(Polynomial, IrreduciblePolyExamples) {
    auto F2 = make_field(2);
    EXPECT_EQ(irreducible_poly(F2, 1), Polynomial::x(F2));
    EXPECT_EQ(irreducible_poly(F2, 2), Polynomial::from_indices(F2, {1, 1, 1}));
    auto F7 = make_field(7);
    auto c = irreducible_poly(F7, 3);
    EXPECT_EQ(c.degree(), 3);
    EXPECT_TRUE(c.is_monic());
    for (auto& a : F7.elements()) EXPECT_FALSE(c(a).is_zero());
    for (auto& g : all_monic(F7, 2)) EXPECT_FALSE((c % g).is_zero());
    EXPECT_THROW(irreducible_poly(F7, 0), DomainError);
    // lex-smallest: every smaller monic cubic is reducible
    for (auto& g : all_monic(F7, 3)) {
        if (g < c) {
            EXPECT_FALSE(brute_irreducible(g));
        }
    }
    auto F16 = make_field(2, {4});
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(brute_irreducible(irreducible_poly(F16, d)));
}

TEST(Polynomial, DivisionIdentity) {
    Rng rng(7);
    for (auto F : {make_field(11), make_field(2, {3}), make_field(3, {2})}) {
        for (int it = 0; it < 200; ++it) {
            auto f = random_poly(F, rng, 9), g = random_poly(F, rng, 5);
            if (g.is_zero()) continue;
            auto [q, r] = divmod(f, g);
            EXPECT_EQ(q * g + r, f);
            EXPECT_LT(r.degree(), g.degree());
            auto h = random_poly(F, rng, 4);
            EXPECT_EQ((f * g).degree(), f.is_zero() ? Polynomial::kMinusInfinity : f.degree() + g.degree());
            EXPECT_EQ(f * (g + h), f * g + f * h);
        }
    }
}

TEST(Polynomial, LagrangeExamples) {
    auto F = make_field(11);
    auto c = F.element(6);
    EXPECT_EQ(lagrange_interpolate(F, {{F.zero(), c}}), Polynomial::constant(F, c));
    std::vector<std::pair<FieldElement, FieldElement>> sq;
    for (u64 v : {2, 5, 9}) sq.push_back({F.element(v), F.element(v).pow(2)});
    EXPECT_EQ(lagrange_interpolate(F, sq), Polynomial::monomial(F, F.one(), 2));
    Rng rng(3);
    for (int it = 0; it < 50; ++it) {
        auto xs = rng.subset(11, 5);
        std::vector<std::pair<FieldElement, FieldElement>> pr;
        for (auto x : xs) pr.push_back({F.element(x), F.element(rng.below(11))});
        auto P = lagrange_interpolate(F, pr);
        EXPECT_LE(P.degree(), 4);
        for (auto& [x, y] : pr) EXPECT_EQ(P(x), y);
    }
    EXPECT_THROW(lagrange_interpolate(F, {{F.one(), F.one()}, {F.one(), F.zero()}}), DomainError);
}

TEST(Polynomial, InterpolateEvaluateIdentity) {
    Rng rng(11);
    auto F = make_field(2, {4});
    for (int it = 0; it < 50; ++it) {
        auto f = random_poly(F, rng, 7);
        std::vector<std::pair<FieldElement, FieldElement>> pr;
        for (auto x : rng.subset(16, 8)) pr.push_back({F.element(x), f(F.element(x))});
        EXPECT_EQ(lagrange_interpolate(F, pr), f);
    }
}

TEST(Polynomial, FactorizationReassemblesAndIsIrreducible) {
    Rng rng(5);
    for (auto F : {make_field(2), make_field(3), make_field(2, {2}), make_field(7), make_field(5, {2})}) {
        for (int it = 0; it < 40; ++it) {
            auto f = random_poly(F, rng, 8) * random_poly(F, rng, 3);
            if (f.degree() < 1) continue;
            auto fs = factor(f);
            Polynomial prod = Polynomial::constant(F, f.leading());
            for (auto& [g, m] : fs) {
                EXPECT_TRUE(g.is_monic());
                EXPECT_TRUE(brute_irreducible(g)) << g;
                prod *= pow(g, static_cast<u64>(m));
            }
            EXPECT_EQ(prod, f);
        }
    }
    // inseparable case x^4 + 1 = (x + 1)^4 over GF(2)
    auto F2 = make_field(2);
    auto fs = factor(Polynomial::from_indices(F2, {1, 0, 0, 0, 1}));
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].second, 4);
}

TEST(Polynomial, RootsMatchScan) {
    auto F = make_field(13);
    Rng rng(2);
    for (int it = 0; it < 30; ++it) {
        auto f = random_poly(F, rng, 6);
        if (f.is_zero()) continue;
        std::vector<FieldElement> expect;
        for (auto& a : F.elements())
            if (f(a).is_zero()) expect.push_back(a);
        EXPECT_EQ(roots(f), expect);
    }
}
