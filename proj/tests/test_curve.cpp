#include <gtest/gtest.h>

#include <set>

#include <agcodes/curve.hpp>
#include <agcodes/matrix.hpp>
#include <agcodes/rng.hpp>

using namespace agc;

namespace {

std::set<long> semigroup_upto(long a, long b, long m) {
    std::set<long> s;
    for (long i = 0; i * a <= m; ++i)
        for (long j = 0; i * a + j * b <= m; ++j) s.insert(i * a + j * b);
    return s;
}

Matrix evaluation_matrix(const CurveBackend& X, const std::vector<CurveFunction>& basis, const std::vector<Place>& pts) {
    Matrix M(X.field(), 0, pts.size());
    for (auto& f : basis) M.append_row(X.evaluate_all(f, pts));
    return M;
}

}  // namespace

TEST(Hermitian, PointCountsAgainstEquation) {
    for (u64 q0 : {2, 3, 4}) {
        HermitianCurve H(q0);
        const auto& F = H.field();
        ASSERT_EQ(F.order(), q0 * q0);
        std::size_t count = 0;
        for (auto& a : F.elements())
            for (auto& b : F.elements()) count += (b.pow(q0) + b == a.pow(q0 + 1));
        EXPECT_EQ(count, q0 * q0 * q0);
        EXPECT_EQ(H.affine_points().size(), count);
        EXPECT_EQ(H.genus(), static_cast<int>(q0 * (q0 - 1) / 2));
        EXPECT_EQ(H.canonical_divisor().degree(), 2L * H.genus() - 2);
    }
    EXPECT_THROW(HermitianCurve(6), DomainError);
}

TEST(Hermitian, NonGapsAreTheSemigroup) {
    for (long q0 : {2, 3, 4, 5}) {
        HermitianCurve H(static_cast<u64>(q0));
        auto S = semigroup_upto(q0, q0 + 1, 60);
        auto ng = H.nongaps_upto(60);
        EXPECT_EQ(std::vector<long>(S.begin(), S.end()), ng);
        long gaps = 0;
        for (long v = 0; v <= 60; ++v) gaps += !S.count(v);
        EXPECT_EQ(gaps, H.genus());
        for (long m = 2 * H.genus() - 1; m < 40; ++m) EXPECT_EQ(H.rr_dim(Divisor::infinity_multiple(m)), m + 1 - H.genus());
    }
}

TEST(Hermitian, BasisForFiveTimesInfinity) {
    HermitianCurve H(2);
    auto B = H.rr_basis(Divisor::infinity_multiple(5));
    ASSERT_EQ(B.size(), 5u);
    // 1, x, y, x^2, xy
    std::vector<long> poles;
    for (auto& f : B) poles.push_back(-H.valuation_at_infinity(f));
    EXPECT_EQ(poles, (std::vector<long>{0, 2, 3, 4, 5}));
    const auto& F = H.field();
    auto pts = H.affine_points();
    for (auto& P : pts) {
        FieldElement x = F.element(P.coords[0]), y = F.element(P.coords[1]);
        Vector expect{F.one(), x, y, x * x, x * y};
        for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(H.evaluate(B[i], P), expect[i]);
    }
}

TEST(Hermitian, ArithmeticMatchesPointwise) {
    HermitianCurve H(3);
    const auto& F = H.field();
    Rng rng(5);
    auto pts = H.affine_points();
    for (int it = 0; it < 20; ++it) {
        auto f = HermitianFunction::monomial(F, 3, static_cast<unsigned>(rng.below(5)), static_cast<unsigned>(rng.below(3)), F.element(1 + rng.below(8)));
        auto g = HermitianFunction::monomial(F, 3, static_cast<unsigned>(rng.below(5)), static_cast<unsigned>(rng.below(3)), F.element(1 + rng.below(8))) + f;
        if (g.is_zero()) continue;
        auto fg = f * g;
        for (auto& P : pts) {
            FieldElement a = F.element(P.coords[0]), b = F.element(P.coords[1]);
            EXPECT_EQ(fg.at(a, b), f.at(a, b) * g.at(a, b));
        }
        EXPECT_EQ(fg.pole_order(), f.pole_order() + g.pole_order());
    }
}

TEST(Hermitian, MultiplesOfAffineSumMatchEvaluationKernel) {
    HermitianCurve H(2);
    auto pts = H.affine_points();
    Divisor D = H.affine_sum();
    for (long m = 0; m <= 20; ++m) {
        auto basis = H.rr_basis(Divisor::infinity_multiple(m));
        long kernel = static_cast<long>(basis.size()) - static_cast<long>(evaluation_matrix(H, basis, pts).rank());
        Divisor E = Divisor::infinity_multiple(m) - D;
        EXPECT_EQ(H.rr_dim(E), kernel) << m;
        for (auto& f : H.rr_basis(E))
            for (auto& P : pts) EXPECT_TRUE(H.evaluate(f, P).is_zero());
    }
    EXPECT_FALSE(H.supports(Divisor(pts[0], 1)));
    EXPECT_THROW(H.rr_basis(Divisor(pts[0], 1) + Divisor::infinity_multiple(3)), CapabilityError);
}

TEST(Hermitian, TaylorSeriesSatisfiesEquation) {
    HermitianCurve H(3);
    const auto& F = H.field();
    const std::size_t s = 12;
    for (auto& P : H.affine_points()) {
        Series Y = H.y_series(P, s);
        FieldElement a = F.element(P.coords[0]);
        EXPECT_EQ(Y[0].index(), P.coords[1]);
        Series Yq(s, F.zero());
        Yq[0] = F.one();
        for (int i = 0; i < 3; ++i) Yq = detail::series_mul(F, Yq, Y, s);
        Series rhs = detail::poly_series(Polynomial::monomial(F, F.one(), 4), a, s);
        for (std::size_t k = 0; k < s; ++k) EXPECT_EQ(Yq[k] + Y[k], rhs[k]);
        auto xy = HermitianFunction::monomial(F, 3, 1, 1, F.one());
        Series T = H.taylor(xy, P, s);
        EXPECT_EQ(T[0], H.evaluate(xy, P));
    }
}

TEST(ProjectiveLine, DimensionAndBasisValuations) {
    auto F = make_field(7);
    ProjectiveLine X(F);
    EXPECT_EQ(X.rational_points().size(), 8u);
    Polynomial q = irreducible_poly(F, 2);
    std::vector<Divisor> Ds{Divisor::infinity_multiple(4), Divisor(Place::affine(F.element(2)), 3) - Divisor::infinity_multiple(1),
                            Divisor(Place::closed(q), 2) - Divisor(Place::affine(F.element(0)), 1), Divisor(Place::affine(F.element(1)), -5)};
    for (auto& D : Ds) {
        long l = X.rr_dim(D);
        EXPECT_EQ(l, std::max(0L, D.degree() + 1));
        auto B = X.rr_basis(D);
        EXPECT_EQ(static_cast<long>(B.size()), l);
        for (auto& f : B) EXPECT_TRUE((X.divisor_of(std::get<RationalFunction>(f)) + D).is_effective());
    }
    EXPECT_EQ(X.canonical_divisor().degree(), -2);
}

TEST(ProjectiveLine, DivisorsOfFunctionsHaveDegreeZero) {
    auto F = make_field(5);
    ProjectiveLine X(F);
    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
        std::vector<u64> a, b;
        for (int i = 0; i < 1 + static_cast<int>(rng.below(5)); ++i) a.push_back(rng.below(5));
        for (int i = 0; i < 1 + static_cast<int>(rng.below(5)); ++i) b.push_back(rng.below(5));
        Polynomial n = Polynomial::from_indices(F, a), d = Polynomial::from_indices(F, b);
        if (n.is_zero() || d.is_zero()) continue;
        EXPECT_EQ(X.divisor_of(RationalFunction(n, d)).degree(), 0);
    }
}

TEST(ProjectiveLine, TaylorIsShiftedPolynomial) {
    auto F = make_field(11);
    ProjectiveLine X(F);
    Polynomial f = Polynomial::from_indices(F, {3, 0, 5, 1});
    auto a = F.element(4);
    Series T = X.taylor(CurveFunction(RationalFunction(f)), Place::affine(a), 6);
    Polynomial shifted = f.compose(Polynomial::from_indices(F, {a.index(), 1}));
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(T[k], shifted.coeff(k));
}
