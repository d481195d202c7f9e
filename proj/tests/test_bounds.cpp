#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <set>
#include <sstream>

#include <agcodes/ag_code.hpp>
#include <agcodes/bounds.hpp>

using namespace agc;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

Big gv_reference(u64 q, const Big& d) {
    using boost::multiprecision::log;
    Big lq = log(Big(q));
    Big h = d * log(Big(q - 1)) / lq - d * log(d) / lq - (1 - d) * log(1 - d) / lq;
    return 1 - h;
}

std::set<long> semigroup(std::vector<long> gens, long upto) {
    std::set<long> s{0};
    for (long v = 1; v <= upto; ++v)
        for (long a : gens)
            if (s.count(v - a)) s.insert(v);
    return s;
}

// min over nongaps λ > m (up to a cutoff) of #{(a, b) nongaps : a + b = λ}
long feng_rao_reference(const std::set<long>& S, long m, long cutoff) {
    long best = LONG_MAX;
    for (long lam = m + 1; lam <= cutoff; ++lam) {
        if (!S.count(lam)) continue;
        long c = 0;
        for (long a = 0; a <= lam; ++a) c += S.count(a) && S.count(lam - a);
        best = std::min(best, c);
    }
    return best;
}

Place P_ = Place::named("P"), Q_ = Place::named("Q");
Divisor PQ(long a, long b) { return Divisor(P_, a) + Divisor(Q_, b); }

}  // namespace

TEST(GV, LimitsAndReference) {
    EXPECT_NEAR(static_cast<double>(gv_rate(2, 1e-12L)), 1.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(gv_rate(2, 0.5L)), 0.0, 1e-15);
    for (u64 q : {2, 3, 4, 16, 64}) {
        for (int i = 1; i < 20; ++i) {
            long double d = (1.0L - 1.0L / q) * i / 20;
            Big ref = gv_reference(q, Big(static_cast<double>(d)));
            EXPECT_NEAR(static_cast<double>(gv_rate(q, static_cast<double>(d))), static_cast<double>(ref), 1e-12);
        }
    }
    long double prev = -1;
    for (int i = 1; i < 1000; ++i) {
        long double h = entropy(64, (63.0L / 64) * i / 1000);
        EXPECT_GT(h, prev);
        prev = h;
    }
    EXPECT_THROW(gv_rate(2, 0.6L), DomainError);
    EXPECT_THROW(gv_rate(6, 0.1L), DomainError);
    EXPECT_THROW(gv_rate(2, 0.0L), DomainError);
}

TEST(Asymptotic, TVZAndDV) {
    EXPECT_EQ(tvz_rate(64, Rational(3, 10)), Rational(1) - Rational(3, 10) - Rational(1, 7));
    EXPECT_EQ(tvz_rate(64, Rational(3, 10)), Rational(39, 70));
    EXPECT_EQ(dv_bound_exact(49), Rational(6));
    EXPECT_NEAR(static_cast<double>(dv_bound(49)), 6.0, 1e-15);
    EXPECT_THROW(tvz_rate(32, Rational(1, 10)), DomainError);
    EXPECT_NEAR(static_cast<double>(ihara_rate(7, 0.3L)), static_cast<double>(to_long_double(Rational(39, 70))), 1e-15);
}

TEST(Asymptotic, BBGS) {
    EXPECT_EQ(bbgs_bound(2, 1), Rational(3, 2));
    for (u64 p : {2, 3, 5, 7})
        for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(bbgs_bound(p, m), bbgs_bound_harmonic(p, m));
    EXPECT_THROW(bbgs_bound(4, 1), DomainError);
    EXPECT_THROW(bbgs_bound(2, 0), DomainError);
}

TEST(Asymptotic, SerreAndXing) {
    EXPECT_NEAR(static_cast<double>(serre_bound(2)), std::log(2.0) / 96, 1e-15);
    long double A = dv_bound(64);
    long double x = xing_rate(64, 0.3L, A);
    long double t = tvz_rate(64, 0.3L);
    EXPECT_NEAR(static_cast<double>(x - t), std::log1p(1.0 / 262144) / std::log(64.0), 1e-15);
    EXPECT_GT(x, t);
}

TEST(Asymptotic, KTWReadings) {
    for (u64 q : {2, 3, 4}) {
        for (unsigned ell : {2, 4, 6}) {
            auto r = ktw_rate(q, ell, Rational(0));
            // the rate line crosses zero exactly at the upper end of the window under m = l
            auto at_end = ktw_rate(q, ell, r.delta_high);
            EXPECT_EQ(at_end.rate, Rational(0));
            // the line has slope -(q-1)l/q
            auto one = ktw_rate(q, ell, Rational(1));
            EXPECT_EQ(r.rate - one.rate, Rational(static_cast<long long>((q - 1) * ell), static_cast<long long>(q)));
        }
    }
    auto lit = ktw_rate(2, 4, Rational(1, 10), KtwReading::Literal, 1);
    auto std_ = ktw_rate(2, 4, Rational(1, 10));
    EXPECT_EQ(lit.rate, std_.rate);
    EXPECT_NE(lit.delta_high, std_.delta_high);
    EXPECT_EQ(std_.delta_low, Rational(0));
    EXPECT_THROW(ktw_rate(2, 3, Rational(0)), DomainError);
    EXPECT_THROW(ktw_rate(2, 4, Rational(0), KtwReading::Literal, 0), DomainError);
}

TEST(Asymptotic, TVZBeatsGVFor64) {
    auto I = tvz_beats_gv(64);
    ASSERT_TRUE(I);
    EXPECT_LT(I->first, I->second);
    long double mid = (I->first + I->second) / 2;
    EXPECT_GT(tvz_rate(64, mid), gv_rate(64, mid));
    EXPECT_LE(tvz_rate(64, I->first - 1e-3L), gv_rate(64, I->first - 1e-3L));
    EXPECT_LE(tvz_rate(64, I->second + 1e-3L), gv_rate(64, I->second + 1e-3L));
    EXPECT_TRUE(tvz_beats_gv(49));
    EXPECT_FALSE(tvz_beats_gv(9));
}

TEST(Asymptotic, CsvFormat) {
    std::ostringstream os;
    write_rate_csv(os, 64, 5);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "delta,gv,tvz");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2);
    }
    EXPECT_EQ(rows, 5);
}

TEST(Asymptotic, ParseRational) {
    EXPECT_EQ(parse_rational("3/10"), Rational(3, 10));
    EXPECT_EQ(parse_rational("0.3"), Rational(3, 10));
    EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("x"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
}

TEST(Gopalan, Examples) {
    EXPECT_EQ(gopalan_bound(10, 4, 4), 7);
    EXPECT_EQ(gopalan_bound(12, 6, 3), 6);
    EXPECT_EQ(gopalan_bound(12, 5, 1), 12 - 10 + 2);
    EXPECT_THROW(gopalan_bound(5, 3, 4), DomainError);
}

TEST(FloorBounds, SuzukiLM) {
    std::map<Divisor, long> table{{PQ(16, 0), 6}, {PQ(17, 2), 6}, {PQ(5, 4), 1}, {PQ(6, 6), 1}};
    auto O = EllOracle::from_table(table, 14);
    FloorInput in;
    in.G = PQ(22, 6);
    in.A = PQ(16, 0);
    in.B = PQ(5, 4);
    in.Z = PQ(1, 2);
    auto r = floor_bound(FloorKind::LM, in, O);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, 5);
    EXPECT_EQ(r.d_gop, 2);
    EXPECT_EQ(*r.value, r.d_gop + in.Z.degree());
    bool user = false;
    for (auto& h : r.hypotheses) user = user || h.status == Hypothesis::Status::UserAsserted;
    EXPECT_TRUE(user);
    // breaking a table entry makes the hypothesis fail
    table[PQ(17, 2)] = 7;
    auto r2 = floor_bound(FloorKind::LM, in, EllOracle::from_table(table, 14));
    EXPECT_TRUE(r2.refused());
}

TEST(FloorBounds, SuzukiGST) {
    auto O = EllOracle::from_table({}, 14);
    FloorInput in;
    in.G = PQ(22, 6);
    in.A = PQ(14, 2);
    in.B = PQ(8, 4);
    in.C = PQ(8, 0);
    in.Z = PQ(0, 2);
    in.gst_k_term = 2;
    EXPECT_TRUE(floor_bound(FloorKind::GST, in, O).refused());
    in.assume_unverifiable = true;
    auto r = floor_bound(FloorKind::GST, in, O);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, 6);
    for (auto& h : r.hypotheses) EXPECT_NE(h.status, Hypothesis::Status::Failed);
}

TEST(FloorBounds, ABZReducesToGoppa) {
    for (long q0 : {2, 3}) {
        auto H = std::make_shared<HermitianCurve>(static_cast<u64>(q0));
        auto O = EllOracle::from_backend(H);
        for (long m = 0; m <= 30; ++m) {
            FloorInput in;
            in.G = Divisor::infinity_multiple(m);
            in.A = in.G;
            auto r = floor_bound(FloorKind::ABZ, in, O);
            ASSERT_TRUE(r.value);
            EXPECT_EQ(*r.value, m + 2 - 2 * H->genus());
            for (auto& h : r.hypotheses) EXPECT_EQ(h.status, Hypothesis::Status::Verified);
        }
    }
    auto F = make_field(5);
    auto X = std::make_shared<ProjectiveLine>(F);
    auto O = EllOracle::from_backend(X);
    FloorInput in;
    in.G = Divisor(Place::closed(irreducible_poly(F, 2)), 2) - Divisor::infinity_multiple(1);
    in.A = in.G;
    EXPECT_EQ(*floor_bound(FloorKind::ABZ, in, O).value, in.G.degree() + 2);
}

TEST(FloorBounds, LMOnHermitianComputed) {
    auto H = std::make_shared<HermitianCurve>(3);
    auto O = EllOracle::from_backend(H);
    FloorInput in;
    in.A = Divisor::infinity_multiple(4);
    in.B = Divisor::infinity_multiple(4);
    in.Z = Divisor::infinity_multiple(1);
    in.G = Divisor::infinity_multiple(9);
    in.points = H->affine_points();
    auto r = floor_bound(FloorKind::LM, in, O);
    ASSERT_TRUE(r.value);
    EXPECT_EQ(*r.value, r.d_gop + 1);
    in.A = Divisor::infinity_multiple(3);
    in.B = Divisor::infinity_multiple(5);
    auto bad = floor_bound(FloorKind::LM, in, O);
    EXPECT_TRUE(bad.refused());
    bool failed = false;
    for (auto& h : bad.hypotheses) failed = failed || h.status == Hypothesis::Status::Failed;
    EXPECT_TRUE(failed);
}

TEST(EllOracle, RejectsInconsistentTables) {
    EXPECT_THROW(EllOracle::from_table({{PQ(-1, 0), 1}}, 2), DomainError);
    EXPECT_THROW(EllOracle::from_table({{PQ(3, 0), 2}, {PQ(4, 0), 1}}, 2), DomainError);
    EXPECT_THROW(EllOracle::from_table({{PQ(10, 0), 3}}, 2), DomainError);
}

TEST(NonGaps, GeneratedSemigroups) {
    for (long q0 : {2, 3, 4, 5}) {
        auto S = NonGapSet::generated({q0, q0 + 1});
        auto ref = semigroup({q0, q0 + 1}, 80);
        for (long v = -3; v <= 80; ++v) EXPECT_EQ(S.contains(v), ref.count(v) > 0) << v;
        EXPECT_EQ(S.gap_count(), q0 * (q0 - 1) / 2);
        HermitianCurve H(static_cast<u64>(q0));
        EXPECT_EQ(S.upto(40), H.nongaps_upto(40));
    }
    EXPECT_THROW(NonGapSet::generated({4, 6}), DomainError);
}

TEST(NonGaps, FromEllMatchesShift) {
    HermitianCurve H(3);
    const long g = H.genus();
    for (long a : {0L, 2L, 5L, -4L}) {
        auto ell = [&](long j) { return H.rr_dim(Divisor::infinity_multiple(a + j)); };
        auto nu = NonGapSet::from_ell(ell, -a - 2, -a + 2 * g + 2);
        auto S = NonGapSet::generated({3, 4}).shifted(-a);
        for (long v = -a - 2; v <= -a + 40; ++v) EXPECT_EQ(nu.contains(v), S.contains(v)) << a << " " << v;
        EXPECT_EQ(nu.gap_count(), g);
    }
}

TEST(OrderBound, Examples) {
    auto S = NonGapSet::generated({2, 3});
    EXPECT_EQ(pair_count(S, S, 4), 3);
    auto N = NonGapSet::generated({1});
    for (long m = 0; m <= 12; ++m) {
        auto r = order_bound(N, N, N, m, 100);
        EXPECT_TRUE(r.certified);
        EXPECT_EQ(r.d_ord, m + 2);
    }
    auto h = hermitian_order_bound(2, 1);
    EXPECT_TRUE(h.certified);
    EXPECT_EQ(h.d_ord, 2);
    EXPECT_GT(h.d_ord, 1 + 2 - 2 * 1);
    auto partial = order_bound(S, S, S, 0, 1);
    EXPECT_FALSE(partial.certified);
    EXPECT_THROW(order_bound(S, S, S, 0, 0), DomainError);
}

TEST(OrderBound, MatchesReferenceAndBeatsGoppa) {
    for (long q0 : {2, 3, 4}) {
        auto ref = semigroup({q0, q0 + 1}, 400);
        long g = q0 * (q0 - 1) / 2;
        for (long m = 0; m <= 60; ++m) {
            auto r = hermitian_order_bound(q0, m);
            ASSERT_TRUE(r.certified);
            EXPECT_EQ(r.d_ord, feng_rao_reference(ref, m, 300)) << q0 << " " << m;
            EXPECT_GE(r.d_ord, m + 2 - 2 * g);
        }
    }
}

TEST(OrderBound, BruteForceDistanceDominates) {
    auto H2 = std::make_shared<HermitianCurve>(2);
    for (long m = 1; m <= 8; ++m) {
        auto c = comega_code(H2, H2->affine_points(), Divisor::infinity_multiple(m));
        if (c.dimension() == 0) continue;
        long d = static_cast<long>(min_distance(c.code));
        long dord = hermitian_order_bound(2, m).d_ord;
        EXPECT_GE(d, dord) << m;
        EXPECT_GE(dord, m + 2 - 2);
    }
    auto H3 = std::make_shared<HermitianCurve>(3);
    for (long m = 23; m <= 26; ++m) {
        auto c = comega_code(H3, H3->affine_points(), Divisor::infinity_multiple(m));
        long d = static_cast<long>(min_distance(c.code, kDefaultEnumerationGuard, 4));
        long dord = hermitian_order_bound(3, m).d_ord;
        EXPECT_GE(d, dord) << m;
        EXPECT_GE(dord, m + 2 - 6);
    }
}
