#include <gtest/gtest.h>

#include <agcodes/bounds.hpp>
#include <agcodes/lrc.hpp>
#include <agcodes/rng.hpp>

using namespace agc;

namespace {

Vector random_codeword(const LinearCode& C, Rng& rng) {
    Vector m;
    for (std::size_t i = 0; i < C.dimension(); ++i) m.push_back(C.field().element(rng.below(C.field().order())));
    return C.encode(m);
}

PartialWord intact(const Vector& c) {
    PartialWord w;
    for (auto& v : c) w.push_back(v);
    return w;
}

// every single erasure is repaired from exactly `expect` downloaded symbols of the chosen partition
void check_all_single_erasures(const LrcCode& C, std::size_t which, std::size_t expect, Rng& rng) {
    for (int it = 0; it < 3; ++it) {
        Vector c = random_codeword(C.code, rng);
        for (std::size_t i = 0; i < C.length(); ++i) {
            PartialWord w = intact(c);
            w[i].reset();
            auto r = local_recover(C, w, i, which);
            EXPECT_EQ(r.symbol, c[i]) << i;
            EXPECT_EQ(r.downloaded.size(), expect);
        }
    }
}

std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t>& from, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(from.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < from.size(); ++i)
            if (pick[i]) s.push_back(from[i]);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace

TEST(InvariantPartition, MultiplicativeCosets) {
    auto F = make_field(13);
    auto p = invariant_partition(F, GroupKind::Multiplicative, 4);
    EXPECT_EQ(p.parts.size(), 3u);
    EXPECT_EQ(p.points.size(), 12u);
    EXPECT_EQ(p.g, Polynomial::monomial(F, F.one(), 4));
    std::set<u64> all;
    for (auto& part : p.parts) {
        ASSERT_EQ(part.size(), 4u);
        for (auto i : part) {
            all.insert(p.points[i].index());
            EXPECT_EQ(p.points[i].pow(4), p.points[part[0]].pow(4));
            // same coset: the ratio has order dividing 4
            EXPECT_EQ((p.points[i] / p.points[part[0]]).pow(4), F.one());
        }
    }
    EXPECT_EQ(all.size(), 12u);
    EXPECT_EQ(invariant_partition(F, GroupKind::Multiplicative, 12).parts.size(), 1u);
    EXPECT_THROW(invariant_partition(F, GroupKind::Multiplicative, 5), DomainError);
}

TEST(InvariantPartition, AdditiveCosets) {
    auto F = make_field(2, {3});
    auto p = invariant_partition(F, GroupKind::Additive, 2);
    EXPECT_EQ(p.parts.size(), 4u);
    FieldElement h = F.element(1);
    EXPECT_EQ(p.g, Polynomial::monomial(F, F.one(), 2) + Polynomial::monomial(F, h, 1));
    for (auto& x : F.elements()) EXPECT_EQ(p.g(x), p.g(x + h));
    for (auto& part : p.parts) EXPECT_EQ(p.points[part[0]] + p.points[part[1]], h);
    auto F9 = make_field(3, {2});
    auto p9 = invariant_partition(F9, GroupKind::Additive, 3);
    EXPECT_EQ(p9.parts.size(), 3u);
    EXPECT_EQ(p9.g.degree(), 3);
    EXPECT_THROW(invariant_partition(F, GroupKind::Additive, 3), DomainError);
}

TEST(TamoBarg, MeetsTheLocalityBound) {
    auto F = make_field(13);
    auto p = invariant_partition(F, GroupKind::Multiplicative, 4);
    auto C = tamo_barg(p.points, p.parts, p.g, 6, 3);
    EXPECT_EQ(C.length(), 12u);
    EXPECT_EQ(C.dimension(), 6u);
    long d = static_cast<long>(min_distance(C.code));
    EXPECT_EQ(d, 6);
    EXPECT_EQ(d, C.designed_distance);
    EXPECT_EQ(d, gopalan_bound(12, 6, 3));
    ASSERT_EQ(C.partitions.size(), 1u);
    EXPECT_EQ(C.partitions[0].locality, 3);
    EXPECT_EQ(C.partitions[0].local_distance, 2);
    for (auto& part : p.parts) {
        auto local = restrict(C.code, part);
        EXPECT_EQ(local.dimension(), 3u);
        EXPECT_EQ(min_distance(local), 2u);
    }
    Rng rng(5);
    check_all_single_erasures(C, 0, 3, rng);
}

TEST(TamoBarg, KEqualsLocality) {
    auto F = make_field(13);
    auto p = invariant_partition(F, GroupKind::Multiplicative, 4);
    auto C = tamo_barg(p.points, p.parts, p.g, 3, 3);
    EXPECT_EQ(C.dimension(), 3u);
    EXPECT_GE(static_cast<long>(min_distance(C.code)), 12 - 3 - 1 + 2);
    EXPECT_THROW(tamo_barg(p.points, p.parts, p.g, 4, 3), DomainError);
    EXPECT_THROW(tamo_barg(p.points, p.parts, p.g, 6, 2), DomainError);
}

TEST(TamoBarg, AdditiveInstance) {
    auto F = make_field(2, {4});
    auto p = invariant_partition(F, GroupKind::Additive, 4);
    auto C = tamo_barg(p.points, p.parts, p.g, 6, 3);
    EXPECT_EQ(static_cast<long>(min_distance(C.code)), gopalan_bound(16, 6, 3));
}

TEST(BTV, HermitianExample) {
    auto C = btv_code(3, 2, 2);
    EXPECT_EQ(C.length(), 27u);
    EXPECT_EQ(C.dimension(), 6u);
    EXPECT_EQ(C.designed_distance, 17);
    EXPECT_GE(static_cast<long>(min_distance(C.code, kDefaultEnumerationGuard, 4)), 17);
    const auto& P = C.partitions[0];
    EXPECT_EQ(P.parts.size(), 9u);
    EXPECT_EQ(P.locality, 2);
    EXPECT_EQ(P.local_distance, 2);
    for (auto& part : P.parts) {
        auto local = restrict(C.code, part);
        EXPECT_EQ(local.dimension(), 2u);
        EXPECT_EQ(min_distance(local), 2u);
    }
    Rng rng(7);
    check_all_single_erasures(C, 0, 2, rng);
}

TEST(BTV, HigherLocalDistance) {
    auto C = btv_code(4, 1, 1);  // local codes [4,1,4]
    EXPECT_EQ(C.partitions[0].local_distance, 4);
    EXPECT_EQ(C.partitions[0].locality, 3);
    Rng rng(9);
    check_all_single_erasures(C, 0, 1, rng);
    auto C2 = btv_code(4, 1, 2);  // local codes [4,2,3]; any 2 of the other 3 symbols suffice
    EXPECT_EQ(C2.partitions[0].local_distance, 3);
    Vector c = random_codeword(C2.code, rng);
    for (std::size_t i = 0; i < C2.length(); ++i) {
        auto part = C2.partitions[0].parts[C2.partitions[0].part_of(i)];
        part.erase(std::find(part.begin(), part.end(), i));
        PartialWord w = intact(c);
        w[i].reset();
        for (auto& I : subsets(part, 2)) EXPECT_EQ(local_recover(C2, w, i, 0, I).symbol, c[i]);
    }
    EXPECT_THROW(btv_code(3, 2, 3), DomainError);
    EXPECT_THROW(btv_code(3, 9, 2), DomainError);
}

TEST(Availability2, FibersOfBothCovers) {
    auto C = availability2_code(3, 2, 1);
    const auto& F = make_field(3, {2});
    // points with x != 0 from the curve equation
    std::size_t count = 0;
    for (auto& a : F.elements())
        for (auto& b : F.elements()) count += !a.is_zero() && b.pow(3) + b == a.pow(4);
    EXPECT_EQ(C.length(), count);
    EXPECT_EQ(C.length(), 24u);
    EXPECT_EQ(C.dimension(), 6u);
    ASSERT_EQ(C.availability(), 2u);
    EXPECT_EQ(C.partitions[0].parts.size(), 8u);
    EXPECT_EQ(C.partitions[0].locality, 2);
    EXPECT_EQ(C.partitions[1].parts.size(), 6u);
    EXPECT_EQ(C.partitions[1].locality, 3);
    // n = s (l1 + 1)(l2 + 1) with s = 2
    EXPECT_EQ(C.length() % 12, 0u);
    EXPECT_GE(static_cast<long>(min_distance(C.code)), C.designed_distance);
    Rng rng(13);
    check_all_single_erasures(C, 0, 2, rng);
    check_all_single_erasures(C, 1, 3, rng);
}

TEST(Availability2, SecondRecoverySetAfterDamage) {
    auto C = availability2_code(3, 2, 1);
    Rng rng(17);
    Vector c = random_codeword(C.code, rng);
    for (std::size_t i = 0; i < C.length(); ++i) {
        const auto& xf = C.partitions[0].parts[C.partitions[0].part_of(i)];
        for (auto j : xf) {
            if (j == i) continue;
            PartialWord w = intact(c);
            w[i].reset();
            w[j].reset();
            EXPECT_THROW(local_recover(C, w, i, 0), DomainError);
            auto r = local_recover_any(C, w, i);
            EXPECT_EQ(r.partition, 1u);
            EXPECT_EQ(r.symbol, c[i]);
        }
    }
}

TEST(Availability2, ConstantFunctions) {
    auto C = availability2_code(3, 0, 0);
    EXPECT_EQ(C.partitions[0].local_distance, 3);
    EXPECT_EQ(C.partitions[1].local_distance, 4);
    EXPECT_THROW(availability2_code(3, 3, 0), DomainError);
    EXPECT_THROW(availability2_code(3, 0, 2), DomainError);
}
