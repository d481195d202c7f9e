/**
 * @file lrc.hpp
 * @brief Locally recoverable codes: Tamo-Barg on P^1, Barg-Tamo-Vlăduţ on the Hermitian x-cover,
 * an availability-2 code from the two Hermitian covers, and local repair.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <map>
#include <set>

#include "decoding.hpp"

namespace agc {

struct Partition {
    std::vector<std::vector<std::size_t>> parts;
    long locality = 0;        // part size - 1
    long local_distance = 0;  // min over parts of d(C restricted to the part), checked exhaustively
    std::string name;

    /// Index of the part containing position i.
    std::size_t part_of(std::size_t i) const {
        for (std::size_t p = 0; p < parts.size(); ++p)
            if (std::find(parts[p].begin(), parts[p].end(), i) != parts[p].end()) return p;
        throw DomainError("position " + std::to_string(i) + " is in no recovery set");
    }
};

struct LrcCode {
    LinearCode code;
    std::vector<Place> points;
    std::vector<CurveFunction> basis;
    std::vector<Partition> partitions;  // one per recovery-set family; availability = partitions.size()
    long designed_distance = 0;
    std::string name;

    std::size_t length() const { return code.length(); }
    std::size_t dimension() const { return code.dimension(); }
    std::size_t availability() const { return partitions.size(); }
};

namespace detail {

/// Validates a partition of {0..n-1} into equal parts and measures its local distance exhaustively.
inline Partition certify_partition(const LinearCode& C, std::vector<std::vector<std::size_t>> parts, std::string name) {
    const std::size_t n = C.length();
    require(!parts.empty(), "a partition needs at least one part");
    std::vector<int> seen(n, 0);
    for (auto& p : parts) {
        require(p.size() == parts.front().size(), "recovery sets of one partition must have equal size");
        for (auto i : p) {
            require(i < n, "recovery set index out of range");
            require(!seen[i]++, "recovery sets overlap");
        }
    }
    require(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }), "recovery sets must cover every position");
    Partition P;
    P.locality = static_cast<long>(parts.front().size()) - 1;
    P.local_distance = LONG_MAX;
    for (auto& p : parts) {
        auto local = restrict(C, p);
        long d = local.dimension() == 0 ? static_cast<long>(p.size()) + 1 : static_cast<long>(min_distance(local));
        P.local_distance = std::min(P.local_distance, d);
    }
    ensure(P.local_distance >= 2, "a recovery set does not determine its symbols");
    P.parts = std::move(parts);
    P.name = std::move(name);
    return P;
}

inline LinearCode evaluate_basis(const CurveBackend& X, const std::vector<CurveFunction>& basis, const std::vector<Place>& pts) {
    Matrix M(X.field(), 0, pts.size());
    for (auto& f : basis) M.append_row(X.evaluate_all(f, pts));
    return LinearCode(std::move(M));
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------- partitions

enum class GroupKind { Multiplicative, Additive };

struct InvariantPartition {
    Vector points;                                // A, listed part by part
    std::vector<std::vector<std::size_t>> parts;  // indices into points
    Polynomial g;                                 // constant on every part
};

/**
 * @brief Cosets of a subgroup of order s together with an invariant polynomial of degree s.
 * Multiplicative: s | q-1, A = F_q^x, g = X^s. Additive: s = p^a, H = elements of index < p^a
 * (an F_p-subspace), A = F_q, g = Π_{h∈H}(X - h).
 */
inline InvariantPartition invariant_partition(const FiniteField& F, GroupKind kind, u64 s) {
    const u64 q = F.order();
    InvariantPartition out{{}, {}, Polynomial(F)};
    std::vector<bool> used(q, false);
    if (kind == GroupKind::Multiplicative) {
        detail::require(s >= 1 && (q - 1) % s == 0, "multiplicative cosets need s | q - 1");
        // subgroup of order s: powers of a primitive element to the (q-1)/s
        FieldElement z = F.primitive_element().pow((q - 1) / s);
        for (u64 r = 1; r < q; ++r) {
            if (used[r]) continue;
            std::vector<std::size_t> part;
            FieldElement c = F.element(r);
            for (u64 e = 0; e < s; ++e, c = c * z) {
                used[c.index()] = true;
                part.push_back(out.points.size());
                out.points.push_back(c);
            }
            out.parts.push_back(part);
        }
        out.g = Polynomial::monomial(F, F.one(), static_cast<long>(s));
    } else {
        u64 a = 0, pa = 1;
        while (pa < s) {
            pa *= F.characteristic();
            ++a;
        }
        detail::require(s >= 1 && pa == s && s <= q, "additive cosets need s = p^a <= q");
        Vector H;
        for (u64 i = 0; i < s; ++i) H.push_back(F.element(i));
        for (auto& h1 : H)
            for (auto& h2 : H) detail::ensure((h1 + h2).index() < s, "low-index elements do not form a subgroup");
        for (u64 r = 0; r < q; ++r) {
            if (used[r]) continue;
            std::vector<std::size_t> part;
            FieldElement c = F.element(r);
            for (auto& h : H) {
                FieldElement v = c + h;
                used[v.index()] = true;
                part.push_back(out.points.size());
                out.points.push_back(v);
            }
            out.parts.push_back(part);
        }
        out.g = vanishing_polynomial(F, H);
    }
    for (auto& part : out.parts)
        for (auto i : part) detail::ensure(out.g(out.points[i]) == out.g(out.points[part.front()]), "g is not constant on a part");
    return out;
}

// ---------------------------------------------------------------------------------------------- constructions

/**
 * @brief Tamo-Barg code: evaluations of Σ a_ij X^i g(X)^j, i < ℓ, j < k/ℓ, on A.
 * Distance at least n - k - k/ℓ + 2, which meets the Singleton-type locality bound.
 */
inline LrcCode tamo_barg(const Vector& A, const std::vector<std::vector<std::size_t>>& parts, const Polynomial& g, std::size_t k, std::size_t ell) {
    const FiniteField& F = g.field();
    const std::size_t n = A.size();
    detail::require(ell >= 1 && (n % (ell + 1)) == 0, "(l + 1) must divide n");
    detail::require(k >= ell && k % ell == 0, "l must divide k");
    detail::require(g.degree() == static_cast<long>(ell + 1), "g must have degree l + 1");
    detail::require(k + k / ell - 2 < n, "need k + k/l - 2 < n");
    for (auto& p : parts) {
        detail::require(p.size() == ell + 1, "recovery sets must have size l + 1");
        for (auto i : p) detail::require(i < n && g(A[i]) == g(A[p.front()]), "g must be constant on every part");
    }
    auto X = std::make_shared<ProjectiveLine>(F);
    LrcCode c;
    c.points = line_points(A);
    Polynomial gj = Polynomial::one(F);
    for (std::size_t j = 0; j < k / ell; ++j, gj = gj * g)
        for (std::size_t i = 0; i < ell; ++i) c.basis.push_back(CurveFunction(RationalFunction(Polynomial::monomial(F, F.one(), static_cast<long>(i)) * gj)));
    c.code = detail::evaluate_basis(*X, c.basis, c.points);
    detail::ensure(c.code.dimension() == k, "Tamo-Barg evaluation map is not injective");
    c.partitions.push_back(detail::certify_partition(c.code, parts, "cosets"));
    c.designed_distance = static_cast<long>(n) - static_cast<long>(k) - static_cast<long>(k / ell) + 2;
    c.name = "Tamo-Barg";
    return c;
}

namespace detail {

/// Affine Hermitian points grouped by x (fibers of the x-map) in canonical order.
inline std::vector<std::vector<std::size_t>> group_by(const std::vector<Place>& pts, std::size_t coord) {
    std::map<u64, std::vector<std::size_t>> m;
    for (std::size_t i = 0; i < pts.size(); ++i) m[pts[i].coords[coord]].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, v] : m) out.push_back(v);
    return out;
}

}  // namespace detail

/**
 * @brief Barg-Tamo-Vlăduţ code on the Hermitian curve over the x-line: f = Σ_{i<s} f_i(x) y^i with
 * deg f_i <= m. Locality ℓ = q0 - 1, local distance ℓ - s + 2, k = s(m + 1),
 * d >= n - (s - 1)(q0 + 1) - q0·m (containment in C_L with the pole order of y).
 */
inline LrcCode btv_code(u64 q0, long m, long s) {
    auto H = std::make_shared<HermitianCurve>(q0);
    const FiniteField& F = H->field();
    const long ell = static_cast<long>(q0) - 1;
    detail::require(s >= 1 && s <= ell, "BTV needs 1 <= s <= q0 - 1");
    detail::require(m >= 0, "BTV needs deg G >= 0");
    LrcCode c;
    c.points = H->affine_points();
    const long n = static_cast<long>(c.points.size());
    c.designed_distance = n - (s - 1) * static_cast<long>(q0 + 1) - static_cast<long>(q0) * m;
    if (c.designed_distance <= 0) throw DomainError("BTV distance bound is not positive for these parameters");
    for (long i = 0; i < s; ++i)
        for (long a = 0; a <= m; ++a) c.basis.push_back(CurveFunction(HermitianFunction::monomial(F, q0, static_cast<unsigned>(a), static_cast<unsigned>(i), F.one())));
    c.code = detail::evaluate_basis(*H, c.basis, c.points);
    detail::ensure(static_cast<long>(c.code.dimension()) == s * (m + 1), "BTV evaluation map is not injective");
    auto P = detail::certify_partition(c.code, detail::group_by(c.points, 0), "x-fibers");
    detail::ensure(P.locality == ell && P.local_distance == ell - s + 2, "BTV local code is not the expected Reed-Solomon code");
    c.partitions.push_back(std::move(P));
    c.name = "BTV";
    return c;
}

/**
 * @brief Availability-2 code on the Hermitian points with x != 0 from the monomials x^i y^j, i <= a, j <= b.
 * Recovery sets are the x-fibers (size q0) and the y-fibers (size q0 + 1).
 */
inline LrcCode availability2_code(u64 q0, long a, long b) {
    auto H = std::make_shared<HermitianCurve>(q0);
    const FiniteField& F = H->field();
    detail::require(a >= 0 && a <= static_cast<long>(q0) - 1, "availability-2 needs 0 <= a <= q0 - 1");
    detail::require(b >= 0 && b <= static_cast<long>(q0) - 2, "availability-2 needs 0 <= b <= q0 - 2");
    LrcCode c;
    for (auto& P : H->affine_points())
        if (P.coords[0] != 0) c.points.push_back(P);
    for (long j = 0; j <= b; ++j)
        for (long i = 0; i <= a; ++i) c.basis.push_back(CurveFunction(HermitianFunction::monomial(F, q0, static_cast<unsigned>(i), static_cast<unsigned>(j), F.one())));
    c.code = detail::evaluate_basis(*H, c.basis, c.points);
    detail::ensure(static_cast<long>(c.code.dimension()) == (a + 1) * (b + 1), "availability-2 evaluation map is not injective");
    c.partitions.push_back(detail::certify_partition(c.code, detail::group_by(c.points, 0), "x-fibers"));
    c.partitions.push_back(detail::certify_partition(c.code, detail::group_by(c.points, 1), "y-fibers"));
    c.designed_distance = static_cast<long>(c.points.size()) - static_cast<long>(q0) * a - static_cast<long>(q0 + 1) * b;
    c.name = "availability-2";
    return c;
}

// ---------------------------------------------------------------------------------------------- repair

using PartialWord = std::vector<std::optional<FieldElement>>;  // nullopt = erased

struct LocalRecovery {
    FieldElement symbol;
    std::vector<std::size_t> downloaded;
    std::size_t partition = 0;
};

/**
 * @brief Recover position i from its recovery set in partition `which`.
 *
 * Downloads |A(i)| - ρ + 1 intact symbols (the first ones, or exactly `subset` when given); any such set
 * determines the local codeword because the local code has distance ρ. Throws DomainError when the
 * recovery set has too few intact symbols.
 */
inline LocalRecovery local_recover(const LrcCode& C, const PartialWord& w, std::size_t i, std::size_t which = 0,
                                   std::optional<std::vector<std::size_t>> subset = std::nullopt) {
    detail::require(w.size() == C.length(), "word has the wrong length");
    detail::require(i < C.length(), "position out of range");
    detail::require(which < C.partitions.size(), "no such partition");
    const Partition& P = C.partitions[which];
    const auto& part = P.parts[P.part_of(i)];
    const std::size_t need = part.size() - static_cast<std::size_t>(P.local_distance) + 1;
    std::vector<std::size_t> I;
    if (subset) {
        for (auto j : *subset) {
            detail::require(j != i && std::find(part.begin(), part.end(), j) != part.end(), "download set must lie in the recovery set of i");
            detail::require(w[j].has_value(), "download set contains an erased symbol");
        }
        I = *subset;
        std::sort(I.begin(), I.end());
        detail::require(std::adjacent_find(I.begin(), I.end()) == I.end(), "repeated download index");
    } else {
        for (auto j : part)
            if (j != i && w[j] && I.size() < need) I.push_back(j);
    }
    if (I.size() < need)
        throw DomainError("recovery set of position " + std::to_string(i) + " in " + P.name + " has only " + std::to_string(I.size()) + " intact symbols, " +
                          std::to_string(need) + " needed");
    std::vector<std::size_t> cols = I;
    cols.push_back(i);
    auto local = restrict(C.code, cols);
    Vector y;
    for (auto j : I) y.push_back(*w[j]);
    y.push_back(C.code.field().zero());
    auto r = erasure_decode(local, y, {I.size()});
    if (r.status != SolveStatus::Unique) throw DomainError("download set does not determine the erased symbol");
    return {r.error.back() * C.code.field().from_integer(-1), I, which};
}

/// Tries each partition in turn (the availability mechanism).
inline LocalRecovery local_recover_any(const LrcCode& C, const PartialWord& w, std::size_t i) {
    std::string why;
    for (std::size_t p = 0; p < C.partitions.size(); ++p) {
        try {
            return local_recover(C, w, i, p);
        } catch (const DomainError& e) {
            why += std::string(why.empty() ? "" : "; ") + e.what();
        }
    }
    throw DomainError(why);
}

}  // namespace agc
