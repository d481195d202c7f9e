/**
 * @file secret_sharing.hpp
 * @brief Shamir sharing and a checker for arithmetic secret sharing schemes C ⊆ F^k × F^n.
 */
#pragma once

#include "linear_code.hpp"
#include "polynomial.hpp"
#include "rng.hpp"

namespace agc {

struct ShamirScheme {
    FiniteField field;
    Vector points;  // x_1..x_n, distinct and nonzero
    std::size_t threshold = 1;

    ShamirScheme(FiniteField F, Vector xs, std::size_t t) : field(std::move(F)), points(std::move(xs)), threshold(t) {
        detail::require(!points.empty() && points.size() < field.order(), "Shamir needs 1 <= n < q");
        detail::require(t >= 1 && t <= points.size(), "threshold must satisfy 1 <= t <= n");
        for (std::size_t i = 0; i < points.size(); ++i) {
            detail::require(!points[i].is_zero(), "evaluation points must be nonzero");
            for (std::size_t j = 0; j < i; ++j) detail::require(points[i] != points[j], "evaluation points must be distinct");
        }
    }

    std::size_t players() const { return points.size(); }

    /// Shares P(x_i) of a random P with deg P <= t - 1 and P(0) = s.
    Vector share(const FieldElement& s, u64 seed) const {
        Rng rng(seed);
        std::vector<FieldElement> c{s};
        for (std::size_t i = 1; i < threshold; ++i) c.push_back(field.element(rng.below(field.order())));
        Polynomial P(field, c);
        Vector out;
        for (auto& x : points) out.push_back(P(x));
        return out;
    }

    /// Secret from shares of players `who` (at least t of them).
    FieldElement reconstruct(const std::vector<std::size_t>& who, const Vector& shares) const { return interpolate_at_zero(who, shares, threshold); }

    /// s·s~ from products of shares of at least 2t - 1 players.
    FieldElement product_reconstruct(const std::vector<std::size_t>& who, const Vector& product_shares) const {
        return interpolate_at_zero(who, product_shares, 2 * threshold - 1);
    }

    /// Rows (P(0), P(x_1), ..., P(x_n)) for P = 1, X, ..., X^{t-1}: a code in F^1 × F^n.
    LinearCode as_code() const {
        Matrix M(field, 0, players() + 1);
        for (std::size_t j = 0; j < threshold; ++j) {
            Vector r{j == 0 ? field.one() : field.zero()};
            for (auto& x : points) r.push_back(x.pow(j));
            M.append_row(r);
        }
        return LinearCode(std::move(M));
    }

   private:
    FieldElement interpolate_at_zero(const std::vector<std::size_t>& who, const Vector& shares, std::size_t need) const {
        detail::require(who.size() == shares.size(), "one share per player is required");
        if (who.size() < need) throw DomainError("need at least " + std::to_string(need) + " shares, got " + std::to_string(who.size()));
        std::vector<std::pair<FieldElement, FieldElement>> pairs;
        for (std::size_t i = 0; i < who.size(); ++i) {
            detail::require(who[i] < players(), "player index out of range");
            pairs.push_back({points[who[i]], shares[i]});
        }
        // the first `need` shares determine the value; extra shares must agree with it
        std::vector<std::pair<FieldElement, FieldElement>> base(pairs.begin(), pairs.begin() + static_cast<long>(need));
        Polynomial P = lagrange_interpolate(field, base);
        for (auto& [x, y] : pairs)
            if (P(x) != y) throw DomainError("shares are inconsistent");
        return P(field.zero());
    }
};

// ---------------------------------------------------------------------------------------------- ASSS

struct AsssViolation {
    std::string property;  // "disconnectedness", "uniformity" or "reconstruction"
    std::vector<std::size_t> B;
};

struct AsssReport {
    bool disconnected = true, uniform = true, reconstructing = true;
    std::vector<AsssViolation> violations;
    bool ok() const { return disconnected && reconstructing; }
};

namespace detail {

template <class F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
    std::vector<std::size_t> B(r);
    for (std::size_t i = 0; i < r; ++i) B[i] = i;
    if (r > n) return;
    for (;;) {
        f(B);
        std::size_t i = r;
        while (i > 0 && B[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++B[i - 1];
        for (std::size_t j = i; j < r; ++j) B[j] = B[j - 1] + 1;
    }
}

inline std::size_t restricted_dim(const LinearCode& C, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return 0;
    return C.generator().select_columns(cols).rank();
}

inline u64 binomial_guarded(std::size_t n, std::size_t r, u64 guard) {
    long double v = 1;
    for (std::size_t i = 0; i < r; ++i) v = v * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    if (v > static_cast<long double>(guard)) throw GuardExceeded("too many subsets to enumerate");
    return static_cast<u64>(v + 0.5L);
}

}  // namespace detail

/**
 * @brief Checks (n, t, d, r) arithmetic secret sharing for C ⊆ F^k × F^n (the first k coordinates are the secret).
 *
 * (i) for |B| = t, C → F^k × π_B(C) is onto, i.e. dim π_{0∪B}(C) = k + dim π_B(C); uniformity
 * additionally asks π_B(C) = F^t. (ii) for |B| = r, no word of C^{⋆d} vanishing on B is nonzero on
 * the secret, i.e. dim π_{0∪B}(C^{⋆d}) = dim π_B(C^{⋆d}).
 */
inline AsssReport asss_verify(const LinearCode& C, std::size_t k, std::size_t t, unsigned d, std::size_t r, u64 guard = 1u << 14) {
    detail::require(k >= 1 && k < C.length(), "need 1 <= k < length");
    detail::require(d >= 1, "d must be positive");
    const std::size_t n = C.length() - k;
    detail::require(t <= n && r <= n, "subset sizes cannot exceed n");
    detail::binomial_guarded(n, t, guard);
    detail::binomial_guarded(n, r, guard);
    AsssReport rep;
    std::vector<std::size_t> secret(k);
    for (std::size_t i = 0; i < k; ++i) secret[i] = i;
    detail::for_each_subset(n, t, [&](const std::vector<std::size_t>& B) {
        std::vector<std::size_t> cols = secret, shares;
        for (auto b : B) shares.push_back(k + b);
        cols.insert(cols.end(), shares.begin(), shares.end());
        std::size_t dB = detail::restricted_dim(C, shares);
        if (detail::restricted_dim(C, cols) != k + dB) {
            rep.disconnected = false;
            rep.violations.push_back({"disconnectedness", B});
        }
        if (dB != t) {
            rep.uniform = false;
            rep.violations.push_back({"uniformity", B});
        }
    });
    LinearCode D = power(C, d);
    detail::for_each_subset(n, r, [&](const std::vector<std::size_t>& B) {
        std::vector<std::size_t> cols = secret, shares;
        for (auto b : B) shares.push_back(k + b);
        cols.insert(cols.end(), shares.begin(), shares.end());
        if (detail::restricted_dim(D, cols) != detail::restricted_dim(D, shares)) {
            rep.reconstructing = false;
            rep.violations.push_back({"reconstruction", B});
        }
    });
    return rep;
}

}  // namespace agc
