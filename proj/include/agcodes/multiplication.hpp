/**
 * @file multiplication.hpp
 * @brief Symmetric bilinear multiplication algorithms for GF(q^k)/GF(q) by evaluation and interpolation on P^1.
 */
#pragma once

#include "polynomial.hpp"

namespace agc {

/// x·x' = Σ α_i(x) β_i(x') ω_i, with α_i, β_i linear forms given by their coefficient vectors.
struct BilinearAlgorithm {
    FiniteField base, ext;
    std::vector<Vector> alpha, beta;  // over base, each of length [ext : base]
    Vector omega;                     // over ext
    Vector points;                    // evaluation points used by cc_build

    std::size_t length() const { return omega.size(); }
    bool symmetric() const { return alpha == beta; }

    FieldElement multiply(const FieldElement& x, const FieldElement& y) const {
        auto cx = ext.coordinates(x, base), cy = ext.coordinates(y, base);
        FieldElement acc = ext.zero();
        for (std::size_t i = 0; i < length(); ++i) {
            FieldElement a = inner_form(alpha[i], cx), b = inner_form(beta[i], cy);
            acc = acc + ext.embed(a * b) * omega[i];
        }
        return acc;
    }

    /// Exact check on all basis pairs (enough by bilinearity).
    bool verify() const {
        const int k = ext.degree_over(base);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                FieldElement x = basis_element(a), y = basis_element(b);
                if (multiply(x, y) != x * y) return false;
            }
        return true;
    }

    FieldElement basis_element(int a) const {
        std::vector<FieldElement> c(static_cast<std::size_t>(ext.degree_over(base)), base.zero());
        c[static_cast<std::size_t>(a)] = base.one();
        return ext.from_coordinates(c, base);
    }

   private:
    FieldElement inner_form(const Vector& form, const std::vector<FieldElement>& c) const {
        FieldElement s = base.zero();
        for (std::size_t j = 0; j < c.size(); ++j) s = s + form[j] * c[j];
        return s;
    }
};

/**
 * @brief Length-(2k-1) symmetric algorithm: G = (k-1)P∞, Q the defining polynomial of GF(q^k).
 *
 * x ↦ f_x of degree < k (its coordinates), evaluated at 2k-1 points of GF(q); the pointwise product is
 * interpolated (degree <= 2k-2) and reduced mod Q. ω_i is the Lagrange basis polynomial L_i mod Q.
 */
inline BilinearAlgorithm cc_build(const FiniteField& base, int k) {
    detail::require(k >= 1, "extension degree must be positive");
    const u64 n = 2 * static_cast<u64>(k) - 1;
    if (n > base.order()) throw DomainError("need 2k - 1 <= q rational points; have q = " + std::to_string(base.order()));
    BilinearAlgorithm A;
    A.base = base;
    A.ext = extend_field(base, k);
    Polynomial Q(base, A.ext.modulus());
    if (k == 1) Q = Polynomial::linear(base, base.zero());
    detail::ensure(Q.degree() == k && is_irreducible(Q), "defining polynomial of the extension is not irreducible of degree k");
    for (u64 i = 0; i < n; ++i) A.points.push_back(base.element(i));
    for (u64 i = 0; i < n; ++i) {
        Vector form;
        for (int j = 0; j < k; ++j) form.push_back(A.points[i].pow(static_cast<u64>(j)));
        A.alpha.push_back(form);
        std::vector<std::pair<FieldElement, FieldElement>> pairs;
        for (u64 j = 0; j < n; ++j) pairs.push_back({A.points[j], j == i ? base.one() : base.zero()});
        Polynomial L = lagrange_interpolate(base, pairs) % Q;
        std::vector<FieldElement> c;
        for (int j = 0; j < k; ++j) c.push_back(L.coeff(static_cast<std::size_t>(j)));
        A.omega.push_back(A.ext.from_coordinates(c, base));
    }
    A.beta = A.alpha;
    detail::ensure(A.verify(), "bilinear algorithm does not reproduce multiplication");
    return A;
}

}  // namespace agc
