/**
 * @file ag_code.hpp
 * @brief Evaluation codes C_L, residue codes C_Ω, generalized Reed-Solomon codes and classical Goppa codes.
 *
 * Every constructor computes the code from Riemann-Roch bases and then checks the identities relating
 * the different descriptions; a failed check throws AssertionFailure.
 */
#pragma once

#include <memory>
#include <optional>

#include "curve.hpp"
#include "linear_code.hpp"

namespace agc {

enum class Family { CL, COmega, GRS, Goppa };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::CL:
            return "CL";
        case Family::COmega:
            return "COmega";
        case Family::GRS:
            return "GRS";
        case Family::Goppa:
            return "Goppa";
    }
    return "?";
}

struct AGCode {
    LinearCode code;
    std::shared_ptr<const CurveBackend> backend;
    std::vector<Place> points;
    Divisor G;
    Family family = Family::CL;
    /// Functions whose evaluation vectors span the code over the backend field (for Goppa codes: span the parent).
    std::vector<CurveFunction> basis;
    /// The divisor G' with code = C_L(G'); equals G for CL codes.
    Divisor evaluation_divisor;
    /// Designed distance d* (may be <= 0, in which case it carries no information).
    long designed_distance = 0;
    /// P^1 only: whether C_Ω was also rebuilt from the logarithmic differential.
    bool differential_cross_checked = false;

    Vector grs_x, grs_y;
    std::optional<Polynomial> goppa_polynomial;
    std::shared_ptr<const AGCode> parent;  // Goppa: C_Ω over the big field

    std::size_t length() const { return code.length(); }
    std::size_t dimension() const { return code.dimension(); }
    const FiniteField& field() const { return code.field(); }
};

namespace detail {

inline void check_evaluation_points(const std::vector<Place>& P, const Divisor& G) {
    if (P.empty()) throw DomainError("at least one evaluation point is required");
    std::set<Place> seen;
    for (auto& pt : P) {
        if (!(pt.kind == Place::Kind::Affine || pt.kind == Place::Kind::Infinity)) throw DomainError("evaluation points must be rational");
        if (!seen.insert(pt).second) throw DomainError("evaluation points must be distinct");
        if (G.multiplicity(pt) != 0) throw DomainError("evaluation point " + pt.to_string() + " lies in the support of G");
    }
}

inline LinearCode evaluation_code(const CurveBackend& X, const std::vector<Place>& P, const std::vector<CurveFunction>& basis) {
    Matrix M(X.field(), 0, P.size());
    for (auto& f : basis) M.append_row(X.evaluate_all(f, P));
    return LinearCode(std::move(M));
}

}  // namespace detail

/**
 * @brief C_L(X, P, G): evaluations of L(G) at the points P.
 * @throws DomainError on repeated points or points in supp(G); CapabilityError if the backend cannot handle G.
 */
inline AGCode cl_code(std::shared_ptr<const CurveBackend> X, std::vector<Place> P, Divisor G) {
    detail::check_evaluation_points(P, G);
    AGCode c;
    c.basis = X->rr_basis(G);
    c.code = detail::evaluation_code(*X, P, c.basis);
    const long n = static_cast<long>(P.size());
    // k = ℓ(G) - ℓ(G - D_P) whenever both are computable
    auto l1 = X->try_rr_dim(G);
    auto l2 = X->try_rr_dim(G - Divisor::sum_of(P));
    detail::ensure(!l1 || static_cast<long>(c.basis.size()) == *l1, "rr_basis size disagrees with rr_dim");
    if (l1 && l2) detail::ensure(static_cast<long>(c.code.dimension()) == *l1 - *l2, "dimension of C_L differs from l(G) - l(G - D_P)");
    c.backend = std::move(X);
    c.points = std::move(P);
    c.G = G;
    c.evaluation_divisor = G;
    c.family = Family::CL;
    c.designed_distance = n - G.degree();
    return c;
}

/**
 * @brief C_Ω(X, P, G) = C_L(X, P, G)^⊥.
 *
 * On P^1 (all points affine) the code is also rebuilt as C_L((h')_0 + (n-2-deg h')P∞ - G), the divisor of
 * ω = dh/h plus D_P minus G, h = Π(x - x_i). On the Hermitian curve P must be all affine points and G = mP∞;
 * the code is checked against C_L((n + 2g - 2 - m)P∞).
 */
inline AGCode comega_code(std::shared_ptr<const CurveBackend> X, std::vector<Place> P, Divisor G) {
    detail::check_evaluation_points(P, G);
    AGCode cl = cl_code(X, P, G);
    AGCode c;
    c.code = dual(cl.code);
    const long n = static_cast<long>(P.size());
    const long g = X->genus();
    if (auto* line = dynamic_cast<const ProjectiveLine*>(X.get())) {
        bool all_affine = std::none_of(P.begin(), P.end(), [](const Place& pt) { return pt.is_infinity(); });
        if (all_affine) {
            const FiniteField& F = line->field();
            Vector xs;
            for (auto& pt : P) xs.push_back(F.element(pt.coords[0]));
            Polynomial h = vanishing_polynomial(F, xs);
            Polynomial hp = h.derivative();
            Divisor Gp = line->zero_divisor(hp) + Divisor::infinity_multiple(n - 2 - hp.degree()) - G;
            AGCode alt = cl_code(X, P, Gp);
            detail::ensure(alt.code == c.code, "C_Omega differs from the logarithmic-differential construction");
            c.basis = alt.basis;
            c.evaluation_divisor = Gp;
            c.differential_cross_checked = true;
        }
    } else if (auto* herm = dynamic_cast<const HermitianCurve*>(X.get())) {
        if (!G.is_one_point()) throw CapabilityError("Hermitian C_Omega needs G = m*P_inf");
        auto aff = herm->affine_points();
        if (P != aff) throw CapabilityError("Hermitian C_Omega needs the full affine point set in canonical order");
        long m = G.degree();
        Divisor Gp = Divisor::infinity_multiple(n + 2 * g - 2 - m);
        AGCode alt = cl_code(X, P, Gp);
        detail::ensure(alt.code == c.code, "C_Omega differs from C_L((n+2g-2-m)P_inf)");
        c.basis = alt.basis;
        c.evaluation_divisor = Gp;
    }
    c.backend = std::move(X);
    c.points = std::move(P);
    c.G = G;
    c.family = Family::COmega;
    c.designed_distance = G.degree() + 2 - 2 * g;
    return c;
}

/// Affine places of P^1 for the given elements.
inline std::vector<Place> line_points(const Vector& xs) {
    std::vector<Place> P;
    for (auto& x : xs) P.push_back(Place::affine(x));
    return P;
}

/**
 * @brief GRS_k(x, y) with generator rows (y_j x_j^i), 0 <= i < k.
 * Checked against C_L(P^1, x, (k-1)P∞ - div(h)) where h interpolates y.
 */
inline AGCode grs_code(const FiniteField& F, const Vector& x, const Vector& y, std::size_t k) {
    const std::size_t n = x.size();
    if (y.size() != n) throw DomainError("x and y must have the same length");
    if (k == 0 || k > n) throw DomainError("GRS dimension must satisfy 0 < k <= n");
    for (auto& v : y)
        if (v.is_zero()) throw DomainError("GRS multipliers must be nonzero");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (x[i] == x[j]) throw DomainError("GRS evaluation points must be distinct");
    Matrix M(F, 0, n);
    for (std::size_t i = 0; i < k; ++i) {
        Vector r;
        for (std::size_t j = 0; j < n; ++j) r.push_back(y[j] * x[j].pow(i));
        M.append_row(r);
    }
    auto X = std::make_shared<ProjectiveLine>(F);
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    for (std::size_t j = 0; j < n; ++j) pairs.push_back({x[j], y[j]});
    Polynomial h = lagrange_interpolate(F, pairs);
    Divisor G = Divisor::infinity_multiple(static_cast<long>(k) - 1) - X->divisor_of(RationalFunction(h));
    AGCode c = cl_code(X, line_points(x), G);
    LinearCode direct(std::move(M));
    detail::ensure(direct == c.code, "GRS generator differs from its P^1 description");
    c.family = Family::GRS;
    c.grs_x = x;
    c.grs_y = y;
    c.designed_distance = static_cast<long>(n) - static_cast<long>(k) + 1;
    return c;
}

inline AGCode reed_solomon(const FiniteField& F, const Vector& x, std::size_t k) { return grs_code(F, x, Vector(x.size(), F.one()), k); }

/**
 * @brief Classical Goppa code Γ(x, f, base) = subfield subcode of C_Ω(P^1, x, (f)_0 - P∞).
 *
 * The C_Ω code is cross-checked against the congruence kernel {c : Σ c_i/(X - x_i) ≡ 0 mod f}.
 */
inline AGCode goppa_code(const Vector& x, const Polynomial& f, const FiniteField& base) {
    const FiniteField& F = f.field();
    if (f.degree() < 1) throw DomainError("Goppa polynomial must have positive degree");
    if (!F.has_subfield(base)) throw DomainError(base.name() + " is not a subfield of " + F.name());
    for (auto& xi : x)
        if (f(xi).is_zero()) throw DomainError("Goppa polynomial vanishes at a support element");
    auto X = std::make_shared<ProjectiveLine>(F);
    Divisor G = X->zero_divisor(f) - Divisor::infinity_multiple(1);
    auto parent = std::make_shared<AGCode>(comega_code(X, line_points(x), G));
    // congruence parity checks: columns are the coefficients of 1/(X - x_i) mod f
    const std::size_t r = static_cast<std::size_t>(f.degree());
    Matrix H(F, r, x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Polynomial inv = inverse_mod(Polynomial::linear(F, x[i]), f);
        for (std::size_t t = 0; t < r; ++t) H.set(t, i, inv.coeff(t));
    }
    detail::ensure(LinearCode::from_parity_check(H) == parent->code, "Goppa congruence kernel differs from C_Omega");
    AGCode c;
    c.code = subfield_subcode(parent->code, base);
    c.backend = X;
    c.points = parent->points;
    c.G = G;
    c.evaluation_divisor = parent->evaluation_divisor;
    c.basis = parent->basis;
    c.family = Family::Goppa;
    c.designed_distance = f.degree() + 1;
    c.goppa_polynomial = f;
    c.parent = parent;
    return c;
}

struct DesignedParams {
    long k_lower = 0;
    std::optional<long> k_exact;
    long d_star = 0;
    std::optional<long> singleton_defect;
    bool in_window = false;  // 2g-2 < deg G < n for CL / COmega
};

/**
 * @brief Dimension and distance guaranteed by the degree of G.
 *
 * Inside the window 2g-2 < deg G < n the dimension is exact (deg G + 1 - g for C_L, n + g - 1 - deg G for C_Ω)
 * and the Singleton defect n + 1 - k - d* equals g. Outside it only bounds are reported.
 */
inline DesignedParams designed_params(const AGCode& c) {
    DesignedParams p;
    const long n = static_cast<long>(c.length());
    const long g = c.backend ? c.backend->genus() : 0;
    const long dg = c.G.degree();
    p.d_star = c.designed_distance;
    switch (c.family) {
        case Family::GRS:
            p.k_exact = static_cast<long>(c.dimension());
            p.k_lower = *p.k_exact;
            p.in_window = true;
            break;
        case Family::CL:
            p.in_window = 2 * g - 2 < dg && dg < n;
            if (p.in_window) {
                p.k_exact = dg + 1 - g;
            } else if (dg < n) {
                if (auto l = c.backend->try_rr_dim(c.G)) p.k_exact = *l;
            }
            p.k_lower = dg < n ? std::max(0L, dg + 1 - g) : 0;
            break;
        case Family::COmega:
            p.in_window = 2 * g - 2 < dg && dg < n;
            if (p.in_window) p.k_exact = n + g - 1 - dg;
            p.k_lower = std::max(0L, n - dg - 1);
            break;
        case Family::Goppa: {
            long m = c.parent->field().degree_over(c.field());
            p.k_lower = std::max(0L, n - m * c.goppa_polynomial->degree());
            break;
        }
    }
    if (p.k_exact) p.singleton_defect = n + 1 - *p.k_exact - p.d_star;
    return p;
}

/// Fractional linear map x ↦ (a x + b)/(c x + d) on P^1.
struct Mobius {
    FieldElement a, b, c, d;

    static Mobius identity(const FiniteField& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }

    Place apply(const Place& P) const {
        const FiniteField F = a.field();
        if (P.is_infinity()) {
            if (c.is_zero()) return Place::infinity();
            return Place::affine(a / c);
        }
        if (P.kind != Place::Kind::Affine) throw CapabilityError("Mobius maps act here on rational places only");
        FieldElement x = F.element(P.coords[0]);
        FieldElement den = c * x + d;
        if (den.is_zero()) return Place::infinity();
        return Place::affine((a * x + b) / den);
    }

    Mobius inverse() const { return {d, -b, -c, a}; }
};

struct CodeAutomorphism {
    std::vector<std::size_t> perm;  // perm[j] = index of σ(P_j)
    Vector v;                       // v_j = h(P_j)

    /// c ↦ (v_j c_{σ(j)})_j
    Vector apply(const Vector& c) const {
        Vector r(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) r[j] = v[j] * c[perm[j]];
        return r;
    }
};

/**
 * @brief Code automorphism induced by σ on a P^1 evaluation code, with witness h, div(h) = σ*G - G.
 * The returned map is verified to send every generator row into the code.
 */
inline CodeAutomorphism code_automorphism(const AGCode& code, const Mobius& s, const RationalFunction& h) {
    auto* line = dynamic_cast<const ProjectiveLine*>(code.backend.get());
    if (!line) throw CapabilityError("code automorphisms are implemented for P^1 codes");
    if (code.family == Family::Goppa) throw CapabilityError("subfield subcodes are not handled by code_automorphism");
    const auto& P = code.points;
    if ((s.a * s.d - s.b * s.c).is_zero()) throw DomainError("Mobius map is degenerate");
    std::map<Place, std::size_t> where;
    for (std::size_t j = 0; j < P.size(); ++j) where[P[j]] = j;
    CodeAutomorphism out;
    for (std::size_t j = 0; j < P.size(); ++j) {
        auto it = where.find(s.apply(P[j]));
        if (it == where.end()) throw DomainError("sigma does not permute the evaluation points");
        out.perm.push_back(it->second);
    }
    // σ*G: multiplicity of Q moves to σ^{-1}(Q)
    const Divisor& G = code.evaluation_divisor;
    Divisor pulled;
    Mobius inv = s.inverse();
    for (auto& [Q, m] : G.terms()) pulled.add(inv.apply(Q), m);
    detail::ensure(!h.is_zero(), "witness function must be nonzero");
    if (!(line->divisor_of(h) == pulled - G)) throw DomainError("div(h) differs from sigma*G - G");
    for (auto& pt : P) {
        FieldElement v = line->evaluate(CurveFunction(h), pt);
        if (v.is_zero()) throw DomainError("witness function vanishes at an evaluation point");
        out.v.push_back(v);
    }
    for (std::size_t i = 0; i < code.dimension(); ++i)
        detail::ensure(code.code.contains(out.apply(code.code.generator().row(i))), "mapped generator row left the code");
    return out;
}

/**
 * @brief On P^1, move G off the points P: returns (G', h) with G' = G + div(h) and supp(G') ∩ P = ∅.
 * Then L(G') = h^{-1} L(G). Only finite collisions are handled.
 */
inline std::pair<Divisor, RationalFunction> shift_off_points(const ProjectiveLine& X, const Divisor& G, const std::vector<Place>& P) {
    const FiniteField& F = X.field();
    Polynomial num = Polynomial::one(F), den = Polynomial::one(F);
    for (auto& pt : P) {
        long m = G.multiplicity(pt);
        if (m == 0) continue;
        if (pt.is_infinity()) throw CapabilityError("collision at infinity is not shifted automatically");
        Polynomial lin = pt.polynomial(F);
        if (m > 0) den *= pow(lin, static_cast<u64>(m));
        if (m < 0) num *= pow(lin, static_cast<u64>(-m));
    }
    RationalFunction h(num, den);
    return {G + X.divisor_of(h), h};
}

}  // namespace agc
