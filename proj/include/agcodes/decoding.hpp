/**
 * @file decoding.hpp
 * @brief Erasure decoding, the basic (error-locating) algorithm, error-correcting pairs and Guruswami-Sudan.
 *
 * Decoding failure is an ordinary result (DecodeResult::ok == false), never an exception. Exceptions are
 * reserved for violated preconditions.
 */
#pragma once

#include <memory>
#include <set>
#include <string>

#include "ag_code.hpp"

namespace agc {

struct ErasureResult {
    SolveStatus status = SolveStatus::NoSolution;
    Vector error;  // valid when status == Unique
};

/**
 * @brief Solve H e^T = H y^T with e supported in J.
 * Unique when |J| < d(C) and the true error is supported in J.
 */
inline ErasureResult erasure_decode(const LinearCode& C, const Vector& y, const std::vector<std::size_t>& J) {
    const std::size_t n = C.length();
    if (y.size() != n) throw DomainError("received word has the wrong length");
    std::set<std::size_t> seen;
    for (auto j : J) {
        if (j >= n) throw DomainError("erasure index out of range");
        if (!seen.insert(j).second) throw DomainError("repeated erasure index");
    }
    const FiniteField& F = C.field();
    const Matrix& H = C.parity_check();
    Vector s = H.apply(y);
    ErasureResult r;
    if (J.empty()) {
        r.status = weight(s) == 0 ? SolveStatus::Unique : SolveStatus::NoSolution;
        if (r.status == SolveStatus::Unique) r.error = zero_vector(F, n);
        return r;
    }
    std::vector<std::size_t> cols(J.begin(), J.end());
    if (H.rows() == 0) {
        // every word is a codeword; e = 0 is a solution and any vector on J is another
        r.status = SolveStatus::Ambiguous;
        return r;
    }
    auto sol = solve(H.select_columns(cols), s);
    r.status = sol.status;
    if (sol.status != SolveStatus::NoSolution) {
        r.error = zero_vector(F, n);
        for (std::size_t i = 0; i < cols.size(); ++i) r.error[cols[i]] = sol.solution[i];
        if (sol.status == SolveStatus::Ambiguous) r.error.clear();
    }
    return r;
}

struct DecodeResult {
    bool ok = false;
    Vector error;
    Vector codeword;
    std::string reason;  // why decoding failed

    static DecodeResult fail(std::string why) {
        DecodeResult r;
        r.reason = std::move(why);
        return r;
    }
};

namespace detail {

inline std::vector<std::size_t> zero_positions(const Vector& a) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].is_zero()) J.push_back(i);
    return J;
}

/// Finishes a decoder once an error-locating vector a is known.
inline DecodeResult locate_and_solve(const LinearCode& C, const Vector& y, const Vector& a, std::size_t t) {
    auto er = erasure_decode(C, y, zero_positions(a));
    if (er.status == SolveStatus::NoSolution) return DecodeResult::fail("erasure system has no solution");
    if (er.status == SolveStatus::Ambiguous) return DecodeResult::fail("erasure system has several solutions");
    if (weight(er.error) > t) return DecodeResult::fail("located error is heavier than t");
    DecodeResult r;
    r.ok = true;
    r.error = er.error;
    r.codeword = y - er.error;
    ensure(C.contains(r.codeword), "decoder produced a non-codeword");
    return r;
}

/// An auxiliary rational place outside the evaluation points (P∞ for both backends).
inline Place auxiliary_place(const AGCode& code) {
    for (auto& P : code.points)
        if (P.is_infinity()) throw CapabilityError("decoders need P_inf outside the evaluation points");
    return Place::infinity();
}

/// The divisor G' with code = C_L(G').
inline const Divisor& evaluation_divisor_of(const AGCode& code) {
    if (code.family == Family::Goppa) throw CapabilityError("decode Goppa codes through goppa_decode");
    if (code.family == Family::COmega && code.basis.empty())
        throw CapabilityError("this C_Omega code has no C_L description");
    return code.evaluation_divisor;
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------- basic

/**
 * @brief Basic decoding of C_L(G') with F = (t + g)·P∞.
 *
 * Requires 2t + g <= d* - 1 where d* = n - deg G'. K_y = {λ ∈ L(F) : λ ⋆ y ∈ C_L(G' + F)} is the kernel
 * of the linear map c ↦ H_{G'+F}·(Σ c_i λ_i(P) ⋆ y).
 */
inline DecodeResult basic_decode(const AGCode& code, const Vector& y, std::size_t t) {
    const Divisor& G = detail::evaluation_divisor_of(code);
    const CurveBackend& X = *code.backend;
    const long n = static_cast<long>(code.length()), g = X.genus();
    const long dstar = n - G.degree();
    if (y.size() != code.length()) throw DomainError("received word has the wrong length");
    if (2 * static_cast<long>(t) + g > dstar - 1) throw DomainError("basic decoding needs 2t + g <= d* - 1");
    Place Q = detail::auxiliary_place(code);
    Divisor F = Divisor(Q, static_cast<long>(t) + g);
    auto LF = X.rr_basis(F);
    std::vector<Vector> a;
    for (auto& f : LF) a.push_back(X.evaluate_all(f, code.points));
    auto big = cl_code(code.backend, code.points, G + F).code;
    const Matrix& H = big.parity_check();
    Matrix M(code.field(), H.rows(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Vector col = H.apply(star(a[i], y));
        for (std::size_t r = 0; r < H.rows(); ++r) M.set(r, i, col[r]);
    }
    Matrix K = M.kernel();
    if (K.rows() == 0) return DecodeResult::fail("K_y = {0}");
    Vector lam = zero_vector(code.field(), code.length());
    for (std::size_t i = 0; i < a.size(); ++i) lam = lam + K(0, i) * a[i];
    if (weight(lam) == 0) return DecodeResult::fail("error locator vanishes on every point");
    return detail::locate_and_solve(code.code, y, lam, t);
}

// ---------------------------------------------------------------------------------------------- ECP

struct ECP {
    LinearCode A, B, C;
    std::size_t t = 0;
    long dA_lower = 0, dC_lower = 0;
    bool dA_exact = false, dC_exact = false;
};

/**
 * @brief Certify (A, B) as a t-error-correcting pair for C.
 *
 * dA_lower and dC_lower are proven lower bounds on d(A) and d(C); when absent (<= 0) and the code is
 * small the exact distance is computed. Throws DomainError naming the first axiom that fails.
 */
inline ECP make_ecp(LinearCode A, LinearCode B, LinearCode C, std::size_t t, long dA_lower = 0, long dC_lower = 0) {
    const std::size_t n = C.length();
    if (A.length() != n || B.length() != n) throw DomainError("ECP codes must have the same length");
    ECP e;
    e.t = t;
    auto exact = [](const LinearCode& X, long& bound, bool& flag) {
        u64 q = X.field().order(), total = 1;
        bool small = X.dimension() > 0;
        for (std::size_t i = 0; i < X.dimension() && small; ++i) {
            total *= q;
            small = total <= (u64{1} << 16);
        }
        if (small) {
            bound = static_cast<long>(min_distance(X));
            flag = true;
        }
    };
    e.dA_lower = dA_lower;
    e.dC_lower = dC_lower;
    exact(A, e.dA_lower, e.dA_exact);
    exact(C, e.dC_lower, e.dC_exact);
    LinearCode Cd = dual(C);
    const Matrix &GA = A.generator(), &GB = B.generator();
    for (std::size_t i = 0; i < GA.rows(); ++i)
        for (std::size_t j = 0; j < GB.rows(); ++j)
            if (!Cd.contains(star(GA.row(i), GB.row(j)))) throw DomainError("ECP1 fails: A*B is not inside the dual of C");
    if (A.dimension() <= t) throw DomainError("ECP2 fails: dim A <= t");
    if (n - B.dimension() <= t) throw DomainError("ECP3 fails: dim B^perp <= t");
    if (e.dA_lower + e.dC_lower <= static_cast<long>(n)) throw DomainError("ECP4 not certified: d(A) + d(C) <= n from the available bounds");
    if (2 * static_cast<long>(t) > e.dC_lower - 1) throw DomainError("ECP decoding needs t <= (d(C) - 1)/2");
    e.A = std::move(A);
    e.B = std::move(B);
    e.C = std::move(C);
    return e;
}

/**
 * @brief Standard pair for an AG code with F = (t + g)·P∞.
 *
 * C_L(G'): A = C_L(F), B = C_Ω(G' + F). C_Ω(G): A = C_L(F), B = C_L(G - F). Goppa codes use their C_Ω parent.
 */
inline ECP build_ecp(const AGCode& code, std::size_t t) {
    const AGCode& c = code.family == Family::Goppa ? *code.parent : code;
    const CurveBackend& X = *c.backend;
    const long n = static_cast<long>(c.length()), g = X.genus();
    Place Q = detail::auxiliary_place(c);
    Divisor F = Divisor(Q, static_cast<long>(t) + g);
    LinearCode A = cl_code(c.backend, c.points, F).code;
    const long dA = n - F.degree();
    if (c.family == Family::COmega) {
        LinearCode B = cl_code(c.backend, c.points, c.G - F).code;
        return make_ecp(A, B, c.code, t, dA, c.designed_distance);
    }
    const Divisor& G = c.evaluation_divisor;
    LinearCode B = dual(cl_code(c.backend, c.points, G + F).code);
    return make_ecp(A, B, c.code, t, dA, n - G.degree());
}

/// M = {a ∈ A : <a ⋆ y, b> = 0 for all b ∈ B}; a nonzero a locates the errors.
inline DecodeResult ecp_decode(const ECP& P, const Vector& y) {
    if (y.size() != P.C.length()) throw DomainError("received word has the wrong length");
    const Matrix &GA = P.A.generator(), &GB = P.B.generator();
    Matrix M(P.C.field(), GB.rows(), GA.rows());
    for (std::size_t i = 0; i < GA.rows(); ++i) {
        Vector ay = star(GA.row(i), y);
        for (std::size_t j = 0; j < GB.rows(); ++j) M.set(j, i, inner_product(ay, GB.row(j)));
    }
    Matrix K = M.kernel();
    if (K.rows() == 0) return DecodeResult::fail("M = {0}");
    Vector a = P.A.encode(K.row(0));
    return detail::locate_and_solve(P.C, y, a, P.t);
}

/// Decode a subfield-subcode Goppa code in its C_Ω supercode with t = ⌊deg f / 2⌋.
inline DecodeResult goppa_decode(const AGCode& code, const Vector& y) {
    if (code.family != Family::Goppa) throw DomainError("goppa_decode needs a Goppa code");
    const FiniteField& big = code.parent->field();
    const FiniteField& base = code.field();
    std::size_t t = static_cast<std::size_t>(code.goppa_polynomial->degree() / 2);
    ECP P = build_ecp(code, t);
    Vector Y;
    for (auto& v : y) Y.push_back(big.embed(v));
    auto r = ecp_decode(P, Y);
    if (!r.ok) return r;
    DecodeResult out;
    for (auto& v : r.error) {
        if (!big.in_subfield(v, base)) return DecodeResult::fail("error does not lie in the base field");
        out.error.push_back(big.restrict_to(v, base));
    }
    out.codeword = y - out.error;
    detail::ensure(code.code.contains(out.codeword), "Goppa decoder produced a non-codeword");
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------------------------- GS

struct GSParams {
    long s = 1, ell = 1;
    long deg_aux = 0;  ///< deg(F + ℓG)
    long t = 0;
    /// Largest certified radius for this (s, ℓ).
    long radius = 0;
};

namespace detail {

/// Does the integer t satisfy the radius inequality for (s, ℓ)? Exact: multiply through by 2s(ℓ+1).
inline bool gs_radius_ok(long n, long degG, long g, long t, long s, long ell) {
    // t <= n - n(s+1)/(2(ℓ+1)) - ℓ degG/(2s) - g/s
    __int128 lhs = static_cast<__int128>(t) * 2 * s * (ell + 1);
    __int128 rhs = static_cast<__int128>(n) * 2 * s * (ell + 1) - static_cast<__int128>(n) * (s + 1) * s - static_cast<__int128>(ell) * degG * (ell + 1) -
                   static_cast<__int128>(g) * 2 * (ell + 1);
    return lhs <= rhs;
}

/// Smallest integer D with D > ns(s+1)/(2(ℓ+1)) + ℓ degG/2 + g - 1.
inline long gs_min_aux(long n, long degG, long g, long s, long ell) {
    // 2(ℓ+1) D > n s (s+1) + ℓ(ℓ+1) degG + 2(ℓ+1)(g-1)
    __int128 num = static_cast<__int128>(n) * s * (s + 1) + static_cast<__int128>(ell) * (ell + 1) * degG + static_cast<__int128>(2) * (ell + 1) * (g - 1);
    __int128 den = 2 * (ell + 1);
    __int128 q = num / den;
    if (num < 0 && q * den != num) --q;  // floor
    return static_cast<long>(q + 1);
}

inline long gs_max_radius(long n, long degG, long g, long s, long ell) {
    long lo = -1, hi = n;
    while (lo < hi) {
        long mid = lo + (hi - lo + 1) / 2;
        if (gs_radius_ok(n, degG, g, mid, s, ell) && gs_min_aux(n, degG, g, s, ell) < s * (n - mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline long gs_ell_cap(long n, long degG, long s) { return degG > 0 ? std::max(s, 2 * s * n / degG + 1) : s * n; }

}  // namespace detail

/**
 * @brief Smallest (s, then ℓ), with s <= ℓ, meeting the radius inequality for t, and the smallest integer
 * deg(F + ℓG) inside the window (a)-(b). Throws DomainError naming the largest feasible t otherwise.
 */
inline GSParams gs_params(long n, long degG, long g, long t) {
    if (n <= 0 || t < 0 || g < 0 || degG < 0) throw DomainError("GS parameters need n > 0, t >= 0, g >= 0, deg G >= 0");
    long best_t = -1;
    for (long s = 1; s <= n; ++s) {
        for (long ell = s; ell <= detail::gs_ell_cap(n, degG, s); ++ell) {
            long D = detail::gs_min_aux(n, degG, g, s, ell);
            if (detail::gs_radius_ok(n, degG, g, t, s, ell) && D < s * (n - t)) {
                GSParams p;
                p.s = s;
                p.ell = ell;
                p.deg_aux = D;
                p.t = t;
                p.radius = detail::gs_max_radius(n, degG, g, s, ell);
                return p;
            }
            best_t = std::max(best_t, detail::gs_max_radius(n, degG, g, s, ell));
        }
    }
    throw DomainError("no GS parameters reach t = " + std::to_string(t) + "; largest feasible t is " + std::to_string(best_t));
}

struct GSResult {
    std::vector<Vector> codewords;  ///< sorted, each within distance t of y
    GSParams params;
    std::size_t unknowns = 0, equations = 0, rank = 0;
    std::size_t candidates = 0;  ///< roots of Q found before the distance filter
};

namespace detail {

/// Binomial coefficients C(j, b) mod p for j <= m.
inline std::vector<std::vector<u64>> binomials_mod(u64 p, std::size_t m) {
    std::vector<std::vector<u64>> C(m + 1, std::vector<u64>(m + 1, 0));
    for (std::size_t j = 0; j <= m; ++j) {
        C[j][0] = 1 % p;
        for (std::size_t b = 1; b <= j; ++b) C[j][b] = (C[j - 1][b - 1] + (b <= j - 1 ? C[j - 1][b] : 0)) % p;
    }
    return C;
}

using Bivariate = std::vector<Polynomial>;  // coefficient of Z^j

inline Bivariate substitute_shift(const Bivariate& R, const FieldElement& gamma, const std::vector<std::vector<u64>>& Cb) {
    const FiniteField& F = R.front().field();
    Bivariate out(R.size(), Polynomial(F));
    for (std::size_t b = 0; b < R.size(); ++b) {
        Polynomial acc(F);
        for (std::size_t j = b; j < R.size(); ++j) {
            if (R[j].is_zero() || Cb[j][b] == 0) continue;
            acc += R[j] * (F.from_integer(static_cast<long long>(Cb[j][b])) * gamma.pow(j - b));
        }
        out[b] = acc * Polynomial::monomial(F, F.one(), b);
    }
    return out;
}

/// Roth-Ruckenstein: all polynomial roots Z = p(x) of R with deg p < K.
inline void roth_ruckenstein(Bivariate R, std::size_t depth, std::size_t K, Vector& prefix, std::set<std::vector<u64>>& out,
                             const std::vector<std::vector<u64>>& Cb) {
    const FiniteField& F = R.front().field();
    if (R[0].is_zero()) {
        std::vector<u64> key;
        for (auto& c : prefix) key.push_back(c.index());
        key.resize(K, 0);
        out.insert(key);
    }
    if (depth == K) return;
    // divide out the largest power of x
    std::size_t m = SIZE_MAX;
    for (auto& c : R) {
        if (c.is_zero()) continue;
        std::size_t v = 0;
        while (c.coeff(v).is_zero()) ++v;
        m = std::min(m, v);
    }
    if (m == SIZE_MAX) return;
    for (auto& c : R)
        if (!c.is_zero()) c = divmod(c, Polynomial::monomial(F, F.one(), m)).first;
    std::vector<FieldElement> z;
    for (auto& c : R) z.push_back(c.coeff(0));
    Polynomial R0(F, z);
    if (R0.degree() < 1) return;
    for (auto& gamma : roots(R0)) {
        prefix.push_back(gamma);
        roth_ruckenstein(substitute_shift(R, gamma, Cb), depth + 1, K, prefix, out, Cb);
        prefix.pop_back();
    }
}

}  // namespace detail

/**
 * @brief Guruswami-Sudan list decoding of C_L(G') with F = (deg_aux - ℓ deg G')·P∞.
 *
 * Interpolation solves the s(s+1)/2 Taylor conditions per point. Roots are found by Roth-Ruckenstein on
 * P^1 and by a scan of L(G') (at most `guard` functions) on other backends.
 */
inline GSResult gs_list_decode(const AGCode& code, const Vector& y, long t, u64 guard = u64{1} << 20) {
    const Divisor& G = detail::evaluation_divisor_of(code);
    const CurveBackend& X = *code.backend;
    const FiniteField& F = code.field();
    const long n = static_cast<long>(code.length()), g = X.genus(), degG = G.degree();
    if (y.size() != code.length()) throw DomainError("received word has the wrong length");
    if (degG < 0) throw DomainError("GS needs deg G >= 0");
    GSResult res;
    res.params = gs_params(n, degG, g, t);
    const long s = res.params.s, ell = res.params.ell;
    Place Q = detail::auxiliary_place(code);
    Divisor Fd = Divisor(Q, res.params.deg_aux - ell * degG);

    // unknowns: coefficients of Q_j in a basis of L(F + (ℓ - j)G)
    std::vector<std::vector<CurveFunction>> basis(static_cast<std::size_t>(ell + 1));
    for (long j = 0; j <= ell; ++j) basis[static_cast<std::size_t>(j)] = X.rr_basis(Fd + (ell - j) * G);
    std::size_t U = 0;
    for (auto& b : basis) U += b.size();
    const std::size_t S = static_cast<std::size_t>(s);
    const std::size_t per_point = S * (S + 1) / 2;
    res.unknowns = U;
    res.equations = per_point * code.length();
    auto Cb = detail::binomials_mod(F.characteristic(), static_cast<std::size_t>(ell));

    Matrix M(F, res.equations, U);
    for (std::size_t i = 0; i < code.length(); ++i) {
        const Place& P = code.points[i];
        std::size_t col = 0;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (auto& phi : basis[j]) {
                Series ts = X.taylor(phi, P, S);
                std::size_t row = i * per_point;
                // coefficient of u^a V^b in φ(u) (y_i + V)^j, a + b < s
                for (std::size_t b = 0; b < S; ++b) {
                    FieldElement yb = F.zero();
                    if (b <= j && Cb[j][b] != 0) yb = F.from_integer(static_cast<long long>(Cb[j][b])) * y[i].pow(j - b);
                    for (std::size_t a = 0; a + b < S; ++a) M.set(row++, col, yb * ts[a]);
                }
                ++col;
            }
        }
    }
    res.rank = M.rank();
    Matrix K = M.kernel();
    detail::ensure(K.rows() > 0, "GS interpolation system has only the zero solution");
    std::vector<CurveFunction> Qj;
    {
        std::size_t col = 0;
        for (auto& b : basis) {
            std::optional<CurveFunction> acc;
            for (auto& phi : b) {
                CurveFunction term = scale(K(0, col++), phi);
                acc = acc ? add(*acc, term) : term;
            }
            if (!acc) acc = scale(F.zero(), X.rr_basis(Divisor())[0]);
            Qj.push_back(*acc);
        }
    }

    auto LG = X.rr_basis(G);
    std::vector<Vector> candidates;
    if (auto* line = dynamic_cast<const ProjectiveLine*>(&X)) {
        // Q(p·h_G) with Q_j = P_j·N_j/M_j and h_G = N_G/M_G; clear denominators to a polynomial R(x, Z)
        RationalFunction hG = line->normalizer(G);
        Polynomial L = Polynomial::one(F);
        std::vector<RationalFunction> terms;
        for (long j = 0; j <= ell; ++j) {
            RationalFunction qj = std::get<RationalFunction>(Qj[static_cast<std::size_t>(j)]);
            RationalFunction hj = RationalFunction::constant(F, F.one());
            for (long e = 0; e < j; ++e) hj = hj * hG;
            terms.push_back(qj * hj);
            if (!terms.back().is_zero()) L = lcm(L, terms.back().den());
        }
        detail::Bivariate R;
        for (auto& tm : terms) R.push_back(tm.is_zero() ? Polynomial(F) : tm.num() * (L / tm.den()));
        while (R.size() > 1 && R.back().is_zero()) R.pop_back();
        std::set<std::vector<u64>> roots_found;
        Vector prefix;
        if (R.size() > 1) detail::roth_ruckenstein(R, 0, LG.size(), prefix, roots_found, Cb);
        for (auto& key : roots_found) {
            Polynomial p = Polynomial::from_indices(F, key);
            RationalFunction f = RationalFunction(p) * hG;
            if (f.is_zero()) {
                candidates.push_back(zero_vector(F, code.length()));
                continue;
            }
            candidates.push_back(X.evaluate_all(CurveFunction(f), code.points));
        }
    } else {
        u64 total = 1;
        for (std::size_t i = 0; i < LG.size(); ++i) {
            if (total > guard / F.order()) throw GuardExceeded("GS root scan over L(G) exceeds the guard");
            total *= F.order();
        }
        for (u64 N = 0; N < total; ++N) {
            u64 rest = N;
            std::optional<CurveFunction> f;
            for (auto& phi : LG) {
                CurveFunction term = scale(F.element(rest % F.order()), phi);
                rest /= F.order();
                f = f ? add(*f, term) : term;
            }
            // Horner: Q(f) = (...(Q_ℓ f + Q_{ℓ-1}) f + ...) + Q_0
            CurveFunction acc = Qj.back();
            for (long j = ell - 1; j >= 0; --j) acc = add(multiply(acc, *f), Qj[static_cast<std::size_t>(j)]);
            if (is_zero(acc)) candidates.push_back(X.evaluate_all(*f, code.points));
        }
    }
    res.candidates = candidates.size();
    std::set<std::vector<u64>> keep;
    for (auto& c : candidates) {
        if (static_cast<long>(hamming_distance(c, y)) > t) continue;
        detail::ensure(code.code.contains(c), "GS root is not a codeword");
        std::vector<u64> key;
        for (auto& v : c) key.push_back(v.index());
        keep.insert(key);
    }
    for (auto& key : keep) {
        Vector c;
        for (auto v : key) c.push_back(F.element(v));
        res.codewords.push_back(c);
    }
    return res;
}

}  // namespace agc
