/**
 * @file rr_conditions.hpp
 * @brief Riemann-Roch equations ℓ(D) = 0 behind frameproof codes, multiplication algorithms and
 * arithmetic secret sharing, evaluated through an EllOracle.
 */
#pragma once

#include "bounds.hpp"
#include "secret_sharing.hpp"

namespace agc {

struct RREquation {
    std::string text;  // e.g. "l(2G - D_P) = 0"
    Divisor divisor;   // D, or the D' of l(K - D') for canonical equations
    bool canonical = false;
    long value = 0;
    bool ok = false;
};

struct RRReport {
    std::vector<RREquation> equations;
    bool ok() const {
        return std::all_of(equations.begin(), equations.end(), [](const RREquation& e) { return e.ok; });
    }
};

namespace detail {

inline void add_equation(RRReport& rep, const EllOracle& O, std::string text, const Divisor& D, bool canonical) {
    auto v = canonical ? O.ell_canonical_minus(D) : O.ell(D);
    if (!v) throw CapabilityError("cannot evaluate " + text + " for " + D.to_string());
    rep.equations.push_back({std::move(text), D, canonical, v->value, v->value == 0});
}

}  // namespace detail

/// ℓ(sG - D_P) = 0 makes C_L(G) s-frameproof.
inline RRReport frameproof_condition(const EllOracle& O, const Divisor& G, const Divisor& DP, long s) {
    detail::require(s >= 1, "s must be positive");
    RRReport rep;
    detail::add_equation(rep, O, "l(" + std::to_string(s) + "G - D_P) = 0", s * G - DP, false);
    return rep;
}

/// ℓ(K - G + Q) = 0 and ℓ(2G - D_P) = 0 (surjectivity at Q, injectivity on P).
inline RRReport multiplication_condition(const EllOracle& O, const Divisor& G, const Divisor& Q, const Divisor& DP) {
    RRReport rep;
    detail::add_equation(rep, O, "l(K - G + Q) = 0", G - Q, true);
    detail::add_equation(rep, O, "l(2G - D_P) = 0", 2 * G - DP, false);
    return rep;
}

/// Asymmetric variant with two divisors G, G'.
inline RRReport multiplication_condition(const EllOracle& O, const Divisor& G, const Divisor& G2, const Divisor& Q, const Divisor& DP) {
    RRReport rep;
    detail::add_equation(rep, O, "l(K - G + Q) = 0", G - Q, true);
    detail::add_equation(rep, O, "l(K - G' + Q) = 0", G2 - Q, true);
    detail::add_equation(rep, O, "l(G + G' - D_P) = 0", G + G2 - DP, false);
    return rep;
}

/// ℓ(K - G + P_B + Q) = 0 for |B| = t and ℓ(dG - P_B) = 0 for |B| = r.
inline RRReport asss_condition(const EllOracle& O, const Divisor& G, const Divisor& Q, const std::vector<Place>& P, std::size_t t, long d, std::size_t r,
                               u64 guard = 1u << 14) {
    detail::require(t <= P.size() && r <= P.size(), "subset sizes cannot exceed n");
    detail::require(d >= 1, "d must be positive");
    detail::binomial_guarded(P.size(), t, guard);
    detail::binomial_guarded(P.size(), r, guard);
    auto PB = [&](const std::vector<std::size_t>& B) {
        Divisor D;
        for (auto b : B) D = D + Divisor(P[b], 1);
        return D;
    };
    auto name = [](const std::vector<std::size_t>& B) {
        std::string s = "{";
        for (std::size_t i = 0; i < B.size(); ++i) s += (i ? "," : "") + std::to_string(B[i]);
        return s + "}";
    };
    RRReport rep;
    detail::for_each_subset(P.size(), t, [&](const std::vector<std::size_t>& B) {
        detail::add_equation(rep, O, "l(K - G + P_B + Q) = 0, B = " + name(B), G - PB(B) - Q, true);
    });
    detail::for_each_subset(P.size(), r, [&](const std::vector<std::size_t>& B) {
        detail::add_equation(rep, O, "l(" + std::to_string(d) + "G - P_B) = 0, B = " + name(B), d * G - PB(B), false);
    });
    return rep;
}

}  // namespace agc
