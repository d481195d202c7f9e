/**
 * @file bounds.hpp
 * @brief Asymptotic rate bounds, locality bound, floor bounds and the order bound.
 *
 * Formulas that are rational in their inputs are evaluated exactly with cpp_rational; the others use long double.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "curve.hpp"

namespace agc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline long double to_long_double(const Rational& r) { return static_cast<long double>(r); }

/// Parses "a/b", an integer, or a terminating decimal such as "0.125" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw DomainError("zero denominator in '" + s + "'");
            return Rational(BigInt(s.substr(0, slash)), den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg) whole = whole.substr(1);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = BigInt(whole.empty() ? "0" : whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
        Rational r(num, scale);
        return neg ? Rational(-r) : r;
    } catch (const std::runtime_error&) {
        throw DomainError("not a rational number: '" + s + "'");
    }
}

namespace detail {

/// Exact integer square root when q is a perfect square.
inline std::optional<u64> exact_sqrt(u64 q) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(q)));
    while (r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    if (r * r == q) return r;
    return std::nullopt;
}

inline BigInt big_pow(u64 b, u64 e) {
    BigInt r = 1;
    for (u64 i = 0; i < e; ++i) r *= b;
    return r;
}

/// (p, e) with q = p^e, or nullopt.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    u64 p = 0;
    for (u64 c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    if (p == 0) return std::make_pair(q, 1u);
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

inline void require_prime_power(u64 q) {
    if (!prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------- asymptotic

/// q-ary entropy H_q(δ), with H_q(0) = 0.
inline long double entropy(u64 q, long double delta) {
    if (q < 2) throw DomainError("entropy needs q >= 2");
    if (delta < 0 || delta > 1) throw DomainError("entropy needs 0 <= delta <= 1");
    const long double lq = std::log(static_cast<long double>(q));
    long double h = 0;
    if (delta > 0) h += delta * std::log(static_cast<long double>(q - 1)) / lq - delta * std::log(delta) / lq;
    if (delta < 1) h -= (1 - delta) * std::log1p(-delta) / lq;
    return h;
}

/// Gilbert-Varshamov rate 1 - H_q(δ) for 0 < δ <= 1 - 1/q.
inline long double gv_rate(u64 q, long double delta) {
    detail::require_prime_power(q);
    const long double top = 1.0L - 1.0L / static_cast<long double>(q);
    if (!(delta > 0) || delta > top + 1e-15L) throw DomainError("GV bound needs 0 < delta <= 1 - 1/q");
    return 1.0L - entropy(q, std::min(delta, top));
}

/// Rate 1 - δ - 1/A for a curve family with Ihara constant at least A > 1.
inline long double ihara_rate(long double A, long double delta) {
    if (!(A > 1)) throw DomainError("the rate line needs A(q) > 1");
    return 1.0L - delta - 1.0L / A;
}

/// Tsfasman-Vlăduţ-Zink rate 1 - δ - 1/(√q - 1) for square q >= 9, exact.
inline Rational tvz_rate(u64 q, const Rational& delta) {
    detail::require_prime_power(q);
    auto r = detail::exact_sqrt(q);
    if (!r || *r < 3) throw DomainError("TVZ needs a square q >= 9");
    return Rational(1) - delta - Rational(1, static_cast<long long>(*r - 1));
}

inline long double tvz_rate(u64 q, long double delta) {
    detail::require_prime_power(q);
    auto r = detail::exact_sqrt(q);
    if (!r || *r < 3) throw DomainError("TVZ needs a square q >= 9");
    return 1.0L - delta - 1.0L / static_cast<long double>(*r - 1);
}

/// Drinfeld-Vlăduţ upper bound √q - 1 on A(q); attained (Ihara) for square q.
inline long double dv_bound(u64 q) {
    detail::require_prime_power(q);
    return std::sqrt(static_cast<long double>(q)) - 1.0L;
}

/// Exact √q - 1 for square q.
inline Rational dv_bound_exact(u64 q) {
    detail::require_prime_power(q);
    auto r = detail::exact_sqrt(q);
    if (!r) throw DomainError(std::to_string(q) + " is not a square");
    return Rational(static_cast<long long>(*r) - 1);
}

/// Lower bound 2(p^{m+1}-1)/(p+1+(p-1)/(p^m-1)) on A(p^{2m+1}), m >= 1.
inline Rational bbgs_bound(u64 p, unsigned m) {
    if (!is_prime(p)) throw DomainError("BBGS needs a prime p");
    if (m < 1) throw DomainError("BBGS needs m >= 1");
    BigInt pm = detail::big_pow(p, m), pm1 = pm * p;
    Rational den = Rational(static_cast<long long>(p + 1)) + Rational(BigInt(p - 1), pm - 1);
    return Rational(2 * (pm1 - 1)) / den;
}

/// Same value through the harmonic-mean form (1/2((p^m-1)^{-1} + (p^{m+1}-1)^{-1}))^{-1}.
inline Rational bbgs_bound_harmonic(u64 p, unsigned m) {
    if (!is_prime(p) || m < 1) throw DomainError("BBGS needs a prime p and m >= 1");
    BigInt pm = detail::big_pow(p, m), pm1 = pm * p;
    Rational s = (Rational(BigInt(1), pm - 1) + Rational(BigInt(1), pm1 - 1)) / 2;
    return 1 / s;
}

/// Serre's lower bound c·ln(q) with c = 1/96.
inline long double serre_bound(u64 q) {
    detail::require_prime_power(q);
    return std::log(static_cast<long double>(q)) / 96.0L;
}

/// How the symbol m in the upper end of the KTW δ-window is read.
enum class KtwReading {
    MEqualsEll,  ///< m := ℓ; the window then ends exactly where the rate line reaches 0
    Literal,     ///< m supplied separately by the caller
};

struct KtwResult {
    Rational rate;
    Rational delta_low, delta_high;
    bool in_window = false;
    KtwReading reading = KtwReading::MEqualsEll;
};

/**
 * @brief KTW rate line for subfield subcodes over F_q of codes over F_{q^ℓ}, ℓ even.
 *
 * R = 1 - 2(q-1)ℓ/(q(q^{ℓ/2}-1)) - (q-1)ℓδ/q on (q-2)/(q^{ℓ/2}-1) <= δ <= q/(m(q-1)) - 2/(q^{ℓ/2}-1).
 */
inline KtwResult ktw_rate(u64 q, unsigned ell, const Rational& delta, KtwReading reading = KtwReading::MEqualsEll, unsigned m = 0) {
    detail::require_prime_power(q);
    if (ell == 0 || ell % 2 != 0) throw DomainError("KTW needs an even positive l");
    if (reading == KtwReading::Literal && m == 0) throw DomainError("the literal KTW reading needs m >= 1");
    const unsigned mm = reading == KtwReading::MEqualsEll ? ell : m;
    BigInt s = detail::big_pow(q, ell / 2) - 1;
    BigInt Q(q);
    KtwResult r;
    r.reading = reading;
    r.rate = Rational(1) - Rational(2 * (Q - 1) * ell, Q * s) - Rational((Q - 1) * ell, Q) * delta;
    r.delta_low = Rational(Q - 2, s);
    r.delta_high = Rational(Q, BigInt(mm) * (Q - 1)) - Rational(BigInt(2), s);
    r.in_window = r.delta_low <= delta && delta <= r.delta_high;
    return r;
}

/// Nonlinear-code rate 1 - δ - 1/A + log_q(1 + 1/q^3), given a lower bound A on A(q).
inline long double xing_rate(u64 q, long double delta, long double A) {
    detail::require_prime_power(q);
    if (!(A > 0)) throw DomainError("A(q) must be positive");
    long double Q = static_cast<long double>(q);
    return 1.0L - delta - 1.0L / A + std::log1p(1.0L / (Q * Q * Q)) / std::log(Q);
}

/// Largest open δ-interval (found on a grid, refined by bisection) where TVZ exceeds GV.
inline std::optional<std::pair<long double, long double>> tvz_beats_gv(u64 q, std::size_t grid = 4000) {
    const long double top = 1.0L - 1.0L / static_cast<long double>(q);
    auto diff = [&](long double d) { return tvz_rate(q, d) - gv_rate(q, d); };
    auto refine = [&](long double lo, long double hi) {
        // diff(lo) and diff(hi) have opposite signs
        bool lo_pos = diff(lo) > 0;
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            if ((diff(mid) > 0) == lo_pos)
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    };
    std::optional<std::pair<long double, long double>> best;
    long double prev = top / static_cast<long double>(grid);
    bool prev_pos = diff(prev) > 0;
    long double start = prev_pos ? prev : -1;
    for (std::size_t i = 2; i < grid; ++i) {
        long double d = top * static_cast<long double>(i) / static_cast<long double>(grid);
        bool pos = diff(d) > 0;
        if (pos && !prev_pos) start = refine(prev, d);
        if (!pos && prev_pos) {
            long double end = refine(prev, d);
            if (!best || end - start > best->second - best->first) best = std::make_pair(start, end);
        }
        prev = d;
        prev_pos = pos;
    }
    return best;
}

/// CSV with header delta,gv,tvz on `steps` interior grid points of (0, 1 - 1/q).
inline void write_rate_csv(std::ostream& os, u64 q, std::size_t steps) {
    if (steps == 0) throw DomainError("need at least one grid point");
    const long double top = 1.0L - 1.0L / static_cast<long double>(q);
    tvz_rate(q, 0.5L);  // validates q
    os << "delta,gv,tvz\n" << std::setprecision(12);
    for (std::size_t i = 1; i <= steps; ++i) {
        long double d = top * static_cast<long double>(i) / static_cast<long double>(steps + 1);
        os << static_cast<double>(d) << ',' << static_cast<double>(gv_rate(q, d)) << ',' << static_cast<double>(tvz_rate(q, d)) << '\n';
    }
}

// ---------------------------------------------------------------------------------------------- locality

/// d <= n - k - ⌈k/ℓ⌉ + 2 for codes with locality ℓ.
inline long gopalan_bound(long n, long k, long ell) {
    if (!(1 <= ell && ell <= k && k <= n)) throw DomainError("locality bound needs 1 <= l <= k <= n");
    return n - k - (k + ell - 1) / ell + 2;
}

// ---------------------------------------------------------------------------------------------- ℓ-oracle

enum class Provenance { Computed, UserTable, RiemannRoch };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Computed:
            return "computed";
        case Provenance::UserTable:
            return "user-supplied";
        case Provenance::RiemannRoch:
            return "riemann-roch";
    }
    return "?";
}

/**
 * Source of ℓ(D) values: a curve backend where it can compute, then a user table keyed by divisor.
 * The table is checked on construction for ℓ = 0 in negative degree and for
 * ℓ(D) <= ℓ(D') <= ℓ(D) + deg(D' - D) whenever D <= D'.
 */
class EllOracle {
   public:
    struct Value {
        long value;
        Provenance source;
    };

    EllOracle(std::shared_ptr<const CurveBackend> backend, std::map<Divisor, long> table, long genus)
        : backend_(std::move(backend)), table_(std::move(table)), genus_(genus) {
        if (backend_ && backend_->genus() != genus_) throw DomainError("genus disagrees with the backend");
        for (auto& [D, l] : table_) {
            if (l < 0) throw DomainError("negative dimension in table for " + D.to_string());
            if (D.degree() < 0 && l != 0) throw DomainError("l(D) must vanish when deg D < 0: " + D.to_string());
            if (D.degree() >= 0 && l > D.degree() + 1) throw DomainError("l(D) exceeds deg D + 1 for " + D.to_string());
            if (D.degree() > 2 * genus_ - 2 && l != D.degree() + 1 - genus_)
                throw DomainError("l(D) contradicts Riemann-Roch for " + D.to_string());
        }
        for (auto& [D, l] : table_)
            for (auto& [E, m] : table_) {
                Divisor diff = E - D;
                if (D == E || !diff.is_effective()) continue;
                if (!(l <= m && m <= l + diff.degree())) throw DomainError("table is not monotone between " + D.to_string() + " and " + E.to_string());
            }
    }

    static EllOracle from_backend(std::shared_ptr<const CurveBackend> X) {
        long g = X->genus();
        return EllOracle(std::move(X), {}, g);
    }
    static EllOracle from_table(std::map<Divisor, long> table, long genus) { return EllOracle(nullptr, std::move(table), genus); }

    long genus() const { return genus_; }

    std::optional<Value> ell(const Divisor& D) const {
        if (D.degree() < 0) return Value{0, Provenance::Computed};
        if (backend_)
            if (auto v = backend_->try_rr_dim(D)) return Value{*v, Provenance::Computed};
        auto it = table_.find(D);
        if (it != table_.end()) return Value{it->second, Provenance::UserTable};
        if (D.degree() > 2 * genus_ - 2) return Value{D.degree() + 1 - genus_, Provenance::RiemannRoch};
        return std::nullopt;
    }

    /// ℓ(K - D) = ℓ(D) - deg D - 1 + g.
    std::optional<Value> ell_canonical_minus(const Divisor& D) const {
        auto v = ell(D);
        if (!v) return std::nullopt;
        return Value{v->value - D.degree() - 1 + genus_, v->source};
    }

   private:
    std::shared_ptr<const CurveBackend> backend_;
    std::map<Divisor, long> table_;
    long genus_;
};

// ---------------------------------------------------------------------------------------------- floor bounds

enum class FloorKind { LM, GST, ABZ };

inline const char* floor_kind_name(FloorKind k) {
    switch (k) {
        case FloorKind::LM:
            return "LM";
        case FloorKind::GST:
            return "GST";
        case FloorKind::ABZ:
            return "ABZ";
    }
    return "?";
}

struct Hypothesis {
    enum class Status { Verified, UserAsserted, Failed, Unknown };
    std::string text;
    Status status;
};

inline const char* hypothesis_status_name(Hypothesis::Status s) {
    switch (s) {
        case Hypothesis::Status::Verified:
            return "verified";
        case Hypothesis::Status::UserAsserted:
            return "user-asserted";
        case Hypothesis::Status::Failed:
            return "failed";
        case Hypothesis::Status::Unknown:
            return "unknown";
    }
    return "?";
}

struct FloorInput {
    Divisor G, A, B, C, Z;
    std::vector<Place> points;  ///< evaluation points; empty means "not checked"
    /// GST only: ℓ(K-A) - ℓ(K-G+C) supplied directly.
    std::optional<long> gst_k_term;
    /// Record equality hypotheses the oracle cannot evaluate as user-asserted instead of refusing.
    bool assume_unverifiable = false;
};

struct FloorResult {
    FloorKind kind;
    std::optional<long> value;  ///< nullopt when a hypothesis failed or could not be evaluated
    long d_gop = 0;
    std::vector<Hypothesis> hypotheses;
    bool refused() const { return !value; }
};

namespace detail {

class FloorChecker {
   public:
    FloorChecker(const EllOracle& O, bool assume) : O_(O), assume_(assume) {}

    std::optional<long> ell(const Divisor& D, const std::string& what) {
        auto v = O_.ell(D);
        if (!v) {
            add("l(" + what + ") available", Hypothesis::Status::Failed);
            return std::nullopt;
        }
        note(v->source);
        return v->value;
    }
    std::optional<long> ell_k_minus(const Divisor& D, const std::string& what) {
        auto v = O_.ell_canonical_minus(D);
        if (!v) {
            add("l(K - " + what + ") available", Hypothesis::Status::Failed);
            return std::nullopt;
        }
        note(v->source);
        return v->value;
    }

    /// L(small) = L(big) for small <= big, via equal dimensions.
    void same_space(const Divisor& small, const Divisor& big, const std::string& text) {
        if (!(big - small).is_effective()) {
            add(text + " (divisors not comparable)", Hypothesis::Status::Unknown);
            return;
        }
        auto a = O_.ell(small), b = O_.ell(big);
        if (!a || !b) {
            add(text, Hypothesis::Status::Unknown);
            return;
        }
        bool user = a->source == Provenance::UserTable || b->source == Provenance::UserTable;
        add(text, a->value == b->value ? (user ? Hypothesis::Status::UserAsserted : Hypothesis::Status::Verified) : Hypothesis::Status::Failed);
    }

    void condition(bool ok, const std::string& text) { add(text, ok ? Hypothesis::Status::Verified : Hypothesis::Status::Failed); }
    void add(std::string text, Hypothesis::Status s) {
        if (s == Hypothesis::Status::Unknown && assume_) s = Hypothesis::Status::UserAsserted;
        hyps_.push_back({std::move(text), s});
    }

    bool all_good() const {
        for (auto& h : hyps_)
            if (h.status == Hypothesis::Status::Failed || h.status == Hypothesis::Status::Unknown) return false;
        return true;
    }
    std::vector<Hypothesis> take() {
        if (user_) hyps_.push_back({"l-values taken from a user table", Hypothesis::Status::UserAsserted});
        return std::move(hyps_);
    }

   private:
    void note(Provenance p) {
        if (p == Provenance::UserTable) user_ = true;
    }
    const EllOracle& O_;
    bool assume_;
    std::vector<Hypothesis> hyps_;
    bool user_ = false;
};

inline bool disjoint_from(const Divisor& D, const std::vector<Place>& P) {
    for (auto& pt : P)
        if (D.multiplicity(pt) != 0) return false;
    return true;
}

}  // namespace detail

/**
 * @brief Floor-type lower bounds on d(C_Ω(G)).
 *
 * - LM: G = A + B + Z, Z >= 0, L(A+Z) = L(A), L(B+Z) = L(B); value d_Gop + deg Z.
 * - GST: G = A + B, L(A) = L(A-Z), L(B) = L(B+Z), L(B) = L(C); value d_Gop + deg Z + ℓ(K-A) - ℓ(K-G+C).
 * - ABZ: G = A + B + Z, Z >= 0; value ℓ(A) - ℓ(A-G+K) + ℓ(B) - ℓ(B-G+K).
 *
 * K-terms are reduced to ordinary ℓ-values through Riemann-Roch, so no canonical divisor is needed.
 */
inline FloorResult floor_bound(FloorKind kind, const FloorInput& in, const EllOracle& O) {
    FloorResult r;
    r.kind = kind;
    const long g = O.genus();
    r.d_gop = in.G.degree() + 2 - 2 * g;
    detail::FloorChecker ck(O, in.assume_unverifiable);
    const bool check_points = !in.points.empty();
    switch (kind) {
        case FloorKind::LM: {
            ck.condition(in.G == in.A + in.B + in.Z, "G = A + B + Z");
            ck.condition(in.Z.is_effective(), "Z >= 0");
            if (check_points) ck.condition(detail::disjoint_from(in.Z, in.points), "supp Z disjoint from P");
            ck.same_space(in.A, in.A + in.Z, "L(A + Z) = L(A)");
            ck.same_space(in.B, in.B + in.Z, "L(B + Z) = L(B)");
            if (ck.all_good()) r.value = r.d_gop + in.Z.degree();
            break;
        }
        case FloorKind::GST: {
            ck.condition(in.G == in.A + in.B, "G = A + B");
            if (check_points) {
                Divisor all = in.A + in.B + in.C + in.Z;
                bool ok = detail::disjoint_from(all, in.points);
                for (auto* D : {&in.A, &in.B, &in.C, &in.Z}) ok = ok && detail::disjoint_from(*D, in.points);
                ck.condition(ok, "supp(A + B + C + Z) disjoint from P");
            }
            ck.same_space(in.A - in.Z, in.A, "L(A) = L(A - Z)");
            ck.same_space(in.B, in.B + in.Z, "L(B) = L(B + Z)");
            if ((in.B - in.C).is_effective())
                ck.same_space(in.C, in.B, "L(B) = L(C)");
            else
                ck.same_space(in.B, in.C, "L(B) = L(C)");
            std::optional<long> term;
            if (in.gst_k_term) {
                ck.add("l(K - A) - l(K - G + C) = " + std::to_string(*in.gst_k_term), Hypothesis::Status::UserAsserted);
                term = in.gst_k_term;
            } else {
                auto a = ck.ell_k_minus(in.A, "A");
                auto c = ck.ell_k_minus(in.G - in.C, "(G - C)");
                if (a && c) term = *a - *c;
            }
            if (ck.all_good() && term) r.value = r.d_gop + in.Z.degree() + *term;
            break;
        }
        case FloorKind::ABZ: {
            ck.condition(in.G == in.A + in.B + in.Z, "G = A + B + Z");
            ck.condition(in.Z.is_effective(), "Z >= 0");
            if (check_points) ck.condition(detail::disjoint_from(in.Z, in.points), "supp Z disjoint from P");
            auto la = ck.ell(in.A, "A"), lb = ck.ell(in.B, "B");
            auto ka = ck.ell_k_minus(in.G - in.A, "(G - A)"), kb = ck.ell_k_minus(in.G - in.B, "(G - B)");
            if (ck.all_good() && la && lb && ka && kb) r.value = *la - *ka + *lb - *kb;
            break;
        }
    }
    r.hypotheses = ck.take();
    return r;
}

// ---------------------------------------------------------------------------------------------- order bound

/**
 * A set of integers of the form {finite part below the conductor} ∪ [conductor, ∞).
 * Used for Weierstrass semigroups and for F-non-gap sets ν(F, P).
 */
class NonGapSet {
   public:
    NonGapSet() = default;
    NonGapSet(std::vector<long> below, long conductor) : below_(std::move(below)), conductor_(conductor) {
        std::sort(below_.begin(), below_.end());
        below_.erase(std::unique(below_.begin(), below_.end()), below_.end());
        while (!below_.empty() && below_.back() >= conductor_) below_.pop_back();
        // absorb a tail that runs into the conductor
        while (!below_.empty() && below_.back() == conductor_ - 1) {
            below_.pop_back();
            --conductor_;
        }
    }

    /// Numerical semigroup generated by positive integers with gcd 1.
    static NonGapSet generated(const std::vector<long>& gens) {
        long gg = 0;
        for (long a : gens) {
            if (a <= 0) throw DomainError("semigroup generators must be positive");
            gg = std::gcd(gg, a);
        }
        if (gg != 1) throw DomainError("semigroup generators must have gcd 1");
        long amin = *std::min_element(gens.begin(), gens.end());
        std::vector<char> in{1};
        long run = 0;
        for (long v = 1; run < amin; ++v) {
            bool hit = false;
            for (long a : gens)
                if (v >= a && in[static_cast<std::size_t>(v - a)]) hit = true;
            in.push_back(hit);
            run = hit ? run + 1 : 0;
        }
        long conductor = static_cast<long>(in.size()) - run;
        std::vector<long> below;
        for (long v = 0; v < conductor; ++v)
            if (in[static_cast<std::size_t>(v)]) below.push_back(v);
        return NonGapSet(below, conductor);
    }

    /// ν(F, P) = {j : ℓ(F + jP) > ℓ(F + (j-1)P)}, scanned over j in [lo, hi]; ℓ must be exact there and
    /// every j > hi must be a non-gap (true once deg F + hi >= 2g - 1).
    static NonGapSet from_ell(const std::function<long(long)>& ell_at, long lo, long hi) {
        if (lo > hi) throw DomainError("empty scan range");
        std::vector<long> ng;
        for (long j = lo; j <= hi; ++j)
            if (ell_at(j) > ell_at(j - 1)) ng.push_back(j);
        return NonGapSet(ng, hi + 1);
    }

    bool contains(long v) const { return v >= conductor_ || std::binary_search(below_.begin(), below_.end(), v); }
    long conductor() const { return conductor_; }
    long smallest() const { return below_.empty() ? conductor_ : below_.front(); }
    /// Integers in [smallest, conductor) that are missing.
    long gap_count() const { return conductor_ - smallest() - static_cast<long>(below_.size()); }
    NonGapSet shifted(long s) const {
        std::vector<long> b;
        for (long v : below_) b.push_back(v + s);
        return NonGapSet(b, conductor_ + s);
    }
    std::vector<long> upto(long m) const {
        std::vector<long> out;
        for (long v : below_)
            if (v <= m) out.push_back(v);
        for (long v = conductor_; v <= m; ++v) out.push_back(v);
        return out;
    }
    /// Elements strictly greater than `after`, in increasing order, at most `count` of them.
    std::vector<long> next_after(long after, std::size_t count) const {
        std::vector<long> out;
        for (long v : below_)
            if (v > after && out.size() < count) out.push_back(v);
        for (long v = std::max(after + 1, conductor_); out.size() < count; ++v) out.push_back(v);
        return out;
    }

   private:
    std::vector<long> below_;
    long conductor_ = 0;
};

/// #{(a, b) : a ∈ S1, b ∈ S2, a + b = v}.
inline long pair_count(const NonGapSet& S1, const NonGapSet& S2, long v) {
    long c = 0;
    for (long a = S1.smallest(); a <= v - S2.smallest(); ++a)
        if (S1.contains(a) && S2.contains(v - a)) ++c;
    return c;
}

struct OrderBoundResult {
    std::vector<long> rho;  ///< ρ_1, ρ_2, ... (elements of SG after `start`)
    std::vector<long> n_r;  ///< n_r = pair count at ρ_{r+1}
    long d_ord = 0;
    /// True once the scan reached ρ >= conductor(S1) + conductor(S2) - 1, after which n_r only grows.
    bool certified = false;
};

/**
 * @brief Order bound d_Ord = min_r n_r with n_r = #{(i, j) : μ_i + ν_j = ρ_{r+1}}.
 *
 * ρ runs through the elements of SG greater than `start` (for the one-point code C_Ω(m·P) with
 * F1 = F2 = G-part 0 take SG the Weierstrass semigroup and start = m). At most `limit` terms are scanned.
 * Past v >= c1 + c2 - 1 the pair count equals v + 1 - s1 - s2 - gaps1 - gaps2 and increases with v, so
 * the scan stops there and the result is certified.
 */
inline OrderBoundResult order_bound(const NonGapSet& S1, const NonGapSet& S2, const NonGapSet& SG, long start, std::size_t limit) {
    if (limit < 1) throw DomainError("order bound needs limit >= 1");
    OrderBoundResult r;
    const long stable = S1.conductor() + S2.conductor() - 1;
    r.d_ord = LONG_MAX;
    long after = start;
    for (std::size_t i = 0; i < limit; ++i) {
        long v = SG.next_after(after, 1).front();
        after = v;
        long n = pair_count(S1, S2, v);
        r.rho.push_back(v);
        r.n_r.push_back(n);
        r.d_ord = std::min(r.d_ord, n);
        if (v >= stable) {
            r.certified = true;
            break;
        }
    }
    return r;
}

/// Feng-Rao order bound for C_Ω(X, P, m·P∞) on the Hermitian curve.
inline OrderBoundResult hermitian_order_bound(long q0, long m, std::size_t limit = 1000) {
    NonGapSet S = NonGapSet::generated({q0, q0 + 1});
    return order_bound(S, S, S, m, limit);
}

}  // namespace agc
