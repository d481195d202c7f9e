/**
 * @file curve.hpp
 * @brief Curve backends: rational points, genus, Riemann-Roch bases and dimensions, local expansions.
 *
 * Two concrete backends are provided.
 *  - ProjectiveLine: P^1 over any field, all divisors supported. Functions are reduced fractions p(x)/d(x).
 *  - HermitianCurve: y^{q0} + y = x^{q0+1} over GF(q0^2). Divisors m·P∞ (optionally minus a multiple of the
 *    sum of all affine points, handled through x^{q0^2} - x). Functions are Σ c_j(x) y^j with j < q0.
 */
#pragma once

#include <climits>
#include <memory>
#include <variant>

#include "divisor.hpp"
#include "matrix.hpp"

namespace agc {

using Series = std::vector<FieldElement>;  // truncated power series, lowest order first

namespace detail {

inline Series series_mul(const FiniteField& F, const Series& a, const Series& b, std::size_t s) {
    Series r(s, F.zero());
    for (std::size_t i = 0; i < a.size() && i < s; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < s; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Series series_inv(const FiniteField& F, const Series& a, std::size_t s) {
    if (a.empty() || a[0].is_zero()) throw DomainError("series is not invertible");
    Series r(s, F.zero());
    FieldElement i0 = a[0].inverse();
    r[0] = i0;
    for (std::size_t k = 1; k < s; ++k) {
        FieldElement acc = F.zero();
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
        r[k] = -acc * i0;
    }
    return r;
}

inline Series poly_series(const Polynomial& p, const FieldElement& at, std::size_t s) {
    const FiniteField& F = p.field();
    Polynomial sh = p.shift(at);
    Series r(s, F.zero());
    for (std::size_t i = 0; i < s; ++i) r[i] = sh.coeff(i);
    return r;
}

}  // namespace detail

/// Reduced fraction num/den on P^1 with den monic and gcd(num, den) = 1.
class RationalFunction {
   public:
    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::one(num_.field())) {}
    static RationalFunction constant(const FiniteField& F, const FieldElement& c) { return RationalFunction(Polynomial::constant(F, c)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const FiniteField& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }

    FieldElement at(const FieldElement& a) const {
        FieldElement d = den_(a);
        if (d.is_zero()) throw DomainError("function has a pole at the evaluation point");
        return num_(a) / d;
    }

    /// v_∞ = deg den - deg num (LONG_MAX for the zero function).
    long valuation_at_infinity() const { return num_.is_zero() ? LONG_MAX : den_.degree() - num_.degree(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const FieldElement& s, const RationalFunction& a) { return RationalFunction(a.num_ * s, a.den_); }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::one(den_.field());
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        FieldElement l = den_.leading();
        if (!l.is_one()) {
            FieldElement li = l.inverse();
            num_ = num_ * li;
            den_ = den_ * li;
        }
    }
    Polynomial num_, den_;
};

/// Σ_{j<q0} c_j(x) y^j on the Hermitian curve, kept reduced by y^{q0} = x^{q0+1} - y.
class HermitianFunction {
   public:
    HermitianFunction() = default;
    HermitianFunction(FiniteField F, int q0) : F_(std::move(F)), q0_(q0), c_(static_cast<std::size_t>(q0), Polynomial(F_)) {}

    /// coeff · x^i y^j, reduced.
    static HermitianFunction monomial(const FiniteField& F, int q0, unsigned i, unsigned j, const FieldElement& coeff) {
        std::vector<Polynomial> raw(j + 1, Polynomial(F));
        raw[j] = Polynomial::monomial(F, coeff, i);
        return from_unreduced(F, q0, std::move(raw));
    }
    static HermitianFunction from_x_polynomial(int q0, const Polynomial& p) {
        HermitianFunction h(p.field(), q0);
        h.c_[0] = p;
        return h;
    }

    const FiniteField& field() const { return F_; }
    int q0() const { return q0_; }
    const std::vector<Polynomial>& coeffs() const { return c_; }
    bool is_zero() const {
        for (auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    FieldElement at(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = F_.zero(), yp = F_.one();
        for (auto& p : c_) {
            r += p(a) * yp;
            yp *= b;
        }
        return r;
    }

    /// Pole order at P∞: max over monomials of i·q0 + j·(q0+1). LONG_MIN for zero.
    long pole_order() const {
        long best = LONG_MIN;
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (!c_[j].is_zero()) best = std::max(best, c_[j].degree() * q0_ + static_cast<long>(j) * (q0_ + 1));
        return best;
    }

    friend HermitianFunction operator+(const HermitianFunction& a, const HermitianFunction& b) {
        HermitianFunction r = a;
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
        return r;
    }
    friend HermitianFunction operator-(const HermitianFunction& a, const HermitianFunction& b) {
        HermitianFunction r = a;
        for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] -= b.c_[j];
        return r;
    }
    friend HermitianFunction operator*(const FieldElement& s, const HermitianFunction& a) {
        HermitianFunction r = a;
        for (auto& p : r.c_) p = p * s;
        return r;
    }
    friend HermitianFunction operator*(const HermitianFunction& a, const HermitianFunction& b) {
        std::vector<Polynomial> raw(2 * a.c_.size(), Polynomial(a.F_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        return from_unreduced(a.F_, a.q0_, std::move(raw));
    }
    friend bool operator==(const HermitianFunction& a, const HermitianFunction& b) { return a.c_ == b.c_; }

   private:
    static HermitianFunction from_unreduced(const FiniteField& F, int q0, std::vector<Polynomial> raw) {
        const std::size_t q = static_cast<std::size_t>(q0);
        Polynomial xq1 = Polynomial::monomial(F, F.one(), q + 1);
        for (std::size_t e = raw.size(); e-- > q;) {
            if (raw[e].is_zero()) continue;
            Polynomial P = raw[e];
            raw[e] = Polynomial(F);
            raw[e - q] += P * xq1;
            raw[e - q + 1] -= P;
        }
        HermitianFunction h(F, q0);
        for (std::size_t j = 0; j < q && j < raw.size(); ++j) h.c_[j] = raw[j];
        return h;
    }
    FiniteField F_;
    int q0_ = 0;
    std::vector<Polynomial> c_;
};

using CurveFunction = std::variant<RationalFunction, HermitianFunction>;

inline CurveFunction multiply(const CurveFunction& a, const CurveFunction& b) {
    if (a.index() != b.index()) throw DomainError("functions from different backends");
    if (auto* ra = std::get_if<RationalFunction>(&a)) return *ra * std::get<RationalFunction>(b);
    return std::get<HermitianFunction>(a) * std::get<HermitianFunction>(b);
}

inline CurveFunction add(const CurveFunction& a, const CurveFunction& b) {
    if (a.index() != b.index()) throw DomainError("functions from different backends");
    if (auto* ra = std::get_if<RationalFunction>(&a)) return *ra + std::get<RationalFunction>(b);
    return std::get<HermitianFunction>(a) + std::get<HermitianFunction>(b);
}

inline CurveFunction scale(const FieldElement& s, const CurveFunction& a) {
    if (auto* ra = std::get_if<RationalFunction>(&a)) return s * *ra;
    return s * std::get<HermitianFunction>(a);
}

inline bool is_zero(const CurveFunction& a) {
    if (auto* ra = std::get_if<RationalFunction>(&a)) return ra->is_zero();
    return std::get<HermitianFunction>(a).is_zero();
}

/// Abstract curve oracle.
class CurveBackend {
   public:
    virtual ~CurveBackend() = default;

    virtual const FiniteField& field() const = 0;
    virtual std::string id() const = 0;
    virtual int genus() const = 0;
    /// All rational places, affine ones in canonical order followed by P∞.
    virtual std::vector<Place> rational_points() const = 0;
    /// Whether rr_basis / rr_dim can handle D.
    virtual bool supports(const Divisor& D) const = 0;
    /// Basis of L(D). Throws CapabilityError for unsupported shapes.
    virtual std::vector<CurveFunction> rr_basis(const Divisor& D) const = 0;
    /// ℓ(D). Divisors of negative degree give 0 on every backend, whatever their shape.
    virtual long rr_dim(const Divisor& D) const = 0;
    /// Value at a rational place (throws at poles).
    virtual FieldElement evaluate(const CurveFunction& f, const Place& P) const = 0;
    /// Fixed representative of the canonical class.
    virtual Divisor canonical_divisor() const = 0;
    /// First s coefficients of f at an affine rational place, in the backend's local parameter there.
    virtual Series taylor(const CurveFunction& f, const Place& P, std::size_t s) const = 0;
    /// v_{P∞}(f)
    virtual long valuation_at_infinity(const CurveFunction& f) const = 0;

    Place infinity() const { return Place::infinity(); }

    std::vector<Place> affine_points() const {
        auto pts = rational_points();
        pts.erase(std::remove_if(pts.begin(), pts.end(), [](const Place& P) { return P.is_infinity(); }), pts.end());
        return pts;
    }

    /// ℓ(D) when the backend can compute it, nullopt otherwise.
    std::optional<long> try_rr_dim(const Divisor& D) const {
        if (D.degree() < 0) return 0;
        if (!supports(D)) return std::nullopt;
        return rr_dim(D);
    }

    Vector evaluate_all(const CurveFunction& f, const std::vector<Place>& pts) const {
        Vector v;
        v.reserve(pts.size());
        for (auto& P : pts) v.push_back(evaluate(f, P));
        return v;
    }
};

/// The projective line over F.
class ProjectiveLine final : public CurveBackend {
   public:
    explicit ProjectiveLine(FiniteField F) : F_(std::move(F)) {}

    const FiniteField& field() const override { return F_; }
    std::string id() const override { return "P1/" + F_.name(); }
    int genus() const override { return 0; }

    std::vector<Place> rational_points() const override {
        std::vector<Place> pts;
        for (auto& a : F_.elements()) pts.push_back(Place::affine(a));
        pts.push_back(Place::infinity());
        return pts;
    }

    bool supports(const Divisor& D) const override {
        for (auto& P : D.support())
            if (P.kind == Place::Kind::Named) return false;
        return true;
    }

    /// Monic normaliser h = N/M of L(D): M = Π π_P^{m_P} over finite m_P > 0, N = Π π_P^{-m_P} over m_P < 0.
    RationalFunction normalizer(const Divisor& D) const {
        check(D);
        Polynomial N = Polynomial::one(F_), M = Polynomial::one(F_);
        for (auto& [P, m] : D.terms()) {
            if (P.is_infinity()) continue;
            Polynomial pi = P.polynomial(F_);
            if (m > 0) M *= pow(pi, static_cast<u64>(m));
            if (m < 0) N *= pow(pi, static_cast<u64>(-m));
        }
        return RationalFunction(N, M);
    }

    /// {x^i · h : 0 <= i <= deg D} with h the monic normaliser.
    std::vector<CurveFunction> rr_basis(const Divisor& D) const override {
        check(D);
        std::vector<CurveFunction> out;
        long d = D.degree();
        if (d < 0) return out;
        RationalFunction h = normalizer(D);
        for (long i = 0; i <= d; ++i) out.emplace_back(RationalFunction(h.num() * Polynomial::monomial(F_, F_.one(), static_cast<std::size_t>(i)), h.den()));
        return out;
    }

    long rr_dim(const Divisor& D) const override {
        if (D.degree() < 0) return 0;
        check(D);
        return D.degree() + 1;
    }

    FieldElement evaluate(const CurveFunction& f, const Place& P) const override {
        const auto& r = std::get<RationalFunction>(f);
        if (P.is_infinity()) {
            long v = r.valuation_at_infinity();
            if (v < 0) throw DomainError("function has a pole at infinity");
            if (v > 0) return F_.zero();
            return r.num().leading() / r.den().leading();
        }
        if (P.kind != Place::Kind::Affine) throw DomainError("evaluation only at rational places");
        return r.at(F_.element(P.coords.at(0)));
    }

    Divisor canonical_divisor() const override { return Divisor::infinity_multiple(-2); }

    Series taylor(const CurveFunction& f, const Place& P, std::size_t s) const override {
        if (P.kind != Place::Kind::Affine) throw CapabilityError("local expansions are only provided at affine points");
        const auto& r = std::get<RationalFunction>(f);
        FieldElement a = F_.element(P.coords.at(0));
        Series n = detail::poly_series(r.num(), a, s), d = detail::poly_series(r.den(), a, s);
        return detail::series_mul(F_, n, detail::series_inv(F_, d, s), s);
    }

    long valuation_at_infinity(const CurveFunction& f) const override { return std::get<RationalFunction>(f).valuation_at_infinity(); }

    /// Principal divisor of a nonzero rational function.
    Divisor divisor_of(const RationalFunction& f) const {
        if (f.is_zero()) throw DomainError("the zero function has no divisor");
        Divisor D;
        if (f.num().degree() > 0)
            for (auto& [g, m] : factor(f.num())) D.add(Place::closed(g), m);
        if (f.den().degree() > 0)
            for (auto& [g, m] : factor(f.den())) D.add(Place::closed(g), -m);
        D.add(Place::infinity(), f.valuation_at_infinity());
        return D;
    }

    /// Zero divisor (p)_0 of a nonzero polynomial.
    Divisor zero_divisor(const Polynomial& p) const {
        if (p.is_zero()) throw DomainError("the zero polynomial has no zero divisor");
        Divisor D;
        if (p.degree() > 0)
            for (auto& [g, m] : factor(p)) D.add(Place::closed(g), m);
        return D;
    }

   private:
    void check(const Divisor& D) const {
        if (!supports(D)) throw CapabilityError("P^1 backend cannot interpret labelled places");
    }
    FiniteField F_;
};

/// Hermitian curve y^{q0} + y = x^{q0+1} over GF(q0^2).
class HermitianCurve final : public CurveBackend {
   public:
    /// q0 must be a prime power with q0^2 <= kMaxExtensionOrder.
    explicit HermitianCurve(u64 q0) : q0_(static_cast<int>(q0)) {
        u64 p = 0;
        int e = 0;
        for (u64 c = 2; c <= q0; ++c) {
            if (q0 % c == 0) {
                p = c;
                break;
            }
        }
        if (p == 0) throw DomainError("q0 must be at least 2");
        u64 r = q0;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1 || !is_prime(p)) throw DomainError("q0 must be a prime power");
        F_ = make_field(p, {2 * e});
        for (auto& a : F_.elements()) {
            FieldElement rhs = a.pow(q0 + 1);
            for (auto& b : F_.elements())
                if (b.pow(q0) + b == rhs) points_.push_back(Place::affine(a, b));
        }
        if (points_.size() != q0 * q0 * q0) throw AssertionFailure("Hermitian point count mismatch");
    }

    int q0() const { return q0_; }
    const FiniteField& field() const override { return F_; }
    std::string id() const override { return "Hermitian/q0=" + std::to_string(q0_); }
    int genus() const override { return q0_ * (q0_ - 1) / 2; }

    std::vector<Place> rational_points() const override {
        auto pts = points_;
        pts.push_back(Place::infinity());
        return pts;
    }

    /// m·P∞ - c·(sum of all affine points) with c >= 0.
    bool supports(const Divisor& D) const override { return decompose(D).has_value(); }

    /// Non-gaps of ⟨q0, q0+1⟩ up to m, increasing.
    std::vector<long> nongaps_upto(long m) const {
        std::vector<long> out;
        for (long v = 0; v <= m; ++v)
            if (is_nongap(v)) out.push_back(v);
        return out;
    }

    bool is_nongap(long v) const {
        if (v < 0) return false;
        for (long j = 0; j < q0_; ++j) {
            long rest = v - j * (q0_ + 1);
            if (rest >= 0 && rest % q0_ == 0) return true;
        }
        return false;
    }

    /// Exponents (i, j), j < q0, with i·q0 + j(q0+1) <= m, ordered by that pole order.
    std::vector<std::pair<unsigned, unsigned>> monomials_upto(long m) const {
        std::vector<std::pair<long, std::pair<unsigned, unsigned>>> tmp;
        for (long j = 0; j < q0_; ++j)
            for (long i = 0; i * q0_ + j * (q0_ + 1) <= m; ++i)
                tmp.push_back({i * q0_ + j * (q0_ + 1), {static_cast<unsigned>(i), static_cast<unsigned>(j)}});
        std::sort(tmp.begin(), tmp.end());
        std::vector<std::pair<unsigned, unsigned>> out;
        for (auto& t : tmp) out.push_back(t.second);
        return out;
    }

    std::vector<CurveFunction> rr_basis(const Divisor& D) const override {
        auto dec = decompose(D);
        if (!dec) {
            if (D.degree() < 0) return {};
            throw CapabilityError("Hermitian backend supports only m*P_inf (minus multiples of all affine points)");
        }
        auto [m, c] = *dec;
        long shifted = m - c * static_cast<long>(points_.size());
        std::vector<CurveFunction> out;
        if (shifted < 0) return out;
        HermitianFunction mult = HermitianFunction::from_x_polynomial(q0_, Polynomial::one(F_));
        if (c > 0) {
            Polynomial v = Polynomial::monomial(F_, F_.one(), static_cast<std::size_t>(q0_) * q0_) - Polynomial::x(F_);
            mult = HermitianFunction::from_x_polynomial(q0_, pow(v, static_cast<u64>(c)));
        }
        for (auto [i, j] : monomials_upto(shifted)) out.emplace_back(mult * HermitianFunction::monomial(F_, q0_, i, j, F_.one()));
        return out;
    }

    long rr_dim(const Divisor& D) const override {
        if (D.degree() < 0) return 0;
        auto dec = decompose(D);
        if (!dec) throw CapabilityError("Hermitian backend supports only m*P_inf (minus multiples of all affine points)");
        long shifted = dec->first - dec->second * static_cast<long>(points_.size());
        return static_cast<long>(nongaps_upto(shifted).size());
    }

    FieldElement evaluate(const CurveFunction& f, const Place& P) const override {
        const auto& h = std::get<HermitianFunction>(f);
        if (P.is_infinity()) {
            long po = h.pole_order();
            if (po > 0) throw DomainError("function has a pole at infinity");
            return h.coeffs()[0].coeff(0);
        }
        if (P.kind != Place::Kind::Affine || P.coords.size() != 2) throw DomainError("not a Hermitian affine point");
        return h.at(F_.element(P.coords[0]), F_.element(P.coords[1]));
    }

    Divisor canonical_divisor() const override { return Divisor::infinity_multiple(2L * genus() - 2); }

    /// Expansion in u = x - a. The y-derivative of the curve equation is 1, so x - a is a uniformiser at every affine point.
    Series taylor(const CurveFunction& f, const Place& P, std::size_t s) const override {
        if (P.kind != Place::Kind::Affine) throw CapabilityError("local expansions are only provided at affine points");
        const auto& h = std::get<HermitianFunction>(f);
        FieldElement a = F_.element(P.coords[0]);
        Series Y = y_series(P, s);
        Series acc(s, F_.zero()), ypow(s, F_.zero());
        ypow[0] = F_.one();
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
            if (!h.coeffs()[j].is_zero()) {
                Series cj = detail::poly_series(h.coeffs()[j], a, s);
                Series t = detail::series_mul(F_, cj, ypow, s);
                for (std::size_t k = 0; k < s; ++k) acc[k] += t[k];
            }
            ypow = detail::series_mul(F_, ypow, Y, s);
        }
        return acc;
    }

    /// y as a power series in u = x - a at the affine point P = (a, b).
    Series y_series(const Place& P, std::size_t s) const {
        FieldElement a = F_.element(P.coords[0]), b = F_.element(P.coords[1]);
        Series rhs = detail::poly_series(Polynomial::monomial(F_, F_.one(), static_cast<std::size_t>(q0_) + 1), a, s);
        Series Y(s, F_.zero());
        Y[0] = b;
        for (std::size_t it = 0; it <= s; ++it) {
            // y = (a+u)^{q0+1} - y^{q0}; each pass fixes at least one more coefficient
            Series yq(s, F_.one());
            {
                Series base = Y;
                Series r(s, F_.zero());
                r[0] = F_.one();
                u64 e = static_cast<u64>(q0_);
                while (e) {
                    if (e & 1) r = detail::series_mul(F_, r, base, s);
                    e >>= 1;
                    if (e) base = detail::series_mul(F_, base, base, s);
                }
                yq = r;
            }
            Series next(s, F_.zero());
            for (std::size_t k = 0; k < s; ++k) next[k] = rhs[k] - yq[k];
            if (next == Y) break;
            Y = next;
        }
        return Y;
    }

    long valuation_at_infinity(const CurveFunction& f) const override {
        long po = std::get<HermitianFunction>(f).pole_order();
        return po == LONG_MIN ? LONG_MAX : -po;
    }

    /**
     * Partition of the given affine points into fibres of the x-map (by_x) or the y-map. Each part lists
     * indices into pts; parts are ordered by the fibre's coordinate value.
     */
    static std::vector<std::vector<std::size_t>> fibers(const std::vector<Place>& pts, bool by_x) {
        std::map<u64, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i].kind != Place::Kind::Affine) throw DomainError("fibers are defined on affine points only");
            groups[pts[i].coords[by_x ? 0 : 1]].push_back(i);
        }
        std::vector<std::vector<std::size_t>> out;
        for (auto& [k, v] : groups) out.push_back(v);
        return out;
    }

    /// Sum of all affine points.
    Divisor affine_sum() const { return Divisor::sum_of(points_); }

   private:
    /// D = m·P∞ - c·(all affine points), c >= 0. Returns (m, c).
    std::optional<std::pair<long, long>> decompose(const Divisor& D) const {
        long m = D.multiplicity(Place::infinity());
        std::size_t affine_terms = D.terms().size() - (m != 0 ? 1 : 0);
        if (affine_terms == 0) return std::make_pair(m, 0L);
        if (affine_terms != points_.size()) return std::nullopt;
        long c = D.multiplicity(points_.front());
        if (c >= 0) return std::nullopt;
        for (auto& P : points_)
            if (D.multiplicity(P) != c) return std::nullopt;
        return std::make_pair(m, -c);
    }
    int q0_;
    FiniteField F_;
    std::vector<Place> points_;
};

}  // namespace agc
