/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a FiniteField, interpolation, irreducibility and factorization.
 */
#pragma once

#include <climits>
#include <tuple>
#include <utility>
#include <vector>

#include "field.hpp"
#include "rng.hpp"

namespace agc {

class Polynomial {
   public:
    /// Degree reported for the zero polynomial; compares below every real degree.
    static constexpr long kMinusInfinity = LONG_MIN;

    Polynomial() = default;
    explicit Polynomial(FiniteField F) : F_(std::move(F)) {}
    Polynomial(FiniteField F, std::vector<FieldElement> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
        for (auto& c : c_) {
            if (c.data() != F_.data()) c = F_.embed(c);
        }
        trim();
    }

    /// Coefficients given as canonical indices, lowest degree first.
    static Polynomial from_indices(const FiniteField& F, const std::vector<u64>& idx) {
        std::vector<FieldElement> c;
        for (u64 i : idx) c.push_back(F.element(i));
        return Polynomial(F, std::move(c));
    }
    static Polynomial constant(const FiniteField& F, const FieldElement& c) { return Polynomial(F, {c}); }
    static Polynomial one(const FiniteField& F) { return Polynomial(F, {F.one()}); }
    static Polynomial x(const FiniteField& F) { return Polynomial(F, {F.zero(), F.one()}); }
    static Polynomial monomial(const FiniteField& F, const FieldElement& c, std::size_t d) {
        std::vector<FieldElement> v(d + 1, F.zero());
        v[d] = c;
        return Polynomial(F, std::move(v));
    }
    /// X - a
    static Polynomial linear(const FiniteField& F, const FieldElement& a) { return Polynomial(F, {-a, F.one()}); }

    const FiniteField& field() const { return F_; }
    long degree() const { return c_.empty() ? kMinusInfinity : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<FieldElement>& coefficients() const { return c_; }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_.zero(); }
    FieldElement leading() const { return c_.empty() ? F_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FieldElement operator()(const FieldElement& x) const {
        FieldElement r = F_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Polynomial derivative() const {
        std::vector<FieldElement> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(F_.from_integer(static_cast<long long>(i % F_.characteristic())) * c_[i]);
        return Polynomial(F_, std::move(d));
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        return *this * leading().inverse();
    }

    /// p(X + a)
    Polynomial shift(const FieldElement& a) const {
        // Horner with the linear polynomial X + a
        Polynomial r(F_);
        Polynomial xa(F_, {a, F_.one()});
        for (std::size_t i = c_.size(); i-- > 0;) r = r * xa + constant(F_, c_[i]);
        return r;
    }

    /// p(q(X))
    Polynomial compose(const Polynomial& q) const {
        Polynomial r(F_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * q + constant(F_, c_[i]);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const FiniteField& F = a.F_.valid() ? a.F_ : b.F_;
        std::vector<FieldElement> r(std::max(a.c_.size(), b.c_.size()), F.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(F, std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<FieldElement> r;
        for (auto& c : a.c_) r.push_back(-c);
        return Polynomial(a.F_, std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const FiniteField& F = a.F_.valid() ? a.F_ : b.F_;
        if (a.c_.empty() || b.c_.empty()) return Polynomial(F);
        const auto* D = F.data();
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            u64 ai = a.c_[i].index();
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = D->add(r[i + j], D->mul(ai, b.c_[j].index()));
        }
        std::vector<FieldElement> out;
        out.reserve(r.size());
        for (u64 v : r) out.emplace_back(D, v);
        return Polynomial(F, std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const FieldElement& s) {
        std::vector<FieldElement> r;
        for (auto& c : a.c_) r.push_back(c * s);
        return Polynomial(a.F_, std::move(r));
    }
    friend Polynomial operator*(const FieldElement& s, const Polynomial& a) { return a * s; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Quotient and remainder; b must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        const FiniteField& F = b.F_;
        if (a.degree() < b.degree()) return {Polynomial(F), a};
        const auto* D = F.data();
        std::vector<u64> r;
        for (auto& c : a.c_) r.push_back(c.index());
        const std::size_t db = b.c_.size() - 1;
        std::vector<u64> q(a.c_.size() - db, 0);
        const u64 li = D->inv(b.c_.back().index());
        for (std::size_t k = a.c_.size(); k-- > db;) {
            u64 c = D->mul(r[k], li);
            q[k - db] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = D->sub(r[k - db + j], D->mul(c, b.c_[j].index()));
        }
        r.resize(db);
        std::vector<FieldElement> qe, re;
        for (u64 v : q) qe.emplace_back(D, v);
        for (u64 v : r) re.emplace_back(D, v);
        return {Polynomial(F, std::move(qe)), Polynomial(F, std::move(re))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    /// Total order: by degree, then coefficients from the top down (matches canonical enumeration).
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i].index() != b.c_[i].index()) return a.c_[i].index() < b.c_[i].index();
        }
        return false;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.c_.empty()) return os << "0";
        bool first = true;
        for (std::size_t i = p.c_.size(); i-- > 0;) {
            if (p.c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || !p.c_[i].is_one()) os << p.c_[i];
            if (i >= 1) os << "X";
            if (i >= 2) os << "^" << i;
        }
        return os;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FiniteField F_;
    std::vector<FieldElement> c_;
};

/// Monic gcd (zero only if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm of nonzero polynomials.
inline Polynomial lcm(const Polynomial& a, const Polynomial& b) { return (a * b / gcd(a, b)).monic(); }

/// Returns (g, s, t) with s a + t b = g = gcd(a, b) monic.
inline std::tuple<Polynomial, Polynomial, Polynomial> extended_gcd(const Polynomial& a, const Polynomial& b) {
    const FiniteField& F = a.field().valid() ? a.field() : b.field();
    Polynomial r0 = a, r1 = b, s0 = Polynomial::one(F), s1(F), t0(F), t1 = Polynomial::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    FieldElement li = r0.leading().inverse();
    return {r0 * li, s0 * li, t0 * li};
}

/// Inverse of a modulo m (gcd must be 1).
inline Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
    auto [g, s, t] = extended_gcd(a % m, m);
    if (g.degree() != 0) throw DomainError("polynomial not invertible modulo m");
    return s % m;
}

inline Polynomial powmod(Polynomial base, u64 e, const Polynomial& m) {
    Polynomial r = Polynomial::one(m.field()) % m;
    base = base % m;
    while (e) {
        if (e & 1) r = r * base % m;
        e >>= 1;
        if (e) base = base * base % m;
    }
    return r;
}

inline Polynomial pow(Polynomial base, u64 e) {
    Polynomial r = Polynomial::one(base.field());
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/// Product of (X - a) over the given elements.
inline Polynomial vanishing_polynomial(const FiniteField& F, const std::vector<FieldElement>& pts) {
    Polynomial r = Polynomial::one(F);
    for (auto& a : pts) r = r * Polynomial::linear(F, a);
    return r;
}

/**
 * @brief Unique polynomial of degree < pairs.size() through the given points.
 * @throws DomainError on repeated abscissae.
 */
inline Polynomial lagrange_interpolate(const FiniteField& F, const std::vector<std::pair<FieldElement, FieldElement>>& pairs) {
    const std::size_t n = pairs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pairs[i].first == pairs[j].first) throw DomainError("interpolation points must be distinct");
    std::vector<FieldElement> xs;
    for (auto& pr : pairs) xs.push_back(pr.first);
    Polynomial V = vanishing_polynomial(F, xs);
    Polynomial result(F);
    for (std::size_t i = 0; i < n; ++i) {
        if (pairs[i].second.is_zero()) continue;
        Polynomial Li = V / Polynomial::linear(F, pairs[i].first);
        result += Li * (pairs[i].second / Li(pairs[i].first));
    }
    return result;
}

inline Polynomial lagrange_interpolate(const std::vector<std::pair<FieldElement, FieldElement>>& pairs) {
    if (pairs.empty()) throw DomainError("interpolation needs a field; pass it explicitly for empty input");
    return lagrange_interpolate(pairs.front().first.field(), pairs);
}

inline bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    detail::RawPoly raw;
    const Polynomial m = f.monic();
    for (auto& c : m.coefficients()) raw.push_back(c.index());
    return detail::raw_is_irreducible(*f.field().data(), raw);
}

/**
 * @brief Smallest monic irreducible polynomial of degree d over F.
 *
 * Candidates are compared as base-|F| numbers with the X^{d-1} coefficient most significant;
 * this is the same rule make_field uses for its defining polynomials.
 */
inline Polynomial irreducible_poly(const FiniteField& F, int d) {
    if (d < 1) throw DomainError("irreducible_poly needs degree >= 1");
    return Polynomial::from_indices(F, detail::raw_smallest_irreducible(*F.data(), d));
}

namespace detail {

/// a^{Q} mod f where Q = |F|.
inline Polynomial frobenius_mod(const Polynomial& a, const Polynomial& f) { return powmod(a, a.field().order(), f); }

/// p-th root of a polynomial whose exponents are all multiples of p.
inline Polynomial pth_root(const Polynomial& a) {
    const FiniteField& F = a.field();
    const u64 p = F.characteristic();
    const u64 root_exp = F.order() / p;  // c^{q/p} is the p-th root of c
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < a.coefficients().size(); i += p) out.push_back(a.coefficients()[i].pow(root_exp));
    return Polynomial(F, std::move(out));
}

/// Squarefree decomposition of a monic polynomial: list of (squarefree factor, multiplicity).
inline std::vector<std::pair<Polynomial, int>> squarefree(const Polynomial& f) {
    std::vector<std::pair<Polynomial, int>> out;
    if (f.degree() < 1) return out;
    const int p = static_cast<int>(std::min<u64>(f.field().characteristic(), INT_MAX));
    Polynomial d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree(pth_root(f))) out.emplace_back(g, m * p);
        return out;
    }
    Polynomial c = gcd(f, d);
    Polynomial w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree(pth_root(c.monic()))) out.emplace_back(g, m * p);
    }
    return out;
}

/// Equal-degree splitting of a squarefree monic f whose irreducible factors all have degree d.
inline void equal_degree_split(const Polynomial& f, int d, Rng& rng, std::vector<Polynomial>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FiniteField& F = f.field();
    const u64 q = F.order();
    while (true) {
        std::vector<FieldElement> c;
        for (long i = 0; i < f.degree(); ++i) c.push_back(F.element(rng.below(q)));
        Polynomial a(F, c);
        if (a.degree() < 1) continue;
        Polynomial b(F);
        if (q % 2 == 1) {
            // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
            Polynomial acc = a % f, cur = a % f;
            for (int i = 1; i < d; ++i) {
                cur = frobenius_mod(cur, f);
                acc = acc * cur % f;
            }
            b = powmod(acc, (q - 1) / 2, f) - Polynomial::one(F);
        } else {
            // trace to GF(2): a + a^2 + ... + a^{2^{md-1}}
            const int m = F.degree();
            Polynomial cur = a % f, acc = a % f;
            for (int i = 1; i < m * d; ++i) {
                cur = cur * cur % f;
                acc = acc + cur;
            }
            b = acc;
        }
        Polynomial g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/**
 * @brief Factorization into monic irreducibles with multiplicities, sorted by (degree, coefficients).
 *
 * Squarefree split, then distinct-degree, then equal-degree splitting driven by a fixed-seed Rng,
 * so results are deterministic. The leading coefficient is dropped.
 */
inline std::vector<std::pair<Polynomial, int>> factor(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    Rng rng(0x5eedf00dULL);
    const FiniteField& F = f.field();
    for (auto& [s, mult] : detail::squarefree(f.monic())) {
        Polynomial rest = s;
        Polynomial h = Polynomial::x(F);
        for (int d = 1; rest.degree() >= 2L * d; ++d) {
            h = detail::frobenius_mod(h, rest);
            Polynomial g = gcd(rest, h - Polynomial::x(F));
            if (g.degree() > 0) {
                std::vector<Polynomial> parts;
                detail::equal_degree_split(g, d, rng, parts);
                for (auto& pp : parts) out.emplace_back(pp, mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.emplace_back(rest.monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal factors coming from different squarefree parts (possible in characteristic p)
    std::vector<std::pair<Polynomial, int>> merged;
    for (auto& pr : out) {
        if (!merged.empty() && merged.back().first == pr.first)
            merged.back().second += pr.second;
        else
            merged.push_back(pr);
    }
    return merged;
}

/// Distinct roots in F, increasing canonical order.
inline std::vector<FieldElement> roots(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("every element is a root of the zero polynomial");
    std::vector<FieldElement> out;
    if (f.degree() < 1) return out;
    const FiniteField& F = f.field();
    if (F.order() <= 4096) {
        for (auto& a : F.elements())
            if (f(a).is_zero()) out.push_back(a);
        return out;
    }
    for (auto& [g, m] : factor(f))
        if (g.degree() == 1) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace agc
