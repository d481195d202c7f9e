/**
 * @file field.hpp
 * @brief Prime fields and towers of extension fields GF(p) ⊂ GF(p^a) ⊂ GF(p^ab) ⊂ ...
 *
 * Elements are stored as a canonical index: the coefficient vector over the immediate base level,
 * read as a number in base |base| (constant coefficient least significant). Applied recursively this
 * makes the base-p digits of the index the coordinates over the prime field, and makes every lower
 * tower level a literal prefix of the index range, so subfield embedding is the identity on indices.
 *
 * Each extension level is defined by the smallest monic irreducible polynomial in the order
 * induced by that indexing (leading coefficients compared first). Fields are interned: asking twice
 * for the same tower returns the same object, so element compatibility is a pointer comparison.
 *
 * @code
 * auto F16 = agc::make_field(2, {4});   // modulus X^4 + X + 1
 * auto a = F16.element(7), b = F16.primitive_element();
 * auto c = a * b.pow(5) + F16.one();
 * @endcode
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace agc {

using u64 = std::uint64_t;

namespace detail {

using u128 = unsigned __int128;

inline u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Prime factors of n (distinct, increasing), by trial division. Only used for group orders below 2^32.
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Largest extension field for which log/exp tables are built.
inline constexpr u64 kMaxExtensionOrder = u64{1} << 22;

namespace detail {

struct FieldData {
    u64 p = 0;
    u64 order = 0;
    int total_degree = 1;  // over the prime field
    int level_degree = 1;  // over the immediate base
    std::shared_ptr<const FieldData> base;
    std::vector<u64> modulus;  // monic, over base, lowest degree first
    u64 primitive = 0;
    std::vector<std::uint32_t> exp_table;  // length 2(order-1)
    std::vector<std::uint32_t> log_table;
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> add_table;  // order*order, only for small odd-characteristic extensions
    std::string name;

    bool is_prime_field() const { return !base; }

    u64 add(u64 a, u64 b) const {
        if (!base) {
            u64 s = a + b;
            if (s < a || s >= p) s -= p;
            return s;
        }
        if (p == 2) return a ^ b;
        if (!add_table.empty()) return add_table[a * order + b];
        u64 r = 0, w = 1;
        for (int i = 0; i < total_degree; ++i) {
            u64 da = a % p, db = b % p;
            a /= p;
            b /= p;
            u64 s = da + db;
            if (s >= p) s -= p;
            r += s * w;
            w *= p;
        }
        return r;
    }

    u64 neg(u64 a) const {
        if (!base) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        return neg_table[a];
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        if (!base) {
            if (p <= 0xffffffffull) return a * b % p;
            return mulmod64(a, b, p);
        }
        if (a == 0 || b == 0) return 0;
        return exp_table[log_table[a] + log_table[b]];
    }

    u64 inv(u64 a) const {
        if (a == 0) throw DomainError("inverse of zero");
        if (!base) {
            // extended Euclid on signed 128-bit values
            __int128 t = 0, nt = 1, r = p, nr = a;
            while (nr != 0) {
                __int128 qq = r / nr;
                __int128 tmp = t - qq * nt;
                t = nt;
                nt = tmp;
                tmp = r - qq * nr;
                r = nr;
                nr = tmp;
            }
            if (t < 0) t += p;
            return static_cast<u64>(t);
        }
        u64 l = log_table[a];
        return exp_table[l == 0 ? 0 : (order - 1) - l];
    }

    u64 pow(u64 a, u64 e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (base) {
            u64 l = static_cast<u64>((static_cast<u128>(log_table[a]) * (e % (order - 1))) % (order - 1));
            return exp_table[l];
        }
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Coordinates of a over the immediate base (length level_degree).
    std::vector<u64> digits(u64 a) const {
        std::vector<u64> out(static_cast<std::size_t>(level_degree));
        u64 qb = base ? base->order : order;
        for (auto& c : out) {
            c = a % qb;
            a /= qb;
        }
        return out;
    }
};

// ---- raw polynomial helpers over a FieldData, used while a field is being built ----

using RawPoly = std::vector<u64>;  // lowest degree first, trimmed

inline void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mul(const FieldData& F, const RawPoly& a, const RawPoly& b) {
    if (a.empty() || b.empty()) return {};
    RawPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    raw_trim(r);
    return r;
}

/// a mod m, m nonzero.
inline RawPoly raw_mod(const FieldData& F, RawPoly a, const RawPoly& m) {
    raw_trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lead_inv = F.inv(m.back());
    while (a.size() > dm) {
        u64 c = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, m[j]));
        raw_trim(a);
    }
    return a;
}

inline RawPoly raw_gcd(const FieldData& F, RawPoly a, RawPoly b) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        RawPoly r = raw_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 li = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, li);
    }
    return a;
}

inline RawPoly raw_powmod(const FieldData& F, RawPoly base, u64 e, const RawPoly& m) {
    RawPoly r{1};
    base = raw_mod(F, base, m);
    while (e) {
        if (e & 1) r = raw_mod(F, raw_mul(F, r, base), m);
        e >>= 1;
        if (e) base = raw_mod(F, raw_mul(F, base, base), m);
    }
    return r;
}

/// Ben-Or test: f of degree d is irreducible iff gcd(f, X^{Q^i} - X) = 1 for 1 <= i <= d/2.
inline bool raw_is_irreducible(const FieldData& F, const RawPoly& f) {
    if (f.size() < 2) return false;
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    RawPoly x{0, 1};
    RawPoly h = x;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        h = raw_powmod(F, h, F.order, f);
        RawPoly t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = F.sub(t[1], 1);
        raw_trim(t);
        RawPoly g = raw_gcd(F, f, t);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Smallest monic irreducible of degree d, coefficients read as a base-|F| number with c_{d-1} most significant.
inline RawPoly raw_smallest_irreducible(const FieldData& F, int d) {
    RawPoly f(static_cast<std::size_t>(d) + 1, 0);
    f[static_cast<std::size_t>(d)] = 1;
    while (true) {
        if (raw_is_irreducible(F, f)) return f;
        // increment the number (c_{d-1} ... c_0) in base |F|
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(d)) {
            if (++f[i] < F.order) break;
            f[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(d)) throw AssertionFailure("no irreducible polynomial found");
    }
}

inline std::shared_ptr<const FieldData> build_prime(u64 p) {
    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->order = p;
    d->name = "GF(" + std::to_string(p) + ")";
    // smallest primitive root
    if (p == 2) {
        d->primitive = 1;
    } else if (p <= 0xffffffffull) {
        auto fs = prime_factors(p - 1);
        for (u64 g = 2; g < p; ++g) {
            bool ok = true;
            for (u64 f : fs) {
                if (powmod64(g, (p - 1) / f, p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                d->primitive = g;
                break;
            }
        }
    }
    return d;
}

inline std::shared_ptr<const FieldData> build_extension(std::shared_ptr<const FieldData> base, int degree) {
    const FieldData& B = *base;
    u128 ord = 1;
    for (int i = 0; i < degree; ++i) {
        ord *= B.order;
        if (ord > kMaxExtensionOrder) throw GuardExceeded("extension field too large for table arithmetic");
    }
    auto d = std::make_shared<FieldData>();
    d->p = B.p;
    d->order = static_cast<u64>(ord);
    d->total_degree = B.total_degree * degree;
    d->level_degree = degree;
    d->base = base;
    d->modulus = raw_smallest_irreducible(B, degree);
    d->name = B.name + "[" + std::to_string(degree) + "]";
    const u64 q = d->order;
    const u64 qb = B.order;
    const std::size_t m = static_cast<std::size_t>(degree);
    const RawPoly& mod = d->modulus;

    auto to_vec = [&](u64 a) {
        RawPoly v(m);
        for (auto& c : v) {
            c = a % qb;
            a /= qb;
        }
        return v;
    };
    auto from_vec = [&](const RawPoly& v) {
        u64 r = 0;
        for (std::size_t i = v.size(); i-- > 0;) r = r * qb + v[i];
        return r;
    };
    // schoolbook product in B[X]/(mod), skipping zero coefficients of b
    auto slow_mul = [&](u64 a, u64 b) {
        RawPoly va = to_vec(a), vb = to_vec(b);
        RawPoly r(2 * m, 0);
        for (std::size_t j = 0; j < m; ++j) {
            if (vb[j] == 0) continue;
            for (std::size_t i = 0; i < m; ++i) {
                if (va[i] == 0) continue;
                r[i + j] = B.add(r[i + j], B.mul(va[i], vb[j]));
            }
        }
        for (std::size_t k = 2 * m - 1; k >= m; --k) {
            u64 c = r[k];
            if (c != 0) {
                r[k] = 0;
                for (std::size_t t = 0; t < m; ++t) {
                    if (mod[t] != 0) r[k - m + t] = B.sub(r[k - m + t], B.mul(c, mod[t]));
                }
            }
        }
        r.resize(m);
        return from_vec(r);
    };
    auto slow_pow = [&](u64 a, u64 e) {
        u64 r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    auto fs = prime_factors(q - 1);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (u64 f : fs) {
            if (slow_pow(g, (q - 1) / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            d->primitive = g;
            break;
        }
    }
    if (q == 2) d->primitive = 1;
    d->exp_table.assign(2 * (q - 1), 0);
    d->log_table.assign(q, 0);
    u64 x = 1;
    for (u64 i = 0; i < q - 1; ++i) {
        d->exp_table[i] = static_cast<std::uint32_t>(x);
        d->exp_table[i + q - 1] = static_cast<std::uint32_t>(x);
        d->log_table[x] = static_cast<std::uint32_t>(i);
        x = slow_mul(x, d->primitive);
    }
    if (x != 1) throw AssertionFailure("primitive element has wrong order");
    if (d->p != 2) {
        d->neg_table.assign(q, 0);
        for (u64 a = 0; a < q; ++a) {
            u64 r = 0, w = 1, t = a;
            for (int i = 0; i < d->total_degree; ++i) {
                u64 dg = t % d->p;
                t /= d->p;
                r += (dg == 0 ? 0 : d->p - dg) * w;
                w *= d->p;
            }
            d->neg_table[a] = static_cast<std::uint32_t>(r);
        }
        if (q <= 256) {
            std::vector<std::uint32_t> tab(q * q);
            for (u64 a = 0; a < q; ++a)
                for (u64 b = 0; b < q; ++b) tab[a * q + b] = static_cast<std::uint32_t>(d->add(a, b));
            d->add_table = std::move(tab);
        }
    }
    return d;
}

}  // namespace detail

class FiniteField;

/// Element of a finite field: a field pointer plus canonical index. Cheap to copy.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const detail::FieldData* f, u64 v) : field_(f), value_(v) {}

    u64 index() const { return value_; }
    const detail::FieldData* data() const { return field_; }
    FiniteField field() const;
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inverse() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(u64 e) const { return {field_, field_->pow(value_, e)}; }
    /// Signed exponent; negative powers of zero throw.
    FieldElement pow_signed(long long e) const { return e >= 0 ? pow(static_cast<u64>(e)) : inverse().pow(static_cast<u64>(-e)); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.field_, a.field_->mul(a.value_, a.field_->inv(b.value_))};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.field_ == b.field_ && a.value_ == b.value_; }
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.value_ < b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

   private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.field_ != b.field_ || a.field_ == nullptr) throw DomainError("field element operands from different fields");
    }
    const detail::FieldData* field_ = nullptr;
    u64 value_ = 0;
};

/// Shared handle to an immutable field.
class FiniteField {
   public:
    FiniteField() = default;
    explicit FiniteField(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    const detail::FieldData* data() const { return d_.get(); }
    bool valid() const { return static_cast<bool>(d_); }

    u64 characteristic() const { return d_->p; }
    u64 order() const { return d_->order; }
    /// Degree over the prime field.
    int degree() const { return d_->total_degree; }
    /// Degree over the immediate base level.
    int level_degree() const { return d_->level_degree; }
    bool is_prime_field() const { return d_->is_prime_field(); }
    const std::string& name() const { return d_->name; }

    std::optional<FiniteField> base() const {
        if (!d_->base) return std::nullopt;
        return FiniteField(d_->base);
    }

    /// All tower levels, prime field first, this field last.
    std::vector<FiniteField> tower() const {
        std::vector<FiniteField> out;
        for (auto p = d_; p; p = p->base) out.push_back(FiniteField(p));
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Defining polynomial of this level over the base, lowest degree first (empty for prime fields).
    std::vector<FieldElement> modulus() const {
        std::vector<FieldElement> out;
        for (u64 c : d_->modulus) out.emplace_back(d_->base.get(), c);
        return out;
    }

    FieldElement zero() const { return {d_.get(), 0}; }
    FieldElement one() const { return {d_.get(), 1}; }
    FieldElement element(u64 index) const {
        if (index >= d_->order) throw DomainError("element index out of range");
        return {d_.get(), index};
    }
    /// Image of an integer under Z -> GF(p) ⊂ this field.
    FieldElement from_integer(long long v) const {
        __int128 m = static_cast<__int128>(v) % static_cast<__int128>(d_->p);
        if (m < 0) m += d_->p;
        return {d_.get(), static_cast<u64>(m)};
    }
    /// Generator of the multiplicative group (the smallest index that works).
    FieldElement primitive_element() const {
        if (d_->primitive == 0) throw CapabilityError("no primitive root computed for primes above 2^32");
        return {d_.get(), d_->primitive};
    }

    std::vector<FieldElement> elements() const {
        if (d_->order > (u64{1} << 26)) throw GuardExceeded("field too large to enumerate");
        std::vector<FieldElement> out;
        out.reserve(d_->order);
        for (u64 i = 0; i < d_->order; ++i) out.emplace_back(d_.get(), i);
        return out;
    }
    std::vector<FieldElement> nonzero_elements() const {
        auto all = elements();
        all.erase(all.begin());
        return all;
    }

    /// True when sub is one of the tower levels below (or equal to) this field.
    bool has_subfield(const FiniteField& sub) const {
        for (auto p = d_; p; p = p->base)
            if (p == sub.d_) return true;
        return false;
    }

    /// Extension degree [this : sub]; sub must be a tower level.
    int degree_over(const FiniteField& sub) const {
        require_subfield(sub);
        return d_->total_degree / sub.d_->total_degree;
    }

    /// Frobenius test: a lies in sub iff a^{|sub|} = a.
    bool in_subfield(const FieldElement& a, const FiniteField& sub) const {
        require_subfield(sub);
        return d_->pow(a.index(), sub.order()) == a.index();
    }

    /// Reinterpret an element of a lower tower level as an element of this field.
    FieldElement embed(const FieldElement& a) const {
        for (auto p = d_; p; p = p->base)
            if (p.get() == a.data()) return {d_.get(), a.index()};
        throw DomainError("element does not belong to a subfield of " + d_->name);
    }

    /// Inverse of embed: view a (which must lie in sub) as an element of sub.
    FieldElement restrict_to(const FieldElement& a, const FiniteField& sub) const {
        if (!in_subfield(a, sub)) throw DomainError("element is not in the requested subfield");
        return {sub.d_.get(), a.index()};
    }

    /// Coordinates of a over the tower level sub, in the basis induced by the tower (length [this:sub]).
    std::vector<FieldElement> coordinates(const FieldElement& a, const FiniteField& sub) const {
        int m = degree_over(sub);
        std::vector<FieldElement> out;
        u64 v = a.index();
        for (int i = 0; i < m; ++i) {
            out.emplace_back(sub.d_.get(), v % sub.order());
            v /= sub.order();
        }
        return out;
    }

    FieldElement from_coordinates(const std::vector<FieldElement>& c, const FiniteField& sub) const {
        require_subfield(sub);
        u64 v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * sub.order() + c[i].index();
        return element(v);
    }

    friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.d_ == b.d_; }

   private:
    void require_subfield(const FiniteField& sub) const {
        if (!has_subfield(sub)) throw DomainError(sub.name() + " is not a subfield level of " + name());
    }
    std::shared_ptr<const detail::FieldData> d_;
};

namespace detail {

struct FieldRegistry {
    std::mutex mu;
    std::map<std::vector<u64>, std::shared_ptr<const FieldData>> by_key;  // key: p, degrees...
    std::map<const FieldData*, std::shared_ptr<const FieldData>> by_ptr;

    static FieldRegistry& instance() {
        static FieldRegistry r;
        return r;
    }
};

}  // namespace detail

inline FiniteField field_of(const detail::FieldData* d) {
    auto& reg = detail::FieldRegistry::instance();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.by_ptr.find(d);
    if (it == reg.by_ptr.end()) throw DomainError("element has no registered field");
    return FiniteField(it->second);
}

inline FiniteField FieldElement::field() const { return field_of(field_); }

/**
 * @brief Build (or fetch) the tower GF(p) ⊂ GF(p^{d1}) ⊂ GF(p^{d1 d2}) ⊂ ...
 *
 * Degree-1 entries are skipped. The result is interned, so calling with the same arguments returns
 * the same field object, and make_field(p, {a, b}).tower()[1] == make_field(p, {a}).
 * @throws DomainError if p is not prime or a degree is zero.
 * @throws GuardExceeded if some extension level exceeds kMaxExtensionOrder.
 */
inline FiniteField make_field(u64 p, const std::vector<int>& tower_degrees = {}) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    std::vector<u64> key{p};
    for (int d : tower_degrees) {
        if (d <= 0) throw DomainError("tower degrees must be positive");
        if (d > 1) key.push_back(static_cast<u64>(d));
    }
    auto& reg = detail::FieldRegistry::instance();
    std::lock_guard<std::mutex> lock(reg.mu);
    std::shared_ptr<const detail::FieldData> cur;
    std::vector<u64> prefix;
    for (std::size_t i = 0; i < key.size(); ++i) {
        prefix.push_back(key[i]);
        auto it = reg.by_key.find(prefix);
        if (it != reg.by_key.end()) {
            cur = it->second;
            continue;
        }
        cur = (i == 0) ? detail::build_prime(p) : detail::build_extension(cur, static_cast<int>(key[i]));
        reg.by_key[prefix] = cur;
        reg.by_ptr[cur.get()] = cur;
    }
    return FiniteField(cur);
}

/// Field of order q = p^e as a single extension of the prime field.
inline FiniteField make_field_of_order(u64 q) {
    if (q < 2) throw DomainError("field order must be at least 2");
    if (is_prime(q)) return make_field(q);
    for (u64 p = 2; p <= q; ++p) {
        if (p * p > q) return make_field(q);
        if (q % p == 0) {
            u64 r = q;
            int e = 0;
            while (r % p == 0) {
                r /= p;
                ++e;
            }
            if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
            return make_field(p, {e});
        }
    }
    return make_field(q);
}

/// The tower level of degree m directly above F.
inline FiniteField extend_field(const FiniteField& F, int m) {
    std::vector<int> degs;
    for (auto& L : F.tower())
        if (!L.is_prime_field()) degs.push_back(L.level_degree());
    degs.push_back(m);
    return make_field(F.characteristic(), degs);
}

}  // namespace agc
