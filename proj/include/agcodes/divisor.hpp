/**
 * @file divisor.hpp
 * @brief Places and divisors (finite formal sums of places).
 */
#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace agc {

/**
 * A place of a curve.
 *
 * - Affine: rational point with coordinates given as canonical field indices, (a) on P^1 and (a, b) on the Hermitian curve.
 * - Infinity: the unique point at infinity of both backends.
 * - Closed: a place of P^1 of degree >= 2, given by its monic irreducible polynomial. Degree-1 polynomials are
 *   normalised to Affine.
 * - Named: an opaque labelled place, used only to carry divisors through user-supplied dimension tables.
 */
struct Place {
    enum class Kind : int { Affine = 0, Infinity = 1, Closed = 2, Named = 3 };

    Kind kind = Kind::Infinity;
    std::vector<u64> coords;
    std::vector<u64> poly;  // monic, lowest degree first
    std::string label;
    int degree = 1;

    static Place affine(std::vector<u64> c) {
        Place p;
        p.kind = Kind::Affine;
        p.coords = std::move(c);
        return p;
    }
    static Place affine(const FieldElement& a) { return affine(std::vector<u64>{a.index()}); }
    static Place affine(const FieldElement& a, const FieldElement& b) { return affine(std::vector<u64>{a.index(), b.index()}); }
    static Place infinity() { return Place{}; }
    /// Place of P^1 defined by a monic irreducible polynomial.
    static Place closed(const Polynomial& pi) {
        if (pi.degree() < 1) throw DomainError("closed place needs a nonconstant polynomial");
        Polynomial m = pi.monic();
        if (m.degree() == 1) return affine(-m.coeff(0));
        Place p;
        p.kind = Kind::Closed;
        for (auto& c : m.coefficients()) p.poly.push_back(c.index());
        p.degree = static_cast<int>(m.degree());
        return p;
    }
    static Place named(std::string label, int degree = 1) {
        Place p;
        p.kind = Kind::Named;
        p.label = std::move(label);
        p.degree = degree;
        return p;
    }

    bool is_rational() const { return kind == Kind::Affine || kind == Kind::Infinity || (kind == Kind::Named && degree == 1); }
    bool is_infinity() const { return kind == Kind::Infinity; }

    /// Monic polynomial of a finite place of P^1 (X - a for affine places).
    Polynomial polynomial(const FiniteField& F) const {
        if (kind == Kind::Affine) return Polynomial::linear(F, F.element(coords.at(0)));
        if (kind == Kind::Closed) return Polynomial::from_indices(F, poly);
        throw DomainError("place has no defining polynomial");
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Infinity:
                os << "inf";
                break;
            case Kind::Affine:
                os << "(";
                for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
                os << ")";
                break;
            case Kind::Closed:
                os << "poly[";
                for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? "," : "") << poly[i];
                os << "]";
                break;
            case Kind::Named:
                os << label;
                break;
        }
        return os.str();
    }

    auto operator<=>(const Place&) const = default;
    bool operator==(const Place&) const = default;
};

class Divisor {
   public:
    Divisor() = default;
    Divisor(const Place& P, long m) { add(P, m); }

    static Divisor infinity_multiple(long m) { return Divisor(Place::infinity(), m); }

    /// Sum of the given places with multiplicity one each.
    static Divisor sum_of(const std::vector<Place>& pts) {
        Divisor D;
        for (auto& P : pts) D.add(P, 1);
        return D;
    }

    Divisor& add(const Place& P, long m) {
        if (m == 0) return *this;
        long& v = m_[P];
        v += m;
        if (v == 0) m_.erase(P);
        return *this;
    }

    long multiplicity(const Place& P) const {
        auto it = m_.find(P);
        return it == m_.end() ? 0 : it->second;
    }

    long degree() const {
        long d = 0;
        for (auto& [P, m] : m_) d += m * P.degree;
        return d;
    }

    bool is_zero() const { return m_.empty(); }
    bool is_effective() const {
        for (auto& [P, m] : m_)
            if (m < 0) return false;
        return true;
    }

    std::vector<Place> support() const {
        std::vector<Place> s;
        for (auto& [P, m] : m_) s.push_back(P);
        return s;
    }

    const std::map<Place, long>& terms() const { return m_; }

    Divisor positive_part() const {
        Divisor D;
        for (auto& [P, m] : m_)
            if (m > 0) D.add(P, m);
        return D;
    }
    Divisor negative_part() const {
        Divisor D;
        for (auto& [P, m] : m_)
            if (m < 0) D.add(P, -m);
        return D;
    }

    /// True when the divisor is m·P∞ for some m (including the zero divisor).
    bool is_one_point() const { return m_.empty() || (m_.size() == 1 && m_.begin()->first.is_infinity()); }

    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (auto& [P, m] : b.m_) a.add(P, m);
        return a;
    }
    friend Divisor operator-(Divisor a, const Divisor& b) {
        for (auto& [P, m] : b.m_) a.add(P, -m);
        return a;
    }
    friend Divisor operator*(long s, const Divisor& a) {
        Divisor r;
        for (auto& [P, m] : a.m_) r.add(P, s * m);
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.m_ == b.m_; }
    friend bool operator<(const Divisor& a, const Divisor& b) { return a.m_ < b.m_; }

    std::string to_string() const {
        if (m_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [P, m] : m_) {
            if (!first) os << " + ";
            first = false;
            os << m << "*" << P.to_string();
        }
        return os.str();
    }

   private:
    std::map<Place, long> m_;
};

}  // namespace agc
