/**
 * @file linear_code.hpp
 * @brief Linear codes: duality, exhaustive minimum distance, restriction, subfield subcodes, star products.
 */
#pragma once

#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "matrix.hpp"

namespace agc {

/// Default cap on q^k for exhaustive enumeration.
inline constexpr u64 kDefaultEnumerationGuard = u64{1} << 24;

class LinearCode {
   public:
    LinearCode() = default;

    /// Row space of the given matrix (rows need not be independent).
    explicit LinearCode(Matrix spanning) : G_(std::move(spanning)) {
        pivots_ = G_.rref();
        H_ = G_.kernel();
    }

    static LinearCode from_rows(const FiniteField& F, std::size_t n, const std::vector<Vector>& rows) {
        Matrix M(F, 0, n);
        for (auto& r : rows) M.append_row(r);
        return LinearCode(std::move(M));
    }
    /// Kernel code {x : H x^T = 0}.
    static LinearCode from_parity_check(const Matrix& H) { return LinearCode(H.kernel()); }
    static LinearCode full_space(const FiniteField& F, std::size_t n) { return LinearCode(Matrix::identity(F, n)); }
    static LinearCode zero_code(const FiniteField& F, std::size_t n) { return LinearCode(Matrix(F, 0, n)); }
    static LinearCode repetition(const FiniteField& F, std::size_t n) { return from_rows(F, n, {Vector(n, F.one())}); }

    const FiniteField& field() const { return G_.field(); }
    std::size_t length() const { return G_.cols(); }
    std::size_t dimension() const { return G_.rows(); }
    /// Generator in reduced row echelon form.
    const Matrix& generator() const { return G_; }
    /// Parity-check matrix (RREF basis of the dual).
    const Matrix& parity_check() const { return H_; }
    /// Pivot columns of the RREF generator: an information set.
    const std::vector<std::size_t>& information_set() const { return pivots_; }

    Vector encode(const Vector& msg) const {
        if (msg.size() != dimension()) throw DomainError("message length must equal the code dimension");
        return G_.left_apply(msg);
    }

    /// Inverse of encode for codewords (reads the information set).
    Vector unencode(const Vector& c) const {
        Vector m;
        for (auto p : pivots_) m.push_back(c.at(p));
        return m;
    }

    Vector syndrome(const Vector& v) const { return H_.apply(v); }

    bool contains(const Vector& v) const {
        if (v.size() != length()) return false;
        for (auto& s : syndrome(v))
            if (!s.is_zero()) return false;
        return true;
    }

    /// C ⊆ other
    bool is_subcode_of(const LinearCode& other) const {
        for (std::size_t i = 0; i < dimension(); ++i)
            if (!other.contains(G_.row(i))) return false;
        return true;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.G_ == b.G_ && a.field() == b.field(); }

   private:
    Matrix G_, H_;
    std::vector<std::size_t> pivots_;
};

inline LinearCode dual(const LinearCode& C) { return LinearCode(C.parity_check()); }

inline bool has_full_support(const LinearCode& C) {
    const Matrix& G = C.generator();
    for (std::size_t j = 0; j < G.cols(); ++j) {
        bool nz = false;
        for (std::size_t i = 0; i < G.rows() && !nz; ++i) nz = G.raw(i, j) != 0;
        if (!nz) return false;
    }
    return true;
}

namespace detail {

inline u64 checked_power(u64 q, std::size_t k, u64 guard) {
    u128 v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        v *= q;
        if (v > guard) throw GuardExceeded("exhaustive enumeration of q^k = " + std::to_string(q) + "^" + std::to_string(k) + " codewords exceeds the guard");
    }
    return static_cast<u64>(v);
}

/**
 * Visit one representative of every projective point of the code (one codeword per line through 0).
 * fn(raw codeword as vector<u64>) is called for each; lead selects which jobs share the work.
 */
template <class Fn>
void for_each_projective_codeword(const Matrix& G, std::size_t lead, std::size_t start_level_value, bool split, Fn&& fn) {
    const auto* D = G.field().data();
    const std::size_t k = G.rows(), n = G.cols();
    const u64 q = D->order;
    std::vector<std::vector<u64>> acc(k + 1, std::vector<u64>(n, 0));
    for (std::size_t j = 0; j < n; ++j) acc[lead + 1][j] = G.raw(lead, j);
    // multiples table when small
    const bool use_table = q * k * n <= (u64{1} << 22);
    std::vector<u64> table;
    if (use_table) {
        table.resize(q * k * n);
        for (std::size_t i = 0; i < k; ++i)
            for (u64 a = 0; a < q; ++a)
                for (std::size_t j = 0; j < n; ++j) table[(i * q + a) * n + j] = D->mul(a, G.raw(i, j));
    }
    // recursive descent over coefficients of rows lead+1 .. k-1
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == k) {
            fn(acc[row]);
            return;
        }
        u64 a_lo = 0, a_hi = q;
        if (split && row == lead + 1) {
            a_lo = start_level_value;
            a_hi = start_level_value + 1;
        }
        for (u64 a = a_lo; a < a_hi; ++a) {
            auto& dst = acc[row + 1];
            const auto& src = acc[row];
            if (a == 0) {
                dst = src;
            } else if (use_table) {
                const u64* t = &table[(row * q + a) * n];
                for (std::size_t j = 0; j < n; ++j) dst[j] = D->add(src[j], t[j]);
            } else {
                for (std::size_t j = 0; j < n; ++j) dst[j] = D->add(src[j], D->mul(a, G.raw(row, j)));
            }
            self(self, row + 1);
        }
    };
    rec(rec, lead + 1);
}

struct EnumTask {
    std::size_t lead;
    bool split;
    u64 value;
};

inline std::vector<EnumTask> enumeration_tasks(std::size_t k, u64 q) {
    std::vector<EnumTask> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        if (lead + 1 < k) {
            for (u64 a = 0; a < q; ++a) tasks.push_back({lead, true, a});
        } else {
            tasks.push_back({lead, false, 0});
        }
    }
    return tasks;
}

}  // namespace detail

/**
 * @brief Exact minimum distance by enumerating all codewords up to scalars.
 * @param guard refuse (GuardExceeded) when q^k exceeds this.
 * @param jobs worker threads; the result does not depend on it.
 * @throws DomainError for the zero code.
 */
inline std::size_t min_distance(const LinearCode& C, u64 guard = kDefaultEnumerationGuard, unsigned jobs = 1) {
    const std::size_t k = C.dimension(), n = C.length();
    if (k == 0) throw DomainError("the zero code has no minimum distance");
    const u64 q = C.field().order();
    detail::checked_power(q, k, guard);
    const Matrix& G = C.generator();
    auto tasks = detail::enumeration_tasks(k, q);
    std::atomic<std::size_t> best{n};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        std::size_t local = n;
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            if (best.load() == 1) break;
            const auto& task = tasks[t];
            detail::for_each_projective_codeword(G, task.lead, task.value, task.split, [&](const std::vector<u64>& c) {
                std::size_t w = 0;
                for (u64 x : c) w += (x != 0);
                if (w < local) local = w;
            });
            std::size_t cur = best.load();
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> th;
        for (unsigned i = 0; i < jobs; ++i) th.emplace_back(worker);
        for (auto& t : th) t.join();
    }
    return best.load();
}

/// Weight distribution A_0..A_n by full enumeration (guarded).
inline std::vector<u64> weight_distribution(const LinearCode& C, u64 guard = kDefaultEnumerationGuard) {
    const std::size_t k = C.dimension(), n = C.length();
    std::vector<u64> A(n + 1, 0);
    A[0] = 1;
    if (k == 0) return A;
    const u64 q = C.field().order();
    detail::checked_power(q, k, guard);
    for (auto& task : detail::enumeration_tasks(k, q))
        detail::for_each_projective_codeword(C.generator(), task.lead, task.value, task.split, [&](const std::vector<u64>& c) {
            std::size_t w = 0;
            for (u64 x : c) w += (x != 0);
            A[w] += q - 1;
        });
    return A;
}

/// Projection onto the coordinates in I (in the given order).
inline LinearCode restrict(const LinearCode& C, const std::vector<std::size_t>& I) {
    if (I.empty()) throw DomainError("restriction to an empty index set");
    for (auto i : I)
        if (i >= C.length()) throw DomainError("restriction index out of range");
    return LinearCode(C.generator().select_columns(I));
}

/// Codewords of C with all coordinates in the tower level `base`, as a code over base.
inline LinearCode subfield_subcode(const LinearCode& C, const FiniteField& base) {
    const FiniteField& F = C.field();
    if (!F.has_subfield(base)) throw DomainError(base.name() + " is not a subfield of " + F.name());
    const Matrix& H = C.parity_check();
    const int m = F.degree_over(base);
    const std::size_t n = C.length();
    // each check row h gives m base-field rows: coordinate t of Σ h_j x_j is Σ coord_t(h_j) x_j
    Matrix B(base, H.rows() * static_cast<std::size_t>(m), n);
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            auto co = F.coordinates(H(r, j), base);
            for (int t = 0; t < m; ++t) B.set(r * static_cast<std::size_t>(m) + static_cast<std::size_t>(t), j, co[static_cast<std::size_t>(t)]);
        }
    if (H.rows() == 0) return LinearCode::full_space(base, n);
    return LinearCode::from_parity_check(B);
}

/// Scalar extension of a code over a subfield to the field F (same generator).
inline LinearCode extend_scalars(const LinearCode& C, const FiniteField& F) {
    Matrix M(F, 0, C.length());
    for (std::size_t i = 0; i < C.dimension(); ++i) {
        Vector r;
        for (auto& x : C.generator().row(i)) r.push_back(F.embed(x));
        M.append_row(r);
    }
    return LinearCode(std::move(M));
}

/// Span of all c ⋆ c' over generator pairs.
inline LinearCode star_product(const LinearCode& A, const LinearCode& B) {
    if (A.length() != B.length()) throw DomainError("star product needs equal lengths");
    if (!(A.field() == B.field())) throw DomainError("star product needs a common field");
    const std::size_t n = A.length();
    Matrix M(A.field(), 0, n);
    const bool same = (&A == &B) || A == B;
    for (std::size_t i = 0; i < A.dimension(); ++i)
        for (std::size_t j = same ? i : 0; j < B.dimension(); ++j) M.append_row(star(A.generator().row(i), B.generator().row(j)));
    return LinearCode(std::move(M));
}

/// C^t = C ⋆ ... ⋆ C (t >= 1).
inline LinearCode power(const LinearCode& C, unsigned t) {
    if (t == 0) throw DomainError("power needs t >= 1");
    LinearCode R = C;
    for (unsigned i = 1; i < t; ++i) R = star_product(R, C);
    return R;
}

/// Smallest r with dim C^{r+1} = dim C^r. Requires full support.
inline unsigned regularity(const LinearCode& C) {
    if (!has_full_support(C)) throw DomainError("regularity requires a code with full support");
    LinearCode cur = C;
    unsigned r = 1;
    while (true) {
        LinearCode next = star_product(cur, C);
        if (next.dimension() == cur.dimension()) return r;
        cur = std::move(next);
        ++r;
    }
}

/// Stab(C) = {x : x ⋆ C ⊆ C}.
inline LinearCode stabilizer(const LinearCode& C) {
    const std::size_t n = C.length();
    const Matrix& H = C.parity_check();
    const Matrix& G = C.generator();
    if (H.rows() == 0) return LinearCode::full_space(C.field(), n);
    Matrix M(C.field(), 0, n);
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t l = 0; l < H.rows(); ++l) M.append_row(star(H.row(l), G.row(i)));
    if (M.rows() == 0) return LinearCode::full_space(C.field(), n);
    return LinearCode::from_parity_check(M);
}

/// Kneser-type lower bound k_1 + k_2 - dim Stab(C_1 ⋆ C_2) on dim(C_1 ⋆ C_2); may be <= 0.
inline long kneser_bound(const LinearCode& A, const LinearCode& B) {
    return static_cast<long>(A.dimension() + B.dimension()) - static_cast<long>(stabilizer(star_product(A, B)).dimension());
}

/**
 * Upper bound max(t - 1, n - (k_1 + ... + k_t) + t) on d(C_1 ⋆ ... ⋆ C_t) for codes with full support.
 * The max matters: n - Σk_i + t can drop below t - 1 (e.g. once Σk_i > n + 1) while a product of
 * full-support codes always contains words of weight <= t - 1 in that regime.
 */
inline long product_singleton_bound(std::size_t n, const std::vector<std::size_t>& ks) {
    const long t = static_cast<long>(ks.size());
    if (t < 2) throw DomainError("product Singleton bound needs at least two codes");
    long sum = 0;
    for (auto k : ks) sum += static_cast<long>(k);
    return std::max(t - 1, static_cast<long>(n) - sum + t);
}

/// Monomials x_a x_b (a <= b) in the order used by quadric_relations.
inline std::vector<std::pair<std::size_t, std::size_t>> quadratic_monomials(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) out.emplace_back(a, b);
    return out;
}

/**
 * @brief Basis of I_2(C): quadratic forms in k variables vanishing at every column of the RREF generator.
 * Each row holds coefficients in quadratic_monomials(k) order; dim = k(k+1)/2 - dim C^2.
 */
inline Matrix quadric_relations(const LinearCode& C) {
    const std::size_t k = C.dimension(), n = C.length();
    auto mons = quadratic_monomials(k);
    const Matrix& G = C.generator();
    Matrix M(C.field(), n, mons.size());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < mons.size(); ++t) M.set(j, t, G(mons[t].first, j) * G(mons[t].second, j));
    if (n == 0 || mons.empty()) return Matrix(C.field(), 0, mons.size());
    return M.kernel();
}

namespace detail {

struct Bits256 {
    std::array<u64, 4> w{};
    void set(std::size_t i) { w[i >> 6] |= u64{1} << (i & 63); }
    bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
    Bits256 operator&(const Bits256& o) const {
        Bits256 r;
        for (int i = 0; i < 4; ++i) r.w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)];
        return r;
    }
    bool subset_of(const Bits256& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[static_cast<std::size_t>(i)] & ~o.w[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    auto operator<=>(const Bits256&) const = default;
};

inline bool disjoint_family(const std::vector<Bits256>& sets, std::size_t start, const Bits256& acc, unsigned left) {
    if (acc.empty()) return true;
    if (left == 0) return false;
    for (std::size_t i = start; i < sets.size(); ++i)
        if (disjoint_family(sets, i + 1, acc & sets[i], left - 1)) return true;
    return false;
}

}  // namespace detail

/**
 * @brief t-frameproof test: every product c_1 ⋆ ... ⋆ c_t of nonzero codewords is nonzero.
 *
 * Equivalent to: no t supports have empty intersection. Only inclusion-minimal supports matter, so the
 * search runs over those. Length is limited to 256.
 */
inline bool is_frameproof(const LinearCode& C, unsigned t, u64 guard = u64{1} << 20) {
    if (t < 2) throw DomainError("frameproof order must be at least 2");
    const std::size_t k = C.dimension(), n = C.length();
    if (n > 256) throw GuardExceeded("frameproof search supports length up to 256");
    if (k == 0) return true;
    const u64 q = C.field().order();
    detail::checked_power(q, k, guard);
    std::set<detail::Bits256> supports;
    for (auto& task : detail::enumeration_tasks(k, q))
        detail::for_each_projective_codeword(C.generator(), task.lead, task.value, task.split, [&](const std::vector<u64>& c) {
            detail::Bits256 b;
            for (std::size_t j = 0; j < n; ++j)
                if (c[j]) b.set(j);
            supports.insert(b);
        });
    std::vector<detail::Bits256> all(supports.begin(), supports.end()), minimal;
    for (auto& s : all) {
        bool is_min = true;
        for (auto& o : all)
            if (!(o == s) && o.subset_of(s)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(s);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i)
        if (detail::disjoint_family(minimal, i + 1, minimal[i], t - 1)) return false;
    return true;
}

/// Direct sum on disjoint supports: coordinates of A first, then B.
inline LinearCode direct_sum(const LinearCode& A, const LinearCode& B) {
    const std::size_t na = A.length(), nb = B.length();
    Matrix M(A.field(), 0, na + nb);
    for (std::size_t i = 0; i < A.dimension(); ++i) {
        Vector r = A.generator().row(i);
        r.resize(na + nb, A.field().zero());
        M.append_row(r);
    }
    for (std::size_t i = 0; i < B.dimension(); ++i) {
        Vector r(na, A.field().zero());
        auto b = B.generator().row(i);
        r.insert(r.end(), b.begin(), b.end());
        M.append_row(r);
    }
    return LinearCode(std::move(M));
}

}  // namespace agc
