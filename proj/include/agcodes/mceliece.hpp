/**
 * @file mceliece.hpp
 * @brief Toy McEliece encryption with classical Goppa codes, decrypted by ECP decoding in the C_Ω supercode.
 *
 * The public key is the systematic (RREF) generator matrix; there are no scrambling matrices.
 * Every random choice comes from an explicit seed.
 */
#pragma once

#include "decoding.hpp"
#include "rng.hpp"

namespace agc {

struct McEliecePublicKey {
    Matrix generator;  // k x n over the base field, in RREF
    std::size_t t = 0;
};

struct McElieceSecretKey {
    Vector support;  // over the big field
    Polynomial goppa;
    FiniteField base, big;
    u64 seed = 0;
};

struct McElieceKeyPair {
    McEliecePublicKey pub;
    McElieceSecretKey sec;
    std::shared_ptr<const AGCode> code;
};

namespace detail {

inline Polynomial random_monic_irreducible(const FiniteField& F, int d, Rng& rng) {
    for (;;) {
        std::vector<FieldElement> c;
        for (int i = 0; i < d; ++i) c.push_back(F.element(rng.below(F.order())));
        c.push_back(F.one());
        Polynomial f(F, c);
        if (is_irreducible(f)) return f;
    }
}

}  // namespace detail

/// Rebuild the Goppa code from the secret and check it against the public matrix.
inline std::shared_ptr<const AGCode> mceliece_code(const McElieceSecretKey& s) {
    return std::make_shared<const AGCode>(goppa_code(s.support, s.goppa, s.base));
}

/**
 * @brief Random support of size n in GF(q0^m) and a random monic irreducible f of degree deg_f.
 * @throws DomainError if n > q0^m, deg f < 1, or the code has dimension 0.
 */
inline McElieceKeyPair mceliece_keygen(const FiniteField& base, int m, std::size_t n, int deg_f, u64 seed) {
    detail::require(m >= 1, "extension degree must be positive");
    detail::require(deg_f >= 1, "Goppa polynomial degree must be at least 1");
    FiniteField big = extend_field(base, m);
    detail::require(n >= 1 && n <= big.order(), "support size must be at most q0^m");
    Rng rng(seed);
    auto idx = rng.subset(big.order(), n);
    // subset() is sorted; shuffle for a random support order
    for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    McElieceKeyPair kp;
    for (auto i : idx) kp.sec.support.push_back(big.element(i));
    kp.sec.goppa = detail::random_monic_irreducible(big, deg_f, rng);
    kp.sec.base = base;
    kp.sec.big = big;
    kp.sec.seed = seed;
    kp.code = mceliece_code(kp.sec);
    if (kp.code->dimension() == 0) throw DomainError("these parameters give a Goppa code of dimension 0");
    kp.pub.generator = kp.code->code.generator();
    kp.pub.t = static_cast<std::size_t>(deg_f / 2);
    return kp;
}

/// c = m·G + e with w(e) = t exactly (random support, uniform nonzero values).
inline Vector mceliece_encrypt(const McEliecePublicKey& pub, const Vector& msg, u64 seed) {
    const std::size_t n = pub.generator.cols();
    detail::require(msg.size() == pub.generator.rows(), "message length must equal the code dimension");
    const FiniteField& F = pub.generator.field();
    detail::require(pub.t <= n, "error weight exceeds the length");
    Rng rng(seed);
    Vector c = pub.generator.left_apply(msg);
    for (auto i : rng.subset(n, pub.t)) c[i] = c[i] + F.element(1 + rng.below(F.order() - 1));
    return c;
}

struct McElieceDecryption {
    bool ok = false;
    Vector message;
    std::size_t error_weight = 0;
    std::string reason;
};

inline McElieceDecryption mceliece_decrypt(const McElieceKeyPair& kp, const Vector& cipher) {
    detail::require(cipher.size() == kp.pub.generator.cols(), "ciphertext has the wrong length");
    McElieceDecryption out;
    auto r = goppa_decode(*kp.code, cipher);
    if (!r.ok) {
        out.reason = r.reason;
        return out;
    }
    out.error_weight = weight(r.error);
    if (out.error_weight > kp.pub.t) {
        out.reason = "decoded error is heavier than t";
        return out;
    }
    LinearCode pubcode(kp.pub.generator);
    out.message = pubcode.unencode(r.codeword);
    out.ok = true;
    return out;
}

}  // namespace agc
