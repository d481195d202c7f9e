/**
 * @file serialization.hpp
 * @brief Hex vectors (with '?' erasures), JSON field and code descriptors, McEliece key files.
 *
 * A vector over GF(q) is written as fixed-width lowercase hex groups, width = number of hex digits of q - 1.
 * An erased symbol is a group of '?'. Spaces, commas and colons between groups are ignored.
 */
#pragma once

#include <json.hpp>

#include "lrc.hpp"
#include "mceliece.hpp"

namespace agc {

using json = nlohmann::json;

inline int hex_width(const FiniteField& F) {
    int w = 1;
    for (u64 v = (F.order() - 1) >> 4; v; v >>= 4) ++w;
    return w;
}

inline std::string to_hex(const FieldElement& x, int width) {
    static const char* digits = "0123456789abcdef";
    std::string s(static_cast<std::size_t>(width), '0');
    u64 v = x.index();
    for (int i = width - 1; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

inline std::string to_hex(const Vector& v, const FiniteField& F) {
    std::string out;
    const int w = hex_width(F);
    for (auto& x : v) out += to_hex(x, w);
    return out;
}

inline std::string to_hex(const PartialWord& v, const FiniteField& F) {
    std::string out;
    const int w = hex_width(F);
    for (auto& x : v) out += x ? to_hex(*x, w) : std::string(static_cast<std::size_t>(w), '?');
    return out;
}

/// Parses a hex word; erased groups become nullopt.
inline PartialWord parse_hex_partial(const std::string& text, const FiniteField& F) {
    std::string s;
    for (char c : text)
        if (!(c == ' ' || c == ',' || c == ':' || c == '\n' || c == '\t')) s += c;
    const std::size_t w = static_cast<std::size_t>(hex_width(F));
    if (s.size() % w != 0) throw DomainError("hex word length is not a multiple of the symbol width " + std::to_string(w));
    PartialWord out;
    for (std::size_t i = 0; i < s.size(); i += w) {
        std::string g = s.substr(i, w);
        if (g.find('?') != std::string::npos) {
            if (g != std::string(w, '?')) throw DomainError("malformed erasure group '" + g + "'");
            out.push_back(std::nullopt);
            continue;
        }
        u64 v = 0;
        for (char c : g) {
            int d;
            if (c >= '0' && c <= '9')
                d = c - '0';
            else if (c >= 'a' && c <= 'f')
                d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                d = c - 'A' + 10;
            else
                throw DomainError(std::string("invalid hex digit '") + c + "'");
            v = v * 16 + static_cast<u64>(d);
        }
        out.push_back(F.element(v));
    }
    return out;
}

inline Vector parse_hex(const std::string& text, const FiniteField& F) {
    Vector out;
    for (auto& x : parse_hex_partial(text, F)) {
        if (!x) throw DomainError("unexpected erasure in a complete word");
        out.push_back(*x);
    }
    return out;
}

/// Erasures at positions of '?', filled with zero.
inline std::pair<Vector, std::vector<std::size_t>> split_erasures(const PartialWord& w, const FiniteField& F) {
    Vector y;
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) J.push_back(i);
        y.push_back(w[i] ? *w[i] : F.zero());
    }
    return {y, J};
}

// ---------------------------------------------------------------------------------------------- JSON

inline json field_to_json(const FiniteField& F) {
    json tower = json::array();
    for (auto& L : F.tower())
        if (!L.is_prime_field()) tower.push_back(L.level_degree());
    return {{"p", F.characteristic()}, {"tower", tower}, {"order", F.order()}};
}

inline FiniteField field_from_json(const json& j) {
    std::vector<int> degs = j.value("tower", std::vector<int>{});
    FiniteField F = make_field(j.at("p").get<u64>(), degs);
    if (j.contains("order") && j.at("order").get<u64>() != F.order()) throw DomainError("field descriptor order mismatch");
    return F;
}

inline json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(to_hex(M.row(i), M.field()));
    return rows;
}

inline Matrix matrix_from_json(const json& rows, const FiniteField& F, std::size_t cols) {
    Matrix M(F, 0, cols);
    for (auto& r : rows) {
        Vector v = parse_hex(r.get<std::string>(), F);
        if (v.size() != cols) throw DomainError("matrix row has the wrong length");
        M.append_row(v);
    }
    return M;
}

inline json code_to_json(const LinearCode& C) {
    return {{"field", field_to_json(C.field())}, {"n", C.length()}, {"k", C.dimension()}, {"generator", matrix_to_json(C.generator())}};
}

inline LinearCode code_from_json(const json& j) {
    FiniteField F = field_from_json(j.at("field"));
    std::size_t n = j.at("n").get<std::size_t>();
    LinearCode C(matrix_from_json(j.at("generator"), F, n));
    if (j.contains("k") && j.at("k").get<std::size_t>() != C.dimension()) throw DomainError("code descriptor dimension mismatch");
    return C;
}

inline json public_key_to_json(const McEliecePublicKey& pub) {
    return {{"field", field_to_json(pub.generator.field())}, {"n", pub.generator.cols()}, {"k", pub.generator.rows()}, {"t", pub.t},
            {"generator", matrix_to_json(pub.generator)}};
}

inline McEliecePublicKey public_key_from_json(const json& j) {
    McEliecePublicKey pub;
    FiniteField F = field_from_json(j.at("field"));
    pub.generator = matrix_from_json(j.at("generator"), F, j.at("n").get<std::size_t>());
    pub.t = j.at("t").get<std::size_t>();
    if (pub.generator.rows() != j.at("k").get<std::size_t>()) throw DomainError("public key dimension mismatch");
    return pub;
}

inline json secret_key_to_json(const McElieceKeyPair& kp) {
    return {{"base", field_to_json(kp.sec.base)},
            {"big", field_to_json(kp.sec.big)},
            {"support", to_hex(kp.sec.support, kp.sec.big)},
            {"goppa", to_hex(kp.sec.goppa.coefficients(), kp.sec.big)},
            {"seed", kp.sec.seed},
            {"public", public_key_to_json(kp.pub)}};
}

/// Rebuilds the key pair and checks that the stored public matrix matches the secret.
inline McElieceKeyPair keypair_from_json(const json& j) {
    McElieceKeyPair kp;
    kp.sec.base = field_from_json(j.at("base"));
    kp.sec.big = field_from_json(j.at("big"));
    kp.sec.support = parse_hex(j.at("support").get<std::string>(), kp.sec.big);
    kp.sec.goppa = Polynomial(kp.sec.big, parse_hex(j.at("goppa").get<std::string>(), kp.sec.big));
    kp.sec.seed = j.value("seed", u64{0});
    kp.code = mceliece_code(kp.sec);
    kp.pub = public_key_from_json(j.at("public"));
    if (!(LinearCode(kp.pub.generator) == kp.code->code)) throw DomainError("public key does not match the secret key");
    if (kp.pub.t != static_cast<std::size_t>(kp.sec.goppa.degree() / 2)) throw DomainError("public error budget does not match deg f");
    return kp;
}

}  // namespace agc
