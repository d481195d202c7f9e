// agc: command-line front end for the agcodes library.
//
// Exit codes: 0 success, 1 domain error, 2 decoding failure, 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <agcodes.hpp>

#include "criteria.hpp"

using namespace agc;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitDecodeFail = 2;
constexpr int kExitUsage = 64;

struct DecodeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw DomainError("cannot write " + out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------------------------- code descriptors

struct CodeSpec {
    std::string curve = "line";
    std::string family = "cl";
    u64 q = 0, q0 = 0, base = 0;
    long m = 0;
    std::size_t n = 0;
    int goppa_degree = 0;
    std::vector<u64> points;
};

void add_code_flags(CLI::App* cmd, CodeSpec& s) {
    cmd->add_option("--curve", s.curve, "line or hermitian")->check(CLI::IsMember({"line", "hermitian"}));
    cmd->add_option("--family", s.family, "cl, comega or goppa")->check(CLI::IsMember({"cl", "comega", "goppa"}));
    cmd->add_option("--q", s.q, "field order (line)");
    cmd->add_option("--q0", s.q0, "Hermitian parameter: the curve lives over GF(q0^2)");
    cmd->add_option("--m", s.m, "G = m P_inf");
    cmd->add_option("--n", s.n, "line: use the first n nonzero field elements as points");
    cmd->add_option("--points", s.points, "line: evaluation points as field indices")->delimiter(',');
    cmd->add_option("--base", s.base, "goppa: order of the subfield");
    cmd->add_option("--goppa-degree", s.goppa_degree, "goppa: degree of the Goppa polynomial");
}

json spec_to_json(const CodeSpec& s) {
    json j{{"curve", s.curve}, {"family", s.family}};
    if (s.curve == "line") {
        j["q"] = s.q;
        j["points"] = s.points;
    } else {
        j["q0"] = s.q0;
    }
    if (s.family == "goppa") {
        j["base"] = s.base;
        j["goppa_degree"] = s.goppa_degree;
    } else {
        j["m"] = s.m;
    }
    return j;
}

CodeSpec spec_from_json(const json& j) {
    CodeSpec s;
    s.curve = j.at("curve").get<std::string>();
    s.family = j.at("family").get<std::string>();
    s.q = j.value("q", u64{0});
    s.q0 = j.value("q0", u64{0});
    s.m = j.value("m", 0L);
    s.base = j.value("base", u64{0});
    s.goppa_degree = j.value("goppa_degree", 0);
    s.points = j.value("points", std::vector<u64>{});
    return s;
}

int log_base(u64 q, u64 b) {
    int e = 0;
    u64 v = 1;
    while (v < q) {
        v *= b;
        ++e;
    }
    if (v != q || b < 2) throw DomainError(std::to_string(q) + " is not a power of " + std::to_string(b));
    return e;
}

/// Builds the code and fills in defaulted fields of the descriptor.
AGCode build_code(CodeSpec& s) {
    if (s.curve == "hermitian") {
        if (s.q0 < 2) throw DomainError("hermitian codes need --q0");
        if (s.family == "goppa") throw DomainError("goppa codes live on the line");
        auto H = std::make_shared<HermitianCurve>(s.q0);
        Divisor G = Divisor::infinity_multiple(s.m);
        return s.family == "cl" ? cl_code(H, H->affine_points(), G) : comega_code(H, H->affine_points(), G);
    }
    if (s.q < 2) throw DomainError("line codes need --q");
    if (s.family == "goppa") {
        if (s.base < 2) throw DomainError("goppa codes need --base");
        FiniteField B = make_field_of_order(s.base);
        FiniteField F = extend_field(B, log_base(s.q, s.base));
        if (s.points.empty())
            for (u64 i = 0; i < (s.n ? s.n : F.order()); ++i) s.points.push_back(i);
        Vector xs;
        for (auto i : s.points) xs.push_back(F.element(i));
        return goppa_code(xs, irreducible_poly(F, s.goppa_degree), B);
    }
    FiniteField F = make_field_of_order(s.q);
    if (s.points.empty()) {
        if (s.n >= F.order()) throw DomainError("--n must be below q");
        for (u64 i = 0; i < (s.n ? s.n : F.order()); ++i) s.points.push_back(s.n ? i + 1 : i);
    }
    Vector xs;
    for (auto i : s.points) {
        if (i >= F.order()) throw DomainError("point index " + std::to_string(i) + " is not a field element");
        xs.push_back(F.element(i));
    }
    auto X = std::make_shared<ProjectiveLine>(F);
    Divisor G = Divisor::infinity_multiple(s.m);
    return s.family == "cl" ? cl_code(X, line_points(xs), G) : comega_code(X, line_points(xs), G);
}

/// Rebuilds a code from a file written by `code build`, checking the stored generator.
AGCode load_code(const std::string& path) {
    json j = read_json(path);
    CodeSpec s = spec_from_json(j.at("descriptor"));
    AGCode c = build_code(s);
    if (j.contains("code") && !(code_from_json(j.at("code")) == c.code)) throw DomainError(path + ": stored generator does not match the descriptor");
    return c;
}

json params_json(const AGCode& c, bool exact, unsigned jobs) {
    auto p = designed_params(c);
    json j{{"n", c.length()},
           {"k", c.dimension()},
           {"genus", c.backend ? c.backend->genus() : 0},
           {"family", family_name(c.family)},
           {"field", field_to_json(c.field())},
           {"designed_distance", p.d_star},
           {"deg_G", c.G.degree()}};
    if (p.singleton_defect) j["singleton_defect_designed"] = *p.singleton_defect;
    if (exact && c.dimension() > 0) {
        auto d = min_distance(c.code, kDefaultEnumerationGuard, jobs);
        j["min_distance"] = d;
        j["singleton_defect"] = static_cast<long>(c.length()) + 1 - static_cast<long>(c.dimension()) - static_cast<long>(d);
    }
    return j;
}

std::size_t unique_radius(const AGCode& c) {
    const long g = c.backend ? c.backend->genus() : 0;
    const long t = (c.designed_distance - 1 - g) / 2;
    if (t < 0) throw DomainError("designed distance too small for the unique decoders");
    return static_cast<std::size_t>(t);
}

json decode_json(const DecodeResult& r, const FiniteField& F, std::size_t t) {
    if (!r.ok) throw DecodeFailure(r.reason);
    return {{"status", "ok"}, {"radius", t}, {"codeword", to_hex(r.codeword, F)}, {"error", to_hex(r.error, F)}, {"error_weight", weight(r.error)}};
}

// ---------------------------------------------------------------------------------------------- LRC

struct LrcSpec {
    std::string kind = "tamo-barg";
    u64 q = 13, s = 4, q0 = 3;
    std::size_t k = 6;
    long m = 2, a = 2, b = 1, layers = 2;
    bool additive = false;
};

void add_lrc_flags(CLI::App* cmd, LrcSpec& s) {
    cmd->add_option("--kind", s.kind, "tamo-barg, btv or availability2")->check(CLI::IsMember({"tamo-barg", "btv", "availability2"}));
    cmd->add_option("--q", s.q, "tamo-barg: field order");
    cmd->add_option("--group-size", s.s, "tamo-barg: size of the subgroup (locality + 1)");
    cmd->add_flag("--additive", s.additive, "tamo-barg: use an additive subgroup");
    cmd->add_option("--k", s.k, "tamo-barg: dimension");
    cmd->add_option("--q0", s.q0, "btv / availability2: Hermitian parameter");
    cmd->add_option("--m", s.m, "btv: degree bound in x");
    cmd->add_option("--layers", s.layers, "btv: number of powers of y");
    cmd->add_option("--a", s.a, "availability2: degree bound in x");
    cmd->add_option("--b", s.b, "availability2: degree bound in y");
}

LrcCode build_lrc(const LrcSpec& s) {
    if (s.kind == "btv") return btv_code(s.q0, s.m, s.layers);
    if (s.kind == "availability2") return availability2_code(s.q0, s.a, s.b);
    auto F = make_field_of_order(s.q);
    auto p = invariant_partition(F, s.additive ? GroupKind::Additive : GroupKind::Multiplicative, s.s);
    return tamo_barg(p.points, p.parts, p.g, s.k, s.s - 1);
}

json lrc_json(const LrcCode& c) {
    json parts = json::array();
    for (auto& P : c.partitions) parts.push_back({{"name", P.name}, {"locality", P.locality}, {"local_distance", P.local_distance}, {"parts", P.parts}});
    return {{"name", c.name}, {"n", c.length()}, {"k", c.dimension()}, {"designed_distance", c.designed_distance}, {"partitions", parts}, {"code", code_to_json(c.code)}};
}

// ---------------------------------------------------------------------------------------------- bounds

std::string bounds_table(const std::vector<u64>& qs) {
    std::ostringstream os;
    os << "q,ihara_lower,serre_upper,tvz_beats_gv_from,tvz_beats_gv_to\n" << std::setprecision(12);
    for (u64 q : qs) {
        agc::detail::require_prime_power(q);
        // the Ihara lower bound sqrt(q) - 1 and the TVZ line need q square
        const bool square = agc::detail::exact_sqrt(q).has_value();
        os << q << ',';
        if (square) os << static_cast<double>(dv_bound(q));
        os << ',' << static_cast<double>(serre_bound(q)) << ',';
        auto I = square && q >= 9 ? tvz_beats_gv(q) : std::nullopt;
        if (I) os << static_cast<double>(I->first) << ',' << static_cast<double>(I->second);
        else os << ',';
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------------------------- bilinear multiplication

json bilinear_json(const BilinearAlgorithm& A) {
    json alpha = json::array();
    for (auto& f : A.alpha) alpha.push_back(to_hex(f, A.base));
    json pts = json::array();
    for (auto& x : A.points) pts.push_back(x.index());
    return {{"base", field_to_json(A.base)}, {"extension", field_to_json(A.ext)}, {"length", A.length()}, {"symmetric", A.symmetric()},
            {"points", pts}, {"alpha", alpha}, {"omega", to_hex(A.omega, A.ext)}, {"verified", A.verify()}};
}

FieldElement parse_element(const std::string& hex, const FiniteField& F) {
    Vector v = parse_hex(hex, F);
    if (v.size() != 1) throw DomainError("expected exactly one field element, got '" + hex + "'");
    return v[0];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"agc: algebraic geometry codes toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned jobs = 1;
    std::string out;
    app.add_option("--jobs", jobs, "worker threads for exhaustive distance computations")->check(CLI::Range(1u, 256u));
    app.add_option("--out", out, "write the result to this file instead of stdout");

    std::function<void()> action;

    // code
    auto* code = app.add_subcommand("code", "construct AG codes")->require_subcommand(1);
    CodeSpec spec;
    bool exact = false;
    auto* code_build = code->add_subcommand("build", "construct a code and write its descriptor");
    add_code_flags(code_build, spec);
    code_build->callback([&] {
        action = [&] {
            AGCode c = build_code(spec);
            emit(dump({{"descriptor", spec_to_json(spec)}, {"code", code_to_json(c.code)}, {"params", params_json(c, false, jobs)}}), out);
        };
    });
    auto* code_params = code->add_subcommand("params", "parameters of a code");
    add_code_flags(code_params, spec);
    std::string code_file;
    code_params->add_option("--code", code_file, "descriptor written by code build (instead of flags)");
    code_params->add_flag("--exact", exact, "also compute the minimum distance by enumeration");
    code_params->callback([&] {
        action = [&] {
            AGCode c = code_file.empty() ? build_code(spec) : load_code(code_file);
            emit(dump(params_json(c, exact, jobs)), out);
        };
    });

    // encode
    std::string msg;
    auto* encode = app.add_subcommand("encode", "encode a message");
    encode->add_option("--code", code_file, "code descriptor")->required();
    encode->add_option("--msg", msg, "message as hex symbols")->required();
    encode->callback([&] {
        action = [&] {
            AGCode c = load_code(code_file);
            emit(to_hex(c.code.encode(parse_hex(msg, c.field())), c.field()) + "\n", out);
        };
    });

    // decode
    auto* decode = app.add_subcommand("decode", "decode a received word")->require_subcommand(1);
    std::string word;
    long radius = -1;
    auto decoder = [&](const std::string& name, const std::string& help) {
        auto* d = decode->add_subcommand(name, help);
        d->add_option("--code", code_file, "code descriptor")->required();
        d->add_option("--word", word, "received word as hex symbols ('?' marks an erasure)")->required();
        if (name != "erasure") d->add_option("--t", radius, "decoding radius (default: the largest certified one)");
        return d;
    };
    decoder("basic", "basic algorithm with an auxiliary divisor")->callback([&] {
        action = [&] {
            AGCode c = load_code(code_file);
            std::size_t t = radius >= 0 ? static_cast<std::size_t>(radius) : unique_radius(c);
            emit(dump(decode_json(basic_decode(c, parse_hex(word, c.field()), t), c.field(), t)), out);
        };
    });
    decoder("ecp", "error-correcting pair (Goppa codes decode in their C_Omega supercode)")->callback([&] {
        action = [&] {
            AGCode c = load_code(code_file);
            Vector y = parse_hex(word, c.field());
            if (c.family == Family::Goppa) {
                std::size_t t = static_cast<std::size_t>(c.goppa_polynomial->degree() / 2);
                emit(dump(decode_json(goppa_decode(c, y), c.field(), t)), out);
                return;
            }
            std::size_t t = radius >= 0 ? static_cast<std::size_t>(radius) : unique_radius(c);
            emit(dump(decode_json(ecp_decode(build_ecp(c, t), y), c.field(), t)), out);
        };
    });
    decoder("gs", "list decoding by interpolation with multiplicities")->callback([&] {
        action = [&] {
            AGCode c = load_code(code_file);
            const long n = static_cast<long>(c.length()), g = c.backend->genus();
            long t = radius;
            if (t < 0)
                for (long s = 0; s < n; ++s) try {
                        gs_params(n, c.evaluation_divisor.degree(), g, s);
                        t = s;
                    } catch (const DomainError&) {
                    }
            if (t < 0) throw DomainError("no certified list-decoding radius");
            auto r = gs_list_decode(c, parse_hex(word, c.field()), t, u64{1} << 20);
            json list = json::array();
            for (auto& w : r.codewords) list.push_back(to_hex(w, c.field()));
            json j{{"radius", t}, {"s", r.params.s}, {"ell", r.params.ell}, {"deg_aux", r.params.deg_aux}, {"list", list}};
            emit(dump(j), out);
            if (r.codewords.empty()) throw DecodeFailure("no codeword within distance " + std::to_string(t));
        };
    });
    decoder("erasure", "fill erased positions by linear algebra")->callback([&] {
        action = [&] {
            AGCode c = load_code(code_file);
            auto [y, J] = split_erasures(parse_hex_partial(word, c.field()), c.field());
            auto r = erasure_decode(c.code, y, J);
            if (r.status == SolveStatus::Ambiguous) throw DecodeFailure("erasures do not determine the codeword");
            if (r.status == SolveStatus::NoSolution) throw DecodeFailure("no codeword agrees with the intact symbols");
            emit(dump({{"status", "ok"}, {"erasures", J}, {"codeword", to_hex(y - r.error, c.field())}}), out);
        };
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "asymptotic bounds")->require_subcommand(1);
    std::vector<u64> qs{4, 9, 16, 25, 49, 64, 81, 121};
    auto* table = bounds->add_subcommand("table", "Ihara lower bound, Serre upper bound and the TVZ-over-GV interval per q");
    table->add_option("--q", qs, "field orders")->delimiter(',');
    table->callback([&] { action = [&] { emit(bounds_table(qs), out); }; });
    u64 tq = 64;
    std::size_t steps = 199;
    std::string format = "csv";
    auto* tvz = bounds->add_subcommand("tvz-gv", "GV and TVZ rates on a grid of delta");
    tvz->add_option("--q", tq, "square prime power")->required();
    tvz->add_option("--steps", steps, "number of interior grid points");
    tvz->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));
    tvz->callback([&] {
        action = [&] {
            std::ostringstream os;
            write_rate_csv(os, tq, steps);
            emit(os.str(), out);
        };
    });

    // lrc
    auto* lrc = app.add_subcommand("lrc", "locally recoverable codes")->require_subcommand(1);
    LrcSpec lspec;
    auto* lrc_build = lrc->add_subcommand("build", "construct an LRC and print its recovery sets");
    add_lrc_flags(lrc_build, lspec);
    lrc_build->callback([&] { action = [&] { emit(dump(lrc_json(build_lrc(lspec))), out); }; });
    auto* lrc_repair = lrc->add_subcommand("repair", "repair erased symbols from their recovery sets");
    add_lrc_flags(lrc_repair, lspec);
    std::vector<std::size_t> positions;
    lrc_repair->add_option("--word", word, "word as hex symbols with '?' for erasures")->required();
    lrc_repair->add_option("--pos", positions, "positions to repair (default: every erasure)")->delimiter(',');
    lrc_repair->callback([&] {
        action = [&] {
            LrcCode C = build_lrc(lspec);
            const FiniteField& F = C.code.field();
            PartialWord w = parse_hex_partial(word, F);
            if (w.size() != C.length()) throw DomainError("word has length " + std::to_string(w.size()) + ", code has " + std::to_string(C.length()));
            std::vector<std::size_t> todo = positions;
            if (todo.empty())
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (!w[i]) todo.push_back(i);
            json repairs = json::array();
            for (auto i : todo) {
                // repairs use only symbols that were intact on input
                auto r = local_recover_any(C, w, i);
                repairs.push_back({{"position", i}, {"symbol", to_hex(r.symbol, hex_width(F))}, {"downloaded", r.downloaded}, {"recovery_set", C.partitions[r.partition].name}});
            }
            PartialWord filled = w;
            for (auto& r : repairs) filled[r.at("position").get<std::size_t>()] = parse_element(r.at("symbol").get<std::string>(), F);
            emit(dump({{"repairs", repairs}, {"word", to_hex(filled, F)}}), out);
        };
    });

    // mceliece
    auto* mc = app.add_subcommand("mceliece", "McEliece with binary Goppa codes")->require_subcommand(1);
    u64 seed = 0, base_p = 2;
    int ext_m = 4, deg_f = 2;
    std::size_t length = 12;
    std::string key_file, pub_out;
    auto* keygen = mc->add_subcommand("keygen", "generate a key pair (secret key JSON)");
    keygen->add_option("--seed", seed, "seed")->required();
    keygen->add_option("--p", base_p, "base field order");
    keygen->add_option("--m", ext_m, "support field GF(p^m)");
    keygen->add_option("--n", length, "code length");
    keygen->add_option("--deg", deg_f, "degree of the Goppa polynomial (t = deg/2)");
    keygen->add_option("--pub-out", pub_out, "also write the public key here");
    keygen->callback([&] {
        action = [&] {
            auto kp = mceliece_keygen(make_field_of_order(base_p), ext_m, length, deg_f, seed);
            if (!pub_out.empty()) emit(dump(public_key_to_json(kp.pub)), pub_out);
            emit(dump(secret_key_to_json(kp)), out);
        };
    });
    auto* enc = mc->add_subcommand("enc", "encrypt a message");
    enc->add_option("--key", key_file, "public key (or secret key) JSON")->required();
    enc->add_option("--msg", msg, "message as hex symbols")->required();
    enc->add_option("--seed", seed, "seed for the error vector")->required();
    enc->callback([&] {
        action = [&] {
            json j = read_json(key_file);
            auto pub = public_key_from_json(j.contains("public") ? j.at("public") : j);
            emit(to_hex(mceliece_encrypt(pub, parse_hex(msg, pub.generator.field()), seed), pub.generator.field()) + "\n", out);
        };
    });
    std::string cipher;
    auto* dec = mc->add_subcommand("dec", "decrypt a ciphertext");
    dec->add_option("--key", key_file, "secret key JSON")->required();
    dec->add_option("--cipher", cipher, "ciphertext as hex symbols")->required();
    dec->callback([&] {
        action = [&] {
            auto kp = keypair_from_json(read_json(key_file));
            const FiniteField& F = kp.pub.generator.field();
            auto r = mceliece_decrypt(kp, parse_hex(cipher, F));
            if (!r.ok) throw DecodeFailure(r.reason);
            emit(dump({{"message", to_hex(r.message, F)}, {"error_weight", r.error_weight}}), out);
        };
    });

    // cc-mult
    auto* cc = app.add_subcommand("cc-mult", "bilinear multiplication in GF(q^k) by evaluation on P^1")->require_subcommand(1);
    u64 cq = 7;
    int ck = 3;
    std::string xs, ys;
    auto cc_flags = [&](CLI::App* c) {
        c->add_option("--q", cq, "base field order");
        c->add_option("--k", ck, "extension degree");
    };
    auto* cc_b = cc->add_subcommand("build", "print the algorithm");
    cc_flags(cc_b);
    cc_b->callback([&] { action = [&] { emit(dump(bilinear_json(cc_build(make_field_of_order(cq), ck))), out); }; });
    auto* cc_m = cc->add_subcommand("mul", "multiply two elements of GF(q^k) with the algorithm");
    cc_flags(cc_m);
    cc_m->add_option("--x", xs, "first factor (hex index in GF(q^k))")->required();
    cc_m->add_option("--y", ys, "second factor (hex index in GF(q^k))")->required();
    cc_m->callback([&] {
        action = [&] {
            auto A = cc_build(make_field_of_order(cq), ck);
            auto x = parse_element(xs, A.ext), y = parse_element(ys, A.ext);
            auto p = A.multiply(x, y);
            if (p != x * y) throw AssertionFailure("bilinear algorithm disagrees with field multiplication");
            const int w = hex_width(A.ext);
            emit(dump({{"x", to_hex(x, w)}, {"y", to_hex(y, w)}, {"product", to_hex(p, w)}, {"multiplications", A.length()}}), out);
        };
    });

    // selftest
    bool timings = false;
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_flag("--timings", timings, "print per-criterion wall time");
    int self_failed = 0;
    self->callback([&] {
        action = [&] {
            std::ostringstream os;
            self_failed = acceptance::run_all(os, jobs, timings);
            emit(os.str(), out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }
    try {
        if (action) action();
    } catch (const DecodeFailure& e) {
        std::cerr << "decode FAIL: " << e.what() << "\n";
        return kExitDecodeFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kExitDomain;
    }
    return self_failed ? kExitDomain : 0;
}
