#include "rsdh/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rsdh {

std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw Error(Err::ParseError, "field size must be >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1) throw Error(Err::ParseError, std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), m};
}

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(Err::ParseError, std::string("expected an integer for ") + what + ", got '" + s + "'");
    return std::strtoull(s.c_str(), nullptr, 10);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
    std::string head = spec;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (const auto slash = spec.find('/'); slash != std::string::npos) {
        head = spec.substr(0, slash);
        std::string tail = spec.substr(slash + 1);
        if (tail.rfind("mod=", 0) != 0)
            throw Error(Err::ParseError, "expected /mod=c0,c1,... in field spec");
        std::vector<std::uint32_t> coeffs;
        for (const auto& part : split(tail.substr(4), ','))
            coeffs.push_back(static_cast<std::uint32_t>(parse_u64(part, "modulus coefficient")));
        modulus = std::move(coeffs);
    }
    std::uint32_t p, m;
    if (const auto caret = head.find('^'); caret != std::string::npos) {
        p = static_cast<std::uint32_t>(parse_u64(head.substr(0, caret), "p"));
        m = static_cast<std::uint32_t>(parse_u64(head.substr(caret + 1), "m"));
    } else {
        std::tie(p, m) = factor_prime_power(parse_u64(head, "q"));
    }
    return build_field(p, m, std::move(modulus));
}

std::vector<Elt> parse_csv_elts(const Field& F, const std::string& s) {
    std::vector<Elt> out;
    for (const auto& part : split(s, ',')) {
        const std::uint64_t v = parse_u64(part, "element encoding");
        if (v >= F.q()) throw Error(Err::ParseError, "encoding " + part + " out of range for q=" +
                                                         std::to_string(F.q()));
        out.push_back(static_cast<Elt>(v));
    }
    return out;
}

namespace {

// factor := INT | g[^INT] | x[^INT]; term := factor (* factor)*;
// expr := [-] term ((+|-) term)*
struct PolyParser {
    const Field& F;
    std::string s;
    std::size_t pos = 0;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char take() { return s[pos++]; }

    std::uint64_t integer() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw Error(Err::ParseError, "expected an integer at position " +
                                                           std::to_string(start) + " of polynomial");
        return std::strtoull(s.substr(start, pos - start).c_str(), nullptr, 10);
    }

    std::uint64_t exponent() {
        if (peek() == '^') {
            take();
            return integer();
        }
        return 1;
    }

    // returns (coefficient, power of x)
    std::pair<Elt, std::uint64_t> factor() {
        if (peek() == 'g') {
            take();
            return {F.pow(F.primitive_element(), exponent()), 0};
        }
        if (peek() == 'x') {
            take();
            return {1, exponent()};
        }
        const std::uint64_t v = integer();
        if (v >= F.q())
            throw Error(Err::ParseError, "encoding " + std::to_string(v) + " out of range");
        return {static_cast<Elt>(v), 0};
    }

    Poly parse() {
        Poly acc = Poly::zero();
        bool first = true;
        while (pos < s.size()) {
            bool negate = false;
            if (!first || peek() == '+' || peek() == '-') {
                const char sign = take();
                if (sign == '-') negate = true;
                else if (sign != '+')
                    throw Error(Err::ParseError, std::string("expected + or - before term, got '") +
                                                     sign + "' at position " + std::to_string(pos - 1));
            }
            first = false;
            Elt coeff = 1;
            std::uint64_t xpow = 0;
            while (true) {
                auto [c, e] = factor();
                coeff = F.mul(coeff, c);
                xpow += e;
                if (xpow > F.q())
                    throw Error(Err::ParseError, "x-power exceeds q; no word has that degree");
                if (peek() == '*') {
                    take();
                    continue;
                }
                break;
            }
            if (negate) coeff = F.neg(coeff);
            if (coeff != 0) {
                if (acc.c.size() <= xpow) acc.c.resize(xpow + 1, 0);
                acc.c[xpow] = F.add(acc.c[xpow], coeff);
            }
        }
        acc.trim();
        return acc;
    }
};

}  // namespace

Poly parse_poly(const Field& F, const std::string& s) {
    std::string clean;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) clean.push_back(ch);
    if (clean.empty()) throw Error(Err::ParseError, "empty polynomial");
    if (clean.find_first_of("xg^*+-") == std::string::npos) {
        Poly f{parse_csv_elts(F, clean)};
        f.trim();
        return f;
    }
    PolyParser parser{F, clean};
    return parser.parse();
}

std::string poly_to_csv(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ',';
        os << f.c[i];
    }
    if (f.c.empty()) os << 0;
    return os.str();
}

nlohmann::json to_json(const DistanceResult& r) {
    nlohmann::json j;
    j["verdict"] = verdict_name(r.verdict);
    j["d"] = r.d ? nlohmann::json(*r.d) : nlohmann::json(nullptr);
    j["method"] = method_name(r.method);
    j["paper_case"] = r.paper_case.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.paper_case);
    if (r.witness) {
        nlohmann::json w;
        w["elements"] = r.witness->elements;
        w["extra_root"] =
            r.witness->extra_root ? nlohmann::json(*r.witness->extra_root) : nlohmann::json(nullptr);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json profile_json(const SymmetricProfile& p) {
    nlohmann::json j;
    j["t"] = p.t;
    j["e1"] = p.e1;
    j["e2"] = p.e2;
    j["psum1"] = p.psum1;
    j["psum2"] = p.psum2;
    return j;
}

}  // namespace rsdh
