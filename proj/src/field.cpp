#include "rsdh/field.hpp"

#include <algorithm>
#include <numeric>

namespace rsdh {

const char* err_name(Err e) {
    switch (e) {
        case Err::NotPrime: return "NotPrime";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ZeroElement: return "ZeroElement";
        case Err::CharacteristicTwo: return "CharacteristicTwo";
        case Err::CharacteristicNotTwo: return "CharacteristicNotTwo";
        case Err::TrivialField: return "TrivialField";
        case Err::DuplicateNode: return "DuplicateNode";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::DegreeOutOfRange: return "DegreeOutOfRange";
        case Err::TooLarge: return "TooLarge";
        case Err::OutOfRange: return "OutOfRange";
        case Err::OutOfTheoremRange: return "OutOfTheoremRange";
        case Err::DegenerateConstant: return "DegenerateConstant";
        case Err::SearchExhausted: return "SearchExhausted";
        case Err::ZeroCoefficient: return "ZeroCoefficient";
        case Err::Undecidable: return "Undecidable";
        case Err::InconsistencyDetected: return "InconsistencyDetected";
        case Err::ParseError: return "ParseError";
    }
    return "Error";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// GF(p)[x] helpers on ascending coefficient vectors (trimmed).
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic. Returns trimmed remainder.
PPoly pmod(PPoly f, const PPoly& g, std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (lead) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint64_t v = f[shift + i] + static_cast<std::uint64_t>(p - g[i] % p) * lead;
                f[shift + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        f.pop_back();
    }
    ptrim(f);
    return f;
}

bool poly_irreducible(const PPoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::size_t d = 1; d <= m / 2; ++d) {
        PPoly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (pmod(f, g, p).empty()) return false;
            // next coefficient tuple (ascending order over low digits)
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Err::NotPrime, "p = " + std::to_string(p));
    if (m < 1) throw Error(Err::DegreeMismatch, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > (1u << 16)) throw Error(Err::TooLarge, "field size cap is q <= 2^16");
    }
    p_ = p;
    m_ = m;
    q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        if (modulus->size() != m + 1 || modulus->back() != 1)
            throw Error(Err::DegreeMismatch, "modulus must be monic of degree m");
        for (auto c : *modulus)
            if (c >= p) throw Error(Err::DegreeMismatch, "modulus coefficient out of range");
        if (m > 1 && !poly_irreducible(*modulus, p))
            throw Error(Err::ReducibleModulus, "modulus factors over GF(p)");
        mod_ = *modulus;
    } else if (m == 1) {
        mod_ = {0, 1};  // x - 0 convention for prime fields
    } else {
        // Lexicographically smallest monic irreducible, ascending tuple
        // (c0, c1, ..., c_{m-1}) with c0 most significant in the ordering.
        std::vector<std::uint32_t> tup(m, 0);
        bool found = false;
        while (!found) {
            PPoly f(tup.begin(), tup.end());
            f.push_back(1);
            if (poly_irreducible(f, p)) {
                mod_ = f;
                found = true;
                break;
            }
            int i = static_cast<int>(m) - 1;
            while (i >= 0 && ++tup[i] == p) tup[i--] = 0;
            if (i < 0) break;
        }
        if (!found) throw Error(Err::ReducibleModulus, "no irreducible modulus found");
    }
    build_tables();
}

std::vector<std::uint32_t> Field::digits(Elt a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elt Field::from_digits(const std::vector<std::uint32_t>& d) const {
    Elt v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return v;
}

Elt Field::mul_digits(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        if (da[i])
            for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    // reduce by the monic modulus
    for (std::size_t d = prod.size(); d-- > m_;) {
        std::uint64_t lead = prod[d] % p_;
        prod[d] = 0;
        if (lead) {
            for (std::uint32_t i = 0; i < m_; ++i)
                prod[d - m_ + i] += lead * ((p_ - mod_[i] % p_) % p_);
        }
    }
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
    return from_digits(out);
}

void Field::build_tables() {
    neg_.resize(q_);
    for (Elt a = 0; a < q_; ++a) {
        auto d = digits(a);
        for (auto& x : d) x = (p_ - x) % p_;
        neg_[a] = from_digits(d);
    }
    if (static_cast<std::uint64_t>(q_) * q_ <= (1u << 20)) {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elt a = 0; a < q_; ++a) {
            auto da = digits(a);
            for (Elt b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<std::uint32_t> s(m_);
                for (std::uint32_t i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[static_cast<std::size_t>(a) * q_ + b] = from_digits(s);
            }
        }
    }

    if (q_ == 2) {
        g_ = 1;
        exp_ = {1};
        log_ = {0, 0};
        return;
    }
    const auto factors = prime_factors(q_ - 1);
    auto pow_raw = [&](Elt a, std::uint64_t e) {
        Elt r = 1;
        while (e) {
            if (e & 1) r = mul_digits(r, a);
            a = mul_digits(a, a);
            e >>= 1;
        }
        return r;
    };
    g_ = 0;
    for (Elt cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (auto f : factors)
            if (pow_raw(cand, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            g_ = cand;
            break;
        }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    exp_[0] = 1;
    for (std::uint32_t i = 1; i < q_ - 1; ++i) exp_[i] = mul_digits(exp_[i - 1], g_);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
}

Elt Field::add(Elt a, Elt b) const {
    check(a);
    check(b);
    if (p_ == 2) return a ^ b;
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> s(m_);
    for (std::uint32_t i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
    return from_digits(s);
}

Elt Field::neg(Elt a) const {
    check(a);
    return neg_[a];
}

Elt Field::mul(Elt a, Elt b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Elt Field::inv(Elt a) const {
    check(a);
    if (a == 0) throw Error(Err::DivisionByZero, "inv(0)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt Field::pow(Elt a, std::uint64_t e) const {
    check(a);
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

std::uint32_t Field::log(Elt a) const {
    check(a);
    if (a == 0) throw Error(Err::ZeroElement, "log(0)");
    return log_[a];
}

int Field::eta(Elt a) const {
    if (p_ == 2) throw Error(Err::CharacteristicTwo, "quadratic character needs odd characteristic");
    check(a);
    if (a == 0) return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
}

Elt Field::sqrt_char2(Elt a) const {
    if (p_ != 2) throw Error(Err::CharacteristicNotTwo, "sqrt_char2 needs characteristic 2");
    check(a);
    return pow(a, q_ / 2);
}

std::uint64_t Field::element_order(Elt a) const {
    check(a);
    if (a == 0) throw Error(Err::ZeroElement, "order of 0");
    if (q_ == 2) return 1;
    return (q_ - 1) / std::gcd<std::uint64_t>(q_ - 1, log_[a]);
}

Field build_field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus) {
    return Field(p, m, std::move(modulus));
}

}  // namespace rsdh
