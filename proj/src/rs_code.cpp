#include "rsdh/rs_code.hpp"

#include <algorithm>

namespace rsdh {

const char* kind_name(RSCode::Kind kind) {
    switch (kind) {
        case RSCode::Kind::Standard: return "standard";
        case RSCode::Kind::Primitive: return "primitive";
        case RSCode::Kind::Generalized: return "generalized";
    }
    return "?";
}

namespace {

RSCode::Kind classify(const Field& F, const std::vector<Elt>& D) {
    std::vector<Elt> s(D);
    std::sort(s.begin(), s.end());
    if (s.size() == F.q()) {
        bool all = true;
        for (std::size_t i = 0; i < s.size(); ++i) all = all && s[i] == i;
        if (all) return RSCode::Kind::Standard;
    }
    if (s.size() == F.q() - 1u) {
        bool units = true;
        for (std::size_t i = 0; i < s.size(); ++i) units = units && s[i] == i + 1;
        if (units) return RSCode::Kind::Primitive;
    }
    return RSCode::Kind::Generalized;
}

}  // namespace

RSCode RSCode::generalized(const Field& F, std::vector<Elt> D, std::uint32_t k) {
    if (D.size() < 2 || D.size() > F.q()) throw Error(Err::OutOfRange, "evaluation set size");
    std::vector<bool> seen(F.q(), false);
    for (Elt x : D) {
        F.check(x);
        if (seen[x]) throw Error(Err::DuplicateNode, "evaluation set must be pairwise distinct");
        seen[x] = true;
    }
    if (k < 1 || k >= D.size()) throw Error(Err::OutOfRange, "need 1 <= k < n");
    RSCode c;
    c.field = &F;
    c.D = std::move(D);
    c.k = k;
    c.kind = classify(F, c.D);
    return c;
}

RSCode RSCode::standard(const Field& F, std::uint32_t k) {
    std::vector<Elt> D(F.q());
    for (Elt i = 0; i < F.q(); ++i) D[i] = i;
    return generalized(F, std::move(D), k);
}

RSCode RSCode::primitive(const Field& F, std::uint32_t k) {
    std::vector<Elt> D(F.q() - 1);
    for (Elt i = 1; i < F.q(); ++i) D[i - 1] = i;
    return generalized(F, std::move(D), k);
}

ReceivedWord make_word(const RSCode& code, std::vector<Elt> values) {
    if (values.size() != code.D.size()) throw Error(Err::LengthMismatch, "word length != |D|");
    ReceivedWord w;
    w.interp = lagrange_interpolate(*code.field, code.D, values);
    w.values = std::move(values);
    return w;
}

ReceivedWord word_from_poly(const RSCode& code, const Poly& f) {
    if (f.degree() >= static_cast<int>(code.n()))
        throw Error(Err::DegreeOutOfRange, "polynomial degree must be <= n-1");
    std::vector<Elt> vals(code.n());
    for (std::size_t i = 0; i < code.D.size(); ++i) vals[i] = eval(*code.field, f, code.D[i]);
    ReceivedWord w;
    w.values = std::move(vals);
    w.interp = f;
    return w;
}

ReceivedWord encode(const RSCode& code, const std::vector<Elt>& message) {
    if (message.size() != code.k) throw Error(Err::LengthMismatch, "message length != k");
    Poly f{message};
    f.trim();
    return word_from_poly(code, f);
}

int word_degree(const ReceivedWord& u) { return u.interp.degree(); }

std::size_t hamming_distance(const std::vector<Elt>& a, const std::vector<Elt>& b) {
    if (a.size() != b.size()) throw Error(Err::LengthMismatch, "word lengths differ");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::pair<int, int> degree_bounds(const RSCode& code, const ReceivedWord& u) {
    const int deg = word_degree(u);
    const int n = static_cast<int>(code.n());
    if (deg < static_cast<int>(code.k) || deg > n - 1)
        throw Error(Err::DegreeOutOfRange, "need k <= deg(u) <= n-1");
    return {n - deg, n - static_cast<int>(code.k)};
}

MonicTop monic_top(const RSCode& code, const ReceivedWord& u) {
    const Field& F = *code.field;
    const int deg = word_degree(u);
    const int k = static_cast<int>(code.k);
    if (deg != k + 1 && deg != k + 2)
        throw Error(Err::DegreeMismatch, "monic_top needs deg(u) in {k+1, k+2}");
    const Elt lead_inv = F.inv(u.interp.c.back());
    MonicTop t;
    t.deg = deg;
    t.b = F.neg(F.mul(lead_inv, u.interp.coeff(deg - 1)));
    if (deg == k + 2) t.c = F.mul(lead_inv, u.interp.coeff(deg - 2));
    return t;
}

}  // namespace rsdh
