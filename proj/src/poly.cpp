#include "rsdh/poly.hpp"

#include <algorithm>

namespace rsdh {

Elt eval(const Field& F, const Poly& f, Elt x) {
    F.check(x);
    Elt acc = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_scale(const Field& F, const Poly& a, Elt s) {
    if (s == 0) return Poly::zero();
    Poly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i])
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    r.trim();
    return r;
}

Poly monic_from_roots(const Field& F, const std::vector<Elt>& roots) {
    Poly f{{1}};
    for (Elt r : roots) {
        F.check(r);
        // multiply by (x - r)
        f.c.insert(f.c.begin(), 0);
        const Elt neg_r = F.neg(r);
        for (std::size_t i = 0; i + 1 < f.c.size(); ++i)
            f.c[i] = F.add(f.c[i], F.mul(neg_r, f.c[i + 1]));
    }
    return f;
}

Poly lagrange_interpolate(const Field& F, const std::vector<Elt>& xs, const std::vector<Elt>& us) {
    if (xs.size() != us.size()) throw Error(Err::LengthMismatch, "node/value count mismatch");
    if (xs.empty() || xs.size() > F.q()) throw Error(Err::OutOfRange, "need 1 <= n <= q nodes");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        F.check(xs[i]);
        F.check(us[i]);
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j]) throw Error(Err::DuplicateNode, "repeated interpolation node");
    }
    const std::size_t n = xs.size();
    const Poly master = monic_from_roots(F, xs);
    Poly acc = Poly::zero();
    std::vector<Elt> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (us[i] == 0) continue;
        // basis_i = master / (x - x_i), by synthetic division
        Elt carry = master.c[n];
        for (std::size_t d = n; d-- > 0;) {
            basis[d] = carry;
            carry = F.add(master.c[d], F.mul(xs[i], carry));
        }
        Elt denom = 0;
        {
            // basis_i(x_i)
            Elt accv = 0;
            for (std::size_t d = n; d-- > 0;) accv = F.add(F.mul(accv, xs[i]), basis[d]);
            denom = accv;
        }
        const Elt s = F.div(us[i], denom);
        if (acc.c.size() < n) acc.c.resize(n, 0);
        for (std::size_t d = 0; d < n; ++d) acc.c[d] = F.add(acc.c[d], F.mul(s, basis[d]));
    }
    acc.trim();
    return acc;
}

SymmetricProfile symmetric_profile(const Field& F, const std::vector<Elt>& values) {
    SymmetricProfile s;
    s.t = values.size();
    for (Elt y : values) {
        F.check(y);
        s.e2 = F.add(s.e2, F.mul(s.e1, y));
        s.e1 = F.add(s.e1, y);
        s.psum2 = F.add(s.psum2, F.mul(y, y));
    }
    s.psum1 = s.e1;
    return s;
}

}  // namespace rsdh
