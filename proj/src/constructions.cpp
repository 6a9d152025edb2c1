#include "rsdh/constructions.hpp"

#include <algorithm>
#include <set>

namespace rsdh {

namespace {

void verify_witness(const Field& F, const std::vector<Elt>& w, std::uint32_t t, bool units) {
    if (w.size() != t) throw Error(Err::InconsistencyDetected, "witness has wrong size");
    std::set<Elt> seen;
    for (Elt x : w) {
        F.check(x);
        if (units && x == 0) throw Error(Err::InconsistencyDetected, "witness element is zero");
        if (!seen.insert(x).second) throw Error(Err::InconsistencyDetected, "witness repeats an element");
    }
}

Elt geom_sum(const Field& F, std::uint32_t count) {
    Elt s = 0;
    for (std::uint32_t j = 0; j < count; ++j) s = F.add(s, F.exp(j));
    return s;
}

std::vector<Elt> complement_of(const Field& F, const std::vector<Elt>& w, bool units) {
    std::vector<bool> in(F.q(), false);
    for (Elt x : w) in[x] = true;
    std::vector<Elt> out;
    for (Elt x = units ? 1 : 0; x < F.q(); ++x)
        if (!in[x]) out.push_back(x);
    return out;
}

std::vector<Elt> pm_pairs(const Field& F, std::uint32_t npairs, const std::set<Elt>& excluded) {
    std::vector<Elt> out;
    for (Elt x = 1; x < F.q() && out.size() < 2 * npairs; ++x) {
        const Elt nx = F.neg(x);
        if (x >= nx) continue;  // one visit per pair
        if (excluded.count(x) || excluded.count(nx)) continue;
        out.push_back(x);
        out.push_back(nx);
    }
    if (out.size() != 2 * npairs) throw Error(Err::SearchExhausted, "not enough +/- pairs");
    return out;
}

std::optional<std::vector<Elt>> sum_impl(const Field& F, WitnessDomain domain, std::uint32_t t,
                                         Elt b);

// p = 2, b = 0, 3 <= t <= q/2: base powers g..g^(t-2) plus a pigeonhole pair.
std::vector<Elt> pigeonhole_zero_sum(const Field& F, std::uint32_t t) {
    const std::uint32_t q = F.q();
    std::vector<Elt> base;
    Elt w0 = 0;
    for (std::uint32_t e = 1; e + 1 <= t - 1; ++e) {
        base.push_back(F.exp(e));
        w0 = F.add(w0, F.exp(e));
    }
    auto in_base = [&](Elt x) {
        if (x == 0) return false;
        const std::uint32_t lg = F.log(x);
        return lg >= 1 && lg <= t - 2;
    };
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        const Elt x = F.exp(i);
        if (in_base(x)) continue;
        const Elt w = F.add(w0, x);
        if (w == 0 || w == x || in_base(w)) continue;
        std::vector<Elt> out = base;
        out.push_back(x);
        out.push_back(w);
        return out;
    }
    throw Error(Err::SearchExhausted, "pigeonhole pair not found");
}

std::optional<std::vector<Elt>> sum_whole_field(const Field& F, std::uint32_t t, Elt b) {
    const std::uint32_t q = F.q();
    if (t == q) {
        const Elt total = q == 2 ? 1 : 0;
        if (b != total) return std::nullopt;
        std::vector<Elt> all(q);
        for (Elt x = 0; x < q; ++x) all[x] = x;
        return all;
    }
    if (t == 1) return std::vector<Elt>{b};
    if (b != 0) {
        // scaling recipe: 0 together with b*u^{-1}*g^j, u = 1+g+...+g^{t-2}
        const Elt u = geom_sum(F, t - 1);
        const Elt factor = F.div(b, u);
        std::vector<Elt> out{0};
        for (std::uint32_t j = 0; j + 1 < t; ++j) out.push_back(F.mul(factor, F.exp(j)));
        return out;
    }
    if (F.p() != 2) {
        std::vector<Elt> out;
        if (t % 2 == 1) out.push_back(0);
        auto pairs = pm_pairs(F, (t - t % 2) / 2, {});
        out.insert(out.end(), pairs.begin(), pairs.end());
        return out;
    }
    // p = 2, b = 0
    if (t == 2 || t == q - 2) return std::nullopt;
    if (2 * t > q) {
        auto sub = sum_impl(F, WitnessDomain::WholeField, q - t, 0);
        return complement_of(F, *sub, false);
    }
    return pigeonhole_zero_sum(F, t);
}

std::optional<std::vector<Elt>> sum_units(const Field& F, std::uint32_t t, Elt b) {
    const std::uint32_t q = F.q();
    if (t == 1) return b != 0 ? std::optional<std::vector<Elt>>{{b}} : std::nullopt;
    if (t == q - 1) {
        const Elt total = q == 2 ? 1 : 0;
        if (b != total) return std::nullopt;
        std::vector<Elt> all;
        for (Elt x = 1; x < q; ++x) all.push_back(x);
        return all;
    }
    if (b != 0) {
        const Elt u = geom_sum(F, t);  // t <= q-2, so u != 0
        const Elt factor = F.div(b, u);
        std::vector<Elt> out;
        for (std::uint32_t j = 0; j < t; ++j) out.push_back(F.mul(factor, F.exp(j)));
        return out;
    }
    // b = 0
    if (t == q - 2) return std::nullopt;
    if (F.p() != 2) {
        if (t % 2 == 0) {
            auto pairs = pm_pairs(F, t / 2, {});
            return pairs;
        }
        // odd t: z1 + z2 + z3 = 0 with distinct nonzero z's, plus +/- pairs
        const Elt z2 = 1;
        const Elt two = F.add(1, 1);
        std::set<Elt> forbid{z2, F.neg(z2), F.neg(F.mul(two, z2)), F.neg(F.div(z2, two))};
        Elt z1 = 0;
        for (Elt cand = 1; cand < q; ++cand)
            if (!forbid.count(cand)) {
                z1 = cand;
                break;
            }
        const Elt z3 = F.neg(F.add(z1, z2));
        std::set<Elt> used{z1, F.neg(z1), z2, F.neg(z2), z3, F.neg(z3)};
        std::vector<Elt> out{z1, z2, z3};
        auto pairs = pm_pairs(F, (t - 3) / 2, used);
        out.insert(out.end(), pairs.begin(), pairs.end());
        return out;
    }
    // p = 2, b = 0, units: t = 2 pairs are impossible, and so is t = q-3
    // (its complement inside the units would be such a pair)
    if (t == 2 || t == q - 3) return std::nullopt;
    if (2 * t > q) {
        auto sub = sum_impl(F, WitnessDomain::Units, q - 1 - t, 0);
        return complement_of(F, *sub, true);
    }
    return pigeonhole_zero_sum(F, t);
}

std::optional<std::vector<Elt>> sum_impl(const Field& F, WitnessDomain domain, std::uint32_t t,
                                         Elt b) {
    return domain == WitnessDomain::WholeField ? sum_whole_field(F, t, b) : sum_units(F, t, b);
}

}  // namespace

std::optional<std::vector<Elt>> witness_sum(const Field& F, WitnessDomain domain, std::uint32_t t,
                                            Elt b) {
    F.check(b);
    const std::uint32_t size = domain == WitnessDomain::WholeField ? F.q() : F.q() - 1;
    if (t < 1 || t > size) throw Error(Err::OutOfRange, "need 1 <= t <= |domain|");
    auto w = sum_impl(F, domain, t, b);
    if (!w) return std::nullopt;
    verify_witness(F, *w, t, domain == WitnessDomain::Units);
    if (symmetric_profile(F, *w).e1 != b)
        throw Error(Err::InconsistencyDetected, "witness_sum target mismatch");
    std::sort(w->begin(), w->end());
    return w;
}

std::vector<Elt> witness_pair_products(const Field& F, std::uint32_t t, Elt c, PairMode mode) {
    const std::uint32_t q = F.q();
    if (F.p() != 2) throw Error(Err::OutOfRange, "pair-product recipe needs characteristic 2");
    F.check(c);
    if (c == 0) throw Error(Err::OutOfRange, "need c != 0");
    if (mode == PairMode::Strict) {
        if (t < 2 || t > q - 2) throw Error(Err::OutOfRange, "strict mode needs 2 <= t <= q-2");
    } else {
        if (t < 2 || t > q - 3) throw Error(Err::OutOfRange, "weak mode needs 2 <= t <= q-3");
    }
    const Elt g = F.primitive_element();
    const Elt one_m_g = F.sub(1, g);
    const Elt one_m_g2 = F.sub(1, F.mul(g, g));
    Elt numer;
    if (mode == PairMode::Strict)
        numer = F.mul(g, F.mul(F.sub(1, F.pow(g, t - 1)), F.sub(1, F.pow(g, t))));
    else
        numer = F.mul(F.sub(1, F.pow(g, t + 1)), F.sub(1, F.pow(g, t)));
    const Elt K = F.div(numer, F.mul(one_m_g, one_m_g2));
    if (K == 0) throw Error(Err::DegenerateConstant, "pair-product constant vanished");
    const Elt sigma = F.sqrt_char2(F.div(c, K));
    std::vector<Elt> out;
    for (std::uint32_t i = 0; i < t; ++i) out.push_back(F.mul(sigma, F.exp(i)));
    verify_witness(F, out, t, true);
    const auto prof = symmetric_profile(F, out);
    const Elt got = mode == PairMode::Strict ? prof.e2 : F.add(prof.e2, prof.psum2);
    if (got != c) throw Error(Err::InconsistencyDetected, "pair-product target mismatch");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elt> lemma6_witness(const Field& F, std::uint32_t t) {
    const std::uint32_t q = F.q();
    if (F.p() == 2 ? (t % 4 != 0) : (t % F.p() != 0))
        throw Error(Err::OutOfRange, "divisibility hypothesis fails");
    if (t < 1 || 2 * t + 2 >= q) throw Error(Err::OutOfRange, "need q-2-2t > 0");
    const Elt g = F.primitive_element();
    const Elt one_m_g = F.sub(1, g);
    const Elt one_m_g2 = F.sub(1, F.mul(g, g));
    const Elt M1 = F.div(F.sub(1, F.pow(g, t - 1)), one_m_g);
    const Elt M2 = F.div(F.mul(g, F.mul(F.sub(1, F.pow(g, t - 2)), F.sub(1, F.pow(g, t - 1)))),
                         F.mul(one_m_g, one_m_g2));
    const Elt two = F.add(1, 1);

    Elt phi = 0;
    for (Elt cand = 1; cand < q && !phi; ++cand) {
        if (F.add(cand, M1) == 0) continue;
        const Elt quad = F.add(F.add(F.mul(cand, cand), F.mul(two, F.mul(cand, M1))), M2);
        if (quad == 0) continue;
        bool ok = true;
        for (std::uint32_t i = 2; i <= t && ok; ++i) {
            const Elt gi = F.exp(i - 2);
            if (cand == gi) ok = false;
            const Elt den = F.add(gi, M1);
            if (ok && den != 0 && cand == F.neg(F.div(F.add(M2, F.mul(gi, M1)), den))) ok = false;
        }
        if (ok) phi = cand;
    }
    if (!phi) throw Error(Err::SearchExhausted, "no admissible phi");
    const Elt z = F.div(F.add(F.mul(phi, M1), M2), F.add(phi, M1));
    std::vector<Elt> out{F.add(z, phi)};
    for (std::uint32_t i = 2; i <= t; ++i) out.push_back(F.add(z, F.exp(i - 2)));
    verify_witness(F, out, t, true);
    if (symmetric_profile(F, out).e2 != 0)
        throw Error(Err::InconsistencyDetected, "lemma6 e2 target mismatch");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elt> corollary1_witness(const Field& F, std::uint32_t t) {
    const std::uint32_t q = F.q();
    if (q <= 3) throw Error(Err::OutOfRange, "need q > 3");
    if (2 * t <= q || t > q - 1) throw Error(Err::OutOfRange, "need q/2 < t <= q-1");
    const std::uint32_t ts = q - 1 - t;
    if (F.p() == 2 ? (ts % 4 != 0) : (ts % F.p() != 0))
        throw Error(Err::OutOfRange, "divisibility hypothesis fails");
    std::vector<Elt> small;
    if (ts > 0) small = lemma6_witness(F, ts);
    std::vector<Elt> out = complement_of(F, small, true);
    verify_witness(F, out, t, true);
    const auto prof = symmetric_profile(F, out);
    if (F.add(prof.e2, prof.psum2) != 0)
        throw Error(Err::InconsistencyDetected, "corollary1 weak target mismatch");
    return out;
}

std::vector<Elt> witness_pair_products_zero(const Field& F, std::uint32_t t) {
    const std::uint32_t q = F.q();
    if (t >= 1 && 2 * t + 2 < q) return lemma6_witness(F, t);
    if (2 * t > q) return corollary1_witness(F, t);
    throw Error(Err::OutOfRange, "t outside both clauses");
}

namespace {

// even t < (q-1)/2: {+/-alpha} and +/- y g^j pairs solving
// 2(alpha^2 + y^2 (1-g^(t-2))/(1-g^2)) = zeta
std::vector<Elt> power_sums_small_even(const Field& F, std::uint32_t t, Elt zeta) {
    const std::uint32_t q = F.q();
    const Elt g = F.primitive_element();
    const Elt K = F.div(F.sub(1, F.pow(g, t - 2)), F.sub(1, F.mul(g, g)));
    const Elt half = F.inv(F.add(1, 1));
    const std::uint32_t npairs = (t - 2) / 2;
    for (Elt alpha = 1; alpha < q; ++alpha) {
        const Elt w = F.div(F.sub(F.mul(zeta, half), F.mul(alpha, alpha)), K);
        if (w == 0 || F.eta(w) != 1) continue;
        const std::uint32_t lg = F.log(w);
        const Elt y0 = F.exp(lg / 2);
        const Elt y1 = F.neg(y0);
        const Elt y = std::min(y0, y1);
        bool clash = false;
        for (std::uint32_t j = 0; j < npairs && !clash; ++j) {
            const Elt yj = F.mul(y, F.exp(j));
            if (alpha == yj || alpha == F.neg(yj)) clash = true;
        }
        if (clash) continue;
        std::vector<Elt> out{alpha, F.neg(alpha)};
        for (std::uint32_t j = 0; j < npairs; ++j) {
            const Elt yj = F.mul(y, F.exp(j));
            out.push_back(yj);
            out.push_back(F.neg(yj));
        }
        return out;
    }
    throw Error(Err::SearchExhausted, "no (alpha, y) pair found");
}

}  // namespace

std::vector<Elt> witness_power_sums(const Field& F, std::uint32_t t, Elt zeta) {
    const std::uint32_t q = F.q();
    if (F.p() == 2) throw Error(Err::OutOfRange, "power-sum recipe needs odd characteristic");
    F.check(zeta);
    if (zeta == 0) throw Error(Err::OutOfRange, "need zeta != 0");
    if (!(t > 3 && t + 3 < q)) throw Error(Err::OutOfRange, "need 3 < t < q-3");
    if (2 * t == q - 1 || 2 * t == q + 1) throw Error(Err::OutOfRange, "t = (q-1)/2 and (q+1)/2 excluded");

    std::vector<Elt> out;
    if (t % 2 == 0 && 2 * t < q - 1) {
        out = power_sums_small_even(F, t, zeta);
    } else if (t % 2 == 1 && 2 * t < q + 1) {
        out = power_sums_small_even(F, t - 1, zeta);
        out.push_back(0);
    } else {
        // complement of a small witness for -zeta; uses sum x = sum x^2 = 0
        std::vector<Elt> small;
        const std::uint32_t ts = q - t;
        if (ts % 2 == 0)
            small = power_sums_small_even(F, ts, F.neg(zeta));
        else {
            small = power_sums_small_even(F, ts - 1, F.neg(zeta));
            small.push_back(0);
        }
        out = complement_of(F, small, false);
    }
    verify_witness(F, out, t, false);
    const auto prof = symmetric_profile(F, out);
    if (prof.psum1 != 0 || prof.psum2 != zeta)
        throw Error(Err::InconsistencyDetected, "power-sum target mismatch");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elt> corollary2_witness(const Field& F, std::uint32_t t, Elt zeta) {
    if (F.p() == 2 || t % F.p() != 0) throw Error(Err::OutOfRange, "need p odd and p | t");
    if (!(t > 3 && t + 3 < F.q())) throw Error(Err::OutOfRange, "need 3 < t < q-3");
    return witness_power_sums(F, t, zeta);
}

bool lemma43_in_A(const Field& F, Elt v, Elt r, Elt r1, Elt mu, Elt b, Elt c) {
    const Elt two = F.add(1, 1);
    const Elt target = F.add(F.mul(mu, F.sub(v, F.mul(two, F.mul(c, r1)))),
                             F.mul(F.mul(b, b), F.mul(r, r)));
    return F.eta(target) >= 0;
}

std::vector<Elt> lemma43_witness(const Field& F, std::uint32_t t, Elt r, Elt r1, Elt mu, Elt b,
                                 Elt c) {
    const std::uint32_t q = F.q();
    if (F.p() == 2) throw Error(Err::OutOfRange, "needs odd characteristic");
    if (r == 0 || r1 == 0 || mu == 0) throw Error(Err::OutOfRange, "need r, r1, mu nonzero");
    if (t % 2 != 0) throw Error(Err::OutOfRange, "t must be even");
    if (!(t > 2 && 2 * t < q + 1)) throw Error(Err::OutOfRange, "need 2 < t < (q+1)/2");
    F.check(b);
    F.check(c);

    auto finish = [&](std::vector<Elt> out) {
        verify_witness(F, out, t, true);
        const auto prof = symmetric_profile(F, out);
        const Elt v = F.sub(F.mul(prof.psum1, prof.psum1), F.mul(r, prof.psum2));
        if (!lemma43_in_A(F, v, r, r1, mu, b, c))
            throw Error(Err::InconsistencyDetected, "lemma43 membership lost");
        std::sort(out.begin(), out.end());
        return out;
    };

    // family 1: +/- y g^j, j = 1..t/2
    for (Elt y = 1; y < q; ++y) {
        std::vector<Elt> out;
        Elt m = 0, n = 0;
        for (std::uint32_t j = 1; j <= t / 2; ++j) {
            const Elt yj = F.mul(y, F.exp(j));
            out.push_back(yj);
            out.push_back(F.neg(yj));
            n = F.add(n, F.mul(F.add(1, 1), F.mul(yj, yj)));
        }
        const Elt v = F.sub(F.mul(m, m), F.mul(r, n));
        if (lemma43_in_A(F, v, r, r1, mu, b, c)) return finish(std::move(out));
    }
    // family 2: +/- alpha1 and +/- z1 g^j, j = 1..(t-2)/2
    for (Elt alpha1 = 1; alpha1 < q; ++alpha1) {
        for (Elt z1 = 1; z1 < q; ++z1) {
            bool clash = false;
            std::vector<Elt> out{alpha1, F.neg(alpha1)};
            Elt n = F.mul(F.add(1, 1), F.mul(alpha1, alpha1));
            for (std::uint32_t j = 1; j <= (t - 2) / 2 && !clash; ++j) {
                const Elt zj = F.mul(z1, F.exp(j));
                if (alpha1 == zj || alpha1 == F.neg(zj)) clash = true;
                out.push_back(zj);
                out.push_back(F.neg(zj));
                n = F.add(n, F.mul(F.add(1, 1), F.mul(zj, zj)));
            }
            if (clash) continue;
            const Elt v = F.sub(0, F.mul(r, n));
            if (lemma43_in_A(F, v, r, r1, mu, b, c)) return finish(std::move(out));
        }
    }
    throw Error(Err::SearchExhausted, "no family member lands in A");
}

std::uint64_t quadratic_form_count(const Field& F, const QuadraticForm& form) {
    if (F.p() == 2) throw Error(Err::CharacteristicTwo, "counting formula needs odd characteristic");
    const std::size_t n = form.coeffs.size();
    if (n < 1) throw Error(Err::OutOfRange, "need n >= 1");
    Elt prod = 1;
    for (Elt a : form.coeffs) {
        F.check(a);
        if (a == 0) throw Error(Err::ZeroCoefficient, "all a_i must be nonzero");
        prod = F.mul(prod, a);
    }
    F.check(form.rhs);
    const Elt minus_one = F.neg(1);
    auto qpow = [&](std::size_t e) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= F.q();
        return r;
    };
    if (n % 2 == 1) {
        Elt sign = 1;
        for (std::size_t i = 0; i < (n - 1) / 2; ++i) sign = F.mul(sign, minus_one);
        const int ch = F.eta(F.mul(sign, F.mul(form.rhs, prod)));
        return qpow(n - 1) + static_cast<std::int64_t>(qpow((n - 1) / 2)) * ch;
    }
    Elt sign = 1;
    for (std::size_t i = 0; i < n / 2; ++i) sign = F.mul(sign, minus_one);
    const int ch = F.eta(F.mul(sign, prod));
    const std::int64_t v = form.rhs == 0 ? static_cast<std::int64_t>(F.q()) - 1 : -1;
    return qpow(n - 1) + v * static_cast<std::int64_t>(qpow((n - 2) / 2)) * ch;
}

std::uint64_t quadratic_form_count_bruteforce(const Field& F, const QuadraticForm& form,
                                              std::uint64_t cap) {
    const std::size_t n = form.coeffs.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= F.q();
        if (total > cap) throw Error(Err::TooLarge, "q^n exceeds the brute-force cap");
    }
    std::vector<Elt> x(n, 0);
    std::uint64_t count = 0;
    while (true) {
        Elt s = 0;
        for (std::size_t i = 0; i < n; ++i) s = F.add(s, F.mul(form.coeffs[i], F.mul(x[i], x[i])));
        count += s == form.rhs;
        std::size_t i = 0;
        while (i < n && ++x[i] == F.q()) x[i++] = 0;
        if (i == n) break;
    }
    return count;
}

}  // namespace rsdh
