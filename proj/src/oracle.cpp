#include <algorithm>
#include <cstdlib>

#include "rsdh/distance.hpp"

namespace rsdh {

std::uint64_t oracle_cap() {
    if (const char* env = std::getenv("RSDH_ORACLE_CAP")) {
        const std::uint64_t v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 10'000'000;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

DistanceResult max_agreement_oracle(const RSCode& code, const ReceivedWord& u,
                                    std::optional<std::uint64_t> cap) {
    const Field& F = *code.field;
    const std::uint32_t n = code.n(), k = code.k;
    const std::uint64_t limit = cap.value_or(oracle_cap());
    if (binomial_capped(n, k, limit) > limit)
        throw Error(Err::TooLarge, "C(n,k) exceeds the oracle cap");

    // Any codeword agreeing with u on >= k positions is the interpolant of k
    // of them, and interpolation through any k positions agrees on >= k.
    std::vector<std::uint32_t> comb(k);
    for (std::uint32_t i = 0; i < k; ++i) comb[i] = i;
    std::size_t best_agree = 0;
    std::vector<Elt> best_codeword;
    std::vector<Elt> xs(k), us(k), cand(n);
    while (true) {
        for (std::uint32_t i = 0; i < k; ++i) {
            xs[i] = code.D[comb[i]];
            us[i] = u.values[comb[i]];
        }
        const Poly f = lagrange_interpolate(F, xs, us);
        std::size_t agree = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            cand[i] = eval(F, f, code.D[i]);
            agree += cand[i] == u.values[i];
        }
        if (agree > best_agree) {
            best_agree = agree;
            best_codeword = cand;
            if (best_agree == n) break;
        }
        // next k-combination in lexicographic order
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (std::uint32_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }

    DistanceResult res;
    res.verdict = Verdict::Exact;
    res.d = static_cast<int>(n - best_agree);
    res.method = Method::Oracle;
    res.nearest_codeword = best_codeword;
    Witness w;
    for (std::uint32_t i = 0; i < n; ++i)
        if (best_codeword[i] == u.values[i]) w.elements.push_back(code.D[i]);
    res.witness = std::move(w);
    return res;
}

DistanceResult distance_deg_k1(const RSCode& code, const ReceivedWord& u) {
    const Field& F = *code.field;
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    if (word_degree(u) != k + 1) throw Error(Err::DegreeMismatch, "need deg(u) = k+1");
    const MonicTop top = monic_top(code, u);
    SubsetDpResult dp = subset_symmetric_dp(F, code.D, code.k + 1, top.b);
    DistanceResult res;
    res.method = Method::SubsetDP;
    res.verdict = Verdict::Exact;
    if (dp.exists) {
        res.d = n - k - 1;
        Witness w;
        w.elements = *dp.witness;
        res.witness = std::move(w);
    } else {
        res.d = n - k;  // deep hole
    }
    return res;
}

DistanceResult distance_deg_k2(const RSCode& code, const ReceivedWord& u) {
    const Field& F = *code.field;
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    if (word_degree(u) != k + 2) throw Error(Err::DegreeMismatch, "need deg(u) = k+2");
    const MonicTop top = monic_top(code, u);
    const Elt b = top.b, c = *top.c;

    DistanceResult res;
    res.method = Method::SubsetDP;
    res.verdict = Verdict::Exact;

    SubsetProfileTable table(F, code.D, code.k + 2, true);
    if (table.exists(code.k + 2, b, c)) {
        res.d = n - k - 2;
        Witness w;
        w.elements = *table.witness(code.k + 2, b, c);
        res.witness = std::move(w);
        return res;
    }
    // d <= n-k-1 iff some (k+1)-subset plus a monic linear quotient (x - a)
    // reproduces the top coefficients; a ranges over the whole field.
    for (Elt a = 0; a < F.q(); ++a) {
        const Elt e1 = F.sub(b, a);
        const Elt e2 = F.sub(c, F.mul(a, e1));
        if (table.exists(code.k + 1, e1, e2)) {
            res.d = n - k - 1;
            Witness w;
            w.elements = *table.witness(code.k + 1, e1, e2);
            w.extra_root = a;
            w.quotient = monic_from_roots(F, {a});
            res.witness = std::move(w);
            return res;
        }
    }
    res.d = n - k;  // deep hole
    return res;
}

}  // namespace rsdh
