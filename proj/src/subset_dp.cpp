#include <algorithm>

#include "rsdh/distance.hpp"

namespace rsdh {

const char* method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::SubsetDP: return "subset_dp";
        case Method::ClosedForm: return "closed_form";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Exact: return "exact";
        case Verdict::UpperBound: return "upper_bound";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

SubsetProfileTable::SubsetProfileTable(const Field& F, std::vector<Elt> D, std::uint32_t tmax,
                                       bool track_e2)
    : F_(F), D_(std::move(D)), tmax_(tmax), track_e2_(track_e2), qe_(track_e2 ? F.q() : 1) {
    std::sort(D_.begin(), D_.end());
    for (Elt x : D_) F_.check(x);
    const std::uint32_t n = static_cast<std::uint32_t>(D_.size());
    if (tmax_ > n) tmax_ = n;
    const std::uint32_t q = F_.q();
    reach_.assign(static_cast<std::size_t>(n + 1) * (tmax_ + 1) * q * qe_, 0);
    reach_[idx(n, 0, 0, 0)] = 1;
    // Suffix reachability: reach[i][c][s][pi] = a c-subset of D[i..] with
    // e1 = s and e2 = pi exists.
    for (std::uint32_t i = n; i-- > 0;) {
        const Elt y = D_[i];
        const std::uint32_t cmax = std::min(tmax_, n - i);
        for (std::uint32_t c = 0; c <= cmax; ++c) {
            for (Elt s = 0; s < q; ++s) {
                for (Elt pi = 0; pi < qe_; ++pi) {
                    std::uint8_t v = reach_[idx(i + 1, c, s, pi)];
                    if (!v && c > 0) {
                        const Elt s0 = F_.sub(s, y);
                        const Elt pi0 = track_e2_ ? F_.sub(pi, F_.mul(s0, y)) : 0;
                        v = reach_[idx(i + 1, c - 1, s0, pi0)];
                    }
                    reach_[idx(i, c, s, pi)] = v;
                }
            }
        }
    }
}

bool SubsetProfileTable::exists(std::uint32_t t, Elt e1) const {
    if (t > tmax_) return false;
    if (!track_e2_) return reach_[idx(0, t, e1, 0)] != 0;
    for (Elt pi = 0; pi < qe_; ++pi)
        if (reach_[idx(0, t, e1, pi)]) return true;
    return false;
}

bool SubsetProfileTable::exists(std::uint32_t t, Elt e1, Elt e2) const {
    if (t > tmax_) return false;
    if (!track_e2_) throw Error(Err::OutOfRange, "table does not track e2");
    return reach_[idx(0, t, e1, e2)] != 0;
}

std::optional<std::vector<Elt>> SubsetProfileTable::witness(std::uint32_t t, Elt e1,
                                                            std::optional<Elt> e2) const {
    if (e2 && !track_e2_) throw Error(Err::OutOfRange, "table does not track e2");
    if (t > tmax_) return std::nullopt;
    // e1-only witness on an e2-tracking table: pick the smallest reachable e2.
    if (!e2 && track_e2_) {
        for (Elt pi = 0; pi < qe_; ++pi)
            if (reach_[idx(0, t, e1, pi)]) {
                e2 = pi;
                break;
            }
        if (!e2) return std::nullopt;
    }
    if (track_e2_ ? !reach_[idx(0, t, e1, *e2)] : !reach_[idx(0, t, e1, 0)]) return std::nullopt;

    std::vector<Elt> out;
    Elt s1 = 0, s2 = 0;
    std::uint32_t cnt = 0;
    const std::uint32_t n = static_cast<std::uint32_t>(D_.size());
    for (std::uint32_t i = 0; i < n && cnt < t; ++i) {
        const Elt y = D_[i];
        // committed profile if we take y
        const Elt ns1 = F_.add(s1, y);
        const Elt ns2 = F_.add(s2, F_.mul(s1, y));
        // residual profile the suffix must supply
        const Elt sr = F_.sub(e1, ns1);
        const Elt pr = e2 ? F_.sub(F_.sub(*e2, ns2), F_.mul(ns1, sr)) : 0;
        bool ok;
        if (track_e2_ && e2) {
            ok = reach_[idx(i + 1, t - cnt - 1, sr, pr)] != 0;
        } else {
            ok = reach_[idx(i + 1, t - cnt - 1, sr, 0)] != 0;
        }
        if (ok) {
            out.push_back(y);
            s1 = ns1;
            s2 = ns2;
            ++cnt;
        }
    }
    if (cnt != t) throw Error(Err::SearchExhausted, "witness backtracking failed");
    return out;
}

SubsetDpResult subset_symmetric_dp(const Field& F, const std::vector<Elt>& D, std::uint32_t t,
                                   Elt e1, std::optional<Elt> e2) {
    if (t > D.size()) throw Error(Err::OutOfRange, "t exceeds |D|");
    SubsetProfileTable table(F, D, t, e2.has_value());
    SubsetDpResult r;
    r.exists = e2 ? table.exists(t, e1, *e2) : table.exists(t, e1);
    if (r.exists) r.witness = table.witness(t, e1, e2);
    return r;
}

}  // namespace rsdh
