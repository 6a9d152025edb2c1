#include <sstream>

#include "rsdh/distance.hpp"

namespace rsdh {

namespace {

bool closed_form_applicable(const RSCode& code, int deg) {
    const int k = static_cast<int>(code.k);
    if (deg == k + 1) {
        if (code.kind == RSCode::Kind::Standard) return true;
        return code.kind == RSCode::Kind::Primitive && code.field->q() > 5;
    }
    if (deg == k + 2)
        return code.kind == RSCode::Kind::Standard && k >= 1 &&
               static_cast<std::uint32_t>(k + 2) <= code.field->q() - 1;
    return false;
}

DistanceResult trivial_result(Verdict v, std::optional<int> d, const char* label) {
    DistanceResult r;
    r.verdict = v;
    r.d = d;
    r.method = Method::ClosedForm;
    r.paper_case = label;
    return r;
}

bool elements_distinct_in_D(const RSCode& code, const std::vector<Elt>& elems) {
    std::vector<bool> in_D(code.field->q(), false);
    for (Elt y : code.D) in_D[y] = true;
    std::vector<bool> seen(code.field->q(), false);
    for (Elt x : elems) {
        if (x >= code.field->q() || !in_D[x] || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

}  // namespace

bool witness_certifies(const RSCode& code, const ReceivedWord& u, const Witness& w, int d) {
    const Field& F = *code.field;
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    const int deg = word_degree(u);
    if (deg != k + 1 && deg != k + 2) return false;
    if (!elements_distinct_in_D(code, w.elements)) return false;
    if (static_cast<int>(w.elements.size()) != n - d) return false;
    std::vector<Elt> roots = w.elements;
    if (w.extra_root) roots.push_back(*w.extra_root);
    if (static_cast<int>(roots.size()) != deg) return false;
    // u - v = lead * prod(x - root) for some v of degree <= k-1, i.e. the
    // monic normalization of u matches the expansion above degree k-1
    const Poly prod = monic_from_roots(F, roots);
    const Elt lead_inv = F.inv(u.interp.c.back());
    for (int i = k; i <= deg; ++i)
        if (prod.coeff(i) != F.mul(lead_inv, u.interp.coeff(i))) return false;
    return true;
}

std::pair<bool, DistanceResult> classify_deep_hole(const RSCode& code, const ReceivedWord& u) {
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    const int deg = word_degree(u);

    if (deg <= k - 1) return {false, trivial_result(Verdict::Exact, 0, "deg(u)<=k-1 codeword")};
    if (deg == k) return {true, trivial_result(Verdict::Exact, n - k, "Lemma1 deg(u)=k")};

    if (closed_form_applicable(code, deg)) {
        const MonicTop top = monic_top(code, u);
        std::optional<Elt> c;
        if (deg == k + 2) c = top.c;
        const auto cse = ClosedFormCase::make(*code.field, code.kind, code.k, top.b, c);
        const DistanceResult res = closed_form_distance(*code.field, cse);
        if (res.verdict == Verdict::Exact) return {*res.d == n - k, res};
    }
    if (deg == k + 1) {
        const DistanceResult res = distance_deg_k1(code, u);
        return {*res.d == n - k, res};
    }
    if (deg == k + 2) {
        const DistanceResult res = distance_deg_k2(code, u);
        return {*res.d == n - k, res};
    }
    if (binomial_capped(n, k, oracle_cap()) <= oracle_cap()) {
        const DistanceResult res = max_agreement_oracle(code, u);
        return {*res.d == n - k, res};
    }
    throw Error(Err::Undecidable, "degree >= k+3 beyond the oracle cap");
}

DistanceResult engine_distance(const RSCode& code, const ReceivedWord& u) {
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    const int deg = word_degree(u);
    if (deg <= k - 1) return trivial_result(Verdict::Exact, 0, "deg(u)<=k-1 codeword");
    if (deg == k) return trivial_result(Verdict::Exact, n - k, "Lemma1 deg(u)=k");
    if (deg == k + 1) return distance_deg_k1(code, u);
    if (deg == k + 2) return distance_deg_k2(code, u);
    if (binomial_capped(n, k, oracle_cap()) <= oracle_cap()) return max_agreement_oracle(code, u);
    DistanceResult r;
    r.verdict = Verdict::Unknown;
    r.method = Method::ClosedForm;
    std::ostringstream os;
    os << "Lemma1 bounds [" << n - deg << "," << n - k << "]";
    r.paper_case = os.str();
    return r;
}

ConsistencyReport check_agreement(int n, int k, int deg, std::vector<ConsistencyReport::Entry> entries) {
    ConsistencyReport rep;
    rep.entries = std::move(entries);
    std::ostringstream diff;
    std::optional<int> exact;
    for (const auto& e : rep.entries) {
        if (e.result.verdict != Verdict::Exact) continue;
        const int d = *e.result.d;
        if (deg >= k && (d < n - deg || d > n - k)) {
            rep.consistent = false;
            diff << e.method << ": d=" << d << " outside Lemma-1 bracket [" << n - deg << ","
                 << n - k << "]; ";
        }
        if (exact && *exact != d) {
            rep.consistent = false;
            diff << e.method << ": exact d=" << d << " disagrees with d=" << *exact << "; ";
        }
        if (!exact) exact = d;
    }
    if (exact) {
        for (const auto& e : rep.entries) {
            if (e.result.verdict == Verdict::UpperBound && *exact > *e.result.d) {
                rep.consistent = false;
                diff << e.method << ": bound " << *e.result.d << " below exact d=" << *exact << "; ";
            }
        }
    }
    rep.diff = diff.str();
    return rep;
}

ConsistencyReport consistency_check(const RSCode& code, const ReceivedWord& u) {
    const Field& F = *code.field;
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(code.k);
    const int deg = word_degree(u);

    std::vector<ConsistencyReport::Entry> entries;
    if (binomial_capped(n, k, oracle_cap()) <= oracle_cap())
        entries.push_back({"oracle", max_agreement_oracle(code, u)});
    if (deg == k + 1) entries.push_back({"subset_dp", distance_deg_k1(code, u)});
    if (deg == k + 2) entries.push_back({"subset_dp", distance_deg_k2(code, u)});
    if ((deg == k + 1 || deg == k + 2) && closed_form_applicable(code, deg)) {
        const MonicTop top = monic_top(code, u);
        std::optional<Elt> c;
        if (deg == k + 2) c = top.c;
        const auto cse = ClosedFormCase::make(F, code.kind, code.k, top.b, c);
        entries.push_back({"closed_form", closed_form_distance(F, cse)});
    }
    if (deg <= k)
        entries.push_back({"degree_rule",
                           trivial_result(Verdict::Exact, deg <= k - 1 ? 0 : n - k,
                                          deg <= k - 1 ? "deg(u)<=k-1 codeword" : "Lemma1 deg(u)=k")});

    ConsistencyReport rep = check_agreement(n, k, deg, std::move(entries));
    for (const auto& e : rep.entries) {
        if (e.result.verdict != Verdict::Exact) continue;
        if (e.result.nearest_codeword) {
            // oracle certificate: nearest codeword at distance d whose
            // agreement set is the reported element list
            const auto& cw = *e.result.nearest_codeword;
            bool ok = static_cast<int>(hamming_distance(cw, u.values)) == *e.result.d;
            ok = ok && lagrange_interpolate(F, code.D, cw).degree() <= k - 1;
            if (ok && e.result.witness) {
                std::vector<Elt> agree;
                for (std::size_t i = 0; i < cw.size(); ++i)
                    if (cw[i] == u.values[i]) agree.push_back(code.D[i]);
                ok = agree == e.result.witness->elements;
            }
            if (!ok) {
                rep.consistent = false;
                rep.diff += e.method + ": codeword certificate fails; ";
            }
        } else if (e.result.witness) {
            if (!witness_certifies(code, u, *e.result.witness, *e.result.d)) {
                rep.consistent = false;
                rep.diff += e.method + ": witness fails verification; ";
            }
        }
    }
    if (!rep.consistent) throw Error(Err::InconsistencyDetected, rep.diff);
    return rep;
}

}  // namespace rsdh
