#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsdh/rs_code.hpp"

namespace rsdh {

/// Certificate for a distance value per the subset characterization:
/// `elements` are distinct members of D; `extra_root` is the root of the
/// degree-1 monic quotient when one is used.
struct Witness {
    std::vector<Elt> elements;
    std::optional<Elt> extra_root;
    std::optional<Poly> quotient;
};

enum class Method { Oracle, SubsetDP, ClosedForm };
enum class Verdict { Exact, UpperBound, Unknown };

const char* method_name(Method m);
const char* verdict_name(Verdict v);

struct DistanceResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<int> d;
    Method method = Method::SubsetDP;
    std::string paper_case;  // empty when not applicable
    std::optional<Witness> witness;
    std::optional<std::vector<Elt>> nearest_codeword;  // oracle only
};

/// Reachability of (count, e1[, e2]) profiles over subsets of D, with
/// lexicographically-smallest witness reconstruction. D is processed in
/// ascending encoding order.
class SubsetProfileTable {
public:
    SubsetProfileTable(const Field& F, std::vector<Elt> D, std::uint32_t tmax, bool track_e2);

    bool exists(std::uint32_t t, Elt e1) const;             // e1-only (any e2)
    bool exists(std::uint32_t t, Elt e1, Elt e2) const;     // requires track_e2
    std::optional<std::vector<Elt>> witness(std::uint32_t t, Elt e1,
                                            std::optional<Elt> e2 = std::nullopt) const;

    std::uint32_t tmax() const { return tmax_; }

private:
    const Field& F_;
    std::vector<Elt> D_;
    std::uint32_t tmax_;
    bool track_e2_;
    std::uint32_t qe_;  // e2 dimension (q or 1)
    std::vector<std::uint8_t> reach_;  // suffix reachability

    std::size_t idx(std::uint32_t i, std::uint32_t c, Elt s, Elt pi) const {
        return ((static_cast<std::size_t>(i) * (tmax_ + 1) + c) * F_.q() + s) * qe_ + pi;
    }
};

struct SubsetDpResult {
    bool exists = false;
    std::optional<std::vector<Elt>> witness;
};

/// Decides existence of t distinct elements of D with prescribed e1 (and e2
/// when given); returns the lexicographically smallest witness.
SubsetDpResult subset_symmetric_dp(const Field& F, const std::vector<Elt>& D, std::uint32_t t,
                                   Elt e1, std::optional<Elt> e2 = std::nullopt);

/// Default C(n,k) cap for the exhaustive oracle; RSDH_ORACLE_CAP overrides.
std::uint64_t oracle_cap();
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// Exact distance by maximal agreement over all k-subsets of D.
DistanceResult max_agreement_oracle(const RSCode& code, const ReceivedWord& u,
                                    std::optional<std::uint64_t> cap = std::nullopt);

/// Exact distance for deg(u) = k+1 / k+2 via the subset DP on (b[, c]).
DistanceResult distance_deg_k1(const RSCode& code, const ReceivedWord& u);
DistanceResult distance_deg_k2(const RSCode& code, const ReceivedWord& u);

/// Closed-form case inputs: r = (k+1) mod p and s = (q-k-1) mod p are the
/// residues the degree-(k+2) case analysis runs on.
struct ClosedFormCase {
    RSCode::Kind kind = RSCode::Kind::Standard;
    std::uint32_t q = 0, p = 0, k = 0;
    Elt b = 0;
    std::optional<Elt> c;
    std::uint32_t r = 0, s = 0;

    static ClosedFormCase make(const Field& F, RSCode::Kind kind, std::uint32_t k, Elt b,
                               std::optional<Elt> c = std::nullopt);
};

/// Case table of the degree-(k+1) and degree-(k+2) theorems. Exact verdicts
/// where a clause pins the distance, UpperBound for bound-only clauses,
/// Unknown (with paper_case "uncovered") where no clause applies.
DistanceResult closed_form_distance(const Field& F, const ClosedFormCase& cse);

/// True iff d(u, C) = n-k, decided by the cheapest exact method available.
std::pair<bool, DistanceResult> classify_deep_hole(const RSCode& code, const ReceivedWord& u);

/// Best available exact answer for any word (dispatcher used by the CLI).
DistanceResult engine_distance(const RSCode& code, const ReceivedWord& u);

struct ConsistencyReport {
    struct Entry {
        std::string method;
        DistanceResult result;
    };
    std::vector<Entry> entries;
    bool consistent = true;
    std::string diff;
};

/// Pure comparator over verdicts (given the Lemma-1 bracket); exposed so
/// tests can feed perturbed entries.
ConsistencyReport check_agreement(int n, int k, int deg, std::vector<ConsistencyReport::Entry> entries);

/// Runs every applicable method and cross-checks verdicts, bounds and
/// witnesses. Throws InconsistencyDetected on disagreement.
ConsistencyReport consistency_check(const RSCode& code, const ReceivedWord& u);

/// Re-expands a witness and checks it certifies distance d for word u.
bool witness_certifies(const RSCode& code, const ReceivedWord& u, const Witness& w, int d);

}  // namespace rsdh
