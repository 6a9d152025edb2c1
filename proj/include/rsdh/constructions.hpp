#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsdh/poly.hpp"

namespace rsdh {

enum class WitnessDomain { WholeField, Units };

/// t distinct elements of the domain summing to b, by the constructive
/// recipes (geometric scaling for b != 0, +/- pairing, complement,
/// pigeonhole scan), or nullopt exactly in the impossible cases.
std::optional<std::vector<Elt>> witness_sum(const Field& F, WitnessDomain domain, std::uint32_t t,
                                            Elt b);

enum class PairMode { Strict, Weak };

/// Characteristic 2, c != 0: t distinct nonzero gamma_i = sigma*g^(i-1) with
/// sum_{i<j} gamma_i gamma_j = c (Strict, 2<=t<=q-2) or
/// sum_{i<=j} gamma_i gamma_j = c (Weak, 2<=t<=q-3).
std::vector<Elt> witness_pair_products(const Field& F, std::uint32_t t, Elt c, PairMode mode);

/// t distinct nonzero xi with sum_{i<j} xi_i xi_j = 0, for 4|t (p=2) or
/// p|t (p odd) and q-2-2t > 0.
std::vector<Elt> lemma6_witness(const Field& F, std::uint32_t t);

/// t > q/2 with 4|(q-1-t) (p=2) or p|(q-1-t): t distinct nonzero xi with
/// sum_{i<=j} xi_i xi_j = 0 (complement of a lemma6 witness inside F_q*).
std::vector<Elt> corollary1_witness(const Field& F, std::uint32_t t);

/// Dispatches to lemma6_witness (strict target, small t) or
/// corollary1_witness (weak target, t > q/2).
std::vector<Elt> witness_pair_products_zero(const Field& F, std::uint32_t t);

/// Odd characteristic, zeta != 0: t distinct elements of F_q with sum 0 and
/// sum of squares zeta, for 3 < t < q-3, t not in {(q-1)/2, (q+1)/2}.
std::vector<Elt> witness_power_sums(const Field& F, std::uint32_t t, Elt zeta);

/// Same with the divisibility hypothesis p | t in place of the exclusions.
std::vector<Elt> corollary2_witness(const Field& F, std::uint32_t t, Elt zeta);

/// Odd characteristic; searches the two structured families for t distinct
/// nonzero y with (sum y)^2 - r*(sum y^2) in
/// A = { alpha^2/mu - b^2 r^2/mu + 2 c r1 }.
std::vector<Elt> lemma43_witness(const Field& F, std::uint32_t t, Elt r, Elt r1, Elt mu, Elt b,
                                 Elt c);

/// Membership test for the set A above.
bool lemma43_in_A(const Field& F, Elt v, Elt r, Elt r1, Elt mu, Elt b, Elt c);

struct QuadraticForm {
    std::vector<Elt> coeffs;  // a_1..a_n, all nonzero
    Elt rhs = 0;
};

/// Number of solutions of a_1 x_1^2 + ... + a_n x_n^2 = b over F_q (p odd),
/// by the character-sum formula (v(0) = q-1, v(b!=0) = -1).
std::uint64_t quadratic_form_count(const Field& F, const QuadraticForm& form);

/// Companion exhaustive counter (q^n tuples, capped).
std::uint64_t quadratic_form_count_bruteforce(const Field& F, const QuadraticForm& form,
                                              std::uint64_t cap = 10'000'000);

}  // namespace rsdh
