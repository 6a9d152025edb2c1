#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsdh/error.hpp"

namespace rsdh {

/// Canonical element encoding: the integer sum digits[i] * p^i in [0, q).
using Elt = std::uint32_t;

/// GF(p^m) with exact arithmetic. Elements are canonical integer encodings;
/// multiplication runs through exp/log tables built from the smallest
/// primitive element. Immutable after construction, safe to share across
/// threads.
class Field {
public:
    /// Builds GF(p^m). When no modulus is given and m > 1, picks the
    /// lexicographically smallest (by ascending coefficient tuple) monic
    /// irreducible of degree m. Size cap: q <= 2^16.
    Field(std::uint32_t p, std::uint32_t m,
          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return mod_; }
    bool trivial() const { return q_ == 2; }
    bool same(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && mod_ == other.mod_;
    }

    Elt check(Elt a) const {
        if (a >= q_) throw Error(Err::FieldMismatch, "encoding out of range");
        return a;
    }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const;

    /// Quadratic character: 1 for a nonzero square, -1 for a nonzero
    /// non-square, 0 for a = 0. Only defined in odd characteristic.
    int eta(Elt a) const;

    /// Unique square root in characteristic 2 (Frobenius inverse, a^(q/2)).
    Elt sqrt_char2(Elt a) const;

    /// Smallest-encoding element of multiplicative order q-1. For q = 2
    /// the group is trivial; returns 1 (see trivial()).
    Elt primitive_element() const { return g_; }
    std::uint64_t element_order(Elt a) const;

    /// exp(i) = g^i for 0 <= i < q-1; log(a) its inverse for a != 0.
    Elt exp(std::uint32_t i) const { return exp_[i % std::max<std::uint32_t>(q_ - 1, 1)]; }
    std::uint32_t log(Elt a) const;

    std::vector<std::uint32_t> digits(Elt a) const;
    Elt from_digits(const std::vector<std::uint32_t>& d) const;

private:
    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> mod_;  // ascending, size m+1, monic
    std::vector<Elt> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elt> neg_;
    std::vector<Elt> add_;  // q*q table when q is small, else empty
    Elt g_ = 1;

    Elt mul_digits(Elt a, Elt b) const;  // table-free bootstrap multiply
    void build_tables();
};

/// Validating constructor wrapper; throws NotPrime / ReducibleModulus /
/// DegreeMismatch.
Field build_field(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

}  // namespace rsdh
