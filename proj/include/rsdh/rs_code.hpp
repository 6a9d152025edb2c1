#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsdh/poly.hpp"

namespace rsdh {

/// Reed-Solomon code over an evaluation set D (ordered, pairwise distinct),
/// dimension k. Codewords are evaluations of polynomials of degree <= k-1.
struct RSCode {
    enum class Kind { Standard, Primitive, Generalized };

    const Field* field = nullptr;
    std::vector<Elt> D;
    std::uint32_t k = 0;
    Kind kind = Kind::Generalized;

    std::uint32_t n() const { return static_cast<std::uint32_t>(D.size()); }
    std::uint32_t min_distance() const { return n() - k + 1; }
    std::uint32_t covering_radius() const { return n() - k; }

    static RSCode standard(const Field& F, std::uint32_t k);
    static RSCode primitive(const Field& F, std::uint32_t k);
    static RSCode generalized(const Field& F, std::vector<Elt> D, std::uint32_t k);
};

const char* kind_name(RSCode::Kind kind);

/// A word of length n with its Lagrange interpolant cached eagerly.
struct ReceivedWord {
    std::vector<Elt> values;
    Poly interp;
};

ReceivedWord make_word(const RSCode& code, std::vector<Elt> values);
ReceivedWord word_from_poly(const RSCode& code, const Poly& f);
ReceivedWord encode(const RSCode& code, const std::vector<Elt>& message);

/// Degree of the interpolant; kZeroPolyDegree for the zero word.
int word_degree(const ReceivedWord& u);

std::size_t hamming_distance(const std::vector<Elt>& a, const std::vector<Elt>& b);

/// Distance bracket (n - deg(u), n - k) for k <= deg(u) <= n-1.
std::pair<int, int> degree_bounds(const RSCode& code, const ReceivedWord& u);

/// Top coefficients of the monic normalization x^deg - b x^(deg-1) + c x^(deg-2) + ...
/// for words of degree k+1 (c absent) or k+2.
struct MonicTop {
    int deg = 0;
    Elt b = 0;
    std::optional<Elt> c;
};

MonicTop monic_top(const RSCode& code, const ReceivedWord& u);

}  // namespace rsdh
