#pragma once

#include <vector>

#include "rsdh/field.hpp"

namespace rsdh {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial, ascending coefficients, no trailing zeros
/// (zero polynomial = empty vector).
struct Poly {
    std::vector<Elt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Elt coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const Poly&) const = default;

    static Poly zero() { return {}; }
    static Poly constant(Elt v) { return v ? Poly{{v}} : Poly{}; }
};

Elt eval(const Field& F, const Poly& f, Elt x);

/// Unique polynomial of degree <= n-1 through the given points
/// (basis-product form; nodes must be pairwise distinct).
Poly lagrange_interpolate(const Field& F, const std::vector<Elt>& xs, const std::vector<Elt>& us);

/// Monic product of (x - r) over the given roots (repeats allowed).
Poly monic_from_roots(const Field& F, const std::vector<Elt>& roots);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Elt s);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);

struct SymmetricProfile {
    std::size_t t = 0;
    Elt e1 = 0;     // sum
    Elt e2 = 0;     // sum of pairwise products
    Elt psum1 = 0;  // = e1
    Elt psum2 = 0;  // sum of squares
};

SymmetricProfile symmetric_profile(const Field& F, const std::vector<Elt>& values);

}  // namespace rsdh
