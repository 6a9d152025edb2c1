#pragma once

#include <string>

#include <json.hpp>

#include "rsdh/distance.hpp"

namespace rsdh {

/// "p^m", plain "q", or "p^m/mod=c0,c1,...,cm".
Field parse_field_spec(const std::string& spec);

/// (p, m) with q = p^m; throws if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q);

/// Comma-separated integer encodings.
std::vector<Elt> parse_csv_elts(const Field& F, const std::string& s);

/// Ascending coefficient CSV ("1,0,2" = 2x^2+1) or a small expression
/// grammar over +, -, *, integer encodings, g^i and x^i.
Poly parse_poly(const Field& F, const std::string& s);

std::string poly_to_csv(const Poly& f);

nlohmann::json to_json(const DistanceResult& r);
nlohmann::json profile_json(const SymmetricProfile& p);

}  // namespace rsdh
