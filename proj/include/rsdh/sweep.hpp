#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsdh/distance.hpp"

namespace rsdh {

/// Theorem-vs-DP(-vs-oracle) verification sweep over (q, kind, k, b[, c]).
struct SweepConfig {
    std::vector<std::string> field_specs;
    std::vector<RSCode::Kind> kinds{RSCode::Kind::Standard};
    int degree_offset = 1;  // deg(u) = k + degree_offset
    std::optional<std::uint32_t> k_min, k_max;
    std::uint32_t oracle_max_q = 9;
    std::string format = "tsv";  // tsv | json
    std::string out;             // empty: results/sweep_<hash>.<ext>
    unsigned jobs = 1;
};

struct SweepRow {
    std::uint32_t q = 0;
    RSCode::Kind kind = RSCode::Kind::Standard;
    std::uint32_t k = 0;
    Elt b = 0;
    std::optional<Elt> c;
    bool cf_in_range = false;
    Verdict cf_verdict = Verdict::Unknown;
    std::optional<int> cf_d;
    std::string paper_case;
    int dp_d = 0;
    std::optional<int> oracle_d;
    bool agree = true;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::uint64_t disagreements = 0;
    std::string out_path;  // empty when not written
};

std::string sweep_config_hash(const SweepConfig& cfg);
SweepResult run_sweep(const SweepConfig& cfg, bool write_output = true);
std::string render_rows_tsv(const std::vector<SweepRow>& rows);
std::string render_rows_json(const std::vector<SweepRow>& rows);

/// Empirical deep-hole check for words a*x^(q-2)+v over primitive codes:
/// oracle distance must equal the covering radius for every sampled cell.
struct Prop8Result {
    std::uint64_t cells = 0;
    std::uint64_t failures = 0;
};

Prop8Result prop8_check(const Field& F, std::uint32_t trials_per_cell = 10,
                        std::uint64_t seed = 20240901);

}  // namespace rsdh
