#include "rsdh/sweep.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "rsdh/io.hpp"

namespace rsdh {

namespace {

std::string config_string(const SweepConfig& cfg) {
    std::ostringstream os;
    os << "deg=k+" << cfg.degree_offset << ";fields=";
    for (const auto& f : cfg.field_specs) os << f << ',';
    os << ";kinds=";
    for (auto k : cfg.kinds) os << kind_name(k) << ',';
    os << ";krange=" << (cfg.k_min ? std::to_string(*cfg.k_min) : "auto") << ".."
       << (cfg.k_max ? std::to_string(*cfg.k_max) : "auto") << ";oracle<=" << cfg.oracle_max_q;
    return os.str();
}

// word u(x) = x^(k+deg_off) - b x^(k+deg_off-1) [+ c x^k], v = 0
Poly cell_poly(const Field& F, std::uint32_t k, int deg_off, Elt b, std::optional<Elt> c) {
    Poly f;
    f.c.assign(k + deg_off + 1, 0);
    f.c[k + deg_off] = 1;
    f.c[k + deg_off - 1] = F.neg(b);
    if (c) f.c[k] = *c;
    f.trim();
    return f;
}

struct CellGroup {
    const Field* F;
    RSCode::Kind kind;
    std::uint32_t k;
};

void run_group(const SweepConfig& cfg, const CellGroup& grp, std::vector<SweepRow>& rows) {
    const Field& F = *grp.F;
    const std::uint32_t q = F.q();
    RSCode code = grp.kind == RSCode::Kind::Standard ? RSCode::standard(F, grp.k)
                                                     : RSCode::primitive(F, grp.k);
    const int n = static_cast<int>(code.n());
    const int k = static_cast<int>(grp.k);
    const bool with_c = cfg.degree_offset == 2;
    SubsetProfileTable table(F, code.D, grp.k + cfg.degree_offset, with_c);
    const bool oracle_ok = q <= cfg.oracle_max_q &&
                           binomial_capped(code.n(), code.k, oracle_cap()) <= oracle_cap();

    auto dp_distance = [&](Elt b, std::optional<Elt> c) -> int {
        if (!with_c) return table.exists(grp.k + 1, b) ? n - k - 1 : n - k;
        if (table.exists(grp.k + 2, b, *c)) return n - k - 2;
        for (Elt a = 0; a < q; ++a) {
            const Elt e1 = F.sub(b, a);
            const Elt e2 = F.sub(*c, F.mul(a, e1));
            if (table.exists(grp.k + 1, e1, e2)) return n - k - 1;
        }
        return n - k;
    };

    for (Elt b = 0; b < q; ++b) {
        const std::uint32_t cmax = with_c ? q : 1;
        for (Elt c = 0; c < cmax; ++c) {
            SweepRow row;
            row.q = q;
            row.kind = grp.kind;
            row.k = grp.k;
            row.b = b;
            if (with_c) row.c = c;
            row.dp_d = dp_distance(b, row.c);
            try {
                const auto cse = ClosedFormCase::make(F, grp.kind, grp.k, b, row.c);
                const DistanceResult cf = closed_form_distance(F, cse);
                row.cf_in_range = true;
                row.cf_verdict = cf.verdict;
                row.cf_d = cf.d;
                row.paper_case = cf.paper_case;
            } catch (const Error& e) {
                if (e.kind() != Err::OutOfTheoremRange) throw;
            }
            if (oracle_ok) {
                const auto word = word_from_poly(code, cell_poly(F, grp.k, cfg.degree_offset, b, row.c));
                row.oracle_d = *max_agreement_oracle(code, word).d;
            }
            row.agree = true;
            if (row.oracle_d && *row.oracle_d != row.dp_d) row.agree = false;
            if (row.cf_in_range) {
                if (row.cf_verdict == Verdict::Exact && *row.cf_d != row.dp_d) row.agree = false;
                if (row.cf_verdict == Verdict::UpperBound && row.dp_d > *row.cf_d) row.agree = false;
            }
            rows.push_back(std::move(row));
        }
    }
}

}  // namespace

std::string sweep_config_hash(const SweepConfig& cfg) {
    // FNV-1a over the canonical config string
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : config_string(cfg)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << (h & 0xffffffffu);
    return os.str();
}

std::string render_rows_tsv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "q\tkind\tk\tb\tc\tcf_verdict\tcf_d\tpaper_case\tdp_d\toracle_d\tagree\n";
    for (const auto& r : rows) {
        os << r.q << '\t' << kind_name(r.kind) << '\t' << r.k << '\t' << r.b << '\t';
        if (r.c) os << *r.c;
        else os << '-';
        os << '\t' << (r.cf_in_range ? verdict_name(r.cf_verdict) : "out_of_range") << '\t';
        if (r.cf_in_range && r.cf_d) os << *r.cf_d;
        else os << '-';
        os << '\t' << (r.paper_case.empty() ? "-" : r.paper_case) << '\t' << r.dp_d << '\t';
        if (r.oracle_d) os << *r.oracle_d;
        else os << '-';
        os << '\t' << (r.agree ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string render_rows_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["q"] = r.q;
        j["kind"] = kind_name(r.kind);
        j["k"] = r.k;
        j["b"] = r.b;
        j["c"] = r.c ? nlohmann::json(*r.c) : nlohmann::json(nullptr);
        j["cf_verdict"] = r.cf_in_range ? verdict_name(r.cf_verdict) : "out_of_range";
        j["cf_d"] = r.cf_in_range && r.cf_d ? nlohmann::json(*r.cf_d) : nlohmann::json(nullptr);
        j["paper_case"] = r.paper_case.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.paper_case);
        j["dp_d"] = r.dp_d;
        j["oracle_d"] = r.oracle_d ? nlohmann::json(*r.oracle_d) : nlohmann::json(nullptr);
        j["agree"] = r.agree;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

SweepResult run_sweep(const SweepConfig& cfg, bool write_output) {
    if (cfg.degree_offset != 1 && cfg.degree_offset != 2)
        throw Error(Err::OutOfRange, "degree offset must be 1 or 2");
    std::vector<Field> fields;
    fields.reserve(cfg.field_specs.size());
    for (const auto& spec : cfg.field_specs) fields.push_back(parse_field_spec(spec));

    std::vector<CellGroup> groups;
    for (const auto& F : fields) {
        for (auto kind : cfg.kinds) {
            if (kind == RSCode::Kind::Generalized)
                throw Error(Err::OutOfRange, "sweeps cover standard and primitive codes");
            const std::uint32_t n = kind == RSCode::Kind::Standard ? F.q() : F.q() - 1;
            if (n < 2) continue;
            // deg(u) = k + off <= n-1
            const std::uint32_t hi_auto = n >= static_cast<std::uint32_t>(cfg.degree_offset) + 1
                                              ? n - 1 - cfg.degree_offset
                                              : 0;
            const std::uint32_t lo = std::max<std::uint32_t>(1, cfg.k_min.value_or(1));
            const std::uint32_t hi = std::min<std::uint32_t>(hi_auto, cfg.k_max.value_or(hi_auto));
            for (std::uint32_t k = lo; k <= hi && hi_auto >= 1; ++k)
                groups.push_back({&F, kind, k});
        }
    }

    std::vector<std::vector<SweepRow>> slots(groups.size());
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1 || groups.size() <= 1) {
        for (std::size_t i = 0; i < groups.size(); ++i) run_group(cfg, groups[i], slots[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, groups.size()); ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < groups.size(); i = next.fetch_add(1))
                    run_group(cfg, groups[i], slots[i]);
            });
        for (auto& th : pool) th.join();
    }

    SweepResult res;
    for (auto& s : slots)
        for (auto& r : s) {
            if (!r.agree) ++res.disagreements;
            res.rows.push_back(std::move(r));
        }

    if (write_output) {
        std::string path = cfg.out;
        if (path.empty()) {
            std::filesystem::create_directories("results");
            path = "results/sweep_" + sweep_config_hash(cfg) + (cfg.format == "json" ? ".json" : ".tsv");
        }
        std::ofstream out(path);
        if (!out) throw Error(Err::ParseError, "cannot open output file " + path);
        out << (cfg.format == "json" ? render_rows_json(res.rows) : render_rows_tsv(res.rows));
        res.out_path = path;
    }
    return res;
}

Prop8Result prop8_check(const Field& F, std::uint32_t trials_per_cell, std::uint64_t seed) {
    Prop8Result res;
    const std::uint32_t q = F.q();
    if (q < 4) throw Error(Err::OutOfRange, "need q >= 4");
    for (std::uint32_t k = 2; k <= q - 2; ++k) {
        RSCode code = RSCode::primitive(F, k);
        for (Elt a = 1; a < q; ++a) {
            std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(q) << 40) ^
                                (static_cast<std::uint64_t>(k) << 20) ^ a);
            for (std::uint32_t trial = 0; trial < trials_per_cell; ++trial) {
                Poly f;
                f.c.assign(q - 1, 0);
                f.c[q - 2] = a;
                for (std::uint32_t i = 0; i < k; ++i)
                    f.c[i] = static_cast<Elt>(rng() % q);  // v with deg <= k-1
                f.trim();
                const auto word = word_from_poly(code, f);
                const auto oracle = max_agreement_oracle(code, word);
                ++res.cells;
                if (*oracle.d != static_cast<int>(code.covering_radius())) ++res.failures;
            }
        }
    }
    return res;
}

}  // namespace rsdh
