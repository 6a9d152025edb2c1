#include <iostream>

#include <CLI11.hpp>

#include "rsdh/constructions.hpp"
#include "rsdh/io.hpp"
#include "rsdh/sweep.hpp"

namespace {

using namespace rsdh;

// exit codes: 0 decided, 2 usage/out-of-range, 3 unknown verdict, 4 sweep disagreement
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitDisagree = 4;

struct DistanceOpts {
    std::string field, kind = "standard", eval_set, word, poly, format = "json";
    std::uint32_t k = 0;
};

int cmd_distance(const DistanceOpts& opt) {
    const Field F = parse_field_spec(opt.field);
    RSCode code = [&] {
        if (!opt.eval_set.empty()) return RSCode::generalized(F, parse_csv_elts(F, opt.eval_set), opt.k);
        if (opt.kind == "standard") return RSCode::standard(F, opt.k);
        if (opt.kind == "primitive") return RSCode::primitive(F, opt.k);
        throw Error(Err::ParseError, "generalized codes need --eval-set");
    }();
    ReceivedWord u = opt.poly.empty() ? make_word(code, parse_csv_elts(F, opt.word))
                                      : word_from_poly(code, parse_poly(F, opt.poly));
    const DistanceResult res = engine_distance(code, u);
    nlohmann::json j = to_json(res);
    j["n"] = code.n();
    j["k"] = code.k;
    j["kind"] = kind_name(code.kind);
    j["deg"] = word_degree(u);
    std::cout << j.dump(2) << "\n";
    return res.verdict == Verdict::Unknown ? kExitUnknown : kExitOk;
}

struct WitnessOpts {
    std::string lemma, field, domain = "fq", mode = "strict";
    std::uint32_t t = 0;
    std::uint32_t b = 0, c = 0, zeta = 1, r = 1, r1 = 1, mu = 1;
};

int cmd_witness(const WitnessOpts& opt) {
    const Field F = parse_field_spec(opt.field);
    nlohmann::json j;
    j["lemma"] = opt.lemma;
    j["q"] = F.q();
    std::vector<Elt> elems;
    bool exists = true;
    if (opt.lemma == "thm1-sum") {
        const auto domain = opt.domain == "fq*" || opt.domain == "units" ? WitnessDomain::Units
                                                                         : WitnessDomain::WholeField;
        j["target"] = {{"b", opt.b}, {"domain", domain == WitnessDomain::Units ? "fq*" : "fq"}};
        auto w = witness_sum(F, domain, opt.t, opt.b);
        exists = w.has_value();
        if (w) elems = *w;
    } else if (opt.lemma == "L5i" || opt.lemma == "L5ii") {
        const auto mode = opt.lemma == "L5i" ? PairMode::Strict : PairMode::Weak;
        j["target"] = {{"c", opt.c}, {"mode", mode == PairMode::Strict ? "strict" : "weak"}};
        elems = witness_pair_products(F, opt.t, opt.c, mode);
    } else if (opt.lemma == "L5iii") {
        if (F.q() <= 3) throw Error(Err::OutOfRange, "needs q > 3");
        for (Elt x = 1; x < F.q(); ++x) elems.push_back(x);
        j["target"] = {{"e2", 0}};
        if (symmetric_profile(F, elems).e2 != 0)
            throw Error(Err::InconsistencyDetected, "e2 over units is nonzero");
    } else if (opt.lemma == "L6") {
        j["target"] = {{"e2", 0}};
        elems = lemma6_witness(F, opt.t);
    } else if (opt.lemma == "Cor1") {
        j["target"] = {{"weak_e2", 0}};
        elems = corollary1_witness(F, opt.t);
    } else if (opt.lemma == "L9") {
        j["target"] = {{"psum1", 0}, {"psum2", opt.zeta}};
        elems = witness_power_sums(F, opt.t, opt.zeta);
    } else if (opt.lemma == "Cor2") {
        j["target"] = {{"psum1", 0}, {"psum2", opt.zeta}};
        elems = corollary2_witness(F, opt.t, opt.zeta);
    } else if (opt.lemma == "L8") {
        j["target"] = {{"r", opt.r}, {"r1", opt.r1}, {"mu", opt.mu}, {"b", opt.b}, {"c", opt.c}};
        elems = lemma43_witness(F, opt.t, opt.r, opt.r1, opt.mu, opt.b, opt.c);
    } else {
        throw Error(Err::ParseError, "unknown lemma tag " + opt.lemma);
    }
    j["exists"] = exists;
    if (exists) {
        j["elements"] = elems;
        j["profile"] = profile_json(symmetric_profile(F, elems));
        j["verified"] = true;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

struct VerifyOpts {
    std::vector<std::string> fields;
    std::string kind = "standard", suite, format = "tsv", out;
    int degree = 1;
    std::optional<std::uint32_t> k_min, k_max;
    std::uint32_t oracle_max_q = 9;
    unsigned jobs = 1;
};

int cmd_verify(const VerifyOpts& opt) {
    if (opt.suite == "prop8") {
        std::vector<std::string> specs = opt.fields;
        if (specs.empty()) specs = {"5", "7", "8", "9"};
        std::uint64_t failures = 0, cells = 0;
        for (const auto& spec : specs) {
            const Field F = parse_field_spec(spec);
            const auto res = prop8_check(F);
            cells += res.cells;
            failures += res.failures;
            std::cout << "q=" << F.q() << " cells=" << res.cells << " failures=" << res.failures
                      << "\n";
        }
        std::cout << "prop8 total cells=" << cells << " failures=" << failures << "\n";
        return failures ? kExitDisagree : kExitOk;
    }
    SweepConfig cfg;
    cfg.field_specs = opt.fields;
    if (cfg.field_specs.empty()) throw Error(Err::ParseError, "need at least one --field");
    if (opt.kind == "standard") cfg.kinds = {RSCode::Kind::Standard};
    else if (opt.kind == "primitive") cfg.kinds = {RSCode::Kind::Primitive};
    else if (opt.kind == "both") cfg.kinds = {RSCode::Kind::Standard, RSCode::Kind::Primitive};
    else throw Error(Err::ParseError, "--kind must be standard, primitive or both");
    cfg.degree_offset = opt.degree;
    cfg.k_min = opt.k_min;
    cfg.k_max = opt.k_max;
    cfg.oracle_max_q = opt.oracle_max_q;
    cfg.format = opt.format;
    cfg.out = opt.out;
    cfg.jobs = opt.jobs;
    const SweepResult res = run_sweep(cfg);
    std::cout << "rows=" << res.rows.size() << " disagreements=" << res.disagreements << " out="
              << res.out_path << "\n";
    if (res.disagreements) {
        for (const auto& r : res.rows)
            if (!r.agree) {
                std::cout << "DISAGREE q=" << r.q << " kind=" << kind_name(r.kind) << " k=" << r.k
                          << " b=" << r.b;
                if (r.c) std::cout << " c=" << *r.c;
                std::cout << " case=" << r.paper_case << " cf_d="
                          << (r.cf_d ? std::to_string(*r.cf_d) : "-") << " dp_d=" << r.dp_d << "\n";
            }
    }
    return res.disagreements ? kExitDisagree : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field lab for error distances and deep holes of Reed-Solomon codes"};
    app.require_subcommand(1);

    DistanceOpts dopt;
    auto* dist = app.add_subcommand("distance", "error distance of a received word");
    dist->add_option("--field", dopt.field, "field spec: q, p^m or p^m/mod=c0,c1,...")->required();
    dist->add_option("--kind", dopt.kind, "standard | primitive | generalized");
    dist->add_option("--eval-set", dopt.eval_set, "evaluation set encodings (generalized codes)");
    dist->add_option("--k", dopt.k, "code dimension")->required();
    dist->add_option("--word", dopt.word, "word values, comma-separated encodings");
    dist->add_option("--poly", dopt.poly, "interpolant, coefficient CSV or expression (x^3+g*x)");
    dist->add_option("--format", dopt.format, "json");

    WitnessOpts wopt;
    auto* wit = app.add_subcommand("witness", "construct an explicit witness for a lemma");
    wit->add_option("--lemma", wopt.lemma, "thm1-sum | L5i | L5ii | L5iii | L6 | Cor1 | L8 | L9 | Cor2")
        ->required();
    wit->add_option("--q,--field", wopt.field, "field spec")->required();
    wit->add_option("--domain", wopt.domain, "fq | fq* (thm1-sum)");
    wit->add_option("--t", wopt.t, "witness size");
    wit->add_option("--b", wopt.b, "target sum / b parameter");
    wit->add_option("--c", wopt.c, "target pair-product / c parameter");
    wit->add_option("--zeta", wopt.zeta, "target power sum (L9/Cor2)");
    wit->add_option("--r", wopt.r, "r parameter (L8)");
    wit->add_option("--r1", wopt.r1, "r1 parameter (L8)");
    wit->add_option("--mu", wopt.mu, "mu parameter (L8)");
    wit->add_option("--mode", wopt.mode, "strict | weak (L5)");

    VerifyOpts vopt;
    auto* ver = app.add_subcommand("verify", "closed form vs DP vs oracle sweep");
    ver->add_option("--field", vopt.fields, "field spec (repeatable)");
    ver->add_option("--suite", vopt.suite, "prop8 for the empirical deep-hole family check");
    ver->add_option("--kind", vopt.kind, "standard | primitive | both");
    ver->add_option("--degree", vopt.degree, "1 for deg k+1, 2 for deg k+2");
    ver->add_option("--k-min", vopt.k_min, "lowest k");
    ver->add_option("--k-max", vopt.k_max, "highest k");
    ver->add_option("--oracle-max-q", vopt.oracle_max_q, "run the oracle for q up to this");
    ver->add_option("--format", vopt.format, "tsv | json");
    ver->add_option("--out", vopt.out, "output path (default results/sweep_<hash>)");
    ver->add_option("--jobs", vopt.jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dist->parsed()) {
            if (dopt.word.empty() == dopt.poly.empty())
                throw rsdh::Error(rsdh::Err::ParseError, "give exactly one of --word / --poly");
            return cmd_distance(dopt);
        }
        if (wit->parsed()) return cmd_witness(wopt);
        if (ver->parsed()) return cmd_verify(vopt);
    } catch (const rsdh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
