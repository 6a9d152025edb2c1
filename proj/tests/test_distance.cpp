#include <doctest.h>

#include <random>

#include "rsdh/distance.hpp"
#include "test_helpers.hpp"

using namespace rsdh;

namespace {

Poly top_poly(const Field& F, std::uint32_t k, int off, Elt b, std::optional<Elt> c) {
    Poly f;
    f.c.assign(k + off + 1, 0);
    f.c[k + off] = 1;
    f.c[k + off - 1] = F.neg(b);
    if (c) f.c[k] = *c;
    f.trim();
    return f;
}

}  // namespace

TEST_SUITE("distance") {

TEST_CASE("subset dp: pinned examples") {
    Field F4(2, 2);
    std::vector<Elt> D4{0, 1, 2, 3};
    CHECK_FALSE(subset_symmetric_dp(F4, D4, 2, 0).exists);

    Field F3(3, 1);
    auto r = subset_symmetric_dp(F3, {0, 1, 2}, 2, 0, 2);
    REQUIRE(r.exists);
    CHECK(*r.witness == std::vector<Elt>{1, 2});

    auto empty = subset_symmetric_dp(F3, {0, 1, 2}, 0, 0, 0);
    REQUIRE(empty.exists);
    CHECK(empty.witness->empty());

    // q-1 elements of F_q summing to b: everything except -b
    for (auto [p, m] : {std::pair{5u, 1u}, {2u, 3u}}) {
        Field F(p, m);
        std::vector<Elt> D(F.q());
        for (Elt i = 0; i < F.q(); ++i) D[i] = i;
        for (Elt b = 0; b < F.q(); ++b) {
            auto res = subset_symmetric_dp(F, D, F.q() - 1, b);
            REQUIRE(res.exists);
            std::vector<Elt> expect;
            for (Elt x = 0; x < F.q(); ++x)
                if (x != F.neg(b)) expect.push_back(x);
            CHECK(*res.witness == expect);
        }
    }
}

TEST_CASE("subset dp equals brute-force truth") {
    for (auto [p, m] : {std::pair{2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
        Field F(p, m);
        const Elt q = F.q();
        for (bool units : {false, true}) {
            std::vector<Elt> D;
            for (Elt i = units ? 1 : 0; i < q; ++i) D.push_back(i);
            const auto truth = testing::brute_subset_truth(F, D);
            SubsetProfileTable table(F, D, static_cast<std::uint32_t>(D.size()), true);
            for (std::uint32_t t = 0; t <= D.size(); ++t)
                for (Elt e1 = 0; e1 < q; ++e1) {
                    bool any = false;
                    for (Elt e2 = 0; e2 < q; ++e2) {
                        CHECK(table.exists(t, e1, e2) == static_cast<bool>(truth[t][e1][e2]));
                        any = any || truth[t][e1][e2];
                    }
                    CHECK(table.exists(t, e1) == any);
                }
        }
    }
}

TEST_CASE("subset dp witness is lexicographically smallest") {
    std::mt19937 rng(31337);
    for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 3u}}) {
        Field F(p, m);
        std::vector<Elt> D(F.q());
        for (Elt i = 0; i < F.q(); ++i) D[i] = i;
        for (int trial = 0; trial < 60; ++trial) {
            const std::uint32_t t = 1 + rng() % (F.q() - 1);
            const Elt e1 = rng() % F.q();
            const bool with_e2 = rng() % 2;
            std::optional<Elt> e2;
            if (with_e2) e2 = rng() % F.q();
            const auto dp = subset_symmetric_dp(F, D, t, e1, e2);
            const auto brute = testing::brute_lex_min_subset(F, D, t, e1, e2);
            CHECK(dp.exists == brute.has_value());
            if (dp.exists) CHECK(*dp.witness == *brute);
        }
    }
}

TEST_CASE("oracle: pinned examples and the exhaustive-codeword route") {
    Field F3(3, 1);
    auto code3 = RSCode::standard(F3, 1);
    const auto w3 = make_word(code3, {0, 1, 2});  // u(x) = x, degree k
    CHECK(*max_agreement_oracle(code3, w3).d == 2);

    Field F5(5, 1);
    auto code5 = RSCode::standard(F5, 2);
    const auto w5 = word_from_poly(code5, Poly{{0, 0, 0, 1}});
    CHECK(*max_agreement_oracle(code5, w5).d == 2);

    const auto cw = encode(code5, {3, 1});
    CHECK(*max_agreement_oracle(code5, cw).d == 0);

    CHECK_THROWS_AS(max_agreement_oracle(code5, w5, 1), Error);

    // independent route: enumerate all q^k codewords
    std::mt19937 rng(5150);
    for (auto [p, m, k] : {std::tuple{3u, 1u, 1u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {7u, 1u, 2u}}) {
        Field F(p, m);
        auto code = RSCode::standard(F, k);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Elt> vals(code.n());
            for (auto& v : vals) v = rng() % F.q();
            const auto u = make_word(code, vals);
            const auto res = max_agreement_oracle(code, u);
            CHECK(*res.d == testing::brute_distance(code, u));
            REQUIRE(res.nearest_codeword);
            CHECK(static_cast<int>(hamming_distance(*res.nearest_codeword, u.values)) == *res.d);
        }
    }
}

TEST_CASE("degree k+1 distances") {
    Field F4(2, 2);
    auto c41 = RSCode::standard(F4, 1);
    CHECK(*distance_deg_k1(c41, word_from_poly(c41, top_poly(F4, 1, 1, 0, {}))).d == 3);

    Field F8(2, 3);
    auto c85 = RSCode::standard(F8, 5);
    CHECK(*distance_deg_k1(c85, word_from_poly(c85, top_poly(F8, 5, 1, 0, {}))).d == 3);

    Field F7(7, 1);
    auto p74 = RSCode::primitive(F7, 4);
    const auto res = distance_deg_k1(p74, word_from_poly(p74, top_poly(F7, 4, 1, 0, {})));
    CHECK(*res.d == 2);  // covering radius of the primitive code: a deep hole
    CHECK_FALSE(res.witness.has_value());

    // witness certifies when d = n-k-1
    auto c72 = RSCode::standard(F7, 2);
    const auto w = word_from_poly(c72, top_poly(F7, 2, 1, 3, {}));
    const auto r2 = distance_deg_k1(c72, w);
    CHECK(*r2.d == 4);
    REQUIRE(r2.witness);
    CHECK(witness_certifies(c72, w, *r2.witness, *r2.d));
}

TEST_CASE("degree k+2 distances") {
    Field F5(5, 1);
    auto c52 = RSCode::standard(F5, 2);
    CHECK(*distance_deg_k2(c52, word_from_poly(c52, top_poly(F5, 2, 2, 1, 1))).d == 1);
    CHECK(*distance_deg_k2(c52, word_from_poly(c52, top_poly(F5, 2, 2, 1, 0))).d == 2);

    Field F8(2, 3);
    auto c81 = RSCode::standard(F8, 1);
    const auto deep = distance_deg_k2(c81, word_from_poly(c81, top_poly(F8, 1, 2, 1, 1)));
    CHECK(*deep.d == 7);  // b^2 = c: a q=8 deep-hole family of degree k+2

    // witnesses certify for both exact shapes
    const auto w1 = word_from_poly(c52, top_poly(F5, 2, 2, 1, 1));
    const auto r1 = distance_deg_k2(c52, w1);
    REQUIRE(r1.witness);
    CHECK(witness_certifies(c52, w1, *r1.witness, *r1.d));
    const auto w2 = word_from_poly(c52, top_poly(F5, 2, 2, 1, 0));
    const auto r2 = distance_deg_k2(c52, w2);
    REQUIRE(r2.witness);
    CHECK(r2.witness->extra_root.has_value());
    CHECK(witness_certifies(c52, w2, *r2.witness, *r2.d));
}

TEST_CASE("distance depends only on the top coefficients") {
    std::mt19937 rng(2024);
    Field F8(2, 3);
    auto code = RSCode::standard(F8, 2);
    for (Elt b : {0u, 3u}) {
        for (Elt c : {0u, 5u}) {
            const auto base = word_from_poly(code, top_poly(F8, 2, 2, b, c));
            const int d0 = *distance_deg_k2(code, base).d;
            for (int trial = 0; trial < 10; ++trial) {
                Poly f = top_poly(F8, 2, 2, b, c);
                f.c.resize(5);
                f.c[0] = rng() % 8;
                f.c[1] = rng() % 8;
                const Elt lambda = 1 + rng() % 7;
                const auto w = word_from_poly(code, poly_scale(F8, f, lambda));
                CHECK(*distance_deg_k2(code, w).d == d0);
                CHECK(*max_agreement_oracle(code, w).d == d0);
            }
        }
    }
}

TEST_CASE("closed form: pinned clauses") {
    Field F5(5, 1);
    auto cf = [&](const Field& F, RSCode::Kind kind, std::uint32_t k, Elt b,
                  std::optional<Elt> c) {
        return closed_form_distance(F, ClosedFormCase::make(F, kind, k, b, c));
    };

    // degree k+1, standard, odd characteristic: always q-k-1
    for (Elt b = 0; b < 5; ++b) {
        const auto r = cf(F5, RSCode::Kind::Standard, 2, b, {});
        CHECK(r.verdict == Verdict::Exact);
        CHECK(*r.d == 2);
        CHECK(r.paper_case == "Thm1(i) otherwise");
    }
    Field F8(2, 3);
    CHECK(cf(F8, RSCode::Kind::Standard, 1, 0, {}).paper_case == "Thm1(i)(a) b=0,p=2,k=1");
    CHECK(cf(F8, RSCode::Kind::Standard, 5, 0, {}).paper_case == "Thm1(i)(b) b=0,p=2,k=q-3");
    CHECK(*cf(F8, RSCode::Kind::Standard, 5, 0, {}).d == 3);
    CHECK(cf(F8, RSCode::Kind::Primitive, 1, 0, {}).paper_case == "Thm1(ii)(a) b=0,p=2,k=1");
    CHECK(cf(F8, RSCode::Kind::Primitive, 4, 0, {}).paper_case == "Thm1(ii)(b) b=0,p=2,k=q-4");
    Field F7(7, 1);
    CHECK(cf(F7, RSCode::Kind::Primitive, 4, 0, {}).paper_case == "Thm1(ii)(c) b=0,k=q-3");
    CHECK(*cf(F7, RSCode::Kind::Primitive, 4, 0, {}).d == 2);
    CHECK(*cf(F7, RSCode::Kind::Primitive, 2, 3, {}).d == 3);  // q-k-2

    // Thm 2(i): k+2 = q-1
    CHECK(*cf(F5, RSCode::Kind::Standard, 2, 1, 1).d == 1);
    CHECK(cf(F5, RSCode::Kind::Standard, 2, 1, 1).paper_case == "Thm2(i) b^2=c");
    CHECK(*cf(F5, RSCode::Kind::Standard, 2, 1, 0).d == 2);

    // Thm 2(ii): p = 2
    CHECK(*cf(F8, RSCode::Kind::Standard, 3, 0, 5).d == 3);
    CHECK(cf(F8, RSCode::Kind::Standard, 3, 0, 5).paper_case == "Thm2(ii)(a) 4|k+1,c!=0");
    CHECK(cf(F8, RSCode::Kind::Standard, 1, 2, F8.mul(2, 2)).verdict == Verdict::Unknown);
    CHECK(cf(F8, RSCode::Kind::Standard, 2, 0, 0).verdict == Verdict::Unknown);
    CHECK(cf(F8, RSCode::Kind::Standard, 4, 1, 1).verdict == Verdict::UpperBound);

    // Thm 2(iii): p odd
    const auto bound = cf(F7, RSCode::Kind::Standard, 1, 0, 0);
    CHECK(bound.verdict == Verdict::UpperBound);
    CHECK(*bound.d == 5);
    CHECK(bound.paper_case == "Thm2(iii) p!|k+2");

    Field F9(3, 2);
    Elt c_nonsq = 0, c_sq = 0;
    for (Elt c = 1; c < 9 && (!c_nonsq || !c_sq); ++c)
        (F9.eta(F9.neg(c)) == -1 ? c_nonsq : c_sq) = c;
    const auto deep = cf(F9, RSCode::Kind::Standard, 1, 0, c_nonsq);
    CHECK(deep.verdict == Verdict::Exact);
    CHECK(*deep.d == 8);  // q - k: a degree-(k+2) deep hole
    CHECK(*cf(F9, RSCode::Kind::Standard, 1, 0, c_sq).d == 6);
    CHECK(*cf(F9, RSCode::Kind::Standard, 1, 2, c_nonsq).d == 6);  // b != 0 wins

    // out-of-theorem-range inputs
    CHECK_THROWS_AS(cf(F5, RSCode::Kind::Primitive, 1, 0, {}), Error);        // q <= 5
    CHECK_THROWS_AS(cf(F7, RSCode::Kind::Primitive, 2, 0, 1), Error);         // no k+2 theorem
    CHECK_THROWS_AS(cf(F5, RSCode::Kind::Standard, 4, 0, {}), Error);         // k > q-2

    // the smallest in-range fields: q=3 for degree k+1, q=4 for degree k+2
    Field F3(3, 1);
    auto c31 = RSCode::standard(F3, 1);
    for (Elt b = 0; b < 3; ++b) {
        const auto r = cf(F3, RSCode::Kind::Standard, 1, b, {});
        const auto w = word_from_poly(c31, Poly{{0, F3.neg(b), 1}});
        CHECK(*r.d == *distance_deg_k1(c31, w).d);
    }
    Field F4(2, 2);
    auto c41 = RSCode::standard(F4, 1);
    for (Elt b = 0; b < 4; ++b)
        for (Elt c = 0; c < 4; ++c) {
            const auto r = cf(F4, RSCode::Kind::Standard, 1, b, c);  // Thm2(i), k+2 = q-1
            REQUIRE(r.verdict == Verdict::Exact);
            const auto w = word_from_poly(c41, Poly{{0, c, F4.neg(b), 1}});
            CHECK(*r.d == *distance_deg_k2(c41, w).d);
        }
}

TEST_CASE("classify deep holes") {
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 3);
    const auto at_k = word_from_poly(code, Poly{{0, 0, 0, 1}});
    CHECK(classify_deep_hole(code, at_k).first);

    Field F5(5, 1);
    auto c52 = RSCode::standard(F5, 2);
    CHECK_FALSE(classify_deep_hole(c52, word_from_poly(c52, Poly{{0, 0, 0, 1}})).first);

    Field F8(2, 3);
    auto c82 = RSCode::standard(F8, 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        Poly f{{static_cast<Elt>(rng() % 8), static_cast<Elt>(rng() % 8), 0, 0, 1}};  // x^4+dx+e
        const auto [deep, res] = classify_deep_hole(c82, word_from_poly(c82, f));
        CHECK(deep);
        CHECK(*res.d == 6);
    }
    // closed form answers exact cells without the DP
    auto c81 = RSCode::standard(F8, 1);
    const auto [deep81, res81] = classify_deep_hole(c81, word_from_poly(c81, Poly{{0, 5, 0, 1}}));
    CHECK_FALSE(deep81);  // b = 0, c = 5 != b^2: Thm2(ii)(a) exact q-k-2
    CHECK(res81.method == Method::ClosedForm);
}

TEST_CASE("consistency check") {
    // zero inconsistencies across all 7^4 monic degree-4 words at q=7, k=2
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 2);
    for (Elt a3 = 0; a3 < 7; ++a3)
        for (Elt a2 = 0; a2 < 7; ++a2)
            for (Elt a1 = 0; a1 < 7; ++a1)
                for (Elt a0 = 0; a0 < 7; ++a0) {
                    const auto u = word_from_poly(code, Poly{{a0, a1, a2, a3, 1}});
                    CHECK_NOTHROW(consistency_check(code, u));
                }

    // injected fault: a perturbed closed-form verdict must be flagged
    DistanceResult good;
    good.verdict = Verdict::Exact;
    good.d = 4;
    good.method = Method::SubsetDP;
    DistanceResult bad = good;
    bad.d = 3;
    bad.method = Method::ClosedForm;
    const auto rep = check_agreement(7, 2, 4, {{"subset_dp", good}, {"closed_form", bad}});
    CHECK_FALSE(rep.consistent);

    // a genuine conflict: at q=5, k=1 the degree-3 bound clause fails on
    // x^3 (a permutation polynomial), and the checker must say so
    Field F5(5, 1);
    auto c51 = RSCode::standard(F5, 1);
    const auto perm = word_from_poly(c51, Poly{{0, 0, 0, 1}});
    CHECK_THROWS_WITH_AS(consistency_check(c51, perm), doctest::Contains("bound"), Error);
}

TEST_CASE("lemma-1 sandwich and scaling invariance") {
    std::mt19937 rng(60601);
    for (auto [p, m] : {std::pair{2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}}) {
        Field F(p, m);
        const Elt q = F.q();
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t k = 1 + rng() % (q - 2);
            auto code = RSCode::standard(F, k);
            std::vector<Elt> vals(q);
            for (auto& v : vals) v = rng() % q;
            const auto u = make_word(code, vals);
            const int deg = word_degree(u);
            const int d = *max_agreement_oracle(code, u).d;
            if (deg <= static_cast<int>(k) - 1) {
                CHECK(d == 0);
            } else {
                CHECK(d >= static_cast<int>(q) - deg);
                CHECK(d <= static_cast<int>(q - k));
            }
            const Elt lambda = 1 + rng() % (q - 1);
            std::vector<Elt> scaled(q);
            for (Elt i = 0; i < q; ++i) scaled[i] = F.mul(lambda, vals[i]);
            CHECK(*max_agreement_oracle(code, make_word(code, scaled)).d == d);
        }
    }
}

TEST_CASE("oracle equals DP on every degree k+1 / k+2 cell, q <= 9") {
    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
        const auto [p, m] = [&]() -> std::pair<std::uint32_t, std::uint32_t> {
            if (q == 4) return {2, 2};
            if (q == 8) return {2, 3};
            if (q == 9) return {3, 2};
            return {q, 1};
        }();
        Field F(p, m);
        for (std::uint32_t k = 1; k + 1 <= q - 1; ++k) {
            auto code = RSCode::standard(F, k);
            for (Elt b = 0; b < q; ++b) {
                const auto w1 = word_from_poly(code, top_poly(F, k, 1, b, {}));
                CHECK(*distance_deg_k1(code, w1).d == *max_agreement_oracle(code, w1).d);
                if (k + 2 <= q - 1)
                    for (Elt c = 0; c < q; ++c) {
                        const auto w2 = word_from_poly(code, top_poly(F, k, 2, b, c));
                        CHECK(*distance_deg_k2(code, w2).d == *max_agreement_oracle(code, w2).d);
                    }
            }
        }
    }
}

TEST_CASE("oracle cap and its override") {
    CHECK(binomial_capped(9, 4, 1000) == 126);
    CHECK(binomial_capped(40, 20, 10'000'000) == 10'000'001);  // clamped
    setenv("RSDH_ORACLE_CAP", "12345", 1);
    CHECK(oracle_cap() == 12345);
    unsetenv("RSDH_ORACLE_CAP");
    CHECK(oracle_cap() == 10'000'000);
}

TEST_CASE("engine dispatch") {
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 2);
    CHECK(*engine_distance(code, encode(code, {3, 1})).d == 0);
    CHECK(*engine_distance(code, word_from_poly(code, Poly{{0, 0, 1}})).d == 5);
    CHECK(engine_distance(code, word_from_poly(code, Poly{{0, 0, 0, 1}})).method == Method::SubsetDP);
    const auto high = engine_distance(code, word_from_poly(code, Poly{{0, 0, 0, 0, 0, 0, 1}}));
    CHECK(high.method == Method::Oracle);  // degree k+4 goes to the oracle
    CHECK(*high.d == testing::brute_distance(code, word_from_poly(code, Poly{{0, 0, 0, 0, 0, 0, 1}})));
}

}  // TEST_SUITE
