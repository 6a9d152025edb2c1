#include <doctest.h>

#include <random>

#include "rsdh/rs_code.hpp"

using namespace rsdh;

TEST_SUITE("rs_code") {

TEST_CASE("construction and kind tagging") {
    Field F5(5, 1);
    auto std5 = RSCode::standard(F5, 2);
    CHECK(std5.kind == RSCode::Kind::Standard);
    CHECK(std5.n() == 5);
    CHECK(std5.min_distance() == 4);
    CHECK(std5.covering_radius() == 3);

    auto prim5 = RSCode::primitive(F5, 2);
    CHECK(prim5.kind == RSCode::Kind::Primitive);
    CHECK(prim5.n() == 4);

    auto gen = RSCode::generalized(F5, {0, 2, 3}, 1);
    CHECK(gen.kind == RSCode::Kind::Generalized);
    // a shuffled full evaluation set is still the standard code
    auto shuffled = RSCode::generalized(F5, {3, 0, 4, 1, 2}, 2);
    CHECK(shuffled.kind == RSCode::Kind::Standard);

    CHECK_THROWS_AS(RSCode::generalized(F5, {0, 0, 1}, 1), Error);
    CHECK_THROWS_AS(RSCode::generalized(F5, {0, 1, 2}, 3), Error);
}

TEST_CASE("encode") {
    Field F5(5, 1);
    auto code = RSCode::standard(F5, 2);
    const auto w = encode(code, {1, 1});  // f(x) = x + 1
    CHECK(w.values == std::vector<Elt>{1, 2, 3, 4, 0});
    CHECK(word_degree(w) <= 1);

    const auto zero = encode(code, {0, 0});
    CHECK(zero.values == std::vector<Elt>(5, 0));
    CHECK(word_degree(zero) == kZeroPolyDegree);
    CHECK_THROWS_AS(encode(code, {1}), Error);
}

TEST_CASE("word degree via interpolation") {
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 3);
    Poly f{{3, 0, 0, 0, 0, 1}};  // x^5 + 3
    std::vector<Elt> vals(7);
    for (Elt x = 0; x < 7; ++x) vals[x] = eval(F7, f, x);
    const auto w = make_word(code, vals);
    CHECK(word_degree(w) == 5);
    CHECK(w.interp == f);
    for (std::size_t i = 0; i < code.D.size(); ++i)
        CHECK(eval(F7, w.interp, code.D[i]) == w.values[i]);

    // u(x) = x^k has degree exactly k
    Poly xk{{0, 0, 0, 1}};
    const auto wk = word_from_poly(code, xk);
    CHECK(word_degree(wk) == 3);
}

TEST_CASE("hamming distance and minimum distance") {
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 3);
    CHECK(hamming_distance({0, 1, 2}, {0, 1, 2}) == 0);
    CHECK(hamming_distance({0, 1, 2}, {0, 2, 2}) == 1);
    CHECK_THROWS_AS(hamming_distance({0, 1}, {0, 1, 2}), Error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Elt> m1(3), m2(3);
        for (auto& v : m1) v = rng() % 7;
        for (auto& v : m2) v = rng() % 7;
        if (m1 == m2) continue;
        const auto d = hamming_distance(encode(code, m1).values, encode(code, m2).values);
        CHECK(d >= code.min_distance());
    }
}

TEST_CASE("degree bounds") {
    Field F7(7, 1);
    auto code = RSCode::standard(F7, 3);
    auto wk = word_from_poly(code, Poly{{0, 0, 0, 1}});
    CHECK(degree_bounds(code, wk) == std::pair{4, 4});  // deg = k: forced deep hole
    auto w5 = word_from_poly(code, Poly{{0, 0, 0, 0, 0, 1}});
    CHECK(degree_bounds(code, w5) == std::pair{2, 4});
    auto w6 = word_from_poly(code, Poly{{0, 0, 0, 0, 0, 0, 1}});
    CHECK(degree_bounds(code, w6) == std::pair{1, 4});
    auto codeword = encode(code, {1, 2, 3});
    CHECK_THROWS_AS(degree_bounds(code, codeword), Error);
}

TEST_CASE("monic normalization of the top coefficients") {
    Field F8(2, 3);
    auto code = RSCode::standard(F8, 1);
    const Elt g = F8.primitive_element();
    Poly u{{0, F8.mul(g, g), g, 1}};  // x^3 + g x^2 + g^2 x
    const auto w = word_from_poly(code, u);
    const auto top = monic_top(code, w);
    CHECK(top.deg == 3);
    CHECK(top.b == g);  // -g = g in characteristic 2
    CHECK(top.c == F8.mul(g, g));

    // scaling by a nonzero constant leaves the normalization unchanged
    const auto w2 = word_from_poly(code, poly_scale(F8, u, 5));
    const auto top2 = monic_top(code, w2);
    CHECK(top2.b == top.b);
    CHECK(top2.c == top.c);

    auto code2 = RSCode::standard(F8, 3);
    CHECK_THROWS_AS(monic_top(code2, w), Error);  // deg = k, not k+1/k+2
}

}  // TEST_SUITE
