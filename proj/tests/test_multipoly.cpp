#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "ghyp/kirchhoff.hpp"
#include "ghyp/multipoly.hpp"
#include "testutil.hpp"

using namespace ghyp;
namespace tu = ghyp::testutil;

namespace {

SubsetPoly from_terms(int n, std::initializer_list<std::pair<EdgeSubset, std::int64_t>> ts) {
    SubsetPoly p(n);
    for (auto [s, c] : ts) p.add_term(s, c);
    return p;
}

SubsetPoly random_poly(std::mt19937& rng, int n, int max_terms) {
    std::uniform_int_distribution<int> tc(1, max_terms);
    std::uniform_int_distribution<std::int64_t> cd(-9, 9);
    std::uniform_int_distribution<std::uint64_t> sd(0, all_edges_mask(n));
    SubsetPoly p(n);
    int k = tc(rng);
    for (int i = 0; i < k; ++i) p.add_term(sd(rng), cd(rng));
    return p;
}

}  // namespace

TEST_CASE("construction and term bookkeeping") {
    SubsetPoly p(3);
    CHECK(p.is_zero());
    CHECK(p.to_string() == "0");
    p.add_term(0b011, 2);
    p.add_term(0b011, -2);
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term(0b1000, 1), invalid_input);
    CHECK_THROWS_AS(SubsetPoly(65), invalid_input);
    CHECK(SubsetPoly::constant(3, 1).is_constant());
    CHECK(SubsetPoly::monomial(3, 0b101, 1).coeff(0b101) == 1);
}

TEST_CASE("addition") {
    auto t1 = SubsetPoly::monomial(3, 0b001, 1);
    auto t2 = SubsetPoly::monomial(3, 0b010, 1);
    CHECK(add(t1, t2).to_string() == "t1 + t2");
    CHECK(add(t1, scale(t1, -1)).is_zero());
    auto p = from_terms(3, {{0b011, 1}, {0b110, 1}});
    auto q = from_terms(3, {{0b011, 1}});
    CHECK(add(p, q).to_string() == "2*t1*t2 + t2*t3");
    CHECK_THROWS_AS(add(SubsetPoly(2), SubsetPoly(3)), invalid_input);
}

TEST_CASE("disjoint multiplication") {
    auto p = from_terms(4, {{0b0001, 1}, {0b0010, 1}});
    auto q = from_terms(4, {{0b0100, 1}, {0b1000, 1}});
    // ascending bitmask order: {1,3} < {2,3} < {1,4} < {2,4}
    CHECK(mul_disjoint(p, q).to_string() == "t1*t3 + t2*t3 + t1*t4 + t2*t4");
    CHECK(mul_disjoint(SubsetPoly::constant(4, 1), p) == p);
    auto tri = from_terms(5, {{0b00001, 1}, {0b00010, 1}, {0b00100, 1}});
    auto mono = SubsetPoly::monomial(5, 0b11000, 1);
    CHECK(mul_disjoint(tri, mono).to_string() == "t1*t4*t5 + t2*t4*t5 + t3*t4*t5");
    CHECK_THROWS_AS(mul_disjoint(p, p), invalid_input);
}

TEST_CASE("modular evaluation") {
    auto b3 = psi_family(FamilyKind::Banana, 3);
    CHECK(evaluate_mod(b3, {1, 1, 1}, 2) == 1);
    CHECK(evaluate_mod(b3, {0, 0, 0}, 5) == 0);
    auto p3 = psi_family(FamilyKind::Polygon, 3);
    CHECK(evaluate_mod(p3, {1, 1, 0}, 2) == 0);
    CHECK_THROWS_AS(evaluate_mod(p3, {1, 1, 0}, 4), invalid_input);
    CHECK_THROWS_AS(evaluate_mod(p3, {1, 1}, 2), invalid_input);
    // negative residues are normalized
    CHECK(evaluate_mod(p3, {-1, -1, 2}, 3) == 0);
}

TEST_CASE("evaluation is multiplicative on disjoint products") {
    std::mt19937 rng(31);
    const std::int64_t primes[] = {2, 3, 5, 7, 11};
    for (int i = 0; i < 100; ++i) {
        SubsetPoly a = random_poly(rng, 3, 4);  // vars 1..3
        SubsetPoly p1(6), p2(6);
        for (auto& [s, c] : a.terms()) p1.add_term(s, c);
        SubsetPoly b = random_poly(rng, 3, 4);
        for (auto& [s, c] : b.terms()) p2.add_term(s << 3, c);  // vars 4..6
        if (p1.is_zero() || p2.is_zero()) continue;
        std::int64_t q = primes[static_cast<size_t>(i) % 5];
        std::uniform_int_distribution<std::int64_t> xd(0, q - 1);
        std::vector<std::int64_t> x(6);
        for (auto& xi : x) xi = xd(rng);
        CHECK(evaluate_mod(mul_disjoint(p1, p2), x, q) ==
              evaluate_mod(p1, x, q) * evaluate_mod(p2, x, q) % q);
    }
}

TEST_CASE("reciprocal transform") {
    auto b3 = psi_family(FamilyKind::Banana, 3);
    CHECK(reciprocal_transform(b3).to_string() == "t1 + t2 + t3");
    CHECK(reciprocal_transform(SubsetPoly::constant(3, 1)).to_string() == "t1*t2*t3");
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        SubsetPoly p = random_poly(rng, 1 + i % 10, 6);
        CHECK(reciprocal_transform(reciprocal_transform(p)) == p);
        if (!p.is_zero() && is_homogeneous(p))
            CHECK(degree(reciprocal_transform(p)) == p.var_count() - degree(p));
    }
}

TEST_CASE("degree and homogeneity") {
    auto p = from_terms(3, {{0b011, 1}, {0b110, 1}});
    CHECK(degree(p) == 2);
    CHECK(is_homogeneous(p));
    auto q = from_terms(1, {{0, 1}, {0b1, 1}});
    CHECK_FALSE(is_homogeneous(q));
    CHECK(degree(psi_family(FamilyKind::Banana, 4)) == 3);
    CHECK_THROWS_AS(degree(SubsetPoly(3)), invalid_input);
    CHECK(is_homogeneous(SubsetPoly(3)));  // vacuously
}

TEST_CASE("disjoint factorization finds splits") {
    auto t1t2 = SubsetPoly::monomial(2, 0b11, 1);
    auto split = find_disjoint_factorization(t1t2);
    REQUIRE(split.has_value());
    CHECK(mul_disjoint(split->first, split->second) == t1t2);

    auto line = psi_family(FamilyKind::Polygon, 3);
    CHECK_FALSE(find_disjoint_factorization(line).has_value());

    auto twotri = psi(tu::two_triangles());
    auto s2 = find_disjoint_factorization(twotri);
    REQUIRE(s2.has_value());
    CHECK(mul_disjoint(s2->first, s2->second) == twotri);
    CHECK((s2->first.support_vars() | s2->second.support_vars()) == all_edges_mask(6));
    CHECK((s2->first.support_vars() & s2->second.support_vars()) == 0);

    // a factor may carry a constant term
    auto withconst = from_terms(2, {{0b10, 1}, {0b11, 1}});  // (1 + t1) * t2
    auto s3 = find_disjoint_factorization(withconst);
    REQUIRE(s3.has_value());
    CHECK(mul_disjoint(s3->first, s3->second) == withconst);

    // non-unit coefficients: (2 t1 + 3 t2)(5 t3 + 7 t4)
    auto a = from_terms(4, {{0b0001, 2}, {0b0010, 3}});
    auto b = from_terms(4, {{0b0100, 5}, {0b1000, 7}});
    auto prod = mul_disjoint(a, b);
    auto s4 = find_disjoint_factorization(prod);
    REQUIRE(s4.has_value());
    CHECK(mul_disjoint(s4->first, s4->second) == prod);

    CHECK_THROWS_AS(find_disjoint_factorization(SubsetPoly(3)), invalid_input);
    CHECK_THROWS_AS(find_disjoint_factorization(SubsetPoly::constant(3, 5)), invalid_input);
}

TEST_CASE("factorization round trip on random disjoint products") {
    std::mt19937 rng(5150);
    int built = 0;
    while (built < 40) {
        SubsetPoly a = random_poly(rng, 4, 3);
        SubsetPoly b0 = random_poly(rng, 4, 3);
        SubsetPoly a8(8), b8(8);
        for (auto& [s, c] : a.terms()) a8.add_term(s, c);
        for (auto& [s, c] : b0.terms()) b8.add_term(s << 4, c);
        if (a8.is_zero() || a8.is_constant() || b8.is_zero() || b8.is_constant()) continue;
        ++built;
        SubsetPoly prod = mul_disjoint(a8, b8);
        auto split = find_disjoint_factorization(prod);
        REQUIRE(split.has_value());
        CHECK(mul_disjoint(split->first, split->second) == prod);
    }
}

TEST_CASE("bipartition search is definitive on small irreducibles") {
    // a product of nonconstant disjoint factors always splits across some
    // variable bipartition, so "none" here is a real irreducibility answer
    for (int n = 2; n <= 6; ++n) {
        CHECK_FALSE(find_disjoint_factorization(psi_family(FamilyKind::Polygon, n)).has_value());
        CHECK_FALSE(find_disjoint_factorization(psi_family(FamilyKind::Banana, n)).has_value());
    }
}

TEST_CASE("overflow is detected, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    auto p = from_terms(1, {{0b1, big}});
    CHECK_THROWS_AS(add(p, p), arithmetic_overflow);
    auto q = from_terms(2, {{0b01, big}});
    auto r = from_terms(2, {{0b10, 2}});
    CHECK_THROWS_AS(mul_disjoint(q, r), arithmetic_overflow);
    CHECK_THROWS_AS(scale(p, 3), arithmetic_overflow);
}

TEST_CASE("canonical text rendering") {
    CHECK(psi_family(FamilyKind::Banana, 3).to_string() == "t1*t2 + t1*t3 + t2*t3");
    CHECK(psi_family(FamilyKind::Star, 3).to_string() == "1");
    CHECK(from_terms(2, {{0, 1}, {0b01, -1}, {0b10, -2}}).to_string() == "1 + -t1 + -2*t2");
}
