#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace plurikit;

TEST_CASE("ascending pochhammer") {
    KappaRational k = KappaRational::variable();
    CHECK(asc_poch(k - KappaRational(1), 0) == KappaRational(1));
    CHECK(asc_poch(k - KappaRational(1), 2) == parse_kappa("k^2 - k"));
    CHECK(asc_poch(KappaRational(3), 3) == KappaRational(60));
}

TEST_CASE("descending pochhammer") {
    KappaRational k = KappaRational::variable();
    CHECK(desc_poch(k, 1) == k);
    CHECK(desc_poch(KappaRational(5), 3) == KappaRational(60));
    CHECK(desc_poch(k, 2) == parse_kappa("k^2 - k"));
}

TEST_CASE("ascending equals shifted descending") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        KappaRational x = testing::rand_kappa_rational(rng);
        for (unsigned r = 0; r <= 8; ++r)
            CHECK(asc_poch(x, r) == desc_poch(x + KappaRational(static_cast<long>(r) - 1), r));
    }
}

TEST_CASE("eval_at") {
    KappaRational k = KappaRational::variable();
    KappaRational f = KappaRational(1) / (k - KappaRational(2));
    CHECK(eval_at(f, BigRational(3)) == BigRational(1));

    KappaRational g = (k * k - k) / (k - KappaRational(1));
    CHECK(eval_at(g, BigRational(5)) == BigRational(5));

    CHECK_THROWS_WITH_AS(eval_at(f, BigRational(2)), doctest::Contains("kappa = 2"),
                         DomainError);
    try {
        eval_at(f, BigRational(2));
    } catch (const DomainError& e) {
        CHECK(e.code() == ErrorCode::PoleAtKappa);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        KappaRational a = testing::rand_kappa_rational(rng);
        KappaRational b = testing::rand_kappa_rational(rng);
        KappaRational c = testing::rand_kappa_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == KappaRational(1));
            CHECK(a.pow(-2) == (a * a).inverse());
        }
        CHECK(a - a == KappaRational());
    }
}

TEST_CASE("canonical reduction") {
    KappaPoly k = KappaPoly::variable();
    KappaPoly two_k({std::vector<BigRational>{BigRational(0), BigRational(2)}});
    KappaRational a(k + KappaPoly(1), k * k);
    KappaRational b((k + KappaPoly(1)) * two_k, k * k * two_k);
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());

    // (k^2 - k)/(k - 1) reduces to k.
    CHECK(parse_kappa("(k^2 - k)/(k - 1)") == KappaRational::variable());

    // Denominator normalization: positive leading coefficient, integer
    // primitive content.
    KappaRational c(KappaPoly(1), KappaPoly(-2) * k + KappaPoly(1));
    CHECK(c.den().leading() == BigRational(2));
    CHECK(c.num().constant_term() == BigRational(-1));
    CHECK(c.den().constant_term() == BigRational(-1));
}

TEST_CASE("specialization commutes with arithmetic") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        KappaRational a = testing::rand_kappa_rational(rng);
        KappaRational b = testing::rand_kappa_rational(rng);
        BigRational q = testing::rand_rational(rng);
        try {
            BigRational av = eval_at(a, q), bv = eval_at(b, q);
            CHECK(eval_at(a + b, q) == av + bv);
            CHECK(eval_at(a - b, q) == av - bv);
            CHECK(eval_at(a * b, q) == av * bv);
            if (!bv.is_zero()) CHECK(eval_at(a / b, q) == av / bv);
        } catch (const DomainError& e) {
            CHECK(e.code() == ErrorCode::PoleAtKappa);
        }
    }
}

TEST_CASE("rational string round trip") {
    CHECK(BigRational::from_string("-22/7").str() == "-22/7");
    CHECK(BigRational::from_string("4/2") == BigRational(2));
    CHECK(BigRational(6, -4).str() == "-3/2");
    CHECK_THROWS_AS(BigRational::from_string("1/0"), DomainError);
}
