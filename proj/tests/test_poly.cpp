#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plurikit/json_io.hpp"
#include "test_util.hpp"

using namespace plurikit;

namespace {
const Ambient amb2{2};
const Ambient amb3{3};
Poly P2(const std::string& s) { return parse_poly(s, amb2); }
}  // namespace

TEST_CASE("product examples") {
    CHECK(P2("t12") * P2("t21") == P2("t12*t21"));
    CHECK(P2("1 + t11") * P2("1 - t11") == P2("1 - t11^2"));
    CHECK(P2("k*t12") * P2("t12/k") == P2("t12^2"));
}

TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(P2("t12") * parse_poly("t12", amb3), DomainError);
    try {
        P2("t12") + parse_poly("t12", amb3);
    } catch (const DomainError& e) {
        CHECK(e.code() == ErrorCode::AmbientMismatch);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(P2("t12^2*t21").partial(VarId::t(1, 2)) == P2("2*t12*t21"));
    CHECK(P2("t12").partial(VarId::t(1, 1)).is_zero());
    Ambient s_amb{};
    Poly f = parse_poly("s1*s2^2", s_amb);
    CHECK(f.partial(VarId::s(2)) == parse_poly("2*s1*s2", s_amb));
}

TEST_CASE("partials commute") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = testing::rand_t_poly(rng, 3, 4, 6);
        VarId u = VarId::t(1 + trial % 3, 1 + (trial / 3) % 3);
        VarId v = VarId::t(1 + (trial / 2) % 3, 1 + trial % 3);
        CHECK(p.partial(u).partial(v) == p.partial(v).partial(u));
    }
}

TEST_CASE("leibniz rule") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = testing::rand_t_poly(rng, 2, 3, 5);
        Poly q = testing::rand_t_poly(rng, 2, 3, 5);
        VarId v = VarId::t(1 + trial % 2, 1 + (trial / 2) % 2);
        CHECK((p * q).partial(v) == p.partial(v) * q + p * q.partial(v));
    }
}

TEST_CASE("bidegree split") {
    auto split = P2("t12*t21").bidegree_split();
    REQUIRE(split.size() == 1);
    CHECK(split.begin()->first == Bidegree{{1, 1}, {1, 1}});

    auto two = P2("t12 + t11").bidegree_split();
    REQUIRE(two.size() == 2);
    CHECK(two.count(Bidegree{{1, 0}, {0, 1}}) == 1);
    CHECK(two.count(Bidegree{{1, 0}, {1, 0}}) == 1);
    CHECK(two.at(Bidegree{{1, 0}, {0, 1}}) == P2("t12"));

    auto c = P2("1").bidegree_split();
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == Bidegree{{0, 0}, {0, 0}});

    Poly mixed = parse_poly("x12", amb2);
    CHECK_THROWS_AS(mixed.bidegree_split(), DomainError);
}

TEST_CASE("bidegree components are homogeneous under diagonal scaling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = testing::rand_t_poly(rng, 2, 3, 6);
        std::vector<BigRational> lam{testing::rand_rational(rng, 1, 5),
                                     testing::rand_rational(rng, 1, 5)};
        std::vector<BigRational> mu{testing::rand_rational(rng, 1, 5),
                                    testing::rand_rational(rng, 1, 5)};
        std::map<VarId, Poly> scale;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                scale.emplace(VarId::t(i, j),
                              Poly::var(VarId::t(i, j), amb2)
                                  .scaled(KappaRational(lam[i - 1] * mu[j - 1])));
        for (const auto& [bd, comp] : p.bidegree_split()) {
            KappaRational factor(1);
            for (int i = 0; i < 2; ++i) {
                for (int r = 0; r < bd.a[i]; ++r) factor *= KappaRational(lam[i]);
                for (int r = 0; r < bd.b[i]; ++r) factor *= KappaRational(mu[i]);
            }
            CHECK(comp.substitute(scale) == comp.scaled(factor));
        }
    }
}

TEST_CASE("substitution") {
    // Single-column substitution t11 -> x11 y11 (y realized by the w family).
    Ambient wide{2};
    wide.kappa_cols = 1;
    std::map<VarId, Poly> assign;
    assign.emplace(VarId::t(1, 1),
                   Poly::var(VarId::x(1, 1), wide) * Poly::var(VarId::w(1, 1), wide));
    CHECK(P2("t11").substitute(assign, wide) == parse_poly("x11*w11", wide));

    std::map<VarId, Poly> zero;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) zero.emplace(VarId::t(i, j), Poly(amb2));
    CHECK(P2("t12*t21").substitute(zero).is_zero());

    // s1 -> sigma_1 for n = 2 (diagonal-free X): s1^2 maps to the square.
    Ambient s_amb{};
    Poly s1sq = parse_poly("s1^2", s_amb);
    std::map<VarId, Poly> sig;
    sig.emplace(VarId::s(1), P2("t12*x12 + t21*x21"));
    CHECK(s1sq.substitute(sig, amb2) == P2("(t12*x12 + t21*x21)^2"));
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = testing::rand_t_poly(rng, 2, 3, 4);
        Poly q = testing::rand_t_poly(rng, 2, 3, 4);
        std::map<VarId, Poly> assign;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                assign.emplace(VarId::t(i, j), testing::rand_t_poly(rng, 2, 2, 3));
        CHECK((p * q).substitute(assign) == p.substitute(assign) * q.substitute(assign));
        CHECK((p + q).substitute(assign) == p.substitute(assign) + q.substitute(assign));
    }
}

TEST_CASE("extract coefficient") {
    Poly p = P2("t12*x12 + t21*x21");
    CHECK(p.extract_coefficient(VarFamily::X, Monomial::var(VarId::x(1, 2))) == P2("t12"));
    CHECK(P2("1").extract_coefficient(VarFamily::X, Monomial::var(VarId::x(1, 2))).is_zero());
    CHECK(p.extract_coefficient(VarFamily::X, Monomial()) == Poly(amb2));
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = testing::rand_t_poly(rng, 3, 4, 6);
        CHECK(poly_from_json(to_json(p)) == p);
    }
    Poly q = parse_poly("(1/2)*s1^2 - k*s3", Ambient{});
    CHECK(poly_from_json(to_json(q)) == q);

    KappaRational f = parse_kappa("(k^2-2)/(3*k-1)");
    CHECK(kappa_rational_from_json(to_json(f)) == f);
}

TEST_CASE("printer is stable and parseable") {
    Poly p = P2("t12*t21 - t11*t22/k");
    CHECK(parse_poly(p.str(), amb2) == p);
    CHECK(P2("0").str() == "0");
}
