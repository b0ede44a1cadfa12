#include <catch2/catch_amalgamated.hpp>

#include "grc/gf.hpp"

using namespace grc;

TEST_CASE("field construction picks the deterministic modulus") {
    Fq f2(2, 1);
    REQUIRE(f2.size() == 2);
    REQUIRE(f2.modulus() == std::vector<int>{0, 1});

    Fq f4(2, 2);
    REQUIRE(f4.size() == 4);
    REQUIRE(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

    Fq f3(3, 1);
    REQUIRE(f3.size() == 3);

    REQUIRE_THROWS_AS(Fq(4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(Fq(2, 0), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    Fq f5(5, 1);
    REQUIRE(f5.from_code(2).inverse() == f5.from_code(3));
    REQUIRE(f5.from_code(2) * f5.from_code(4) == f5.from_code(3));
    REQUIRE((f5.from_code(2) + f5.from_code(4)) == f5.from_code(1));
}

TEST_CASE("extension field arithmetic reduces by the modulus") {
    Fq f4(2, 2);
    const FqElem x = f4.from_code(2);  // coefficients (0, 1)
    REQUIRE(x * x == f4.from_code(3));  // x^2 = x + 1
    REQUIRE(x.pow(3) == f4.one());
}

TEST_CASE("a^q = a exhaustively for q <= 16") {
    for (auto [p, e] : std::vector<std::pair<long, int>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        Fq f(p, e);
        for (long c = 0; c < f.size(); ++c) {
            const FqElem a = f.from_code(c);
            REQUIRE(a.pow(f.size()) == a);
        }
    }
}

TEST_CASE("nonzero powers satisfy Fermat and double inversion") {
    for (auto [p, e] : std::vector<std::pair<long, int>>{{3, 1}, {2, 2}, {3, 2}, {2, 4}}) {
        Fq f(p, e);
        for (long c = 1; c < f.size(); ++c) {
            const FqElem a = f.from_code(c);
            REQUIRE(a.pow(f.size() - 1) == f.one());
            REQUIRE(a.inverse().inverse() == a);
            REQUIRE(a.pow(-1) == a.inverse());
        }
    }
}

TEST_CASE("field automorphisms are the Frobenius powers") {
    Fq f2(2, 1);
    REQUIRE(field_automorphisms(f2).size() == 1);

    Fq f4(2, 2);
    auto auts = field_automorphisms(f4);
    REQUIRE(auts.size() == 2);
    REQUIRE(auts[0].is_identity());
    const FqElem x = f4.from_code(2);
    REQUIRE(auts[1](x) == x * x);

    Fq f9(3, 2);
    REQUIRE(field_automorphisms(f9).size() == 2);
}

TEST_CASE("automorphisms respect the field structure, exhaustively") {
    for (auto [p, e] : std::vector<std::pair<long, int>>{{2, 2}, {3, 2}, {2, 4}, {2, 3}}) {
        Fq f(p, e);
        auto auts = field_automorphisms(f);
        // frobenius^e is the identity
        FieldAut frob{1};
        FieldAut acc{0};
        for (int i = 0; i < e; ++i) acc = acc.compose(frob, e);
        REQUIRE(acc.is_identity());
        for (const FieldAut& mu : auts)
            for (long a = 0; a < f.size(); ++a)
                for (long b = 0; b < f.size(); ++b) {
                    const FqElem xa = f.from_code(a), xb = f.from_code(b);
                    REQUIRE(mu(xa + xb) == mu(xa) + mu(xb));
                    REQUIRE(mu(xa * xb) == mu(xa) * mu(xb));
                }
    }
}

TEST_CASE("element serialization") {
    Fq f3(3, 1);
    REQUIRE(f3.from_code(2).to_string() == "2");
    Fq f4(2, 2);
    REQUIRE(f4.from_code(3).to_string() == "[1,1]");
}

TEST_CASE("zero inversion and field mismatch are rejected") {
    Fq f3(3, 1), f5(5, 1);
    REQUIRE_THROWS_AS(f3.zero().inverse(), std::domain_error);
    REQUIRE_THROWS_AS(f3.one() + f5.one(), std::invalid_argument);
}
