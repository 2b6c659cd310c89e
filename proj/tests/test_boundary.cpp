#include "doctest.h"

#include <random>

#include "slq/boundary.hpp"

using namespace slq;

TEST_CASE("pencil singular-member counts") {
    CHECK(pencil_singular_count(18, 4, 4) == 34);   // (3,3) pencil on P1 x P1
    CHECK(pencil_singular_count(0, 0, 4) == 0);     // pencil of lines on a quadric
    CHECK(pencil_singular_count(9, 1, 3) == 12);    // pencil of plane cubics
}

TEST_CASE("stratum codimensions") {
    CHECK(stratum_codimension(Stratum::Z0) == 1);
    CHECK(stratum_codimension(Stratum::Z2) == 1);
    CHECK(stratum_codimension(Stratum::Z4) == 1);
    CHECK(stratum_codimension(Stratum::Z33) == 1);
    CHECK(stratum_codimension(Stratum::Z11) == 3);
    CHECK(stratum_codimension(Stratum::Z13) == 2);
    CHECK(stratum_codimension(Stratum::Interior) == 0);
}

TEST_CASE("test-curve matrix entries and symbolic invertibility") {
    TestCurveMatrix m = testcurve_matrix();
    CHECK(m.entries[0][0] == MatrixEntry::known(Rat(34)));
    CHECK(m.entries[0][1] == MatrixEntry::known(Rat(0)));
    CHECK(m.entries[0][2] == MatrixEntry::known(Rat(0)));
    CHECK(m.entries[1][0].kind == MatrixEntry::Kind::Unknown);
    CHECK(m.entries[1][1].kind == MatrixEntry::Kind::NonzeroUnknown);
    CHECK(m.entries[1][2].kind == MatrixEntry::Kind::Unknown);
    CHECK(m.entries[2][0] == MatrixEntry::known(Rat(0)));
    CHECK(m.entries[2][1] == MatrixEntry::known(Rat(0)));
    CHECK(m.entries[2][2] == MatrixEntry::known(Rat(-1)));

    CHECK(m.determinant().kind == MatrixEntry::Kind::NonzeroUnknown);
    CHECK(m.certainly_invertible());
}

TEST_CASE("the symbolic determinant is honest on random substitutions") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> any(-20, 20);
    std::uniform_int_distribution<long long> nonzero_mag(1, 20);
    TestCurveMatrix m = testcurve_matrix();
    for (int trial = 0; trial < 200; ++trial) {
        Rat det(0);
        std::array<std::array<Rat, 3>, 3> sub;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const MatrixEntry& e = m.entries[i][j];
                if (e.kind == MatrixEntry::Kind::Known) sub[i][j] = e.value;
                else if (e.kind == MatrixEntry::Kind::Unknown) sub[i][j] = Rat(any(rng));
                else {
                    long long v = nonzero_mag(rng);
                    sub[i][j] = Rat(any(rng) >= 0 ? v : -v);
                }
            }
        det = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
              sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
              sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        CHECK(!det.is_zero());
    }
}

TEST_CASE("symbolic entry arithmetic") {
    MatrixEntry zero = MatrixEntry::known(Rat(0));
    MatrixEntry two = MatrixEntry::known(Rat(2));
    MatrixEntry star = MatrixEntry::nonzero();
    MatrixEntry unk = MatrixEntry::unknown();

    CHECK((zero * star) == zero);
    CHECK((two * star).kind == MatrixEntry::Kind::NonzeroUnknown);
    CHECK((star * star).kind == MatrixEntry::Kind::NonzeroUnknown);
    CHECK((star * unk).kind == MatrixEntry::Kind::Unknown);
    CHECK((star + zero).kind == MatrixEntry::Kind::NonzeroUnknown);
    CHECK((star + two).kind == MatrixEntry::Kind::Unknown);  // could cancel
    CHECK((two + two) == MatrixEntry::known(Rat(4)));
}

TEST_CASE("chain polytope vertices") {
    ChainPolytope p = chain_polytope();
    REQUIRE(p.first.size() == 4);
    REQUIRE(p.second.size() == 4);
    // Lattice width 6 in the first coordinate on each quadrilateral.
    for (const auto& quad : {p.first, p.second}) {
        long long lo = quad[0][0], hi = quad[0][0];
        for (const auto& v : quad) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        CHECK(hi - lo == 6);
    }
    // Shared edge between (-3,-1) and (3,1).
    CHECK(p.shared_edge == std::array<std::array<long long, 2>, 2>{{{-3, -1}, {3, 1}}});
    auto contains = [](const std::vector<std::array<long long, 2>>& quad,
                       std::array<long long, 2> v) {
        return std::find(quad.begin(), quad.end(), v) != quad.end();
    };
    CHECK(contains(p.first, {-3, -1}));
    CHECK(contains(p.first, {3, 1}));
    CHECK(contains(p.second, {-3, -1}));
    CHECK(contains(p.second, {3, 1}));
}
