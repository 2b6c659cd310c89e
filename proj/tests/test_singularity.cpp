#include "doctest.h"

#include "slq/blowup.hpp"
#include "slq/error.hpp"
#include "slq/singularity.hpp"

using namespace slq;

TEST_CASE("weights are normalized to min(q, q^-1 mod n)") {
    CHECK(QuotientSingularity(9, 5) == QuotientSingularity(9, 2));
    CHECK(QuotientSingularity(9, 2).weight() == 2);
    CHECK(QuotientSingularity(3, 2) == QuotientSingularity::a_type(2));
    CHECK(QuotientSingularity(3, 1).str() == "1/3(1,1)");
    CHECK(QuotientSingularity(9, 2).str() == "1/9(1,2)");
    CHECK(QuotientSingularity::a_type(1).str() == "A1");
    CHECK(QuotientSingularity::a_type(4).str() == "A4");
    CHECK(QuotientSingularity(5, 2).a_index() == 0);
}

TEST_CASE("singularity parsing") {
    CHECK(parse_singularity("A2") == QuotientSingularity(3, 2));
    CHECK(parse_singularity("1/9(1,2)") == QuotientSingularity(9, 2));
    CHECK(parse_singularity("1/9(1,5)") == QuotientSingularity(9, 2));
    CHECK_THROWS_AS(parse_singularity("A0"), Error);
    CHECK_THROWS_AS(parse_singularity("junk"), Error);
}

TEST_CASE("hirzebruch-jung chains") {
    CHECK(hj_chain_to_singularity({-5, -2}) == QuotientSingularity(9, 2));
    CHECK(hj_chain_to_singularity({-2, -5}) == QuotientSingularity(9, 2));
    CHECK(hj_chain_to_singularity({-2}) == QuotientSingularity::a_type(1));
    CHECK(hj_chain_to_singularity({-2, -2}) == QuotientSingularity::a_type(2));
    CHECK(hj_chain_to_singularity({-3}) == QuotientSingularity(3, 1));
    CHECK_THROWS_AS(hj_chain_to_singularity({-1}), Error);
    CHECK_THROWS_AS(hj_chain_to_singularity({-2, -1, -2}), Error);
    CHECK_THROWS_AS(hj_chain_to_singularity({}), Error);
}

// Independent oracle: evaluate the continued fraction a1 - 1/(a2 - ...) as a
// Rat and read off the reduced numerator/denominator.
static QuotientSingularity hj_oracle(const std::vector<long long>& selfs) {
    Rat x(-selfs.back());
    for (auto it = selfs.rbegin() + 1; it != selfs.rend(); ++it)
        x = Rat(-*it) - Rat(1) / x;
    return {x.numerator().convert_to<long long>(), x.denominator().convert_to<long long>()};
}

TEST_CASE("chains of (-2)s give A_k, against the continued-fraction oracle") {
    for (long long k = 1; k <= 6; ++k) {
        std::vector<long long> chain(k, -2);
        CHECK(hj_chain_to_singularity(chain) == QuotientSingularity::a_type(k));
        CHECK(hj_chain_to_singularity(chain) == hj_oracle(chain));
    }
    for (auto& chain : std::vector<std::vector<long long>>{
             {-5, -2}, {-3, -3}, {-2, -3, -2}, {-4}, {-7, -2, -2}, {-2, -2, -3, -2}}) {
        CHECK(hj_chain_to_singularity(chain) == hj_oracle(chain));
    }
}

TEST_CASE("glued non-normal-crossing records") {
    GluedPoint p{"p", 3, {1, 2, 1}, "X2", "X1"};
    CHECK(p.branch_x_type() == QuotientSingularity::a_type(2));
    CHECK(p.branch_y_type() == QuotientSingularity(3, 1));
    CHECK(p.str() == "(xy=0) in 1/3(1,2,1)");

    GluedPoint q = p.swapped();
    CHECK(q.weights == std::array<long long, 3>{2, 1, 1});
    CHECK(q.branch_x == "X1");
    CHECK(q.branch_x_type() == QuotientSingularity(3, 1));
    CHECK(q.branch_y_type() == QuotientSingularity::a_type(2));
    CHECK(p.same_as(q));
    CHECK(q.str() == "(xy=0) in 1/3(2,1,1)");

    GluedPoint other{"r", 3, {1, 2, 1}, "X1", "X2"};
    CHECK_FALSE(p.same_as(other));  // branches on swapped components
}
