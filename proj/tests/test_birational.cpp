#include "doctest.h"

#include <random>

#include "slq/blowup.hpp"
#include "slq/error.hpp"
#include "slq/pair.hpp"

using namespace slq;

namespace {

DivisorClass combo(std::initializer_list<std::pair<Label, Rat>> terms) {
    DivisorClass d;
    for (const auto& [l, c] : terms) d.add(l, c);
    return d;
}

// F4 with D = sigma + H, H of class 2 sigma + 9F, all three through p.
LogPair f4_hyperelliptic() {
    CurveConfig cfg;
    cfg.id = "X";
    cfg.add_curve({"sigma", Rat(-4), 0, {Role::Directrix, Role::Section, Role::InDivisorD}});
    cfg.add_curve({"H", Rat(20), 4, {Role::InDivisorD}});
    cfg.add_curve({"F", Rat(0), 0, {Role::Fiber}});
    cfg.set_product("sigma", "H", Rat(1));
    cfg.set_product("sigma", "F", Rat(1));
    cfg.set_product("H", "F", Rat(2));
    cfg.picard_rank = 2;
    cfg.k_class = combo({{"sigma", Rat(-2)}, {"F", Rat(-6)}});
    cfg.d_class = combo({{"sigma", Rat(1)}, {"H", Rat(1)}});
    LogPair pair;
    pair.components.push_back(cfg);
    pair.points.push_back({"p", "X", {"F", "H", "sigma"}, {}});
    return pair;
}

Rat kk(const CurveConfig& cfg) { return cfg.intersect(cfg.k_class, cfg.k_class); }

}  // namespace

TEST_CASE("blow up the triple point of the F4 pair") {
    LogPair pair = f4_hyperelliptic();
    CHECK(validate_pair(pair).empty());
    CHECK(kk(pair.components[0]) == Rat(8));

    BlowupRequest req;
    req.component_id = "X";
    req.incidence = {{"sigma", 1}, {"H", 1}, {"F", 1}};
    req.divisor_mult = 2;
    req.new_label = "E1";
    LogPair up = blow_up(pair, req);
    const CurveConfig& cfg = up.components[0];

    CHECK(cfg.curve("sigma").self_int == Rat(-5));
    CHECK(cfg.curve("E1").self_int == Rat(-1));
    CHECK(cfg.curve("F").self_int == Rat(-1));
    CHECK(cfg.curve("H").self_int == Rat(19));
    CHECK(cfg.product("sigma", "H") == Rat(0));
    CHECK(cfg.product("sigma", "F") == Rat(0));
    CHECK(cfg.product("H", "F") == Rat(1));
    CHECK(cfg.product("E1", "sigma") == Rat(1));
    CHECK(cfg.product("E1", "H") == Rat(1));
    CHECK(cfg.product("E1", "F") == Rat(1));
    CHECK(cfg.picard_rank == 3);
    CHECK(cfg.d_class == combo({{"sigma", Rat(1)}, {"H", Rat(1)}}));
    CHECK(cfg.k_class == combo({{"sigma", Rat(-2)}, {"F", Rat(-6)}, {"E1", Rat(-7)}}));
    CHECK(kk(cfg) == Rat(7));  // K.K drops by exactly 1

    SUBCASE("second blow-up at E1 meet H") {
        BlowupRequest req2{"X", {{"E1", 1}, {"H", 1}}, 1, "E2"};
        LogPair up2 = blow_up(up, req2);
        const CurveConfig& c2 = up2.components[0];
        CHECK(c2.curve("E1").self_int == Rat(-2));
        CHECK(c2.curve("E2").self_int == Rat(-1));
        CHECK(c2.curve("H").self_int == Rat(18));
        CHECK(c2.product("E1", "H") == Rat(0));
        CHECK(c2.product("E2", "H") == Rat(1));
        CHECK(c2.product("E2", "E1") == Rat(1));
        CHECK(kk(c2) == Rat(6));
    }
}

TEST_CASE("blow up a point incident to no tracked curve") {
    LogPair pair = f4_hyperelliptic();
    BlowupRequest req{"X", {}, 0, "E"};
    LogPair up = blow_up(pair, req);
    const CurveConfig& cfg = up.components[0];
    CHECK(cfg.curve("sigma").self_int == Rat(-4));
    CHECK(cfg.curve("H").self_int == Rat(20));
    CHECK(cfg.curve("E").self_int == Rat(-1));
    CHECK(cfg.product("E", "sigma") == Rat(0));
    CHECK(kk(cfg) == Rat(7));
}

TEST_CASE("blow up errors") {
    LogPair pair = f4_hyperelliptic();
    BlowupRequest missing{"X", {{"nope", 1}}, 0, "E"};
    CHECK_THROWS_AS(blow_up(pair, missing), Error);

    // sigma.F = 1 cannot support a center of multiplicity 2 on both.
    BlowupRequest tangent{"X", {{"sigma", 2}, {"F", 2}}, 0, "E"};
    try {
        blow_up(pair, tangent);
        FAIL("expected InconsistentIncidence");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentIncidence);
    }

    BlowupRequest dup{"X", {}, 0, "sigma"};
    CHECK_THROWS_AS(blow_up(pair, dup), Error);
}

TEST_CASE("blow up then blow down is the identity") {
    LogPair pair = f4_hyperelliptic();
    BlowupRequest req{"X", {{"sigma", 1}, {"H", 1}, {"F", 1}}, 2, "E1"};
    LogPair round = blow_down(blow_up(pair, req), "X", "E1");
    CHECK(round.components == pair.components);
    CHECK(round.gluings == pair.gluings);

    // Same with a disjoint center and with divisor multiplicity 0.
    BlowupRequest disjoint{"X", {}, 0, "E"};
    CHECK(blow_down(blow_up(pair, disjoint), "X", "E").components == pair.components);
    BlowupRequest total{"X", {{"F", 1}}, 0, "E"};
    CHECK(blow_down(blow_up(pair, total), "X", "E").components == pair.components);
}

TEST_CASE("blow down rejects curves that are not exceptional") {
    LogPair pair = f4_hyperelliptic();
    try {
        blow_down(pair, "X", "sigma");  // a (-4)-curve
        FAIL("expected NotMinusOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMinusOne);
    }
}

TEST_CASE("contraction of the (sigma, E1) chain reproduces the X' table") {
    LogPair pair = f4_hyperelliptic();
    pair = blow_up(pair, {"X", {{"sigma", 1}, {"H", 1}, {"F", 1}}, 2, "E1"});
    pair = blow_up(pair, {"X", {{"E1", 1}, {"H", 1}}, 1, "E2"});

    auto [out, record] = contract_chain(pair, "X", {"sigma", "E1"});
    const CurveConfig& cfg = out.components[0];

    CHECK(record.result_singularity == QuotientSingularity(9, 2));
    CHECK(record.pullback_coeffs.at({"E2", "sigma"}) == Rat(1, 9));
    CHECK(record.pullback_coeffs.at({"E2", "E1"}) == Rat(5, 9));
    CHECK(record.pullback_coeffs.at({"F", "sigma"}) == Rat(1, 9));
    CHECK(record.pullback_coeffs.at({"F", "E1"}) == Rat(5, 9));

    CHECK(cfg.curve("E2").self_int == Rat(-4, 9));
    CHECK(cfg.curve("F").self_int == Rat(-4, 9));
    CHECK(cfg.product("E2", "F") == Rat(5, 9));
    CHECK(cfg.intersect(cfg.k_class, DivisorClass::single("E2")) == Rat(-2, 3));
    CHECK(cfg.intersect(cfg.k_class, DivisorClass::single("F")) == Rat(-2, 3));
    CHECK(cfg.intersect(cfg.d_class, DivisorClass::single("E2")) == Rat(1));
    CHECK(cfg.intersect(cfg.d_class, DivisorClass::single("F")) == Rat(1));
    CHECK(cfg.picard_rank == 2);
    REQUIRE(cfg.singularities.size() == 1);
    CHECK(cfg.singularities[0].type == QuotientSingularity(9, 2));
    CHECK(cfg.singularities[0].incident == std::vector<Label>{"E2", "F"});
    CHECK_FALSE(cfg.singularities[0].divisor_through);
    CHECK(validate_pair(out).empty());

    // Pull-back orthogonality holds for every remaining curve.
    for (const auto& [key, c] : record.pullback_coeffs) (void)key, (void)c;
    for (const Label& gamma : {Label("E2"), Label("F"), Label("H")}) {
        const CurveConfig& before = pair.components[0];
        DivisorClass pulled = DivisorClass::single(gamma);
        for (const Label& e : {Label("sigma"), Label("E1")}) {
            auto it = record.pullback_coeffs.find({gamma, e});
            if (it != record.pullback_coeffs.end()) pulled.add(e, it->second);
        }
        for (const Label& e : {Label("sigma"), Label("E1")})
            CHECK(before.intersect(pulled, DivisorClass::single(e)) == Rat(0));
    }
}

TEST_CASE("contract chain preconditions") {
    LogPair pair = f4_hyperelliptic();
    pair = blow_up(pair, {"X", {{"sigma", 1}, {"H", 1}, {"F", 1}}, 2, "E1"});

    // A (-1)-curve is not an admissible chain entry.
    try {
        contract_chain(pair, "X", {"E1"});
        FAIL("expected NotContractibleChain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotContractibleChain);
    }
    // Disconnected "chain".
    CHECK_THROWS_AS(contract_chain(pair, "X", {"sigma", "F"}).first, Error);
}

TEST_CASE("random blow-up towers invert exactly") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        LogPair pair = f4_hyperelliptic();
        Rat kk_start = kk(pair.components[0]);
        std::vector<Label> tower;
        std::uniform_int_distribution<int> height(1, 5);
        int steps = height(rng);
        for (int i = 0; i < steps; ++i) {
            const CurveConfig& cfg = pair.components[0];
            // Pick a center: either a random tracked curve or a point off
            // the tracked locus.
            std::uniform_int_distribution<size_t> pick(0, cfg.curves.size());
            size_t at = pick(rng);
            BlowupRequest req;
            req.component_id = "X";
            req.new_label = "T" + std::to_string(i);
            if (at < cfg.curves.size()) req.incidence[cfg.curves[at].label] = 1;
            pair = blow_up(pair, req);
            tower.push_back(req.new_label);
        }
        CHECK(kk(pair.components[0]) == kk_start - Rat(steps));
        for (auto it = tower.rbegin(); it != tower.rend(); ++it)
            pair = blow_down(pair, "X", *it);
        CHECK(pair.components == f4_hyperelliptic().components);
    }
}

TEST_CASE("conservation is preserved by contraction and blow-down") {
    LogPair pair = f4_hyperelliptic();
    pair = blow_up(pair, {"X", {{"sigma", 1}, {"H", 1}, {"F", 1}}, 2, "E1"});
    pair = blow_up(pair, {"X", {{"E1", 1}, {"H", 1}}, 1, "E2"});
    // The blown-up surface itself does not satisfy the conservation law (the
    // class 3K + 2D picks up exceptional terms); contraction restores it.
    auto [out, record] = contract_chain(pair, "X", {"sigma", "E1"});
    (void)record;
    CHECK(validate_pair(out).empty());
}
