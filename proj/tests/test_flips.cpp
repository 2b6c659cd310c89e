#include "doctest.h"

#include "slq/error.hpp"
#include "slq/flip.hpp"

using namespace slq;

namespace {

DivisorClass combo(std::initializer_list<std::pair<Label, Rat>> terms) {
    DivisorClass d;
    for (const auto& [l, c] : terms) d.add(l, c);
    return d;
}

// F4 with D = sigma + H, H ~ 2 sigma + 9F; the hyperelliptic branch is
// unramified at p unless `ramified` raises the contact of H and the fiber.
LogPair f4_pair(bool ramified = false) {
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
    MarkedPoint p{"p", "X", {"F", "H", "sigma"}, {}};
    if (ramified) p.tangencies.push_back({"F", "H", 2});
    pair.points.push_back(p);
    pair.case_tag = "hyperelliptic";
    return pair;
}

// Two components of the F3-F3 configuration glued along a fiber F. Only the
// curves relevant to the flip of sigma1 are tracked.
LogPair f3f3_pair() {
    LogPair pair;
    for (int i = 1; i <= 2; ++i) {
        std::string id = "X" + std::to_string(i);
        std::string sigma = "sigma" + std::to_string(i);
        std::string h = "H" + std::to_string(i);
        CurveConfig cfg;
        cfg.id = id;
        cfg.add_curve({sigma, Rat(-3), 0, {Role::Directrix, Role::Section, Role::InDivisorD}});
        cfg.add_curve({h, Rat(12), 2, {Role::InDivisorD}});
        cfg.add_curve({"F", Rat(0), 0, {Role::Fiber, Role::DoubleCurve}});
        cfg.set_product(sigma, "F", Rat(1));
        cfg.set_product(h, "F", Rat(2));
        cfg.set_product(sigma, h, Rat(0));
        cfg.picard_rank = 2;
        cfg.k_class = combo({{sigma, Rat(-2)}, {"F", Rat(-5)}});
        cfg.d_class = combo({{sigma, Rat(1)}, {h, Rat(1)}});
        pair.components.push_back(cfg);
    }
    pair.gluings.push_back({"X1", "F", "X2", "F"});
    // sigma1 crosses the double curve where H2 does, and vice versa.
    pair.points.push_back({"p1", "X1", {"F", "sigma1"}, {}});
    pair.points.push_back({"p1", "X2", {"F", "H2"}, {}});
    pair.points.push_back({"p2", "X2", {"F", "sigma2"}, {}});
    pair.points.push_back({"p2", "X1", {"F", "H1"}, {}});
    pair.case_tag = "f3f3";
    return pair;
}

// S = F4-like carrier of the divisor branch and T = F2 with the (-2)
// section in D: the first topple of the staged pipeline.
LogPair topple_pair() {
    LogPair pair;
    CurveConfig s;
    s.id = "S";
    s.add_curve({"B", Rat(-4), 0, {Role::Directrix, Role::Section, Role::DoubleCurve}});
    s.add_curve({"C", Rat(0), 0, {Role::Fiber, Role::InDivisorD}});
    s.set_product("B", "C", Rat(1));
    s.picard_rank = 2;
    s.k_class = combo({{"B", Rat(-2)}, {"C", Rat(-6)}});
    s.d_class = combo({{"C", Rat(1)}});
    pair.components.push_back(s);

    CurveConfig t;
    t.id = "T";
    t.add_curve({"B", Rat(4), 0, {Role::Section, Role::DoubleCurve}});
    t.add_curve({"s_end", Rat(-2), 0, {Role::Directrix, Role::Section, Role::InDivisorD}});
    t.set_product("B", "s_end", Rat(1));
    t.picard_rank = 2;
    t.k_class = combo({{"s_end", Rat(-2, 3)}, {"B", Rat(-4, 3)}});
    t.d_class = combo({{"s_end", Rat(1)}});
    pair.components.push_back(t);

    pair.gluings.push_back({"S", "B", "T", "B"});
    pair.points.push_back({"p", "S", {"B", "C"}, {}});
    pair.points.push_back({"p", "T", {"B", "s_end"}, {}});
    return pair;
}

}  // namespace

TEST_CASE("type I flip on the unramified hyperelliptic pair") {
    FlipInput input{f4_pair(), "sigma", FlipKind::TypeI, 0};
    FlipResult r = type1_flip(input);
    const CurveConfig& cfg = r.pair.components[0];

    CHECK(cfg.curve("E2").self_int == Rat(-4, 9));
    CHECK(cfg.curve("F").self_int == Rat(-4, 9));
    CHECK(cfg.product("E2", "F") == Rat(5, 9));
    CHECK(cfg.intersect(cfg.k_class, DivisorClass::single("E2")) == Rat(-2, 3));
    CHECK(cfg.intersect(cfg.k_class, DivisorClass::single("F")) == Rat(-2, 3));
    CHECK(cfg.d_class == combo({{"H", Rat(1)}}));
    CHECK(cfg.intersect(cfg.d_class, DivisorClass::single("E2")) == Rat(1));
    CHECK(cfg.intersect(cfg.d_class, DivisorClass::single("F")) == Rat(1));
    CHECK(cfg.picard_rank == 2);
    REQUIRE(cfg.singularities.size() == 1);
    CHECK(cfg.singularities[0].type == QuotientSingularity(9, 2));
    CHECK_FALSE(cfg.singularities[0].divisor_through);
    // C'^2 = C^2 - 2 for the residual hyperelliptic curve.
    CHECK(cfg.curve("H").self_int == Rat(18));
    // (K + w D) is eps on both extremal rays.
    CHECK(r.pair.log_degree("X", "E2") == EpsLinear(Rat(0), Rat(1)));
    CHECK(r.pair.log_degree("X", "F") == EpsLinear(Rat(0), Rat(1)));
    CHECK(validate_pair(r.pair).empty());
}

TEST_CASE("type I flip rejects a (-3)-curve") {
    LogPair pair = f4_pair();
    pair.components[0].curve("sigma").self_int = Rat(-3);
    FlipInput input{pair, "sigma", FlipKind::TypeI, 0};
    CHECK_THROWS_WITH_AS(type1_flip(input), doctest::Contains("self-intersection -4 required"),
                         Error);
}

TEST_CASE("replaying the log reproduces the flip output") {
    FlipInput input{f4_pair(true), "sigma", FlipKind::TypeI, 0};
    FlipResult r = type1_flip(input);
    CHECK(replay(input.pair, r.log) == r.pair);
}

TEST_CASE("ramified hyperelliptic branch drags the fiber into the second center") {
    FlipInput input{f4_pair(true), "sigma", FlipKind::TypeI, 0};
    FlipResult r = type1_flip(input);
    const CurveConfig& cfg = r.pair.components[0];
    // Dual graph: E2 meets both F (now a (-2)-curve) and H.
    CHECK(cfg.curve("F").self_int == Rat(-2));
    CHECK(cfg.product("E2", "F") == Rat(1));
    CHECK(cfg.product("E2", "H") == Rat(1));
    CHECK(cfg.product("F", "H") == Rat(0));
    CHECK(r.pair.log_degree("X", "F").is_zero());  // the ray contracted later
    CHECK(validate_pair(r.pair).empty());
}

TEST_CASE("topple deletes T and transforms S like a type I flip along B") {
    LogPair pair = topple_pair();
    FlipInput input{pair, "s_end", FlipKind::Topple, 0};
    FlipResult r = topple(input);

    CHECK(r.pair.components.size() == 1);
    const CurveConfig& cfg = r.pair.components[0];
    CHECK(cfg.id == "S");
    CHECK(cfg.picard_rank == 2);
    REQUIRE(cfg.singularities.size() == 1);
    CHECK(cfg.singularities[0].type == QuotientSingularity(9, 2));
    // C'^2 = C^2 - 2.
    CHECK(cfg.curve("C").self_int == Rat(-2));
    CHECK(r.pair.gluings.empty());
}

TEST_CASE("topple preconditions carry their clause") {
    LogPair pair = topple_pair();
    pair.components[0].curve("B").self_int = Rat(-3);
    FlipInput input{pair, "s_end", FlipKind::Topple, 0};
    CHECK_THROWS_WITH_AS(topple(input), doctest::Contains("(3)"), Error);

    pair = topple_pair();
    pair.components[1].picard_rank = 3;
    CHECK_THROWS_WITH_AS(topple(FlipInput{pair, "s_end", FlipKind::Topple, 0}),
                         doctest::Contains("(6)"), Error);
}

TEST_CASE("type II flip numbers on the F3-F3 configuration") {
    LogPair pair = f3f3_pair();
    FlipInput input{pair, "sigma1", FlipKind::TypeII, 0};
    FlipResult r = type2_flip(input);

    // S-role is X2 (it carries the divisor branch H2), T-role is X1.
    const CurveConfig& s = r.pair.component("X2");
    const CurveConfig& t = r.pair.component("X1");
    CHECK(s.curve("H2").self_int == Rat(9));      // C'^2 = C^2 - 3
    CHECK(s.curve("E3").self_int == Rat(-1, 3));  // nu^2
    CHECK(s.product("F", "E3") == Rat(1, 3));     // B'.nu
    CHECK(s.curve("F").self_int == Rat(-1, 3));   // (B'|S')^2 = 0 - 1/3
    CHECK(t.curve("F").self_int == Rat(1, 3));    // (B'|T')^2 = 0 + 1/3
    CHECK(s.picard_rank == 3);
    CHECK(t.picard_rank == 1);

    // One A2 on S, one 1/3(1,1) on T, fused in the glued record.
    REQUIRE(s.singularities.size() == 1);
    CHECK(s.singularities[0].type == QuotientSingularity::a_type(2));
    REQUIRE(t.singularities.size() == 1);
    CHECK(t.singularities[0].type == QuotientSingularity(3, 1));
    REQUIRE(r.pair.nc_points.size() == 1);
    const GluedPoint& g = r.pair.nc_points[0];
    CHECK(g.weights == std::array<long long, 3>{1, 2, 1});
    CHECK(g.branch_x == "X2");
    CHECK(g.branch_y == "X1");
    CHECK(g.branch_x_type() == QuotientSingularity::a_type(2));
    CHECK(g.branch_y_type() == QuotientSingularity(3, 1));
    CHECK(validate_pair(r.pair).empty());
    CHECK(replay(pair, r.log) == r.pair);
}

TEST_CASE("type II flip rejects a wrong self-intersection") {
    LogPair pair = f3f3_pair();
    pair.components[0].curve("sigma1").self_int = Rat(-2);
    CHECK_THROWS_WITH_AS(type2_flip(FlipInput{pair, "sigma1", FlipKind::TypeII, 0}),
                         doctest::Contains("self-intersection -3 required"), Error);
}

TEST_CASE("both type II flips yield the stable F3-F3 surface") {
    LogPair pair = f3f3_pair();
    FlipResult r1 = type2_flip(FlipInput{pair, "sigma1", FlipKind::TypeII, 0}, "E2");
    FlipResult r2 = type2_flip(FlipInput{r1.pair, "sigma2", FlipKind::TypeII, 0}, "E1");

    for (const std::string& id : {std::string("X1"), std::string("X2")}) {
        const CurveConfig& cfg = r2.pair.component(id);
        std::string e3 = id == "X1" ? "E13" : "E23";
        CHECK(cfg.curve(e3).self_int == Rat(-1, 3));
        CHECK(cfg.curve("F").self_int == Rat(0));  // -1/3 + 1/3 from the two flips
        CHECK(cfg.product(e3, "F") == Rat(1, 3));
        CHECK(cfg.picard_rank == 2);
        CHECK(r2.pair.log_degree(id, e3) == EpsLinear(Rat(0), Rat(1)));
        CHECK(r2.pair.log_degree(id, "F") == EpsLinear(Rat(0), Rat(1)));
    }
    CHECK(r2.pair.nc_points.size() == 2);
    CHECK(validate_pair(r2.pair).empty());
}

TEST_CASE("staged type I flips are independent of the staging parameter") {
    FlipResult direct = type1_flip(FlipInput{f4_pair(), "sigma", FlipKind::TypeI, 0});
    for (long long n = 0; n <= 3; ++n) {
        FlipResult staged = type1_staged(FlipInput{f4_pair(), "sigma", FlipKind::TypeI, n});
        CHECK(staged.pair == direct.pair);
    }
}

TEST_CASE("staged pipeline inserts F4 components and one F2") {
    // For n = 1 the stage-1 configuration is X + F4 + F2 with the divisor
    // leaving sigma and running through a fiber of the F4.
    FlipResult staged = type1_staged(FlipInput{f4_pair(), "sigma", FlipKind::TypeI, 1});
    bool saw_f4_insert = false, saw_f2_insert = false;
    for (const TransformStep& s : staged.log.steps) {
        if (s.op != "insert_component") continue;
        const CurveConfig& cfg = *s.insert_config;
        if (cfg.has_curve("b1") && cfg.curve("b1").self_int == Rat(-4) &&
            cfg.d_class.coeff("f1") == Rat(1))
            saw_f4_insert = true;
        if (cfg.has_curve("s_end") && cfg.curve("s_end").self_int == Rat(-2))
            saw_f2_insert = true;
    }
    CHECK(saw_f4_insert);
    CHECK(saw_f2_insert);
}

TEST_CASE("the first topple of the staged pipeline leaves a rank-2 surface") {
    FlipResult staged = type1_staged(FlipInput{f4_pair(), "sigma", FlipKind::TypeI, 2});
    // After the first topple the far F4 component exc2 acquires the
    // 1/9(1,2) singularity and keeps Picard rank 2.
    bool seen = false;
    for (size_t i = 0; i < staged.log.steps.size(); ++i) {
        const TransformStep& s = staged.log.steps[i];
        if (s.op == "contract_chain" && s.component == "exc2") {
            REQUIRE(s.contraction);
            CHECK(s.contraction->result_singularity == QuotientSingularity(9, 2));
            seen = true;
            break;
        }
    }
    CHECK(seen);
}

TEST_CASE("accordion type II flips are independent of the staging parameter") {
    FlipResult direct = type2_flip(FlipInput{f3f3_pair(), "sigma1", FlipKind::TypeII, 0});
    for (long long n = 0; n <= 3; ++n) {
        FlipResult acc = type2_accordion(FlipInput{f3f3_pair(), "sigma1", FlipKind::TypeII, n});
        CHECK(acc.pair == direct.pair);
    }
}

TEST_CASE("accordion intermediate fiber carries a (-3) curve after the first flip") {
    FlipResult acc = type2_accordion(FlipInput{f3f3_pair(), "sigma1", FlipKind::TypeII, 1});
    // The first elementary flip turns the divisor section d1 of the
    // inserted B x P^1 component into a (-3)-curve.
    bool seen = false;
    for (const TransformStep& s : acc.log.steps)
        if (s.op == "contract_chain" && s.labels == std::vector<Label>{"d1"}) seen = true;
    CHECK(seen);
    CHECK(replay(f3f3_pair(), acc.log) == acc.pair);
}

TEST_CASE("negative definite chains with (-1)-curves contract via blow-downs") {
    // Build the (-5,-2,-1) chain (sigma, E1, E2) by the two type I blow-ups
    // on the F4 pair, then contract the whole chain: the interior blow-downs
    // undo E2 and E1, after which the (-4)-curve sigma contracts to the cone
    // point 1/4(1,1).
    LogPair pair = f4_pair();
    pair = blow_up(pair, {"X", {{"sigma", 1}, {"H", 1}, {"F", 1}}, 2, "E1"});
    pair = blow_up(pair, {"X", {{"E1", 1}, {"H", 1}}, 1, "E2"});
    auto [out, sing_id] = contract_negative_definite_chain(pair, "X", {"E2", "E1", "sigma"});
    (void)sing_id;
    const CurveConfig& res = out.components[0];
    REQUIRE(res.singularities.size() == 1);
    CHECK(res.singularities[0].type == QuotientSingularity(4, 1));
    CHECK(res.picard_rank == 1);
    CHECK(res.curve("H").self_int == Rat(81, 4));
    CHECK(res.curve("F").self_int == Rat(1, 4));
    CHECK(res.product("H", "F") == Rat(9, 4));
}
