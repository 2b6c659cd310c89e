#include "slq/flip.hpp"

#include <algorithm>

#include "slq/error.hpp"

namespace slq {

const char* flip_kind_name(FlipKind kind) {
    switch (kind) {
        case FlipKind::TypeI: return "type1";
        case FlipKind::Topple: return "topple";
        case FlipKind::TypeII: return "type2";
    }
    return "?";
}

void normalize_pair(LogPair& pair) {
    for (Gluing& g : pair.gluings)
        if (g.comp_b < g.comp_a) {
            std::swap(g.comp_a, g.comp_b);
            std::swap(g.curve_a, g.curve_b);
        }
    std::sort(pair.gluings.begin(), pair.gluings.end(), [](const Gluing& a, const Gluing& b) {
        return std::tie(a.comp_a, a.curve_a, a.comp_b) < std::tie(b.comp_a, b.curve_a, b.comp_b);
    });
    std::sort(pair.points.begin(), pair.points.end(),
              [](const MarkedPoint& a, const MarkedPoint& b) {
                  return std::tie(a.component, a.id) < std::tie(b.component, b.id);
              });
    std::sort(pair.nc_points.begin(), pair.nc_points.end(),
              [](const GluedPoint& a, const GluedPoint& b) { return a.id < b.id; });
}

namespace {

LogPair remove_gluing_impl(const LogPair& in, const std::string& comp, const Label& curve) {
    LogPair out = in;
    bool found = false;
    for (auto it = out.gluings.begin(); it != out.gluings.end(); ++it) {
        bool hit = (it->comp_a == comp && it->curve_a == curve) ||
                   (it->comp_b == comp && it->curve_b == curve);
        if (!hit) continue;
        out.component(it->comp_a).curve(it->curve_a).roles.erase(Role::DoubleCurve);
        out.component(it->comp_b).curve(it->curve_b).roles.erase(Role::DoubleCurve);
        out.gluings.erase(it);
        found = true;
        break;
    }
    if (!found) fail(ErrorCode::Internal, "no gluing on '" + comp + "." + curve + "'");
    return out;
}

LogPair rename_point_impl(const LogPair& in, const std::string& comp, const std::string& from,
                          const std::string& to) {
    LogPair out = in;
    for (MarkedPoint& p : out.points)
        if (p.component == comp && p.id == from) p.id = to;
    return out;
}

LogPair drop_divisor_impl(const LogPair& in, const std::string& comp, const Label& curve) {
    LogPair out = in;
    CurveConfig& cfg = out.component(comp);
    cfg.d_class.erase(curve);
    cfg.curve(curve).roles.erase(Role::InDivisorD);
    return out;
}

const CurveConfig& owner_of(const LogPair& pair, const Label& curve) {
    for (const CurveConfig& cfg : pair.components)
        if (cfg.has_curve(curve)) return cfg;
    fail(ErrorCode::FlipPreconditionFailed, "no component carries curve '" + curve + "'");
}

[[noreturn]] void precondition(const std::string& message) {
    fail(ErrorCode::FlipPreconditionFailed, message);
}

// --- shared discovery -----------------------------------------------------

struct FlipSite {
    std::string t_comp;    // component carrying the flipped curve
    std::string s_comp;    // component carrying the divisor branch C
    Label b;               // double curve joining them
    Label c;               // divisor branch on s_comp crossing b
    std::string point_id;  // shared id of the crossing point
};

// Locates the configuration of a reducible-fiber surgery: the target curve
// on T, the double curve B through its marked point, the component S across
// the gluing, and the divisor branch C at the same marked point on S.
FlipSite locate_site(const LogPair& pair, const Label& target) {
    FlipSite site;
    site.t_comp = owner_of(pair, target).id;
    const MarkedPoint* pt = nullptr;
    for (const MarkedPoint& p : pair.points) {
        if (p.component != site.t_comp || !p.contains(target)) continue;
        for (const Label& l : p.curves) {
            if (l == target) continue;
            for (const Gluing& g : pair.gluings) {
                if ((g.comp_a == site.t_comp && g.curve_a == l) ||
                    (g.comp_b == site.t_comp && g.curve_b == l)) {
                    if (pt) precondition("several double-curve crossings on '" + target + "'");
                    pt = &p;
                    site.b = l;
                    site.s_comp = (g.comp_a == site.t_comp) ? g.comp_b : g.comp_a;
                }
            }
        }
    }
    if (!pt) precondition("no marked point joins '" + target + "' to a double curve");
    site.point_id = pt->id;

    const MarkedPoint* ps = pair.find_point(site.point_id, site.s_comp);
    if (!ps)
        precondition("no matching point '" + site.point_id + "' on component '" +
                     site.s_comp + "'");
    const CurveConfig& s_cfg = pair.component(site.s_comp);
    for (const Label& l : ps->curves) {
        if (l == site.b) continue;
        if (s_cfg.d_class.coeff(l).is_zero()) continue;
        if (!site.c.empty())
            precondition("several divisor branches at '" + site.point_id + "' on '" +
                         site.s_comp + "'");
        site.c = l;
    }
    if (site.c.empty())
        precondition("no divisor branch at '" + site.point_id + "' on '" + site.s_comp + "'");
    if (ps->contact(site.c, site.b) != 1)
        precondition("divisor branch is tangent to the double curve");
    return site;
}

void check_no_singularity_on(const CurveConfig& cfg, const Label& curve,
                             const std::string& clause) {
    for (const SingularPoint& s : cfg.singularities)
        for (const Label& l : s.incident)
            if (l == curve)
                precondition(clause + ": component '" + cfg.id + "' is singular along '" +
                             curve + "'");
}

// Core of the type I surgery acting on a single component: two blow-ups
// along the divisor branch c at the marked point, then contraction of the
// (sigma~, E1) = (-5, -2) chain.
ChainContraction type1_core(Pipeline& ctx, const std::string& comp, const std::string& point_id,
                            const Label& sigma, const Label& c, const std::string& prefix) {
    const Label e1 = prefix + "1";
    const Label e2 = prefix + "2";

    Rat c_before = ctx.pair.component(comp).curve(c).self_int;
    ctx.blow_up_at(comp, point_id, e1);

    std::string q;
    for (const MarkedPoint& p : ctx.pair.points)
        if (p.component == comp && p.contains(c) && p.contains(e1)) q = p.id;
    if (q.empty()) fail(ErrorCode::Internal, "lost the divisor branch after the first blow-up");
    ctx.blow_up_at(comp, q, e2);

    ChainContraction record = ctx.contract(comp, {sigma, e1});
    if (record.result_singularity != QuotientSingularity(9, 2))
        fail(ErrorCode::Internal,
             "type I contraction produced " + record.result_singularity.str());

    Rat c_after = ctx.pair.component(comp).curve(c).self_int;
    if (c_after != c_before - Rat(2))
        fail(ErrorCode::Internal, "type I flip: C'^2 != C^2 - 2");
    ctx.note("C'^2", c_after.str());
    return record;
}

void check_type1_preconditions(const LogPair& pair, const Label& target) {
    const CurveConfig& cfg = owner_of(pair, target);
    const Curve& sigma = cfg.curve(target);
    if (sigma.self_int != Rat(-4))
        precondition("self-intersection -4 required, '" + target + "' has " +
                     sigma.self_int.str());
    if (sigma.genus != 0) precondition("'" + target + "' is not rational");
    if (cfg.d_class.coeff(target) != Rat(1))
        precondition("'" + target + "' is not a reduced component of D");
    DivisorClass residual = cfg.d_class;
    residual.erase(target);
    Rat crossing = cfg.intersect(residual, DivisorClass::single(target));
    if (crossing != Rat(1))
        precondition("residual divisor meets '" + target + "' with degree " + crossing.str() +
                     ", expected 1");
    check_no_singularity_on(cfg, target, "smoothness along sigma");
}

}  // namespace

TransformStep& Pipeline::step(std::string op) {
    log.steps.push_back({});
    log.steps.back().op = std::move(op);
    return log.steps.back();
}

void Pipeline::note(const std::string& key, const std::string& value) {
    log.steps.back().notes.emplace_back(key, value);
}

void Pipeline::blow_up_at(const std::string& comp, const std::string& point, const Label& label) {
    TransformStep& s = step("blow_up_at");
    s.component = comp;
    s.point = point;
    s.labels = {label};
    pair = slq::blow_up_at(pair, comp, point, label);
}

ChainContraction Pipeline::contract(const std::string& comp, const std::vector<Label>& chain) {
    TransformStep& s = step("contract_chain");
    s.component = comp;
    s.labels = chain;
    auto [out, record] = contract_chain(pair, comp, chain);
    pair = std::move(out);
    s.contraction = record;
    note("singularity", record.result_singularity.str());
    return record;
}

void Pipeline::blow_down(const std::string& comp, const Label& label) {
    TransformStep& s = step("blow_down");
    s.component = comp;
    s.labels = {label};
    pair = slq::blow_down(pair, comp, label);
}

void Pipeline::insert(const CurveConfig& config, const std::vector<MarkedPoint>& points) {
    TransformStep& s = step("insert_component");
    s.insert_config = config;
    s.insert_points = points;
    pair = insert_component(pair, config, points);
}

void Pipeline::del(const std::string& comp) {
    TransformStep& s = step("delete_component");
    s.component = comp;
    pair = delete_component(pair, comp);
}

void Pipeline::glue(const Gluing& g) {
    TransformStep& s = step("glue");
    s.gluing = g;
    pair = add_gluing(pair, g);
}

void Pipeline::unglue(const std::string& comp, const Label& curve) {
    TransformStep& s = step("unglue");
    s.component = comp;
    s.labels = {curve};
    pair = remove_gluing_impl(pair, comp, curve);
}

void Pipeline::rename(const std::string& comp, const Label& from, const Label& to) {
    TransformStep& s = step("rename_curve");
    s.component = comp;
    s.labels = {from, to};
    pair = rename_curve(pair, comp, from, to);
}

void Pipeline::rename_point(const std::string& comp, const std::string& from,
                            const std::string& to) {
    TransformStep& s = step("rename_point");
    s.component = comp;
    s.labels = {from, to};
    pair = rename_point_impl(pair, comp, from, to);
}

void Pipeline::drop_divisor(const std::string& comp, const Label& curve) {
    TransformStep& s = step("drop_divisor_component");
    s.component = comp;
    s.labels = {curve};
    pair = drop_divisor_impl(pair, comp, curve);
}

void Pipeline::record_nc(const GluedPoint& g) {
    TransformStep& s = step("record_nc");
    s.nc = g;
    pair.nc_points.push_back(g);
}

void Pipeline::remove_nc(const std::string& id) {
    TransformStep& s = step("remove_nc");
    s.point = id;
    pair.nc_points.erase(std::remove_if(pair.nc_points.begin(), pair.nc_points.end(),
                                        [&](const GluedPoint& g) { return g.id == id; }),
                         pair.nc_points.end());
}

void Pipeline::swap_nc(const std::string& id) {
    TransformStep& s = step("swap_nc");
    s.point = id;
    for (GluedPoint& g : pair.nc_points)
        if (g.id == id) g = g.swapped();
}

void Pipeline::finish() {
    step("normalize");
    normalize_pair(pair);
}

void Pipeline::append(FlipResult&& result) {
    pair = std::move(result.pair);
    for (TransformStep& s : result.log.steps) log.steps.push_back(std::move(s));
}

LogPair insert_component(const LogPair& pair, const CurveConfig& config,
                         const std::vector<MarkedPoint>& points) {
    if (pair.has_component(config.id))
        fail(ErrorCode::Internal, "component '" + config.id + "' already present");
    LogPair out = pair;
    out.components.push_back(config);
    for (const MarkedPoint& p : points) out.points.push_back(p);
    return out;
}

LogPair delete_component(const LogPair& pair, const std::string& component_id) {
    LogPair out = pair;
    if (!out.has_component(component_id))
        fail(ErrorCode::Internal, "no component '" + component_id + "'");
    for (auto it = out.gluings.begin(); it != out.gluings.end();) {
        if (it->comp_a == component_id || it->comp_b == component_id) {
            const std::string& other = it->comp_a == component_id ? it->comp_b : it->comp_a;
            const Label& curve = it->comp_a == component_id ? it->curve_b : it->curve_a;
            out.component(other).curve(curve).roles.erase(Role::DoubleCurve);
            it = out.gluings.erase(it);
        } else {
            ++it;
        }
    }
    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [&](const MarkedPoint& p) {
                                        return p.component == component_id;
                                    }),
                     out.points.end());
    out.nc_points.erase(std::remove_if(out.nc_points.begin(), out.nc_points.end(),
                                       [&](const GluedPoint& g) {
                                           return g.branch_x == component_id ||
                                                  g.branch_y == component_id;
                                       }),
                        out.nc_points.end());
    out.components.erase(std::remove_if(out.components.begin(), out.components.end(),
                                        [&](const CurveConfig& c) {
                                            return c.id == component_id;
                                        }),
                         out.components.end());
    return out;
}

LogPair add_gluing(const LogPair& pair, const Gluing& gluing) {
    LogPair out = pair;
    out.component(gluing.comp_a).curve(gluing.curve_a).roles.insert(Role::DoubleCurve);
    out.component(gluing.comp_b).curve(gluing.curve_b).roles.insert(Role::DoubleCurve);
    out.gluings.push_back(gluing);
    return out;
}

LogPair rename_curve(const LogPair& pair, const std::string& component_id, const Label& from,
                     const Label& to) {
    LogPair out = pair;
    CurveConfig& cfg = out.component(component_id);
    if (!cfg.has_curve(from)) fail(ErrorCode::MissingCurve, "no curve '" + from + "'");
    if (cfg.has_curve(to))
        fail(ErrorCode::Internal, "label '" + to + "' already in use on '" + component_id + "'");
    cfg.curve(from).label = to;
    std::map<std::pair<Label, Label>, Rat> products;
    for (const auto& [key, v] : cfg.products) {
        Label a = key.first == from ? to : key.first;
        Label b = key.second == from ? to : key.second;
        products[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = v;
    }
    cfg.products = std::move(products);
    for (DivisorClass* cls : {&cfg.k_class, &cfg.d_class}) {
        Rat c = cls->coeff(from);
        if (!c.is_zero()) {
            cls->erase(from);
            cls->set(to, c);
        }
    }
    for (SingularPoint& s : cfg.singularities)
        for (Label& l : s.incident)
            if (l == from) l = to;
    for (MarkedPoint& p : out.points) {
        if (p.component != component_id) continue;
        for (Label& l : p.curves)
            if (l == from) l = to;
        std::sort(p.curves.begin(), p.curves.end());
        for (Tangency& t : p.tangencies) {
            if (t.a == from) t.a = to;
            if (t.b == from) t.b = to;
            if (t.b < t.a) std::swap(t.a, t.b);
        }
    }
    for (Gluing& g : out.gluings) {
        if (g.comp_a == component_id && g.curve_a == from) g.curve_a = to;
        if (g.comp_b == component_id && g.curve_b == from) g.curve_b = to;
    }
    return out;
}

LogPair replay(const LogPair& input, const TransformLog& log) {
    Pipeline ctx{input, {}};
    for (const TransformStep& s : log.steps) {
        if (s.op == "blow_up_at") {
            ctx.pair = blow_up_at(ctx.pair, s.component, s.point, s.labels.at(0));
        } else if (s.op == "contract_chain") {
            auto [out, record] = contract_chain(ctx.pair, s.component, s.labels);
            ctx.pair = std::move(out);
            if (s.contraction && record.result_singularity != s.contraction->result_singularity)
                fail(ErrorCode::Internal, "replay deviated from the recorded contraction");
        } else if (s.op == "blow_down") {
            ctx.pair = blow_down(ctx.pair, s.component, s.labels.at(0));
        } else if (s.op == "insert_component") {
            ctx.pair = insert_component(ctx.pair, *s.insert_config, s.insert_points);
        } else if (s.op == "delete_component") {
            ctx.pair = delete_component(ctx.pair, s.component);
        } else if (s.op == "glue") {
            ctx.pair = add_gluing(ctx.pair, *s.gluing);
        } else if (s.op == "unglue") {
            ctx.pair = remove_gluing_impl(ctx.pair, s.component, s.labels.at(0));
        } else if (s.op == "rename_curve") {
            ctx.pair = rename_curve(ctx.pair, s.component, s.labels.at(0), s.labels.at(1));
        } else if (s.op == "rename_point") {
            ctx.pair =
                rename_point_impl(ctx.pair, s.component, s.labels.at(0), s.labels.at(1));
        } else if (s.op == "drop_divisor_component") {
            ctx.pair = drop_divisor_impl(ctx.pair, s.component, s.labels.at(0));
        } else if (s.op == "record_nc") {
            ctx.pair.nc_points.push_back(*s.nc);
        } else if (s.op == "remove_nc") {
            ctx.pair.nc_points.erase(
                std::remove_if(ctx.pair.nc_points.begin(), ctx.pair.nc_points.end(),
                               [&](const GluedPoint& g) { return g.id == s.point; }),
                ctx.pair.nc_points.end());
        } else if (s.op == "swap_nc") {
            for (GluedPoint& g : ctx.pair.nc_points)
                if (g.id == s.point) g = g.swapped();
        } else if (s.op == "normalize") {
            normalize_pair(ctx.pair);
        } else {
            fail(ErrorCode::Internal, "unknown log step '" + s.op + "'");
        }
    }
    return ctx.pair;
}

FlipResult type1_flip(const FlipInput& input, const std::string& label_prefix) {
    check_type1_preconditions(input.pair, input.target_curve);
    const Label& sigma = input.target_curve;
    const CurveConfig& cfg = owner_of(input.pair, sigma);

    const MarkedPoint* center = nullptr;
    Label c;
    for (const MarkedPoint& p : input.pair.points) {
        if (p.component != cfg.id || !p.contains(sigma)) continue;
        for (const Label& l : p.curves) {
            if (l == sigma || cfg.d_class.coeff(l).is_zero()) continue;
            if (center) precondition("several divisor crossings on '" + sigma + "'");
            center = &p;
            c = l;
        }
    }
    if (!center)
        precondition("no marked point where the residual divisor meets '" + sigma + "'");
    if (center->contact(sigma, c) != 1)
        precondition("residual divisor is tangent to '" + sigma + "'");

    Pipeline ctx{input.pair, {}};
    type1_core(ctx, cfg.id, center->id, sigma, c, label_prefix);
    ctx.finish();

    auto report = validate_pair(ctx.pair);
    if (!report.empty())
        fail(ErrorCode::Internal, "type I flip output is invalid: " + report.front());
    return {ctx.pair, ctx.log};
}

FlipResult topple(const FlipInput& input, const std::string& label_prefix) {
    const Label& sigma = input.target_curve;
    const LogPair& pair = input.pair;
    FlipSite site = locate_site(pair, sigma);
    const CurveConfig& t_cfg = pair.component(site.t_comp);
    const CurveConfig& s_cfg = pair.component(site.s_comp);

    // Preconditions (1)-(6) on the stored configuration.
    if (t_cfg.curve(site.b).genus != 0 || s_cfg.curve(site.b).genus != 0)
        precondition("(1) double curve must be rational");
    check_no_singularity_on(s_cfg, site.b, "(1)");
    check_no_singularity_on(t_cfg, site.b, "(1)");
    check_no_singularity_on(t_cfg, sigma, "(2)");
    check_no_singularity_on(s_cfg, site.c, "(2)");
    if (s_cfg.curve(site.b).self_int != Rat(-4) || t_cfg.curve(site.b).self_int != Rat(4))
        precondition("(3) B^2 must be -4 on S and 4 on T, got " +
                     s_cfg.curve(site.b).self_int.str() + " and " +
                     t_cfg.curve(site.b).self_int.str());
    if (t_cfg.curve(sigma).self_int != Rat(-2) || t_cfg.curve(sigma).genus != 0)
        precondition("(4) sigma must be a rational (-2)-curve on T");
    if (t_cfg.product(sigma, site.b) != Rat(1))
        precondition("(5) sigma and B must meet transversely at one point");
    if (pair.find_point(site.point_id, site.t_comp)->contact(sigma, site.b) != 1)
        precondition("(5) sigma is tangent to B");
    if (t_cfg.picard_rank != 2)
        precondition("(6) NS(T) must be spanned by B and sigma");
    if (t_cfg.d_class.coeff(sigma) != Rat(1))
        precondition("sigma must be a reduced component of D");

    long long rank_before = s_cfg.picard_rank;

    Pipeline ctx{pair, {}};
    ctx.del(site.t_comp);
    type1_core(ctx, site.s_comp, site.point_id, site.b, site.c, label_prefix);

    const CurveConfig& out_cfg = ctx.pair.component(site.s_comp);
    if (out_cfg.picard_rank != rank_before)
        fail(ErrorCode::Internal, "topple must preserve the Picard rank of S");
    ctx.note("picard_rank", std::to_string(out_cfg.picard_rank));
    ctx.finish();
    return {ctx.pair, ctx.log};
}

namespace {

FlipResult type2_flip_impl(const FlipInput& input, const std::string& label_prefix,
                           bool validate_output) {
    const Label& sigma = input.target_curve;
    const LogPair& pair = input.pair;
    FlipSite site = locate_site(pair, sigma);
    const CurveConfig& t_cfg = pair.component(site.t_comp);
    const CurveConfig& s_cfg = pair.component(site.s_comp);

    if (t_cfg.curve(sigma).self_int != Rat(-3))
        precondition("self-intersection -3 required, '" + sigma + "' has " +
                     t_cfg.curve(sigma).self_int.str());
    if (t_cfg.curve(sigma).genus != 0) precondition("'" + sigma + "' is not rational");
    if (t_cfg.d_class.coeff(sigma) != Rat(1))
        precondition("'" + sigma + "' is not a reduced component of D");
    if (t_cfg.product(sigma, site.b) != Rat(1))
        precondition("'" + sigma + "' must meet the double curve transversely at one point");
    if (t_cfg.curve(site.b).genus != 0) precondition("double curve must be rational");
    check_no_singularity_on(t_cfg, sigma, "smoothness along sigma");
    check_no_singularity_on(s_cfg, site.c, "smoothness along C");

    const Rat c_before = s_cfg.curve(site.c).self_int;
    const Rat b_on_s = s_cfg.curve(site.b).self_int;
    const Rat b_on_t = t_cfg.curve(site.b).self_int;
    const long long rank_s = s_cfg.picard_rank;
    const long long rank_t = t_cfg.picard_rank;

    const Label e1 = label_prefix + "1";
    const Label e2 = label_prefix + "2";
    const Label e3 = label_prefix + "3";

    Pipeline ctx{pair, {}};
    std::string at = site.point_id;
    for (const Label& e : {e1, e2, e3}) {
        ctx.blow_up_at(site.s_comp, at, e);
        at.clear();
        for (const MarkedPoint& p : ctx.pair.points)
            if (p.component == site.s_comp && p.contains(site.c) && p.contains(e)) at = p.id;
        if (at.empty()) fail(ErrorCode::Internal, "lost the divisor branch during blow-ups");
    }
    ChainContraction a2 = ctx.contract(site.s_comp, {e1, e2});
    if (a2.result_singularity != QuotientSingularity::a_type(2))
        fail(ErrorCode::Internal, "type II contraction produced " + a2.result_singularity.str());

    ChainContraction mu = ctx.contract(site.t_comp, {sigma});
    if (mu.result_singularity != QuotientSingularity(3, 1))
        fail(ErrorCode::Internal, "sigma contraction produced " + mu.result_singularity.str());

    GluedPoint glued;
    glued.id = "nc(" + sigma + ")";
    glued.order = 3;
    glued.weights = {1, 2, 1};
    glued.branch_x = site.s_comp;
    glued.branch_y = site.t_comp;
    glued.sing_x = a2.singularity_id;
    glued.sing_y = mu.singularity_id;
    ctx.record_nc(glued);
    ctx.note("glued", glued.str());

    const CurveConfig& s_out = ctx.pair.component(site.s_comp);
    const CurveConfig& t_out = ctx.pair.component(site.t_comp);
    auto expect = [&](const char* what, const Rat& got, const Rat& want) {
        if (got != want)
            fail(ErrorCode::Internal, std::string("type II flip: ") + what + " = " + got.str() +
                                          ", expected " + want.str());
        ctx.note(what, got.str());
    };
    expect("C'^2", s_out.curve(site.c).self_int, c_before - Rat(3));
    expect("nu^2", s_out.curve(e3).self_int, Rat(-1, 3));
    expect("B'.nu", s_out.product(site.b, e3), Rat(1, 3));
    expect("B'^2|S'", s_out.curve(site.b).self_int, b_on_s - Rat(1, 3));
    expect("B'^2|T'", t_out.curve(site.b).self_int, b_on_t + Rat(1, 3));
    if (s_out.picard_rank != rank_s + 1 || t_out.picard_rank != rank_t - 1)
        fail(ErrorCode::Internal, "type II flip: wrong Picard rank shifts");

    ctx.finish();
    if (validate_output) {
        auto report = validate_pair(ctx.pair);
        if (!report.empty())
            fail(ErrorCode::Internal, "type II flip output is invalid: " + report.front());
    }
    return {ctx.pair, ctx.log};
}

}  // namespace

FlipResult type2_flip(const FlipInput& input, const std::string& label_prefix) {
    return type2_flip_impl(input, label_prefix, true);
}

FlipResult type1_staged(const FlipInput& input) {
    check_type1_preconditions(input.pair, input.target_curve);
    const Label sigma = input.target_curve;
    const std::string x_comp = owner_of(input.pair, sigma).id;
    const long long n = input.staging;
    if (n < 0) precondition("staging must be non-negative");

    std::string p_id;
    {
        const CurveConfig& cfg = input.pair.component(x_comp);
        for (const MarkedPoint& p : input.pair.points)
            if (p.component == x_comp && p.contains(sigma))
                for (const Label& l : p.curves)
                    if (l != sigma && !cfg.d_class.coeff(l).is_zero()) p_id = p.id;
    }
    if (p_id.empty()) precondition("no marked point where the residual divisor meets sigma");

    Pipeline ctx{input.pair, {}};

    // Stage 1 (blow-ups): insert the exceptional chain along sigma. The
    // inserted surfaces are F4 for the first n components and F2 for the
    // last; the divisor leaves sigma and continues along the chain as a
    // fiber on each F4 and the (-2)-section on the F2.
    ctx.drop_divisor(x_comp, sigma);
    std::string prev_comp = x_comp;
    Label prev_label = sigma;
    std::string prev_point = p_id;
    for (long long i = 1; i <= n; ++i) {
        const std::string comp = "exc" + std::to_string(i);
        const Label b = "b" + std::to_string(i);
        const Label f = "f" + std::to_string(i);
        CurveConfig cfg;
        cfg.id = comp;
        cfg.add_curve({prev_label, Rat(4), 0, {Role::Section}});
        cfg.add_curve({b, Rat(-4), 0, {Role::Directrix, Role::Section}});
        cfg.add_curve({f, Rat(0), 0, {Role::Fiber, Role::InDivisorD}});
        cfg.set_product(prev_label, f, Rat(1));
        cfg.set_product(b, f, Rat(1));
        cfg.picard_rank = 2;
        cfg.k_class.add(b, Rat(-2));
        cfg.k_class.add(f, Rat(-6));
        cfg.d_class.add(f, Rat(1));
        ctx.insert(cfg, {{prev_point, comp, {f, prev_label}, {}},
                         {"x" + std::to_string(i), comp, {b, f}, {}}});
        ctx.glue({prev_comp, prev_label, comp, prev_label});
        prev_comp = comp;
        prev_label = b;
        prev_point = "x" + std::to_string(i);
    }
    {
        const std::string comp = "exc" + std::to_string(n + 1);
        const Label s = "s_end";
        CurveConfig cfg;
        cfg.id = comp;
        cfg.add_curve({prev_label, Rat(4), 0, {Role::Section}});
        cfg.add_curve({s, Rat(-2), 0, {Role::Directrix, Role::Section, Role::InDivisorD}});
        cfg.set_product(prev_label, s, Rat(1));
        cfg.picard_rank = 2;
        cfg.k_class.add(s, Rat(-2, 3));
        cfg.k_class.add(prev_label, Rat(-4, 3));
        cfg.d_class.add(s, Rat(1));
        ctx.insert(cfg, {{prev_point, comp, {prev_label, s}, {}}});
        ctx.glue({prev_comp, prev_label, comp, prev_label});
    }

    // Stage 2 (topples): peel the chain off from the far end. Each topple
    // turns the divisor branch on its S side into the next (-2) target.
    std::vector<Label> targets;
    targets.push_back("s_end");
    for (long long i = n; i >= 1; --i) targets.push_back("f" + std::to_string(i));
    for (const Label& target : targets) {
        FlipInput step_input{ctx.pair, target, FlipKind::Topple, 0};
        FlipResult r = topple(step_input, "E");
        ctx.pair = std::move(r.pair);
        for (TransformStep& s : r.log.steps) ctx.log.steps.push_back(std::move(s));
    }

    auto report = validate_pair(ctx.pair);
    if (!report.empty())
        fail(ErrorCode::Internal, "staged type I output is invalid: " + report.front());
    return {ctx.pair, ctx.log};
}

FlipResult type2_accordion(const FlipInput& input) {
    const long long n = input.staging;
    if (n < 0) precondition("staging must be non-negative");
    if (n == 0) return type2_flip(input);

    const Label sigma = input.target_curve;
    FlipSite site = locate_site(input.pair, sigma);

    Pipeline ctx{input.pair, {}};

    // Resolve the A_n base direction into a chain of B x P^1 components
    // between S and T.
    ctx.unglue(site.t_comp, site.b);
    const Label t_b = "q" + std::to_string(n);
    ctx.rename(site.t_comp, site.b, t_b);
    ctx.rename_point(site.t_comp, site.point_id, "y" + std::to_string(n));

    std::string prev_comp = site.s_comp;
    Label prev_label = site.b;
    std::string prev_point = site.point_id;
    for (long long i = 1; i <= n; ++i) {
        const std::string comp = "mid" + std::to_string(i);
        const Label right = "q" + std::to_string(i);
        const Label d = "d" + std::to_string(i);
        const Label r = "r" + std::to_string(i);
        CurveConfig cfg;
        cfg.id = comp;
        cfg.add_curve({prev_label, Rat(0), 0, {Role::Section}});
        cfg.add_curve({right, Rat(0), 0, {Role::Section}});
        cfg.add_curve({d, Rat(0), 0, {Role::Fiber, Role::InDivisorD}});
        cfg.add_curve({r, Rat(0), 0, {Role::Fiber}});
        cfg.set_product(prev_label, d, Rat(1));
        cfg.set_product(right, d, Rat(1));
        cfg.set_product(prev_label, r, Rat(1));
        cfg.set_product(right, r, Rat(1));
        cfg.picard_rank = 2;
        cfg.k_class.add(prev_label, Rat(-2));
        cfg.k_class.add(d, Rat(-2));
        cfg.d_class.add(d, Rat(1));
        ctx.insert(cfg, {{prev_point, comp, {d, prev_label}, {}},
                         {"y" + std::to_string(i), comp, {d, right}, {}}});
        ctx.glue({prev_comp, prev_label, comp, prev_label});
        prev_comp = comp;
        prev_label = right;
        prev_point = "y" + std::to_string(i);
    }
    ctx.glue({prev_comp, prev_label, site.t_comp, t_b});

    // Elementary flips from right to left. The last one acts on the
    // original S and uses the plain exceptional labels.
    std::vector<Label> targets;
    targets.push_back(sigma);
    for (long long i = n; i >= 1; --i) targets.push_back("d" + std::to_string(i));
    for (size_t j = 0; j < targets.size(); ++j) {
        std::string prefix = (j + 1 == targets.size()) ? "E" : "A" + std::to_string(j);
        FlipInput step_input{ctx.pair, targets[j], FlipKind::TypeII, 0};
        FlipResult r = type2_flip_impl(step_input, prefix, false);
        ctx.pair = std::move(r.pair);
        for (TransformStep& s : r.log.steps) ctx.log.steps.push_back(std::move(s));
    }

    // The intermediate components are trivial on their rulings; contract
    // them and re-glue S' to T'.
    for (long long i = 1; i <= n; ++i) {
        const std::string comp = "mid" + std::to_string(i);
        EpsLinear deg = ctx.pair.log_degree(comp, "r" + std::to_string(i));
        if (!deg.is_zero())
            fail(ErrorCode::Internal, "intermediate component " + comp +
                                          " is not trivial on its ruling: " + deg.str());
    }
    std::string s_sing, t_sing;
    for (const GluedPoint& g : ctx.pair.nc_points) {
        if (g.branch_x == site.s_comp) s_sing = g.sing_x;
        if (g.branch_y == site.t_comp) t_sing = g.sing_y;
    }
    std::vector<std::string> old_ids;
    for (const GluedPoint& g : ctx.pair.nc_points) old_ids.push_back(g.id);
    for (const std::string& id : old_ids) ctx.remove_nc(id);
    for (long long i = 1; i <= n; ++i) ctx.del("mid" + std::to_string(i));
    ctx.rename(site.t_comp, t_b, site.b);
    ctx.glue({site.s_comp, site.b, site.t_comp, site.b});
    GluedPoint fused;
    fused.id = "nc(" + sigma + ")";
    fused.order = 3;
    fused.weights = {1, 2, 1};
    fused.branch_x = site.s_comp;
    fused.branch_y = site.t_comp;
    fused.sing_x = s_sing;
    fused.sing_y = t_sing;
    ctx.record_nc(fused);

    ctx.finish();
    auto report = validate_pair(ctx.pair);
    if (!report.empty())
        fail(ErrorCode::Internal, "accordion output is invalid: " + report.front());
    return {ctx.pair, ctx.log};
}

std::pair<LogPair, std::string> contract_negative_definite_chain(
    const LogPair& pair, const std::string& component_id, std::vector<Label> chain,
    TransformLog* log) {
    Pipeline ctx{pair, {}};
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < chain.size(); ++i) {
            const CurveConfig& cfg = ctx.pair.component(component_id);
            if (cfg.curve(chain[i]).self_int == Rat(-1)) {
                ctx.blow_down(component_id, chain[i]);
                chain.erase(chain.begin() + i);
                changed = true;
                break;
            }
        }
    }
    ChainContraction record = ctx.contract(component_id, chain);
    if (log)
        for (TransformStep& s : ctx.log.steps) log->steps.push_back(std::move(s));
    return {ctx.pair, record.singularity_id};
}

}  // namespace slq
