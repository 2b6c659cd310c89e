#include "slq/blowup.hpp"

#include <algorithm>

#include "slq/error.hpp"

namespace slq {

QuotientSingularity hj_chain_to_singularity(const std::vector<long long>& self_ints) {
    if (self_ints.empty())
        fail(ErrorCode::NotContractibleChain, "empty chain");
    for (long long s : self_ints)
        if (s > -2)
            fail(ErrorCode::NotContractibleChain,
                 "chain entry " + std::to_string(s) + " exceeds -2");
    // n/q = a1 - 1/(a2 - 1/(...)), evaluated right to left on integer pairs.
    long long n = -self_ints.back(), q = 1;
    for (auto it = self_ints.rbegin() + 1; it != self_ints.rend(); ++it) {
        long long a = -*it;
        long long new_n = a * n - q;
        q = n;
        n = new_n;
    }
    return {n, q};
}

namespace {

void check_component(const LogPair& pair, const std::string& cid) {
    if (!pair.has_component(cid)) fail(ErrorCode::MissingCurve, "no component '" + cid + "'");
}

bool label_used(const LogPair& pair, const Label& l) {
    for (const CurveConfig& cfg : pair.components)
        if (cfg.has_curve(l)) return true;
    return false;
}

}  // namespace

LogPair blow_up(const LogPair& pair, const BlowupRequest& req) {
    check_component(pair, req.component_id);
    if (req.new_label.empty()) fail(ErrorCode::InconsistentIncidence, "missing exceptional label");
    if (label_used(pair, req.new_label))
        fail(ErrorCode::InconsistentIncidence, "label '" + req.new_label + "' already in use");

    LogPair out = pair;
    CurveConfig& cfg = out.component(req.component_id);

    for (const auto& [l, m] : req.incidence) {
        if (!cfg.has_curve(l))
            fail(ErrorCode::MissingCurve, "incidence curve '" + l + "' not on '" + cfg.id + "'");
        if (m < 1) fail(ErrorCode::InconsistentIncidence, "multiplicity of '" + l + "' must be >= 1");
    }
    // Listed curves must actually meet at a point: pairwise products cover
    // the resolved intersection.
    for (auto a = req.incidence.begin(); a != req.incidence.end(); ++a)
        for (auto b = std::next(a); b != req.incidence.end(); ++b) {
            Rat left = cfg.product(a->first, b->first) - Rat(a->second * b->second);
            if (left.is_negative())
                fail(ErrorCode::InconsistentIncidence,
                     "blow-up would drop " + a->first + "." + b->first + " below zero");
        }

    Curve exceptional;
    exceptional.label = req.new_label;
    exceptional.self_int = Rat(-1);
    exceptional.genus = 0;
    exceptional.roles = {Role::Exceptional};
    cfg.add_curve(exceptional);

    for (const auto& [l, m] : req.incidence) {
        Curve& c = cfg.curve(l);
        c.self_int -= Rat(m * m);
        cfg.set_product(l, req.new_label, Rat(m));
    }
    for (auto a = req.incidence.begin(); a != req.incidence.end(); ++a)
        for (auto b = std::next(a); b != req.incidence.end(); ++b)
            cfg.set_product(a->first, b->first,
                            cfg.product(a->first, b->first) - Rat(a->second * b->second));

    // K -> pull-back + E, D -> pull-back - divisor_mult * E, in the new
    // basis of proper transforms: a class sum(w_l * l) pulls back to
    // sum(w_l * (l~ + m_l * E)).
    auto pullback_weight = [&](const DivisorClass& cls) {
        Rat w(0);
        for (const auto& [l, c] : cls.terms()) {
            auto it = req.incidence.find(l);
            if (it != req.incidence.end()) w += c * Rat(it->second);
        }
        return w;
    };
    cfg.k_class.add(req.new_label, pullback_weight(cfg.k_class) + Rat(1));
    cfg.d_class.add(req.new_label, pullback_weight(cfg.d_class) - Rat(req.divisor_mult));
    if (cfg.d_class.coeff(req.new_label).is_negative())
        fail(ErrorCode::InconsistentIncidence,
             "divisor multiplicity " + std::to_string(req.divisor_mult) +
                 " exceeds the multiplicity of D at the center");
    if (!cfg.d_class.coeff(req.new_label).is_zero())
        cfg.curve(req.new_label).roles.insert(Role::InDivisorD);

    cfg.picard_rank += 1;
    return out;
}

LogPair blow_up_at(const LogPair& pair, const std::string& component_id,
                   const std::string& point_id, const Label& new_label) {
    check_component(pair, component_id);
    const MarkedPoint* pt = pair.find_point(point_id, component_id);
    if (!pt) fail(ErrorCode::MissingCurve,
                  "no marked point '" + point_id + "' on component '" + component_id + "'");
    MarkedPoint center = *pt;
    const CurveConfig& cfg = pair.component(component_id);

    BlowupRequest req;
    req.component_id = component_id;
    req.new_label = new_label;
    long long dmult = 0;
    for (const Label& l : center.curves) {
        req.incidence[l] = 1;
        Rat dc = cfg.d_class.coeff(l);
        if (!dc.is_zero()) {
            if (!dc.is_integer())
                fail(ErrorCode::InconsistentIncidence, "fractional D multiplicity at point");
            dmult += dc.as_integer();
        }
    }
    req.divisor_mult = dmult;

    LogPair out = blow_up(pair, req);

    // Replace the consumed point by the induced points on the exceptional
    // curve. Curves in tangential contact stay together; groups are the
    // connected components of the tangency relation.
    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [&](const MarkedPoint& p) {
                                        return p.id == point_id && p.component == component_id;
                                    }),
                     out.points.end());

    std::map<Label, Label> group_of;  // curve -> representative
    for (const Label& l : center.curves) group_of[l] = l;
    auto find_rep = [&](Label l) {
        while (group_of[l] != l) l = group_of[l];
        return l;
    };
    for (const Tangency& t : center.tangencies) group_of[find_rep(t.a)] = find_rep(t.b);

    std::map<Label, std::vector<Label>> groups;
    for (const Label& l : center.curves) groups[find_rep(l)].push_back(l);

    for (auto& [rep, members] : groups) {
        std::sort(members.begin(), members.end());
        MarkedPoint child;
        child.id = point_id + "." + members.front();
        child.component = component_id;
        child.curves = members;
        child.curves.push_back(new_label);
        std::sort(child.curves.begin(), child.curves.end());
        for (const Tangency& t : center.tangencies)
            if (t.order > 2) child.tangencies.push_back({t.a, t.b, t.order - 1});
        out.points.push_back(child);
    }
    return out;
}

std::pair<LogPair, ChainContraction> contract_chain(const LogPair& pair,
                                                    const std::string& component_id,
                                                    const std::vector<Label>& chain) {
    check_component(pair, component_id);
    const CurveConfig& cfg = pair.component(component_id);
    const size_t n = chain.size();
    if (n == 0) fail(ErrorCode::NotContractibleChain, "empty chain");

    std::vector<long long> selfs;
    for (const Label& l : chain) {
        const Curve& c = cfg.curve(l);
        if (c.genus != 0)
            fail(ErrorCode::NotContractibleChain, "chain curve '" + l + "' is not rational");
        if (!c.self_int.is_integer() || c.self_int > Rat(-2))
            fail(ErrorCode::NotContractibleChain,
                 "chain curve '" + l + "' has self-intersection " + c.self_int.str());
        selfs.push_back(c.self_int.as_integer());
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Rat expected(j == i + 1 ? 1 : 0);
            if (cfg.product(chain[i], chain[j]) != expected)
                fail(ErrorCode::NotContractibleChain,
                     "curves '" + chain[i] + "' and '" + chain[j] + "' do not form a chain");
        }
    for (const Label& l : chain) {
        for (const Gluing& g : pair.gluings)
            if ((g.comp_a == component_id && g.curve_a == l) ||
                (g.comp_b == component_id && g.curve_b == l))
                fail(ErrorCode::UnsupportedContraction, "chain curve '" + l + "' is a double curve");
    }

    // Negative definiteness via alternating leading principal minors, using
    // the tridiagonal recurrence d_k = a_k d_{k-1} - d_{k-2}.
    {
        Rat d_prev(1), d_cur(selfs[0]);
        int sign = -1;
        for (size_t k = 0; k < n; ++k) {
            if ((sign > 0) != d_cur.is_positive())
                fail(ErrorCode::NotContractibleChain, "chain matrix is not negative definite");
            if (k + 1 < n) {
                Rat d_next = Rat(selfs[k + 1]) * d_cur - d_prev;
                d_prev = d_cur;
                d_cur = d_next;
            }
            sign = -sign;
        }
    }

    ChainContraction record;
    record.component_id = component_id;
    record.chain = chain;
    record.result_singularity = hj_chain_to_singularity(selfs);
    {
        std::string id = "q(";
        for (size_t i = 0; i < n; ++i) id += (i ? "," : "") + chain[i];
        record.singularity_id = id + ")";
    }

    // Exact solve of M c = -(gamma . E_j) for each remaining curve gamma.
    auto solve = [&](const std::vector<Rat>& rhs) {
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1, Rat(0)));
        for (size_t i = 0; i < n; ++i) {
            a[i][i] = Rat(selfs[i]);
            if (i + 1 < n) { a[i][i + 1] = Rat(1); a[i + 1][i] = Rat(1); }
            a[i][n] = rhs[i];
        }
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            while (pivot < n && a[pivot][col].is_zero()) ++pivot;
            if (pivot == n) fail(ErrorCode::Internal, "singular chain matrix");
            std::swap(a[col], a[pivot]);
            for (size_t row = 0; row < n; ++row) {
                if (row == col || a[row][col].is_zero()) continue;
                Rat f = a[row][col] / a[col][col];
                for (size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
            }
        }
        std::vector<Rat> x(n);
        for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
        return x;
    };

    std::vector<Label> remaining;
    for (const Curve& c : cfg.curves)
        if (std::find(chain.begin(), chain.end(), c.label) == chain.end())
            remaining.push_back(c.label);

    std::map<Label, std::vector<Rat>> pullback;
    for (const Label& l : remaining) {
        std::vector<Rat> rhs(n);
        bool touches = false;
        for (size_t j = 0; j < n; ++j) {
            rhs[j] = -cfg.product(l, chain[j]);
            if (!rhs[j].is_zero()) touches = true;
        }
        pullback[l] = touches ? solve(rhs) : std::vector<Rat>(n, Rat(0));
        for (size_t j = 0; j < n; ++j)
            if (!pullback[l][j].is_zero())
                record.pullback_coeffs[{l, chain[j]}] = pullback[l][j];
    }

    // D may contain a chain curve only as an explicit reduced component; it
    // then pushes forward by dropping that component.
    for (const Label& l : chain) {
        Rat dc = cfg.d_class.coeff(l);
        if (!dc.is_zero() && dc != Rat(1))
            fail(ErrorCode::UnsupportedContraction,
                 "D has coefficient " + dc.str() + " on chain curve '" + l + "'");
    }

    LogPair out = pair;
    CurveConfig& ncfg = out.component(component_id);

    // New intersection numbers: gamma'.delta' = gamma.pullback(delta').
    std::map<std::pair<Label, Label>, Rat> new_products;
    std::map<Label, Rat> new_selfs;
    for (size_t i = 0; i < remaining.size(); ++i)
        for (size_t j = i; j < remaining.size(); ++j) {
            const Label& a = remaining[i];
            const Label& b = remaining[j];
            Rat v = cfg.product(a, b);
            for (size_t k = 0; k < n; ++k) v += pullback.at(b)[k] * cfg.product(a, chain[k]);
            if (i == j) new_selfs[a] = v;
            else new_products[{a, b}] = v;
        }

    std::vector<Label> neighbors;
    for (const Label& l : remaining) {
        bool touches = false;
        for (size_t j = 0; j < n; ++j)
            if (!cfg.product(l, chain[j]).is_zero()) touches = true;
        if (touches) neighbors.push_back(l);
    }
    // The divisor passes through the image point exactly when a remaining
    // component of D meets the contracted chain.
    bool divisor_through = false;
    for (const Label& l : neighbors)
        if (!ncfg.d_class.coeff(l).is_zero()) divisor_through = true;

    for (const Label& l : chain) ncfg.remove_curve(l);
    for (auto& [l, v] : new_selfs) ncfg.curve(l).self_int = v;
    for (auto& [key, v] : new_products) ncfg.set_product(key.first, key.second, v);

    SingularPoint sing;
    sing.id = record.singularity_id;
    sing.type = record.result_singularity;
    sing.incident = neighbors;
    std::sort(sing.incident.begin(), sing.incident.end());
    sing.divisor_through = divisor_through;
    ncfg.singularities.push_back(sing);

    ncfg.picard_rank -= static_cast<long long>(n);

    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [&](const MarkedPoint& p) {
                                        if (p.component != component_id) return false;
                                        for (const Label& l : chain)
                                            if (p.contains(l)) return true;
                                        return false;
                                    }),
                     out.points.end());
    return {out, record};
}

LogPair blow_down(const LogPair& pair, const std::string& component_id, const Label& label) {
    check_component(pair, component_id);
    const CurveConfig& cfg = pair.component(component_id);
    const Curve& e = cfg.curve(label);
    if (e.self_int != Rat(-1) || e.genus != 0)
        fail(ErrorCode::NotMinusOne,
             "curve '" + label + "' has self-intersection " + e.self_int.str());
    for (const Gluing& g : pair.gluings)
        if ((g.comp_a == component_id && g.curve_a == label) ||
            (g.comp_b == component_id && g.curve_b == label))
            fail(ErrorCode::NotMinusOne, "cannot blow down the double curve '" + label + "'");

    // Multiplicities of the incident curves at the blown-down point.
    std::map<Label, long long> mult;
    for (const Curve& c : cfg.curves) {
        if (c.label == label) continue;
        Rat m = cfg.product(c.label, label);
        if (m.is_zero()) continue;
        if (!m.is_integer() || m.is_negative())
            fail(ErrorCode::InconsistentIncidence,
                 "intersection " + c.label + "." + label + " = " + m.str());
        mult[c.label] = m.as_integer();
    }
    // K . E must be -1 for an honest exceptional curve.
    Rat ke = cfg.intersect(cfg.k_class, DivisorClass::single(label));
    if (ke != Rat(-1))
        fail(ErrorCode::InconsistentIncidence, "K." + label + " = " + ke.str() + ", expected -1");

    LogPair out = pair;
    CurveConfig& ncfg = out.component(component_id);

    // Push K - E forward. Consistency requires K - E to be a pull-back:
    // its coefficient on E must equal the pull-back weight. D pushes
    // forward by dropping its E coefficient.
    DivisorClass k_minus = ncfg.k_class;
    k_minus.add(label, Rat(-1));
    {
        Rat expected(0);
        for (const auto& [l, m] : mult) expected += k_minus.coeff(l) * Rat(m);
        if (k_minus.coeff(label) != expected)
            fail(ErrorCode::InconsistentIncidence,
                 "K - E is not a pull-back through '" + label + "'");
    }

    for (auto a = mult.begin(); a != mult.end(); ++a) {
        ncfg.curve(a->first).self_int += Rat(a->second * a->second);
        for (auto b = std::next(a); b != mult.end(); ++b)
            ncfg.set_product(a->first, b->first,
                             ncfg.product(a->first, b->first) + Rat(a->second * b->second));
    }
    ncfg.k_class = k_minus;
    ncfg.remove_curve(label);
    ncfg.picard_rank -= 1;

    out.points.erase(std::remove_if(out.points.begin(), out.points.end(),
                                    [&](const MarkedPoint& p) {
                                        return p.component == component_id && p.contains(label);
                                    }),
                     out.points.end());
    return out;
}

}  // namespace slq
