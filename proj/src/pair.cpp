#include "slq/pair.hpp"

#include <algorithm>
#include <sstream>

#include "slq/error.hpp"

namespace slq {

const char* role_name(Role role) {
    switch (role) {
        case Role::InDivisorD: return "in_divisor_d";
        case Role::DoubleCurve: return "double_curve";
        case Role::Fiber: return "fiber";
        case Role::Section: return "section";
        case Role::Exceptional: return "exceptional";
        case Role::Directrix: return "directrix";
    }
    return "?";
}

std::optional<Role> parse_role(const std::string& name) {
    for (Role r : {Role::InDivisorD, Role::DoubleCurve, Role::Fiber, Role::Section,
                   Role::Exceptional, Role::Directrix})
        if (name == role_name(r)) return r;
    return std::nullopt;
}

DivisorClass DivisorClass::single(const Label& curve, Rat coeff) {
    DivisorClass d;
    d.set(curve, std::move(coeff));
    return d;
}

Rat DivisorClass::coeff(const Label& curve) const {
    auto it = coeffs_.find(curve);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void DivisorClass::set(const Label& curve, Rat coeff) {
    if (coeff.is_zero()) coeffs_.erase(curve);
    else coeffs_[curve] = std::move(coeff);
}

void DivisorClass::add(const Label& curve, const Rat& coeff) {
    set(curve, this->coeff(curve) + coeff);
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    for (const auto& [l, c] : o.coeffs_) add(l, c);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    for (const auto& [l, c] : o.coeffs_) add(l, -c);
    return *this;
}

DivisorClass operator*(const Rat& c, const DivisorClass& d) {
    DivisorClass r;
    if (c.is_zero()) return r;
    for (const auto& [l, v] : d.terms()) r.set(l, c * v);
    return r;
}

std::string DivisorClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : coeffs_) {
        Rat a = c.abs();
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (a == Rat(1)) os << l;
        else os << a.str() << "*" << l;
    }
    return os.str();
}

bool CurveConfig::has_curve(const Label& l) const {
    return std::any_of(curves.begin(), curves.end(),
                       [&](const Curve& c) { return c.label == l; });
}

const Curve& CurveConfig::curve(const Label& l) const {
    for (const Curve& c : curves)
        if (c.label == l) return c;
    fail(ErrorCode::MissingCurve, "no curve '" + l + "' on component '" + id + "'");
}

Curve& CurveConfig::curve(const Label& l) {
    for (Curve& c : curves)
        if (c.label == l) return c;
    fail(ErrorCode::MissingCurve, "no curve '" + l + "' on component '" + id + "'");
}

Rat CurveConfig::product(const Label& a, const Label& b) const {
    if (a == b) return curve(a).self_int;
    if (!has_curve(a)) fail(ErrorCode::MissingCurve, "no curve '" + a + "' on '" + id + "'");
    if (!has_curve(b)) fail(ErrorCode::MissingCurve, "no curve '" + b + "' on '" + id + "'");
    auto it = products.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    return it == products.end() ? Rat(0) : it->second;
}

void CurveConfig::set_product(const Label& a, const Label& b, Rat value) {
    if (a == b) {
        curve(a).self_int = std::move(value);
        return;
    }
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (value.is_zero()) products.erase(key);
    else products[key] = std::move(value);
}

Rat CurveConfig::intersect(const DivisorClass& a, const DivisorClass& b) const {
    Rat total(0);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) total += ca * cb * product(la, lb);
    return total;
}

void CurveConfig::add_curve(Curve c) {
    if (has_curve(c.label))
        fail(ErrorCode::Internal, "duplicate curve '" + c.label + "' on '" + id + "'");
    curves.push_back(std::move(c));
}

void CurveConfig::remove_curve(const Label& l) {
    curves.erase(std::remove_if(curves.begin(), curves.end(),
                                [&](const Curve& c) { return c.label == l; }),
                 curves.end());
    for (auto it = products.begin(); it != products.end();)
        it = (it->first.first == l || it->first.second == l) ? products.erase(it) : ++it;
    k_class.erase(l);
    d_class.erase(l);
}

bool MarkedPoint::contains(const Label& l) const {
    return std::find(curves.begin(), curves.end(), l) != curves.end();
}

long long MarkedPoint::contact(const Label& a, const Label& b) const {
    if (!contains(a) || !contains(b) || a == b) return 0;
    for (const Tangency& t : tangencies)
        if ((t.a == a && t.b == b) || (t.a == b && t.b == a)) return t.order;
    return 1;
}

bool LogPair::has_component(const std::string& cid) const {
    return std::any_of(components.begin(), components.end(),
                       [&](const CurveConfig& c) { return c.id == cid; });
}

const CurveConfig& LogPair::component(const std::string& cid) const {
    for (const CurveConfig& c : components)
        if (c.id == cid) return c;
    fail(ErrorCode::MissingCurve, "no component '" + cid + "'");
}

CurveConfig& LogPair::component(const std::string& cid) {
    for (CurveConfig& c : components)
        if (c.id == cid) return c;
    fail(ErrorCode::MissingCurve, "no component '" + cid + "'");
}

const MarkedPoint* LogPair::find_point(const std::string& id, const std::string& comp) const {
    for (const MarkedPoint& p : points)
        if (p.id == id && p.component == comp) return &p;
    return nullptr;
}

std::vector<Label> LogPair::double_curves(const std::string& comp) const {
    std::vector<Label> out;
    for (const Gluing& g : gluings) {
        if (g.comp_a == comp) out.push_back(g.curve_a);
        if (g.comp_b == comp) out.push_back(g.curve_b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DivisorClass LogPair::log_canonical(const std::string& comp) const {
    DivisorClass k = component(comp).k_class;
    for (const Label& b : double_curves(comp)) k.add(b, Rat(1));
    return k;
}

EpsLinear LogPair::log_degree(const std::string& comp, const Label& curve) const {
    const CurveConfig& cfg = component(comp);
    DivisorClass gamma = DivisorClass::single(curve);
    Rat kd = cfg.intersect(log_canonical(comp), gamma);
    Rat dd = cfg.intersect(cfg.d_class, gamma);
    return {kd + Rat(2, 3) * dd, dd};
}

Rat class_intersect(const DivisorClass& a, const DivisorClass& b, const LogPair& pair) {
    auto home = [&](const DivisorClass& d, const char* which) -> const CurveConfig* {
        const CurveConfig* found = nullptr;
        for (const auto& [l, c] : d.terms()) {
            const CurveConfig* owner = nullptr;
            for (const CurveConfig& cfg : pair.components)
                if (cfg.has_curve(l)) { owner = &cfg; break; }
            if (!owner)
                fail(ErrorCode::MissingCurve, std::string("class ") + which + ": unknown curve '" + l + "'");
            if (found && owner != found)
                fail(ErrorCode::UntrackedIntersection,
                     std::string("class ") + which + " spreads over components '" + found->id +
                         "' and '" + owner->id + "'");
            found = owner;
        }
        return found;
    };
    const CurveConfig* ca = home(a, "a");
    const CurveConfig* cb = home(b, "b");
    if (!ca || !cb) return Rat(0);  // a zero class pairs to zero with anything
    if (ca != cb)
        fail(ErrorCode::UntrackedIntersection,
             "no tracked pairing between components '" + ca->id + "' and '" + cb->id + "'");
    return ca->intersect(a, b);
}

Rat total_k_squared(const LogPair& pair) {
    Rat total(0);
    for (const CurveConfig& cfg : pair.components) {
        DivisorClass k = pair.log_canonical(cfg.id);
        total += cfg.intersect(k, k);
    }
    return total;
}

Rat total_d_squared(const LogPair& pair) {
    Rat total(0);
    for (const CurveConfig& cfg : pair.components)
        total += cfg.intersect(cfg.d_class, cfg.d_class);
    return total;
}

std::vector<std::string> validate_pair(const LogPair& pair) {
    std::vector<std::string> report;
    auto flag = [&](std::string msg) { report.push_back(std::move(msg)); };

    // Label bookkeeping: labels are unique within the pair, except that a
    // double curve appears on exactly the two components it glues.
    std::map<Label, std::vector<std::string>> owners;
    for (const CurveConfig& cfg : pair.components)
        for (const Curve& c : cfg.curves) owners[c.label].push_back(cfg.id);
    std::map<Label, long long> glue_count;
    for (const Gluing& g : pair.gluings) {
        if (!pair.has_component(g.comp_a) || !pair.has_component(g.comp_b)) {
            flag("gluing references missing component");
            continue;
        }
        if (g.comp_a == g.comp_b) flag("self-gluing on component '" + g.comp_a + "'");
        if (g.curve_a != g.curve_b)
            flag("glued curves must share a label: '" + g.curve_a + "' vs '" + g.curve_b + "'");
        if (!pair.component(g.comp_a).has_curve(g.curve_a) ||
            !pair.component(g.comp_b).has_curve(g.curve_b)) {
            flag("gluing references missing curve '" + g.curve_a + "'");
            continue;
        }
        ++glue_count[g.curve_a];
    }
    for (const auto& [label, comps] : owners) {
        bool doubled = false;
        for (const CurveConfig& cfg : pair.components)
            if (cfg.has_curve(label) && cfg.curve(label).has_role(Role::DoubleCurve))
                doubled = true;
        if (doubled) {
            if (comps.size() != 2)
                flag("double curve '" + label + "' must lie on exactly two components");
            if (glue_count[label] != 1)
                flag("double curve '" + label + "' needs exactly one gluing record");
        } else if (comps.size() != 1) {
            flag("curve label '" + label + "' appears on several components without gluing");
        }
    }

    for (const CurveConfig& cfg : pair.components) {
        // Intersection form sanity.
        for (const auto& [key, value] : cfg.products) {
            if (!cfg.has_curve(key.first) || !cfg.has_curve(key.second)) {
                flag("component '" + cfg.id + "': product references missing curve");
                continue;
            }
            if (value.is_negative())
                flag("component '" + cfg.id + "': negative product " + key.first + "." +
                     key.second + " = " + value.str());
        }

        // Picard rank bound: the span of the tracked negative classes, read
        // off the rank of their Gram matrix, fits into the lattice.
        {
            std::vector<Label> negatives;
            for (const Curve& c : cfg.curves)
                if (c.self_int.is_negative()) negatives.push_back(c.label);
            size_t n = negatives.size();
            std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i)
                for (size_t j = 0; j < n; ++j) {
                    if (!cfg.has_curve(negatives[i]) || !cfg.has_curve(negatives[j])) {
                        ok = false;
                        break;
                    }
                    gram[i][j] = cfg.product(negatives[i], negatives[j]);
                }
            if (ok) {
                size_t rank = 0;
                for (size_t col = 0; col < n && rank < n; ++col) {
                    size_t pivot = rank;
                    while (pivot < n && gram[pivot][col].is_zero()) ++pivot;
                    if (pivot == n) continue;
                    std::swap(gram[rank], gram[pivot]);
                    for (size_t row = 0; row < n; ++row) {
                        if (row == rank || gram[row][col].is_zero()) continue;
                        Rat f = gram[row][col] / gram[rank][col];
                        for (size_t k = 0; k < n; ++k) gram[row][k] -= f * gram[rank][k];
                    }
                    ++rank;
                }
                if (static_cast<long long>(rank) > cfg.picard_rank)
                    flag("component '" + cfg.id + "': " + std::to_string(rank) +
                         " independent negative classes exceed picard rank " +
                         std::to_string(cfg.picard_rank));
            }
        }

        // D is effective and matches the roles.
        for (const auto& [l, c] : cfg.d_class.terms()) {
            if (!cfg.has_curve(l)) {
                flag("component '" + cfg.id + "': D references missing curve '" + l + "'");
                continue;
            }
            if (c.is_negative()) flag("component '" + cfg.id + "': D not effective at '" + l + "'");
            if (!cfg.curve(l).has_role(Role::InDivisorD))
                flag("component '" + cfg.id + "': curve '" + l + "' in D lacks the role flag");
        }
        for (const Curve& c : cfg.curves)
            if (c.has_role(Role::InDivisorD) && cfg.d_class.coeff(c.label).is_zero())
                flag("component '" + cfg.id + "': curve '" + c.label +
                     "' flagged in D but has coefficient 0");
        for (const auto& [l, c] : cfg.k_class.terms())
            if (!cfg.has_curve(l))
                flag("component '" + cfg.id + "': K references missing curve '" + l + "'");

        // Conservation: (3 K_log + 2 D) . curve = 0 for every tracked curve.
        DivisorClass test = Rat(3) * pair.log_canonical(cfg.id) + Rat(2) * cfg.d_class;
        for (const Curve& c : cfg.curves) {
            Rat v = cfg.intersect(test, DivisorClass::single(c.label));
            if (!v.is_zero())
                flag("component '" + cfg.id + "': (3K+2D)." + c.label + " = " + v.str());
        }

        for (const SingularPoint& s : cfg.singularities)
            for (const Label& l : s.incident)
                if (!cfg.has_curve(l))
                    flag("component '" + cfg.id + "': singularity '" + s.id +
                         "' references missing curve '" + l + "'");
    }

    for (const MarkedPoint& p : pair.points) {
        if (!pair.has_component(p.component)) {
            flag("point '" + p.id + "' on missing component '" + p.component + "'");
            continue;
        }
        const CurveConfig& cfg = pair.component(p.component);
        for (const Label& l : p.curves)
            if (!cfg.has_curve(l))
                flag("point '" + p.id + "' references missing curve '" + l + "'");
        for (const Tangency& t : p.tangencies) {
            if (!p.contains(t.a) || !p.contains(t.b))
                flag("point '" + p.id + "': tangency references curves not at the point");
            if (t.order < 2) flag("point '" + p.id + "': tangency order must be >= 2");
        }
        // Local contact orders cannot exceed the tracked product.
        for (size_t i = 0; i < p.curves.size(); ++i)
            for (size_t j = i + 1; j < p.curves.size(); ++j) {
                const Label& a = p.curves[i];
                const Label& b = p.curves[j];
                if (!cfg.has_curve(a) || !cfg.has_curve(b)) continue;
                Rat prod = cfg.product(a, b);
                if (prod < Rat(p.contact(a, b)))
                    flag("point '" + p.id + "': contact of " + a + "," + b +
                         " exceeds tracked product " + prod.str());
            }
    }

    for (const GluedPoint& g : pair.nc_points) {
        if (!pair.has_component(g.branch_x) || !pair.has_component(g.branch_y))
            flag("glued point '" + g.id + "' references missing component");
        if (g.order < 2) flag("glued point '" + g.id + "': order must be >= 2");
    }

    return report;
}

}  // namespace slq
