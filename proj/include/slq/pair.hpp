#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slq/rat.hpp"
#include "slq/singularity.hpp"

namespace slq {

using Label = std::string;

enum class Role {
    InDivisorD,
    DoubleCurve,
    Fiber,
    Section,
    Exceptional,
    Directrix,
};

const char* role_name(Role role);
std::optional<Role> parse_role(const std::string& name);

struct Curve {
    Label label;
    Rat self_int;
    long long genus = 0;
    std::set<Role> roles;

    bool has_role(Role r) const { return roles.count(r) != 0; }

    friend bool operator==(const Curve&, const Curve&) = default;
};

// Formal Rat-combination of tracked curves, finite support, zero
// coefficients never stored.
class DivisorClass {
public:
    DivisorClass() = default;

    static DivisorClass single(const Label& curve, Rat coeff = Rat(1));

    Rat coeff(const Label& curve) const;
    void set(const Label& curve, Rat coeff);
    void add(const Label& curve, const Rat& coeff);
    void erase(const Label& curve) { coeffs_.erase(curve); }

    bool empty() const { return coeffs_.empty(); }
    const std::map<Label, Rat>& terms() const { return coeffs_; }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rat& c, const DivisorClass& d);

    // Renders e.g. "-2*sigma - 6*F", "0".
    std::string str() const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    std::map<Label, Rat> coeffs_;
};

// A quotient singularity sitting on one component, with the tracked curves
// passing through it.
struct SingularPoint {
    std::string id;
    QuotientSingularity type;
    std::vector<Label> incident;    // sorted curve labels through the point
    bool divisor_through = false;   // some component of D passes through it

    friend bool operator==(const SingularPoint&, const SingularPoint&) = default;
};

struct OrbifoldMarker {
    std::string point;
    long long order = 1;
    friend bool operator==(const OrbifoldMarker&, const OrbifoldMarker&) = default;
};

// One irreducible component of the surface: a curated set of curves with an
// exact intersection form, the intrinsic canonical class and the restriction
// of D written in that set, plus singularity records.
struct CurveConfig {
    std::string id;
    std::vector<Curve> curves;                       // insertion order kept
    std::map<std::pair<Label, Label>, Rat> products; // key (min,max), distinct labels
    long long picard_rank = 1;
    DivisorClass k_class;  // intrinsic canonical of the component
    DivisorClass d_class;  // restriction of the divisor D, effective
    std::vector<SingularPoint> singularities;
    std::vector<OrbifoldMarker> orbifold_markers;

    bool has_curve(const Label& l) const;
    const Curve& curve(const Label& l) const;
    Curve& curve(const Label& l);

    // Pairing of two tracked curves (self-intersection on the diagonal).
    Rat product(const Label& a, const Label& b) const;
    void set_product(const Label& a, const Label& b, Rat value);

    // Bilinear extension of the intersection form to divisor classes.
    Rat intersect(const DivisorClass& a, const DivisorClass& b) const;

    void add_curve(Curve curve);
    void remove_curve(const Label& l);

    friend bool operator==(const CurveConfig&, const CurveConfig&) = default;
};

// A point marked on a component, with the tracked curves through it. Curves
// listed together meet pairwise transversely at the point unless a tangency
// entry raises their local contact order.
struct Tangency {
    Label a, b;            // a < b
    long long order = 2;   // local intersection multiplicity at the point
    friend bool operator==(const Tangency&, const Tangency&) = default;
};

struct MarkedPoint {
    std::string id;
    std::string component;
    std::vector<Label> curves;  // sorted
    std::vector<Tangency> tangencies;

    bool contains(const Label& l) const;
    long long contact(const Label& a, const Label& b) const;  // 0 if either absent

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

// Identification of a curve on one component with a curve on another: the
// double curve of a reducible surface. A non-trivial node_order marks a
// cyclic orbifold point of that order on the glued curve.
struct Gluing {
    std::string comp_a;
    Label curve_a;
    std::string comp_b;
    Label curve_b;
    long long node_order = 1;

    friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct LogPair {
    std::vector<CurveConfig> components;
    std::vector<Gluing> gluings;
    std::vector<MarkedPoint> points;
    std::vector<GluedPoint> nc_points;
    std::optional<std::string> case_tag;

    bool has_component(const std::string& id) const;
    const CurveConfig& component(const std::string& id) const;
    CurveConfig& component(const std::string& id);

    const MarkedPoint* find_point(const std::string& id, const std::string& comp) const;

    // Labels on `comp` that are glued to another component.
    std::vector<Label> double_curves(const std::string& comp) const;

    // K_X restricted to the component: intrinsic canonical plus the double
    // curves lying on it.
    DivisorClass log_canonical(const std::string& comp) const;

    // (K_X + w D)|comp . curve as b + a*eps with w = 2/3 + eps.
    EpsLinear log_degree(const std::string& comp, const Label& curve) const;

    friend bool operator==(const LogPair&, const LogPair&) = default;
};

// Pairs two divisor classes supported on tracked curves of a single
// component of `pair`. Classes spread over several components are rejected:
// cross-component products are only defined through gluing records.
Rat class_intersect(const DivisorClass& a, const DivisorClass& b, const LogPair& pair);

// Self-intersection of the canonical class of the whole surface: the sum
// over components of (K + double curves)^2. Degenerations of the quadric
// keep this equal to 8.
Rat total_k_squared(const LogPair& pair);

// Self-intersection of the divisor: the sum over components of the squares
// of the restrictions. Degenerations of a bidegree-(3,3) curve keep this
// equal to 18.
Rat total_d_squared(const LogPair& pair);

// Checks every structural invariant of the pair and returns the list of
// violations; an empty report means the pair is valid. The conservation law
// (3K + 2D) . curve = 0, with K the log restriction, is part of the check.
std::vector<std::string> validate_pair(const LogPair& pair);

}  // namespace slq
