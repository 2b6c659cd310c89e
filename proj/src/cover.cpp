#include "slq/cover.hpp"

#include <algorithm>
#include <sstream>

#include "slq/error.hpp"

namespace slq {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::t_power(long long n) {
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = Rat(1);
    return Poly(std::move(c));
}

Rat Poly::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

long long Poly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<long long>(i);
    return -1;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) {
    Poly r = p;
    for (Rat& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

Poly Poly::shift_down(long long n) const {
    if (n == 0 || is_zero()) return *this;
    if (valuation() < n) fail(ErrorCode::Internal, "polynomial not divisible by t^n");
    return Poly(std::vector<Rat>(coeffs_.begin() + n, coeffs_.end()));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << "-";
        first = false;
        Rat a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (a != Rat(1)) os << a.str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly discriminant(const CubicForm& f) {
    const Poly &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return b * b * c * c - Rat(4) * (a * c * c * c) - Rat(4) * (b * b * b * d) -
           Rat(27) * (a * a * d * d) + Rat(18) * (a * b * c * d);
}

BranchDecomposition branch_decompose(const CubicForm& f) {
    if (f.is_zero()) fail(ErrorCode::Internal, "zero cubic form");
    long long n = -1;
    for (const Poly* p : {&f.a, &f.b, &f.c, &f.d}) {
        if (p->is_zero()) continue;
        long long v = p->valuation();
        n = (n < 0) ? v : std::min(n, v);
    }
    auto flat = [&](const Poly& p) { return p.is_zero() ? Poly{} : p.shift_down(n); };
    BranchDecomposition out;
    out.base_multiplicity = n;
    out.flat_part = {flat(f.a), flat(f.b), flat(f.c), flat(f.d)};
    out.identity_holds = discriminant(f) == Poly::t_power(4 * n) * discriminant(out.flat_part);
    if (!out.identity_holds)
        fail(ErrorCode::Internal, "discriminant identity disc(f) = t^{4n} disc(f_H) failed");
    return out;
}

Rat maroni(const Rat& m, const Rat& n) { return (m - n).abs(); }

Rat lct_A(long long n) {
    if (n < 1) fail(ErrorCode::Internal, "A_n requires n >= 1");
    return Rat(1, 2) + Rat(1, n + 1);
}

const char* curve_topology_name(CurveTopology t) {
    switch (t) {
        case CurveTopology::SmoothGenus4: return "smooth-genus-4";
        case CurveTopology::HyperellipticTail: return "hyperelliptic-tail";
        case CurveTopology::GenusTwoWithLine: return "genus-2-with-line";
        case CurveTopology::GenusOne: return "genus-1";
        case CurveTopology::GenusTwoTotallyRamified: return "genus-2-totally-ramified";
    }
    return "?";
}

const CoverComponent& CoverDescriptor::component(const std::string& id) const {
    for (const CoverComponent& c : components)
        if (c.id == id) return c;
    fail(ErrorCode::MissingCurve, "no cover component '" + id + "'");
}

long long CoverDescriptor::branch_degree(const std::string& component_id) const {
    long long total = 0;
    for (const BranchPoint& b : branch_points)
        if (b.component == component_id) total += b.multiplicity;
    return total;
}

std::vector<std::string> CoverDescriptor::validate() const {
    std::vector<std::string> report;
    if (components.empty()) report.push_back("no components");
    if (topology.size() != components.size())
        report.push_back("topology list must match the component list");
    long long total = 0;
    for (const CoverComponent& c : components) {
        if (c.orbifold_order != 1 && c.orbifold_order != 3)
            report.push_back("component '" + c.id + "': orbifold order " +
                             std::to_string(c.orbifold_order) +
                             " (only 1 and 3 occur; 2 is excluded by parity)");
        if (c.deg_low > c.deg_high)
            report.push_back("component '" + c.id + "': degrees out of order");
        // Away from the nodes, deg br = 2 deg E on each component.
        Rat expected = Rat(2) * (c.deg_low + c.deg_high);
        long long on_comp = branch_degree(c.id);
        total += on_comp;
        if (Rat(on_comp) != expected)
            report.push_back("component '" + c.id + "': branch degree " +
                             std::to_string(on_comp) + " does not match 2 deg E = " +
                             expected.str());
    }
    if (total != 12 && report.empty())
        report.push_back("total branch degree " + std::to_string(total) + ", expected 12");
    for (const BranchPoint& b : branch_points) {
        bool found = std::any_of(components.begin(), components.end(),
                                 [&](const CoverComponent& c) { return c.id == b.component; });
        if (!found) report.push_back("branch point '" + b.id + "' on missing component");
        if (b.multiplicity < 1) report.push_back("branch point '" + b.id + "': bad multiplicity");
    }
    return report;
}

bool hassett_stable(const CoverDescriptor& cover) {
    for (const BranchPoint& b : cover.branch_points)
        if (b.multiplicity > 5) return false;  // 6 (1/6 + eps) > 1
    for (const CoverComponent& c : cover.components) {
        long long k = cover.branch_degree(c.id);
        // -2 + m + (1/6 + eps) k > 0 in the sign semantics of EpsLinear.
        EpsLinear value(Rat(-2) + Rat(c.nodes) + Rat(k, 6), Rat(k));
        if (!value.is_positive()) return false;
    }
    return true;
}

AmplenessResult ampleness_on_tschirnhausen(const CoverComponent& comp) {
    const Rat &a = comp.deg_low, &b = comp.deg_high;
    Rat n = a + b;
    AmplenessResult out;
    // On the fiber: 3 eps, always positive. On the extremal section
    // sigma ~ zeta - b F: (m + n/3 - 2) + eps (2a - b).
    EpsLinear on_section(Rat(comp.nodes) + n / Rat(3) - Rat(2), Rat(2) * a - b);
    out.value = on_section;
    out.ample = on_section.is_positive();
    if (!out.ample) out.witness = "sigma ~ zeta - (" + b.str() + ")F";
    return out;
}

std::string SingularityOfD::str() const {
    std::string s = "A" + std::to_string(a_index);
    switch (location) {
        case Location::SmoothPoint: break;
        case Location::A1PointOfS: s += " at A1 point"; break;
        case Location::DoubleCurve: s += " on double curve"; break;
    }
    return s;
}

SingularityOfD classify_D_singularity(long long branch_mult, long long normalized_branch_mult,
                                      bool normalization_ramified) {
    if (branch_mult < normalized_branch_mult)
        fail(ErrorCode::Internal, "branch multiplicity below its normalization");
    if ((branch_mult - normalized_branch_mult) % 2 != 0)
        fail(ErrorCode::Internal, "multiplicity drop must be even");
    long long delta = (branch_mult - normalized_branch_mult) / 2;
    if (delta > 2)
        fail(ErrorCode::ExceedsMultiplicityBound,
             "delta = " + std::to_string(delta) + " exceeds 2 (branch multiplicity above 5)");
    if (delta == 0) fail(ErrorCode::Internal, "smooth point is not a singularity of D");
    SingularityOfD out;
    out.delta = delta;
    if (delta == 1) out.a_index = normalization_ramified ? 2 : 1;  // cusp or node
    else out.a_index = normalization_ramified ? 4 : 3;             // rhamphoid cusp or tacnode
    return out;
}

bool slc_check(const CoverDescriptor& cover, const Rat& c) {
    // Over a point of branch multiplicity mu the worst local model of the
    // pair is: the divisor A_{mu-1} singularity when the cover stays flat,
    // or a fiber component with a node (lct 1, mu >= 4) or a tacnode
    // (lct 3/4, mu = 5). The flat A_{mu-1} bound is the smaller one in
    // every admissible case.
    Rat bound(1);
    for (const BranchPoint& b : cover.branch_points) {
        if (b.multiplicity > 5) return false;
        if (b.multiplicity >= 2) bound = std::min(bound, lct_A(b.multiplicity - 1));
    }
    return c <= bound;
}

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::MaroniGeneral: return "maroni-general";
        case CaseTag::StableChainThirdThird: return "stable-chain-1/3-1/3";
        case CaseTag::MaroniSpecial: return "maroni-special";
        case CaseTag::HyperellipticTail: return "hyperelliptic";
        case CaseTag::F3F3: return "f3f3";
        case CaseTag::F1F1: return "f1f1";
        case CaseTag::F3F1: return "f3f1";
    }
    return "?";
}

CaseTag classify_cover(const CoverDescriptor& cover) {
    auto report = cover.validate();
    if (!report.empty())
        fail(ErrorCode::NotInGenus4List, "invalid cover: " + report.front());
    if (!hassett_stable(cover))
        fail(ErrorCode::NotInGenus4List, "base curve is not Hassett stable");

    if (cover.components.size() == 1) {
        const CoverComponent& c = cover.components[0];
        if (c.nodes != 0 || c.orbifold_order != 1)
            fail(ErrorCode::NotInGenus4List, "irreducible base must be schematic without nodes");
        Rat m = maroni(c.deg_low, c.deg_high);
        if (m == Rat(0) && cover.topology[0] == CurveTopology::SmoothGenus4)
            return CaseTag::MaroniGeneral;
        if (m == Rat(2) && cover.topology[0] == CurveTopology::SmoothGenus4)
            return CaseTag::MaroniSpecial;
        if (m == Rat(4) && cover.topology[0] == CurveTopology::HyperellipticTail)
            return CaseTag::HyperellipticTail;
        fail(ErrorCode::NotInGenus4List,
             "no genus-4 case with Maroni invariant " + m.str() + " and topology " +
                 curve_topology_name(cover.topology[0]));
    }
    if (cover.components.size() == 2) {
        const CoverComponent& c1 = cover.components[0];
        const CoverComponent& c2 = cover.components[1];
        if (c1.nodes != 1 || c2.nodes != 1)
            fail(ErrorCode::NotInGenus4List, "two-component base must be a chain");
        if (c1.orbifold_order == 3 && c2.orbifold_order == 3) {
            if (maroni(c1.deg_low, c1.deg_high) == Rat(1, 3) &&
                maroni(c2.deg_low, c2.deg_high) == Rat(1, 3) &&
                cover.topology[0] == CurveTopology::GenusTwoTotallyRamified &&
                cover.topology[1] == CurveTopology::GenusTwoTotallyRamified)
                return CaseTag::StableChainThirdThird;
            fail(ErrorCode::NotInGenus4List, "orbifold chain outside the genus-4 list");
        }
        if (c1.orbifold_order != 1 || c2.orbifold_order != 1)
            fail(ErrorCode::NotInGenus4List, "mixed orbifold orders are not admissible");
        auto leg = [&](const CoverComponent& c, CurveTopology t) -> char {
            Rat m = maroni(c.deg_low, c.deg_high);
            if (m == Rat(3) && t == CurveTopology::GenusTwoWithLine) return '3';
            if (m == Rat(1) && t == CurveTopology::GenusOne) return '1';
            fail(ErrorCode::NotInGenus4List,
                 "chain component with Maroni invariant " + m.str() + " and topology " +
                     curve_topology_name(t) + " is not in the genus-4 list");
        };
        char l1 = leg(c1, cover.topology[0]);
        char l2 = leg(c2, cover.topology[1]);
        if (l1 == '3' && l2 == '3') return CaseTag::F3F3;
        if (l1 == '1' && l2 == '1') return CaseTag::F1F1;
        return CaseTag::F3F1;
    }
    fail(ErrorCode::NotInGenus4List,
         "base with " + std::to_string(cover.components.size()) + " components");
}

}  // namespace slq
