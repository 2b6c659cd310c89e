#pragma once

#include <string>
#include <vector>

#include "slq/rat.hpp"

namespace slq {

// Dense univariate polynomial over Rat in the local parameter t.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat c) { return Poly({std::move(c)}); }
    static Poly t_power(long long n);

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    Rat coeff(long long i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Order of vanishing at t = 0; -1 for the zero polynomial.
    long long valuation() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);

    // Exact division by t^n; every coefficient below n must vanish.
    Poly shift_down(long long n) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;  // "4*t^8", "-27", "0"

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Cubic form f = a S^3 + b S^2 T + c S T^2 + d T^3 with coefficients in
// Rat[t]: the local model of a Tschirnhausen divisor over a disc.
struct CubicForm {
    Poly a, b, c, d;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

// Discriminant b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d.
Poly discriminant(const CubicForm& f);

struct BranchDecomposition {
    long long base_multiplicity = 0;  // n: order of the common t-power
    CubicForm flat_part;              // f_H = f / t^n
    bool identity_holds = false;      // disc(f) == t^{4n} * disc(f_H)
};

// Splits off the non-flat part of the cover: n is the minimal valuation of
// the four coefficients, and the discriminants satisfy
// disc(f) = t^{4n} disc(f_H).
BranchDecomposition branch_decompose(const CubicForm& f);

// Maroni invariant |m - n| of a splitting O(m) + O(n).
Rat maroni(const Rat& m, const Rat& n);

// Log canonical threshold of an A_n curve singularity: 1/2 + 1/(n+1).
Rat lct_A(long long n);

// A branch point of a cover, or the record of a node with orbifold
// structure on a component of the base.
struct BranchPoint {
    std::string id;
    std::string component;
    long long multiplicity = 1;
};

struct CoverComponent {
    std::string id;
    long long nodes = 0;           // points meeting the rest of the base
    long long orbifold_order = 1;  // d in {1, 3}; 2 is impossible by parity
    Rat deg_low, deg_high;         // Tschirnhausen splitting degrees, low <= high
};

enum class CurveTopology {
    SmoothGenus4,        // irreducible smooth trigonal curve
    HyperellipticTail,   // P^1 union a hyperelliptic curve of genus 4
    GenusTwoWithLine,    // disjoint union of P^1 and a genus-2 double cover
    GenusOne,            // connected curve of arithmetic genus 1
    GenusTwoTotallyRamified,  // genus 2, triple cover totally ramified at the node
};

const char* curve_topology_name(CurveTopology t);

struct CoverDescriptor {
    std::vector<CoverComponent> components;
    std::vector<BranchPoint> branch_points;
    std::vector<CurveTopology> topology;  // one entry per component

    const CoverComponent& component(const std::string& id) const;
    long long branch_degree(const std::string& component_id) const;

    // Structural invariants: total branch degree 12; per component the
    // branch degree away from the nodes equals twice the Tschirnhausen
    // degree; orbifold orders in {1, 3}.
    std::vector<std::string> validate() const;
};

// Hassett stability of the weighted base (P, (1/6 + eps) br): every point
// multiplicity at most 5, and every component with m nodes and k branch
// points satisfies -2 + m + (1/6 + eps) k > 0.
bool hassett_stable(const CoverDescriptor& cover);

struct AmplenessResult {
    bool ample = false;
    std::string witness;  // extremal ray witness when not ample
    EpsLinear value;      // degree of K + (2/3 + eps) D on the witness
};

// Evaluates K + (2/3 + eps) D on the extremal rays of the component
// P(O(a) + O(b)): the fiber gives 3 eps, the extremal section gives
// (m + (a+b)/3 - 2) + eps (2a - b).
AmplenessResult ampleness_on_tschirnhausen(const CoverComponent& comp);

// A singularity of the divisor D, classified from branch multiplicities.
struct SingularityOfD {
    long long a_index = 1;  // A_n with n <= 4
    enum class Location { SmoothPoint, A1PointOfS, DoubleCurve } location = Location::SmoothPoint;
    long long delta = 0;

    std::string str() const;
    friend bool operator==(const SingularityOfD&, const SingularityOfD&) = default;
};

// Classifies the singularity of D at a point from the branch multiplicity
// and the multiplicity of the normalized cover: delta = (difference)/2;
// delta = 1 gives A1 or A2, delta = 2 gives A3 or A4, split by whether the
// normalization is ramified at the point.
SingularityOfD classify_D_singularity(long long branch_mult, long long normalized_branch_mult,
                                      bool normalization_ramified);

// True iff all branch multiplicities are at most 5 and c is at most the
// smallest log canonical threshold of the occurring divisor singularities.
bool slc_check(const CoverDescriptor& cover, const Rat& c);

enum class CaseTag {
    MaroniGeneral,
    StableChainThirdThird,
    MaroniSpecial,
    HyperellipticTail,
    F3F3,
    F1F1,
    F3F1,
};

const char* case_tag_name(CaseTag tag);

// Places a cover in the genus-4 list of Tschirnhausen pairs.
CaseTag classify_cover(const CoverDescriptor& cover);

}  // namespace slq
