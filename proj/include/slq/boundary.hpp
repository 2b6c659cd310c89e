#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slq/rat.hpp"

namespace slq {

// Boundary strata of the compactified moduli space, indexed by the Maroni
// data of the covers they come from. Z33 and the orbifold chain stratum
// Z_{1/3,1/3} are the same locus.
enum class Stratum { Interior, Z0, Z2, Z4, Z33, Z11, Z13 };

const char* stratum_name(Stratum s);

// Codimension inside the moduli space: the four divisorial strata have
// codimension 1, Z11 has 3 and Z13 has 2.
int stratum_codimension(Stratum s);

// Containments that make the boundary divisorial: Z11 in Z2 and Z13 in Z4.
std::optional<Stratum> stratum_containment(Stratum s);

// Alternate name of the stratum when one exists (Z33 = Z_{1/3,1/3}).
std::optional<std::string> stratum_alias(Stratum s);

// Number of singular members of a pencil of curves of the given genus with
// the given number of base points on a surface of Euler characteristic
// chi_surface: base_points + chi_surface - 2 (2 - 2 genus).
long long pencil_singular_count(long long base_points, long long genus,
                                long long chi_surface);

// Entry of the test-curve intersection matrix: an exact value, a value the
// construction does not determine, or an undetermined but non-zero value.
struct MatrixEntry {
    enum class Kind { Known, Unknown, NonzeroUnknown } kind = Kind::Known;
    Rat value;

    static MatrixEntry known(Rat v) { return {Kind::Known, std::move(v)}; }
    static MatrixEntry unknown() { return {Kind::Unknown, Rat(0)}; }
    static MatrixEntry nonzero() { return {Kind::NonzeroUnknown, Rat(0)}; }

    bool certainly_zero() const { return kind == Kind::Known && value.is_zero(); }
    bool certainly_nonzero() const {
        return kind == Kind::NonzeroUnknown || (kind == Kind::Known && !value.is_zero());
    }

    std::string str() const;

    friend MatrixEntry operator*(const MatrixEntry& a, const MatrixEntry& b);
    friend MatrixEntry operator+(const MatrixEntry& a, const MatrixEntry& b);
    friend MatrixEntry operator-(const MatrixEntry& a);
    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Intersection matrix of the three test curves against the boundary
// divisors (Z0, Z33, Z4).
struct TestCurveMatrix {
    std::array<std::string, 3> rows{"C1", "C2", "C3"};
    std::array<std::string, 3> cols{"Z0", "Z33", "Z4"};
    std::array<std::array<MatrixEntry, 3>, 3> entries;

    MatrixEntry determinant() const;
    // Non-zero under every substitution respecting the entry kinds.
    bool certainly_invertible() const { return determinant().certainly_nonzero(); }
};

TestCurveMatrix testcurve_matrix();

// The two lattice quadrilaterals whose union presents the non-normal toric
// surface of the reducible chain row.
struct ChainPolytope {
    std::vector<std::array<long long, 2>> first;
    std::vector<std::array<long long, 2>> second;
    // The edge shared by the two quadrilaterals.
    std::array<std::array<long long, 2>, 2> shared_edge;
};

ChainPolytope chain_polytope();

}  // namespace slq
