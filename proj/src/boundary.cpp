#include "slq/boundary.hpp"

#include "slq/error.hpp"

namespace slq {

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Interior: return "interior";
        case Stratum::Z0: return "Z0";
        case Stratum::Z2: return "Z2";
        case Stratum::Z4: return "Z4";
        case Stratum::Z33: return "Z3,3";
        case Stratum::Z11: return "Z1,1";
        case Stratum::Z13: return "Z1,3";
    }
    return "?";
}

int stratum_codimension(Stratum s) {
    switch (s) {
        case Stratum::Interior: return 0;
        case Stratum::Z0:
        case Stratum::Z2:
        case Stratum::Z4:
        case Stratum::Z33: return 1;
        case Stratum::Z11: return 3;
        case Stratum::Z13: return 2;
    }
    return -1;
}

std::optional<Stratum> stratum_containment(Stratum s) {
    if (s == Stratum::Z11) return Stratum::Z2;
    if (s == Stratum::Z13) return Stratum::Z4;
    return std::nullopt;
}

std::optional<std::string> stratum_alias(Stratum s) {
    if (s == Stratum::Z33) return "Z1/3,1/3";
    return std::nullopt;
}

long long pencil_singular_count(long long base_points, long long genus,
                                long long chi_surface) {
    return base_points + chi_surface - 2 * (2 - 2 * genus);
}

std::string MatrixEntry::str() const {
    switch (kind) {
        case Kind::Known: return value.str();
        case Kind::Unknown: return "?";
        case Kind::NonzeroUnknown: return "*";
    }
    return "?";
}

MatrixEntry operator*(const MatrixEntry& a, const MatrixEntry& b) {
    if (a.certainly_zero() || b.certainly_zero()) return MatrixEntry::known(Rat(0));
    if (a.kind == MatrixEntry::Kind::Known && b.kind == MatrixEntry::Kind::Known)
        return MatrixEntry::known(a.value * b.value);
    if (a.certainly_nonzero() && b.certainly_nonzero()) return MatrixEntry::nonzero();
    return MatrixEntry::unknown();
}

MatrixEntry operator+(const MatrixEntry& a, const MatrixEntry& b) {
    if (a.kind == MatrixEntry::Kind::Known && b.kind == MatrixEntry::Kind::Known)
        return MatrixEntry::known(a.value + b.value);
    if (a.certainly_zero()) return b;
    if (b.certainly_zero()) return a;
    return MatrixEntry::unknown();  // a non-zero sum could still cancel
}

MatrixEntry operator-(const MatrixEntry& a) {
    if (a.kind == MatrixEntry::Kind::Known) return MatrixEntry::known(-a.value);
    return a;
}

MatrixEntry TestCurveMatrix::determinant() const {
    const auto& m = entries;
    auto minor2 = [&](int r1, int r2, int c1, int c2) {
        return m[r1][c1] * m[r2][c2] + (-(m[r1][c2] * m[r2][c1]));
    };
    return m[0][0] * minor2(1, 2, 1, 2) + (-(m[0][1] * minor2(1, 2, 0, 2))) +
           m[0][2] * minor2(1, 2, 0, 1);
}

TestCurveMatrix testcurve_matrix() {
    TestCurveMatrix out;
    // C1: a general pencil of (3,3) curves, meeting Z0 in its 34 singular
    // members and disjoint from the other divisors.
    out.entries[0] = {MatrixEntry::known(Rat(34)), MatrixEntry::known(Rat(0)),
                      MatrixEntry::known(Rat(0))};
    // C2: a curve meeting Z33 but not contained in it.
    out.entries[1] = {MatrixEntry::unknown(), MatrixEntry::nonzero(), MatrixEntry::unknown()};
    // C3: a fiber of the exceptional divisor over the hyperelliptic locus.
    out.entries[2] = {MatrixEntry::known(Rat(0)), MatrixEntry::known(Rat(0)),
                      MatrixEntry::known(Rat(-1))};
    return out;
}

ChainPolytope chain_polytope() {
    ChainPolytope p;
    p.first = {{-3, -2}, {-3, -1}, {3, 1}, {3, -2}};
    p.second = {{-3, -1}, {-3, 2}, {3, 2}, {3, 1}};
    p.shared_edge = {{{-3, -1}, {3, 1}}};
    return p;
}

}  // namespace slq
