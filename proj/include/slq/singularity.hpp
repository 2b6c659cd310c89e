#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace slq {

// Cyclic quotient singularity 1/n(1,q) with gcd(n,q) = 1. The stored weight
// is the canonical representative min(q, q^{-1} mod n), so that the two
// reading directions of a resolution chain compare equal, e.g.
// 1/9(1,5) == 1/9(1,2). A_k is the same value as 1/(k+1)(1,k).
class QuotientSingularity {
public:
    QuotientSingularity() = default;
    QuotientSingularity(long long order, long long weight);

    static QuotientSingularity a_type(long long k) { return {k + 1, k}; }

    long long order() const { return order_; }
    long long weight() const { return weight_; }

    bool is_smooth() const { return order_ == 1; }

    // k such that this equals A_k, or 0 if it is not of type A.
    long long a_index() const { return weight_ == order_ - 1 ? order_ - 1 : 0; }

    // "A1", "A2", ... for A-types, otherwise "1/9(1,2)".
    std::string str() const;

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
    friend auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;

private:
    long long order_ = 1;
    long long weight_ = 0;
};

// Parses "A2", "1/9(1,2)".
QuotientSingularity parse_singularity(const std::string& text);

// Non-normal-crossing point (xy = 0) in 1/n(a,b,c): two smooth surface
// branches {x = 0} and {y = 0} glued along the z-axis and quotiented by a
// cyclic group of order n acting with the given weights. The branch {x = 0}
// carries the cyclic quotient 1/n(b,c) and {y = 0} carries 1/n(a,c).
struct GluedPoint {
    std::string id;
    long long order = 3;
    std::array<long long, 3> weights{1, 2, 1};
    std::string branch_x;  // component containing the branch {x = 0}
    std::string branch_y;  // component containing the branch {y = 0}
    std::string sing_x;    // id of the cyclic record on branch_x, if tracked
    std::string sing_y;    // id of the cyclic record on branch_y, if tracked

    QuotientSingularity branch_x_type() const;
    QuotientSingularity branch_y_type() const;

    // Same glued singularity, listed with the two branches swapped.
    GluedPoint swapped() const;

    // Equality of the underlying singularity with matched branches,
    // regardless of which branch is written first.
    bool same_as(const GluedPoint& o) const;

    // "(xy=0) in 1/3(1,2,1)"
    std::string str() const;

    friend bool operator==(const GluedPoint&, const GluedPoint&) = default;
};

}  // namespace slq
