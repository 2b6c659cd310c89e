#include "slq/singularity.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <utility>

#include "slq/error.hpp"

namespace slq {

namespace {

long long mod_inverse(long long q, long long n) {
    long long t = 0, new_t = 1, r = n, new_r = ((q % n) + n) % n;
    while (new_r != 0) {
        long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return ((t % n) + n) % n;
}

}  // namespace

QuotientSingularity::QuotientSingularity(long long order, long long weight) {
    if (order < 1) fail(ErrorCode::Internal, "singularity order must be positive");
    weight = ((weight % order) + order) % order;
    if (order == 1) {
        order_ = 1;
        weight_ = 0;
        return;
    }
    if (std::gcd(order, weight) != 1)
        fail(ErrorCode::Internal, "singularity weight not coprime to order");
    long long inv = mod_inverse(weight, order);
    order_ = order;
    weight_ = std::min(weight, inv);
}

std::string QuotientSingularity::str() const {
    if (is_smooth()) return "smooth";
    if (long long k = a_index(); k > 0) return "A" + std::to_string(k);
    return "1/" + std::to_string(order_) + "(1," + std::to_string(weight_) + ")";
}

QuotientSingularity parse_singularity(const std::string& text) {
    if (text.size() >= 2 && text[0] == 'A') {
        long long k = 0;
        try {
            k = std::stoll(text.substr(1));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad singularity: '" + text + "'");
        }
        if (k < 1) fail(ErrorCode::ParseError, "bad A index: '" + text + "'");
        return QuotientSingularity::a_type(k);
    }
    // 1/n(1,q)
    long long n = 0, one = 0, q = 0;
    if (std::sscanf(text.c_str(), "1/%lld(%lld,%lld)", &n, &one, &q) == 3 && one == 1)
        return {n, q};
    fail(ErrorCode::ParseError, "bad singularity: '" + text + "'");
}

QuotientSingularity GluedPoint::branch_x_type() const {
    // branch {x = 0} has coordinates (y, z) with weights (b, c);
    // 1/n(b,c) = 1/n(1, c * b^{-1}).
    return {order, weights[2] * mod_inverse(weights[1], order) % order};
}

QuotientSingularity GluedPoint::branch_y_type() const {
    return {order, weights[2] * mod_inverse(weights[0], order) % order};
}

GluedPoint GluedPoint::swapped() const {
    GluedPoint s = *this;
    std::swap(s.weights[0], s.weights[1]);
    std::swap(s.branch_x, s.branch_y);
    std::swap(s.sing_x, s.sing_y);
    return s;
}

bool GluedPoint::same_as(const GluedPoint& o) const {
    auto strip = [](const GluedPoint& g) {
        GluedPoint s = g;
        s.id.clear();
        s.sing_x.clear();
        s.sing_y.clear();
        return s;
    };
    return strip(*this) == strip(o) || strip(swapped()) == strip(o);
}

std::string GluedPoint::str() const {
    return "(xy=0) in 1/" + std::to_string(order) + "(" + std::to_string(weights[0]) + "," +
           std::to_string(weights[1]) + "," + std::to_string(weights[2]) + ")";
}

}  // namespace slq
