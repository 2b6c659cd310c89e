#pragma once

#include <map>
#include <string>
#include <vector>

#include "slq/pair.hpp"

namespace slq {

// Request to blow up one point of a component. Curves listed in the
// incidence map pass through the center with the given local multiplicity
// and meet each other transversely there; tangential contact is expressed as
// a sequence of requests on successive exceptional curves.
struct BlowupRequest {
    std::string component_id;
    std::map<Label, long long> incidence;
    long long divisor_mult = 0;  // multiplicity of D at the center
    Label new_label;
};

// Converts a Hirzebruch-Jung chain of self-intersections (all <= -2) into
// the cyclic quotient singularity 1/n(1,q) with n/q the continued fraction
// a1 - 1/(a2 - 1/(...)), a_i = -self_int_i.
QuotientSingularity hj_chain_to_singularity(const std::vector<long long>& self_ints);

// Blow up at a point. The new exceptional curve E has E^2 = -1; incident
// curves c lose m_c^2 from their self-intersection and gain E.c = m_c;
// pairs of incident curves lose m_c * m_c'. K becomes pull-back plus E and
// D becomes pull-back minus divisor_mult * E, both written in the new basis.
LogPair blow_up(const LogPair& pair, const BlowupRequest& req);

// Blow up a marked point: incidences are read off the point record (every
// listed curve with multiplicity 1), divisor_mult is the sum of D
// coefficients over those curves, and the point is replaced by the marked
// points induced on the exceptional curve. Curves in tangential contact at
// the center stay together on E with the contact order dropped by one.
LogPair blow_up_at(const LogPair& pair, const std::string& component_id,
                   const std::string& point_id, const Label& new_label);

struct ChainContraction {
    std::string component_id;
    std::vector<Label> chain;
    QuotientSingularity result_singularity;
    std::string singularity_id;
    // (outside curve, chain curve) -> coefficient of the chain curve in the
    // pull-back of the outside curve.
    std::map<std::pair<Label, Label>, Rat> pullback_coeffs;

    friend bool operator==(const ChainContraction&, const ChainContraction&) = default;
};

// Contracts a Hirzebruch-Jung chain of rational curves. Every remaining
// curve class is replaced by its image; the new intersection numbers are
// computed from pull-backs solved exactly against the chain matrix. K and D
// push forward by dropping the chain coefficients.
std::pair<LogPair, ChainContraction> contract_chain(const LogPair& pair,
                                                    const std::string& component_id,
                                                    const std::vector<Label>& chain);

// Contracts a smooth rational (-1)-curve: the inverse of blow_up on all
// tracked data.
LogPair blow_down(const LogPair& pair, const std::string& component_id, const Label& label);

}  // namespace slq
