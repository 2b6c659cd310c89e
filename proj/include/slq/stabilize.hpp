#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slq/boundary.hpp"
#include "slq/cover.hpp"
#include "slq/flip.hpp"
#include "slq/pair.hpp"

namespace slq {

// The eight isomorphism classes of surfaces underlying stable log quadrics.
enum class SurfaceRow {
    Quadric,               // P1 x P1
    P112,                  // P(1,1,2), one A1
    SmoothedP912,          // smoothing of the A1 of P(9,1,2), one 1/9(1,2)
    P912,                  // P(9,1,2), 1/9(1,2) and A1
    ThirdChain,            // coarse space of P(O(4/3,5/3) + O(5/3,4/3))
    P2P2,                  // P2 u P2 along a line
    SmoothedP312P311,      // smoothing of the A1 of P(3,1,2) u P(3,1,1)
    P312P311,              // P(3,1,2) u P(3,1,1)
};

const char* surface_row_name(SurfaceRow row);

// Input to the stable-reduction pipeline: a case of the genus-4 list plus
// the finitely many configuration flags the surgery sequence depends on.
struct InputCase {
    CaseTag tag = CaseTag::MaroniGeneral;

    // MaroniGeneral: singularities of an otherwise generic divisor.
    std::vector<SingularityOfD> d_singularities;

    enum class MaroniSub { DisjointFromSigma, ContainsSigmaTransverse, ContainsSigmaTangent };
    MaroniSub maroni_sub = MaroniSub::DisjointFromSigma;

    enum class HyperSub { Unramified, Ramified, FiberComponentTransverse, FiberComponentTangent };
    HyperSub hyper_sub = HyperSub::Unramified;

    // F3F1, disjoint directrices: tangency of the distinguished section tau.
    bool f31_intersecting = false;
    bool f31_tau_triple_tangent = false;
    enum class Component { No, Transverse, Tangent };
    Component f31_tau_component = Component::No;

    // F3F1, intersecting directrices: tangency of the fiber through the
    // residual crossing.
    bool f31_f_tangent = false;
    bool f31_f_component = false;

    std::string describe() const;
    friend bool operator==(const InputCase&, const InputCase&) = default;
};

// Parses e.g. "hyperelliptic --sub ramified"; flags as listed by
// `describe`.
InputCase parse_case(const std::string& name, const std::vector<std::string>& subs);

// All distinct sub-case combinations, used by the verification sweep.
std::vector<InputCase> all_cases();

// Constructs the marked Tschirnhausen pair of the case: curves, exact
// intersection numbers, canonical class, divisor, gluings and the marked
// points the surgeries act on.
LogPair build_case(const InputCase& input);

// Tschirnhausen pair of a weighted admissible cover, with generic sub-case
// flags.
LogPair pair_from_cover(const CoverDescriptor& cover);

struct RayValue {
    std::string component;
    Label curve;
    EpsLinear value;
};

struct PositivityResult {
    enum class Kind { Ample, NefNotAmple, NotNef } kind = Kind::Ample;
    std::vector<RayValue> rays;  // trivial rays when nef, negative rays otherwise
};

// Evaluates K + (2/3 + eps) D on the extremal rays of every component (the
// tracked negative curves and fiber classes). Components must have Picard
// rank at most 2 for the rays to span the cone.
PositivityResult positivity(const LogPair& pair);

// Contracts every (K + w D)-trivial ray ((-1)-curves by blow-down, chains
// of trivial curves by chain contraction) until the pair is ample.
std::pair<LogPair, TransformLog> contract_trivial(const LogPair& pair);

struct DoubleCurveEntry {
    std::string component;
    std::string tag;   // class of the double curve in the table notation
    Rat self_int;      // exact self-intersection on that component
    friend bool operator==(const DoubleCurveEntry&, const DoubleCurveEntry&) = default;
};

struct SingularityEntry {
    QuotientSingularity type;
    std::string component;
    bool on_double_curve = false;
    bool part_of_glued = false;  // listed inside a glued record
    friend bool operator==(const SingularityEntry&, const SingularityEntry&) = default;
};

struct StablePairRecord {
    SurfaceRow row = SurfaceRow::Quadric;
    std::vector<SingularityEntry> singularities;
    std::vector<GluedPoint> glued_singularities;  // in table presentation
    std::vector<DoubleCurveEntry> double_curves;
    std::vector<SingularityOfD> d_singularities;
    Stratum stratum = Stratum::Interior;
    int codimension = 0;
    bool index_condition_ok = false;
    TransformLog log;
    LogPair final_pair;

    // Printable singularity list in the table notation.
    std::vector<std::string> singularity_list() const;
};

// Runs the stable-reduction pipeline of the case: the prescribed flips,
// then the contraction of trivial rays, and classifies the result against
// the table of stable log quadrics.
StablePairRecord stabilize(const InputCase& input);

// The reducible chain row arises both from the orbifold chain covers and as
// the stable replacement of the F3-F3 case; this checks the identification.
bool f33_equals_third_third(const StablePairRecord& record);

// Stratum and codimension of the boundary stratum the record lies in.
std::pair<Stratum, int> boundary_stratum(const StablePairRecord& record);

// Vertex lists of the toric presentation of the chain row; rejects records
// from other rows.
ChainPolytope toric_polytope(const StablePairRecord& record);

// One row of the summary table.
struct TableRow {
    SurfaceRow row;
    std::string surface;
    std::string singularities;
    std::string double_curve;
    std::string built_from;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

// The eight expected rows.
std::vector<TableRow> expected_table();

// Regenerates the table by stabilizing one generating case per row and
// rendering the result; must reproduce expected_table().
std::vector<TableRow> generate_table();

}  // namespace slq
