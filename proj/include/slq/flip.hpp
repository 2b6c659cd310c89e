#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slq/blowup.hpp"
#include "slq/pair.hpp"

namespace slq {

enum class FlipKind { TypeI, Topple, TypeII };

const char* flip_kind_name(FlipKind kind);

struct FlipInput {
    LogPair pair;
    Label target_curve;
    FlipKind flip_kind = FlipKind::TypeI;
    long long staging = 0;
};

// One replayable step of a central-fiber surgery. Structural fields are
// filled per operation; `notes` carries resulting singularities and key
// intersection numbers for display.
struct TransformStep {
    std::string op;
    std::string component;
    std::string point;
    std::vector<Label> labels;
    std::optional<CurveConfig> insert_config;
    std::vector<MarkedPoint> insert_points;
    std::optional<Gluing> gluing;
    std::optional<GluedPoint> nc;
    std::optional<ChainContraction> contraction;
    std::vector<std::pair<std::string, std::string>> notes;

    friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

struct TransformLog {
    std::vector<TransformStep> steps;

    friend bool operator==(const TransformLog&, const TransformLog&) = default;
};

// Re-applies a recorded log to the pair it was produced from; the result
// reproduces the original output exactly.
LogPair replay(const LogPair& input, const TransformLog& log);

struct FlipResult {
    LogPair pair;
    TransformLog log;
};

// Replaces a (-4)-curve sigma contained in D by a 1/9(1,2) singularity: two
// blow-ups along the residual divisor followed by the contraction of the
// (-5,-2) chain. D loses sigma.
FlipResult type1_flip(const FlipInput& input, const std::string& label_prefix = "E");

// Deletes the end component T of a reducible surface and transforms its
// neighbor S exactly as a type I flip with the double curve B in the role
// of sigma. Preconditions (1)-(6): transverse gluing along B = P^1 with
// B^2 = -4 on S and +4 on T; the (-2)-curve sigma on T and the divisor
// branch C on S cross B at the same marked point; NS(T) spanned by B, sigma.
FlipResult topple(const FlipInput& input, const std::string& label_prefix = "E");

// Flips a (-3)-curve sigma on component T meeting the double curve B at the
// point where the divisor branch C on S crosses it: three blow-ups along C,
// contraction of the (-2,-2) chain to A2 on S', contraction of sigma to
// 1/3(1,1) on T', and the glued record (xy=0) in 1/3(1,2,1) joining them.
FlipResult type2_flip(const FlipInput& input, const std::string& label_prefix = "E");

// Staged form of the type I flip: `staging` = n encodes the A_n singularity
// of the total divisor. Inserts n exceptional components isomorphic to F4
// and one isomorphic to F2 along sigma, then topples them away one by one.
// The result is identical to type1_flip for every n.
FlipResult type1_staged(const FlipInput& input);

// Accordion form of the type II flip for an A_n degeneration of the base:
// inserts a chain of n components B x P^1 between S and T, applies n+1
// elementary type II flips right to left, and contracts the intermediate
// components, which are trivial on their rulings. Identical to type2_flip.
FlipResult type2_accordion(const FlipInput& input);

// Structural helpers shared by the staged pipelines; each is one
// replayable TransformStep.
LogPair insert_component(const LogPair& pair, const CurveConfig& config,
                         const std::vector<MarkedPoint>& points);
LogPair delete_component(const LogPair& pair, const std::string& component_id);
LogPair add_gluing(const LogPair& pair, const Gluing& gluing);
LogPair rename_curve(const LogPair& pair, const std::string& component_id, const Label& from,
                     const Label& to);

// Sorts gluings, marked points and glued records into canonical order so
// that pipelines arriving at the same configuration compare equal.
void normalize_pair(LogPair& pair);

// A pair under transformation together with the replayable log of the
// steps applied so far.
struct Pipeline {
    LogPair pair;
    TransformLog log;

    TransformStep& step(std::string op);
    void note(const std::string& key, const std::string& value);

    void blow_up_at(const std::string& comp, const std::string& point, const Label& label);
    ChainContraction contract(const std::string& comp, const std::vector<Label>& chain);
    void blow_down(const std::string& comp, const Label& label);
    void insert(const CurveConfig& config, const std::vector<MarkedPoint>& points);
    void del(const std::string& comp);
    void glue(const Gluing& g);
    void unglue(const std::string& comp, const Label& curve);
    void rename(const std::string& comp, const Label& from, const Label& to);
    void rename_point(const std::string& comp, const std::string& from, const std::string& to);
    void drop_divisor(const std::string& comp, const Label& curve);
    void record_nc(const GluedPoint& g);
    void remove_nc(const std::string& id);
    void swap_nc(const std::string& id);  // re-orients a glued record
    void finish();                        // appends a normalize step

    // Runs another log's steps on top of this pipeline's pair.
    void append(FlipResult&& result);
};

// Contracts a connected negative-definite chain that may contain
// (-1)-curves: blows those down first, then contracts the remaining
// Hirzebruch-Jung chain. Returns the resulting singularity id.
std::pair<LogPair, std::string> contract_negative_definite_chain(
    const LogPair& pair, const std::string& component_id, std::vector<Label> chain,
    TransformLog* log = nullptr);

}  // namespace slq
