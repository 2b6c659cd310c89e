#include "slq/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "slq/dot.hpp"
#include "slq/error.hpp"
#include "slq/pairdoc.hpp"
#include "slq/stabilize.hpp"
#include "slq/verify.hpp"

namespace slq {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParse = 2;
constexpr int kUsage = 64;

const char* kUsageText = R"(usage: slq <command> [args]

commands:
  stabilize <case> [--sub <flag>]...   run the stable-reduction pipeline
  flip <type1|type2|topple> <pairfile> --curve <label> [--staging <n>]
  classify-cover <coverfile>           place a cover in the genus-4 list
  slc-check <coverfile> --weight <p/q> check the pair (S, cD) for slc
  table                                print the table of stable surfaces
  verify                               run the built-in verification suite
  dot <pairfile>                       dual graph of a pair in DOT

cases: maroni-general, maroni-special, hyperelliptic, f3f3, f1f1, f3f1,
       stable-chain-1/3-1/3
)";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_log(const TransformLog& log, std::ostream& out) {
    if (log.steps.empty()) {
        out << "transform log: (no steps; the input is already stable)\n";
        return;
    }
    out << "transform log:\n";
    for (const TransformStep& s : log.steps) {
        if (s.op == "normalize") continue;
        out << "  " << s.op;
        if (!s.component.empty()) out << " on " << s.component;
        if (!s.point.empty()) out << " at " << s.point;
        if (!s.labels.empty()) {
            out << " [";
            for (size_t i = 0; i < s.labels.size(); ++i) out << (i ? "," : "") << s.labels[i];
            out << "]";
        }
        for (const auto& [key, value] : s.notes) out << "  " << key << "=" << value;
        out << "\n";
    }
}

void print_record(const StablePairRecord& rec, std::ostream& out) {
    out << "surface: " << surface_row_name(rec.row) << "\n";
    out << "singularities:";
    for (const std::string& s : rec.singularity_list()) out << " " << s << ";";
    out << "\n";
    if (!rec.double_curves.empty()) {
        out << "double curve:";
        for (const DoubleCurveEntry& d : rec.double_curves)
            out << " " << d.component << ": " << d.tag << " (self " << d.self_int.str() << ");";
        out << "\n";
    }
    if (!rec.d_singularities.empty()) {
        out << "divisor singularities:";
        for (const SingularityOfD& s : rec.d_singularities) out << " " << s.str() << ";";
        out << "\n";
    }
    auto [stratum, codim] = boundary_stratum(rec);
    out << "stratum: " << stratum_name(stratum) << " (codimension " << codim << ")";
    if (auto alias = stratum_alias(stratum)) out << " = " << *alias;
    if (auto inside = stratum_containment(stratum))
        out << ", contained in " << stratum_name(*inside);
    out << "\n";
    out << "index condition: " << (rec.index_condition_ok ? "ok" : "violated") << "\n";
    print_log(rec.log, out);
}

int cmd_stabilize(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "stabilize: missing case name\n";
        return kUsage;
    }
    std::vector<std::string> subs;
    for (size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--sub" && i + 1 < args.size()) {
            subs.push_back(args[++i]);
        } else {
            err << "stabilize: unexpected argument '" << args[i] << "'\n";
            return kUsage;
        }
    }
    StablePairRecord rec = stabilize(parse_case(args[0], subs));
    out << "case: " << rec.final_pair.case_tag.value_or(args[0]) << "\n";
    print_record(rec, out);
    return kOk;
}

int cmd_flip(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() < 2) {
        err << "flip: expected <type1|type2|topple> <pairfile> --curve <label>\n";
        return kUsage;
    }
    std::string kind_name = args[0];
    std::string path = args[1];
    std::string curve;
    long long staging = 0;
    for (size_t i = 2; i < args.size(); ++i) {
        if (args[i] == "--curve" && i + 1 < args.size()) curve = args[++i];
        else if (args[i] == "--staging" && i + 1 < args.size()) staging = std::stoll(args[++i]);
        else {
            err << "flip: unexpected argument '" << args[i] << "'\n";
            return kUsage;
        }
    }
    if (curve.empty()) {
        err << "flip: missing --curve\n";
        return kUsage;
    }
    FlipInput input{parse_pair(read_file(path)), curve, FlipKind::TypeI, staging};
    FlipResult result;
    if (kind_name == "type1")
        result = staging > 0 ? type1_staged(input) : type1_flip(input);
    else if (kind_name == "type2") {
        input.flip_kind = FlipKind::TypeII;
        result = staging > 0 ? type2_accordion(input) : type2_flip(input);
    } else if (kind_name == "topple") {
        input.flip_kind = FlipKind::Topple;
        result = topple(input);
    } else {
        err << "flip: unknown kind '" << kind_name << "'\n";
        return kUsage;
    }
    print_log(result.log, out);
    out << render_pair(result.pair);
    return kOk;
}

int cmd_classify_cover(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    if (args.size() != 1) {
        err << "classify-cover: expected one cover file\n";
        return kUsage;
    }
    CoverDescriptor cover = parse_cover(read_file(args[0]));
    CaseTag tag = classify_cover(cover);
    out << "case: " << case_tag_name(tag) << "\n";
    out << "hassett-stable: " << (hassett_stable(cover) ? "true" : "false") << "\n";
    for (size_t i = 0; i < cover.components.size(); ++i) {
        const CoverComponent& comp = cover.components[i];
        AmplenessResult a = ampleness_on_tschirnhausen(comp);
        out << "component " << comp.id << ": maroni "
            << maroni(comp.deg_low, comp.deg_high).str() << ", K + (2/3+eps)D on the extremal "
            << "section: " << a.value.str() << (a.ample ? " (ample)" : " (not ample)") << "\n";
    }
    return kOk;
}

int cmd_slc_check(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "slc-check: expected a cover file\n";
        return kUsage;
    }
    Rat weight(2, 3);
    for (size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--weight" && i + 1 < args.size()) weight = Rat::parse(args[++i]);
        else {
            err << "slc-check: unexpected argument '" << args[i] << "'\n";
            return kUsage;
        }
    }
    CoverDescriptor cover = parse_cover(read_file(args[0]));
    bool ok = slc_check(cover, weight);
    out << "slc at weight " << weight.str() << ": " << (ok ? "true" : "false") << "\n";
    return kOk;
}

int cmd_table(std::ostream& out) {
    std::vector<TableRow> rows = generate_table();
    std::vector<TableRow> expected = expected_table();
    out << "surfaces of stable log quadrics:\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << (i + 1) << ". " << rows[i].surface << "\n";
        out << "   singularities: " << rows[i].singularities << "\n";
        out << "   double curve:  " << rows[i].double_curve << "\n";
        out << "   built from:    " << rows[i].built_from << "\n";
    }
    if (rows != expected) {
        out << "MISMATCH against the embedded table\n";
        return kFailure;
    }
    out << "all 8 rows match the embedded table\n";
    return kOk;
}

int cmd_verify(std::ostream& out) {
    std::vector<CriterionResult> results = run_acceptance();
    bool all = true;
    for (const CriterionResult& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.title
            << "\n";
        if (!r.passed)
            for (const std::string& d : r.details) out << d << "\n";
        all = all && r.passed;
    }
    out << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? kOk : kFailure;
}

int cmd_dot(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() != 1) {
        err << "dot: expected one pair file\n";
        return kUsage;
    }
    out << export_dot(parse_pair(read_file(args[0])));
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsageText;
        return kUsage;
    }
    const std::string& cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "stabilize") return cmd_stabilize(rest, out, err);
        if (cmd == "flip") return cmd_flip(rest, out, err);
        if (cmd == "classify-cover") return cmd_classify_cover(rest, out, err);
        if (cmd == "slc-check") return cmd_slc_check(rest, out, err);
        if (cmd == "table") return cmd_table(out);
        if (cmd == "verify") return cmd_verify(out);
        if (cmd == "dot") return cmd_dot(rest, out, err);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << kUsageText;
            return kOk;
        }
        err << "unknown command '" << cmd << "'\n" << kUsageText;
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? kParse : kFailure;
    }
}

}  // namespace slq
