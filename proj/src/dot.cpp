#include "slq/dot.hpp"

#include <algorithm>
#include <sstream>

namespace slq {

namespace {

std::string node_id(const std::string& comp, const Label& curve) {
    return "\"" + comp + ":" + curve + "\"";
}

}  // namespace

std::string export_dot(const LogPair& pair) {
    std::ostringstream os;
    os << "graph pair {\n";
    if (pair.case_tag) os << "  label=\"" << *pair.case_tag << "\";\n";

    std::vector<const CurveConfig*> comps;
    for (const CurveConfig& cfg : pair.components) comps.push_back(&cfg);
    std::sort(comps.begin(), comps.end(),
              [](const CurveConfig* a, const CurveConfig* b) { return a->id < b->id; });

    for (const CurveConfig* cfg : comps) {
        os << "  subgraph \"cluster_" << cfg->id << "\" {\n";
        os << "    label=\"" << cfg->id << "\";\n";
        std::vector<const Curve*> curves;
        for (const Curve& c : cfg->curves) curves.push_back(&c);
        std::sort(curves.begin(), curves.end(),
                  [](const Curve* a, const Curve* b) { return a->label < b->label; });
        for (const Curve* c : curves)
            os << "    " << node_id(cfg->id, c->label) << " [label=\"" << c->label << " ("
               << c->self_int.str() << ")\"];\n";
        std::vector<const SingularPoint*> sings;
        for (const SingularPoint& s : cfg->singularities) sings.push_back(&s);
        std::sort(sings.begin(), sings.end(),
                  [](const SingularPoint* a, const SingularPoint* b) { return a->id < b->id; });
        for (const SingularPoint* s : sings)
            os << "    " << node_id(cfg->id, s->id) << " [shape=diamond, label=\""
               << s->type.str() << (s->divisor_through ? " (D)" : "") << "\"];\n";
        os << "  }\n";
    }

    // Intersection edges within each component.
    std::vector<std::string> edges;
    for (const CurveConfig* cfg : comps) {
        for (const auto& [key, value] : cfg->products) {
            if (!value.is_positive()) continue;
            std::string edge = "  " + node_id(cfg->id, key.first) + " -- " +
                               node_id(cfg->id, key.second);
            if (value != Rat(1)) edge += " [label=\"" + value.str() + "\"]";
            edge += ";\n";
            edges.push_back(edge);
        }
        for (const SingularPoint& s : cfg->singularities)
            for (const Label& l : s.incident)
                edges.push_back("  " + node_id(cfg->id, s.id) + " -- " + node_id(cfg->id, l) +
                                " [style=dotted];\n");
    }
    std::vector<Gluing> gluings = pair.gluings;
    std::sort(gluings.begin(), gluings.end(), [](const Gluing& a, const Gluing& b) {
        return std::tie(a.comp_a, a.curve_a, a.comp_b, a.curve_b) <
               std::tie(b.comp_a, b.curve_a, b.comp_b, b.curve_b);
    });
    for (const Gluing& g : gluings) {
        std::string edge = "  " + node_id(g.comp_a, g.curve_a) + " -- " +
                           node_id(g.comp_b, g.curve_b) + " [style=bold, label=\"glued";
        if (g.node_order != 1) edge += " mu" + std::to_string(g.node_order);
        edge += "\"];\n";
        edges.push_back(edge);
    }
    std::vector<GluedPoint> ncs = pair.nc_points;
    std::sort(ncs.begin(), ncs.end(),
              [](const GluedPoint& a, const GluedPoint& b) { return a.id < b.id; });
    for (const GluedPoint& g : ncs) {
        os << "  \"nc:" << g.id << "\" [shape=diamond, label=\"" << g.str() << "\"];\n";
        if (!g.sing_x.empty())
            edges.push_back("  \"nc:" + g.id + "\" -- " + node_id(g.branch_x, g.sing_x) +
                            " [style=dashed];\n");
        if (!g.sing_y.empty())
            edges.push_back("  \"nc:" + g.id + "\" -- " + node_id(g.branch_y, g.sing_y) +
                            " [style=dashed];\n");
    }
    std::sort(edges.begin(), edges.end());
    for (const std::string& e : edges) os << e;
    os << "}\n";
    return os.str();
}

}  // namespace slq
