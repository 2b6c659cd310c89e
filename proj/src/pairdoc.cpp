#include "slq/pairdoc.hpp"

#include <sstream>

#include "slq/error.hpp"

namespace slq {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void parse_fail(size_t line, const std::string& message) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::string render_combo(const DivisorClass& cls) { return cls.str(); }

// Parses combos in the form produced by DivisorClass::str, e.g.
// "-2*sigma - 6*F", "sigma + H", "0".
DivisorClass parse_combo(const std::string& text, size_t line) {
    DivisorClass out;
    std::istringstream ss(text);
    std::string token;
    int sign = 1;
    bool expect_term = true;
    while (ss >> token) {
        if (token == "+") { sign = 1; expect_term = true; continue; }
        if (token == "-") { sign = -1; expect_term = true; continue; }
        if (!expect_term) parse_fail(line, "missing operator in class '" + text + "'");
        if (token == "0") { expect_term = false; continue; }
        std::string body = token;
        if (body.front() == '-') {
            sign = -sign;
            body = body.substr(1);
        }
        Rat coeff(1);
        std::string label = body;
        if (auto star = body.find('*'); star != std::string::npos) {
            coeff = Rat::parse(body.substr(0, star));
            label = body.substr(star + 1);
        }
        if (label.empty()) parse_fail(line, "missing curve label in class '" + text + "'");
        out.add(label, Rat(sign) * coeff);
        sign = 1;
        expect_term = false;
    }
    return out;
}

std::string render_roles(const Curve& c) {
    std::string out;
    for (Role r : c.roles) {
        if (!out.empty()) out += ",";
        out += role_name(r);
    }
    return out;
}

// key=value word, quoted values not needed: labels carry no spaces.
std::map<std::string, std::string> keyvals(const std::vector<std::string>& words, size_t from,
                                           size_t line) {
    std::map<std::string, std::string> out;
    for (size_t i = from; i < words.size(); ++i) {
        auto eq = words[i].find('=');
        if (eq == std::string::npos) parse_fail(line, "expected key=value, got '" + words[i] + "'");
        out[words[i].substr(0, eq)] = words[i].substr(eq + 1);
    }
    return out;
}

}  // namespace

std::string render_pair(const LogPair& pair) {
    std::ostringstream os;
    os << "pair";
    if (pair.case_tag) os << " " << *pair.case_tag;
    os << "\n";
    for (const CurveConfig& cfg : pair.components) {
        os << "component " << cfg.id << "\n";
        for (const Curve& c : cfg.curves) {
            os << "  curve " << c.label << " self=" << c.self_int.str()
               << " genus=" << c.genus;
            if (!c.roles.empty()) os << " roles=" << render_roles(c);
            os << "\n";
        }
        for (const auto& [key, value] : cfg.products)
            os << "  int " << key.first << " " << key.second << " = " << value.str() << "\n";
        os << "  picard " << cfg.picard_rank << "\n";
        if (!cfg.k_class.empty()) os << "  k = " << render_combo(cfg.k_class) << "\n";
        if (!cfg.d_class.empty()) os << "  d = " << render_combo(cfg.d_class) << "\n";
        for (const SingularPoint& s : cfg.singularities) {
            os << "  sing " << s.type.str() << " at " << s.id;
            if (!s.incident.empty()) {
                os << " incident=";
                for (size_t i = 0; i < s.incident.size(); ++i)
                    os << (i ? "," : "") << s.incident[i];
            }
            if (s.divisor_through) os << " divisor";
            os << "\n";
        }
        for (const OrbifoldMarker& m : cfg.orbifold_markers)
            os << "  marker " << m.point << " " << m.order << "\n";
    }
    for (const Gluing& g : pair.gluings) {
        os << "glue " << g.comp_a << "." << g.curve_a << " = " << g.comp_b << "." << g.curve_b;
        if (g.node_order != 1) os << " order=" << g.node_order;
        os << "\n";
    }
    for (const MarkedPoint& p : pair.points) {
        os << "point " << p.id << " on " << p.component << " curves=";
        for (size_t i = 0; i < p.curves.size(); ++i) os << (i ? "," : "") << p.curves[i];
        for (const Tangency& t : p.tangencies)
            os << " tangent=" << t.a << ":" << t.b << ":" << t.order;
        os << "\n";
    }
    for (const GluedPoint& g : pair.nc_points) {
        os << "nc " << g.id << " order=" << g.order << " weights=" << g.weights[0] << ","
           << g.weights[1] << "," << g.weights[2] << " x=" << g.branch_x << " y=" << g.branch_y;
        if (!g.sing_x.empty()) os << " singx=" << g.sing_x;
        if (!g.sing_y.empty()) os << " singy=" << g.sing_y;
        os << "\n";
    }
    return os.str();
}

LogPair parse_pair(const std::string& text) {
    LogPair pair;
    CurveConfig* current = nullptr;
    bool seen_header = false;
    std::istringstream stream(text);
    std::string raw;
    size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> words;
        std::string w;
        while (ls >> w) words.push_back(w);
        if (words.empty()) continue;
        const std::string& head = words[0];

        if (head == "pair") {
            if (seen_header) parse_fail(line_no, "duplicate pair header");
            seen_header = true;
            if (words.size() > 1) {
                std::string tag = words[1];
                for (size_t i = 2; i < words.size(); ++i) tag += " " + words[i];
                pair.case_tag = tag;
            }
            continue;
        }
        if (!seen_header) parse_fail(line_no, "document must start with 'pair'");

        if (head == "component") {
            if (words.size() != 2) parse_fail(line_no, "component takes one id");
            pair.components.push_back({});
            current = &pair.components.back();
            current->id = words[1];
        } else if (head == "curve") {
            if (!current) parse_fail(line_no, "curve outside a component");
            if (words.size() < 2) parse_fail(line_no, "curve needs a label");
            Curve c;
            c.label = words[1];
            auto kv = keyvals(words, 2, line_no);
            for (const auto& [key, value] : kv) {
                if (key == "self") c.self_int = Rat::parse(value);
                else if (key == "genus") c.genus = std::stoll(value);
                else if (key == "roles") {
                    for (const std::string& name : split(value, ',')) {
                        auto role = parse_role(name);
                        if (!role) parse_fail(line_no, "unknown role '" + name + "'");
                        c.roles.insert(*role);
                    }
                } else {
                    parse_fail(line_no, "unknown curve field '" + key + "'");
                }
            }
            current->add_curve(c);
        } else if (head == "int") {
            if (!current) parse_fail(line_no, "int outside a component");
            if (words.size() != 5 || words[3] != "=")
                parse_fail(line_no, "expected: int <a> <b> = <value>");
            current->set_product(words[1], words[2], Rat::parse(words[4]));
        } else if (head == "picard") {
            if (!current) parse_fail(line_no, "picard outside a component");
            if (words.size() != 2) parse_fail(line_no, "picard takes one integer");
            current->picard_rank = std::stoll(words[1]);
        } else if (head == "k" || head == "d") {
            if (!current) parse_fail(line_no, "class outside a component");
            if (words.size() < 2 || words[1] != "=") parse_fail(line_no, "expected: k = <class>");
            std::string rest;
            for (size_t i = 2; i < words.size(); ++i) rest += (i > 2 ? " " : "") + words[i];
            DivisorClass cls = parse_combo(rest, line_no);
            if (head == "k") current->k_class = cls;
            else current->d_class = cls;
        } else if (head == "sing") {
            if (!current) parse_fail(line_no, "sing outside a component");
            if (words.size() < 4 || words[2] != "at")
                parse_fail(line_no, "expected: sing <type> at <id> ...");
            SingularPoint s;
            s.type = parse_singularity(words[1]);
            s.id = words[3];
            for (size_t i = 4; i < words.size(); ++i) {
                if (words[i] == "divisor") s.divisor_through = true;
                else if (words[i].rfind("incident=", 0) == 0)
                    for (const std::string& l : split(words[i].substr(9), ','))
                        s.incident.push_back(l);
                else parse_fail(line_no, "unknown sing field '" + words[i] + "'");
            }
            current->singularities.push_back(s);
        } else if (head == "marker") {
            if (!current) parse_fail(line_no, "marker outside a component");
            if (words.size() != 3) parse_fail(line_no, "expected: marker <point> <order>");
            current->orbifold_markers.push_back({words[1], std::stoll(words[2])});
        } else if (head == "glue") {
            if (words.size() < 4 || words[2] != "=")
                parse_fail(line_no, "expected: glue <comp>.<curve> = <comp>.<curve>");
            auto side = [&](const std::string& s) {
                auto dot = s.find('.');
                if (dot == std::string::npos)
                    parse_fail(line_no, "expected <comp>.<curve>, got '" + s + "'");
                return std::make_pair(s.substr(0, dot), s.substr(dot + 1));
            };
            auto [ca, la] = side(words[1]);
            auto [cb, lb] = side(words[3]);
            Gluing g{ca, la, cb, lb, 1};
            if (words.size() > 4) {
                auto kv = keyvals(words, 4, line_no);
                if (auto it = kv.find("order"); it != kv.end()) g.node_order = std::stoll(it->second);
            }
            pair.gluings.push_back(g);
        } else if (head == "point") {
            if (words.size() < 4 || words[2] != "on")
                parse_fail(line_no, "expected: point <id> on <comp> curves=...");
            MarkedPoint p;
            p.id = words[1];
            p.component = words[3];
            for (size_t i = 4; i < words.size(); ++i) {
                if (words[i].rfind("curves=", 0) == 0) {
                    for (const std::string& l : split(words[i].substr(7), ','))
                        p.curves.push_back(l);
                } else if (words[i].rfind("tangent=", 0) == 0) {
                    auto parts = split(words[i].substr(8), ':');
                    if (parts.size() != 3) parse_fail(line_no, "expected tangent=a:b:order");
                    Tangency t{parts[0], parts[1], std::stoll(parts[2])};
                    if (t.b < t.a) std::swap(t.a, t.b);
                    p.tangencies.push_back(t);
                } else {
                    parse_fail(line_no, "unknown point field '" + words[i] + "'");
                }
            }
            pair.points.push_back(p);
        } else if (head == "nc") {
            if (words.size() < 2) parse_fail(line_no, "nc needs an id");
            GluedPoint g;
            g.id = words[1];
            auto kv = keyvals(words, 2, line_no);
            for (const auto& [key, value] : kv) {
                if (key == "order") g.order = std::stoll(value);
                else if (key == "weights") {
                    auto parts = split(value, ',');
                    if (parts.size() != 3) parse_fail(line_no, "weights takes three integers");
                    for (int i = 0; i < 3; ++i) g.weights[i] = std::stoll(parts[i]);
                } else if (key == "x") g.branch_x = value;
                else if (key == "y") g.branch_y = value;
                else if (key == "singx") g.sing_x = value;
                else if (key == "singy") g.sing_y = value;
                else parse_fail(line_no, "unknown nc field '" + key + "'");
            }
            pair.nc_points.push_back(g);
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!seen_header) fail(ErrorCode::ParseError, "empty document");
    return pair;
}

std::string render_cover(const CoverDescriptor& cover) {
    std::ostringstream os;
    os << "cover\n";
    for (size_t i = 0; i < cover.components.size(); ++i) {
        const CoverComponent& c = cover.components[i];
        os << "component " << c.id << " nodes=" << c.nodes << " orbifold=" << c.orbifold_order
           << " degrees=" << c.deg_low.str() << "," << c.deg_high.str();
        if (i < cover.topology.size())
            os << " topology=" << curve_topology_name(cover.topology[i]);
        os << "\n";
    }
    for (const BranchPoint& b : cover.branch_points)
        os << "branch " << b.id << " on " << b.component << " mult=" << b.multiplicity << "\n";
    return os.str();
}

CoverDescriptor parse_cover(const std::string& text) {
    CoverDescriptor cover;
    bool seen_header = false;
    std::istringstream stream(text);
    std::string raw;
    size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> words;
        std::string w;
        while (ls >> w) words.push_back(w);
        if (words.empty()) continue;
        const std::string& head = words[0];
        if (head == "cover") {
            seen_header = true;
            continue;
        }
        if (!seen_header) parse_fail(line_no, "document must start with 'cover'");
        if (head == "component") {
            if (words.size() < 2) parse_fail(line_no, "component needs an id");
            CoverComponent c;
            c.id = words[1];
            CurveTopology topo = CurveTopology::SmoothGenus4;
            auto kv = keyvals(words, 2, line_no);
            for (const auto& [key, value] : kv) {
                if (key == "nodes") c.nodes = std::stoll(value);
                else if (key == "orbifold") c.orbifold_order = std::stoll(value);
                else if (key == "degrees") {
                    auto parts = split(value, ',');
                    if (parts.size() != 2) parse_fail(line_no, "degrees takes two rationals");
                    c.deg_low = Rat::parse(parts[0]);
                    c.deg_high = Rat::parse(parts[1]);
                } else if (key == "topology") {
                    bool found = false;
                    for (CurveTopology t :
                         {CurveTopology::SmoothGenus4, CurveTopology::HyperellipticTail,
                          CurveTopology::GenusTwoWithLine, CurveTopology::GenusOne,
                          CurveTopology::GenusTwoTotallyRamified})
                        if (value == curve_topology_name(t)) {
                            topo = t;
                            found = true;
                        }
                    if (!found) parse_fail(line_no, "unknown topology '" + value + "'");
                } else {
                    parse_fail(line_no, "unknown component field '" + key + "'");
                }
            }
            cover.components.push_back(c);
            cover.topology.push_back(topo);
        } else if (head == "branch") {
            if (words.size() < 4 || words[2] != "on")
                parse_fail(line_no, "expected: branch <id> on <comp> mult=<k>");
            BranchPoint b;
            b.id = words[1];
            b.component = words[3];
            auto kv = keyvals(words, 4, line_no);
            if (auto it = kv.find("mult"); it != kv.end()) b.multiplicity = std::stoll(it->second);
            cover.branch_points.push_back(b);
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!seen_header) fail(ErrorCode::ParseError, "empty document");
    return cover;
}

}  // namespace slq
