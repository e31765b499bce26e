#include "orthogrid/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace orthogrid::io {

std::string format_double(double value) {
    if (std::isnan(value))
        return "nan";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

bool skippable(const std::string &line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string &what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

// A fixed palette of distinguishable fills; colours beyond it wrap around
// after a multiplicative hash.
constexpr const char *kFills[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
                                  "#8c6d31", "#843c39", "#7b4173", "#3182bd"};

const char *fill_for(Colour c) {
    constexpr std::size_t count = sizeof(kFills) / sizeof(kFills[0]);
    return kFills[(static_cast<std::uint64_t>(c) * 2654435761ULL) % count];
}

}  // namespace

void write_edge_list(std::ostream &out, const Graph &g) {
    out << g.num_vertices() << '\n';
    g.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

Graph read_edge_list(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line))
            continue;
        std::istringstream fields(line);
        if (!n) {
            long long count = -1;
            if (!(fields >> count) || count < 0)
                parse_error(line_no, "expected vertex count");
            n = static_cast<std::size_t>(count);
            continue;
        }
        long long u = -1, v = -1;
        std::string rest;
        if (!(fields >> u >> v) || u < 0 || v < 0 || (fields >> rest))
            parse_error(line_no, "expected \"u v\"");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (!n)
        throw std::runtime_error("edge list: missing vertex count");
    return Graph::from_edges(*n, edges);
}

json to_json(const ColouringPair &pair) {
    return json{{"N", pair.palette_size}, {"c1", pair.c1}, {"c2", pair.c2}};
}

ColouringPair colouring_from_json(const json &j) {
    ColouringPair pair;
    try {
        pair.palette_size = j.at("N").get<std::size_t>();
        pair.c1 = j.at("c1").get<std::vector<Colour>>();
        pair.c2 = j.at("c2").get<std::vector<Colour>>();
    } catch (const json::exception &e) {
        throw std::runtime_error(std::string("colouring json: ") + e.what());
    }
    return pair;
}

json to_json(const VerificationReport &report) {
    json j{{"proper_c1", report.proper_c1},
           {"proper_c2", report.proper_c2},
           {"orthogonal", report.orthogonal},
           {"first_violation", nullptr}};
    if (report.first_violation) {
        const Violation &v = *report.first_violation;
        j["first_violation"] = json{{"kind", to_string(v.kind)}, {"u", v.u}, {"v", v.v}};
    }
    return j;
}

void write_points_csv(std::ostream &out, const PointSet &ps) {
    out << "# n=" << ps.size() << " r=" << format_double(ps.r) << " seed=" << ps.seed << '\n';
    out << "x,y\n";
    for (const Point &p : ps.points)
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

PointSet read_points_csv(std::istream &in) {
    PointSet ps;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.rfind("#", 0) == 0) {
            std::istringstream fields(line.substr(1));
            std::string token;
            while (fields >> token) {
                const auto eq = token.find('=');
                if (eq == std::string::npos)
                    continue;
                const std::string key = token.substr(0, eq);
                const std::string value = token.substr(eq + 1);
                if (key == "r")
                    ps.r = std::stod(value);
                else if (key == "seed")
                    ps.seed = std::stoull(value);
            }
            continue;
        }
        if (skippable(line))
            continue;
        if (!header_seen && line == "x,y") {
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            parse_error(line_no, "expected \"x,y\"");
        try {
            ps.points.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
        } catch (const std::exception &) {
            parse_error(line_no, "bad coordinate");
        }
    }
    return ps;
}

json to_json(const CellPartition &cp) {
    json cells = json::array();
    for (const CellIndex &c : cp.cell_of)
        cells.push_back(json::array({c.i, c.j}));
    return json{{"kind", to_string(cp.kind)}, {"m", cp.m},         {"t", cp.t},
                {"cell_of", std::move(cells)}, {"y_star", cp.y_star}, {"x_star", cp.x_star}};
}

json to_json(const ColouredRGG &rgg) {
    json j{{"schema", "orthogrid.coloured_rgg/1"},
           {"regime", to_string(rgg.regime)},
           {"n", rgg.n},
           {"r", rgg.r},
           {"params", {{"m", rgg.target.m}, {"d", rgg.target.d}, {"t", rgg.target.t}}},
           {"palette", rgg.palette_size},
           {"homomorphism_ok", rgg.homomorphism_ok},
           {"failure", to_string(rgg.failure)},
           {"c1", nullptr},
           {"c2", nullptr},
           {"verification", nullptr}};
    if (rgg.pair) {
        j["c1"] = rgg.pair->c1;
        j["c2"] = rgg.pair->c2;
        j["colours_used"] = colours_used(*rgg.pair);
    }
    if (rgg.report)
        j["verification"] = to_json(*rgg.report);
    if (rgg.deviation) {
        const DeviationCheck &d = *rgg.deviation;
        j["deviation"] = {{"y_ok", d.y_ok},   {"x_ok", d.x_ok},       {"max_y_dev", d.max_y_dev},
                          {"max_x_dev", d.max_x_dev}, {"y_bound", d.y_bound}, {"x_bound", d.x_bound}};
    }
    if (!rgg.overflow.empty()) {
        json cells = json::array();
        for (const OverfullCell &c : rgg.overflow)
            cells.push_back({{"i", c.cell.i}, {"j", c.cell.j}, {"count", c.count}});
        j["overflow"] = std::move(cells);
    }
    return j;
}

void write_svg(std::ostream &out, const PointSet &ps, const Graph &g, const std::optional<ColouringPair> &pair,
               double size) {
    if (pair && pair->c1.size() != ps.size())
        throw std::invalid_argument("svg: colouring does not cover the point set");
    auto sx = [&](double x) { return format_double(x * size); };
    auto sy = [&](double y) { return format_double((1.0 - y) * size); };
    const std::string side = format_double(size);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
        << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
    out << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    out << "<g stroke=\"#999999\" stroke-width=\"0.5\" stroke-opacity=\"0.5\">\n";
    g.for_each_edge([&](Vertex u, Vertex v) {
        const Point &a = ps.points[u];
        const Point &b = ps.points[v];
        out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
            << "\"/>\n";
    });
    out << "</g>\n<g stroke=\"black\" stroke-width=\"0.3\">\n";
    for (std::size_t v = 0; v < ps.size(); ++v) {
        const Point &p = ps.points[v];
        const char *fill = pair ? fill_for(pair->c1[v]) : "#444444";
        out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

}  // namespace orthogrid::io
