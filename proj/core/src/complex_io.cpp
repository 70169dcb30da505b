#include "vnerve/complex_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vnerve/error.hpp"

namespace vnerve {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("input is not valid JSON");
    if (!doc.is_object()) throw ParseError("top level must be an object");
    return doc;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (key == k) known = true;
        if (!known) throw ParseError("unknown key \"" + key + "\" in " + where);
    }
}

int require_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
    return v.get<int>();
}

double require_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + " must be a number");
    return v.get<double>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

} // namespace

CellComplex parse_complex_text(const std::string& text, double tolerance) {
    const json doc = parse_json(text);
    reject_unknown_keys(doc,
                        {"vertices", "edges", "triangles", "filled_cycles",
                         "attached_edges"},
                        "complex");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("missing \"vertices\" list");
    if (doc["vertices"].empty()) throw ParseError("empty \"vertices\" list");

    std::vector<Vertex> vertices;
    std::size_t pos = 0;
    for (const json& v : doc["vertices"]) {
        const std::string where = "vertices[" + std::to_string(pos++) + "]";
        if (!v.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_keys(v, {"id", "x", "y"}, where);
        if (!v.contains("id") || !v.contains("x") || !v.contains("y"))
            throw ParseError(where + " needs id, x and y");
        vertices.push_back({require_int(v["id"], where + ".id"),
                            require_number(v["x"], where + ".x"),
                            require_number(v["y"], where + ".y")});
    }

    auto parse_pairs = [&](const char* key) {
        std::vector<std::array<int, 2>> pairs;
        if (!doc.contains(key)) return pairs;
        if (!doc[key].is_array()) throw ParseError(std::string(key) + " must be a list");
        std::size_t i = 0;
        for (const json& e : doc[key]) {
            const std::string where = std::string(key) + "[" + std::to_string(i++) + "]";
            if (!e.is_array() || e.size() != 2)
                throw ParseError(where + " must be a pair of vertex ids");
            pairs.push_back({require_int(e[0], where), require_int(e[1], where)});
        }
        return pairs;
    };
    const auto edges = parse_pairs("edges");
    const auto attached = parse_pairs("attached_edges");

    std::vector<std::array<int, 3>> triangles;
    if (doc.contains("triangles")) {
        if (!doc["triangles"].is_array()) throw ParseError("triangles must be a list");
        std::size_t i = 0;
        for (const json& t : doc["triangles"]) {
            const std::string where = "triangles[" + std::to_string(i++) + "]";
            if (!t.is_array() || t.size() != 3)
                throw ParseError(where + " must be a triple of vertex ids");
            triangles.push_back({require_int(t[0], where), require_int(t[1], where),
                                 require_int(t[2], where)});
        }
    }

    std::vector<FilledCycle> cycles;
    if (doc.contains("filled_cycles")) {
        if (!doc["filled_cycles"].is_array())
            throw ParseError("filled_cycles must be a list");
        std::size_t i = 0;
        for (const json& c : doc["filled_cycles"]) {
            const std::string where = "filled_cycles[" + std::to_string(i++) + "]";
            if (!c.is_object()) throw ParseError(where + " must be an object");
            reject_unknown_keys(c, {"boundary", "filled", "hole"}, where);
            if (!c.contains("boundary") || !c["boundary"].is_array())
                throw ParseError(where + " needs a boundary list");
            FilledCycle cycle;
            for (const json& id : c["boundary"])
                cycle.boundary.push_back(require_int(id, where + ".boundary"));
            if (c.contains("filled")) {
                if (!c["filled"].is_boolean())
                    throw ParseError(where + ".filled must be a boolean");
                cycle.filled = c["filled"].get<bool>();
            }
            if (c.contains("hole")) {
                if (!c["hole"].is_boolean())
                    throw ParseError(where + ".hole must be a boolean");
                cycle.hole = c["hole"].get<bool>();
            }
            cycles.push_back(std::move(cycle));
        }
    }

    try {
        return CellComplex::build(std::move(vertices), edges, triangles,
                                  std::move(cycles), attached, tolerance);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

CellComplex parse_complex(const std::string& path, double tolerance) {
    try {
        return parse_complex_text(read_file(path), tolerance);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_complex(const CellComplex& E) {
    json doc = json::object();
    doc["vertices"] = json::array();
    for (const Vertex& v : E.vertices())
        doc["vertices"].push_back({{"id", v.id}, {"x", v.x}, {"y", v.y}});
    doc["edges"] = json::array();
    for (const Edge& e : E.edges()) doc["edges"].push_back({e.a, e.b});
    if (!E.triangles().empty()) {
        doc["triangles"] = json::array();
        for (const Triangle& t : E.triangles())
            doc["triangles"].push_back({t.corners[0], t.corners[1], t.corners[2]});
    }
    if (!E.declared_cycles().empty()) {
        doc["filled_cycles"] = json::array();
        for (const FilledCycle& c : E.declared_cycles())
            doc["filled_cycles"].push_back(
                {{"boundary", c.boundary}, {"filled", c.filled}, {"hole", c.hole}});
    }
    if (!E.attached_edges().empty()) {
        doc["attached_edges"] = json::array();
        for (const Edge& e : E.attached_edges()) doc["attached_edges"].push_back({e.a, e.b});
    }
    return doc.dump(2) + "\n";
}

void write_complex(const CellComplex& E, const std::string& path) {
    write_file(path, serialize_complex(E));
}

std::vector<Disk> parse_disks_text(const std::string& text) {
    const json doc = parse_json(text);
    reject_unknown_keys(doc, {"disks"}, "disk family");
    if (!doc.contains("disks") || !doc["disks"].is_array())
        throw ParseError("missing \"disks\" list");
    std::vector<Disk> disks;
    std::size_t i = 0;
    for (const json& d : doc["disks"]) {
        const std::string where = "disks[" + std::to_string(i++) + "]";
        if (!d.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_keys(d, {"x", "y", "r"}, where);
        if (!d.contains("x") || !d.contains("y") || !d.contains("r"))
            throw ParseError(where + " needs x, y and r");
        Disk disk{{require_number(d["x"], where + ".x"),
                   require_number(d["y"], where + ".y")},
                  require_number(d["r"], where + ".r")};
        if (disk.radius <= 0) throw ParseError(where + ".r must be positive");
        disks.push_back(disk);
    }
    return disks;
}

std::vector<Disk> parse_disks(const std::string& path) {
    try {
        return parse_disks_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_disks(const std::vector<Disk>& family) {
    json doc = json::object();
    doc["disks"] = json::array();
    for (const Disk& d : family)
        doc["disks"].push_back({{"x", d.center.x}, {"y", d.center.y}, {"r", d.radius}});
    return doc.dump(2) + "\n";
}

void write_disks(const std::vector<Disk>& family, const std::string& path) {
    write_file(path, serialize_disks(family));
}

} // namespace vnerve
