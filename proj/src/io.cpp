#include "conecert/io.hpp"

#include <fstream>

namespace conecert {

using nlohmann::json;

json point_to_json(const Point& p) { return json(p); }

Point point_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of numbers");
    Point p;
    for (const auto& v : j) {
        if (!v.is_number()) throw InputError(where + ": non-numeric coordinate");
        p.push_back(v.get<double>());
    }
    require_finite(p, where);
    return p;
}

namespace {

std::vector<Point> value_list_from_json(const json& j, int dim,
                                        const std::string& where) {
    if (!j.is_array() || j.empty())
        throw InputError(where + ": expected a nonempty array of points");
    std::vector<Point> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        Point p = point_from_json(j[k], where + " row " + std::to_string(k));
        if (static_cast<int>(p.size()) != dim)
            throw InputError(where + " row " + std::to_string(k) + ": expected " +
                             std::to_string(dim) + " coordinates, got " +
                             std::to_string(p.size()));
        out.push_back(std::move(p));
    }
    return out;
}

PolyhedralCone cone_from_json(const json& doc, const std::string& key, int dim) {
    if (!doc.contains(key)) return PolyhedralCone::orthant(dim);
    const json& c = doc.at(key);
    if (!c.is_object() || !c.contains("generators"))
        throw InputError(key + ": expected an object with a 'generators' array");
    std::vector<Point> gens;
    const json& list = c.at("generators");
    if (!list.is_array() || list.empty())
        throw InputError(key + ".generators: expected a nonempty array");
    for (std::size_t i = 0; i < list.size(); ++i)
        gens.push_back(point_from_json(list[i], key + ".generators[" +
                                                    std::to_string(i) + "]"));
    return PolyhedralCone::make(dim, std::move(gens));
}

int dim_field(const json& dims, const char* name) {
    if (!dims.contains(name) || !dims.at(name).is_number_integer())
        throw InputError(std::string("dimensions.") + name + ": expected an integer");
    return dims.at(name).get<int>();
}

}  // namespace

VPInstance parse_instance(const json& doc) {
    if (!doc.is_object()) throw InputError("instance: expected a JSON object");
    if (doc.contains("schema") && doc.at("schema") != kSchemaTag)
        throw InputError("instance: unsupported schema tag");
    if (!doc.contains("dimensions")) throw InputError("instance: missing 'dimensions'");
    const json& dims = doc.at("dimensions");
    int p = dim_field(dims, "p");
    int q = dim_field(dims, "q");
    int r = dim_field(dims, "r");
    if (p < 1 || q < 1 || r < 0)
        throw InputError("dimensions: need p >= 1, q >= 1, r >= 0");

    VPInstance inst{{}, {p, {}}, {q, {}}, {r, {}}, cone_from_json(doc, "cone_Y", p),
                    cone_from_json(doc, "cone_Z", q)};

    if (!doc.contains("points") || !doc.at("points").is_array() ||
        doc.at("points").empty())
        throw InputError("instance: 'points' must be a nonempty array");
    for (std::size_t i = 0; i < doc.at("points").size(); ++i) {
        const json& pt = doc.at("points")[i];
        std::string at = "points[" + std::to_string(i) + "]";
        if (!pt.is_object() || !pt.contains("label") || !pt.at("label").is_string())
            throw InputError(at + ": expected an object with a string 'label'");
        std::string label = pt.at("label").get<std::string>();
        at = at + " ('" + label + "')";
        for (const std::string& existing : inst.labels)
            if (existing == label)
                throw InputError(at + ": duplicate label");
        inst.labels.push_back(label);
        if (!pt.contains("f")) throw InputError(at + ": missing 'f'");
        if (!pt.contains("g")) throw InputError(at + ": missing 'g'");
        inst.f.values.push_back(value_list_from_json(pt.at("f"), p, at + ".f"));
        inst.g.values.push_back(value_list_from_json(pt.at("g"), q, at + ".g"));
        if (r == 0) {
            if (pt.contains("h") && !pt.at("h").empty())
                throw InputError(at + ".h: must be absent or empty when r = 0");
            inst.h.values.push_back({Point{}});
        } else {
            if (!pt.contains("h")) throw InputError(at + ": missing 'h'");
            inst.h.values.push_back(value_list_from_json(pt.at("h"), r, at + ".h"));
        }
    }
    inst.validate();
    return inst;
}

VPInstance parse_instance_file(const std::string& path) {
    return parse_instance(read_json_file(path));
}

json serialize_instance(const VPInstance& instance) {
    json doc;
    doc["schema"] = kSchemaTag;
    doc["dimensions"] = {{"p", instance.p()}, {"q", instance.q()}, {"r", instance.r()}};
    json ygens = json::array(), zgens = json::array();
    for (const Point& g : instance.coneY.generators()) ygens.push_back(point_to_json(g));
    for (const Point& g : instance.coneZ.generators()) zgens.push_back(point_to_json(g));
    doc["cone_Y"] = {{"generators", ygens}};
    doc["cone_Z"] = {{"generators", zgens}};
    json points = json::array();
    for (std::size_t i = 0; i < instance.labels.size(); ++i) {
        json pt;
        pt["label"] = instance.labels[i];
        json fv = json::array(), gv = json::array();
        for (const Point& y : instance.f.values[i]) fv.push_back(point_to_json(y));
        for (const Point& z : instance.g.values[i]) gv.push_back(point_to_json(z));
        pt["f"] = fv;
        pt["g"] = gv;
        if (instance.r() > 0) {
            json hv = json::array();
            for (const Point& w : instance.h.values[i]) hv.push_back(point_to_json(w));
            pt["h"] = hv;
        }
        points.push_back(std::move(pt));
    }
    doc["points"] = std::move(points);
    return doc;
}

std::string instance_digest(const VPInstance& instance) {
    std::string dump = serialize_instance(instance).dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : dump) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw InputError("failed writing '" + path + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
    return doc;
}

}  // namespace conecert
