#include "sumsetlab/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

using nlohmann::json;

json point_to_json(const Point& p) {
    json arr = json::array();
    for (const Int& c : p) {
        // coordinates that fit in 64 bits stay numeric, larger ones decay to strings
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    return arr;
}

Point point_from_json(const json& j, int expect_dim) {
    if (!j.is_array()) throw UsageError("point must be a JSON array of integers");
    Point p;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            p.push_back(Int(v.get<long long>()));
        } else if (v.is_string()) {
            try {
                p.push_back(Int(v.get<std::string>()));
            } catch (const std::exception&) {
                throw UsageError("point coordinate is not an integer: " + v.dump());
            }
        } else {
            throw UsageError("point coordinate must be an integer");
        }
    }
    if (expect_dim >= 0 && static_cast<int>(p.size()) != expect_dim)
        throw UsageError("point dimension mismatch in instance file");
    return p;
}

json point_set_to_json(const PointSet& s) {
    json arr = json::array();
    for (const Point& p : s) arr.push_back(point_to_json(p));
    return arr;
}

InstanceFile parse_instance(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!j.is_object()) throw UsageError(origin + ": instance must be a JSON object");
    InstanceFile inst;
    inst.name = j.value("name", std::string("unnamed"));
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw UsageError(origin + ": missing nonempty \"points\" array");
    std::vector<Point> pts;
    int dim = -1;
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
        Point p = point_from_json(j["points"][i], dim);
        if (dim < 0) dim = static_cast<int>(p.size());
        pts.push_back(std::move(p));
    }
    std::size_t before = pts.size();
    inst.points = PointSet(dim, std::move(pts));
    if (inst.points.size() != before)
        throw UsageError(origin + ": duplicate points in instance");
    if (j.contains("basis")) {
        std::vector<Point> bpts;
        for (const auto& v : j["basis"]) bpts.push_back(point_from_json(v, dim));
        inst.basis = PointSet(dim, std::move(bpts));
    }
    if (j.contains("expected")) inst.expected = j["expected"];
    return inst;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str(), path);
}

std::string serialize_instance(const InstanceFile& inst) {
    json j;
    j["name"] = inst.name;
    j["points"] = point_set_to_json(inst.points);
    if (inst.basis) j["basis"] = point_set_to_json(*inst.basis);
    if (!inst.expected.is_null()) j["expected"] = inst.expected;
    return j.dump(2) + "\n";
}

std::string InstanceFile::digest() const {
    // FNV-1a over the canonical serialization
    std::string s = serialize_instance(*this);
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

json tagged(const json& value, const std::string& source) {
    return json{{"value", value}, {"source", source}};
}

json Report::to_json() const {
    json j;
    j["schema"] = schema;
    j["command"] = command;
    j["instance"] = instance;
    j["params"] = params;
    j["results"] = results;
    j["caveats"] = caveats;
    return j;
}

namespace {

void csv_row(std::ostringstream& out, const std::string& key, const json& v) {
    if (v.is_object() && v.contains("value")) {
        csv_row(out, key, v["value"]);
        return;
    }
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            csv_row(out, key.empty() ? it.key() : key + "." + it.key(), it.value());
        return;
    }
    if (v.is_array()) {
        bool scalars = std::all_of(v.begin(), v.end(),
                                   [](const json& e) { return !e.is_structured(); });
        if (scalars) {
            out << key;
            for (const auto& e : v) out << "," << e.dump();
            out << "\n";
        } else {
            int i = 0;
            for (const auto& e : v) csv_row(out, key + "[" + std::to_string(i++) + "]", e);
        }
        return;
    }
    out << key << "," << v.dump() << "\n";
}

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "key,value\n";
    csv_row(out, "", results);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw UsageError("cannot write: " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("cannot rename temporary file onto " + path);
}

}  // namespace sumsetlab
