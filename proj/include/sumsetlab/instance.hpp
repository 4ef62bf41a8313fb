#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsetlab/point.hpp"

namespace sumsetlab {

// On-disk instance: {"name": str, "points": [[int,...],...]} plus optional
// "basis" (declared simplex basis) and "expected" (regression values).
struct InstanceFile {
    std::string name;
    PointSet points;
    std::optional<PointSet> basis;
    nlohmann::json expected;  // free-form regression block, may be null

    // small stable digest of the canonical serialization
    std::string digest() const;
};

InstanceFile parse_instance(const std::string& text, const std::string& origin = "<input>");
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& inst);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j, int expect_dim = -1);
nlohmann::json point_set_to_json(const PointSet& s);

// Report envelope shared by all CLI subcommands. Values carry a provenance
// tag: "enumerated" | "formula" | "bound".
struct Report {
    std::string schema = "sumsetlab/report-v1";
    std::string command;
    nlohmann::json instance;  // echo: name, digest, sizes
    nlohmann::json params;
    nlohmann::json results;
    std::vector<std::string> caveats;

    nlohmann::json to_json() const;
    std::string to_csv() const;  // flat tables only; scalar results become rows
};

nlohmann::json tagged(const nlohmann::json& value, const std::string& source);

// Writes atomically (temp file + rename).
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sumsetlab
