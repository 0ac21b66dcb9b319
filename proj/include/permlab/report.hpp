#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permlab/corpus.hpp"
#include "permlab/relation.hpp"

namespace permlab {

using Json = nlohmann::json;

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int schema_version = 1;

enum class Format { Json, Text, Dot };
Format parse_format(const std::string& s);  // throws InvalidArgument

struct PassInfo {
    std::string name;
    std::string description;
};
// Every pass in the order --help lists them.
const std::vector<PassInfo>& analysis_passes();

struct AnalysisRequest {
    std::optional<std::string> fixture;
    std::vector<std::string> generators;  // 1-based cycle notation
    std::size_t degree = 0;
    std::vector<std::string> passes;
};

// A report body plus any DOT graphs it produced, in pass order.
struct Report {
    Json json;
    std::vector<std::string> dot;
};

// Header fields shared by every verb: schema, tool version, caps.
Json envelope(const std::string& verb);

// Validates the request first (unknown pass, missing group, empty pass list), then runs the
// passes in the order given. Points are 1-based throughout.
Report analyze(const AnalysisRequest& req);

Json fixture_summary(const Fixture& f);
Json fixture_details(const Fixture& f);

Json point_set(const PointSet& s);
Json relation_json(const RelationK& r);

// Text: indented key/value lines, arrays of scalars inline. Dot: the graphs, then the text
// rendering as comments.
std::string render(const Report& r, Format f);

}  // namespace permlab
