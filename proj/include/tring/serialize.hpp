#pragma once

// JSON documents for algebras, quivers, modules, bimodules, pairs, copairs
// and manifests. Field elements are integers 0..p-1; matrices are
// {"rows","cols","entries"} with row-major nested arrays.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tring/tring.hpp"

namespace tr {

using Json = nlohmann::json;

inline constexpr const char* kLibraryVersion = "1.0.0";

Json fieldToJson(const Field& f);
Field fieldFromJson(const Json& j, const std::string& path = "");

Json matrixToJson(const Mat& m);
/// Accepts the object form or a bare nested array (then rows/cols are
/// inferred, with `expectRows`/`expectCols` used for empty arrays).
Mat matrixFromJson(const Json& j, const Field& f, const std::string& path, std::size_t expectRows = 0,
                   std::size_t expectCols = 0);

Json algebraToJson(const Algebra& a);
/// Structure-constant document, or a quiver document when "vertices" is present.
AlgebraPtr algebraFromJson(const Json& j, const std::string& path = "");

Json quiverToJson(const Field& f, const Quiver& q, const std::vector<MonomialRelation>& rels);

Json moduleToJson(const FdModule& x);
FdModule moduleFromJson(const Json& j, const AlgebraPtr& a, const std::string& path = "");

Json bimoduleToJson(const Bimodule& m);
Bimodule bimoduleFromJson(const Json& j, const AlgebraPtr& left, const AlgebraPtr& right, const std::string& path = "");

Json pairToJson(const PairModule& p);
PairModule pairFromJson(const Json& j, const TensorRing& ctx, const std::string& path = "");

Json copairToJson(const CopairModule& c);
CopairModule copairFromJson(const Json& j, const TensorRing& ctx, const std::string& path = "");

/// Reads a JSON file; parse errors carry the file name and byte offset.
Json readJsonFile(const std::filesystem::path& p);
void writeJsonFile(const std::filesystem::path& p, const Json& j);
/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dumpJson(const Json& j);

struct Instance {
  AlgebraPtr r;
  Bimodule m;
};
/// Loads an algebra and an R-bimodule from files.
Instance loadInstance(const std::filesystem::path& algebra, const std::filesystem::path& bimodule);
/// Loads from a directory containing manifest.json or from a manifest file.
Instance loadManifest(const std::filesystem::path& dirOrFile);
void writeInstance(const std::filesystem::path& dir, const Algebra& r, const Bimodule& m);

}  // namespace tr
