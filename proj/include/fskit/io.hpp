#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fskit/normed.hpp"
#include "fskit/soft_set.hpp"
#include "fskit/topology.hpp"

namespace fskit {

/// Grade-table document: UTF-8 JSON with fixed key order
/// {"universe", "parameters", "reindex"?, "grades"}, grades and re-index
/// values as decimal strings so canonical documents round-trip
/// byte-for-byte.
FuzzySoftSet fss_from_json(const std::string& text);
std::string fss_to_json(const FuzzySoftSet& fss);

/// CSV form: header row lists objects (corner cell blank), each data row is
/// a parameter label followed by its grades. No re-index metadata.
FuzzySoftSet fss_from_csv(const std::string& text);
std::string fss_to_csv(const FuzzySoftSet& fss);

/// Extension-dispatched file round trip (.json or .csv).
FuzzySoftSet load_fss(const std::filesystem::path& path);
void save_fss(const FuzzySoftSet& fss, const std::filesystem::path& path);

/// Topology documents: a list of grade matrices over one (universe,
/// parameters) header.
std::vector<FuzzySoftSet> fs_collection_from_json(const std::string& text);
std::string fs_collection_to_json(const std::vector<FuzzySoftSet>& opens);

/// Crisp topology document: opens as lists of object labels.
CrispTopology crisp_topology_from_json(const std::string& text);

/// Point sample document: {"parameters": [...], "points": [{"support",
/// "lambda"}]}.
std::vector<FuzzySoftPoint> points_from_json(const std::string& text);

/// Affine map document: {"A": [[...]], "b": [...]}.
std::pair<Matrix, Vector> affine_from_json(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// FNV-1a over bytes; used as the inputs digest in reports.
std::uint64_t fnv1a(std::string_view bytes);
std::string digest_hex(std::uint64_t digest);

/// Ordered key/value report with optional free-form body lines. Field order
/// is insertion order, so identical runs emit identical bytes; the timing
/// field is appended last by the caller and excluded from comparisons.
class RunReport {
public:
    void add(std::string key, std::string value);
    void add_line(std::string line);

    const std::vector<std::pair<std::string, std::string>>& fields() const noexcept {
        return fields_;
    }
    const std::vector<std::string>& lines() const noexcept { return lines_; }

    std::string to_text() const;
    std::string to_json() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<std::string> lines_;
};

}  // namespace fskit
