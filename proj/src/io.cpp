#include "fskit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fskit/format.hpp"

namespace fskit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_col_at(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError("missing or non-array field \"" + key + "\"");
    std::vector<std::string> out;
    for (const auto& v : j[key]) {
        if (!v.is_string())
            throw ParseError("field \"" + key + "\" must contain strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

double parse_decimal(const std::string& s, const std::string& where) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError("not a decimal number at " + where + ": \"" + s + "\"");
    return v;
}

double parse_grade_cell(const ordered_json& cell, const std::string& where) {
    double v = 0.0;
    if (cell.is_string())
        v = parse_decimal(cell.get<std::string>(), where);
    else if (cell.is_number())
        v = cell.get<double>();
    else
        throw ParseError("grade at " + where + " must be a decimal string");
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError("grade out of range [0,1] at " + where + ": " +
                              format_double(v));
    return v;
}

std::vector<std::vector<double>> grade_matrix(const ordered_json& rows,
                                              const std::vector<std::string>& params,
                                              const std::vector<std::string>& objects,
                                              const std::string& where) {
    if (!rows.is_array() || rows.size() != params.size())
        throw ValidationError(where + " must have one row per parameter");
    std::vector<std::vector<double>> grades;
    grades.reserve(rows.size());
    for (std::size_t e = 0; e < rows.size(); ++e) {
        const auto& row = rows[e];
        if (!row.is_array() || row.size() != objects.size())
            throw ValidationError(where + " row \"" + params[e] +
                                  "\" must have one grade per object");
        std::vector<double> out_row;
        out_row.reserve(row.size());
        for (std::size_t x = 0; x < row.size(); ++x)
            out_row.push_back(parse_grade_cell(
                row[x], where + "[" + params[e] + "][" + objects[x] + "]"));
        grades.push_back(std::move(out_row));
    }
    return grades;
}

ParameterSet params_from_doc(const ordered_json& j) {
    auto labels = string_list(j, "parameters");
    if (j.contains("reindex")) {
        if (!j["reindex"].is_array() || j["reindex"].size() != labels.size())
            throw ValidationError("reindex must list one value per parameter");
        std::vector<double> values;
        for (std::size_t i = 0; i < j["reindex"].size(); ++i) {
            const auto& cell = j["reindex"][i];
            if (cell.is_string())
                values.push_back(
                    parse_decimal(cell.get<std::string>(), "reindex[" + labels[i] + "]"));
            else if (cell.is_number())
                values.push_back(cell.get<double>());
            else
                throw ParseError("reindex values must be decimal strings");
        }
        return ParameterSet(std::move(labels), std::move(values));
    }
    return ParameterSet(std::move(labels));
}

ordered_json fss_header(const FuzzySoftSet& fss) {
    ordered_json j;
    j["universe"] = fss.universe().labels();
    j["parameters"] = fss.params().labels();
    if (fss.params().has_reindex()) {
        ordered_json reindex = ordered_json::array();
        for (double v : fss.params().reindex()) reindex.push_back(format_double(v));
        j["reindex"] = reindex;
    }
    return j;
}

ordered_json matrix_json(const std::vector<std::vector<double>>& grades) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : grades) {
        ordered_json out_row = ordered_json::array();
        for (double g : row) out_row.push_back(format_double(g));
        rows.push_back(out_row);
    }
    return rows;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

FuzzySoftSet fss_from_json(const std::string& text) {
    const ordered_json j = parse_json(text);
    const auto objects = string_list(j, "universe");
    ParameterSet params = params_from_doc(j);
    if (!j.contains("grades"))
        throw ParseError("missing field \"grades\"");
    auto grades = grade_matrix(j["grades"], params.labels(), objects, "grades");
    return FuzzySoftSet(std::move(params), Universe(objects), std::move(grades));
}

std::string fss_to_json(const FuzzySoftSet& fss) {
    ordered_json j = fss_header(fss);
    j["grades"] = matrix_json(fss.grades());
    return j.dump(2) + "\n";
}

FuzzySoftSet fss_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    if (rows.size() < 2) throw ParseError("CSV needs a header row and at least one data row");

    std::vector<std::string> objects(rows.front().begin() + 1, rows.front().end());
    std::vector<std::string> params;
    std::vector<std::vector<double>> grades;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != objects.size() + 1)
            throw ParseError("CSV row has wrong cell count", r + 1, 1);
        params.push_back(row.front());
        std::vector<double> out_row;
        for (std::size_t x = 0; x < objects.size(); ++x) {
            const double v =
                parse_decimal(row[x + 1], "row " + row.front() + ", column " + objects[x]);
            if (!(v >= 0.0 && v <= 1.0))
                throw ValidationError("grade out of range [0,1] at row " + row.front() +
                                      ", column " + objects[x] + ": " + row[x + 1]);
            out_row.push_back(v);
        }
        grades.push_back(std::move(out_row));
    }
    return FuzzySoftSet(ParameterSet(std::move(params)), Universe(std::move(objects)),
                        std::move(grades));
}

std::string fss_to_csv(const FuzzySoftSet& fss) {
    std::string out;
    for (const auto& l : fss.universe().labels()) out += "," + l;
    out += "\n";
    for (std::size_t e = 0; e < fss.params().size(); ++e) {
        out += fss.params().label(e);
        for (std::size_t x = 0; x < fss.universe().size(); ++x)
            out += "," + format_double(fss.grade(e, x));
        out += "\n";
    }
    return out;
}

FuzzySoftSet load_fss(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return path.extension() == ".csv" ? fss_from_csv(text) : fss_from_json(text);
}

void save_fss(const FuzzySoftSet& fss, const std::filesystem::path& path) {
    write_text_file(path, path.extension() == ".csv" ? fss_to_csv(fss) : fss_to_json(fss));
}

std::vector<FuzzySoftSet> fs_collection_from_json(const std::string& text) {
    const ordered_json j = parse_json(text);
    const auto objects = string_list(j, "universe");
    const ParameterSet params = params_from_doc(j);
    if (!j.contains("opens") || !j["opens"].is_array())
        throw ParseError("missing or non-array field \"opens\"");
    std::vector<FuzzySoftSet> out;
    for (std::size_t i = 0; i < j["opens"].size(); ++i) {
        auto grades = grade_matrix(j["opens"][i], params.labels(), objects,
                                   "opens[" + std::to_string(i) + "]");
        out.emplace_back(params, Universe(objects), std::move(grades));
    }
    return out;
}

std::string fs_collection_to_json(const std::vector<FuzzySoftSet>& opens) {
    if (opens.empty()) throw ValidationError("cannot serialize an empty collection");
    ordered_json j = fss_header(opens.front());
    ordered_json arr = ordered_json::array();
    for (const auto& f : opens) arr.push_back(matrix_json(f.grades()));
    j["opens"] = arr;
    return j.dump(2) + "\n";
}

CrispTopology crisp_topology_from_json(const std::string& text) {
    const ordered_json j = parse_json(text);
    const Universe universe(string_list(j, "universe"));
    if (!j.contains("opens") || !j["opens"].is_array())
        throw ParseError("missing or non-array field \"opens\"");
    std::vector<CrispSet> opens;
    for (const auto& open : j["opens"]) {
        if (!open.is_array()) throw ParseError("each open must be a list of object labels");
        CrispSet s(universe.size(), false);
        for (const auto& label : open) {
            auto idx = universe.index_of(label.get<std::string>());
            if (!idx)
                throw ValidationError("open names unknown object: " +
                                      label.get<std::string>());
            s[*idx] = true;
        }
        opens.push_back(std::move(s));
    }
    return CrispTopology(universe, std::move(opens));
}

std::vector<FuzzySoftPoint> points_from_json(const std::string& text) {
    const ordered_json j = parse_json(text);
    const ParameterSet params = params_from_doc(j);
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("missing or non-array field \"points\"");
    std::vector<FuzzySoftPoint> out;
    for (const auto& p : j["points"]) {
        if (!p.contains("support") || !p["support"].is_string())
            throw ParseError("point needs a \"support\" label");
        if (!p.contains("lambda") || !p["lambda"].is_array() ||
            p["lambda"].size() != params.size())
            throw ParseError("point needs one \"lambda\" grade per parameter");
        std::vector<double> lambda;
        for (std::size_t e = 0; e < params.size(); ++e)
            lambda.push_back(parse_grade_cell(p["lambda"][e],
                                              "lambda[" + params.label(e) + "]"));
        out.emplace_back(p["support"].get<std::string>(), params, std::move(lambda));
    }
    return out;
}

std::pair<Matrix, Vector> affine_from_json(const std::string& text) {
    const ordered_json j = parse_json(text);
    if (!j.contains("A") || !j["A"].is_array() || !j.contains("b") || !j["b"].is_array())
        throw ParseError("affine map document needs array fields \"A\" and \"b\"");
    Matrix a;
    for (const auto& row : j["A"]) {
        if (!row.is_array()) throw ParseError("\"A\" must be a matrix");
        Vector r;
        for (const auto& v : row) r.push_back(v.get<double>());
        a.push_back(std::move(r));
    }
    Vector b;
    for (const auto& v : j["b"]) b.push_back(v.get<double>());
    return {std::move(a), std::move(b)};
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path.string());
    out << text;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[digest & 0xf];
        digest >>= 4;
    }
    return out;
}

void RunReport::add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

void RunReport::add_line(std::string line) { lines_.push_back(std::move(line)); }

std::string RunReport::to_text() const {
    std::string out;
    for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
    for (const auto& l : lines_) out += l + "\n";
    return out;
}

std::string RunReport::to_json() const {
    ordered_json j;
    for (const auto& [k, v] : fields_) j[k] = v;
    if (!lines_.empty()) j["lines"] = lines_;
    return j.dump(2) + "\n";
}

}  // namespace fskit
