#include "sri/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sri/gallery.hpp"

namespace sri {

namespace {

using nlohmann::ordered_json;

ordered_json parse_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::parse, "input is not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::vector<Elem>> table_field(const ordered_json& j,
                                           const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        fail(ErrorKind::parse, std::string("field \"") + key +
                                   "\" must be an array of integer rows");
    std::vector<std::vector<Elem>> out;
    for (const auto& row : j[key]) {
        if (!row.is_array())
            fail(ErrorKind::parse,
                 std::string("field \"") + key + "\" has a non-array row");
        std::vector<Elem> r;
        for (const auto& entry : row) {
            if (!entry.is_number_integer())
                fail(ErrorKind::parse, std::string("field \"") + key +
                                           "\" has a non-integer entry");
            r.push_back(entry.get<Elem>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

int int_field(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(ErrorKind::parse,
             std::string("field \"") + key + "\" must be an integer");
    return j[key].get<int>();
}

} // namespace

TableData semiring_table_from_json(const std::string& text) {
    ordered_json j = parse_text(text);
    if (!j.is_object()) fail(ErrorKind::parse, "expected a JSON object");
    TableData data;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            fail(ErrorKind::parse, "field \"name\" must be a string");
        data.name = j["name"].get<std::string>();
    }
    data.size = int_field(j, "size");
    data.add = table_field(j, "add");
    data.mul = table_field(j, "mul");
    data.zero = int_field(j, "zero");
    data.one = int_field(j, "one");
    if (j.contains("elements")) {
        if (!j["elements"].is_array())
            fail(ErrorKind::parse, "field \"elements\" must be an array");
        for (const auto& e : j["elements"]) {
            if (!e.is_string())
                fail(ErrorKind::parse, "element names must be strings");
            data.element_names.push_back(e.get<std::string>());
        }
    }
    return data;
}

std::string semiring_to_json(const Semiring& S, int indent) {
    TableData d = S.table_data();
    ordered_json j;
    if (!d.name.empty()) j["name"] = d.name;
    j["size"] = d.size;
    j["elements"] = d.element_names;
    j["add"] = d.add;
    j["mul"] = d.mul;
    j["zero"] = 0;
    j["one"] = 1;
    return j.dump(indent);
}

SemiringPtr load_semiring_file(const std::string& path, int size_cap) {
    return Semiring::create(semiring_table_from_json(read_file(path)),
                            size_cap);
}

SemiringPtr resolve_semiring_ref(const std::string& ref,
                                 const std::string& base_dir, int size_cap) {
    constexpr std::string_view prefix = "gallery:";
    if (ref.rfind(prefix, 0) == 0)
        return gallery_find(ref.substr(prefix.size()));
    std::filesystem::path p(ref);
    if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
    return load_semiring_file(p.string(), size_cap);
}

SemimodulePtr load_module_file(const std::string& path, int size_cap) {
    ordered_json j = parse_text(read_file(path));
    if (!j.is_object()) fail(ErrorKind::parse, "expected a JSON object");
    if (!j.contains("ring") || !j["ring"].is_string())
        fail(ErrorKind::parse, "field \"ring\" must reference a semiring");
    const std::string base_dir =
        std::filesystem::path(path).parent_path().string();
    SemiringPtr ring =
        resolve_semiring_ref(j["ring"].get<std::string>(), base_dir, size_cap);

    ModuleTableData data;
    if (j.contains("name")) data.name = j["name"].get<std::string>();
    data.size = int_field(j, "size");
    data.add = table_field(j, "add");
    data.zero = int_field(j, "zero");
    data.action = table_field(j, "action");
    return Semimodule::create(std::move(ring), std::move(data));
}

std::string report_to_json(const CheckReport& report, int indent) {
    ordered_json j;
    j["semiring"] = report.semiring;
    j["propositions"] = ordered_json::array();
    for (const auto& p : report.propositions) {
        ordered_json e;
        e["id"] = p.id;
        e["anchor"] = p.summary;
        e["instances"] = p.instances;
        e["failures"] = p.failures;
        if (!p.notes.empty()) e["notes"] = p.notes;
        j["propositions"].push_back(std::move(e));
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(indent);
}

} // namespace sri
