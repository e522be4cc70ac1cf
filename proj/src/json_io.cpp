#include "k3calc/json_io.hpp"

#include <fstream>
#include <limits>

namespace k3calc {

namespace {

Int int_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw Error("field '" + field + "': '" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw Error("field '" + field + "' must be an integer");
}

Json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi) return Json(static_cast<long long>(x));
    return Json(x.str());
}

}  // namespace

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw Error("file '" + path + "' is not valid JSON: " + e.what());
    }
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(what + " is not valid JSON: " + std::string(e.what()));
    }
}

IntLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gram")) throw Error("lattice JSON needs a 'gram' field");
    IntMat gram = matrix_from_json(j.at("gram"));
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) throw Error("field 'labels' must be an array of strings");
        for (const Json& l : j.at("labels")) {
            if (!l.is_string()) throw Error("field 'labels' must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return IntLattice(std::move(gram), std::move(labels));
}

Json lattice_to_json(const IntLattice& l) {
    Json gram = Json::array();
    for (int i = 0; i < l.rank(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < l.rank(); ++j) row.push_back(int_to_json(l.gram.at(i, j)));
        gram.push_back(row);
    }
    return Json{{"labels", l.labels}, {"gram", gram}};
}

Vec vector_from_json(const Json& j, const IntLattice& ambient) {
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != ambient.rank())
            throw Error("vector/lattice rank mismatch");
        Vec v;
        for (const Json& x : j) v.push_back(int_from_json(x, "vector entry"));
        return v;
    }
    if (j.is_object()) {
        Vec v(ambient.rank(), 0);
        for (const auto& [key, val] : j.items()) {
            bool known = false;
            for (int i = 0; i < ambient.rank(); ++i)
                if (ambient.labels[i] == key) {
                    v[i] = int_from_json(val, "vector entry '" + key + "'");
                    known = true;
                    break;
                }
            if (!known) throw Error("unknown label '" + key + "' in vector");
        }
        return v;
    }
    throw Error("vector must be an integer array or a label map");
}

IntMat matrix_from_json(const Json& j) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (j.contains("matrix"))
            rows = &j.at("matrix");
        else if (j.contains("gram"))
            rows = &j.at("gram");
        else
            throw Error("matrix JSON needs a 'matrix' (or 'gram') field");
    }
    if (!rows->is_array()) throw Error("matrix must be a 2D integer array");
    std::vector<std::vector<Int>> data;
    for (const Json& row : *rows) {
        if (!row.is_array()) throw Error("matrix must be a 2D integer array");
        std::vector<Int> r;
        for (const Json& x : row) r.push_back(int_from_json(x, "matrix entry"));
        data.push_back(std::move(r));
    }
    return IntMat::from_rows(data);
}

K3Model model_from_json(const Json& j) {
    if (!j.is_object()) throw Error("model JSON must be an object");
    for (const std::string& field : {"name", "picard", "polarization"})
        if (!j.contains(field)) throw Error("model JSON needs a '" + field + "' field");
    if (!j.at("name").is_string()) throw Error("field 'name' must be a string");
    IntLattice picard = lattice_from_json(j.at("picard"));
    Vec pol = vector_from_json(j.at("polarization"), picard);
    std::optional<MukaiVector> u;
    if (j.contains("spherical_U")) {
        const Json& ju = j.at("spherical_U");
        for (const std::string& field : {"r", "c1", "s"})
            if (!ju.contains(field)) throw Error("field 'spherical_U' needs '" + field + "'");
        u = MukaiVector{int_from_json(ju.at("r"), "spherical_U.r"),
                        vector_from_json(ju.at("c1"), picard),
                        int_from_json(ju.at("s"), "spherical_U.s")};
    }
    return K3Model(j.at("name").get<std::string>(), std::move(picard), std::move(pol), std::move(u));
}

MukaiVector mukai_vector_from_json(const Json& j, const K3Model& m) {
    if (!j.is_object()) throw Error("Mukai vector JSON must be an object");
    for (const std::string& field : {"r", "c1", "s"})
        if (!j.contains(field)) throw Error("Mukai vector JSON needs a '" + field + "' field");
    return MukaiVector{int_from_json(j.at("r"), "r"), vector_from_json(j.at("c1"), m.picard),
                       int_from_json(j.at("s"), "s")};
}

namespace {

ExtInt ext_from_json(const Json& j, const std::string& field) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtInt::inf();
    return ExtInt::of(int_from_json(j, field));
}

std::pair<int, int> key_pair(const std::string& key, const std::string& field) {
    size_t comma = key.find(',');
    if (comma == std::string::npos)
        throw Error("field '" + field + "': key '" + key + "' must look like \"i,j\"");
    try {
        return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error("field '" + field + "': key '" + key + "' must look like \"i,j\"");
    }
}

}  // namespace

ParsedTable table_from_json(const Json& j) {
    if (!j.is_object()) throw Error("table JSON must be an object");
    for (const std::string& field : {"n", "rel_dim"})
        if (!j.contains(field)) throw Error("table JSON needs a '" + field + "' field");
    Int n = int_from_json(j.at("n"), "n");
    if (n < 1 || n > 1000) throw Error("field 'n' must be in [1, 1000]");
    Int rel_dim = int_from_json(j.at("rel_dim"), "rel_dim");

    std::map<std::pair<int, int>, ExtInt> plain, serre;
    if (j.contains("e_plain"))
        for (const auto& [key, val] : j.at("e_plain").items())
            plain[key_pair(key, "e_plain")] = ext_from_json(val, "e_plain['" + key + "']");
    if (j.contains("e_serre"))
        for (const auto& [key, val] : j.at("e_serre").items())
            serre[key_pair(key, "e_serre")] = ext_from_json(val, "e_serre['" + key + "']");

    ParsedTable out{ExtDegreeTable(static_cast<int>(n), rel_dim, std::move(plain), std::move(serre)),
                    false};
    if (j.contains("sheaf_mode")) {
        if (!j.at("sheaf_mode").is_boolean()) throw Error("field 'sheaf_mode' must be a boolean");
        out.sheaf_mode_requested = j.at("sheaf_mode").get<bool>();
    }
    return out;
}

Json reports_to_json(const std::vector<ScenarioReport>& reports) {
    Json arr = Json::array();
    for (const ScenarioReport& r : reports) {
        Json checks = Json::array();
        for (const CheckResult& c : r.checks)
            checks.push_back(Json{{"description", c.description},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"pass", c.pass}});
        arr.push_back(Json{{"name", r.name}, {"checks", checks}, {"verdict", r.verdict}});
    }
    return arr;
}

std::vector<ScenarioReport> reports_from_json(const Json& j) {
    if (!j.is_array()) throw Error("report JSON must be an array");
    std::vector<ScenarioReport> reports;
    for (const Json& jr : j) {
        ScenarioReport r;
        r.name = jr.at("name").get<std::string>();
        r.verdict = jr.at("verdict").get<bool>();
        for (const Json& jc : jr.at("checks"))
            r.checks.push_back({jc.at("description").get<std::string>(),
                                jc.at("expected").get<std::string>(),
                                jc.at("actual").get<std::string>(), jc.at("pass").get<bool>()});
        reports.push_back(std::move(r));
    }
    return reports;
}

std::string serialize_reports(const std::vector<ScenarioReport>& reports) {
    return reports_to_json(reports).dump(2) + "\n";
}

}  // namespace k3calc
