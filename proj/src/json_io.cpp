#include "greenseq/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

using nlohmann::json;

i64 int_at(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InvalidInput(where + " must be an integer");
    return j.get<i64>();
}

Mat mat_from_json(const json& j, int n, const std::string& key) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw InvalidInput("'" + key + "' must be an array of " + std::to_string(n) + " rows");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InvalidInput("'" + key + "' row " + std::to_string(i + 1) + " must have " +
                               std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c)
            m(i, c) = int_at(row[c], "'" + key + "' entry");
    }
    return m;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

QuiverFile parse_quiver_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw InvalidInput(std::string("not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw InvalidInput("top-level JSON value must be an object");
    for (const auto& item : doc.items())
        if (item.key() != "n" && item.key() != "d" && item.key() != "b0" && item.key() != "e")
            throw InvalidInput("unknown key '" + item.key() + "'");
    if (!doc.contains("n") || !doc.contains("d") || !doc.contains("b0"))
        throw InvalidInput("required keys: n, d, b0");

    QuiverFile qf;
    i64 n = int_at(doc["n"], "'n'");
    if (n < 1 || n > 64) throw InvalidInput("'n' must be between 1 and 64");
    qf.spec.n = static_cast<int>(n);

    const json& d = doc["d"];
    if (!d.is_array() || static_cast<int>(d.size()) != qf.spec.n)
        throw InvalidInput("'d' must be an array of n positive integers");
    for (const json& entry : d) qf.spec.d.push_back(int_at(entry, "'d' entry"));

    qf.spec.b0 = mat_from_json(doc["b0"], qf.spec.n, "b0");
    try {
        validate_quiver(qf.spec);
    } catch (const Error& ex) {
        throw InvalidInput(std::string("invalid quiver: ") + ex.what());
    }

    if (doc.contains("e")) {
        qf.e = mat_from_json(doc["e"], qf.spec.n, "e");
        euler_from_explicit(qf.spec, *qf.e); /* full invariant check */
    }
    return qf;
}

QuiverFile load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver_json(buf.str());
}

std::string quiver_to_json(const QuiverFile& qf) {
    json doc;
    doc["n"] = qf.spec.n;
    doc["d"] = qf.spec.d;
    doc["b0"] = mat_to_json(qf.spec.b0);
    if (qf.e) doc["e"] = mat_to_json(*qf.e);
    return doc.dump() + "\n";
}

EulerData euler_for(const QuiverFile& qf) {
    return qf.e ? euler_from_explicit(qf.spec, *qf.e) : euler_from_b0(qf.spec);
}

}  // namespace greenseq
