#include <gie/action_file.hpp>
#include <gie/error.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gie {

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw Error(Errc::ParseError, "expected a rational string, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) { return gie::to_string(s); }

Json grand_constant_to_json(const GrandConstant& c) {
    if (c.is_rational()) return scalar_to_json(c.rational_part());
    Json logs = Json::array();
    for (const auto& [coeff, arg] : c.log_terms()) logs.push_back(Json{{"ln", to_string(arg)}, {"coeff", to_string(coeff)}});
    return Json{{"rational", to_string(c.rational_part())}, {"logs", logs}};
}

GrandConstant grand_constant_from_json(const Json& j) {
    if (!j.is_object()) return GrandConstant(scalar_from_json(j));
    GrandConstant c;
    if (j.contains("rational")) c = GrandConstant(scalar_from_json(j.at("rational")));
    if (j.contains("logs")) {
        const Json& logs = j.at("logs");
        if (!logs.is_array()) throw Error(Errc::ParseError, "logs must be an array");
        for (const auto& t : logs) {
            if (!t.is_object() || !t.contains("ln") || !t.contains("coeff"))
                throw Error(Errc::ParseError, "log term needs ln and coeff");
            Scalar arg = scalar_from_json(t.at("ln"));
            if (is_zero(arg)) throw Error(Errc::ParseError, "ln(0) in constant");
            c += GrandConstant::log(arg, scalar_from_json(t.at("coeff")));
        }
    }
    return c;
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw Error(Errc::ParseError, "matrix must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw Error(Errc::ParseError, "matrix rows must be nonempty arrays");
    int cols = static_cast<int>(j[0].size());
    RatMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw Error(Errc::ParseError, "ragged matrix");
        for (int c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
    }
    return m;
}

std::string index_key(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::string key;
    for (int r : rows) key += std::to_string(r + 1);
    key += ',';
    for (int c : cols) key += std::to_string(c + 1);
    return key;
}

namespace {

std::vector<int> parse_side(const std::string& text, int n, int k, const std::string& key) {
    if (static_cast<int>(text.size()) != k) throw Error(Errc::ParseError, "key '" + key + "' has wrong length");
    std::vector<int> out;
    for (char ch : text) {
        if (ch < '1' || ch > '9') throw Error(Errc::ParseError, "bad index in key '" + key + "'");
        int v = ch - '1';
        if (v >= n) throw Error(Errc::ParseError, "index out of range in key '" + key + "'");
        if (!out.empty() && v <= out.back())
            throw Error(Errc::ParseError, "indices must increase in key '" + key + "'");
        out.push_back(v);
    }
    return out;
}

std::string block_name(int k) { return "A" + std::to_string(2 * k); }

} // namespace

std::pair<std::vector<int>, std::vector<int>> parse_index_key(const std::string& key, int n, int k) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw Error(Errc::ParseError, "key '" + key + "' lacks a comma");
    return {parse_side(key.substr(0, comma), n, k, key), parse_side(key.substr(comma + 1), n, k, key)};
}

Json block_to_json(const RatMatrix& block, int n, int k) {
    const auto& sets = subsets(n, k);
    Json obj = Json::object();
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size(); ++j) {
            const Scalar& v = block(static_cast<int>(i), static_cast<int>(j));
            if (!is_zero(v)) obj[index_key(sets[i], sets[j])] = scalar_to_json(v);
        }
    return obj;
}

Json action_to_json(const ActionSpec& spec) {
    spec.validate();
    Json j;
    j["n"] = spec.n;
    j["A0"] = grand_constant_to_json(spec.a0);
    j["A2"] = matrix_to_json(spec.a2());
    for (int k = 2; k <= spec.n; ++k) {
        const RatMatrix& b = spec.block(k);
        if (b.is_zero()) continue;
        if (k >= 4 && b.rows() == 1)
            j[block_name(k)] = scalar_to_json(b(0, 0));
        else
            j[block_name(k)] = block_to_json(b, spec.n, k);
    }
    return j;
}

ActionSpec action_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "action file must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error(Errc::ParseError, "missing integer field n");
    int n = j.at("n").get<int>();
    if (n < 1 || n > 5) throw Error(Errc::ParseError, "n must be in 1..5");
    ActionSpec spec = ActionSpec::zero(n);
    if (j.contains("A0")) spec.a0 = grand_constant_from_json(j.at("A0"));
    if (!j.contains("A2")) throw Error(Errc::ParseError, "missing field A2");
    RatMatrix a2 = matrix_from_json(j.at("A2"));
    if (a2.rows() != n || a2.cols() != n) throw Error(Errc::BadShape, "A2 must be n x n");
    spec.block(1) = a2;
    for (int k = 2; k <= n; ++k) {
        std::string name = block_name(k);
        if (!j.contains(name)) continue;
        const Json& b = j.at(name);
        RatMatrix& block = spec.block(k);
        if (b.is_string() || b.is_number_integer()) {
            if (block.rows() != 1) throw Error(Errc::ParseError, name + " must be an object of index keys");
            block(0, 0) = scalar_from_json(b);
            continue;
        }
        if (!b.is_object()) throw Error(Errc::ParseError, name + " must be an object");
        for (const auto& [key, value] : b.items()) {
            auto [rows, cols] = parse_index_key(key, n, k);
            block(subset_index(n, rows), subset_index(n, cols)) = scalar_from_json(value);
        }
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key.size() >= 2 && key[0] == 'A' && key != "A0") {
            int order = std::atoi(key.c_str() + 1);
            if (order % 2 != 0 || order / 2 > n || order <= 0)
                throw Error(Errc::BadShape, "field " + key + " does not fit n = " + std::to_string(n));
        }
    }
    return spec;
}

std::string print_action_file(const ActionSpec& spec) { return action_to_json(spec).dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

ActionSpec parse_action_file(const std::string& text) { return action_from_json(parse_json_text(text)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    out << text;
}

} // namespace gie
