#include "paralie_tools/json_io.hpp"

#include <cmath>
#include <string>

namespace paralie::io {

namespace {

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite number");
    return x;
}

const json& array_of_three(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw ParseError(std::string(what) + ": expected an array of length 3");
    }
    return j;
}

double optional_number(const json& j, const char* key) {
    if (!j.contains(key)) return 0.0;
    return number_at(j.at(key), key);
}

}  // namespace

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Mat3& m) {
    json out = json::array();
    for (std::size_t r = 0; r < 3; ++r) out.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
    return out;
}

json to_json(const Tensor3& t) {
    json out = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < 3; ++j)
            plane.push_back(json::array({t(i, j, 0), t(i, j, 1), t(i, j, 2)}));
        out.push_back(plane);
    }
    return out;
}

json to_json(const ClassParams& p) {
    return {{"class", std::string(to_string(p.id))}, {"alpha", p.alpha}, {"beta", p.beta}};
}

json to_json(const StructureConstants& c) { return {{"C", to_json(c.tensor())}}; }

json to_json(const FTensor& f) { return {{"F", to_json(f.f)}}; }

json to_json(const LeeForms& lee) {
    return {{"theta", to_json(lee.theta)},
            {"theta_star", to_json(lee.theta_star)},
            {"omega", to_json(lee.omega)}};
}

json to_json(const ClassReport& r) {
    json verdict = json::array();
    for (ClassId id : r.verdict) verdict.push_back(std::string(to_string(id)));

    json params = json::object();
    for (const ClassParams& p : r.components) {
        json entry = {{"alpha", p.alpha}};
        if (has_beta(p.id)) entry["beta"] = p.beta;
        params[std::string(to_string(p.id))] = entry;
    }

    json out = {{"verdict", verdict},
                {"residual", r.residual},
                {"unclassified", r.unclassified},
                {"lee", to_json(r.lee)},
                {"para_sasakian", r.para_sasakian},
                {"params", params}};
    // Top-level alpha/beta describe a single class; mixed verdicts leave them null.
    if (r.verdict.size() == 1) {
        const ClassParams p = r.params(r.verdict.front());
        out["alpha"] = p.alpha;
        out["beta"] = p.beta;
    } else {
        out["alpha"] = nullptr;
        out["beta"] = nullptr;
    }
    return out;
}

json to_json(const ExpResult& r) {
    json out = {{"A", to_json(r.A)},
                {"t", r.t},
                {"u", r.u},
                {"branch", std::string(to_string(r.branch))},
                {"expA", to_json(r.expA)}};
    out["oracle_residual"] = r.oracle_residual ? json(*r.oracle_residual) : json(nullptr);
    return out;
}

Mat3 mat3_from_json(const json& j) {
    array_of_three(j, "matrix");
    Mat3::Rows rows{};
    for (std::size_t r = 0; r < 3; ++r) {
        const json& row = array_of_three(j[r], "matrix row");
        for (std::size_t c = 0; c < 3; ++c) rows[r][c] = number_at(row[c], "matrix entry");
    }
    return Mat3(rows);
}

Tensor3 tensor3_from_json(const json& j) {
    array_of_three(j, "tensor");
    Tensor3 t;
    for (std::size_t i = 0; i < 3; ++i) {
        const json& plane = array_of_three(j[i], "tensor plane");
        for (std::size_t k = 0; k < 3; ++k) {
            const json& row = array_of_three(plane[k], "tensor row");
            for (std::size_t m = 0; m < 3; ++m) t(i, k, m) = number_at(row[m], "tensor entry");
        }
    }
    return t;
}

ClassParams class_params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("class") || !j.at("class").is_string()) {
        throw ParseError("class parameters: expected {\"class\": \"F..\", ...}");
    }
    const auto id = parse_class_id(j.at("class").get<std::string>());
    if (!id) throw ParseError("unknown class id: " + j.at("class").get<std::string>());
    ClassParams p{*id, optional_number(j, "alpha"), optional_number(j, "beta")};
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return p;
}

FTensor ftensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("F")) throw ParseError("expected {\"F\": [[[..]]]}");
    return FTensor{tensor3_from_json(j.at("F"))};
}

StructureConstants structure_constants_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("structure constants: expected a JSON object");
    if (j.contains("C")) return StructureConstants::from_tensor(tensor3_from_json(j.at("C")));
    if (j.contains("class")) return class_algebra(class_params_from_json(j));
    throw ParseError("structure constants: expected key \"C\" or \"class\"");
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace paralie::io
