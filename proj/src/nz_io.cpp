#include "qhyp/nz_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qhyp {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

IntVec int_vec(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    IntVec v;
    for (const json& x : j) {
        if (!x.is_number_integer()) throw DomainError(std::string(what) + " entries must be integers");
        v.push_back(x.get<long long>());
    }
    return v;
}

IntMat int_mat(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of rows");
    IntMat m;
    for (const json& r : j) m.push_back(int_vec(r, what));
    return m;
}

Real real_entry(const json& j) {
    if (j.is_string()) return parse_real(j.get<std::string>());
    if (j.is_number_integer()) return Real(j.get<long long>());
    if (j.is_number()) return Real(j.get<double>());
    throw DomainError("shape entries must be decimal strings or numbers");
}

}  // namespace

NZFile parse_nz_json(const std::string& text) {
    json j = parse(text);
    NZFile out;
    NZDatum& nz = out.datum;
    nz.N = field(j, "N").get<int>();
    nz.A = int_mat(field(j, "A"), "A");
    nz.B = int_mat(field(j, "B"), "B");
    nz.nu = int_vec(field(j, "nu"), "nu");
    nz.d = j.contains("d") ? j.at("d").get<int>() : 1;
    nz.f = int_vec(field(j, "f"), "f");
    nz.fp = int_vec(field(j, "fp"), "fp");
    nz.curve = j.contains("curve") ? parse_curve(j.at("curve").get<std::string>()) : Curve::custom;
    validate_nz(nz);
    if (j.contains("shapes")) {
        const json& zs = field(j.at("shapes"), "zp");
        if (!zs.is_array() || zs.size() != static_cast<size_t>(nz.N))
            throw DomainError("shapes.zp must list N complex values");
        CVec zp;
        for (const json& c : zs) {
            if (!c.is_array() || c.size() != 2) throw DomainError("each shape is a [re, im] pair");
            zp.emplace_back(real_entry(c[0]), real_entry(c[1]));
        }
        out.zp = zp;
    }
    return out;
}

NZFile load_nz_file(const std::string& path) { return parse_nz_json(read_file(path)); }

std::string nz_to_json(const NZDatum& nz, const CVec* zp, int digits) {
    json j;
    j["N"] = nz.N;
    j["A"] = nz.A;
    j["B"] = nz.B;
    j["nu"] = nz.nu;
    j["d"] = nz.d;
    j["f"] = nz.f;
    j["fp"] = nz.fp;
    j["curve"] = curve_name(nz.curve);
    if (zp) {
        json zs = json::array();
        for (const Complex& c : *zp) zs.push_back({to_decimal(c.re, digits).str(), to_decimal(c.im, digits).str()});
        j["shapes"]["zp"] = zs;
    }
    return j.dump();
}

RawGluingData parse_raw_json(const std::string& text) {
    json j = parse(text);
    RawGluingData raw;
    raw.G = int_mat(field(j, "G"), "G");
    raw.Gp = int_mat(field(j, "Gp"), "Gp");
    raw.Gpp = int_mat(field(j, "Gpp"), "Gpp");
    if (j.contains("eta")) raw.eta = int_vec(j.at("eta"), "eta");
    validate_raw(raw);
    return raw;
}

RawGluingData load_raw_file(const std::string& path) { return parse_raw_json(read_file(path)); }

}  // namespace qhyp
