#include "tla/moments.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "tla/error.hpp"

namespace tla {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& pointer, const std::string& msg) {
    fail("Schema", pointer + ": " + msg);
}

std::string frac(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Scalar scalar_at(const json& v, const std::string& ptr) {
    if (!v.is_string()) schema_fail(ptr, "expected a scalar string");
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const Error& e) {
        schema_fail(ptr, e.what());
    } catch (const std::exception&) {
        schema_fail(ptr, "bad scalar: " + v.get<std::string>());
    }
}

std::vector<Scalar> sequence_at(const json& v, const std::string& ptr) {
    if (!v.is_array()) schema_fail(ptr, "expected an array of scalar strings");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(scalar_at(v[i], ptr + "/" + std::to_string(i)));
    return out;
}

json sequence_json(const std::vector<Scalar>& seq) {
    json arr = json::array();
    for (const Scalar& s : seq) arr.push_back(scalar_json(s));
    return arr;
}

long a_max_at(const json& root) {
    if (!root.contains("a_max")) schema_fail("/a_max", "missing");
    const json& v = root["a_max"];
    if (!v.is_number_integer() || v.get<long>() < 0)
        schema_fail("/a_max", "expected a nonnegative integer");
    return v.get<long>();
}

json result_object(const ClassificationResult& r) {
    json cert;
    cert["recurrence"] = sequence_json(r.recurrence);
    cert["char_poly"] = sequence_json(r.charpoly);
    json checks = json::array();
    for (const CheckRecord& c : r.certificate)
        checks.push_back(json{{"name", c.name}, {"pass", c.passed}});
    cert["checks"] = checks;

    json params(json::value_t::object);
    if (r.is_general) {
        json nodes(json::value_t::object);
        for (const auto& [node, nr] : r.node_results)
            nodes[std::to_string(node)] = result_object(nr);
        params["nodes"] = nodes;
    } else {
        if (r.nu_plus) params["nu1"] = scalar_json(*r.nu_plus);
        if (r.nu_minus) params["nu-1"] = scalar_json(*r.nu_minus);
        std::vector<Scalar> betas, alphas;
        for (const RootInfo& root : r.roots) {
            long reps = root.mult > 0 ? root.mult : 1;
            for (long i = 0; i < reps; ++i) betas.push_back(root.beta);
            alphas.insert(alphas.end(), root.alphas.begin(), root.alphas.end());
        }
        std::sort(betas.begin(), betas.end(), canonical_less);
        std::sort(alphas.begin(), alphas.end(), canonical_less);
        params["beta"] = sequence_json(betas);
        params["alphas"] = sequence_json(alphas);
    }

    json out;
    out["verdict"] = verdict_name(r.verdict);
    out["params"] = params;
    out["certificate"] = cert;
    return out;
}

} // namespace

std::string scalar_json(const Scalar& s) {
    std::string out = frac(s.rat());
    if (s.irr() != 0) {
        Rational a = s.irr() < 0 ? Rational(-s.irr()) : s.irr();
        out += s.irr() < 0 ? '-' : '+';
        out += frac(a) + "*sqrt(" + std::to_string(Scalar::field_d()) + ")";
    }
    return out;
}

std::string case_tag(CaseKind kind) {
    switch (kind) {
    case CaseKind::DeltaA1: return "DeltaA1";
    case CaseKind::A1: return "A1";
    case CaseKind::AI1: return "AI1";
    case CaseKind::AI2: return "AI2";
    }
    fail("Internal", "unhandled case kind");
}

CaseKind case_kind_from_tag(const std::string& tag) {
    if (tag == "DeltaA1") return CaseKind::DeltaA1;
    if (tag == "A1") return CaseKind::A1;
    if (tag == "AI1") return CaseKind::AI1;
    if (tag == "AI2") return CaseKind::AI2;
    std::string low;
    for (char c : tag) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "deltaa1") return CaseKind::DeltaA1;
    return case_from_name(low);
}

std::string moment_file_json(const MomentFile& f) {
    json j;
    if (f.general) {
        j["case"] = "general";
        j["a_max"] = f.a_max;
        json g;
        g["diagram"] = f.diagram;
        g["S_tilde"] = f.s_tilde;
        json nodes(json::value_t::object);
        for (const auto& [node, nd] : f.nodes) {
            json obj;
            obj["w"] = sequence_json(nd.w);
            if (!nd.w_minus.empty()) obj["w_minus"] = sequence_json(nd.w_minus);
            nodes[std::to_string(node)] = obj;
        }
        g["nodes"] = nodes;
        j["general"] = g;
    } else {
        j["case"] = case_tag(f.data.kind);
        j["a_max"] = f.data.a_max;
        json seqs(json::value_t::object);
        for (const auto& [name, seq] : f.data.sequences) seqs[name] = sequence_json(seq);
        j["sequences"] = seqs;
    }
    return j.dump(2) + "\n";
}

MomentFile parse_moment_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        schema_fail("", e.what());
    }
    if (!j.is_object()) schema_fail("", "expected a JSON object");
    if (!j.contains("case") || !j["case"].is_string())
        schema_fail("/case", "expected a string");
    std::string tag = j["case"].get<std::string>();
    MomentFile f;
    if (tag == "general") {
        for (const auto& [key, _] : j.items())
            if (key != "case" && key != "a_max" && key != "general")
                schema_fail("/" + key, "unknown key");
        f.general = true;
        f.a_max = a_max_at(j);
        if (!j.contains("general") || !j["general"].is_object())
            schema_fail("/general", "expected an object");
        const json& g = j["general"];
        for (const auto& [key, _] : g.items())
            if (key != "diagram" && key != "S_tilde" && key != "nodes")
                schema_fail("/general/" + key, "unknown key");
        if (!g.contains("diagram") || !g["diagram"].is_string())
            schema_fail("/general/diagram", "expected an affine type label");
        f.diagram = g["diagram"].get<std::string>();
        try {
            parse_affine_type(f.diagram);
        } catch (const Error& e) {
            schema_fail("/general/diagram", e.what());
        }
        if (!g.contains("S_tilde") || !g["S_tilde"].is_array())
            schema_fail("/general/S_tilde", "expected an array of vertices");
        for (std::size_t i = 0; i < g["S_tilde"].size(); ++i) {
            const json& v = g["S_tilde"][i];
            if (!v.is_number_integer())
                schema_fail("/general/S_tilde/" + std::to_string(i), "expected an integer");
            f.s_tilde.push_back(v.get<int>());
        }
        if (!g.contains("nodes") || !g["nodes"].is_object())
            schema_fail("/general/nodes", "expected an object");
        for (const auto& [key, val] : g["nodes"].items()) {
            std::string ptr = "/general/nodes/" + key;
            if (key.empty() ||
                !std::all_of(key.begin(), key.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                schema_fail(ptr, "node key must be a vertex number");
            if (!val.is_object()) schema_fail(ptr, "expected an object");
            for (const auto& [k2, _] : val.items())
                if (k2 != "w" && k2 != "w_minus") schema_fail(ptr + "/" + k2, "unknown key");
            GeneralNodeData nd;
            if (!val.contains("w")) schema_fail(ptr + "/w", "missing");
            nd.w = sequence_at(val["w"], ptr + "/w");
            if (val.contains("w_minus"))
                nd.w_minus = sequence_at(val["w_minus"], ptr + "/w_minus");
            f.nodes[std::stoi(key)] = std::move(nd);
        }
        return f;
    }
    for (const auto& [key, _] : j.items())
        if (key != "case" && key != "a_max" && key != "sequences")
            schema_fail("/" + key, "unknown key");
    try {
        f.data.kind = case_kind_from_tag(tag);
    } catch (const Error& e) {
        schema_fail("/case", e.what());
    }
    f.data.a_max = a_max_at(j);
    if (!j.contains("sequences") || !j["sequences"].is_object())
        schema_fail("/sequences", "expected an object of sequences");
    for (const auto& [name, seq] : j["sequences"].items())
        f.data.sequences[name] = sequence_at(seq, "/sequences/" + name);
    return f;
}

std::string classification_json(const ClassificationResult& r) {
    return result_object(r).dump(2) + "\n";
}

ClassificationResult classify_moment_file(const MomentFile& f) {
    if (!f.general) return classify_case(f.data.kind, f.data);
    AffineDiagram d = parse_affine_type(f.diagram);
    return classify_general(d, f.s_tilde, f.nodes);
}

} // namespace tla
