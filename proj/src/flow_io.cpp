#include "sperner/flow_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sperner/errors.hpp"

namespace sperner {

using json = nlohmann::ordered_json;

namespace {

json rat_pair(const Rat& r) { return json::array({rat_num(r).get_str(), rat_den(r).get_str()}); }

}  // namespace

std::string save_certificate(const FlowCertificate& cert) {
    json doc;
    json layers = json::array();
    for (const LayerFlow& lf : cert.layers) {
        json layer;
        layer["rank"] = lf.rank;
        json edges = json::array();
        for (const auto& [x, y, v] : lf.edges)
            edges.push_back(json::array({x, y, rat_num(v).get_str(), rat_den(v).get_str()}));
        layer["edges"] = std::move(edges);
        layers.push_back(std::move(layer));
    }
    doc["layers"] = std::move(layers);
    return doc.dump(2) + "\n";
}

FlowCertificate load_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("certificate file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array())
        throw SchemaError("certificate file: missing `layers` array");
    FlowCertificate cert;
    for (const auto& layer : doc["layers"]) {
        if (!layer.is_object() || !layer.contains("rank") || !layer["rank"].is_number_integer() ||
            !layer.contains("edges") || !layer["edges"].is_array())
            throw SchemaError("certificate file: each layer needs `rank` and `edges`");
        LayerFlow lf;
        lf.rank = layer["rank"].get<int>();
        for (const auto& e : layer["edges"]) {
            if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw SchemaError("certificate file: edges must be [x, y, num, den]");
            auto part = [&](const json& j) -> std::string {
                if (j.is_string()) return j.get<std::string>();
                if (j.is_number_integer()) return std::to_string(j.get<long long>());
                throw SchemaError("certificate file: edge values must be integers or integer strings");
            };
            lf.edges.emplace_back(e[0].get<int>(), e[1].get<int>(), parse_rat(part(e[2]), part(e[3])));
        }
        cert.layers.push_back(std::move(lf));
    }
    return cert;
}

void save_certificate_file(const std::string& path, const FlowCertificate& cert) {
    write_text_file(path, save_certificate(cert));
}

FlowCertificate load_certificate_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load_certificate(ss.str());
}

std::string save_cut_witness(const LayerFailure& failure) {
    json doc;
    doc["kind"] = "cut";
    doc["rank"] = failure.rank;
    doc["subset"] = failure.cut.subset;
    doc["neighborhood"] = failure.cut.neighborhood;
    doc["lhs"] = rat_pair(failure.cut.lhs);
    doc["rhs"] = rat_pair(failure.cut.rhs);
    return doc.dump(2) + "\n";
}

std::string save_antichain_witness(const AntichainWitness& witness) {
    json doc;
    doc["kind"] = "antichain";
    doc["elements"] = witness.elements;
    return doc.dump(2) + "\n";
}

std::string save_rank_conflict(const RankConflict& conflict) {
    json doc;
    doc["kind"] = "rank-conflict";
    doc["element"] = conflict.element;
    doc["path_short"] = conflict.path_short;
    doc["path_long"] = conflict.path_long;
    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw SchemaError("cannot open " + path + " for writing");
    f << text;
}

}  // namespace sperner
