#include "sperner/poset_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sperner/errors.hpp"

namespace sperner {

using json = nlohmann::ordered_json;

std::string save_poset(const RankedPoset& p, const std::optional<WeightFunction>& weights) {
    json doc;
    doc["elements"] = p.labels();
    json covers = json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back(json::array({lo, hi}));
    doc["covers"] = std::move(covers);
    if (p.has_rank_function()) doc["ranks"] = p.ranks();
    if (weights) {
        json w = json::array();
        for (const Rat& r : *weights)
            w.push_back(json::array({rat_num(r).get_str(), rat_den(r).get_str()}));
        doc["weights"] = std::move(w);
    }
    return doc.dump(2) + "\n";
}

PosetFile load_poset(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("poset file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("poset file: top level must be an object");
    if (!doc.contains("elements") || !doc["elements"].is_array())
        throw SchemaError("poset file: missing `elements` array");
    if (!doc.contains("covers") || !doc["covers"].is_array())
        throw SchemaError("poset file: missing `covers` array");
    std::vector<std::string> labels;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) throw SchemaError("poset file: `elements` entries must be strings");
        labels.push_back(e.get<std::string>());
    }
    int n = int(labels.size());
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : doc["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw SchemaError("poset file: `covers` entries must be [i,j] integer pairs");
        int lo = c[0].get<int>(), hi = c[1].get<int>();
        if (lo < 0 || hi < 0 || lo >= n || hi >= n)
            throw SchemaError("poset file: cover index out of range in [" + std::to_string(lo) +
                              "," + std::to_string(hi) + "]");
        covers.emplace_back(lo, hi);
    }
    PosetFile out;
    try {
        if (doc.contains("ranks")) {
            if (!doc["ranks"].is_array() || int(doc["ranks"].size()) != n)
                throw SchemaError("poset file: `ranks` must list one integer per element");
            std::vector<int> ranks;
            for (const auto& r : doc["ranks"]) {
                if (!r.is_number_integer())
                    throw SchemaError("poset file: `ranks` entries must be integers");
                ranks.push_back(r.get<int>());
            }
            out.poset =
                RankedPoset::from_ranked_covers(std::move(labels), std::move(covers), std::move(ranks));
        } else {
            out.poset = RankedPoset::from_covers(std::move(labels), std::move(covers));
        }
    } catch (const StructuralError& e) {
        throw SchemaError(std::string("poset file: ") + e.what());
    }
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array() || int(doc["weights"].size()) != n)
            throw SchemaError("poset file: `weights` must list one [num,den] pair per element");
        WeightFunction w;
        for (const auto& entry : doc["weights"]) {
            if (!entry.is_array() || entry.size() != 2)
                throw SchemaError("poset file: `weights` entries must be [num,den] pairs");
            auto part = [&](const json& j) -> std::string {
                if (j.is_string()) return j.get<std::string>();
                if (j.is_number_integer()) return std::to_string(j.get<long long>());
                throw SchemaError("poset file: weight parts must be integers or integer strings");
            };
            Rat r = parse_rat(part(entry[0]), part(entry[1]));
            if (r < 0) throw SchemaError("poset file: negative weight");
            w.push_back(r);
        }
        out.weights = std::move(w);
    }
    return out;
}

void save_poset_file(const std::string& path, const RankedPoset& p,
                     const std::optional<WeightFunction>& weights) {
    std::ofstream f(path);
    if (!f) throw SchemaError("cannot open " + path + " for writing");
    f << save_poset(p, weights);
}

PosetFile load_poset_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load_poset(ss.str());
}

}  // namespace sperner
