#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sperner/poset.hpp"

namespace sperner {

struct PosetFile {
    RankedPoset poset;
    std::optional<WeightFunction> weights;
};

// Poset document: fields `elements` (label strings), `covers` ([i,j] pairs,
// i covered by j), optional `ranks`, optional `weights` ([num, den] pairs).
// Round-trips bit-exactly, including ordering.
std::string save_poset(const RankedPoset& p, const std::optional<WeightFunction>& weights = {});
PosetFile load_poset(const std::string& text);

void save_poset_file(const std::string& path, const RankedPoset& p,
                     const std::optional<WeightFunction>& weights = {});
PosetFile load_poset_file(const std::string& path);

}  // namespace sperner
