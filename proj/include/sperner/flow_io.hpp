#pragma once

#include <string>

#include "sperner/antichain.hpp"
#include "sperner/flow.hpp"
#include "sperner/poset.hpp"

namespace sperner {

// Certificate document: `layers` array, each layer {rank, edges:
// [[x, y, num, den], ...]}.
std::string save_certificate(const FlowCertificate& cert);
FlowCertificate load_certificate(const std::string& text);
void save_certificate_file(const std::string& path, const FlowCertificate& cert);
FlowCertificate load_certificate_file(const std::string& path);

// Witness documents share a `kind` tag: cut | antichain | rank-conflict.
// Cut witnesses carry the failing rational comparison as [num, den] pairs.
std::string save_cut_witness(const LayerFailure& failure);
std::string save_antichain_witness(const AntichainWitness& witness);
std::string save_rank_conflict(const RankConflict& conflict);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace sperner
