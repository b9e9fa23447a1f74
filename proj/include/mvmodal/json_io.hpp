#pragma once

#include <string>

#include "json.hpp"
#include "mvmodal/experiments.hpp"
#include "mvmodal/kripke.hpp"
#include "mvmodal/lukdecide.hpp"
#include "mvmodal/pcp.hpp"

namespace mvmodal {

// ordered_json everywhere: emitted certificates must be byte-stable
using Json = nlohmann::ordered_json;

KripkeModel model_from_json(const Json& j);
Json model_to_json(const KripkeModel& m);

Sequent sequent_from_json(const Json& j);
Json sequent_to_json(const Sequent& s);

PcpInstance pcp_from_json(const Json& j);
Json pcp_to_json(const PcpInstance& p);

Json countermodel_to_json(const Countermodel& c);
Json verdict_to_json(const Verdict& v);
Json countervaluation_to_json(const Countervaluation& cv);
Json omega_report_to_json(const OmegaChainReport& r);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mvmodal
