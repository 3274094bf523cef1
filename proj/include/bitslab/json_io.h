#ifndef BITSLAB_JSON_IO_H
#define BITSLAB_JSON_IO_H

#include <json.hpp>

#include "bitslab/bits_protocol.h"
#include "bitslab/bohmian_fulo.h"
#include "bitslab/hidden_variables.h"
#include "bitslab/peres_mermin.h"
#include "bitslab/quantum_core.h"

namespace bitslab {

using Json = nlohmann::ordered_json;

/// [[re, im], ...] over (aa, ab, ba, bb).
Json to_json(const TwoQubitState& state);
Json to_json(const SpinState2& spin);
Json to_json(const EigenPair& pair);
Json to_json(const Assignment& assignment);

Json to_json(const StructureReport& report);
Json to_json(const NoGoReport& report);

Json to_json(const HiddenValueTable& table);
Json to_json(const StrictCompletion& completion);
Json to_json(const NoncontextualFailure& failure);

Json to_json(const ProtocolTranscript& transcript);
Json to_json(const SweepReport& report);
Json to_json(const PreassignmentCheck& check);

Json to_json(const FuloDevice& device);
Json to_json(const SequenceRecord& record);
Json to_json(const StabilityReport& report);

/// Rebuilds a table from its JSON form; throws std::invalid_argument on
/// malformed input.
HiddenValueTable table_from_json(const Json& j);

}  // namespace bitslab

#endif
