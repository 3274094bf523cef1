#include "bitslab/json_io.h"

#include <cmath>

namespace bitslab {

namespace {

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const TwoQubitState& state) {
    Json out = Json::array();
    for (const auto& c : state.amplitudes()) out.push_back(complex_pair(c));
    return out;
}

Json to_json(const SpinState2& spin) { return Json::array({complex_pair(spin.a), complex_pair(spin.b)}); }

Json to_json(const EigenPair& pair) { return Json::array({pair.first, pair.second}); }

Json to_json(const Assignment& assignment) {
    Json out = Json::object();
    for (const auto label : kAllLabels) out[std::string(label_name(label))] = assignment[label];
    return out;
}

Json to_json(const StructureReport& report) {
    Json lines = Json::array();
    for (const auto& line : report.lines) {
        lines.push_back({{"line", line.name},
                         {"pairs_commute", line.pair_commutes},
                         {"all_commute", line.all_commute()},
                         {"product_sign", line.product_sign},
                         {"target_parity", line.target_parity},
                         {"passed", line.passed()}});
    }
    return {{"passed", report.passed()},
            {"all_hermitian", report.all_hermitian},
            {"all_square_to_identity", report.all_square_to_identity},
            {"all_unit_entries", report.all_unit_entries},
            {"lines", lines},
            {"failures", report.failures}};
}

Json to_json(const NoGoReport& report) {
    return {{"assignments_checked", report.assignments_checked},
            {"all_six_satisfiable", report.all_six_satisfiable},
            {"max_satisfied", report.max_satisfied},
            {"max_achievers", report.max_achievers},
            {"witness", to_json(report.witness)},
            {"histogram", report.histogram},
            {"parity_obstruction_holds", report.parity_obstruction_holds}};
}

Json to_json(const HiddenValueTable& table) {
    Json values = Json::object();
    for (const auto label : kAllLabels) {
        if (!table.has(label)) continue;
        const auto& e = table.entry(label);
        values[std::string(label_name(label))] = {{"value", e.value},
                                                  {"provenance", std::string(provenance_name(e.provenance))}};
    }
    return {{"context", std::string(context_name(table.context()))}, {"seed", table.seed()}, {"values", values}};
}

HiddenValueTable table_from_json(const Json& j) {
    try {
        const auto context = parse_context(j.at("context").get<std::string>());
        if (!context) throw std::invalid_argument("unknown context");
        HiddenValueTable table(*context, j.at("seed").get<std::uint64_t>());
        for (const auto& [name, entry] : j.at("values").items()) {
            const auto label = parse_label(name);
            if (!label) throw std::invalid_argument("unknown label " + name);
            const auto prov = entry.at("provenance").get<std::string>();
            Provenance p;
            if (prov == "sampled") {
                p = Provenance::sampled;
            } else if (prov == "derived") {
                p = Provenance::derived;
            } else if (prov == "free-bit") {
                p = Provenance::free_bit;
            } else {
                throw std::invalid_argument("unknown provenance " + prov);
            }
            table.set(*label, entry.at("value").get<int>(), p);
        }
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed hidden value table: ") + e.what());
    }
}

Json to_json(const StrictCompletion& completion) {
    return {{"assignment", to_json(completion.assignment)}, {"violated_lines", completion.violated_lines}};
}

Json to_json(const NoncontextualFailure& failure) {
    return {{"all_six_satisfiable", failure.all_six_satisfiable},
            {"max_satisfied", failure.max_satisfied},
            {"max_achievers", failure.max_achievers},
            {"witness", to_json(failure.witness)},
            {"witness_rescore", failure.witness_rescore},
            {"violated_lines", failure.violated_lines},
            {"reason", failure.reason},
            {"seed", failure.seed}};
}

Json to_json(const ProtocolTranscript& t) {
    Json events = Json::array();
    for (const auto& e : t.events) events.push_back({{"step", e.step}, {"event", e.name}, {"detail", e.detail}});
    return {{"state", to_json(t.state)},
            {"context", std::string(context_name(t.context))},
            {"table", to_json(t.table)},
            {"bit", t.bit},
            {"outcome", to_json(t.outcome)},
            {"outcome_index", t.outcome_index + 1},
            {"outcome_probability", t.outcome_probability},
            {"consistent", t.consistent},
            {"seed", t.seed},
            {"events", events}};
}

Json to_json(const SweepReport& report) {
    Json stats = Json::array();
    for (const auto& s : report.statistics) {
        stats.push_back({{"state_index", s.state_index},
                         {"context", std::string(context_name(s.context))},
                         {"trials", s.trials},
                         {"born", s.born},
                         {"protocol_counts", s.protocol_counts},
                         {"direct_counts", s.direct_counts},
                         {"protocol_max_z", finite_or_null(s.protocol_max_z)},
                         {"direct_max_z", finite_or_null(s.direct_max_z)}});
    }
    return {{"states", report.states},
            {"trials_per_state", report.trials_per_state},
            {"runs", report.runs},
            {"bit_matches", report.bit_matches},
            {"match_fraction", optional_number(report.match_fraction())},
            {"consistent_runs", report.consistent_runs},
            {"consistency_fraction", optional_number(report.consistency_fraction())},
            {"max_born_z", finite_or_null(report.max_born_z())},
            {"statistics", stats}};
}

Json to_json(const PreassignmentCheck& check) {
    return {{"candidates", check.candidates},
            {"valid_for_xxyy", check.valid_for_xxyy},
            {"valid_for_xyyx", check.valid_for_xyyx},
            {"valid_for_both", check.valid_for_both}};
}

Json to_json(const FuloDevice& device) {
    return {{"device", device.label()},
            {"split_speed", device.split_speed},
            {"half_duration", device.half_duration},
            {"packet_width", device.packet_width}};
}

Json to_json(const SequenceRecord& record) {
    Json steps = Json::array();
    for (const auto& s : record.steps) {
        steps.push_back({{"device", s.device.label()},
                         {"p_up", s.p_up},
                         {"arm", std::string(arm_name(s.arm))},
                         {"implied_value", s.implied_value}});
    }
    return {{"input_spin", to_json(record.input_spin)},
            {"output_spin", to_json(record.output_spin)},
            {"quantile", record.quantile},
            {"steps", steps}};
}

Json to_json(const StabilityReport& report) {
    Json axes = Json::array();
    for (const auto& a : report.axes) {
        axes.push_back({{"axis", std::string(axis_name(a.axis))}, {"values", a.values}, {"stable", a.stable}});
    }
    Json unstable = Json::array();
    for (const auto axis : report.unstable_axes) unstable.push_back(std::string(axis_name(axis)));
    return {{"axes", axes},
            {"unstable_axes", unstable},
            {"quantum_state_unchanged", report.quantum_state_unchanged},
            {"premise", "stable spin hidden values across identity transformations"},
            {"bits_premise_holds", report.bits_premise_holds},
            {"explanation", report.explanation}};
}

}  // namespace bitslab
