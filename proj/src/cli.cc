#include "bitslab/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "bitslab/bits_protocol.h"
#include "bitslab/json_io.h"
#include "bitslab/peres_mermin.h"

namespace bitslab::cli {

namespace {

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        std::string piece(text.substr(0, comma));
        piece.erase(0, piece.find_first_not_of(' '));
        piece.erase(piece.find_last_not_of(' ') + 1);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(piece, &used);
        } catch (const std::exception&) {
            throw ParameterError("cannot parse number '" + piece + "'");
        }
        if (used != piece.size() || !std::isfinite(value)) throw ParameterError("cannot parse number '" + piece + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParameterError("cannot open output file " + path);
    f << content;
    if (!f) throw ParameterError("failed writing " + path);
}

// out.csv -> out_q2.csv
std::string indexed_path(const std::string& path, std::size_t index) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    const auto stem = has_ext ? path.substr(0, dot) : path;
    const auto ext = has_ext ? path.substr(dot) : std::string();
    return stem + "_q" + std::to_string(index) + ext;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<double> quantiles_or(const RunConfig& config, std::vector<double> fallback) {
    const auto& q = config.quantiles.empty() ? fallback : config.quantiles;
    for (const double v : q)
        if (!(v > 0.0 && v < 1.0)) throw ParameterError("quantiles must lie in (0, 1)");
    return q;
}

}  // namespace

TwoQubitState parse_state_spec(std::string_view spec) {
    if (spec == "singlet") return TwoQubitState::singlet();
    if (spec == "aa") return TwoQubitState::basis(0);
    if (spec == "ab") return TwoQubitState::basis(1);
    if (spec == "ba") return TwoQubitState::basis(2);
    if (spec == "bb") return TwoQubitState::basis(3);
    if (spec == "plus-y") return TwoQubitState::plus_y();
    if (spec.find(',') == std::string_view::npos) {
        throw ParameterError("unknown state preset '" + std::string(spec) + "'");
    }
    const auto numbers = parse_numbers(spec);
    if (numbers.size() != 8) throw ParameterError("raw state needs 8 numbers (re,im for aa,ab,ba,bb)");
    Amplitudes amps;
    for (std::size_t i = 0; i < 4; ++i) amps[i] = Complex{numbers[2 * i], numbers[2 * i + 1]};
    return TwoQubitState::normalized(amps, 1e-6);
}

SpinState2 parse_spin_spec(std::string_view spec) {
    if (spec == "a" || spec == "plus-x") return SpinState2::eigenstate(Axis::x, +1);
    if (spec == "b" || spec == "minus-x") return SpinState2::eigenstate(Axis::x, -1);
    if (spec == "plus-y" || spec == "plus") return SpinState2::eigenstate(Axis::y, +1);
    if (spec == "minus-y" || spec == "minus") return SpinState2::eigenstate(Axis::y, -1);
    if (spec == "plus-z") return SpinState2::eigenstate(Axis::z, +1);
    if (spec == "minus-z") return SpinState2::eigenstate(Axis::z, -1);
    if (spec.find(',') == std::string_view::npos) {
        throw ParameterError("unknown spin preset '" + std::string(spec) + "'");
    }
    const auto numbers = parse_numbers(spec);
    if (numbers.size() != 4) throw ParameterError("raw spin needs 4 numbers (re,im for a,b)");
    return SpinState2::normalized({numbers[0], numbers[1]}, {numbers[2], numbers[3]});
}

int cmd_pm_verify(const RunConfig& config, std::ostream& out) {
    auto square = build_square();
    if (config.tamper) {
        const auto label = parse_label(*config.tamper);
        if (!label) throw ParameterError("unknown label '" + *config.tamper + "'");
        square.at(*label) = -square.at(*label);
    }
    const auto structure = verify_structure(square);
    const auto nogo = exhaustive_assignment_search(square);
    emit(out, {{"structure", to_json(structure)}, {"no_go", to_json(nogo)}});
    return structure.passed() && nogo.all_six_satisfiable == 0 ? kSuccess : kClaimFalsified;
}

int cmd_bits_run(const RunConfig& config, std::ostream& out) {
    const auto state = parse_state_spec(config.state);
    const auto context = parse_context(config.context);
    if (!context) throw ParameterError("context must be xxyy or xyyx");
    RandomStream rng(config.seed);
    const auto transcript = run_protocol(state, *context, rng);
    Json j = to_json(transcript);
    j["implied_bit"] = context_implied_bit(*context);
    if (config.strict) j["strict_completion"] = to_json(strict_completion(transcript.table));
    emit(out, j);
    return transcript.bit == context_implied_bit(*context) && transcript.consistent ? kSuccess : kClaimFalsified;
}

int cmd_bits_sweep(const RunConfig& config, std::ostream& out) {
    if (config.trials == 0) throw ParameterError("--trials must be at least 1");
    std::vector<TwoQubitState> states;
    if (!config.sweep_states.empty()) {
        for (const auto& s : config.sweep_states) states.push_back(parse_state_spec(s));
    } else {
        RandomStream state_rng(RandomStream::derive_seed(config.seed, 0x57a7e5));
        for (std::size_t i = 0; i < config.random_states; ++i) states.push_back(random_state(state_rng));
    }
    RandomStream rng(config.seed);
    const auto report = sweep(states, config.trials, rng);
    emit(out, to_json(report));
    const bool ok = report.runs == 0 || (report.bit_matches == report.runs && report.consistent_runs == report.runs);
    return ok ? kSuccess : kClaimFalsified;
}

int cmd_fulo_trajectory(const RunConfig& config, std::ostream& out) {
    auto device = parse_device(config.device, config.kinematics);
    device.validate();
    PacketPairModel model = PacketPairModel::from_spin(parse_spin_spec(config.spin), device);
    if (config.p_up) {
        if (!(*config.p_up >= 0.0 && *config.p_up <= 1.0)) throw ParameterError("--p-up must lie in [0, 1]");
        model.p_up = *config.p_up;
    }
    const auto qs = quantiles_or(config, {0.1, 0.3, 0.5, 0.7, 0.9});
    const double dt = config.dt.value_or(default_step(device));

    Json runs = Json::array();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const double z0 = position_of_quantile(qs[i], device.packet_width);
        const auto rec = integrate_trajectory(model, z0, dt);
        Json r = {{"q", qs[i]},
                  {"z0", z0},
                  {"arm", std::string(arm_name(rec.arm))},
                  {"arm_by_quantile", std::string(arm_name(arm_by_quantile(qs[i], model.p_up)))},
                  {"z_at_half", rec.z_at_half()},
                  {"final_z", rec.final_z()},
                  {"loop_error", std::abs(rec.final_z() - z0)}};
        if (config.out) {
            const auto path = qs.size() == 1 ? *config.out : indexed_path(*config.out, i);
            write_file(path, trajectory_csv(rec.samples));
            r["csv"] = path;
        }
        runs.push_back(r);
    }
    emit(out, {{"device", to_json(device)}, {"p_up", model.p_up}, {"dt", dt}, {"trajectories", runs}});
    return kSuccess;
}

int cmd_fulo_sequence(const RunConfig& config, std::ostream& out) {
    const auto devices = parse_device_list(config.devices, config.kinematics);
    const auto spin = parse_spin_spec(config.spin);
    const auto qs = quantiles_or(config, {0.9});
    Json runs = Json::array();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        Json r = {{"sequence", to_json(run_fulo_sequence(spin, qs[i], devices))},
                  {"stability", to_json(hv_stability_report(spin, qs[i], devices))}};
        if (config.out) {
            const auto path = qs.size() == 1 ? *config.out : indexed_path(*config.out, i);
            write_file(path, trajectory_csv(sequence_trajectory(spin, qs[i], devices, config.dt)));
            r["csv"] = path;
        }
        runs.push_back(r);
    }
    emit(out, qs.size() == 1 ? runs[0] : runs);
    return kSuccess;
}

int cmd_fulo_fig2(const RunConfig& config, std::ostream& out) {
    const auto devices = parse_device_list("+x,-x", config.kinematics);
    const auto spin = SpinState2::plus();
    const auto qs = quantiles_or(config, {0.1, 0.3, 0.7, 0.9});
    bool all_flagged = true;
    Json runs = Json::array();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const auto report = hv_stability_report(spin, qs[i], devices);
        all_flagged = all_flagged && report.flags(Axis::x);
        Json r = {{"q", qs[i]},
                  {"sequence", to_json(run_fulo_sequence(spin, qs[i], devices))},
                  {"stability", to_json(report)}};
        if (config.out) {
            const auto path = qs.size() == 1 ? *config.out : indexed_path(*config.out, i);
            write_file(path, trajectory_csv(sequence_trajectory(spin, qs[i], devices, config.dt)));
            r["csv"] = path;
        }
        runs.push_back(r);
    }
    emit(out, {{"devices", "+x,-x"}, {"spin", "plus-y"}, {"sigma_x_flipped", all_flagged}, {"runs", runs}});
    return all_flagged ? kSuccess : kClaimFalsified;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bitslab: Peres-Mermin contextuality, hidden-variable signaling protocol, Bohmian FULO trajectories"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json"}));
    };
    auto add_kinematics = [&](CLI::App* cmd) {
        cmd->add_option("--split-speed", config.kinematics.split_speed, "Packet center speed");
        cmd->add_option("--t-half", config.kinematics.half_duration, "Time to maximum separation");
        cmd->add_option("--sigma", config.kinematics.packet_width, "Packet width");
        cmd->add_option("--dt", config.dt, "RK4 step (default T_half/2000)");
    };

    auto* pm = app.add_subcommand("pm-verify", "Verify the square's structure and the no-go by exhaustion");
    add_format(pm);
    pm->add_option("--tamper", config.tamper, "Negate one entry (negative control)")->group("");

    auto* bits = app.add_subcommand("bits", "Hidden-variable signaling protocol");
    bits->require_subcommand(1);
    auto* bits_run = bits->add_subcommand("run", "Run the protocol once and print the transcript");
    bits_run->add_option("--state", config.state, "State preset or 8 raw numbers");
    bits_run->add_option("--context", config.context, "xxyy or xyyx");
    bits_run->add_option("--seed", config.seed, "Random seed");
    bits_run->add_flag("--strict", config.strict, "Also fill off-context observables and report violations");
    add_format(bits_run);
    auto* bits_sweep = bits->add_subcommand("sweep", "Run the protocol over many states and seeds");
    bits_sweep->add_option("--trials", config.trials, "Trials per state and context");
    bits_sweep->add_option("--states", config.random_states, "Number of random states");
    bits_sweep->add_option("--state", config.sweep_states, "Explicit states instead of random ones");
    bits_sweep->add_option("--seed", config.seed, "Random seed");
    add_format(bits_sweep);

    auto* fulo = app.add_subcommand("fulo", "Bohmian full-loop Stern-Gerlach simulations");
    fulo->require_subcommand(1);
    auto* traj = fulo->add_subcommand("trajectory", "Integrate trajectories through one device");
    traj->add_option("--device", config.device, "Device, e.g. +x or -y");
    traj->add_option("--state", config.spin, "Spin preset or 4 raw numbers");
    traj->add_option("--p-up", config.p_up, "Override the up-arm weight");
    traj->add_option("--q", config.quantiles, "Initial quantiles")->delimiter(',');
    traj->add_option("--out", config.out, "CSV output path");
    traj->add_option("--seed", config.seed, "Unused; accepted for uniformity");
    add_kinematics(traj);
    add_format(traj);
    auto* seq = fulo->add_subcommand("sequence", "Arms and implied spin values through a device list");
    seq->add_option("--devices", config.devices, "Comma-separated devices");
    seq->add_option("--state", config.spin, "Spin preset or 4 raw numbers");
    seq->add_option("--q", config.quantiles, "Initial quantiles")->delimiter(',');
    seq->add_option("--out", config.out, "CSV output path for the concatenated trajectory");
    seq->add_option("--seed", config.seed, "Unused; accepted for uniformity");
    add_kinematics(seq);
    add_format(seq);
    auto* fig2 = fulo->add_subcommand("fig2", "+x then -x on (|a>+|b>)/sqrt(2): the sigma_x flip");
    fig2->add_option("--q", config.quantiles, "Initial quantiles")->delimiter(',');
    fig2->add_option("--out", config.out, "CSV output path");
    fig2->add_option("--seed", config.seed, "Unused; accepted for uniformity");
    add_kinematics(fig2);
    add_format(fig2);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (pm->parsed()) return cmd_pm_verify(config, out);
        if (bits_run->parsed()) return cmd_bits_run(config, out);
        if (bits_sweep->parsed()) return cmd_bits_sweep(config, out);
        if (traj->parsed()) return cmd_fulo_trajectory(config, out);
        if (seq->parsed()) return cmd_fulo_sequence(config, out);
        if (fig2->parsed()) return cmd_fulo_fig2(config, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DegenerateStateError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace bitslab::cli
