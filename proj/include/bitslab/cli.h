#ifndef BITSLAB_CLI_H
#define BITSLAB_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitslab/bohmian_fulo.h"
#include "bitslab/quantum_core.h"

namespace bitslab::cli {

enum ExitCode : int { kSuccess = 0, kClaimFalsified = 1, kUsageError = 2 };

/// Presets: singlet, aa, ab, ba, bb, plus-y (|++>); or eight comma-separated
/// numbers re0,im0,...,re3,im3. Raw input is normalized; norms below 1e-6
/// throw DegenerateStateError, unparsable text throws ParameterError.
TwoQubitState parse_state_spec(std::string_view spec);

/// Presets: a, b, plus-x, minus-x, plus-y, minus-y, plus-z, minus-z; or four
/// comma-separated numbers re_a,im_a,re_b,im_b.
SpinState2 parse_spin_spec(std::string_view spec);

struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::string state = "singlet";
    std::string context = "xxyy";
    std::string format = "json";
    std::optional<std::string> out;
    std::size_t trials = 1000;
    std::size_t random_states = 10;
    std::vector<std::string> sweep_states;
    bool strict = false;
    std::optional<std::string> tamper;

    // FULO
    std::string spin = "plus-y";
    std::string device = "+x";
    std::string devices = "+x,+y,+z";
    std::optional<double> p_up;
    std::vector<double> quantiles;
    FuloDevice kinematics;
    std::optional<double> dt;
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_pm_verify(const RunConfig& config, std::ostream& out);
int cmd_bits_run(const RunConfig& config, std::ostream& out);
int cmd_bits_sweep(const RunConfig& config, std::ostream& out);
int cmd_fulo_trajectory(const RunConfig& config, std::ostream& out);
int cmd_fulo_sequence(const RunConfig& config, std::ostream& out);
int cmd_fulo_fig2(const RunConfig& config, std::ostream& out);

}  // namespace bitslab::cli

#endif
