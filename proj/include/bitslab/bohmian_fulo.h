#ifndef BITSLAB_BOHMIAN_FULO_H
#define BITSLAB_BOHMIAN_FULO_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitslab/quantum_core.h"

namespace bitslab {

class ParameterError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Full-loop Stern-Gerlach device: splits a packet along the spin axis and
/// re-merges it. The quantum state is unchanged; the trajectory is not.
struct FuloDevice {
    Axis spin_axis = Axis::x;
    int orientation = +1;        // -1: device rotated by 180 degrees
    double split_speed = 1.0;    // packet center speed
    double half_duration = 10.0; // time to maximum separation
    double packet_width = 1.0;   // Gaussian standard deviation

    double total_duration() const { return 2.0 * half_duration; }
    /// Throws ParameterError unless all parameters are positive, orientation
    /// is ±1, and split_speed * half_duration >= 6 * packet_width.
    void validate() const;
    /// "+x", "-y", ...
    std::string label() const;
};

/// Parses "+x", "-y", "z" (sign defaults to +) with default kinematics.
FuloDevice parse_device(std::string_view text, const FuloDevice& kinematics = {});
std::vector<FuloDevice> parse_device_list(std::string_view csv, const FuloDevice& kinematics = {});

/// Single spin over (|a>, |b>), the sigma_x eigenbasis.
struct SpinState2 {
    Complex a{1.0};
    Complex b{0.0};

    static SpinState2 normalized(Complex a, Complex b);
    /// +1 or -1 eigenstate of sigma_axis in this basis convention.
    static SpinState2 eigenstate(Axis axis, int eigenvalue);
    /// (|a> + |b>)/sqrt(2), the +1 eigenstate of sigma_y.
    static SpinState2 plus() { return eigenstate(Axis::y, +1); }

    double norm() const;
    bool operator==(const SpinState2&) const = default;
};

enum class Arm : std::uint8_t { down, up };
std::string_view arm_name(Arm arm);

struct DeviceWeights {
    double p_up = 0.0;
    int spin_up_label = +1;  // eigenvalue of sigma_axis routed to the up arm
};

DeviceWeights device_weights(const SpinState2& spin, const FuloDevice& device);

/// Two frozen-width Gaussian packets whose centers move out at +/-v until
/// T_half and back to 0 at 2 T_half.
struct PacketPairModel {
    double p_up = 0.5;
    FuloDevice device;

    static PacketPairModel from_spin(const SpinState2& spin, const FuloDevice& device);

    double z_up(double t) const;
    double z_down(double t) const { return -z_up(t); }
};

enum class Phase : std::uint8_t { outbound, inbound };

/// Guidance velocity with the center velocities of the given phase. At
/// t = T_half the two phases give different one-sided limits.
double velocity_field(const PacketPairModel& model, double z, double t, Phase phase);
/// Phase chosen from t: outbound for t < T_half, inbound otherwise.
/// Throws std::domain_error if t is outside [0, 2 T_half].
double velocity_field(const PacketPairModel& model, double z, double t);

struct TrajectorySample {
    double t;
    double z;
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    double z0 = 0.0;
    double quantile = 0.5;
    Arm arm = Arm::down;
    double p_up = 0.5;
    FuloDevice device;

    double z_at_half() const;
    double final_z() const { return samples.back().z; }
};

/// Default step: T_half / 2000.
double default_step(const FuloDevice& device);

/// Classic fixed-step RK4 from 0 to 2 T_half. The step is shrunk so that
/// T_half falls on a step boundary. Throws ParameterError if
/// dt > T_half / 1000 or dt <= 0.
TrajectoryRecord integrate_trajectory(const PacketPairModel& model, double z0, double dt);

/// Gaussian CDF of z0 under the initial packet, and its inverse.
double quantile_of(double z0, double sigma);
double position_of_quantile(double q, double sigma);

/// Up iff q > 1 - p_up (no-crossing); the tie goes down.
Arm arm_by_quantile(double q, double p_up);

struct SequenceStep {
    FuloDevice device;
    double p_up = 0.0;
    Arm arm = Arm::down;
    int implied_value = 0;  // eigenvalue of sigma_axis read from the arm
};

struct SequenceRecord {
    SpinState2 input_spin;
    SpinState2 output_spin;
    double quantile = 0.5;
    std::vector<SequenceStep> steps;
};

/// Each device leaves the spin state and the quantile unchanged.
SequenceRecord run_fulo_sequence(const SpinState2& spin, double q, const std::vector<FuloDevice>& devices);

struct AxisHistory {
    Axis axis;
    std::vector<int> values;  // implied values in sequence order
    bool stable = true;
};

struct StabilityReport {
    std::vector<AxisHistory> axes;  // only axes visited, in x, y, z order
    std::vector<Axis> unstable_axes;
    bool quantum_state_unchanged = true;
    /// Stable spin hidden values across identity transformations.
    bool bits_premise_holds = true;
    std::string explanation;

    bool flags(Axis axis) const;
};

StabilityReport hv_stability_report(const SpinState2& spin, double q, const std::vector<FuloDevice>& devices);

/// Trajectory through the devices back to back (times offset by each
/// device's duration), starting at the q-quantile of the first packet.
/// Each device segment starts where the previous one ended.
std::vector<TrajectorySample> sequence_trajectory(const SpinState2& spin, double q,
                                                  const std::vector<FuloDevice>& devices,
                                                  std::optional<double> dt = std::nullopt);

/// `t,z` CSV with 12 significant digits.
std::string trajectory_csv(const std::vector<TrajectorySample>& samples);

}  // namespace bitslab

#endif
