#include "bitslab/bohmian_fulo.h"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace bitslab {

void FuloDevice::validate() const {
    if (orientation != 1 && orientation != -1) throw ParameterError("device orientation must be +1 or -1");
    if (!(split_speed > 0.0) || !(half_duration > 0.0) || !(packet_width > 0.0)) {
        throw ParameterError("device split speed, half duration and packet width must be positive");
    }
    if (split_speed * half_duration < 6.0 * packet_width) {
        throw ParameterError("arms not separated: split_speed * half_duration must be at least 6 * packet_width");
    }
}

std::string FuloDevice::label() const {
    return std::string(orientation > 0 ? "+" : "-") + std::string(axis_name(spin_axis));
}

FuloDevice parse_device(std::string_view text, const FuloDevice& kinematics) {
    FuloDevice device = kinematics;
    device.orientation = +1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        device.orientation = text.front() == '-' ? -1 : +1;
        text.remove_prefix(1);
    }
    if (text == "x" || text == "X") {
        device.spin_axis = Axis::x;
    } else if (text == "y" || text == "Y") {
        device.spin_axis = Axis::y;
    } else if (text == "z" || text == "Z") {
        device.spin_axis = Axis::z;
    } else {
        throw ParameterError("cannot parse device '" + std::string(text) + "'; expected e.g. +x or -y");
    }
    return device;
}

std::vector<FuloDevice> parse_device_list(std::string_view csv, const FuloDevice& kinematics) {
    std::vector<FuloDevice> out;
    while (!csv.empty()) {
        const auto comma = csv.find(',');
        out.push_back(parse_device(csv.substr(0, comma), kinematics));
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ParameterError("device list is empty");
    return out;
}

SpinState2 SpinState2::normalized(Complex a, Complex b) {
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    if (!std::isfinite(n) || n < 1e-6) throw DegenerateStateError("spin state norm is below 1e-6");
    return {a / n, b / n};
}

SpinState2 SpinState2::eigenstate(Axis axis, int eigenvalue) {
    const double s = 1.0 / std::numbers::sqrt2;
    const bool plus = eigenvalue > 0;
    switch (axis) {
        case Axis::x:
            return plus ? SpinState2{Complex{1.0}, Complex{0.0}} : SpinState2{Complex{0.0}, Complex{1.0}};
        case Axis::y:
            return {Complex{s}, Complex{plus ? s : -s}};
        case Axis::z:
            return {Complex{s}, Complex{0.0, plus ? s : -s}};
    }
    throw std::invalid_argument("unknown axis");
}

double SpinState2::norm() const { return std::sqrt(std::norm(a) + std::norm(b)); }

std::string_view arm_name(Arm arm) { return arm == Arm::up ? "up" : "down"; }

DeviceWeights device_weights(const SpinState2& spin, const FuloDevice& device) {
    const auto routed_up = SpinState2::eigenstate(device.spin_axis, device.orientation);
    const Complex overlap = std::conj(routed_up.a) * spin.a + std::conj(routed_up.b) * spin.b;
    return {std::clamp(std::norm(overlap), 0.0, 1.0), device.orientation};
}

PacketPairModel PacketPairModel::from_spin(const SpinState2& spin, const FuloDevice& device) {
    return {device_weights(spin, device).p_up, device};
}

double PacketPairModel::z_up(double t) const {
    return device.split_speed * std::min(t, device.total_duration() - t);
}

namespace {

double center_z(const PacketPairModel& model, double t, Phase phase) {
    const auto& d = model.device;
    return phase == Phase::outbound ? d.split_speed * t : d.split_speed * (d.total_duration() - t);
}

double gaussian(double z, double center, double sigma) {
    const double u = (z - center) / sigma;
    return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace

double velocity_field(const PacketPairModel& model, double z, double t, Phase phase) {
    const double v_up = phase == Phase::outbound ? model.device.split_speed : -model.device.split_speed;
    const double v_down = -v_up;
    if (model.p_up >= 1.0) return v_up;
    if (model.p_up <= 0.0) return v_down;

    const double c_up = center_z(model, t, phase);
    const double c_down = -c_up;
    const double sigma = model.device.packet_width;
    const double w_up = model.p_up * gaussian(z, c_up, sigma);
    const double w_down = (1.0 - model.p_up) * gaussian(z, c_down, sigma);
    if (w_up < 1e-300 && w_down < 1e-300) {
        const double d_up = std::abs(z - c_up);
        const double d_down = std::abs(z - c_down);
        if (d_up < d_down) return v_up;
        if (d_down < d_up) return v_down;
        return model.p_up * v_up + (1.0 - model.p_up) * v_down;
    }
    return (w_up * v_up + w_down * v_down) / (w_up + w_down);
}

double velocity_field(const PacketPairModel& model, double z, double t) {
    if (!(t >= 0.0 && t <= model.device.total_duration())) {
        throw std::domain_error("velocity_field: t outside [0, 2 T_half]");
    }
    return velocity_field(model, z, t, t < model.device.half_duration ? Phase::outbound : Phase::inbound);
}

double TrajectoryRecord::z_at_half() const { return samples[(samples.size() - 1) / 2].z; }

double default_step(const FuloDevice& device) { return device.half_duration / 2000.0; }

TrajectoryRecord integrate_trajectory(const PacketPairModel& model, double z0, double dt) {
    model.device.validate();
    const double t_half = model.device.half_duration;
    if (!(dt > 0.0) || dt > t_half / 1000.0) {
        throw ParameterError("step size must be positive and at most T_half / 1000");
    }
    const auto steps = static_cast<std::size_t>(std::ceil(t_half / dt - 1e-9));
    const double h = t_half / static_cast<double>(steps);

    TrajectoryRecord rec;
    rec.z0 = z0;
    rec.quantile = quantile_of(z0, model.device.packet_width);
    rec.p_up = model.p_up;
    rec.device = model.device;
    rec.samples.reserve(2 * steps + 1);
    rec.samples.push_back({0.0, z0});

    double z = z0;
    for (const auto phase : {Phase::outbound, Phase::inbound}) {
        const double start = phase == Phase::outbound ? 0.0 : t_half;
        for (std::size_t k = 0; k < steps; ++k) {
            const double t = start + t_half * static_cast<double>(k) / static_cast<double>(steps);
            const double k1 = velocity_field(model, z, t, phase);
            const double k2 = velocity_field(model, z + 0.5 * h * k1, t + 0.5 * h, phase);
            const double k3 = velocity_field(model, z + 0.5 * h * k2, t + 0.5 * h, phase);
            const double k4 = velocity_field(model, z + h * k3, t + h, phase);
            z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            const double t_next = start + t_half * static_cast<double>(k + 1) / static_cast<double>(steps);
            rec.samples.push_back({t_next, z});
        }
    }
    rec.arm = rec.z_at_half() > 0.0 ? Arm::up : Arm::down;
    return rec;
}

double quantile_of(double z0, double sigma) { return 0.5 * std::erfc(-z0 / (sigma * std::numbers::sqrt2)); }

double position_of_quantile(double q, double sigma) {
    if (!(q > 0.0 && q < 1.0)) throw ParameterError("quantile must lie in (0, 1)");
    return -sigma * std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * q);
}

Arm arm_by_quantile(double q, double p_up) { return q > 1.0 - p_up ? Arm::up : Arm::down; }

SequenceRecord run_fulo_sequence(const SpinState2& spin, double q, const std::vector<FuloDevice>& devices) {
    if (!(q > 0.0 && q < 1.0)) throw ParameterError("quantile must lie in (0, 1)");
    SequenceRecord rec;
    rec.input_spin = spin;
    rec.quantile = q;
    SpinState2 current = spin;
    for (const auto& device : devices) {
        device.validate();
        const auto weights = device_weights(current, device);
        SequenceStep step;
        step.device = device;
        step.p_up = weights.p_up;
        step.arm = arm_by_quantile(q, weights.p_up);
        step.implied_value = step.arm == Arm::up ? weights.spin_up_label : -weights.spin_up_label;
        rec.steps.push_back(step);
        // A FULO is the identity on the quantum state.
    }
    rec.output_spin = current;
    return rec;
}

bool StabilityReport::flags(Axis axis) const {
    return std::find(unstable_axes.begin(), unstable_axes.end(), axis) != unstable_axes.end();
}

StabilityReport hv_stability_report(const SpinState2& spin, double q, const std::vector<FuloDevice>& devices) {
    const auto seq = run_fulo_sequence(spin, q, devices);
    StabilityReport report;
    for (const auto axis : {Axis::x, Axis::y, Axis::z}) {
        AxisHistory history{axis, {}, true};
        for (const auto& step : seq.steps)
            if (step.device.spin_axis == axis) history.values.push_back(step.implied_value);
        if (history.values.empty()) continue;
        history.stable = std::all_of(history.values.begin(), history.values.end(),
                                     [&](int v) { return v == history.values.front(); });
        if (!history.stable) report.unstable_axes.push_back(axis);
        report.axes.push_back(std::move(history));
    }
    report.quantum_state_unchanged = seq.output_spin == seq.input_spin;
    report.bits_premise_holds = report.unstable_axes.empty();
    if (report.bits_premise_holds) {
        report.explanation =
            "implied spin values are stable across the sequence; the identity transformations did not change them";
    } else {
        std::string names;
        for (const auto axis : report.unstable_axes) {
            if (!names.empty()) names += ",";
            names += "sigma_" + std::string(axis_name(axis));
        }
        report.explanation = "the device sequence is the identity on the quantum state, yet the implied value of " +
                             names +
                             " changed; spin hidden values are not stable across identity transformations, so "
                             "values read before the context choice need not match the later measurement";
    }
    return report;
}

std::vector<TrajectorySample> sequence_trajectory(const SpinState2& spin, double q,
                                                  const std::vector<FuloDevice>& devices, std::optional<double> dt) {
    std::vector<TrajectorySample> out;
    if (devices.empty()) return out;
    double z = position_of_quantile(q, devices.front().packet_width);
    double offset = 0.0;
    for (const auto& device : devices) {
        const auto model = PacketPairModel::from_spin(spin, device);
        const auto rec = integrate_trajectory(model, z, dt.value_or(default_step(device)));
        for (std::size_t i = out.empty() ? 0 : 1; i < rec.samples.size(); ++i) {
            out.push_back({offset + rec.samples[i].t, rec.samples[i].z});
        }
        z = rec.final_z();
        offset += device.total_duration();
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
    std::string out = "t,z\n";
    char buf[64];
    for (const auto& s : samples) {
        // + 0.0 turns -0 into 0.
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", s.t + 0.0, s.z + 0.0);
        out += buf;
    }
    return out;
}

}  // namespace bitslab
