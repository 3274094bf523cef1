#include "bitslab/quantum_core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bitslab {

namespace {

using Matrix2 = std::array<std::array<GaussInt, 2>, 2>;
using Spinor = std::array<Complex, 2>;

Matrix2 pauli2(Axis axis) {
    switch (axis) {
        case Axis::x:
            return {{{GaussInt{1}, GaussInt{0}}, {GaussInt{0}, GaussInt{-1}}}};
        case Axis::y:
            return {{{GaussInt{0}, GaussInt{1}}, {GaussInt{1}, GaussInt{0}}}};
        case Axis::z:
            return {{{GaussInt{0}, GaussInt{0, -1}}, {GaussInt{0, 1}, GaussInt{0}}}};
    }
    throw std::invalid_argument("unknown axis");
}

Matrix2 identity2() { return {{{GaussInt{1}, GaussInt{0}}, {GaussInt{0}, GaussInt{1}}}}; }

Operator4 kron(const Matrix2& first, const Matrix2& second) {
    Operator4 out;
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 2; ++j2)
                    out(2 * i1 + i2, 2 * j1 + j2) = first[i1][j1] * second[i2][j2];
    return out;
}

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Spinor kA{Complex{1.0}, Complex{0.0}};
const Spinor kB{Complex{0.0}, Complex{1.0}};
const Spinor kPlus{Complex{kInvSqrt2}, Complex{kInvSqrt2}};
const Spinor kMinus{Complex{kInvSqrt2}, Complex{-kInvSqrt2}};

Amplitudes product(const Spinor& first, const Spinor& second) {
    Amplitudes out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[2 * i + j] = first[i] * second[j];
    return out;
}

// (u + sign * w) / sqrt(2)
TwoQubitState superpose(const Amplitudes& u, double sign, const Amplitudes& w) {
    Amplitudes out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = (u[i] + sign * w[i]) * kInvSqrt2;
    return TwoQubitState(out);
}

}  // namespace

bool approx_equal(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::x:
            return "x";
        case Axis::y:
            return "y";
        case Axis::z:
            return "z";
    }
    return "?";
}

Operator4 Operator4::identity() {
    Operator4 out;
    for (std::size_t i = 0; i < 4; ++i) out(i, i) = GaussInt{1};
    return out;
}

Operator4 Operator4::zero() { return Operator4{}; }

Operator4 Operator4::operator*(const Operator4& other) const {
    Operator4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            GaussInt acc;
            for (std::size_t k = 0; k < 4; ++k) acc = acc + entries_[i][k] * other.entries_[k][j];
            out(i, j) = acc;
        }
    return out;
}

Operator4 Operator4::operator-(const Operator4& other) const {
    Operator4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = entries_[i][j] - other.entries_[i][j];
    return out;
}

Operator4 Operator4::operator-() const { return scaled(GaussInt{-1}); }

Operator4 Operator4::scaled(GaussInt factor) const {
    Operator4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = entries_[i][j] * factor;
    return out;
}

Operator4 Operator4::adjoint() const {
    Operator4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = entries_[j][i].conj();
    return out;
}

bool Operator4::is_hermitian() const { return *this == adjoint(); }

bool Operator4::is_zero() const { return *this == zero(); }

bool Operator4::has_unit_entries() const {
    for (const auto& row : entries_)
        for (const auto& e : row) {
            const auto mag = std::abs(e.re) + std::abs(e.im);
            if (mag > 1) return false;
        }
    return true;
}

int Operator4::identity_sign() const {
    if (*this == identity()) return 1;
    if (*this == -identity()) return -1;
    return 0;
}

Operator4 pauli(Particle particle, Axis axis) {
    if (particle == Particle::first) return kron(pauli2(axis), identity2());
    return kron(identity2(), pauli2(axis));
}

Operator4 op_product(const Operator4& a, const Operator4& b) { return a * b; }

bool commutes(const Operator4& a, const Operator4& b) { return (a * b - b * a).is_zero(); }

TwoQubitState TwoQubitState::normalized(const Amplitudes& amplitudes, double min_norm) {
    const double n = TwoQubitState(amplitudes).norm();
    if (!std::isfinite(n) || n < min_norm) {
        throw DegenerateStateError("state norm " + std::to_string(n) + " is below " + std::to_string(min_norm));
    }
    Amplitudes out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = amplitudes[i] / n;
    return TwoQubitState(out);
}

TwoQubitState TwoQubitState::basis(std::size_t index) {
    if (index >= 4) throw std::out_of_range("basis index must be < 4");
    Amplitudes out{};
    out[index] = Complex{1.0};
    return TwoQubitState(out);
}

TwoQubitState TwoQubitState::singlet() { return superpose(product(kA, kB), -1.0, product(kB, kA)); }

TwoQubitState TwoQubitState::plus_y() { return TwoQubitState(product(kPlus, kPlus)); }

double TwoQubitState::norm() const {
    double s = 0.0;
    for (const auto& c : amplitudes_) s += std::norm(c);
    return std::sqrt(s);
}

bool TwoQubitState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Complex inner(const TwoQubitState& a, const TwoQubitState& b) {
    Complex s;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

TwoQubitState apply(const Operator4& op, const TwoQubitState& state) {
    Amplitudes out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out[i] += op(i, j).to_complex() * state[j];
    return TwoQubitState(out);
}

double eigen_residual(const Operator4& op, const TwoQubitState& v, double eigenvalue) {
    const auto image = apply(op, v);
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::norm(image[i] - eigenvalue * v[i]);
    return std::sqrt(s);
}

std::size_t OrthonormalBasis4::index_of(EigenPair wanted) const {
    for (std::size_t k = 0; k < 4; ++k)
        if (labels[k] == wanted) return k;
    throw std::out_of_range("no basis vector carries the requested eigenvalues");
}

BasisCheck check_basis(const OrthonormalBasis4& basis) {
    BasisCheck out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.max_norm_error = std::max(out.max_norm_error, std::abs(basis.vectors[i].norm() - 1.0));
        for (std::size_t j = i + 1; j < 4; ++j)
            out.max_overlap = std::max(out.max_overlap, std::abs(inner(basis.vectors[i], basis.vectors[j])));
        out.max_eigen_residual = std::max(
            {out.max_eigen_residual,
             eigen_residual(basis.observables[0], basis.vectors[i], basis.labels[i].first),
             eigen_residual(basis.observables[1], basis.vectors[i], basis.labels[i].second)});
    }
    return out;
}

OrthonormalBasis4 bell_basis_xxyy() {
    const auto aa = product(kA, kA);
    const auto ab = product(kA, kB);
    const auto ba = product(kB, kA);
    const auto bb = product(kB, kB);
    OrthonormalBasis4 out;
    out.name = "xxyy";
    out.observables = {pauli(Particle::first, Axis::x) * pauli(Particle::second, Axis::x),
                       pauli(Particle::first, Axis::y) * pauli(Particle::second, Axis::y)};
    out.observable_names = {"X1X2", "Y1Y2"};
    out.vectors = {superpose(aa, +1, bb), superpose(aa, -1, bb), superpose(ab, +1, ba), superpose(ab, -1, ba)};
    out.labels = {EigenPair{+1, +1}, EigenPair{+1, -1}, EigenPair{-1, +1}, EigenPair{-1, -1}};
    return out;
}

OrthonormalBasis4 bell_basis_xyyx() {
    const auto a_plus = product(kA, kPlus);
    const auto a_minus = product(kA, kMinus);
    const auto b_plus = product(kB, kPlus);
    const auto b_minus = product(kB, kMinus);
    OrthonormalBasis4 out;
    out.name = "xyyx";
    out.observables = {pauli(Particle::first, Axis::x) * pauli(Particle::second, Axis::y),
                       pauli(Particle::first, Axis::y) * pauli(Particle::second, Axis::x)};
    out.observable_names = {"X1Y2", "Y1X2"};
    out.vectors = {superpose(a_plus, +1, b_minus), superpose(a_plus, -1, b_minus), superpose(a_minus, +1, b_plus),
                   superpose(a_minus, -1, b_plus)};
    out.labels = {EigenPair{+1, +1}, EigenPair{+1, -1}, EigenPair{-1, +1}, EigenPair{-1, -1}};
    return out;
}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t RandomStream::uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index needs n > 0");
    // Rejection sampling keeps the result exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % n);
}

double RandomStream::normal() {
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t RandomStream::derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::array<double, 4> born_probabilities(const TwoQubitState& state, const OrthonormalBasis4& basis) {
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) p[k] = std::norm(inner(basis.vectors[k], state));
    return p;
}

std::size_t sample_index(const std::array<double, 4>& p, RandomStream& rng) {
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (p[k] <= 0.0) continue;
        cumulative += p[k];
        last_positive = k;
        if (u < cumulative) return k;
    }
    // Rounding left u above the final cumulative sum.
    return last_positive;
}

Measurement measure_in_basis(const TwoQubitState& state, const OrthonormalBasis4& basis, RandomStream& rng) {
    const double n = state.norm();
    if (!(std::abs(n - 1.0) <= 1e-9)) {
        throw DegenerateStateError("cannot measure a state with norm " + std::to_string(n));
    }
    const auto k = sample_index(born_probabilities(state, basis), rng);
    return Measurement{k, basis.labels[k], basis.vectors[k]};
}

TwoQubitState random_state(RandomStream& rng) {
    Amplitudes amps;
    for (auto& c : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        c = Complex{re, im};
    }
    return TwoQubitState::normalized(amps, 1e-300);
}

}  // namespace bitslab
