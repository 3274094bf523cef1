#ifndef BITSLAB_QUANTUM_CORE_H
#define BITSLAB_QUANTUM_CORE_H

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bitslab {

using Complex = std::complex<double>;

/// Tolerance for state-level comparisons. Operator identities never use it.
inline constexpr double kStateTolerance = 1e-12;

class DegenerateStateError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

bool approx_equal(Complex a, Complex b, double tol = kStateTolerance);

/// Gaussian integer. Every operator built here has entries in {0, ±1, ±i},
/// and products/sums of those stay integral, so operator algebra is exact.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    constexpr GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    constexpr GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    constexpr GaussInt operator-() const { return {-re, -im}; }
    constexpr GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    constexpr GaussInt conj() const { return {re, -im}; }
    constexpr bool operator==(const GaussInt&) const = default;

    Complex to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

enum class Axis : std::uint8_t { x, y, z };
enum class Particle : std::uint8_t { first = 1, second = 2 };

std::string_view axis_name(Axis axis);

/// Exact 4x4 operator on the two-qubit space.
///
/// Basis order is (|aa>, |ab>, |ba>, |bb>) where |a>, |b> are the +1/-1
/// eigenstates of sigma_x; the first letter belongs to particle 1.
class Operator4 {
   public:
    using Row = std::array<GaussInt, 4>;

    Operator4() = default;
    explicit Operator4(const std::array<Row, 4>& entries) : entries_(entries) {}

    static Operator4 identity();
    static Operator4 zero();

    const GaussInt& operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
    GaussInt& operator()(std::size_t row, std::size_t col) { return entries_[row][col]; }

    Operator4 operator*(const Operator4& other) const;
    Operator4 operator-(const Operator4& other) const;
    Operator4 operator-() const;
    Operator4 scaled(GaussInt factor) const;
    Operator4 adjoint() const;

    bool operator==(const Operator4&) const = default;

    bool is_hermitian() const;
    bool is_zero() const;
    /// True when every entry is one of 0, ±1, ±i.
    bool has_unit_entries() const;

    /// +1 if the operator is exactly +I, -1 if exactly -I, 0 otherwise.
    int identity_sign() const;

   private:
    std::array<Row, 4> entries_{};
};

/// sigma_axis on the indexed particle, identity on the other.
///
/// sigma_x = diag(+1, -1); sigma_y swaps |a> and |b>; sigma_z is fixed by
/// sigma_x sigma_y sigma_z = i I.
Operator4 pauli(Particle particle, Axis axis);

Operator4 op_product(const Operator4& a, const Operator4& b);
bool commutes(const Operator4& a, const Operator4& b);

using Amplitudes = std::array<Complex, 4>;

class TwoQubitState {
   public:
    TwoQubitState() : TwoQubitState(Amplitudes{Complex{1.0}, {}, {}, {}}) {}

    /// Stores the amplitudes as given. Use `normalized` for untrusted input.
    explicit TwoQubitState(const Amplitudes& amplitudes) : amplitudes_(amplitudes) {}

    /// Rescales to unit norm; throws DegenerateStateError when norm < min_norm.
    static TwoQubitState normalized(const Amplitudes& amplitudes, double min_norm = 1e-6);

    static TwoQubitState basis(std::size_t index);
    static TwoQubitState aa() { return basis(0); }
    /// (|ab> - |ba>)/sqrt(2).
    static TwoQubitState singlet();
    /// |++> with |+> = (|a> + |b>)/sqrt(2), the +1 eigenstate of sigma_y.
    static TwoQubitState plus_y();

    const Amplitudes& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;
    bool is_normalized(double tol = kStateTolerance) const;

   private:
    Amplitudes amplitudes_;
};

/// <a|b>, antilinear in the first argument.
Complex inner(const TwoQubitState& a, const TwoQubitState& b);
TwoQubitState apply(const Operator4& op, const TwoQubitState& state);

/// Norm of op|v> - eigenvalue |v>.
double eigen_residual(const Operator4& op, const TwoQubitState& v, double eigenvalue);

struct EigenPair {
    int first = 1;
    int second = 1;
    bool operator==(const EigenPair&) const = default;
};

/// Four states that jointly diagonalize two commuting observables.
struct OrthonormalBasis4 {
    std::string name;
    std::array<Operator4, 2> observables;
    std::array<std::string, 2> observable_names;
    std::array<TwoQubitState, 4> vectors;
    std::array<EigenPair, 4> labels;

    /// Index of the vector carrying these eigenvalues; throws if absent.
    std::size_t index_of(EigenPair labels) const;
};

struct BasisCheck {
    double max_overlap = 0.0;          // max |<v_i|v_j>|, i != j
    double max_norm_error = 0.0;       // max | ||v_i|| - 1 |
    double max_eigen_residual = 0.0;   // over both observables and all vectors
    bool valid(double tol = kStateTolerance) const {
        return max_overlap < tol && max_norm_error < tol && max_eigen_residual < tol;
    }
};

BasisCheck check_basis(const OrthonormalBasis4& basis);

/// Joint eigenbasis of (sigma_1x sigma_2x, sigma_1y sigma_2y).
OrthonormalBasis4 bell_basis_xxyy();
/// Joint eigenbasis of (sigma_1x sigma_2y, sigma_1y sigma_2x).
OrthonormalBasis4 bell_basis_xyyx();

/// Seedable, reproducible random stream.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// Conversions to reals and indices are done here rather than through
/// <random> distributions, which are implementation-defined.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n);
    /// Standard normal via Box-Muller.
    double normal();

    /// Seed for an independent substream, via the splitmix64 finalizer.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

std::array<double, 4> born_probabilities(const TwoQubitState& state, const OrthonormalBasis4& basis);

/// Samples an index with probability p[k]; p should sum to 1.
std::size_t sample_index(const std::array<double, 4>& p, RandomStream& rng);

struct Measurement {
    std::size_t index = 0;  // 0-based position in the basis
    EigenPair labels;
    TwoQubitState post_state;
};

/// Projective measurement in `basis`. Throws DegenerateStateError when the
/// state's norm is off by more than 1e-9.
Measurement measure_in_basis(const TwoQubitState& state, const OrthonormalBasis4& basis, RandomStream& rng);

/// Haar-random pure state.
TwoQubitState random_state(RandomStream& rng);

}  // namespace bitslab

#endif
