#include "bitslab/quantum_core.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace bitslab;

namespace {

// Independent 2x2 oracle in the sigma_x-diagonal convention.
using M2 = std::array<std::array<Complex, 2>, 2>;

const Complex I1{0.0, 1.0};
const M2 kSx{{{1.0, 0.0}, {0.0, -1.0}}};
const M2 kSy{{{0.0, 1.0}, {1.0, 0.0}}};
const M2 kSz{{{0.0, -I1}, {I1, 0.0}}};
const M2 kId{{{1.0, 0.0}, {0.0, 1.0}}};

M2 mul2(const M2& a, const M2& b) {
    M2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::array<std::array<Complex, 4>, 4> kron2(const M2& a, const M2& b) {
    std::array<std::array<Complex, 4>, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
    return out;
}

void expect_matches(const Operator4& op, const std::array<std::array<Complex, 4>, 4>& expected) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(op(i, j).to_complex(), expected[i][j]) << i << "," << j;
}

}  // namespace

TEST(quantum_core, two_by_two_oracle_fixes_sign_convention) {
    const auto xyz = mul2(mul2(kSx, kSy), kSz);
    EXPECT_EQ(xyz[0][0], I1);
    EXPECT_EQ(xyz[1][1], I1);
    EXPECT_EQ(xyz[0][1], Complex{});
    EXPECT_EQ(xyz[1][0], Complex{});
}

TEST(quantum_core, pauli_matches_kron_oracle) {
    const std::array<std::pair<Axis, M2>, 3> axes = {{{Axis::x, kSx}, {Axis::y, kSy}, {Axis::z, kSz}}};
    for (const auto& [axis, m] : axes) {
        expect_matches(pauli(Particle::first, axis), kron2(m, kId));
        expect_matches(pauli(Particle::second, axis), kron2(kId, m));
    }
}

TEST(quantum_core, pauli_x_is_diagonal_on_a_b) {
    const auto aa = TwoQubitState::aa();
    const auto image = apply(pauli(Particle::first, Axis::x), aa);
    EXPECT_EQ(image[0], Complex{1.0});
    EXPECT_LT(eigen_residual(pauli(Particle::first, Axis::x), aa, +1.0), 1e-15);
    EXPECT_LT(eigen_residual(pauli(Particle::second, Axis::x), TwoQubitState::basis(1), -1.0), 1e-15);
}

TEST(quantum_core, pauli_involution_and_xyz_product) {
    for (const auto p : {Particle::first, Particle::second})
        for (const auto a : {Axis::x, Axis::y, Axis::z}) EXPECT_EQ(pauli(p, a) * pauli(p, a), Operator4::identity());

    const auto xyz = pauli(Particle::first, Axis::x) * pauli(Particle::first, Axis::y) * pauli(Particle::first, Axis::z);
    EXPECT_EQ(xyz, Operator4::identity().scaled(GaussInt{0, 1}));
}

TEST(quantum_core, op_product_identity_and_tensor) {
    const auto x1 = pauli(Particle::first, Axis::x);
    EXPECT_EQ(op_product(Operator4::identity(), x1), x1);
    expect_matches(op_product(x1, pauli(Particle::second, Axis::x)), kron2(kSx, kSx));
}

TEST(quantum_core, commutation) {
    const auto x1 = pauli(Particle::first, Axis::x);
    const auto y1 = pauli(Particle::first, Axis::y);
    const auto x2 = pauli(Particle::second, Axis::x);
    const auto y2 = pauli(Particle::second, Axis::y);
    EXPECT_TRUE(commutes(x1, y2));
    EXPECT_FALSE(commutes(x1, y1));
    EXPECT_TRUE(commutes(x1 * x2, y1 * y2));
    EXPECT_TRUE(commutes(x1 * y2, y1 * x2));
    EXPECT_FALSE(commutes(x1 * x2, x1 * y2));
}

TEST(quantum_core, hermitian_and_unit_entries) {
    for (const auto p : {Particle::first, Particle::second})
        for (const auto a : {Axis::x, Axis::y, Axis::z}) {
            EXPECT_TRUE(pauli(p, a).is_hermitian());
            EXPECT_TRUE(pauli(p, a).has_unit_entries());
        }
    EXPECT_FALSE(Operator4::identity().scaled(GaussInt{0, 1}).is_hermitian());
    EXPECT_FALSE(Operator4::identity().scaled(GaussInt{2}).has_unit_entries());
    EXPECT_EQ(Operator4::identity().identity_sign(), 1);
    EXPECT_EQ((-Operator4::identity()).identity_sign(), -1);
    EXPECT_EQ(pauli(Particle::first, Axis::x).identity_sign(), 0);
}

TEST(quantum_core, bell_xxyy_labels) {
    const auto basis = bell_basis_xxyy();
    EXPECT_LT(eigen_residual(basis.observables[0], basis.vectors[0], +1.0), 1e-12);
    EXPECT_LT(eigen_residual(basis.observables[1], basis.vectors[3], -1.0), 1e-12);
    const auto check = check_basis(basis);
    EXPECT_TRUE(check.valid()) << check.max_overlap << " " << check.max_eigen_residual;
    EXPECT_EQ(basis.index_of({-1, -1}), 3u);
}

TEST(quantum_core, bell_xyyx_labels) {
    const auto basis = bell_basis_xyyx();
    // (|a+> + |b->)/sqrt(2) = (1, 1, 1, -1)/2
    const std::array<double, 4> first = {0.5, 0.5, 0.5, -0.5};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(basis.vectors[0][i].real(), first[i], 1e-15);
    EXPECT_LT(eigen_residual(basis.observables[0], basis.vectors[0], +1.0), 1e-12);
    EXPECT_LT(eigen_residual(basis.observables[1], basis.vectors[3], -1.0), 1e-12);
    EXPECT_TRUE(check_basis(basis).valid());
}

TEST(quantum_core, bell_basis_is_not_single_spin_eigenbasis) {
    const auto x1 = pauli(Particle::first, Axis::x);
    for (const auto& basis : {bell_basis_xxyy(), bell_basis_xyyx()}) {
        for (const auto& v : basis.vectors) {
            EXPECT_GT(eigen_residual(x1, v, +1.0), 0.5);
            EXPECT_GT(eigen_residual(x1, v, -1.0), 0.5);
        }
    }
}

TEST(quantum_core, singlet_measures_minus_minus) {
    const auto basis = bell_basis_xxyy();
    const auto singlet = TwoQubitState::singlet();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomStream rng(seed);
        const auto m = measure_in_basis(singlet, basis, rng);
        EXPECT_EQ(m.index, 3u);
        EXPECT_EQ(m.labels, (EigenPair{-1, -1}));
    }
}

TEST(quantum_core, aa_born_probabilities_by_hand) {
    // <(aa +- bb)/sqrt2 | aa> = 1/sqrt2
    const auto p = born_probabilities(TwoQubitState::aa(), bell_basis_xxyy());
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
    EXPECT_EQ(p[2], 0.0);
    EXPECT_EQ(p[3], 0.0);
}

TEST(quantum_core, eigenstate_measured_in_own_basis) {
    for (const auto& basis : {bell_basis_xxyy(), bell_basis_xyyx()}) {
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                RandomStream rng(seed);
                EXPECT_EQ(measure_in_basis(basis.vectors[k], basis, rng).index, k);
            }
        }
    }
}

TEST(quantum_core, measurement_rejects_unnormalized_state) {
    RandomStream rng(1);
    const TwoQubitState bad(Amplitudes{Complex{1.0}, Complex{1e-4}, {}, {}});
    EXPECT_THROW(measure_in_basis(bad, bell_basis_xxyy(), rng), DegenerateStateError);
    EXPECT_THROW(TwoQubitState::normalized(Amplitudes{Complex{1e-7}, {}, {}, {}}), DegenerateStateError);
}

TEST(quantum_core, measurement_is_deterministic_per_seed) {
    const auto state = TwoQubitState::aa();
    const auto basis = bell_basis_xxyy();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomStream a(seed), b(seed);
        EXPECT_EQ(measure_in_basis(state, basis, a).index, measure_in_basis(state, basis, b).index);
    }
}

TEST(quantum_core, born_frequencies_within_five_sigma) {
    RandomStream state_rng(99);
    const auto state = random_state(state_rng);
    const auto basis = bell_basis_xyyx();
    const auto p = born_probabilities(state, basis);
    constexpr std::size_t n = 100000;
    std::array<std::size_t, 4> counts{};
    RandomStream rng(123);
    for (std::size_t i = 0; i < n; ++i) ++counts[measure_in_basis(state, basis, rng).index];
    for (std::size_t k = 0; k < 4; ++k) {
        const double f = static_cast<double>(counts[k]) / n;
        EXPECT_LE(std::abs(f - p[k]), 5.0 * std::sqrt(p[k] * (1 - p[k]) / n)) << k;
    }
}

TEST(quantum_core, random_stream_helpers) {
    RandomStream rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(rng.uniform_index(3), 3u);
    }
    EXPECT_NE(RandomStream::derive_seed(1, 0), RandomStream::derive_seed(1, 1));
    EXPECT_NE(RandomStream::derive_seed(1, 0), RandomStream::derive_seed(2, 0));
    EXPECT_TRUE(random_state(rng).is_normalized());
}
