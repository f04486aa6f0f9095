#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "wigner/rng.hpp"

namespace wigner {

enum class EntryDist { gaussian, rademacher };

// Parameters of the deformed ensemble B = A + theta * u u^T with A an N x N
// Wigner matrix (independent entries up to symmetry, variance 1/N) and u
// uniform on the unit sphere. Immutable once constructed.
class EnsembleConfig {
public:
    EnsembleConfig(int n, double theta, EntryDist entry_dist,
                   std::uint64_t master_seed)
        : n_(n), theta_(theta), entry_dist_(entry_dist), master_seed_(master_seed) {
        if (n < 2)
            throw std::invalid_argument("EnsembleConfig: n must be >= 2");
        if (!(theta >= 0.0))
            throw std::invalid_argument("EnsembleConfig: theta must be >= 0");
    }

    int n() const { return n_; }
    double theta() const { return theta_; }
    EntryDist entry_dist() const { return entry_dist_; }
    std::uint64_t master_seed() const { return master_seed_; }

private:
    int n_;
    double theta_;
    EntryDist entry_dist_;
    std::uint64_t master_seed_;
};

// One realization of the deformed model.
struct DeformedSample {
    Eigen::MatrixXd b;           // B = A + theta * u u^T, exactly symmetric
    Eigen::VectorXd u;           // signal direction, unit norm
    std::uint64_t trial_index = 0;
};

namespace detail {

// Each trial owns two independent sub-streams: one for the matrix entries,
// one for the sphere vector, so the two samplers can also be called on
// their own and still compose deterministically.
inline constexpr std::uint64_t kMatrixStream = 0;
inline constexpr std::uint64_t kSphereStream = 1;

inline constexpr std::uint64_t substream(std::uint64_t trial_index,
                                         std::uint64_t which) noexcept {
    return 2 * trial_index + which;
}

}  // namespace detail

// Wigner matrix A = W / sqrt(N): entries independent up to symmetry, mean
// zero, variance 1/N (diagonal included), drawn from the configured law.
inline Eigen::MatrixXd sample_wigner(int n, EntryDist entry_dist, RandomStream& rng) {
    if (n < 2)
        throw std::invalid_argument("sample_wigner: n must be >= 2");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double w = (entry_dist == EntryDist::gaussian) ? rng.normal()
                                                                 : rng.rademacher();
            a(i, j) = w * scale;
            a(j, i) = a(i, j);  // bit-for-bit symmetric
        }
    }
    return a;
}

inline Eigen::MatrixXd sample_wigner(const EnsembleConfig& config,
                                     std::uint64_t trial_index) {
    RandomStream rng(config.master_seed(),
                     detail::substream(trial_index, detail::kMatrixStream));
    return sample_wigner(config.n(), config.entry_dist(), rng);
}

// Uniform unit vector on S^{n-1}: normalized vector of i.i.d. standard
// normals (orthogonally invariant).
inline Eigen::VectorXd sample_sphere(int n, RandomStream& rng) {
    if (n < 2)
        throw std::invalid_argument("sample_sphere: n must be >= 2");
    Eigen::VectorXd u(n);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < n; ++i) u(i) = rng.normal();
        norm2 = u.squaredNorm();
    } while (norm2 == 0.0);
    u /= std::sqrt(norm2);
    return u;
}

inline Eigen::VectorXd sample_sphere(const EnsembleConfig& config,
                                     std::uint64_t trial_index) {
    RandomStream rng(config.master_seed(),
                     detail::substream(trial_index, detail::kSphereStream));
    return sample_sphere(config.n(), rng);
}

// B = A + theta * u u^T without touching A's symmetry: mirrored assignment
// keeps b(i,j) == b(j,i) exactly.
inline Eigen::MatrixXd make_deformed(const Eigen::MatrixXd& a,
                                     const Eigen::VectorXd& u, double theta) {
    if (a.rows() != a.cols() || a.rows() != u.size())
        throw std::invalid_argument("make_deformed: dimension mismatch");
    Eigen::MatrixXd b = a;
    if (theta != 0.0) {
        const int n = static_cast<int>(u.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                b(i, j) += theta * (u(i) * u(j));
                b(j, i) = b(i, j);
            }
        }
    }
    return b;
}

// One deformed sample, a pure function of (master_seed, trial_index, config).
inline DeformedSample sample_deformed(const EnsembleConfig& config,
                                      std::uint64_t trial_index) {
    DeformedSample s;
    s.u = sample_sphere(config, trial_index);
    s.b = make_deformed(sample_wigner(config, trial_index), s.u, config.theta());
    s.trial_index = trial_index;
    return s;
}

}  // namespace wigner
