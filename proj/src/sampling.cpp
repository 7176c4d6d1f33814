#include "schwinger/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schwinger {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

// 53-bit uniform in (0, 1]; strictly positive so log() below is safe
inline double uniform_53(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t v = (static_cast<std::uint64_t>(a >> 5) << 26) | (b >> 6);
    return (static_cast<double>(v) + 1.0) * (1.0 / 9007199254740992.0);
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMult0, ctr[0], hi0, lo0);
        mulhilo(kMult1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t sample_index,
                               std::uint32_t stream_tag)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      base_{static_cast<std::uint32_t>(sample_index),
            static_cast<std::uint32_t>(sample_index >> 32), stream_tag} {}

double GaussianStream::next() {
    if (has_pending_) {
        has_pending_ = false;
        return pending_;
    }
    const auto words = philox4x32({base_[0], base_[1], block_++, base_[2]}, key_);
    const double u1 = uniform_53(words[0], words[1]);
    const double u2 = uniform_53(words[2], words[3]);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    pending_ = r * std::sin(phi);
    has_pending_ = true;
    return r * std::cos(phi);
}

Ensemble parse_ensemble(const std::string& name) {
    if (name == "pure-haar") return Ensemble::PureHaar;
    if (name == "mixed-hs") return Ensemble::MixedHS;
    throw std::invalid_argument("unknown ensemble '" + name + "' (pure-haar | mixed-hs)");
}

std::string ensemble_name(Ensemble e) {
    return e == Ensemble::PureHaar ? "pure-haar" : "mixed-hs";
}

std::vector<cplx> sample_pure_vector(int n, std::uint64_t seed, long index) {
    GaussianStream g(seed, static_cast<std::uint64_t>(index), 0);
    std::vector<cplx> psi(n);
    for (int i = 0; i < n; ++i) {
        const double re = g.next();
        const double im = g.next();
        psi[i] = cplx(re, im);
    }
    const double nrm = vec_norm(psi);
    for (auto& z : psi) z /= nrm;
    return psi;
}

DensityMatrix sample_pure(const SamplerConfig& config, long index) {
    return DensityMatrix::pure(sample_pure_vector(config.n, config.seed, index));
}

DensityMatrix sample_mixed(const SamplerConfig& config, long index) {
    const int n = config.n;
    GaussianStream g(config.seed, static_cast<std::uint64_t>(index), 1);
    CMatrix ginibre(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double re = g.next();
            const double im = g.next();
            ginibre(i, j) = cplx(re, im);
        }
    CMatrix rho = mat_mul(ginibre, adjoint(ginibre));
    const double tr = trace(rho).real();
    rho *= cplx(1.0 / tr);
    // Gram construction is Hermitian/PSD; scrub rounding noise for the ctor
    for (int i = 0; i < n; ++i) {
        rho(i, i) = cplx(rho(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = avg;
            rho(j, i) = std::conj(avg);
        }
    }
    return DensityMatrix(std::move(rho));
}

DensityMatrix sample_state(const SamplerConfig& config, long index) {
    return config.ensemble == Ensemble::PureHaar ? sample_pure(config, index)
                                                 : sample_mixed(config, index);
}

} // namespace schwinger
