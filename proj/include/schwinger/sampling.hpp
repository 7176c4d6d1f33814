#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "schwinger/pair.hpp"

namespace schwinger {

enum class Ensemble { PureHaar, MixedHS };

Ensemble parse_ensemble(const std::string& name); // "pure-haar" | "mixed-hs"
std::string ensemble_name(Ensemble e);

/// Reproducible ensemble configuration: identical config means an identical
/// sample stream, and sample i is a pure function of (seed, i).
struct SamplerConfig {
    int n = 2;
    Ensemble ensemble = Ensemble::PureHaar;
    long count = 1;
    std::uint64_t seed = 0;
};

/// Philox-4x32-10 counter-based generator (Salmon et al. constants:
/// multipliers 0xD2511F53, 0xCD9E8D57; key Weyl increments 0x9E3779B9,
/// 0xBB67AE85; 10 rounds). The 64-bit key is the stream seed; the 128-bit
/// counter is (sample_index lo, sample_index hi, block, stream_tag).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Standard-normal stream for one sample index: Box-Muller over 53-bit
/// uniforms drawn from consecutive Philox blocks.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t sample_index, std::uint32_t stream_tag);
    double next();

private:
    void refill();
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 3> base_; // index lo, index hi, tag
    std::uint32_t block_ = 0;
    double pending_ = 0.0;
    bool has_pending_ = false;
};

/// |psi><psi| with psi of iid standard complex Gaussian entries, normalized.
DensityMatrix sample_pure(const SamplerConfig& config, long index);
std::vector<cplx> sample_pure_vector(int n, std::uint64_t seed, long index);

/// G G^dag / Tr[G G^dag] with G an NxN complex Ginibre matrix
/// (Hilbert-Schmidt ensemble).
DensityMatrix sample_mixed(const SamplerConfig& config, long index);

DensityMatrix sample_state(const SamplerConfig& config, long index);

} // namespace schwinger
