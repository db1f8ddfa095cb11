#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtda/encoders.hpp"
#include "qtda/statevector.hpp"

namespace qtda {

enum class KernelMode { exact, shots };

const char* to_string(KernelMode m);

struct FidelityEstimate {
  double value = 0.0;  // |<a|b>|^2, in [0, 1]
  KernelMode mode = KernelMode::exact;
  std::uint64_t shots = 0;  // shots mode only
  std::uint64_t seed = 0;   // shots mode only
};

// Symmetric pairwise distance matrix with provenance tags.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // row-major n*n, zero diagonal
  KernelMode mode = KernelMode::exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string scheme;  // "raw", "angle", "amplitude", "iqp"

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n_, std::string scheme_)
      : n(n_), entries(n_ * n_, 0.0), scheme(std::move(scheme_)) {}

  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

// |<a|b>|^2 from the statevectors. Equals the all-zeros outcome probability
// of running E(D_j)^dag E(D_i) on |0..0>.
FidelityEstimate fidelity_exact(const Statevector& a, const Statevector& b);

// Simulated finite-shot estimate: k/shots with k ~ Binomial(shots, F_exact),
// drawn from the seeded generator.
FidelityEstimate fidelity_shots(const Statevector& a, const Statevector& b,
                                std::uint64_t shots, std::uint64_t seed);

// Euclidean distance between the encoded unit vectors, from the measured
// squared overlap: d = sqrt(2 (1 - sqrt(f))).
double distance_from_fidelity(double fidelity);
inline double distance_from_fidelity(const FidelityEstimate& f) {
  return distance_from_fidelity(f.value);
}

struct ShotConfig {
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
};

// Pairwise fidelity-derived distances over an encoded dataset. Only the
// upper triangle is computed and mirrored; the diagonal is exactly zero.
// Shot mode derives one substream per pair from (seed, i, j), so the result
// does not depend on evaluation order or worker count.
DistanceMatrix distance_matrix(const EncodedDataset& ds, KernelMode mode,
                               ShotConfig shot_config = {}, unsigned jobs = 1);

// Plain L2 distances of the raw points, the un-encoded baseline.
DistanceMatrix euclidean_matrix(const std::vector<DataPoint>& data);

}  // namespace qtda
