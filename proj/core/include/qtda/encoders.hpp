#pragma once

#include <string>
#include <vector>

#include "qtda/statevector.hpp"

namespace qtda {

using DataPoint = std::vector<double>;

// Point on the open probability simplex: strictly positive entries summing
// to 1 (within 1e-12).
struct SimplexPoint {
  std::vector<double> values;
};

enum class EncoderKind { angle, amplitude, iqp };
enum class Preprocessing { none, simplex_map, scale_to_two_pi };

const char* to_string(EncoderKind k);
const char* to_string(Preprocessing p);

struct EncodingScheme {
  EncoderKind kind = EncoderKind::angle;
  Preprocessing preprocessing = Preprocessing::none;

  static EncodingScheme angle() { return {EncoderKind::angle, Preprocessing::none}; }
  static EncodingScheme amplitude() { return {EncoderKind::amplitude, Preprocessing::simplex_map}; }
  static EncodingScheme iqp(Preprocessing p = Preprocessing::simplex_map) {
    return {EncoderKind::iqp, p};
  }
};

// The angle encoder applies exp(-i x X) per coordinate, which is RX(2x) in
// the simulator's half-angle convention. With this full-angle form the
// overlap of two encodings is cos(x_l - y_l) per coordinate.
inline constexpr double kAngleGateFactor = 2.0;

// Inputs beyond this magnitude would overflow exp() inside the simplex map.
inline constexpr double kSimplexMapInputLimit = 700.0;

// Floor of the min-max scaling onto (0, 2pi]: the smallest value maps to
// 2pi * kMinMaxFloor instead of 0, keeping the interval half-open.
inline constexpr double kMinMaxFloor = 1e-6;

// Homeomorphism R^{n-1} -> open simplex in R^n:
// f(x) = (e^{x_1}, ..., e^{x_{n-1}}, 1) / (1 + sum e^{x_i}).
SimplexPoint simplex_map(const DataPoint& x);

// Inverse of simplex_map: s -> (log(s_1/s_n), ..., log(s_{n-1}/s_n)).
DataPoint simplex_map_inverse(const SimplexPoint& s);

// Circuit builders are exposed alongside the encode_* helpers so that the
// fidelity-test circuit E(D_j)^dag E(D_i) can be assembled gate by gate.
Circuit angle_circuit(const DataPoint& x);
Statevector encode_angle(const DataPoint& x);

// Amplitude encoding via recursive binary-tree splitting of the probability
// vector, realized as a ladder of polarity-controlled RY gates. Accepts any
// length >= 1; zero-pads to the next power of two. Entries must be
// nonnegative and sum to 1.
Circuit amplitude_circuit(const std::vector<double>& probabilities);
Statevector encode_amplitude(const std::vector<double>& probabilities);

// IQP encoding U_Z(x) H^n U_Z(x) H^n |0..0> with the diagonal layer
// U_Z(x) = exp(i [sum_i x_i Z_i + sum_{i,j} (pi-x_i)(pi-x_j) Z_i Z_j]),
// the double sum running over all ordered pairs. Entries must lie in
// (0, 2pi]. The i=j terms of the double sum are a global phase; the circuit
// carries the Z/ZZ phase gates and encode_iqp applies that scalar on top.
Circuit iqp_circuit(const DataPoint& x);
Statevector encode_iqp(const DataPoint& x);

struct EncodedDataset {
  EncodingScheme scheme;
  std::string basis_convention;       // kBasisConvention
  std::vector<DataPoint> points;      // raw input points
  std::vector<DataPoint> preprocessed;  // encoder inputs after preprocessing
  std::vector<Statevector> states;
};

// Applies the scheme's preprocessing, then the per-point encoder.
// Preprocessing semantics by scheme:
//   angle     + none             encode raw coordinates
//   amplitude + simplex_map      simplex_map, zero-pad to 2^n (required)
//   iqp       + simplex_map      2pi * simplex_map, range (0, 2pi)
//   iqp       + scale_to_two_pi  per-coordinate min-max onto (0, 2pi]
//   iqp       + none             raw values, validated against (0, 2pi]
EncodedDataset encode_dataset(const std::vector<DataPoint>& data,
                              EncodingScheme scheme);

}  // namespace qtda
