#include "qtda/encoders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qtda/errors.hpp"

namespace qtda {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_finite(const DataPoint& x, const char* who) {
  for (double v : x)
    if (!std::isfinite(v)) throw data_error(std::string(who) + ": non-finite entry");
}

int qubits_for(std::size_t length) {
  int n = 0;
  while ((std::size_t{1} << n) < length) ++n;
  return std::max(n, 1);
}

// Recursive binary-tree split: rotate `qubit` by the mass ratio of the two
// halves, conditioned on the path taken so far, then recurse into each half.
void tree_rotations(Circuit& c, const std::vector<double>& probs,
                    std::size_t begin, std::size_t end, int qubit,
                    std::vector<int>& ctrl_qubits, std::vector<bool>& ctrl_bits,
                    double mass) {
  if (mass <= 0.0) return;  // empty subtree, amplitudes stay zero
  const std::size_t mid = begin + (end - begin) / 2;
  double right = 0.0;
  for (std::size_t k = mid; k < end; ++k) right += probs[k];
  double ratio = right / mass;
  ratio = std::clamp(ratio, 0.0, 1.0);
  const double theta = 2.0 * std::asin(std::sqrt(ratio));

  if (ctrl_qubits.empty())
    c.add(Gate::ry(qubit, theta));
  else
    c.add(Gate::cry(ctrl_qubits, ctrl_bits, qubit, theta));

  if (qubit == 0) return;
  ctrl_qubits.push_back(qubit);

  ctrl_bits.push_back(false);
  tree_rotations(c, probs, begin, mid, qubit - 1, ctrl_qubits, ctrl_bits, mass - right);
  ctrl_bits.back() = true;
  tree_rotations(c, probs, mid, end, qubit - 1, ctrl_qubits, ctrl_bits, right);
  ctrl_bits.pop_back();

  ctrl_qubits.pop_back();
}

// Sum over the i=j terms of the U_Z double sum; identity action, pure phase.
double iqp_identity_phase(const DataPoint& x) {
  double s = 0.0;
  for (double v : x) s += (std::numbers::pi - v) * (std::numbers::pi - v);
  return s;
}

DataPoint minmax_to_two_pi(const DataPoint& x, const std::vector<double>& lo,
                           const std::vector<double>& hi) {
  DataPoint out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double range = hi[i] - lo[i];
    const double u = range > 0.0 ? (x[i] - lo[i]) / range : 0.5;
    out[i] = kTwoPi * kMinMaxFloor + u * (kTwoPi - kTwoPi * kMinMaxFloor);
  }
  return out;
}

}  // namespace

const char* to_string(EncoderKind k) {
  switch (k) {
    case EncoderKind::angle: return "angle";
    case EncoderKind::amplitude: return "amplitude";
    case EncoderKind::iqp: return "iqp";
  }
  return "?";
}

const char* to_string(Preprocessing p) {
  switch (p) {
    case Preprocessing::none: return "none";
    case Preprocessing::simplex_map: return "simplex-map";
    case Preprocessing::scale_to_two_pi: return "scale-to-2pi";
  }
  return "?";
}

SimplexPoint simplex_map(const DataPoint& x) {
  check_finite(x, "simplex_map");
  for (double v : x)
    if (std::abs(v) > kSimplexMapInputLimit)
      throw data_error("simplex_map: |entry| > 700 would overflow exp");
  SimplexPoint s;
  s.values.resize(x.size() + 1);
  double denom = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.values[i] = std::exp(x[i]);
    denom += s.values[i];
  }
  s.values[x.size()] = 1.0;
  for (double& v : s.values) v /= denom;
  return s;
}

DataPoint simplex_map_inverse(const SimplexPoint& s) {
  if (s.values.empty()) throw data_error("simplex_map_inverse: empty input");
  for (double v : s.values)
    if (!(v > 0.0)) throw data_error("simplex_map_inverse: nonpositive entry");
  const double last = s.values.back();
  DataPoint x(s.values.size() - 1);
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
    x[i] = std::log(s.values[i] / last);
  return x;
}

Circuit angle_circuit(const DataPoint& x) {
  if (x.empty()) throw data_error("angle encoding: zero-dimensional point");
  check_finite(x, "angle encoding");
  Circuit c(static_cast<int>(x.size()));
  for (std::size_t l = 0; l < x.size(); ++l)
    c.add(Gate::rx(static_cast<int>(l), kAngleGateFactor * x[l]));
  return c;
}

Statevector encode_angle(const DataPoint& x) { return run_circuit(angle_circuit(x)); }

Circuit amplitude_circuit(const std::vector<double>& probabilities) {
  if (probabilities.empty()) throw data_error("amplitude encoding: empty input");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw data_error("amplitude encoding: negative entry");
    sum += p;
  }
  if (sum <= 0.0) throw data_error("amplitude encoding: all-zero input");
  if (std::abs(sum - 1.0) > 1e-9)
    throw data_error("amplitude encoding: entries must sum to 1");

  const int n = qubits_for(probabilities.size());
  std::vector<double> padded(std::size_t{1} << n, 0.0);
  std::copy(probabilities.begin(), probabilities.end(), padded.begin());

  Circuit c(n);
  std::vector<int> ctrl_qubits;
  std::vector<bool> ctrl_bits;
  tree_rotations(c, padded, 0, padded.size(), n - 1, ctrl_qubits, ctrl_bits, sum);
  return c;
}

Statevector encode_amplitude(const std::vector<double>& probabilities) {
  return run_circuit(amplitude_circuit(probabilities));
}

Circuit iqp_circuit(const DataPoint& x) {
  if (x.empty()) throw data_error("iqp encoding: zero-dimensional point");
  check_finite(x, "iqp encoding");
  for (double v : x)
    if (!(v > 0.0 && v <= kTwoPi))
      throw data_error("iqp encoding: entries must lie in (0, 2pi]");

  const int n = static_cast<int>(x.size());
  Circuit c(n);
  auto add_uz = [&] {
    for (int i = 0; i < n; ++i) c.add(Gate::z_phase(i, x[i]));
    // Ordered pairs (i,j) and (j,i) carry the same coefficient; fold them
    // into one ZZ gate with twice the angle.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        c.add(Gate::zz_phase(i, j, 2.0 * (std::numbers::pi - x[i]) * (std::numbers::pi - x[j])));
  };
  for (int rep = 0; rep < 2; ++rep) {
    for (int q = 0; q < n; ++q) c.add(Gate::h(q));
    add_uz();
  }
  return c;
}

Statevector encode_iqp(const DataPoint& x) {
  Statevector s = run_circuit(iqp_circuit(x));
  const complex phase = std::exp(complex{0.0, 2.0 * iqp_identity_phase(x)});
  for (complex& a : s.amplitudes) a *= phase;
  return s;
}

EncodedDataset encode_dataset(const std::vector<DataPoint>& data,
                              EncodingScheme scheme) {
  if (!data.empty()) {
    const std::size_t dim = data.front().size();
    for (const DataPoint& p : data)
      if (p.size() != dim)
        throw data_error("encode_dataset: points have mixed dimensions");
  }
  if (scheme.kind == EncoderKind::amplitude &&
      scheme.preprocessing != Preprocessing::simplex_map)
    throw data_error("amplitude scheme requires simplex-map preprocessing");

  EncodedDataset ds;
  ds.scheme = scheme;
  ds.basis_convention = kBasisConvention;
  ds.points = data;
  ds.preprocessed.reserve(data.size());
  ds.states.reserve(data.size());

  std::vector<double> lo, hi;
  if (scheme.preprocessing == Preprocessing::scale_to_two_pi && !data.empty()) {
    lo = hi = data.front();
    for (const DataPoint& p : data)
      for (std::size_t i = 0; i < p.size(); ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
  }

  for (const DataPoint& p : data) {
    DataPoint in;
    switch (scheme.preprocessing) {
      case Preprocessing::none:
        in = p;
        break;
      case Preprocessing::simplex_map: {
        in = simplex_map(p).values;
        if (scheme.kind == EncoderKind::iqp)
          for (double& v : in) v *= kTwoPi;
        break;
      }
      case Preprocessing::scale_to_two_pi:
        in = minmax_to_two_pi(p, lo, hi);
        break;
    }
    switch (scheme.kind) {
      case EncoderKind::angle: ds.states.push_back(encode_angle(in)); break;
      case EncoderKind::amplitude: ds.states.push_back(encode_amplitude(in)); break;
      case EncoderKind::iqp: ds.states.push_back(encode_iqp(in)); break;
    }
    ds.preprocessed.push_back(std::move(in));
  }
  return ds;
}

}  // namespace qtda
