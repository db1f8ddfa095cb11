#include "qtda/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtda/errors.hpp"

namespace qtda {

namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n)
    throw std::out_of_range("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(n) + " qubits");
}

// Applies a 2x2 unitary [[u00,u01],[u10,u11]] to qubit q.
void apply_single(std::vector<complex>& amps, int q, complex u00, complex u01,
                  complex u10, complex u11) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const complex a0 = amps[i0];
      const complex a1 = amps[i1];
      amps[i0] = u00 * a0 + u01 * a1;
      amps[i1] = u10 * a0 + u11 * a1;
    }
  }
}

inline int bit(std::size_t k, int q) { return static_cast<int>((k >> q) & 1u); }

}  // namespace

Statevector Statevector::zero_state(int n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (n_qubits > kMaxQubits)
    throw numerical_error("statevector capped at " + std::to_string(kMaxQubits) +
                          " qubits, requested " + std::to_string(n_qubits));
  Statevector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t{1} << n_qubits, complex{0.0, 0.0});
  s.amplitudes[0] = complex{1.0, 0.0};
  return s;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const complex& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

Gate Gate::rx(int q, double theta) { return Gate{GateKind::RX, theta, q}; }
Gate Gate::ry(int q, double theta) { return Gate{GateKind::RY, theta, q}; }
Gate Gate::rz(int q, double theta) { return Gate{GateKind::RZ, theta, q}; }
Gate Gate::h(int q) { return Gate{GateKind::H, 0.0, q}; }
Gate Gate::x(int q) { return Gate{GateKind::X, 0.0, q}; }

Gate Gate::cry(std::vector<int> controls, std::vector<bool> polarities,
               int target, double theta) {
  if (controls.size() != polarities.size())
    throw std::invalid_argument("cry: one polarity per control required");
  Gate g{GateKind::CRY, theta, target};
  g.controls = std::move(controls);
  g.polarities = std::move(polarities);
  return g;
}

Gate Gate::cz(int a, int b) {
  Gate g{GateKind::CZ, 0.0, a};
  g.pair = b;
  return g;
}

Gate Gate::z_phase(int q, double theta) { return Gate{GateKind::ZPhase, theta, q}; }

Gate Gate::zz_phase(int a, int b, double theta) {
  Gate g{GateKind::ZZPhase, theta, a};
  g.pair = b;
  return g;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CRY:
    case GateKind::ZPhase:
    case GateKind::ZZPhase:
      g.theta = -theta;
      break;
    case GateKind::H:
    case GateKind::X:
    case GateKind::CZ:
      break;  // self-inverse
  }
  return g;
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits);
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    inv.gates.push_back(it->inverse());
  return inv;
}

Statevector apply_gate(const Statevector& state, const Gate& g) {
  const int n = state.n_qubits;
  check_qubit(g.target, n);

  Statevector out = state;
  std::vector<complex>& amps = out.amplitudes;
  const complex I{0.0, 1.0};

  switch (g.kind) {
    case GateKind::RX: {
      const double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
      apply_single(amps, g.target, c, -I * s, -I * s, c);
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
      apply_single(amps, g.target, c, -s, s, c);
      break;
    }
    case GateKind::RZ: {
      apply_single(amps, g.target, std::exp(-I * (g.theta / 2.0)), 0.0, 0.0,
                   std::exp(I * (g.theta / 2.0)));
      break;
    }
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_single(amps, g.target, r, r, r, -r);
      break;
    }
    case GateKind::X: {
      apply_single(amps, g.target, 0.0, 1.0, 1.0, 0.0);
      break;
    }
    case GateKind::CRY: {
      for (int c : g.controls) check_qubit(c, n);
      const double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
      const std::size_t stride = std::size_t{1} << g.target;
      for (std::size_t k = 0; k < amps.size(); ++k) {
        if (bit(k, g.target) != 0) continue;
        bool active = true;
        for (std::size_t ci = 0; ci < g.controls.size(); ++ci) {
          if (bit(k, g.controls[ci]) != (g.polarities[ci] ? 1 : 0)) {
            active = false;
            break;
          }
        }
        if (!active) continue;
        const complex a0 = amps[k];
        const complex a1 = amps[k + stride];
        amps[k] = c * a0 - s * a1;
        amps[k + stride] = s * a0 + c * a1;
      }
      break;
    }
    case GateKind::CZ: {
      check_qubit(g.pair, n);
      for (std::size_t k = 0; k < amps.size(); ++k)
        if (bit(k, g.target) && bit(k, g.pair)) amps[k] = -amps[k];
      break;
    }
    case GateKind::ZPhase: {
      // Z eigenvalue is +1 on |0>, -1 on |1>.
      const complex p0 = std::exp(I * g.theta);
      const complex p1 = std::exp(-I * g.theta);
      for (std::size_t k = 0; k < amps.size(); ++k)
        amps[k] *= bit(k, g.target) ? p1 : p0;
      break;
    }
    case GateKind::ZZPhase: {
      check_qubit(g.pair, n);
      const complex even = std::exp(I * g.theta);   // z_i z_j = +1
      const complex odd = std::exp(-I * g.theta);   // z_i z_j = -1
      for (std::size_t k = 0; k < amps.size(); ++k)
        amps[k] *= (bit(k, g.target) == bit(k, g.pair)) ? even : odd;
      break;
    }
  }
  return out;
}

Statevector run_circuit(const Circuit& c) {
  Statevector s = Statevector::zero_state(c.n_qubits);
  for (const Gate& g : c.gates) s = apply_gate(s, g);
  return s;
}

complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("inner_product: dimension mismatch");
  complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < a.amplitudes.size(); ++k)
    acc += std::conj(a.amplitudes[k]) * b.amplitudes[k];
  return acc;
}

}  // namespace qtda
