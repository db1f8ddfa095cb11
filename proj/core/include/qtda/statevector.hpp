#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qtda {

using complex = std::complex<double>;

// Basis convention used everywhere: little-endian. Qubit q holds bit q of the
// basis-state index, so amplitude k is the ket |b0 b1 ... b_{n-1}> with the
// label written qubit-0 first. Serialized artifacts carry this string.
inline constexpr const char* kBasisConvention =
    "little-endian; qubit 0 = least-significant index bit; ket labels qubit-0 first";

// Dense simulation cap. Experiments here need at most a handful of qubits.
inline constexpr int kMaxQubits = 20;

struct Statevector {
  int n_qubits = 0;
  std::vector<complex> amplitudes;  // length 2^n_qubits

  // |0...0> on n qubits.
  static Statevector zero_state(int n_qubits);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

enum class GateKind : std::uint8_t { RX, RY, RZ, H, X, CRY, CZ, ZPhase, ZZPhase };

// Gate conventions:
//   RX/RY/RZ(theta)   standard half-angle rotations exp(-i theta P / 2)
//   ZPhase(theta)     exp(i theta Z), i.e. diag(e^{i theta}, e^{-i theta})
//   ZZPhase(theta)    exp(i theta Z Z) on a qubit pair
//   CRY               RY on the target, conditioned on every control qubit
//                     matching its polarity (true = |1> control, false = |0>)
//   CZ                diag(1,1,1,-1) on a qubit pair
struct Gate {
  GateKind kind = GateKind::H;
  double theta = 0.0;
  int target = 0;
  int pair = -1;                // second qubit of CZ / ZZPhase
  std::vector<int> controls;    // CRY only
  std::vector<bool> polarities;  // parallel to controls

  static Gate rx(int q, double theta);
  static Gate ry(int q, double theta);
  static Gate rz(int q, double theta);
  static Gate h(int q);
  static Gate x(int q);
  static Gate cry(std::vector<int> controls, std::vector<bool> polarities,
                  int target, double theta);
  static Gate cz(int a, int b);
  static Gate z_phase(int q, double theta);
  static Gate zz_phase(int a, int b, double theta);

  Gate inverse() const;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void add(Gate g) { gates.push_back(std::move(g)); }

  // Reversed gate order with every gate inverted; C.inverse() undoes C.
  Circuit inverse() const;
};

// U_g |state>. Throws std::out_of_range for bad qubit indices.
Statevector apply_gate(const Statevector& state, const Gate& g);

// Applies the gates in order to |0...0>.
Statevector run_circuit(const Circuit& c);

// <a|b>. Throws std::invalid_argument on dimension mismatch.
complex inner_product(const Statevector& a, const Statevector& b);

}  // namespace qtda
