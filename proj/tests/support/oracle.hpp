// Copyright 2026 The ADQC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Reference implementations used only by tests. Written against plain
// std::complex vectors so they share no code with the library.

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Mat {
  int dim = 0;
  std::vector<C> a;  // row major

  explicit Mat(int n = 0) : dim(n), a(static_cast<std::size_t>(n) * n) {}
  C& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  C operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

using State = std::vector<C>;

Mat identity(int n);
Mat mul(const Mat& x, const Mat& y);
Mat adjoint(const Mat& x);
Mat kron(const Mat& x, const Mat& y);
Mat scaled(const Mat& x, C s);
/// sqrt(max(0, 1 - |Tr(x^dag y)| / (|x|_F |y|_F))): zero iff proportional.
double phase_distance(const Mat& x, const Mat& y);
/// Frobenius distance after removing the best global phase; no sqrt loss.
double aligned_gap(const Mat& x, const Mat& y);

Mat rz(double t);
Mat rx(double t);
Mat had();
Mat pauli_x();
/// Matrix with the given 2x2 entries.
Mat m2(C a, C b, C c, C d);

/// Qubit 0 is the most significant bit.
State apply1(const State& s, int n, int q, const Mat& g);
State apply2(const State& s, int n, int q0, int q1, const Mat& g);
/// exp(-i t Z_q0 Z_q1)
State apply_zz(const State& s, int n, int q0, int q1, double t);
/// <bra| on qubit q; returns the unnormalized remaining state.
State project(const State& s, int n, int q, const State& bra);
double norm2(const State& s);

/// Product g_{b_k} ... g_{b_1} for the bit string b_1 ... b_k.
Mat word_product(const Mat& g0, const Mat& g1, const std::string& bits);

struct BruteForceBest {
  std::string word;
  double distance = 1.0;
};
/// Minimum of sqrt((2 - |Tr(V^dag U)|) / 2) over all 2^length words.
BruteForceBest best_word(const Mat& g0, const Mat& g1, const Mat& target, int length);

/// Three qubits (ancilla, r1, r2) starting in |+>|+>|+>: exp(-i beta Z_a Z_r1),
/// Rx(pi/2) on the ancilla, exp(-i alpha Z_a Z_r2), ancilla projected onto
/// |+> (outcome 0) or |-> (outcome 1). Returns the register phases
/// arg(2 amp_ij) and the branch probability.
struct EggBranch {
  std::array<std::array<double, 2>, 2> phi{};
  double probability = 0.0;
  std::array<std::array<double, 2>, 2> magnitude{};
};
EggBranch egg_statevector(double alpha, double beta, int outcome);

/// Register map of a chain of ancilla-driven steps: for each bit the ancilla
/// starts in |b>, the 4x4 interaction acts on (ancilla, register) and the
/// ancilla is projected onto `readout`. Linear, unnormalized.
Mat ancilla_chain(const Mat& interaction, const State& readout0, const State& readout1,
                  const std::string& bits);

/// All bit strings of length 1..max_len.
std::vector<std::string> all_words(int max_len);

}  // namespace oracle
