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

#include "adqc/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace adqc {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr char kAxisNames[] = {'x', 'y', 'z'};

Matrix4 pauli_pair_exponential(Pauli p, double angle) {
  const Matrix2 s = pauli(p).matrix();
  const Matrix4 pp = tensor(Unitary2::unchecked(s), Unitary2::unchecked(s)).matrix();
  return std::cos(angle) * Matrix4::Identity() - kI * std::sin(angle) * pp;
}

}  // namespace

std::string SymmetryMove::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::HalfPiShift:
      out << "shift a" << kAxisNames[axes.at(0)] << " by " << -shift_count << " x pi/2";
      break;
    case Kind::Reflection:
      out << "reflect a" << kAxisNames[axes.at(0)] << " about pi/4";
      break;
    case Kind::SignFlipPair:
      out << "flip signs of a" << kAxisNames[axes.at(0)] << " and a" << kAxisNames[axes.at(1)];
      break;
    case Kind::SingleSignFlip:
      out << "flip sign of a" << kAxisNames[axes.at(0)];
      break;
    case Kind::Permutation:
      out << "permute to (a" << kAxisNames[axes.at(0)] << ", a" << kAxisNames[axes.at(1)]
          << ", a" << kAxisNames[axes.at(2)] << ")";
      break;
  }
  return out.str();
}

Unitary4 delta_gate(const CanonicalParams& p) {
  const Matrix4 m = pauli_pair_exponential(Pauli::X, p.ax) *
                    pauli_pair_exponential(Pauli::Y, p.ay) *
                    pauli_pair_exponential(Pauli::Z, p.az);
  return Unitary4::unchecked(m);
}

Unitary4 build_interaction(const InteractionSpec& spec) {
  return tensor(spec.post.ancilla, spec.post.reg) * delta_gate(spec.params) *
         tensor(spec.pre.ancilla, spec.pre.reg);
}

NormalizedParams normalize_params(const CanonicalParams& p) {
  NormalizedParams result;
  auto v = p.as_array();
  auto& moves = result.moves;

  std::vector<int> negative;
  for (int k = 0; k < 3; ++k) {
    if (v[k] < 0.0) negative.push_back(k);
  }
  while (negative.size() >= 2) {
    const int a = negative[negative.size() - 2];
    const int b = negative.back();
    negative.resize(negative.size() - 2);
    v[a] = -v[a];
    v[b] = -v[b];
    moves.push_back({SymmetryMove::Kind::SignFlipPair, {a, b}});
  }
  if (!negative.empty()) {
    const int a = negative.front();
    int partner = -1;
    for (int k = 0; k < 3; ++k) {
      if (k != a && v[k] == 0.0) partner = k;
    }
    v[a] = -v[a];
    if (partner >= 0) {
      moves.push_back({SymmetryMove::Kind::SignFlipPair, {std::min(a, partner), std::max(a, partner)}});
    } else {
      moves.push_back({SymmetryMove::Kind::SingleSignFlip, {a}});
    }
  }

  constexpr double kHalfPi = kPi / 2.0;
  for (int k = 0; k < 3; ++k) {
    const double n = std::floor(v[k] / kHalfPi);
    if (n != 0.0) {
      v[k] -= n * kHalfPi;
      moves.push_back({SymmetryMove::Kind::HalfPiShift, {k}, static_cast<int>(n)});
    }
    if (v[k] > kPi / 4.0) {
      v[k] = kHalfPi - v[k];
      moves.push_back({SymmetryMove::Kind::Reflection, {k}});
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
  if (order != std::array<int, 3>{0, 1, 2}) {
    moves.push_back({SymmetryMove::Kind::Permutation, {order[0], order[1], order[2]}});
  }
  result.params = {v[order[0]], v[order[1]], v[order[2]]};
  return result;
}

InteractionClass classify(const CanonicalParams& p) {
  const auto n = normalize_params(p).params;
  const auto v = n.as_array();
  const auto nonzero = std::count_if(v.begin(), v.end(), [](double x) { return x > kZeroParamTol; });
  InteractionClass c;
  c.count = static_cast<ParameterCount>(nonzero);
  const auto near = [](double x, double y) { return std::abs(x - y) < kZeroParamTol; };
  c.is_cz_class = near(n.ax, kPi / 4) && near(n.ay, 0.0) && near(n.az, 0.0);
  c.is_cz_swap_class = near(n.ax, kPi / 4) && near(n.ay, kPi / 4) && near(n.az, 0.0);
  return c;
}

std::string_view to_string(ParameterCount count) {
  switch (count) {
    case ParameterCount::Local:
      return "Local";
    case ParameterCount::OneParameter:
      return "OneParameter";
    case ParameterCount::TwoParameter:
      return "TwoParameter";
    case ParameterCount::ThreeParameter:
      return "ThreeParameter";
  }
  return "Unknown";
}

}  // namespace adqc
