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

#include <stdexcept>
#include <string>

namespace adqc {

// Numeric failures that callers are expected to distinguish. Argument errors
// use std::invalid_argument / std::out_of_range.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnitary : public NumericError {
 public:
  using NumericError::NumericError;
};

class ImpossibleBranch : public NumericError {
 public:
  using NumericError::NumericError;
};

class NotCoplanar : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateRing : public NumericError {
 public:
  using NumericError::NumericError;
};

class UnequalMagnitudes : public NumericError {
 public:
  using NumericError::NumericError;
};

class CollinearPoints : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConstraintViolated : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoRoot : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace adqc
