// SPDX-License-Identifier: Apache-2.0
//
// gsm-mimo: energy-efficiency simulator for GSM-aided massive MIMO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GSM_MIMO_ERRORS_HPP
#define GSM_MIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsm_mimo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition of an operation (bad argument value or range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Base for failures that originate in floating-point computation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Gram matrix of a ZF precoder is singular; the trial is redrawn by the engine.
class RankDeficiencyError : public SingularMatrixError {
 public:
  using SingularMatrixError::SingularMatrixError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsm_mimo

#endif  // GSM_MIMO_ERRORS_HPP
