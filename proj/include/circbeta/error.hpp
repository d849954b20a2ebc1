// Copyright 2026 The circbeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCBETA_ERROR_HPP
#define CIRCBETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace circbeta {

/// Precondition violated by the caller (bad dimension, parameter out of range).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two eigenvalues of a unitary matrix closer than the degeneracy tolerance.
class DegenerateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolvent requested at (numerically) an eigenvalue.
class SingularShift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root expected on the unit circle is not.
class NotUnimodular : public std::runtime_error {
 public:
  NotUnimodular(const std::string& what, double modulus)
      : std::runtime_error(what), modulus_(modulus) {}
  double modulus() const noexcept { return modulus_; }

 private:
  double modulus_;
};

/// A root expected on the real line is not.
class NotRealRooted : public std::runtime_error {
 public:
  NotRealRooted(const std::string& what, double imag_part)
      : std::runtime_error(what), imag_part_(imag_part) {}
  double imag_part() const noexcept { return imag_part_; }

 private:
  double imag_part_;
};

/// A structural property that holds by construction failed numerically.
class InternalConsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace circbeta

#endif  // CIRCBETA_ERROR_HPP
