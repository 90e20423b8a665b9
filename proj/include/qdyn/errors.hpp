// Copyright 2026 The qdyn authors
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

#ifndef QDYN_ERRORS_HPP
#define QDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdyn {

/// Base class for all qdyn errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix shape or tensor-factor dimension mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its admissible range (weights, fidelities, rates, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested dimension exceeds the configured maximum.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Input in a file or stream violates a format contract.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A matrix required to be Hermitian is not, beyond tolerance.
/// Carries the measured defect max_ij |M - M^dag|_ij.
class NonHermitianError : public Error {
 public:
  NonHermitianError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

/// A Kraus form was requested for a map whose Choi matrix has a negative
/// eigenvalue; carries that eigenvalue as the certificate.
class NotCpError : public Error {
 public:
  NotCpError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace qdyn

#endif  // QDYN_ERRORS_HPP
