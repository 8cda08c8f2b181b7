// syllasplit/error.h

// Copyright 2026  The syllasplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SYLLASPLIT_ERROR_H_
#define SYLLASPLIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace syllasplit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by the file system or file contents. The CLI maps all of
/// these to exit status 2.
class IoError : public Error {
 public:
  using Error::Error;
};

class FileNotFound : public IoError {
 public:
  using IoError::IoError;
};

class UnsupportedFormat : public IoError {
 public:
  using IoError::IoError;
};

class CorruptHeader : public IoError {
 public:
  using IoError::IoError;
};

class InvalidSpan : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class SourceMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace syllasplit

#endif  // SYLLASPLIT_ERROR_H_
