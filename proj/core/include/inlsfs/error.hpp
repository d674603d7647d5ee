#pragma once

#include <stdexcept>
#include <string>

namespace inlsfs {

// Raised for malformed or inconsistent input data. The CLI maps these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file did not match its expected schema. The message names the file,
// the offending record and the field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace inlsfs
