#pragma once

#include <stdexcept>
#include <string>

namespace divlat {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands belong to different lattices.
class BackendMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// The sample frame does not contain the elements a computation needs.
class FrameInsufficient : public Error {
public:
  using Error::Error;
};

// Query has no finite answer on this backend (e.g. maximal elements above 0 in Z).
class Unsupported : public Error {
public:
  using Error::Error;
};

} // namespace divlat
