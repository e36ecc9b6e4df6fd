#pragma once

#include <stdexcept>
#include <string>

namespace qcm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownType : Error {
  explicit UnknownType(const std::string& label)
      : Error("unknown Dynkin type: " + label) {}
};

struct InvalidMove : Error {
  using Error::Error;
};

struct SizeLimit : Error {
  using Error::Error;
};

struct FrozenVertex : Error {
  using Error::Error;
};

struct SeedMismatch : Error {
  SeedMismatch() : Error("elements belong to different seeds") {}
};

struct ParseError : Error {
  ParseError(const std::string& what, size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

struct NotDivisible : Error {
  using Error::Error;
};

struct NotACycle : Error {
  using Error::Error;
};

struct UnsupportedRank : Error {
  using Error::Error;
};

// A mutation left the Laurent ring: the common-denominator clearing ended in
// a failed exact division. Normal outcome for non-universally-Laurent inputs.
struct NonLaurent : Error {
  NonLaurent(const std::string& what, int stage_index = -1, int vertex_index = -1,
             size_t remainder = 0)
      : Error(what), stage(stage_index), vertex(vertex_index),
        remainder_terms(remainder) {}
  int stage;
  int vertex;
  size_t remainder_terms;
};

}  // namespace qcm
