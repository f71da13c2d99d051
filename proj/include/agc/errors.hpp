#ifndef AGC_ERRORS_HPP
#define AGC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace agc {

/// Error codes name the violated precondition.
enum class Errc {
  UnknownVertex,
  NotHereditary,
  EmptyVertexSet,
  NoQualifyingPath,
  NotInfiniteEdge,
  NotFiniteEmitter,
  InvalidSplit,
  InMismatch,
  NotAmplified,
  NotSingular,
  HasBreakingVertex,
  EmptyLocallyClosedSet,
  NotUpSet,
  NotOpen,
  UnsupportedGraphClass,
  TauOutOfRange,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Raised by normalize_singular; carries the offending (H, v) pair.
class HasBreakingVertexError : public Error {
public:
  HasBreakingVertexError(std::vector<std::size_t> hereditary_set,
                         std::size_t vertex, const std::string& what)
      : Error(Errc::HasBreakingVertex, what),
        hereditary_set_(std::move(hereditary_set)),
        vertex_(vertex) {}

  const std::vector<std::size_t>& hereditary_set() const {
    return hereditary_set_;
  }
  std::size_t vertex() const { return vertex_; }

private:
  std::vector<std::size_t> hereditary_set_;
  std::size_t vertex_;
};

}  // namespace agc

#endif
