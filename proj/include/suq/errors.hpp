#pragma once

#include <stdexcept>
#include <string>

namespace suq {

// Raised when no generator s_i appears more than once in the reduced word.
// Representations of this shape reduce to the SU_q(2) family and are handled
// by the degenerate reporting path instead of the full sign analysis.
struct NoRepeatedGenerator : std::runtime_error {
  explicit NoRepeatedGenerator(const std::string& msg) : std::runtime_error(msg) {}
};

// The 0th-segment derivation found moves with conflicting end levels.
struct NonUniqueI0 : std::runtime_error {
  explicit NonUniqueI0(const std::string& msg) : std::runtime_error(msg) {}
};

struct MovesEqual : std::invalid_argument {
  explicit MovesEqual(const std::string& msg) : std::invalid_argument(msg) {}
};

// A move application would push an N-coordinate below zero.
struct NegativeNCoordinate : std::domain_error {
  explicit NegativeNCoordinate(const std::string& msg) : std::domain_error(msg) {}
};

struct NotInterior : std::domain_error {
  explicit NotInterior(const std::string& msg) : std::domain_error(msg) {}
};

// A reduced diagram does not contain the move a schedule asked for.
struct MoveNotFound : std::runtime_error {
  explicit MoveNotFound(const std::string& msg) : std::runtime_error(msg) {}
};

struct CosetMismatch : std::invalid_argument {
  explicit CosetMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// The entry operator used as the non-compactness witness must be a single
// monomial; more than one contributing path is reported, never resolved.
struct MultiplePaths : std::runtime_error {
  explicit MultiplePaths(const std::string& msg) : std::runtime_error(msg) {}
};

struct WindowOverflow : std::runtime_error {
  explicit WindowOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace suq
