#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tamepres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collection exceeded its step budget; the commutation table is suspect.
struct NonTerminatingCollection : Error {
  using Error::Error;
};

struct NotInLayer : Error {
  using Error::Error;
};

struct ZeroDirection : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroAnnihilator : Error {
  using Error::Error;
};

struct MissingGenerator : Error {
  using Error::Error;
};

// A cover precondition failed; carries an uncovered direction.
struct NotCovered : Error {
  NotCovered(const std::string& msg, std::vector<mpq_class> w)
      : Error(msg), witness(std::move(w)) {}
  std::vector<mpq_class> witness;
};

struct NeedSmallerBoxes : Error {
  using Error::Error;
};

struct NotTame : Error {
  using Error::Error;
};

struct NonLinearTails : Error {
  using Error::Error;
};

struct RelatorFails : Error {
  RelatorFails(const std::string& msg, std::string origin_, std::size_t index_)
      : Error(msg), origin(std::move(origin_)), index(index_) {}
  std::string origin;
  std::size_t index;
};

struct ParseError : Error {
  ParseError(const std::string& file, int line_, const std::string& what_)
      : Error(file + ":" + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

}  // namespace tamepres
