#pragma once

#include <stdexcept>
#include <string>

#include <rterm/rterm.h>

namespace rterm {

// Exception taxonomy shared by all modules. Each error carries the status
// code the C API (and the CLI exit code) maps it to.
class Error : public std::runtime_error {
 public:
  Error(rterm_status code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  rterm_status code() const noexcept { return code_; }

 private:
  rterm_status code_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string &what)
      : Error(RTERM_ERR_INVALID_ARGUMENT, what) {}
};

struct IrrationalResultError : Error {
  explicit IrrationalResultError(const std::string &what)
      : Error(RTERM_ERR_IRRATIONAL_RESULT, what) {}
};

struct InvalidCouplingError : Error {
  explicit InvalidCouplingError(const std::string &what)
      : Error(RTERM_ERR_INVALID_ARGUMENT, what) {}
};

struct RouteDisagreementError : Error {
  explicit RouteDisagreementError(const std::string &what)
      : Error(RTERM_ERR_ROUTE_DISAGREEMENT, what) {}
};

struct DegenerateMetricError : Error {
  explicit DegenerateMetricError(const std::string &what)
      : Error(RTERM_ERR_DEGENERATE_METRIC, what) {}
};

struct StepTooLargeError : Error {
  explicit StepTooLargeError(const std::string &what)
      : Error(RTERM_ERR_STEP_TOO_LARGE, what) {}
};

struct DegenerateGridError : Error {
  explicit DegenerateGridError(const std::string &what)
      : Error(RTERM_ERR_DEGENERATE_GRID, what) {}
};

struct ParseError : Error {
  ParseError(std::size_t row, const std::string &column,
             const std::string &what)
      : Error(RTERM_ERR_PARSE, format(row, column, what)),
        row(row),
        column(column) {}
  std::size_t row;    // 1-based line number in the input
  std::string column; // offending column name, may be empty

 private:
  static std::string format(std::size_t row, const std::string &column,
                            const std::string &what) {
    std::string msg = "row " + std::to_string(row);
    if (!column.empty()) msg += ", column " + column;
    return msg + ": " + what;
  }
};

struct InsufficientLevelsError : Error {
  explicit InsufficientLevelsError(const std::string &what)
      : Error(RTERM_ERR_INSUFFICIENT_LEVELS, what) {}
};

struct SingularDesignError : Error {
  explicit SingularDesignError(const std::string &what)
      : Error(RTERM_ERR_SINGULAR_DESIGN, what) {}
};

}  // namespace rterm
