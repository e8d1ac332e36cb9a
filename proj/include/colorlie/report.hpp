#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace colorlie {

/// Outcome of an exhaustive checker. On failure `code` names the error
/// (E_THETA, E_PSI, ...) and `witness` describes the first counterexample.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string report_name) : name(std::move(report_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string code;
  std::string witness;

  void fail(std::string error_code, std::string what) {
    if (!passed)
      return;
    passed = false;
    code = std::move(error_code);
    witness = std::move(what);
  }
};

/// Throws AlgebraError(Invalid) carrying the report's code and witness.
void require(const CheckReport &report);

} // namespace colorlie
