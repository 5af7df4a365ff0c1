#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grounded {

enum class error_kind {
  parse,
  invalid_argument,
  not_biconnected,
  not_series_parallel,
  not_separation_pair,
  no_separation_pair,
  instance_too_large,
  shape_violation,
  transitive_edges_present,
  too_heavy,
  not_induced,
  nesting_violation,
  insertion_failure,
  degenerate_position,
  vertex_mismatch,
};

std::string_view to_string(error_kind kind);

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace grounded
