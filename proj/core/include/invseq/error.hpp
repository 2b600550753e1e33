#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invseq {

enum class Errc {
  out_of_range,
  non_canonical_pattern,
  invalid_permutation,
  invalid_relation,
  size_too_large,
  overflow,
  unknown_statistic,
  unknown_class_id,
  unknown_name,
  no_closed_form,
  index_out_of_range,
  not_in_domain,
  degenerate_subsequence,
  non_unit_divisor,
  bad_sqrt_constant_term,
  order_mismatch,
  singular_parameter,
  parse_error,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  // 1-based position of the offending entry, when the error is about one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

using count_t = std::uint64_t;

count_t checked_add(count_t a, count_t b);
count_t checked_mul(count_t a, count_t b);

}  // namespace invseq
