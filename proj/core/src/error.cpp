#include "invseq/error.hpp"

namespace invseq {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::non_canonical_pattern: return "NonCanonicalPattern";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::invalid_relation: return "InvalidRelation";
    case Errc::size_too_large: return "SizeTooLarge";
    case Errc::overflow: return "Overflow";
    case Errc::unknown_statistic: return "UnknownStatistic";
    case Errc::unknown_class_id: return "UnknownClassId";
    case Errc::unknown_name: return "UnknownName";
    case Errc::no_closed_form: return "NoClosedForm";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_in_domain: return "NotInDomainClass";
    case Errc::degenerate_subsequence: return "DegenerateSubsequence";
    case Errc::non_unit_divisor: return "NonUnitDivisor";
    case Errc::bad_sqrt_constant_term: return "BadSqrtConstantTerm";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::singular_parameter: return "SingularParameter";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

count_t checked_add(count_t a, count_t b) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "count addition overflows 64 bits");
  return r;
}

count_t checked_mul(count_t a, count_t b) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "count product overflows 64 bits");
  return r;
}

}  // namespace invseq
