#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/series.hpp"

namespace invseq {

// RFC 4180 style: quoted fields may hold commas and doubled quotes. Blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// "0,0,1,2" or "(0,0,1,2)" or "0 0 1 2".
std::vector<int> parse_int_list(std::string_view text);

// One "n a(n)" line per term.
std::string write_bfile(const AvoidanceSequence& seq, int first_index = 1);
std::vector<std::pair<int, count_t>> parse_bfile(std::string_view text);  // '#' lines are comments

std::string write_sequence_csv(const AvoidanceSequence& seq);
// {"pair": [...], "counts": {"1": 1, ...}, "provenance": "..."}
std::string write_sequence_json(const std::vector<std::string>& patterns, const AvoidanceSequence& seq,
                                std::string_view provenance);

std::string write_triangle_csv(const IndexedTriangle& t);  // n,m,l,value
std::string write_triangle_csv(const Triangle& t);         // n,k,value

// One exact coefficient per line, x^0 first.
std::string write_series(const Fps& f);
Fps parse_series(std::string_view text);

}  // namespace invseq
