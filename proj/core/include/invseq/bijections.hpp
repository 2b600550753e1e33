#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

// Weakly increasing heights h_1..h_n with 0 <= h_i <= i-1.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<int> heights);  // validates

  std::size_t size() const noexcept { return heights_.size(); }
  const std::vector<int>& heights() const noexcept { return heights_; }
  int last() const noexcept { return heights_.empty() ? 0 : heights_.back(); }
  int capacity() const noexcept { return static_cast<int>(heights_.size()) - last(); }
  // Lengths of the maximal runs of equal heights.
  std::vector<int> type() const;

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<int> heights_;
};

std::vector<DyckPath> all_dyck_paths(int n);

enum class Color : std::uint8_t { black, red };

struct ColoredDyckPath {
  std::vector<int> heights;
  std::vector<Color> colors;

  // (a) height-0 steps red, (b) first step of each positive height black.
  bool in_class_a() const;
  // In class A and red positive steps only at the smallest positive height.
  bool in_class_b() const;
  std::string to_string() const;  // red steps carry a trailing 'r': "0r,1,1r"

  friend bool operator==(const ColoredDyckPath&, const ColoredDyckPath&) = default;
};

ColoredDyckPath outline(const InvSeq& e);
InvSeq outline_inverse(const ColoredDyckPath& d);

class SetPartition {
 public:
  // Blocks are normalized: each sorted, ordered by least element.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  int size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::string to_string() const;  // "{{1,4,6},{2,3},{5}}"

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

std::vector<SetPartition> all_set_partitions(int n);

SetPartition eta(const InvSeq& e);
InvSeq eta_inverse(const SetPartition& p);

// (010,101) -> (010,100), preserving (dist, satu, zero).
InvSeq phi_stat(const InvSeq& e);
InvSeq phi_stat_inverse(const InvSeq& e);

// (011,012) -> (010,012): zeros after the first positive copy the nearest positive to their left.
InvSeq zero_propagate(const InvSeq& e);
InvSeq zero_propagate_inverse(const InvSeq& e);

// (010,021) -> (011,021): positive entries other than first occurrences become 0.
InvSeq first_occurrence_map(const InvSeq& e);
InvSeq first_occurrence_inverse(const InvSeq& e);

// B_{n,1} (avoids 011 and 102, exactly two saturated entries) -> I_{n-1}(011,102).
InvSeq rho(const InvSeq& e);
InvSeq rho_inverse(const InvSeq& e);

// I_n(210) -> I_n(201); a rearrangement of the entries.
InvSeq corteel_phi(const InvSeq& e);

// positions are 0-based, strictly increasing.
std::vector<int> cyclic_exchange(std::span<const int> e, std::span<const std::size_t> positions);

// I_n(201) -> I_n(210). psi_stages returns e^(0), e^(1), ..., e^(m).
InvSeq psi(const InvSeq& e);
std::vector<InvSeq> psi_stages(const InvSeq& e);

// I_n(100,021) -> I_n(110,021).
InvSeq cap_map(const InvSeq& e);
InvSeq cap_map_inverse(const InvSeq& e);

// Ordered (plane) tree stored as its preorder outdegree sequence.
class OrderedTree {
 public:
  OrderedTree() : degrees_{0} {}
  explicit OrderedTree(std::vector<int> preorder_degrees);  // validates
  static OrderedTree parse(std::string_view literal);      // "(()(()))"

  int edges() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  // Outdegrees of the root and then of the non-root internal vertices, in preorder.
  std::vector<int> type() const;
  // Vertices after the last non-root internal vertex (after the root if there is none).
  int capacity() const;
  std::string to_string() const;

  friend auto operator<=>(const OrderedTree&, const OrderedTree&) = default;

 private:
  std::vector<int> degrees_;
};

std::vector<OrderedTree> all_ordered_trees(int edges);

DyckPath tree_to_dyck(const OrderedTree& t);

}  // namespace invseq
