#include <algorithm>

#include "invseq/bijections.hpp"

namespace invseq {

namespace {

// Index of the last vertex (in preorder) that is neither the root nor a leaf; 0 if none.
std::size_t last_interior(const std::vector<int>& degrees) {
  for (std::size_t i = degrees.size(); i-- > 1;)
    if (degrees[i] > 0) return i;
  return 0;
}

}  // namespace

OrderedTree::OrderedTree(std::vector<int> preorder_degrees) : degrees_(std::move(preorder_degrees)) {
  // Lukasiewicz condition: partial sums of (deg - 1) stay >= 0 until the final -1.
  long balance = 0;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] < 0) throw Error(Errc::parse_error, "negative outdegree");
    balance += degrees_[i] - 1;
    if (balance < 0 && i + 1 != degrees_.size())
      throw Error(Errc::parse_error, "outdegree sequence closes before its end");
  }
  if (degrees_.empty() || balance != -1) throw Error(Errc::parse_error, "not a preorder outdegree sequence");
}

OrderedTree OrderedTree::parse(std::string_view literal) {
  std::vector<int> degrees;
  std::vector<std::size_t> open;
  std::size_t depth_zero_closures = 0;
  for (char c : literal) {
    if (c == ' ') continue;
    if (c == '(') {
      if (!open.empty()) ++degrees[open.back()];
      else if (!degrees.empty()) throw Error(Errc::parse_error, "tree literal has more than one root");
      open.push_back(degrees.size());
      degrees.push_back(0);
    } else if (c == ')') {
      if (open.empty()) throw Error(Errc::parse_error, "unbalanced ')' in tree literal");
      open.pop_back();
      if (open.empty()) ++depth_zero_closures;
    } else {
      throw Error(Errc::parse_error, std::string("unexpected character '") + c + "' in tree literal");
    }
  }
  if (!open.empty() || depth_zero_closures != 1) throw Error(Errc::parse_error, "unbalanced tree literal");
  return OrderedTree(std::move(degrees));
}

std::vector<int> OrderedTree::type() const {
  if (edges() == 0) return {};
  std::vector<int> t{degrees_[0]};
  for (std::size_t i = 1; i < degrees_.size(); ++i)
    if (degrees_[i] > 0) t.push_back(degrees_[i]);
  return t;
}

int OrderedTree::capacity() const {
  return static_cast<int>(degrees_.size() - 1 - last_interior(degrees_));
}

std::string OrderedTree::to_string() const {
  std::string s;
  std::size_t pos = 0;
  auto rec = [&](auto&& self) -> void {
    const int d = degrees_[pos++];
    s += '(';
    for (int c = 0; c < d; ++c) self(self);
    s += ')';
  };
  rec(rec);
  return s;
}

std::vector<OrderedTree> all_ordered_trees(int edges) {
  std::vector<OrderedTree> out;
  if (edges < 0) return out;
  std::vector<int> deg;
  const int vertices = edges + 1;
  auto rec = [&](auto&& self, long balance, int remaining_edges) -> void {
    if (static_cast<int>(deg.size()) == vertices) {
      if (balance == -1) out.emplace_back(deg);
      return;
    }
    for (int d = 0; d <= remaining_edges; ++d) {
      long next = balance + d - 1;
      if (next < 0 && static_cast<int>(deg.size()) + 1 != vertices) continue;
      deg.push_back(d);
      self(self, next, remaining_edges - d);
      deg.pop_back();
    }
  };
  rec(rec, 0, edges);
  return out;
}

DyckPath tree_to_dyck(const OrderedTree& t) {
  const auto& deg = t.degrees();
  const std::size_t v = last_interior(deg);
  if (v == 0) return DyckPath(std::vector<int>(static_cast<std::size_t>(t.edges()), 0));
  // Delete v's children; they are leaves sitting right after v in preorder.
  std::vector<int> reduced(deg);
  const int dv = reduced[v];
  reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(v) + 1,
                reduced.begin() + static_cast<std::ptrdiff_t>(v) + 1 + dv);
  reduced[v] = 0;
  const std::size_t vprime = last_interior(reduced);
  const int h = static_cast<int>(v - vprime);
  std::vector<int> heights = tree_to_dyck(OrderedTree(reduced)).heights();
  const int base = heights.empty() ? 0 : heights.back();
  heights.insert(heights.end(), static_cast<std::size_t>(dv), base + h);
  return DyckPath(std::move(heights));
}

}  // namespace invseq
