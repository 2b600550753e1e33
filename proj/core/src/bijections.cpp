#include "invseq/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace invseq {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::not_in_domain, what);
}

bool avoids(const InvSeq& e, std::initializer_list<const char*> patterns) {
  for (const char* p : patterns)
    if (contains_pattern(e.span(), Pattern::parse(p))) return false;
  return true;
}

void require_avoids(const InvSeq& e, std::initializer_list<const char*> patterns, const char* map_name) {
  std::string list;
  for (const char* p : patterns) list += (list.empty() ? "" : ",") + std::string(p);
  require(avoids(e, patterns), std::string(map_name) + ": " + format_word(e.span()) + " does not avoid {" + list + "}");
}

std::size_t first_positive(const std::vector<int>& e) {
  return static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](int v) { return v > 0; }) - e.begin());
}

}  // namespace

DyckPath::DyckPath(std::vector<int> heights) : heights_(std::move(heights)) {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] < 0 || heights_[i] > static_cast<int>(i))
      throw Error(Errc::out_of_range, "height " + std::to_string(heights_[i]) + " at step " + std::to_string(i + 1),
                  i + 1);
    if (i > 0 && heights_[i] < heights_[i - 1])
      throw Error(Errc::not_in_domain, "Dyck path heights must be weakly increasing", i + 1);
  }
}

std::vector<int> DyckPath::type() const {
  std::vector<int> t;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (i == 0 || heights_[i] != heights_[i - 1]) t.push_back(0);
    ++t.back();
  }
  return t;
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::vector<int> h;
  auto rec = [&](auto&& self) -> void {
    const int i = static_cast<int>(h.size());
    if (i == n) {
      out.emplace_back(h);
      return;
    }
    for (int v = h.empty() ? 0 : h.back(); v <= i; ++v) {
      h.push_back(v);
      self(self);
      h.pop_back();
    }
  };
  rec(rec);
  return out;
}

bool ColoredDyckPath::in_class_a() const {
  if (colors.size() != heights.size()) return false;
  try {
    DyckPath check(heights);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] == 0 && colors[i] != Color::red) return false;
    bool first_at_height = (i == 0 || heights[i - 1] != heights[i]);
    if (heights[i] > 0 && first_at_height && colors[i] != Color::black) return false;
  }
  return true;
}

bool ColoredDyckPath::in_class_b() const {
  if (!in_class_a()) return false;
  int smallest = 0;
  for (int h : heights)
    if (h > 0) {
      smallest = h;
      break;
    }
  for (std::size_t i = 0; i < heights.size(); ++i)
    if (heights[i] > 0 && colors[i] == Color::red && heights[i] != smallest) return false;
  return true;
}

std::string ColoredDyckPath::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(heights[i]);
    if (colors[i] == Color::red) s += 'r';
  }
  return s;
}

ColoredDyckPath outline(const InvSeq& e) {
  require_avoids(e, {"021"}, "outline");
  ColoredDyckPath d;
  int running_max = 0;
  for (int v : e) {
    running_max = std::max(running_max, v);
    if (v > 0) {
      d.heights.push_back(v);
      d.colors.push_back(Color::black);
    } else {
      d.heights.push_back(running_max);
      d.colors.push_back(Color::red);
    }
  }
  return d;
}

InvSeq outline_inverse(const ColoredDyckPath& d) {
  require(d.in_class_a(), "outline_inverse: path " + d.to_string() + " is not in class A");
  std::vector<int> e;
  for (std::size_t i = 0; i < d.heights.size(); ++i) e.push_back(d.colors[i] == Color::red ? 0 : d.heights[i]);
  return InvSeq(std::move(e));
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(Errc::not_in_domain, "set partition blocks must be non-empty");
    std::sort(b.begin(), b.end());
    for (int v : b)
      if (!seen.insert(v).second) throw Error(Errc::not_in_domain, "set partition blocks must be disjoint");
    n_ += static_cast<int>(b.size());
  }
  if (!seen.empty() && (*seen.begin() != 1 || *seen.rbegin() != n_))
    throw Error(Errc::not_in_domain, "set partition blocks must cover 1..n");
  std::sort(blocks_.begin(), blocks_.end());
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    os << (i ? ",{" : "{");
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) os << (j ? "," : "") << blocks_[i][j];
    os << '}';
  }
  os << '}';
  return os.str();
}

std::vector<SetPartition> all_set_partitions(int n) {
  // Restricted growth strings.
  std::vector<SetPartition> out;
  std::vector<int> rgs;
  auto rec = [&](auto&& self, int max_block) -> void {
    if (static_cast<int>(rgs.size()) == n) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_block) + 1);
      for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
      if (n == 0) blocks.clear();
      out.emplace_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs.push_back(b);
      self(self, std::max(max_block, b));
      rgs.pop_back();
    }
  };
  rec(rec, -1);
  return out;
}

SetPartition eta(const InvSeq& e) {
  require_avoids(e, {"011"}, "eta");
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> block_of(e.size() + 1, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int element = static_cast<int>(i) + 1;
    if (e[i] == 0) {
      block_of[element] = blocks.size();
      blocks.push_back({element});
    } else {
      block_of[element] = block_of[e[i]];
      blocks[block_of[element]].push_back(element);
    }
  }
  return SetPartition(std::move(blocks));
}

InvSeq eta_inverse(const SetPartition& p) {
  std::vector<int> e(static_cast<std::size_t>(p.size()), 0);
  for (const auto& b : p.blocks())
    for (std::size_t t = 1; t < b.size(); ++t) e[b[t] - 1] = b[t - 1];
  return InvSeq(std::move(e));
}

InvSeq phi_stat(const InvSeq& e) {
  require_avoids(e, {"010", "101"}, "phi_stat");
  std::vector<int> out(e.entries());
  int prefix_max = 0;  // max(e_1..e_{i-2})
  for (std::size_t i = 2; i < e.size(); ++i) {
    prefix_max = std::max(prefix_max, e[i - 2]);
    if (e[i - 1] == e[i] && e[i] < prefix_max) out[i] = prefix_max;
  }
  return InvSeq(std::move(out));
}

InvSeq phi_stat_inverse(const InvSeq& f) {
  require_avoids(f, {"010", "100"}, "phi_stat_inverse");
  std::vector<int> e(f.entries());
  int prefix_max = 0;
  for (std::size_t i = 2; i < e.size(); ++i) {
    prefix_max = std::max(prefix_max, e[i - 2]);
    if (f[i] == prefix_max && e[i - 1] < prefix_max) e[i] = e[i - 1];
  }
  return InvSeq(std::move(e));
}

InvSeq zero_propagate(const InvSeq& e) {
  require_avoids(e, {"011", "012"}, "zero_propagate");
  std::vector<int> out(e.entries());
  for (std::size_t i = first_positive(out) + 1; i < out.size(); ++i)
    if (out[i] == 0) out[i] = out[i - 1];
  return InvSeq(std::move(out));
}

InvSeq zero_propagate_inverse(const InvSeq& f) {
  require_avoids(f, {"010", "012"}, "zero_propagate_inverse");
  std::vector<int> e(f.entries());
  for (std::size_t i = first_positive(e) + 1; i < e.size(); ++i)
    if (f[i] == f[i - 1]) e[i] = 0;
  return InvSeq(std::move(e));
}

InvSeq first_occurrence_map(const InvSeq& e) {
  require_avoids(e, {"010", "021"}, "first_occurrence_map");
  std::vector<int> out(e.entries());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (e[i] > 0 && e[i] == e[i - 1]) out[i] = 0;
  return InvSeq(std::move(out));
}

InvSeq first_occurrence_inverse(const InvSeq& f) {
  require_avoids(f, {"011", "021"}, "first_occurrence_inverse");
  std::vector<int> e(f.entries());
  for (std::size_t i = first_positive(e) + 1; i < e.size(); ++i)
    if (e[i] == 0) e[i] = e[i - 1];
  return InvSeq(std::move(e));
}

InvSeq rho(const InvSeq& e) {
  require_avoids(e, {"011", "102"}, "rho");
  require(stats(e).satu == 2, "rho: " + format_word(e.span()) + " must have exactly two saturated entries");
  std::size_t j = 1;  // 0-based index of the saturated entry beyond the first
  while (e[j] != static_cast<int>(j)) ++j;
  const int target = static_cast<int>(j) - 1;  // the value j-2 in 1-based terms
  std::vector<int> out;
  if (std::find(e.begin(), e.end(), target) == e.end()) {
    out.assign(e.begin() + 1, e.end());
    --out[j - 1];
  } else {
    out = e.entries();
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return InvSeq(std::move(out));
}

InvSeq rho_inverse(const InvSeq& f) {
  require_avoids(f, {"011", "102"}, "rho_inverse");
  require(!f.empty(), "rho_inverse: empty input");
  auto largest = std::max_element(f.begin(), f.end());
  const int l = *largest;
  std::vector<int> out;
  if (stats(f).satu != 1) {
    out.push_back(0);
    out.insert(out.end(), f.begin(), f.end());
    ++out[static_cast<std::size_t>(largest - f.begin()) + 1];
  } else {
    out = f.entries();
    out.insert(out.begin() + l + 1, l + 1);
  }
  return InvSeq(std::move(out));
}

InvSeq corteel_phi(const InvSeq& e) {
  require_avoids(e, {"210"}, "corteel_phi");
  const std::size_t n = e.size();
  std::vector<bool> is_max(n, false);
  std::multiset<int> pool;
  int running = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i] >= running) {
      running = e[i];
      is_max[i] = true;
    } else {
      pool.insert(e[i]);
    }
  }
  std::vector<int> f(e.entries());
  int prefix_max = -1;  // max over entries strictly before position i
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_max[i]) {
      auto it = pool.lower_bound(prefix_max);
      require(it != pool.begin(), "corteel_phi: no admissible value");
      --it;
      f[i] = *it;
      pool.erase(it);
    }
    prefix_max = std::max(prefix_max, e[i]);
  }
  return InvSeq(std::move(f));
}

std::vector<int> cyclic_exchange(std::span<const int> e, std::span<const std::size_t> positions) {
  std::vector<int> out(e.begin(), e.end());
  std::vector<int> values;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= e.size()) throw Error(Errc::index_out_of_range, "cyclic_exchange position outside e");
    if (k && positions[k] <= positions[k - 1])
      throw Error(Errc::index_out_of_range, "cyclic_exchange positions must increase");
    values.push_back(e[positions[k]]);
  }
  std::set<int> distinct(values.begin(), values.end());
  if (distinct.size() < 2)
    throw Error(Errc::degenerate_subsequence, "cyclic exchange needs at least two distinct values");
  if (*distinct.begin() == 0) {
    std::sort(values.begin(), values.end());
  } else {
    std::map<int, int> next;
    for (auto it = distinct.begin(); it != distinct.end(); ++it) {
      auto succ = std::next(it);
      next[*it] = succ == distinct.end() ? *distinct.begin() : *succ;
    }
    for (int& v : values) v = next[v];
  }
  for (std::size_t k = 0; k < positions.size(); ++k) out[positions[k]] = values[k];
  return out;
}

namespace {

bool has_k_occurrence_210(const std::vector<int>& e, int k) {
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (e[a] != k) continue;
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (e[b] >= k) continue;
      for (std::size_t c = b + 1; c < e.size(); ++c)
        if (e[c] < e[b]) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<InvSeq> psi_stages(const InvSeq& e) {
  require_avoids(e, {"201"}, "psi");
  std::vector<InvSeq> stages{e};
  if (avoids(e, {"210"})) return stages;
  std::set<int> ks;
  for (int v : e)
    if (v >= 2) ks.insert(v);
  std::vector<int> cur(e.entries());
  for (int k : ks) {
    if (has_k_occurrence_210(cur, k)) {
      auto leftmost = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), k) - cur.begin());
      std::vector<std::size_t> s;
      for (std::size_t p = leftmost + 1; p < cur.size(); ++p)
        if (cur[p] < k) s.push_back(p);
      cur = cyclic_exchange(cur, s);
    }
    stages.emplace_back(cur);
  }
  return stages;
}

InvSeq psi(const InvSeq& e) { return psi_stages(e).back(); }

InvSeq cap_map(const InvSeq& e) {
  require_avoids(e, {"100", "021"}, "cap_map");
  std::vector<int> out(e.entries());
  if (std::is_sorted(out.begin(), out.end())) return e;
  const std::size_t f = first_positive(out);
  const auto k = static_cast<std::size_t>(std::find(out.begin() + static_cast<std::ptrdiff_t>(f), out.end(), 0) -
                                          out.begin());
  std::set<int> seen;
  for (std::size_t i = f; i < k; ++i)
    if (!seen.insert(e[i]).second) out[i] = 0;
  return InvSeq(std::move(out));
}

InvSeq cap_map_inverse(const InvSeq& f) {
  require_avoids(f, {"110", "021"}, "cap_map_inverse");
  if (std::is_sorted(f.begin(), f.end())) return f;
  std::vector<int> e(f.entries());
  const std::size_t first = first_positive(e);
  std::size_t k = e.size() - 1;
  while (e[k] != 0) --k;
  int running = 0;
  for (std::size_t i = first; i < k; ++i) {
    if (e[i] == 0) e[i] = running;
    running = std::max(running, e[i]);
  }
  return InvSeq(std::move(e));
}

}  // namespace invseq
