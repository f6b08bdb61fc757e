// Copyright 2026 The torictrace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torictrace/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "torictrace/errors.hpp"

namespace torictrace {

namespace {

// Directed cycle in the relation graph, as a label path closing on itself.
std::vector<std::string> find_cycle(const std::vector<std::string>& labels,
                                    const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> color(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < succ[u].size()) {
        int v = succ[u][next++];
        if (color[v] == 0) {
          color[v] = 1;
          parent[v] = u;
          stack.push_back({v, 0});
        } else if (color[v] == 1) {
          std::vector<std::string> cycle{labels[v]};
          std::vector<int> path;
          for (int w = u; w != v; w = parent[w]) path.push_back(w);
          for (auto it = path.rbegin(); it != path.rend(); ++it) cycle.push_back(labels[*it]);
          cycle.push_back(labels[v]);
          return cycle;
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return {};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& relations) {
  const int n = static_cast<int>(labels.size());
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw InputError("empty element label");
      if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
    }
  }
  std::vector<std::vector<int>> succ(n);
  for (auto [u, v] : relations) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("relation refers to an unknown element index");
    if (u == v)
      throw MalformedPosetError("relation '" + labels[u] + " < " + labels[u] + "' is a cycle",
                                {labels[u], labels[u]});
    succ[u].push_back(v);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (auto cycle = find_cycle(labels, succ); !cycle.empty())
    throw MalformedPosetError("relations contain a cycle: " + join(cycle, " < "), cycle);

  // Kahn's algorithm, always taking the smallest available index.
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : succ[u]) ++indegree[v];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int u = 0; u < n; ++u)
    if (indegree[u] == 0) ready.push(u);
  std::vector<int> topo;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    topo.push_back(u);
    for (int v : succ[u])
      if (--indegree[v] == 0) ready.push(v);
  }

  Poset p;
  p.labels_ = std::move(labels);
  p.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  p.leq_.assign(static_cast<std::size_t>(n) * p.words_, 0);
  auto row = [&](int u) { return p.leq_.data() + static_cast<std::size_t>(u) * p.words_; };
  // Strict up-sets, built in reverse topological order.
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int u = *it;
    std::uint64_t* r = row(u);
    for (int v : succ[u]) {
      r[v / 64] |= std::uint64_t{1} << (v % 64);
      const std::uint64_t* rv = row(v);
      for (std::size_t w = 0; w < p.words_; ++w) r[w] |= rv[w];
    }
  }
  // A relation u < v is a cover iff v is not strictly above some w > u.
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  std::vector<std::uint64_t> implied(p.words_);
  for (int u = 0; u < n; ++u) {
    std::fill(implied.begin(), implied.end(), 0);
    const std::uint64_t* r = row(u);
    for (int w = 0; w < n; ++w) {
      if ((r[w / 64] >> (w % 64)) & 1u) {
        const std::uint64_t* rw = row(w);
        for (std::size_t k = 0; k < p.words_; ++k) implied[k] |= rw[k];
      }
    }
    for (int v = 0; v < n; ++v) {
      bool above = (r[v / 64] >> (v % 64)) & 1u;
      bool through = (implied[v / 64] >> (v % 64)) & 1u;
      if (above && !through) {
        p.covers_.push_back({u, v});
        p.up_[u].push_back(v);
        p.down_[v].push_back(u);
      }
    }
  }
  for (int u = 0; u < n; ++u) row(u)[u / 64] |= std::uint64_t{1} << (u % 64);
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& d : p.down_) std::sort(d.begin(), d.end());
  p.linear_extension_ = std::move(topo);
  return p;
}

Poset Poset::from_labeled_relations(
    const std::vector<std::pair<std::string, std::string>>& relations,
    const std::vector<std::string>& extra_elements) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& l) {
    auto [it, fresh] = index.emplace(l, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(l);
    return it->second;
  };
  std::vector<std::pair<int, int>> rel;
  for (const auto& [u, v] : relations) {
    int a = intern(u);
    int b = intern(v);
    rel.push_back({a, b});
  }
  for (const auto& e : extra_elements) intern(e);
  return from_relations(std::move(labels), rel);
}

Poset Poset::chain(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i + 1));
    if (i > 0) rel.push_back({i - 1, i});
  }
  return from_relations(std::move(labels), rel);
}

Poset Poset::antichain(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return from_relations(std::move(labels), {});
}

std::optional<int> Poset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

bool Poset::less_equal(int i, int j) const {
  return (leq_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

Poset Poset::dual() const {
  std::vector<std::pair<int, int>> rel;
  for (auto c : covers_) rel.push_back({c.upper, c.lower});
  return from_relations(labels_, rel);
}

Poset Poset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> labels;
  for (int e : elements) labels.push_back(labels_[e]);
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (a != b && less(elements[a], elements[b]))
        rel.push_back({static_cast<int>(a), static_cast<int>(b)});
  return from_relations(std::move(labels), rel);
}

Poset Poset::relabeled(const std::string& prefix) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i) labels.push_back(prefix + std::to_string(i + 1));
  std::vector<std::pair<int, int>> rel;
  for (auto c : covers_) rel.push_back({c.lower, c.upper});
  return from_relations(std::move(labels), rel);
}

Poset parse_poset(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::string> elements;
  std::vector<std::string> order;  // first appearance across relations and elements
  std::set<std::string> seen;
  auto note = [&](const std::string& l) {
    if (seen.insert(l).second) order.push_back(l);
  };
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      auto sep = line.find_first_of(",;", start);
      if (sep == std::string_view::npos) sep = line.size();
      std::string_view piece = trim(line.substr(start, sep - start));
      start = sep + 1;
      if (piece.empty()) continue;
      std::vector<std::string> tokens;
      std::size_t s = 0;
      while (true) {
        auto lt = piece.find('<', s);
        std::string_view tok = trim(piece.substr(s, lt == std::string_view::npos ? lt : lt - s));
        if (tok.empty())
          throw InputError("line " + std::to_string(line_no) + ": missing element name in '" +
                           std::string(piece) + "'");
        if (tok.find_first_of(" \t") != std::string_view::npos)
          throw InputError("line " + std::to_string(line_no) + ": malformed relation '" +
                           std::string(piece) + "'");
        tokens.emplace_back(tok);
        if (lt == std::string_view::npos) break;
        s = lt + 1;
      }
      for (const auto& t : tokens) note(t);
      if (tokens.size() == 1) elements.push_back(tokens[0]);
      for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (tokens[i] == tokens[i + 1])
          throw MalformedPosetError("line " + std::to_string(line_no) + ": '" + tokens[i] +
                                        " < " + tokens[i] + "' is a cycle",
                                    {tokens[i], tokens[i]});
        relations.push_back({tokens[i], tokens[i + 1]});
      }
    }
    if (eol == text.size()) break;
  }
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> rel;
  for (const auto& [u, v] : relations) rel.push_back({index[u], index[v]});
  return Poset::from_relations(order, rel);
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  for (auto c : p.covers()) out << p.label(c.lower) << " < " << p.label(c.upper) << "\n";
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p.upper_covers(i).empty() && p.lower_covers(i).empty()) out << p.label(i) << "\n";
  return out.str();
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (a.index_of(l)) throw InputError("disjoint union: label '" + l + "' occurs in both posets");
    labels.push_back(l);
  }
  const int shift = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> rel;
  for (auto c : a.covers()) rel.push_back({c.lower, c.upper});
  for (auto c : b.covers()) rel.push_back({c.lower + shift, c.upper + shift});
  return Poset::from_relations(std::move(labels), rel);
}

std::vector<Poset> connected_components(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto c : p.covers()) {
    int a = find(c.lower), b = find(c.upper);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;  // keyed by least index in the group
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<Poset> out;
  for (const auto& [root, members] : groups) out.push_back(p.induced(members));
  return out;
}

// ---------------------------------------------------------------------------

PosetHat::PosetHat(Poset base) : base_(std::move(base)) {
  const int n = static_cast<int>(base_.size());
  const int bot = n, top = n + 1;
  covers_ = base_.covers();
  for (int m : base_.minimal_elements()) covers_.push_back({bot, m});
  for (int m : base_.maximal_elements()) covers_.push_back({m, top});
  if (n == 0) covers_.push_back({bot, top});
  std::sort(covers_.begin(), covers_.end());
  up_.assign(n + 2, {});
  down_.assign(n + 2, {});
  for (auto c : covers_) {
    up_[c.lower].push_back(c.upper);
    down_[c.upper].push_back(c.lower);
  }
  order_.push_back(bot);
  for (int v : base_.linear_extension()) order_.push_back(v);
  order_.push_back(top);

  rank_bottom_.assign(n + 2, 0);
  dist_bottom_.assign(n + 2, 0);
  for (std::size_t k = 1; k < order_.size(); ++k) {
    int x = order_[k];
    int r = std::numeric_limits<int>::min(), d = std::numeric_limits<int>::max();
    for (int w : down_[x]) {
      r = std::max(r, rank_bottom_[w] + 1);
      d = std::min(d, dist_bottom_[w] + 1);
    }
    rank_bottom_[x] = r;
    dist_bottom_[x] = d;
  }
  rank_top_.assign(n + 2, 0);
  dist_top_.assign(n + 2, 0);
  for (std::size_t k = order_.size() - 1; k-- > 0;) {
    int x = order_[k];
    int r = std::numeric_limits<int>::min(), d = std::numeric_limits<int>::max();
    for (int w : up_[x]) {
      r = std::max(r, rank_top_[w] + 1);
      d = std::min(d, dist_top_[w] + 1);
    }
    rank_top_[x] = r;
    dist_top_[x] = d;
  }
}

bool PosetHat::less_equal(int x, int y) const {
  const int n = static_cast<int>(base_.size());
  if (x == y || x == n || y == n + 1) return true;
  if (y == n || x == n + 1) return false;
  return base_.less_equal(x, y);
}

PosetHat::ChainLengths PosetHat::rank_and_dist(int x, int y) const {
  if (!less_equal(x, y))
    throw IncomparableError("rank_and_dist: " + label(x) + " is not below " + label(y));
  if (x == y) return {0, 0};
  // Longest and shortest paths from x, restricted to elements <= y.
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> longest(size(), kUnset), shortest(size(), std::numeric_limits<int>::max());
  longest[x] = shortest[x] = 0;
  for (int v : order_) {
    if (longest[v] == kUnset) continue;
    for (int w : up_[v]) {
      if (!less_equal(w, y)) continue;
      longest[w] = std::max(longest[w], longest[v] + 1);
      shortest[w] = std::min(shortest[w], shortest[v] + 1);
    }
  }
  return {longest[y], shortest[y]};
}

std::string PosetHat::label(int x) const {
  if (x == bottom()) return "-inf";
  if (x == top()) return "inf";
  return base_.label(x);
}

bool is_pure(const Poset& p) {
  if (p.empty()) throw InputError("is_pure: empty poset");
  PosetHat hat(p);
  return hat.rank_to_top(hat.bottom()) == hat.dist_to_top(hat.bottom());
}

int poset_rank(const Poset& p) {
  if (p.empty()) return -1;
  PosetHat hat(p);
  return hat.rank() - 2;
}

int OrderIdeal::size() const { return std::popcount(members); }

std::vector<OrderIdeal> enumerate_order_ideals(const Poset& p, std::size_t max_elements) {
  if (p.size() > std::min<std::size_t>(max_elements, 64))
    throw ResourceError("order-ideal enumeration limited to " +
                        std::to_string(std::min<std::size_t>(max_elements, 64)) +
                        " elements, poset has " + std::to_string(p.size()));
  const auto& order = p.linear_extension();
  const std::size_t n = order.size();
  std::vector<std::uint64_t> below(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int d : p.lower_covers(static_cast<int>(i))) below[i] |= std::uint64_t{1} << d;

  std::vector<OrderIdeal> out;
  std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t k, std::uint64_t mask) {
    if (k == n) {
      out.push_back({mask});
      return;
    }
    int v = order[k];
    extend(k + 1, mask);
    if ((below[v] & mask) == below[v]) extend(k + 1, mask | (std::uint64_t{1} << v));
  };
  extend(0, 0);
  return out;
}

Poset ordinal_sum(const Poset& p1, const Poset& p2, bool adjoin_min, std::string min_label) {
  for (const auto& l : p2.labels())
    if (p1.index_of(l)) throw InputError("ordinal sum: label '" + l + "' occurs in both posets");
  std::vector<std::string> labels = p1.labels();
  const int n1 = static_cast<int>(p1.size());
  std::vector<std::pair<int, int>> rel;
  for (auto c : p1.covers()) rel.push_back({c.lower, c.upper});

  std::vector<int> bottom_of_second;  // elements directly above max(P1)
  int shift = n1;
  if (adjoin_min) {
    if (min_label.empty()) {
      min_label = "bot";
      for (int k = 1; p1.index_of(min_label) || p2.index_of(min_label); ++k)
        min_label = "bot" + std::to_string(k);
    } else if (p1.index_of(min_label) || p2.index_of(min_label)) {
      throw InputError("ordinal sum: label '" + min_label + "' already in use");
    }
    labels.push_back(min_label);
    bottom_of_second.push_back(n1);
    shift = n1 + 1;
    for (int m : p2.minimal_elements()) rel.push_back({n1, m + shift});
  } else {
    for (int m : p2.minimal_elements()) bottom_of_second.push_back(m + shift);
  }
  for (const auto& l : p2.labels()) labels.push_back(l);
  for (auto c : p2.covers()) rel.push_back({c.lower + shift, c.upper + shift});
  for (int hi : p1.maximal_elements())
    for (int lo : bottom_of_second) rel.push_back({hi, lo});
  return Poset::from_relations(std::move(labels), rel);
}

Poset construct_height_dim_poset(int a, int b) {
  if (a < 4 || a >= b)
    throw DomainError("construct_height_dim_poset requires 4 <= a < b, got a=" +
                      std::to_string(a) + ", b=" + std::to_string(b));
  Poset lower = Poset::chain(b - a - 1, "c");
  Poset upper = disjoint_union(Poset::chain(a - 2, "q"), Poset::chain(1, "r"));
  return ordinal_sum(lower, upper, true, "z");
}

}  // namespace torictrace
