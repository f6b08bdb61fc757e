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

#include "posets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "torictrace/errors.hpp"

#ifndef TORICTRACE_TEST_DATA
#define TORICTRACE_TEST_DATA "tests/data"
#endif

namespace torictrace::testing {

namespace {

using Relation = std::vector<std::uint8_t>;  // n * n adjacency, row i: i < j

Relation closure(const Relation& r, int n) {
  Relation c = r;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (c[i * n + k])
        for (int j = 0; j < n; ++j)
          if (c[k * n + j]) c[i * n + j] = 1;
  return c;
}

std::uint64_t encode(const std::vector<std::pair<int, int>>& covers, const std::vector<int>& perm,
                     int n) {
  std::uint64_t code = 0;
  for (auto [a, b] : covers) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
  return code;
}

std::map<int, std::vector<Poset>>& cache() {
  static std::map<int, std::vector<Poset>> c;
  return c;
}

}  // namespace

void for_each_hasse_diagram(int n,
                            const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  if (n < 1 || n > 7) throw InputError("Hasse diagrams are enumerated for 1..7 elements");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> covers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation r(n * n, 0);
    covers.clear();
    for (std::size_t q = 0; q < pairs.size(); ++q)
      if ((mask >> q) & 1) {
        r[pairs[q].first * n + pairs[q].second] = 1;
        covers.push_back(pairs[q]);
      }
    Relation c = closure(r, n);
    bool reduced = true;
    for (auto [a, b] : covers) {
      for (int k = 0; k < n && reduced; ++k)
        if (c[a * n + k] && c[k * n + b]) reduced = false;
      if (!reduced) break;
    }
    if (reduced) f(covers);
  }
}

std::vector<Poset> all_posets(int n) {
  if (n < 1 || n > 6) throw InputError("all_posets supports 1..6 elements");
  auto it = cache().find(n);
  if (it != cache().end()) return it->second;

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
  for_each_hasse_diagram(n, [&](const std::vector<std::pair<int, int>>& covers) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& p : perms) best = std::min(best, encode(covers, p, n));
    if (seen.insert(best).second) out.push_back(Poset::from_relations(labels, covers));
  });
  cache()[n] = out;
  return out;
}

bool is_connected(const Poset& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && p.comparable(v, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s; });
}

std::vector<Poset> all_connected_posets(int n) {
  std::vector<Poset> out;
  for (auto& p : all_posets(n))
    if (is_connected(p)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> order_ideals_by_filter(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ideal = true;
    for (int j = 0; j < n && ideal; ++j) {
      if (!((s >> j) & 1)) continue;
      for (int i = 0; i < n && ideal; ++i)
        if (p.less(i, j) && !((s >> i) & 1)) ideal = false;
    }
    if (ideal) out.push_back(s);
  }
  return out;
}

std::vector<std::pair<int, int>> covers_by_pairs(const Poset& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool between = false;
      for (int k = 0; k < n && !between; ++k) between = p.less(i, k) && p.less(k, j);
      if (!between) out.emplace_back(i, j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool pure_by_chains(const Poset& p) {
  std::set<int> lengths;
  std::function<void(int, int)> walk = [&](int v, int len) {
    if (p.upper_covers(v).empty()) {
      lengths.insert(len);
      return;
    }
    for (int w : p.upper_covers(v)) walk(w, len + 1);
  };
  for (int v = 0; v < static_cast<int>(p.size()); ++v)
    if (p.lower_covers(v).empty()) walk(v, 0);
  return lengths.size() == 1;
}

Poset random_poset(std::mt19937_64& rng, int max_size, const std::string& prefix) {
  int n = std::uniform_int_distribution<int>(1, max_size)(rng);
  const auto& all = all_posets(n);
  const Poset& p = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  return p.relabeled(prefix);
}

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  int p = std::uniform_int_distribution<int>(-max_num, max_num)(rng);
  int q = std::uniform_int_distribution<int>(1, max_den)(rng);
  return Rational(p, q);
}

std::string data_path(const std::string& name) {
  return std::string(TORICTRACE_TEST_DATA) + "/" + name;
}

}  // namespace torictrace::testing
