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

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "torictrace/arith.hpp"
#include "torictrace/poset.hpp"

namespace torictrace::testing {

/// Every cover set on elements 0..n-1 (n <= 7) using only pairs i < j that
/// is transitively reduced. Each poset appears at least once.
void for_each_hasse_diagram(int n,
                            const std::function<void(const std::vector<std::pair<int, int>>&)>& f);

/// Every poset on n <= 6 elements up to isomorphism, labels p1..pn: the
/// diagrams above deduplicated by a canonical form.
std::vector<Poset> all_posets(int n);
std::vector<Poset> all_connected_posets(int n);

/// Connectivity of the comparability graph by a plain graph search.
bool is_connected(const Poset& p);

/// Order ideals as bitmasks, by filtering all 2^n subsets.
std::vector<std::uint64_t> order_ideals_by_filter(const Poset& p);

/// Transitive reduction by testing every comparable pair for an
/// intermediate element.
std::vector<std::pair<int, int>> covers_by_pairs(const Poset& p);

/// Purity by listing every maximal chain of P.
bool pure_by_chains(const Poset& p);

/// Random poset with at most max_size elements drawn from all_posets.
Poset random_poset(std::mt19937_64& rng, int max_size, const std::string& prefix);

/// Uniform rational p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(std::mt19937_64& rng, int max_num, int max_den);

/// Path of a data file shipped with the tests.
std::string data_path(const std::string& name);

}  // namespace torictrace::testing
