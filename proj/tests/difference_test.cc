// Copyright 2026 The sdcircle Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcircle/difference.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.h"

namespace sdcircle {
namespace {

std::vector<double> random_sequence(std::mt19937_64& rng, int len) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(len);
  for (double& x : out) x = dist(rng);
  return out;
}

TEST_CASE("backward difference with zero history") {
  const std::vector<double> seq = {1, 2, 3, 4};
  CHECK(finite_difference(seq, 1, Direction::kBackward) ==
        std::vector<double>{1, 1, 1, 1});
  CHECK(finite_difference(seq, 2, Direction::kBackward) ==
        std::vector<double>{1, 0, 0, 0});
  CHECK_THROWS_AS(finite_difference(seq, 0, Direction::kBackward),
                  std::invalid_argument);
}

TEST_CASE("forward difference drops the undefined tail") {
  const std::vector<double> seq = {1, 4, 9, 16, 25};
  CHECK(finite_difference(seq, 1, Direction::kForward) ==
        std::vector<double>{3, 5, 7, 9});
  CHECK(finite_difference(seq, 2, Direction::kForward) ==
        std::vector<double>{2, 2, 2});
  CHECK(finite_difference(seq, 5, Direction::kForward).empty());
  CHECK(finite_difference(seq, 7, Direction::kForward).empty());
}

TEST_CASE("shift identity between forward and backward differences") {
  std::mt19937_64 rng(21);
  for (int order = 1; order <= 5; ++order) {
    const auto seq = random_sequence(rng, 40);
    const auto fwd = finite_difference(seq, order, Direction::kForward);
    const auto bwd = finite_difference(seq, order, Direction::kBackward);
    REQUIRE(fwd.size() == seq.size() - order);
    for (std::size_t n = 0; n < fwd.size(); ++n) {
      CHECK(std::abs(fwd[n] - bwd[n + order]) < 1e-12);
    }
  }
}

TEST_CASE("order-3 difference equals three order-1 applications") {
  std::mt19937_64 rng(22);
  const auto seq = random_sequence(rng, 50);
  for (auto dir : {Direction::kBackward, Direction::kForward}) {
    auto once = seq;
    for (int i = 0; i < 3; ++i) once = finite_difference(once, 1, dir);
    const auto direct = DifferenceOperator(3, dir).apply(seq);
    REQUIRE(once.size() == direct.size());
    for (std::size_t n = 0; n < once.size(); ++n) {
      CHECK(std::abs(once[n] - direct[n]) < 1e-12);
    }
  }
}

TEST_CASE("backward_difference_at matches the recursive definition") {
  std::mt19937_64 rng(23);
  const auto seq = random_sequence(rng, 30);
  for (int order = 0; order <= 4; ++order) {
    const auto full = order == 0
                          ? seq
                          : finite_difference(seq, order, Direction::kBackward);
    for (long n = -2; n < 30; ++n) {
      const double expected = oracle::backward_recursive(seq, order, n);
      CHECK(std::abs(backward_difference_at(seq, order, n) - expected) < 1e-12);
      if (n >= 0) CHECK(std::abs(full[n] - expected) < 1e-12);
    }
  }
  CHECK(backward_difference_at(seq, 1, 0) == seq[0]);
  CHECK_THROWS_AS(backward_difference_at(seq, 1, 30), std::out_of_range);
}

TEST_CASE("backward difference inverts the cumulative sum") {
  std::mt19937_64 rng(24);
  const auto residual = random_sequence(rng, 64);
  for (int order = 1; order <= 3; ++order) {
    const auto u = oracle::forward_solve(residual, order);
    const auto back = finite_difference(u, order, Direction::kBackward);
    for (std::size_t n = 0; n < residual.size(); ++n) {
      CHECK(std::abs(back[n] - residual[n]) < 1e-10);
    }
  }
}

TEST_CASE("difference operator rejects negative orders") {
  CHECK_THROWS_AS(DifferenceOperator(-1, Direction::kBackward),
                  std::invalid_argument);
}

TEST_CASE("compensated_sum") {
  std::vector<double> values = {1.0, 1e100, 1.0, -1e100};
  CHECK(compensated_sum(values) == 2.0);
  values.assign(10000, 0.1);
  CHECK(std::abs(compensated_sum(values) - 1000.0) < 1e-12);
  CHECK(compensated_sum(std::vector<double>{}) == 0.0);
}

}  // namespace
}  // namespace sdcircle
