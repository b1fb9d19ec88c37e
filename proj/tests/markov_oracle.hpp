// Copyright 2026 The hcnot Authors
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

#pragma once

// Independent expected-value oracles for GHZ growth and re-encoding,
// evaluated from transition rules by dense linear algebra.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcnot::testing_oracle {

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) throw std::runtime_error("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Expected attach attempts to grow from size `from` (0 = nothing yet) to
/// `target`. Size s attempts one attachment: success gives s+1; failure gives
/// s-1, except that a failed single is replaced by a fresh single.
inline double growth_attempts(double p, int from, int target) {
  from = std::max(from, 1);
  if (from >= target) return 0.0;
  // Unknowns E_1 .. E_{target-1}; E_target = 0.
  const int m = target - 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
  std::vector<double> b(m, 1.0);
  const double q = 1.0 - p;
  for (int s = 1; s <= m; ++s) {
    const int row = s - 1;
    a[row][row] += 1.0;
    if (s + 1 <= m) a[row][s] -= p;
    const int down = std::max(1, s - 1);
    a[row][down - 1] -= q;
  }
  return solve_dense(a, b)[from - 1];
}

struct ReencodeExpectation {
  double attempts = 0.0;
  double loss = 0.0;
};

/// Expected CZ attempts and loss probability to re-encode a block of level
/// `level` to `target` when a resource of size `resource` is already present.
/// One round grows the resource to target-level+1, then runs the two-stage
/// auxiliary fusion: stage-1 failure shrinks the block, stage-2 failure
/// shrinks both; a failure on a level-1 block loses it.
inline ReencodeExpectation reencode_expectation(double p, int level, int target, int resource = 0) {
  std::map<std::pair<int, int>, ReencodeExpectation> memo;
  const double q = 1.0 - p;
  auto rec = [&](auto&& self, int b, int s) -> ReencodeExpectation {
    if (b >= target) return {};
    const auto key = std::make_pair(b, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = target - b + 1;
    ReencodeExpectation e;
    e.attempts = growth_attempts(p, s, k) + 1.0;
    ReencodeExpectation after1{0.0, 1.0};
    ReencodeExpectation after2{0.0, 1.0};
    if (b > 1) {
      after1 = self(self, b - 1, k);
      after2 = self(self, b - 1, k - 1);
    }
    e.attempts += q * after1.attempts + p * (1.0 + q * after2.attempts);
    e.loss = q * after1.loss + p * q * after2.loss;
    memo[key] = e;
    return e;
  };
  return rec(rec, level, resource);
}

}  // namespace hcnot::testing_oracle
