// Copyright 2026 The gpricing Authors
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

// Directed balls and the ball weighting tau used to combine multi-swap test
// swaps.
//
// For a digraph H with indegree at most C and a depth d, tau assigns each
// (vertex u, radius r) a nonnegative integer weight such that every vertex
// lies in the balls B+(u, r) with total weight 1 + C + ... + C^d and on their
// boundaries with total weight C^d. Weights are built top-down:
//
//   tau(u, d) = 1
//   tau(u, i) = C^(d-i) - sum_{j>i} sum_{v : dist(v, u) = j - i} tau(v, j)
//
// and satisfy 0 <= tau(u, i) <= C^(d-i).

#ifndef GPRICING_BALL_COVER_H_
#define GPRICING_BALL_COVER_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gpricing {

class Digraph {
 public:
  explicit Digraph(int num_vertices = 0);

  // Parallel arcs and loops are kept for degree counts; distances ignore
  // multiplicity.
  void AddArc(int from, int to);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  // Distinct out-neighbours, ascending.
  const std::vector<int>& successors(int v) const { return out_[v]; }
  // Distinct in-neighbours, ascending.
  const std::vector<int>& predecessors(int v) const { return in_[v]; }
  // Counts multiplicity.
  int in_degree(int v) const { return in_degree_[v]; }
  int out_degree(int v) const { return out_degree_[v]; }
  int max_in_degree() const;

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> in_degree_;
  std::vector<int> out_degree_;
  std::vector<std::pair<int, int>> arcs_;
};

// B+(u, r): vertices at directed distance at most r from u, ascending.
std::vector<int> DirectedBall(const Digraph& h, int u, int r);
// Boundary of B+(u, r): vertices at distance exactly r, ascending.
std::vector<int> BallBoundary(const Digraph& h, int u, int r);

// All (vertex, distance) pairs within `radius` of each source, computed by
// truncated BFS. `reverse` measures distances into the source instead.
class TruncatedDistances {
 public:
  TruncatedDistances(const Digraph& h, int radius, bool reverse = false);

  // Pairs sorted by vertex id.
  const std::vector<std::pair<int, int>>& from(int source) const {
    return reach_[source];
  }
  // Distance or -1 when above the radius.
  int Distance(int source, int target) const;
  int radius() const { return radius_; }

 private:
  int radius_;
  std::vector<std::vector<std::pair<int, int>>> reach_;
};

struct TauWeighting {
  int c = 0;
  int d = 0;
  std::vector<std::vector<std::int64_t>> tau;  // [vertex][radius]

  std::int64_t operator()(int u, int r) const { return tau[u][r]; }
};

// Exact power with an overflow check.
std::int64_t IntPow(std::int64_t base, int exponent);
// 1 + c + ... + c^d.
std::int64_t GeometricSum(std::int64_t c, int d);

// Throws PricingError(kPrecondition) when some indegree exceeds c.
TauWeighting ComputeTau(const Digraph& h, int c, int d);

struct CoverReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the ball-membership and boundary sums at every vertex, the
// distance-shifted identity behind the recurrence, and the weight bounds.
// Ball sums are recomputed from forward BFS, independent of the reverse
// distances used by ComputeTau.
CoverReport VerifyCover(const Digraph& h, const TauWeighting& tau);

}  // namespace gpricing

#endif  // GPRICING_BALL_COVER_H_
