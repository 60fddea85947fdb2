// Copyright 2026 The Authors.
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

#include "stack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "stack/errors.hpp"

namespace stack {
namespace {

struct Counts {
  std::vector<double> tp, fp, fn;
};

Counts confusion(std::span<const int> truth, std::span<const int> pred, int n_classes) {
  if (truth.size() != pred.size()) throw ValidationError("metrics: truth and prediction lengths differ");
  if (n_classes < 1) throw ValidationError("metrics: need at least one class");
  const auto c = static_cast<std::size_t>(n_classes);
  Counts out{std::vector<double>(c), std::vector<double>(c), std::vector<double>(c)};
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    const int p = pred[i];
    if (t < 0 || t >= n_classes || p < 0 || p >= n_classes) throw ValidationError("metrics: label out of range");
    if (t == p) {
      out.tp[static_cast<std::size_t>(t)] += 1;
    } else {
      out.fp[static_cast<std::size_t>(p)] += 1;
      out.fn[static_cast<std::size_t>(t)] += 1;
    }
  }
  return out;
}

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

std::vector<double> ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> out(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) out[order[t]] = mean_rank;
    i = j + 1;
  }
  return out;
}

}  // namespace

MacroScores macro_scores(std::span<const int> truth, std::span<const int> pred, int n_classes) {
  const Counts c = confusion(truth, pred, n_classes);
  MacroScores s;
  for (std::size_t k = 0; k < c.tp.size(); ++k) {
    const double p = ratio(c.tp[k], c.tp[k] + c.fp[k]);
    const double r = ratio(c.tp[k], c.tp[k] + c.fn[k]);
    s.precision += p;
    s.recall += r;
    s.f1 += ratio(2.0 * p * r, p + r);
  }
  const auto classes = static_cast<double>(n_classes);
  s.precision /= classes;
  s.recall /= classes;
  s.f1 /= classes;
  return s;
}

double macro_precision(std::span<const int> truth, std::span<const int> pred, int n_classes) {
  return macro_scores(truth, pred, n_classes).precision;
}

double macro_recall(std::span<const int> truth, std::span<const int> pred, int n_classes) {
  return macro_scores(truth, pred, n_classes).recall;
}

double macro_f1(std::span<const int> truth, std::span<const int> pred, int n_classes) {
  return macro_scores(truth, pred, n_classes).f1;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ValidationError("correlation: lengths differ");
  if (xs.size() < 2) throw ValidationError("correlation: need at least two samples");
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw NumericalError("correlation undefined for constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ValidationError("correlation: lengths differ");
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);
  return pearson(rx, ry);
}

}  // namespace stack
