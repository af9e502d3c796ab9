#pragma once

// Parallel sweep kernels. Each parallel kernel has a serial twin that is the
// reference for tests and the baseline for bench/.

#include <span>
#include <vector>

#include "cox/catalog.hpp"
#include "cox/verify.hpp"

namespace cox {

std::vector<CheckReport> run_tasks_serial(std::span<const CheckTask> tasks);
/// OpenMP dynamic schedule over the tasks; results land at their task index,
/// so the output order never depends on completion order.
std::vector<CheckReport> run_tasks_parallel(std::span<const CheckTask> tasks, int jobs);

/// One (type, p, n) point of the Todd-vs-direct sweep.
struct MethodCell {
  CoxeterType type;
  int p = 1;
  int n = 0;
  Rational direct;
  Rational todd;

  bool agree() const { return direct == todd; }
};

/// Cells ordered by (type, p, n) for every type, p in ps, 0 <= n <= n_max.
std::vector<MethodCell> method_sweep_serial(std::span<const CoxeterType> types, int n_max,
                                            std::span<const int> ps);
std::vector<MethodCell> method_sweep_parallel(std::span<const CoxeterType> types, int n_max,
                                              std::span<const int> ps, int jobs);

}  // namespace cox
