#include "cox/sweep.hpp"

#include <omp.h>

#include "cox/error.hpp"
#include "cox/powersum.hpp"

namespace cox {

namespace {

/// One (type, p) column: S_0..S_{n_max} both ways.
void fill_column(const CoxeterType& t, int p, int n_max, MethodCell* out) {
  const ExponentList e = exponents(t);
  const std::vector<Rational> todd = powersums_todd(parameters(t), n_max, p);
  for (int n = 0; n <= n_max; ++n) {
    out[n] = {t, p, n, powersum_direct(e, n), todd[static_cast<std::size_t>(n)]};
  }
}

}  // namespace

std::vector<CheckReport> run_tasks_serial(std::span<const CheckTask> tasks) {
  std::vector<CheckReport> out;
  out.reserve(tasks.size());
  for (const auto& task : tasks) out.push_back(task());
  return out;
}

std::vector<CheckReport> run_tasks_parallel(std::span<const CheckTask> tasks, int jobs) {
  if (jobs <= 1) return run_tasks_serial(tasks);
  std::vector<CheckReport> out(tasks.size());
  const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
  return out;
}

std::vector<MethodCell> method_sweep_serial(std::span<const CoxeterType> types, int n_max,
                                            std::span<const int> ps) {
  const std::size_t width = static_cast<std::size_t>(n_max) + 1;
  std::vector<MethodCell> cells(types.size() * ps.size() * width);
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      fill_column(types[i], ps[j], n_max, &cells[(i * ps.size() + j) * width]);
  return cells;
}

std::vector<MethodCell> method_sweep_parallel(std::span<const CoxeterType> types, int n_max,
                                              std::span<const int> ps, int jobs) {
  // nothing may throw inside the parallel region
  for (const auto& t : types) validate(t);
  for (int p : ps)
    if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be a positive integer");
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be nonnegative");
  const std::size_t width = static_cast<std::size_t>(n_max) + 1;
  std::vector<MethodCell> cells(types.size() * ps.size() * width);
  const auto columns = static_cast<long>(types.size() * ps.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (long c = 0; c < columns; ++c) {
    const auto i = static_cast<std::size_t>(c) / ps.size();
    const auto j = static_cast<std::size_t>(c) % ps.size();
    fill_column(types[i], ps[j], n_max, &cells[static_cast<std::size_t>(c) * width]);
  }
  return cells;
}

}  // namespace cox
