#include "homalg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <optional>
#include <vector>

namespace homalg {

RowReducer reduce_tasks_serial(Field f, std::size_t cols, std::size_t tasks, const RowTask& task) {
  RowReducer red(f, cols);
  for (std::size_t t = 0; t < tasks; ++t) task(t, red);
  return red;
}

RowReducer reduce_tasks_openmp(Field f, std::size_t cols, std::size_t tasks, const RowTask& task) {
  if (tasks == 0) return RowReducer(f, cols);
  const std::size_t threads = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  const std::size_t chunks = std::min(tasks, threads * 4);
  std::vector<std::optional<RowReducer>> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    try {
      RowReducer local(f, cols);
      const std::size_t begin = tasks * c / chunks;
      const std::size_t end = tasks * (c + 1) / chunks;
      for (std::size_t t = begin; t < end; ++t) task(t, local);
      parts[c].emplace(std::move(local));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }

  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  RowReducer out = std::move(*parts[0]);
  for (std::size_t c = 1; c < chunks; ++c) out.merge(*parts[c]);
  return out;
}

RowReducer reduce_tasks(Field f, std::size_t cols, std::size_t tasks, const RowTask& task, Execution exec) {
  return exec == Execution::serial ? reduce_tasks_serial(f, cols, tasks, task)
                                   : reduce_tasks_openmp(f, cols, tasks, task);
}

}  // namespace homalg
