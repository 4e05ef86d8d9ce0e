#pragma once

#include <cstddef>
#include <functional>

#include "homalg/exactlin.hpp"

namespace homalg {

enum class Execution { serial, openmp };

/// Feeds the constraint rows of one task into a reducer.
using RowTask = std::function<void(std::size_t task, RowReducer& sink)>;

/// Reference path: tasks run in order into a single reducer.
RowReducer reduce_tasks_serial(Field f, std::size_t cols, std::size_t tasks, const RowTask& task);

/// Tasks are split into chunks reduced on separate threads, then merged in
/// chunk order. The row space is the same as the serial path, and so is the
/// canonical basis.
RowReducer reduce_tasks_openmp(Field f, std::size_t cols, std::size_t tasks, const RowTask& task);

RowReducer reduce_tasks(Field f, std::size_t cols, std::size_t tasks, const RowTask& task,
                        Execution exec = Execution::openmp);

}  // namespace homalg
