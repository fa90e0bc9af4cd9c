#pragma once

#include <future>
#include <iterator>
#include <thread>
#include <vector>

namespace fruit::detail {

// Splits the closed range [lo, hi] into contiguous slices, runs
// task(slice_lo, slice_hi) -> std::vector<T> on each (concurrently when
// `parallel`), and concatenates the results in slice order, so the output is
// identical to a sequential left-to-right scan.
template <class T, class Task>
std::vector<T> run_sliced(long long lo, long long hi, bool parallel, unsigned threads,
                          const Task& task) {
    std::vector<T> out;
    if (lo > hi) return out;
    const auto span = static_cast<unsigned long long>(hi - lo + 1);
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (!parallel || workers <= 1 || span < 2) return task(lo, hi);
    if (workers > span) workers = static_cast<unsigned>(span);

    std::vector<std::future<std::vector<T>>> parts;
    parts.reserve(workers);
    long long cursor = lo;
    for (unsigned i = 0; i < workers; ++i) {
        long long len = static_cast<long long>(span / workers + (i < span % workers ? 1 : 0));
        long long slice_lo = cursor;
        long long slice_hi = cursor + len - 1;
        cursor = slice_hi + 1;
        parts.push_back(std::async(std::launch::async,
                                   [slice_lo, slice_hi, &task] { return task(slice_lo, slice_hi); }));
    }
    for (auto& part : parts) {
        auto chunk = part.get();
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    return out;
}

}  // namespace fruit::detail
