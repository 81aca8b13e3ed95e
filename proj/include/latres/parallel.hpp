#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace latres
{

enum class Execution
{
    Serial,
    Parallel,
};

/// out[i] = f(i) for i in [0, n). The parallel path uses OpenMP dynamic
/// scheduling; results are in index order either way, so callers stay
/// deterministic. The first exception (by index) is rethrown.
template <typename F>
auto map_indexed(std::size_t n, F&& f, Execution ex) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    static_assert(!std::is_same_v<R, bool>, "std::vector<bool> elements share words; return char");
    std::vector<R> out(n);
    if (ex == Execution::Serial)
    {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
    {
        try
        {
            out[i] = f(static_cast<std::size_t>(i));
        }
        catch (...)
        {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace latres
