// SPDX-License-Identifier: Apache-2.0
//
// rcstats - Rician channel statistics for hybrid reverberation chamber measurements
// Copyright (C) 2026 The rcstats Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rcstats/parallel.hpp"

#include <limits>
#include <omp.h>

namespace rcstats
{

void set_thread_count(int n)
{
    omp_set_num_threads(n > 0 ? n : omp_get_num_procs());
}

int thread_count()
{
    return omp_get_max_threads();
}

bool in_parallel_region()
{
    return omp_in_parallel() != 0;
}

namespace detail
{

void parallel_for_impl(std::size_t n, void (*body)(void *, std::size_t), void *ctx)
{
    if (n == 0)
        return;
    if (n == 1 || omp_in_parallel() || omp_get_max_threads() == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(ctx, i);
        return;
    }

    std::exception_ptr first_error;
    std::size_t first_index = std::numeric_limits<std::size_t>::max();
    const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i)
    {
        try
        {
            body(ctx, static_cast<std::size_t>(i));
        }
        catch (...)
        {
#pragma omp critical(rcstats_parallel_error)
            {
                if (static_cast<std::size_t>(i) < first_index)
                {
                    first_index = static_cast<std::size_t>(i);
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace detail
} // namespace rcstats
