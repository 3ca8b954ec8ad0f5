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

#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>

namespace rcstats
{

/// Worker threads for parallel loops; 0 restores the runtime default.
void set_thread_count(int n);
int thread_count();
bool in_parallel_region();

namespace detail
{
void parallel_for_impl(std::size_t n, void (*body)(void *, std::size_t), void *ctx);
} // namespace detail

/*!
 * Runs f(i) for i in [0, n) on the OpenMP pool (serially when already inside
 * a parallel region). Work items must write only to their own outputs. The
 * exception of the lowest failing index is rethrown after the loop.
 */
template <class F>
void parallel_for(std::size_t n, F &&f)
{
    auto trampoline = [](void *ctx, std::size_t i) { (*static_cast<std::remove_reference_t<F> *>(ctx))(i); };
    detail::parallel_for_impl(n, trampoline, static_cast<void *>(&f));
}

} // namespace rcstats
