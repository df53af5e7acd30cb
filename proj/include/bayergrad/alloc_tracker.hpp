// Copyright (c) 2026 The bayergrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

namespace bayergrad {

/// Scoped heap meter for single-threaded benchmark sections. While a probe
/// is alive, global operator new/delete on the calling thread maintain
/// live and peak byte counts for the scope. Nesting is not supported.
class AllocationProbe {
  public:
    AllocationProbe();
    ~AllocationProbe();
    AllocationProbe(const AllocationProbe&) = delete;
    AllocationProbe& operator=(const AllocationProbe&) = delete;

    /// Highest number of live bytes allocated since the probe started.
    std::size_t peak_bytes() const;
};

}  // namespace bayergrad
