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

#include "bayergrad/alloc_tracker.hpp"

#include <cstdint>
#include <cstdlib>
#include <new>

namespace {

thread_local bool g_tracking = false;
thread_local std::size_t g_live = 0;
thread_local std::size_t g_peak = 0;

// Uniform block layout for every overload so any delete can free any new:
//   [base pointer][request size] ... padding ... [user data]
// The two header words sit immediately before the user pointer.
constexpr std::size_t kHeader = 2 * sizeof(void*);

void* finish_alloc(void* base, void* user, std::size_t size) noexcept {
    void** header = static_cast<void**>(user) - 2;
    header[0] = base;
    header[1] = reinterpret_cast<void*>(size);
    if (g_tracking) {
        g_live += size;
        if (g_live > g_peak) g_peak = g_live;
    }
    return user;
}

void* tracked_alloc(std::size_t size, std::size_t align) noexcept {
    if (align < kHeader) align = kHeader;
    void* base = std::malloc(size + align + kHeader);
    if (!base) return nullptr;
    const std::uintptr_t start = reinterpret_cast<std::uintptr_t>(base) + kHeader;
    const std::uintptr_t user = (start + align - 1) & ~(static_cast<std::uintptr_t>(align) - 1);
    return finish_alloc(base, reinterpret_cast<void*>(user), size);
}

void tracked_free(void* p) noexcept {
    if (!p) return;
    void** header = static_cast<void**>(p) - 2;
    const std::size_t size = reinterpret_cast<std::size_t>(header[1]);
    if (g_tracking) g_live -= size < g_live ? size : g_live;
    std::free(header[0]);
}

void* alloc_or_throw(std::size_t size, std::size_t align) {
    void* p = tracked_alloc(size, align);
    if (!p) throw std::bad_alloc();
    return p;
}

}  // namespace

void* operator new(std::size_t size) { return alloc_or_throw(size, kHeader); }
void* operator new[](std::size_t size) { return alloc_or_throw(size, kHeader); }
void* operator new(std::size_t size, std::align_val_t al) {
    return alloc_or_throw(size, static_cast<std::size_t>(al));
}
void* operator new[](std::size_t size, std::align_val_t al) {
    return alloc_or_throw(size, static_cast<std::size_t>(al));
}
void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
    return tracked_alloc(size, kHeader);
}
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
    return tracked_alloc(size, kHeader);
}
void* operator new(std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
    return tracked_alloc(size, static_cast<std::size_t>(al));
}
void* operator new[](std::size_t size, std::align_val_t al, const std::nothrow_t&) noexcept {
    return tracked_alloc(size, static_cast<std::size_t>(al));
}

void operator delete(void* p) noexcept { tracked_free(p); }
void operator delete[](void* p) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { tracked_free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { tracked_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { tracked_free(p); }
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept {
    tracked_free(p);
}
void operator delete[](void* p, std::align_val_t, const std::nothrow_t&) noexcept {
    tracked_free(p);
}

namespace bayergrad {

AllocationProbe::AllocationProbe() {
    g_live = 0;
    g_peak = 0;
    g_tracking = true;
}

AllocationProbe::~AllocationProbe() { g_tracking = false; }

std::size_t AllocationProbe::peak_bytes() const { return g_peak; }

}  // namespace bayergrad
