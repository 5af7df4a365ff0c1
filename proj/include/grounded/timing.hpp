#pragma once

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace grounded {

// Keeps freed memory in the process for timing runs. Without this, glibc maps
// buffers above its dynamic threshold (up to 32 MB) fresh on every call, so
// large inputs pay page faults that smaller ones do not.
inline void keep_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
}

}  // namespace grounded
