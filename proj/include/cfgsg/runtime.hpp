// runtime.hpp
// Process-wide knobs. CFGSG_THREADS caps internal parallelism.

#pragma once

namespace cfgsg {

// Number of worker threads modules may use. Reads CFGSG_THREADS once;
// falls back to std::thread::hardware_concurrency(), never less than 1.
int thread_budget();

} // namespace cfgsg
