#include "cfgsg/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace cfgsg {

int thread_budget() {
    static const int budget = [] {
        if (const char* env = std::getenv("CFGSG_THREADS")) {
            try {
                int n = std::stoi(env);
                if (n >= 1) return n;
            } catch (...) {
                // fall through to hardware default
            }
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }();
    return budget;
}

} // namespace cfgsg
