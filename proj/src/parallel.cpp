#include "lambshift/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lambshift {

int default_thread_count() {
    if (const char* env = std::getenv("LAMBSHIFT_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace lambshift
