#include "divorient/parallel.hpp"

#include <cstdlib>
#include <string>

namespace divorient {

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("DIVORIENT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // Unparseable values fall through to the hardware default.
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace divorient
