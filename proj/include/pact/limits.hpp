#pragma once

#include <cstdlib>
#include <cstddef>

namespace pact::limits {

// PACT_GUARD_SCALE >= 1 raises every guard uniformly (at your own risk).
inline double guard_scale() {
    static const double s = [] {
        if (const char* v = std::getenv("PACT_GUARD_SCALE")) {
            const double d = std::atof(v);
            if (d >= 1.0) return d;
        }
        return 1.0;
    }();
    return s;
}

inline std::size_t max_opens() { return static_cast<std::size_t>(65536 * guard_scale()); }
inline std::size_t max_group_order() { return static_cast<std::size_t>(24 * guard_scale()); }
inline std::size_t max_hyperspace_points() { return static_cast<std::size_t>(12 * guard_scale()); }
inline std::size_t max_gamma_candidates() { return static_cast<std::size_t>(1000000 * guard_scale()); }
inline std::size_t max_funcspace_points() { return static_cast<std::size_t>(100000 * guard_scale()); }

} // namespace pact::limits
