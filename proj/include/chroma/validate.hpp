#ifndef CHROMA_VALIDATE_HPP
#define CHROMA_VALIDATE_HPP

// Internal invariant checks, on by default (CMake option CHROMA_VALIDATE).
// Checks whose cost would change the asymptotics of an operation are gated
// to small inputs; properness checks are linear and always run when enabled.

#ifdef CHROMA_VALIDATE

#include <stdexcept>

#define CHROMA_CHECK_PROPER(w, f)                                            \
    do {                                                                     \
        if (!::chroma::proper_on((w), (f)))                                  \
            throw std::logic_error("internal error: improper coloring");     \
    } while (0)

#define CHROMA_CHECK(cond, msg)                                              \
    do {                                                                     \
        if (!(cond))                                                         \
            throw std::logic_error(std::string("internal error: ") + (msg)); \
    } while (0)

#else

#define CHROMA_CHECK_PROPER(w, f) ((void)0)
#define CHROMA_CHECK(cond, msg) ((void)0)

#endif

#endif
