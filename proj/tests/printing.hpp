#ifndef Z2COH_TESTS_PRINTING_HPP
#define Z2COH_TESTS_PRINTING_HPP

#include <ostream>

#include "z2coh/abelian.hpp"

namespace z2coh {

inline std::ostream& operator<<(std::ostream& os, const FgAbGroup& g)
{
    return os << g.to_string();
}

}   // namespace z2coh

#endif
