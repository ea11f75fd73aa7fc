#ifndef RAMSEY_VERSION_HPP
#define RAMSEY_VERSION_HPP

#include <string_view>

namespace ramsey {

inline constexpr std::string_view kVersion = "0.1.0";

}

#endif
