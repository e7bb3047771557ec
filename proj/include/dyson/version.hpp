#ifndef DYSON_VERSION_HPP
#define DYSON_VERSION_HPP

namespace dyson {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
