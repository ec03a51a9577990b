#ifndef QBAKER_VERSION_HPP
#define QBAKER_VERSION_HPP

namespace qbaker {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
