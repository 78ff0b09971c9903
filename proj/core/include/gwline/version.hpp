#ifndef GWLINE_VERSION_HPP
#define GWLINE_VERSION_HPP

#include <string_view>

namespace gwline {

inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace gwline

#endif
