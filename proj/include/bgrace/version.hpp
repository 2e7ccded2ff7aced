#ifndef BGRACE_VERSION_HPP
#define BGRACE_VERSION_HPP

namespace bgrace {

inline constexpr const char* version_string = "1.0.0";

}  // namespace bgrace

#endif  // BGRACE_VERSION_HPP
